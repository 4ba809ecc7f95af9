#include "lplab/common.hpp"

#include <cstdio>

namespace lplab {

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_compact_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return to_fraction_string(r);
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  if (s.empty()) throw InvalidArgument("empty rational");
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0)
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace lplab
