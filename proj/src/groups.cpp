#include "lplab/groups.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "lplab/common.hpp"

namespace lplab {
namespace {

std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidArgument("malformed integer '" + std::string(s) + "' in " + std::string(what));
  return v;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::vector<std::int64_t> reduce_word(std::vector<std::int64_t> w) {
  std::vector<std::int64_t> out;
  out.reserve(w.size());
  for (auto l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

// "label" or "label^k"
std::pair<std::string, std::int64_t> split_power(std::string_view tok, std::string_view what) {
  const auto caret = tok.find('^');
  if (caret == std::string_view::npos) return {trim(tok), 1};
  return {trim(tok.substr(0, caret)), parse_int(trim(tok.substr(caret + 1)), what)};
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

std::string power_text(const std::string& label, std::int64_t k) {
  if (k == 1) return label;
  return label + "^" + std::to_string(k);
}

}  // namespace

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ e.c.size();
  for (auto v : e.c) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {
std::atomic<std::size_t> ball_cap_override{0};
}

void set_ball_cap_override(std::size_t cap) { ball_cap_override.store(cap); }

std::size_t default_ball_cap() {
  if (const auto v = ball_cap_override.load()) return v;
  if (const char* env = std::getenv("LAB_MAX_BALL")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 200000;
}

GroupSpec GroupSpec::parse(std::string_view text) {
  const std::string t = trim(text);
  if (t == "trivial") return {GroupKind::trivial, 0};
  if (t == "Z") return {GroupKind::lattice, 1};
  if (t == "dihedral-inf") return {GroupKind::infinite_dihedral, 0};
  if (t == "heisenberg") return {GroupKind::heisenberg, 0};
  if (t == "S3") return {GroupKind::symmetric3, 0};
  auto param = [&](std::string_view prefix, GroupKind kind) -> std::optional<GroupSpec> {
    if (t.rfind(prefix, 0) != 0) return std::nullopt;
    const auto v = parse_int(std::string_view(t).substr(prefix.size()), "group spec");
    if (v < 1) throw InvalidArgument("group parameter must be >= 1 in '" + t + "'");
    return GroupSpec{kind, v};
  };
  if (auto s = param("cyclic:", GroupKind::cyclic)) return *s;
  if (auto s = param("Z^", GroupKind::lattice)) return *s;
  if (auto s = param("free:", GroupKind::free_group)) return *s;
  throw InvalidArgument("unknown group '" + t + "'");
}

std::string GroupSpec::name() const {
  switch (kind) {
    case GroupKind::trivial: return "trivial";
    case GroupKind::cyclic: return "cyclic:" + std::to_string(param);
    case GroupKind::lattice: return param == 1 ? "Z" : "Z^" + std::to_string(param);
    case GroupKind::free_group: return "free:" + std::to_string(param);
    case GroupKind::infinite_dihedral: return "dihedral-inf";
    case GroupKind::heisenberg: return "heisenberg";
    case GroupKind::symmetric3: return "S3";
  }
  return "?";
}

std::shared_ptr<const Group> Group::make(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::cyclic:
    case GroupKind::lattice:
    case GroupKind::free_group:
      if (spec.param < 1)
        throw InvalidArgument("group parameter must be >= 1, got " + std::to_string(spec.param));
      break;
    default: break;
  }
  if (spec.kind == GroupKind::lattice && spec.param > 16)
    throw InvalidArgument("lattice rank above 16 is not supported");
  return std::shared_ptr<const Group>(new Group(spec));
}

Group::Group(const GroupSpec& spec) : spec_(spec) {
  const auto n = spec.param;
  switch (spec.kind) {
    case GroupKind::trivial:
      generators_ = {Element{}};
      labels_ = {"1"};
      break;
    case GroupKind::cyclic:
      generators_ = {Element{{n == 1 ? 0 : 1}}};
      labels_ = {"t"};
      break;
    case GroupKind::lattice:
      for (std::int64_t i = 0; i < n; ++i) {
        Element e{std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)};
        e.c[static_cast<std::size_t>(i)] = 1;
        generators_.push_back(e);
        labels_.push_back(n == 1 ? "t" : "t" + std::to_string(i + 1));
      }
      break;
    case GroupKind::free_group: {
      static const char* letters[] = {"x", "y", "z", "w"};
      for (std::int64_t i = 0; i < n; ++i) {
        generators_.push_back(Element{{i + 1}});
        labels_.push_back(n <= 4 ? letters[i] : "x" + std::to_string(i + 1));
      }
      break;
    }
    case GroupKind::infinite_dihedral:
      generators_ = {Element{{1, 0}}, Element{{0, 1}}};
      labels_ = {"r", "s"};
      break;
    case GroupKind::heisenberg:
      generators_ = {Element{{1, 0, 0}}, Element{{0, 1, 0}}};
      labels_ = {"x", "y"};
      break;
    case GroupKind::symmetric3:
      generators_ = {Element{{1, 2, 0}}, Element{{1, 0, 2}}};
      labels_ = {"r", "s"};
      break;
  }
  std::set<Element> sym;
  for (const auto& g : generators_) {
    sym.insert(g);
    sym.insert(inverse(g));
  }
  symmetric_.assign(sym.begin(), sym.end());
}

Element Group::identity() const {
  switch (spec_.kind) {
    case GroupKind::trivial: return Element{};
    case GroupKind::cyclic: return Element{{0}};
    case GroupKind::lattice:
      return Element{std::vector<std::int64_t>(static_cast<std::size_t>(spec_.param), 0)};
    case GroupKind::free_group: return Element{};
    case GroupKind::infinite_dihedral: return Element{{0, 0}};
    case GroupKind::heisenberg: return Element{{0, 0, 0}};
    case GroupKind::symmetric3: return Element{{0, 1, 2}};
  }
  return Element{};
}

std::optional<std::size_t> Group::order() const {
  switch (spec_.kind) {
    case GroupKind::trivial: return 1;
    case GroupKind::cyclic: return static_cast<std::size_t>(spec_.param);
    case GroupKind::symmetric3: return 6;
    default: return std::nullopt;
  }
}

bool Group::is_abelian() const {
  switch (spec_.kind) {
    case GroupKind::trivial:
    case GroupKind::cyclic:
    case GroupKind::lattice: return true;
    case GroupKind::free_group: return spec_.param == 1;
    default: return false;
  }
}

bool Group::contains(const Element& e) const {
  const auto& c = e.c;
  switch (spec_.kind) {
    case GroupKind::trivial: return c.empty();
    case GroupKind::cyclic: return c.size() == 1 && c[0] >= 0 && c[0] < spec_.param;
    case GroupKind::lattice: return c.size() == static_cast<std::size_t>(spec_.param);
    case GroupKind::free_group:
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0 || std::abs(c[i]) > spec_.param) return false;
        if (i > 0 && c[i] == -c[i - 1]) return false;
      }
      return true;
    case GroupKind::infinite_dihedral: return c.size() == 2 && (c[1] == 0 || c[1] == 1);
    case GroupKind::heisenberg: return c.size() == 3;
    case GroupKind::symmetric3: {
      if (c.size() != 3) return false;
      auto s = c;
      std::sort(s.begin(), s.end());
      return s == std::vector<std::int64_t>{0, 1, 2};
    }
  }
  return false;
}

void Group::require(const Element& e) const {
  if (!contains(e))
    throw InvalidArgument("element is not a normal form of group " + name());
}

Element Group::mul(const Element& a, const Element& b) const {
  require(a);
  require(b);
  const auto& x = a.c;
  const auto& y = b.c;
  switch (spec_.kind) {
    case GroupKind::trivial: return Element{};
    case GroupKind::cyclic: return Element{{mod(x[0] + y[0], spec_.param)}};
    case GroupKind::lattice: {
      Element r = a;
      for (std::size_t i = 0; i < x.size(); ++i) r.c[i] += y[i];
      return r;
    }
    case GroupKind::free_group: {
      std::vector<std::int64_t> w = x;
      w.insert(w.end(), y.begin(), y.end());
      return Element{reduce_word(std::move(w))};
    }
    case GroupKind::infinite_dihedral:
      return Element{{x[0] + (x[1] ? -y[0] : y[0]), (x[1] + y[1]) % 2}};
    case GroupKind::heisenberg:
      return Element{{x[0] + y[0], x[1] + y[1], x[2] + y[2] + x[0] * y[1]}};
    case GroupKind::symmetric3:
      return Element{{x[static_cast<std::size_t>(y[0])], x[static_cast<std::size_t>(y[1])],
                      x[static_cast<std::size_t>(y[2])]}};
  }
  return Element{};
}

Element Group::inverse(const Element& a) const {
  require(a);
  const auto& x = a.c;
  switch (spec_.kind) {
    case GroupKind::trivial: return Element{};
    case GroupKind::cyclic: return Element{{mod(-x[0], spec_.param)}};
    case GroupKind::lattice: {
      Element r = a;
      for (auto& v : r.c) v = -v;
      return r;
    }
    case GroupKind::free_group: {
      Element r;
      r.c.assign(x.rbegin(), x.rend());
      for (auto& v : r.c) v = -v;
      return r;
    }
    case GroupKind::infinite_dihedral: return x[1] ? a : Element{{-x[0], 0}};
    case GroupKind::heisenberg: return Element{{-x[0], -x[1], x[0] * x[1] - x[2]}};
    case GroupKind::symmetric3: {
      Element r{{0, 0, 0}};
      for (std::int64_t i = 0; i < 3; ++i) r.c[static_cast<std::size_t>(x[static_cast<std::size_t>(i)])] = i;
      return r;
    }
  }
  return Element{};
}

Element Group::pow(const Element& a, std::int64_t k) const {
  Element base = k < 0 ? inverse(a) : a;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Element result = identity();
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::size_t Group::word_length(const Element& a) const {
  require(a);
  const auto& x = a.c;
  switch (spec_.kind) {
    case GroupKind::trivial: return 0;
    case GroupKind::cyclic: return static_cast<std::size_t>(std::min(x[0], spec_.param - x[0]));
    case GroupKind::lattice: {
      std::size_t s = 0;
      for (auto v : x) s += static_cast<std::size_t>(std::abs(v));
      return s;
    }
    case GroupKind::free_group: return x.size();
    case GroupKind::infinite_dihedral:
      return static_cast<std::size_t>(std::abs(x[0]) + x[1]);
    default: break;
  }
  // BFS over the Cayley graph.
  if (a == identity()) return 0;
  std::unordered_map<Element, std::size_t, ElementHash> seen{{identity(), 0}};
  std::vector<Element> frontier{identity()};
  const std::size_t cap = default_ball_cap();
  for (std::size_t r = 1;; ++r) {
    std::vector<Element> next;
    for (const auto& g : frontier)
      for (const auto& s : symmetric_) {
        Element h = mul(g, s);
        if (seen.emplace(h, r).second) {
          if (h == a) return r;
          next.push_back(std::move(h));
        }
      }
    if (next.empty()) throw InvalidArgument("element not reachable from generators");
    if (seen.size() > cap)
      throw ResourceCapError("word length search exceeded the ball cap of " + std::to_string(cap));
    frontier = std::move(next);
  }
}

Ball Group::ball(std::size_t radius, std::size_t cap) const {
  Ball b;
  b.radius_ = radius;
  b.elements_.push_back(identity());
  b.index_.emplace(identity(), 0);
  b.layer_starts_.push_back(0);
  std::size_t layer_begin = 0;
  for (std::size_t r = 1; r <= radius; ++r) {
    const std::size_t layer_end = b.elements_.size();
    b.layer_starts_.push_back(layer_end);
    std::set<Element> next;
    for (std::size_t i = layer_begin; i < layer_end; ++i)
      for (const auto& s : symmetric_) {
        Element h = mul(b.elements_[i], s);
        if (!b.index_.count(h)) next.insert(std::move(h));
      }
    if (b.elements_.size() + next.size() > cap)
      throw ResourceCapError("ball of radius " + std::to_string(radius) + " in " + name() +
                             " exceeds the cap of " + std::to_string(cap) + " elements");
    if (next.empty()) {
      b.layer_starts_.pop_back();
      break;  // finite group exhausted
    }
    for (const auto& h : next) {
      b.index_.emplace(h, b.elements_.size());
      b.elements_.push_back(h);
    }
    layer_begin = layer_end;
  }
  b.layer_starts_.push_back(b.elements_.size());
  return b;
}

std::size_t Ball::layer_of(std::size_t i) const {
  auto it = std::upper_bound(layer_starts_.begin(), layer_starts_.end() - 1, i);
  return static_cast<std::size_t>(it - layer_starts_.begin()) - 1;
}

std::string Group::format(const Element& e) const {
  require(e);
  const auto& x = e.c;
  if (e == identity()) return "1";
  switch (spec_.kind) {
    case GroupKind::trivial: return "1";
    case GroupKind::cyclic: return power_text("t", x[0]);
    case GroupKind::lattice: {
      if (spec_.param == 1) return power_text("t", x[0]);
      std::string s = "(";
      for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
      return s + ")";
    }
    case GroupKind::free_group: {
      std::string s;
      for (std::size_t i = 0; i < x.size();) {
        std::size_t j = i;
        while (j < x.size() && x[j] == x[i]) ++j;
        const auto len = static_cast<std::int64_t>(j - i);
        if (!s.empty()) s += "*";
        s += power_text(labels_[static_cast<std::size_t>(std::abs(x[i]) - 1)], x[i] > 0 ? len : -len);
        i = j;
      }
      return s;
    }
    case GroupKind::infinite_dihedral: {
      std::string s = x[0] != 0 ? power_text("r", x[0]) : "";
      if (x[1]) s += s.empty() ? "s" : "*s";
      return s;
    }
    case GroupKind::heisenberg:
      return "(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + ")";
    case GroupKind::symmetric3: {
      std::string s;
      std::vector<bool> done(3, false);
      for (std::int64_t i = 0; i < 3; ++i) {
        if (done[static_cast<std::size_t>(i)] || x[static_cast<std::size_t>(i)] == i) continue;
        s += "(";
        std::int64_t j = i;
        bool first = true;
        while (!done[static_cast<std::size_t>(j)]) {
          done[static_cast<std::size_t>(j)] = true;
          s += (first ? "" : " ") + std::to_string(j + 1);
          first = false;
          j = x[static_cast<std::size_t>(j)];
        }
        s += ")";
      }
      return s;
    }
  }
  return "?";
}

Element Group::parse(std::string_view text) const {
  const std::string t = trim(text);
  if (t == "1" || t == "e" || t.empty()) return identity();
  const std::string what = "element of " + name();
  auto tuple = [&]() {
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
      throw InvalidArgument("expected a coordinate tuple for " + what + ", got '" + t + "'");
    Element e;
    for (const auto& part : split(std::string_view(t).substr(1, t.size() - 2), ','))
      e.c.push_back(parse_int(part, what));
    return e;
  };
  // Product of label^k factors separated by '*'.
  auto word = [&]() {
    Element acc = identity();
    for (const auto& tok : split(t, '*')) {
      auto [label, k] = split_power(tok, what);
      auto it = std::find(labels_.begin(), labels_.end(), label);
      if (it == labels_.end())
        throw InvalidArgument("unknown generator '" + label + "' for " + name());
      acc = mul(acc, pow(generators_[static_cast<std::size_t>(it - labels_.begin())], k));
    }
    return acc;
  };
  Element e;
  switch (spec_.kind) {
    case GroupKind::lattice:
      e = (spec_.param == 1 || t.front() != '(') ? word() : tuple();
      break;
    case GroupKind::heisenberg:
      e = t.front() == '(' ? tuple() : word();
      break;
    case GroupKind::symmetric3: {
      if (t == "()") return identity();
      if (t.front() != '(') {
        e = word();
        break;
      }
      // Product of cycles, composed right to left as functions.
      e = identity();
      std::size_t pos = 0;
      while (pos < t.size()) {
        const auto close = t.find(')', pos);
        if (t[pos] != '(' || close == std::string::npos)
          throw InvalidArgument("malformed cycle notation '" + t + "'");
        std::vector<std::int64_t> pts;
        std::istringstream in(t.substr(pos + 1, close - pos - 1));
        std::int64_t v;
        while (in >> v) {
          if (v < 1 || v > 3) throw InvalidArgument("cycle point out of range in '" + t + "'");
          pts.push_back(v - 1);
        }
        Element cyc = identity();
        for (std::size_t i = 0; i < pts.size(); ++i)
          cyc.c[static_cast<std::size_t>(pts[i])] = pts[(i + 1) % pts.size()];
        if (!contains(cyc)) throw InvalidArgument("malformed cycle '" + t + "'");
        e = mul(e, cyc);
        pos = close + 1;
      }
      break;
    }
    default:
      e = word();
      break;
  }
  require(e);
  return e;
}

}  // namespace lplab
