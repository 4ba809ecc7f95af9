#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lplab {

using Rational = mpq_class;

// Kernel dispatch. Every data-parallel kernel keeps a serial reference path.
enum class Exec { serial, parallel };

// "num/den", denominator always present ("0/1", "-3/2").
std::string to_fraction_string(const Rational& r);

// Compact form used in ring-element text: "3", "-3/2".
std::string to_compact_string(const Rational& r);

Rational parse_rational(std::string_view text);

// %.17g, with negative zero printed as "0".
std::string format_double(double v);

// A precondition or configuration value is out of range.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed a configured size cap (ball size, matrix size).
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A checked mathematical invariant failed at run time.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Seeded generator with portable draws. std::*_distribution output differs
// across standard libraries, so draws are derived from the raw mt19937_64
// stream directly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  // Uniform in [lo, hi).
  double uniform_real(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lplab
