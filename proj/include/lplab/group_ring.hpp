#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lplab/common.hpp"
#include "lplab/groups.hpp"

namespace lplab {

// Finitely supported element of Q[G]. Zero coefficients are never stored.
class RingElement {
 public:
  explicit RingElement(GroupPtr group) : group_(std::move(group)) {}
  RingElement(GroupPtr group, const Element& g, Rational coefficient = 1);

  static RingElement zero(GroupPtr group) { return RingElement(std::move(group)); }
  static RingElement one(GroupPtr group) {
    auto e = group->identity();
    return RingElement(std::move(group), e);
  }

  const GroupPtr& group() const { return group_; }
  const std::map<Element, Rational>& terms() const { return terms_; }
  Rational coefficient(const Element& g) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  // Largest word length over the support (0 for the zero element).
  std::size_t max_word_length() const;
  // Largest absolute coefficient (0 for the zero element).
  Rational max_abs_coefficient() const;

  // Adds c*g in place.
  void add_term(const Element& g, const Rational& c);

  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const Rational& lambda);

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator-(RingElement a) { return a *= Rational(-1); }
  friend RingElement operator*(RingElement a, const Rational& l) { return a *= l; }
  friend RingElement operator*(const Rational& l, RingElement a) { return a *= l; }
  // Convolution product.
  friend RingElement operator*(const RingElement& a, const RingElement& b);

  // g * u and u * g for a group element g.
  RingElement left_translate(const Element& g) const;
  RingElement right_translate(const Element& g) const;

  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  void require_same_group(const RingElement& other) const;

  GroupPtr group_;
  std::map<Element, Rational> terms_;
};

inline RingElement add(const RingElement& u, const RingElement& v) { return u + v; }
inline RingElement scale(const RingElement& u, const Rational& lambda) { return u * lambda; }
inline RingElement convolve(const RingElement& u, const RingElement& v) { return u * v; }

// Sum of coefficients.
Rational augment(const RingElement& u);

// u commutes with every generator.
bool is_central(const RingElement& u);

struct ConjugacyClass {
  std::vector<Element> members;  // sorted; empty when exceeds_cap
  bool exceeds_cap = false;
};

// Orbit of g under conjugation by the generators, closed under the action.
ConjugacyClass conjugacy_class(const Group& group, const Element& g, std::size_t cap);

// Sum of the conjugacy class of g. Throws InvalidArgument when the class
// exceeds cap.
RingElement class_sum(const GroupPtr& group, const Element& g, std::size_t cap);

// Text form "3*t^2 + -1*t^-1"; "0" for the zero element.
std::string format(const RingElement& u);
RingElement parse_ring_element(const GroupPtr& group, std::string_view text);

}  // namespace lplab
