#include "lplab/group_ring.hpp"

#include <algorithm>
#include <set>

namespace lplab {

RingElement::RingElement(GroupPtr group, const Element& g, Rational coefficient)
    : group_(std::move(group)) {
  if (!group_->contains(g)) throw InvalidArgument("element does not belong to " + group_->name());
  if (coefficient != 0) terms_.emplace(g, std::move(coefficient));
}

Rational RingElement::coefficient(const Element& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t RingElement::max_word_length() const {
  std::size_t w = 0;
  for (const auto& [g, c] : terms_) w = std::max(w, group_->word_length(g));
  return w;
}

Rational RingElement::max_abs_coefficient() const {
  Rational m = 0;
  for (const auto& [g, c] : terms_) {
    Rational a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

void RingElement::require_same_group(const RingElement& other) const {
  if (!group_->same_as(*other.group_))
    throw InvalidArgument("ring elements belong to different groups (" + group_->name() + ", " +
                          other.group_->name() + ")");
}

void RingElement::add_term(const Element& g, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElement& RingElement::operator+=(const RingElement& other) {
  require_same_group(other);
  for (const auto& [g, c] : other.terms_) add_term(g, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  require_same_group(other);
  for (const auto& [g, c] : other.terms_) add_term(g, -c);
  return *this;
}

RingElement& RingElement::operator*=(const Rational& lambda) {
  if (lambda == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, c] : terms_) c *= lambda;
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  a.require_same_group(b);
  RingElement out(a.group_);
  for (const auto& [g, x] : a.terms_)
    for (const auto& [h, y] : b.terms_) out.add_term(a.group_->mul(g, h), x * y);
  return out;
}

RingElement RingElement::left_translate(const Element& g) const {
  RingElement out(group_);
  for (const auto& [h, c] : terms_) out.terms_.emplace(group_->mul(g, h), c);
  return out;
}

RingElement RingElement::right_translate(const Element& g) const {
  RingElement out(group_);
  for (const auto& [h, c] : terms_) out.terms_.emplace(group_->mul(h, g), c);
  return out;
}

bool operator==(const RingElement& a, const RingElement& b) {
  return a.group_->same_as(*b.group_) && a.terms_ == b.terms_;
}

Rational augment(const RingElement& u) {
  Rational s = 0;
  for (const auto& [g, c] : u.terms()) s += c;
  return s;
}

bool is_central(const RingElement& u) {
  const auto& G = u.group();
  for (const auto& g : G->generators()) {
    if (u.left_translate(g) != u.right_translate(g)) return false;
  }
  return true;
}

ConjugacyClass conjugacy_class(const Group& group, const Element& g, std::size_t cap) {
  if (cap < 1) throw InvalidArgument("conjugacy class cap must be >= 1");
  std::set<Element> orbit{g};
  std::vector<Element> frontier{g};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& x : frontier)
      for (const auto& s : group.symmetric_generators()) {
        Element y = group.conjugate(x, s);
        if (orbit.insert(y).second) {
          if (orbit.size() > cap) return {{}, true};
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return {std::vector<Element>(orbit.begin(), orbit.end()), false};
}

RingElement class_sum(const GroupPtr& group, const Element& g, std::size_t cap) {
  const auto k = conjugacy_class(*group, g, cap);
  if (k.exceeds_cap)
    throw InvalidArgument("not a finite conjugacy class at this cap: class of " + group->format(g) +
                          " exceeds " + std::to_string(cap) + " elements");
  RingElement sum(group);
  for (const auto& x : k.members) sum.add_term(x, 1);
  return sum;
}

std::string format(const RingElement& u) {
  if (u.is_zero()) return "0";
  std::string s;
  for (const auto& [g, c] : u.terms()) {
    if (!s.empty()) s += " + ";
    s += to_compact_string(c) + "*" + u.group()->format(g);
  }
  return s;
}

RingElement parse_ring_element(const GroupPtr& group, std::string_view text) {
  RingElement u(group);
  // Split on '+' outside parentheses.
  std::vector<std::string> terms;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '+' && depth == 0 && !cur.empty() && cur.find_first_not_of(' ') != std::string::npos &&
        cur.back() != '^' && cur.back() != '*') {
      terms.push_back(cur);
      cur.clear();
      continue;
    }
    cur += ch;
  }
  terms.push_back(cur);
  for (auto& t : terms) {
    const auto b = t.find_first_not_of(' ');
    if (b == std::string::npos) throw InvalidArgument("empty term in ring element '" + std::string(text) + "'");
    t = t.substr(b, t.find_last_not_of(' ') - b + 1);
    if (t == "0" && terms.size() == 1) return u;
    const auto star = t.find('*');
    if (star == std::string::npos) {
      // A bare number is a multiple of the identity; a bare element has coefficient 1 or -1.
      if (t.find_first_not_of("-0123456789/") == std::string::npos && t != "-") {
        u.add_term(group->identity(), parse_rational(t));
      } else if (t[0] == '-') {
        u.add_term(group->parse(t.substr(1)), -1);
      } else {
        u.add_term(group->parse(t), 1);
      }
      continue;
    }
    u.add_term(group->parse(t.substr(star + 1)), parse_rational(t.substr(0, star)));
  }
  return u;
}

}  // namespace lplab
