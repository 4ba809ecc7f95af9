#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lplab {

enum class GroupKind {
  trivial,
  cyclic,             // C_n, param = n
  lattice,            // Z^d, param = d
  free_group,         // F_k, param = k
  infinite_dihedral,  // <r, s | s^2, (sr)^2>
  heisenberg,         // integer upper unitriangular 3x3 matrices
  symmetric3,
};

struct GroupSpec {
  GroupKind kind = GroupKind::trivial;
  std::int64_t param = 0;

  // Accepts "trivial", "cyclic:4", "Z", "Z^2", "free:2", "dihedral-inf",
  // "heisenberg", "S3".
  static GroupSpec parse(std::string_view text);
  std::string name() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Normal form coordinates; the meaning depends on the owning group:
//   cyclic        {e}, 0 <= e < n
//   lattice       {a_1, ..., a_d}
//   free group    reduced word, letters +-(g+1)
//   dihedral      {a, f} for r^a s^f, f in {0, 1}
//   heisenberg    {a, b, c}, (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')
//   S3            {p(0), p(1), p(2)}, product (pq)(i) = p(q(i))
//   trivial       {}
// Ordering is lexicographic on the coordinate vector.
struct Element {
  std::vector<std::int64_t> c;

  auto operator<=>(const Element&) const = default;
  bool operator==(const Element&) const = default;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

std::size_t default_ball_cap();  // 200000 unless LAB_MAX_BALL is set
// Process-wide cap taking precedence over LAB_MAX_BALL; 0 clears it.
void set_ball_cap_override(std::size_t cap);

class Ball;

class Group {
 public:
  static std::shared_ptr<const Group> make(const GroupSpec& spec);
  static std::shared_ptr<const Group> make(std::string_view spec_text) {
    return make(GroupSpec::parse(spec_text));
  }

  const GroupSpec& spec() const { return spec_; }
  std::string name() const { return spec_.name(); }
  bool same_as(const Group& other) const { return spec_ == other.spec_; }

  Element identity() const;
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<std::string>& generator_labels() const { return labels_; }
  // Generators together with their inverses, deduplicated, sorted.
  const std::vector<Element>& symmetric_generators() const { return symmetric_; }

  std::optional<std::size_t> order() const;
  bool is_abelian() const;

  // True iff e is a well-formed normal form for this group.
  bool contains(const Element& e) const;

  Element mul(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  Element pow(const Element& a, std::int64_t k) const;
  Element conjugate(const Element& g, const Element& by) const {  // by g by^-1
    return mul(mul(by, g), inverse(by));
  }

  std::size_t word_length(const Element& a) const;

  std::string format(const Element& e) const;
  Element parse(std::string_view text) const;

  // All elements of word length <= radius, ordered by BFS layer and then
  // lexicographically within a layer.
  Ball ball(std::size_t radius, std::size_t cap = default_ball_cap()) const;

 private:
  explicit Group(const GroupSpec& spec);
  void require(const Element& e) const;

  GroupSpec spec_;
  std::vector<Element> generators_;
  std::vector<std::string> labels_;
  std::vector<Element> symmetric_;
};

using GroupPtr = std::shared_ptr<const Group>;

class Ball {
 public:
  Ball() = default;

  std::size_t radius() const { return radius_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Element>& elements() const& { return elements_; }
  std::vector<Element> elements() && { return std::move(elements_); }
  const Element& operator[](std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const Element& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Element& e) const { return index_.count(e) != 0; }

  // Word length of the i-th element.
  std::size_t layer_of(std::size_t i) const;
  // First index of each nonempty layer, followed by size() as a sentinel.
  const std::vector<std::size_t>& layer_starts() const { return layer_starts_; }

 private:
  friend class Group;
  std::size_t radius_ = 0;
  std::vector<Element> elements_;
  std::vector<std::size_t> layer_starts_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
};

}  // namespace lplab
