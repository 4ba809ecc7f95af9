#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lplab/group_ring.hpp"

namespace lplab {

// rows x cols matrix over Q[G], row-major.
class RingMatrix {
 public:
  RingMatrix(GroupPtr group, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const GroupPtr& group() const { return group_; }

  RingElement& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const RingElement& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool is_zero() const;
  // Largest word length appearing in any entry.
  std::size_t max_word_length() const;

 private:
  GroupPtr group_;
  std::size_t rows_, cols_;
  std::vector<RingElement> entries_;
};

// Boundary matrices act on free left modules: a basis vector e_c of F_i maps
// to sum_r M(r, c) e_r, so the composite F_{i+1} -> F_{i-1} has entries
// sum_r upper(r, c) * lower(s, r).
RingMatrix compose(const RingMatrix& lower, const RingMatrix& upper);

// Letters are +-(g+1) for generator index g.
using Word = std::vector<int>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

// Parses "x*y*x^-1*y^-1" against the given generator labels.
Word parse_word(const std::vector<std::string>& labels, std::string_view text);
std::string format_word(const std::vector<std::string>& labels, const Word& w);

// Value of a word in the group; generator g of the word is generator g of the group.
Element evaluate_word(const Group& group, const Word& w);

// Fox derivative dw/dx_gen.
RingElement fox_derivative(const GroupPtr& group, const Word& w, std::size_t gen);

// Presentation used by "fox:<group>"; throws for groups without one.
Presentation catalog_presentation(const Group& group);

struct Resolution {
  GroupPtr group;
  std::string name;
  std::vector<std::size_t> ranks;       // m_0 .. m_N
  std::vector<RingMatrix> boundaries;   // boundaries[i-1] is d_i, m_{i-1} x m_i
  std::optional<Presentation> presentation;

  std::size_t length() const { return boundaries.size(); }
  const RingMatrix& boundary(std::size_t i) const;
};

// 0 -> Z[Z] --(t-1)--> Z[Z] -> Z -> 0
Resolution cyclic_infinite_resolution();
// Periodic resolution of C_n: d_odd = t - 1, d_even = 1 + t + ... + t^{n-1}.
Resolution periodic_cyclic_resolution(int n, int length);
// Length-2 partial resolution with d_1 = (x_j - 1), d_2(j, i) = dr_i/dx_j.
Resolution fox_partial_resolution(const GroupPtr& group, const Presentation& presentation);
// Koszul resolution of Z^d, e_S -> sum_{j in S} (-1)^{#{i in S: i<j}} (t_j - 1) e_{S\j}.
Resolution lattice_resolution(int d);

// "cyclic-inf", "cyclic:n:N", "fox:<group>", "lattice:d"
Resolution make_resolution(std::string_view name);
// Every name accepted by make_resolution that the catalog lists.
std::vector<std::string> catalog_resolution_names();

// Equivariant slice of the degree-n homogeneous bar module: tuples
// (1, x_1, ..., x_n) with x_i in ball(radius). Only x_1..x_n are stored.
struct BarBasis {
  GroupPtr group;
  std::size_t degree = 0;
  std::size_t radius = 0;
  std::vector<std::vector<Element>> tuples;
};

constexpr std::size_t kMaxBarDegree = 3;

BarBasis bar_resolution_spaces(const GroupPtr& group, std::size_t degree, std::size_t radius,
                               std::size_t cap = default_ball_cap());

// "bar:<group>:<degree>:<radius>"
struct BarSpec {
  GroupSpec group;
  std::size_t degree = 0;
  std::size_t radius = 0;
};
BarSpec parse_bar_name(std::string_view name);

struct ValidationFailure {
  std::string check;     // "augmentation", "composition", "fox-identity"
  std::size_t i = 0;     // composition d_i o d_{i+1}, or relator index
  std::size_t row = 0;
  std::size_t col = 0;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;
  std::size_t checks = 0;
  bool ok() const { return failures.empty(); }
};

ValidationReport validate(const Resolution& res);

// sum_j (dr/dx_j)(x_j - 1) - (r - 1) for each relator; all zero when the
// fundamental identity holds.
std::vector<RingElement> fox_identity_defects(const GroupPtr& group, const Presentation& p);

}  // namespace lplab
