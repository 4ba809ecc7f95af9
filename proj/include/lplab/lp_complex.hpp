#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include <Eigen/Dense>

#include "lplab/common.hpp"
#include "lplab/group_ring.hpp"
#include "lplab/resolutions.hpp"

namespace lplab {

// l^p(G)^rank restricted to ball(radius). Basis index = copy * |ball| + i,
// where i follows the ball ordering. Because ball(R) is a prefix of
// ball(R+1), the first copy-wise block of a smaller space aligns with a
// larger one.
struct TruncatedSpace {
  GroupPtr group;
  std::size_t rank = 0;
  std::size_t radius = 0;
  double p = 2.0;
  std::shared_ptr<const Ball> ball;

  static TruncatedSpace make(GroupPtr group, std::size_t rank, std::size_t radius, double p,
                             std::size_t cap = default_ball_cap());

  double q() const { return p / (p - 1.0); }
  std::size_t dim() const { return rank * ball->size(); }
  std::size_t index(std::size_t copy, std::size_t element_index) const {
    return copy * ball->size() + element_index;
  }
  std::optional<std::size_t> index_of(std::size_t copy, const Element& g) const;
  bool same_shape(const TruncatedSpace& other) const;
};

enum class VectorRole { chain, cochain };

// Coefficient family on a truncated space. Chains are measured with the
// space's p, cochains with the conjugate q.
template <VectorRole Role>
class LpVector {
 public:
  LpVector(TruncatedSpace space, Eigen::VectorXd coefficients);
  static LpVector zero(TruncatedSpace space) {
    const auto n = static_cast<Eigen::Index>(space.dim());
    return LpVector(std::move(space), Eigen::VectorXd::Zero(n));
  }

  const TruncatedSpace& space() const { return space_; }
  const Eigen::VectorXd& coefficients() const { return coeffs_; }
  double exponent() const { return Role == VectorRole::chain ? space_.p : space_.q(); }
  double at(std::size_t copy, const Element& g) const;

 private:
  TruncatedSpace space_;
  Eigen::VectorXd coeffs_;
};

using ChainVector = LpVector<VectorRole::chain>;
using CochainVector = LpVector<VectorRole::cochain>;

extern template class LpVector<VectorRole::chain>;
extern template class LpVector<VectorRole::cochain>;

struct BoundaryOperator {
  std::string resolution;
  std::size_t degree = 0;  // i of d_i
  bool dual = false;
  TruncatedSpace domain;
  TruncatedSpace codomain;
  Eigen::MatrixXd matrix;  // codomain.dim() x domain.dim()
};

// Largest dense operator (rows * cols) assembled before refusing.
inline constexpr std::size_t kMaxOperatorEntries = 50'000'000;

// d_i (x) 1 from (m_i, ball(R)) to (m_{i-1}, ball(R + w)), w the largest
// word length among the entries of d_i.
BoundaryOperator assemble_boundary(const Resolution& res, std::size_t i, std::size_t radius,
                                   double p = 2.0, Exec exec = Exec::parallel);

// phi -> phi o d_i on cochains: the transpose of assemble_boundary.
BoundaryOperator dual_boundary(const Resolution& res, std::size_t i, std::size_t radius,
                               double p = 2.0, Exec exec = Exec::parallel);
BoundaryOperator dual_of(const BoundaryOperator& op);

ChainVector apply(const BoundaryOperator& op, const ChainVector& x);
CochainVector apply(const BoundaryOperator& dual, const CochainVector& y);

template <VectorRole Role>
double norm(const LpVector<Role>& v, Exec exec = Exec::parallel);

// sum_j sum_h zeta_{j,h} xi_{j,h}; entries missing from one side count as 0.
double pairing(const CochainVector& y, const ChainVector& x, Exec exec = Exec::parallel);

// Left translation: xi_{j,h} -> xi_{j,g^-1 h}. The result lives on
// ball(R + |g|).
ChainVector translate(const ChainVector& x, const Element& g);
// sum_g u(g) translate(x, g); result on ball(R + max |g|).
ChainVector translate_ring(const ChainVector& x, const RingElement& u);

// Largest |<k, q>| over orthonormal bases k of ker(dual) and q of im(T).
// Zero up to rounding exactly when dual is the transpose of T.
double annihilator_residual(const Eigen::MatrixXd& T, const Eigen::MatrixXd& dual);
double annihilator_residual(const Resolution& res, std::size_t i, std::size_t radius);

// Coordinate text: "# group=... resolution=... i=... R=... rows=... cols=..."
// then "row col value" for every nonzero, 0-based.
void write_matrix_coo(std::ostream& out, const BoundaryOperator& op);

// CSV "copy,element,value", one row per basis slot.
template <VectorRole Role>
void write_vector_csv(std::ostream& out, const LpVector<Role>& v);

}  // namespace lplab
