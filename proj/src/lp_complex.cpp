#include "lplab/lp_complex.hpp"

#include <cmath>

#include "lplab/csv.hpp"
#include "lplab/kernels.hpp"

namespace lplab {
namespace {

std::span<const double> block(const Eigen::VectorXd& v, std::size_t offset, std::size_t n) {
  return {v.data() + offset, n};
}

kernels::ConvolutionStencil stencil_of(const RingMatrix& m) {
  kernels::ConvolutionStencil s{m.rows(), m.cols(), {}};
  s.entries.resize(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (const auto& [g, coef] : m.at(r, c).terms())
        s.entries[r * m.cols() + c].push_back({g, coef.get_d()});
  return s;
}

void require_exponent(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw InvalidArgument("p must exceed 1");
}

}  // namespace

TruncatedSpace TruncatedSpace::make(GroupPtr group, std::size_t rank, std::size_t radius, double p,
                                    std::size_t cap) {
  require_exponent(p);
  auto ball = std::make_shared<const Ball>(group->ball(radius, cap));
  return TruncatedSpace{std::move(group), rank, radius, p, std::move(ball)};
}

std::optional<std::size_t> TruncatedSpace::index_of(std::size_t copy, const Element& g) const {
  if (copy >= rank) return std::nullopt;
  const auto i = ball->index_of(g);
  if (!i) return std::nullopt;
  return index(copy, *i);
}

bool TruncatedSpace::same_shape(const TruncatedSpace& other) const {
  return group->same_as(*other.group) && rank == other.rank && ball->size() == other.ball->size() &&
         p == other.p;
}

template <VectorRole Role>
LpVector<Role>::LpVector(TruncatedSpace space, Eigen::VectorXd coefficients)
    : space_(std::move(space)), coeffs_(std::move(coefficients)) {
  if (static_cast<std::size_t>(coeffs_.size()) != space_.dim())
    throw InvalidArgument("coefficient vector has " + std::to_string(coeffs_.size()) +
                          " entries, space has dimension " + std::to_string(space_.dim()));
  if (!coeffs_.allFinite()) throw InvalidArgument("coefficients must be finite");
}

template <VectorRole Role>
double LpVector<Role>::at(std::size_t copy, const Element& g) const {
  const auto i = space_.index_of(copy, g);
  return i ? coeffs_[static_cast<Eigen::Index>(*i)] : 0.0;
}

template class LpVector<VectorRole::chain>;
template class LpVector<VectorRole::cochain>;

BoundaryOperator assemble_boundary(const Resolution& res, std::size_t i, std::size_t radius, double p,
                                   Exec exec) {
  const RingMatrix& d = res.boundary(i);
  const std::size_t w = d.max_word_length();
  auto domain = TruncatedSpace::make(res.group, res.ranks[i], radius, p);
  auto codomain = TruncatedSpace::make(res.group, res.ranks[i - 1], radius + w, p);
  if (domain.dim() != 0 && codomain.dim() > kMaxOperatorEntries / domain.dim())
    throw ResourceCapError("boundary d_" + std::to_string(i) + " at R=" + std::to_string(radius) +
                           " would have " + std::to_string(codomain.dim()) + "x" +
                           std::to_string(domain.dim()) + " entries");
  Eigen::MatrixXd M =
      kernels::assemble_convolution(*res.group, stencil_of(d), *domain.ball, *codomain.ball, exec);
  return BoundaryOperator{res.name, i, false, std::move(domain), std::move(codomain), std::move(M)};
}

BoundaryOperator dual_of(const BoundaryOperator& op) {
  return BoundaryOperator{op.resolution, op.degree, !op.dual, op.codomain, op.domain, op.matrix.transpose()};
}

BoundaryOperator dual_boundary(const Resolution& res, std::size_t i, std::size_t radius, double p, Exec exec) {
  return dual_of(assemble_boundary(res, i, radius, p, exec));
}

ChainVector apply(const BoundaryOperator& op, const ChainVector& x) {
  if (op.dual) throw InvalidArgument("chain vectors take the primal boundary");
  if (!op.domain.same_shape(x.space())) throw InvalidArgument("chain does not live on the operator domain");
  return ChainVector(op.codomain, op.matrix * x.coefficients());
}

CochainVector apply(const BoundaryOperator& dual, const CochainVector& y) {
  if (!dual.dual) throw InvalidArgument("cochain vectors take the dual boundary");
  if (!dual.domain.same_shape(y.space())) throw InvalidArgument("cochain does not live on the operator domain");
  return CochainVector(dual.codomain, dual.matrix * y.coefficients());
}

template <VectorRole Role>
double norm(const LpVector<Role>& v, Exec exec) {
  const double e = v.exponent();
  const auto& c = v.coefficients();
  const double s = kernels::power_sum({c.data(), static_cast<std::size_t>(c.size())}, e, exec);
  return std::pow(s, 1.0 / e);
}

template double norm(const ChainVector&, Exec);
template double norm(const CochainVector&, Exec);

double pairing(const CochainVector& y, const ChainVector& x, Exec exec) {
  const auto& ys = y.space();
  const auto& xs = x.space();
  if (!ys.group->same_as(*xs.group)) throw InvalidArgument("pairing across different groups");
  if (ys.rank != xs.rank)
    throw InvalidArgument("rank mismatch in pairing: " + std::to_string(ys.rank) + " vs " +
                          std::to_string(xs.rank));
  if (std::abs(1.0 / ys.q() + 1.0 / xs.p - 1.0) > 1e-12)
    throw InvalidArgument("pairing needs conjugate exponents");
  // Balls are nested prefixes of each other, so copies align on the shorter one.
  const std::size_t common = std::min(ys.ball->size(), xs.ball->size());
  double s = 0.0;
  for (std::size_t j = 0; j < xs.rank; ++j)
    s += kernels::dot(block(y.coefficients(), ys.index(j, 0), common),
                      block(x.coefficients(), xs.index(j, 0), common), exec);
  return s;
}

ChainVector translate(const ChainVector& x, const Element& g) {
  RingElement u(x.space().group, g);
  return translate_ring(x, u);
}

ChainVector translate_ring(const ChainVector& x, const RingElement& u) {
  const auto& src = x.space();
  if (!u.group()->same_as(*src.group)) throw InvalidArgument("translation by an element of another group");
  auto dst = TruncatedSpace::make(src.group, src.rank, src.radius + u.max_word_length(), src.p);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dst.dim()));
  const auto& ball = *src.ball;
  for (const auto& [g, lambda] : u.terms()) {
    const double l = lambda.get_d();
    for (std::size_t i = 0; i < ball.size(); ++i) {
      const auto k = dst.ball->index_of(src.group->mul(g, ball[i]));
      if (!k) throw InvariantViolation("translated support escaped the enlarged ball");
      for (std::size_t j = 0; j < src.rank; ++j)
        out[static_cast<Eigen::Index>(dst.index(j, *k))] += l * x.coefficients()[static_cast<Eigen::Index>(src.index(j, i))];
    }
  }
  return ChainVector(std::move(dst), std::move(out));
}

double annihilator_residual(const Eigen::MatrixXd& T, const Eigen::MatrixXd& dual) {
  if (dual.cols() != T.rows()) throw InvalidArgument("dual must act on the codomain of T");
  constexpr double kRelTol = 1e-10;

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(T);
  qr.setThreshold(kRelTol);
  const auto rank_t = qr.rank();
  const Eigen::MatrixXd image = Eigen::MatrixXd(qr.householderQ()).leftCols(rank_t);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(dual, Eigen::ComputeFullV);
  svd.setThreshold(kRelTol);
  const auto rank_d = svd.rank();
  const Eigen::MatrixXd kernel = svd.matrixV().rightCols(dual.cols() - rank_d);

  if (image.cols() == 0 || kernel.cols() == 0) return 0.0;
  return (kernel.transpose() * image).cwiseAbs().maxCoeff();
}

double annihilator_residual(const Resolution& res, std::size_t i, std::size_t radius) {
  const auto op = assemble_boundary(res, i, radius);
  const auto dual = dual_of(op);
  return annihilator_residual(op.matrix, dual.matrix);
}

void write_matrix_coo(std::ostream& out, const BoundaryOperator& op) {
  out << "# group=" << op.domain.group->name() << " resolution=" << op.resolution << " i=" << op.degree
      << " R=" << (op.dual ? op.codomain.radius : op.domain.radius) << " dual=" << (op.dual ? 1 : 0)
      << " rows=" << op.matrix.rows() << " cols=" << op.matrix.cols() << "\n";
  for (Eigen::Index c = 0; c < op.matrix.cols(); ++c)
    for (Eigen::Index r = 0; r < op.matrix.rows(); ++r)
      if (op.matrix(r, c) != 0.0) out << r << " " << c << " " << format_double(op.matrix(r, c)) << "\n";
}

template <VectorRole Role>
void write_vector_csv(std::ostream& out, const LpVector<Role>& v) {
  const auto& s = v.space();
  write_csv_row(out, {"copy", "element", "value"});
  for (std::size_t j = 0; j < s.rank; ++j)
    for (std::size_t i = 0; i < s.ball->size(); ++i)
      write_csv_row(out, {std::to_string(j), s.group->format((*s.ball)[i]),
                          format_double(v.coefficients()[static_cast<Eigen::Index>(s.index(j, i))])});
}

template void write_vector_csv(std::ostream&, const ChainVector&);
template void write_vector_csv(std::ostream&, const CochainVector&);

}  // namespace lplab
