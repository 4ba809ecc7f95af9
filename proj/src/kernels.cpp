#include "lplab/kernels.hpp"

#include <cmath>
#include <string>

namespace lplab::kernels {
namespace {

// Both paths sum fixed blocks and then the block totals in order, so the
// result does not depend on the thread count.
template <class BlockFn>
double blocked_sum(std::size_t n, BlockFn&& block, Exec exec) {
  const std::size_t blocks = (n + kReductionBlock - 1) / kReductionBlock;
  std::vector<double> partial(blocks, 0.0);
  const bool parallel = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kReductionBlock;
    const std::size_t hi = std::min(n, lo + kReductionBlock);
    partial[static_cast<std::size_t>(b)] = block(lo, hi);
  }
  double s = 0.0;
  for (double p : partial) s += p;
  return s;
}

}  // namespace

double power_sum(std::span<const double> v, double exponent, Exec exec) {
  auto term = [exponent](double x) { return exponent == 2.0 ? x * x : std::pow(std::abs(x), exponent); };
  return blocked_sum(v.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t k = lo; k < hi; ++k) s += term(v[k]);
    return s;
  }, exec);
}

double dot(std::span<const double> a, std::span<const double> b, Exec exec) {
  const std::size_t n = std::min(a.size(), b.size());
  return blocked_sum(n, [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t k = lo; k < hi; ++k) s += a[k] * b[k];
    return s;
  }, exec);
}

Eigen::MatrixXd assemble_convolution(const Group& group, const ConvolutionStencil& stencil,
                                     const Ball& domain_ball, const Ball& codomain_ball, Exec exec) {
  const std::size_t nd = domain_ball.size();
  const std::size_t nc = codomain_ball.size();
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(stencil.rows * nc),
                                            static_cast<Eigen::Index>(stencil.cols * nd));
  const auto total = static_cast<std::ptrdiff_t>(stencil.cols * nd);
  bool escaped = false;

  // Returns false when some product leaves the codomain ball.
  auto fill_column = [&](std::ptrdiff_t col) {
    bool inside = true;
    const std::size_t c = static_cast<std::size_t>(col) / nd;
    const Element& h = domain_ball[static_cast<std::size_t>(col) % nd];
    for (std::size_t r = 0; r < stencil.rows; ++r)
      for (const auto& term : stencil.entries[r * stencil.cols + c]) {
        const auto row = codomain_ball.index_of(group.mul(h, term.element));
        if (!row) {
          inside = false;
          continue;
        }
        M(static_cast<Eigen::Index>(r * nc + *row), col) += term.coefficient;
      }
    return inside;
  };

  if (exec == Exec::serial) {
    for (std::ptrdiff_t col = 0; col < total; ++col) escaped = !fill_column(col) || escaped;
  } else {
#pragma omp parallel for schedule(dynamic, 16) reduction(|| : escaped)
    for (std::ptrdiff_t col = 0; col < total; ++col) escaped = !fill_column(col) || escaped;
  }
  if (escaped) throw InvariantViolation("convolution support escaped the codomain ball");
  return M;
}

}  // namespace lplab::kernels
