#include "lplab/vanishing_lab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lplab/csv.hpp"

namespace lplab {
namespace {

double power_objective(const Eigen::VectorXd& r, double p) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < r.size(); ++k) s += std::pow(std::abs(r[k]), p);
  return s;
}

void require_exponent(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw InvalidArgument("p must exceed 1");
}

std::size_t numeric_rank(const Eigen::MatrixXd& M, double relative_threshold) {
  if (M.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return 0;
  const double cut = relative_threshold * s[0];
  std::size_t r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s[k] > cut) ++r;
  return r;
}

constexpr std::size_t kInfiniteOrderCheck = 1000;
constexpr std::size_t kClassCap = 10000;

}  // namespace

MinimizationResult lp_distance(const Eigen::VectorXd& x, const Eigen::MatrixXd& T, double p,
                               const IrlsOptions& options) {
  require_exponent(p);
  if (T.rows() != x.size())
    throw InvalidArgument("dimension mismatch: operator has " + std::to_string(T.rows()) + " rows, vector has " +
                          std::to_string(x.size()) + " entries");
  MinimizationResult res;
  res.method = p == 2.0 ? MinimizationMethod::exact_least_squares : MinimizationMethod::irls;
  res.argmin = Eigen::VectorXd::Zero(T.cols());

  if (T.cols() == 0 || T.isZero(0.0)) {
    res.value = std::pow(power_objective(x, p), 1.0 / p);
    return res;
  }

  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(T);
  Eigen::VectorXd c = cod.solve(x);
  Eigen::VectorXd r = x - T * c;
  if (p == 2.0) {
    res.argmin = c;
    res.value = r.norm();
    res.orthogonality = (T.transpose() * r).cwiseAbs().maxCoeff();
    return res;
  }

  // IRLS from the least-squares point.
  double objective = power_objective(r, p);
  double eps = options.eps_start;
  res.converged = false;
  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    Eigen::VectorXd sqrt_w(r.size());
    for (Eigen::Index k = 0; k < r.size(); ++k) sqrt_w[k] = std::pow(r[k] * r[k] + eps, (p - 2.0) / 4.0);
    const Eigen::MatrixXd A = sqrt_w.asDiagonal() * T;
    const Eigen::VectorXd b = sqrt_w.cwiseProduct(x);
    const Eigen::VectorXd step = Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd>(A).solve(b) - c;

    double next = objective;
    Eigen::VectorXd c_next = c;
    for (double alpha = 1.0; alpha > 1e-9; alpha *= 0.5) {
      Eigen::VectorXd trial = c + alpha * step;
      const double f = power_objective(x - T * trial, p);
      if (f <= objective) {
        next = f;
        c_next = std::move(trial);
        break;
      }
    }
    if (next > objective) throw InvariantViolation("IRLS objective increased");

    const double improvement = std::pow(objective, 1.0 / p) - std::pow(next, 1.0 / p);
    c = std::move(c_next);
    r = x - T * c;
    objective = next;
    res.iterations = it;
    res.final_step = improvement;
    res.objective_trace.push_back(std::pow(objective, 1.0 / p));

    if (eps > options.eps_end) {
      eps = std::max(eps * options.eps_decay, options.eps_end);
      continue;
    }
    if (improvement < options.tolerance) {
      res.converged = true;
      break;
    }
  }
  res.argmin = c;
  res.value = std::pow(objective, 1.0 / p);
  return res;
}

MinimizationResult lp_distance(const ChainVector& x, const BoundaryOperator& T, const IrlsOptions& options) {
  if (T.dual) throw InvalidArgument("distance to the image needs the primal boundary");
  if (!T.codomain.same_shape(x.space())) throw InvalidArgument("chain does not live on the operator codomain");
  return lp_distance(x.coefficients(), T.matrix, x.space().p, options);
}

std::string index_kind_name(IndexKind k) {
  switch (k) {
    case IndexKind::radius: return "R";
    case IndexKind::translation: return "i";
    case IndexKind::class_sum: return "n";
  }
  return "?";
}

void write_decay_csv_header(std::ostream& out) {
  write_csv_row(out, {"experiment", "group", "resolution", "degree", "p", "index_kind", "index", "value",
                      "iterations", "converged"});
}

void write_decay_csv_rows(std::ostream& out, const DecayCurve& curve) {
  for (const auto& row : curve.rows)
    write_csv_row(out, {curve.experiment, curve.group, curve.resolution, std::to_string(curve.degree),
                        format_double(curve.p), index_kind_name(curve.kind), std::to_string(row.index),
                        format_double(row.value), std::to_string(row.iterations), row.converged ? "true" : "false"});
}

ChainVector embed(const SparseChain& x, const TruncatedSpace& space) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(space.dim()));
  for (const auto& [copy, g, value] : x.entries) {
    const auto i = space.index_of(copy, g);
    if (!i)
      throw InvalidArgument("chain entry (" + std::to_string(copy) + ", " + space.group->format(g) +
                            ") lies outside the truncated space of radius " + std::to_string(space.radius));
    v[static_cast<Eigen::Index>(*i)] += value;
  }
  return ChainVector(space, std::move(v));
}

DecayCurve boundary_distance_curve(const Resolution& res, std::size_t degree, const SparseChain& x, double p,
                                   std::span<const std::size_t> radii, const IrlsOptions& options, Exec exec) {
  require_exponent(p);
  if (degree + 1 > res.length())
    throw InvalidArgument("resolution " + res.name + " has no d_" + std::to_string(degree + 1));
  if (!std::is_sorted(radii.begin(), radii.end()) ||
      std::adjacent_find(radii.begin(), radii.end()) != radii.end())
    throw InvalidArgument("radii must be strictly increasing");
  DecayCurve curve{"distance-curve", res.group->name(), res.name, degree, p, IndexKind::radius, {}};
  double x_norm = 0.0;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    const auto T = assemble_boundary(res, degree + 1, radii[k], p, exec);
    const ChainVector xv = embed(x, T.codomain);
    if (k == 0) x_norm = norm(xv, Exec::serial);
    const auto m = lp_distance(xv, T, options);
    if (!curve.rows.empty() && m.value > curve.rows.back().value + 1e-9 * std::max(1.0, x_norm))
      throw InvariantViolation("distance curve increased from R=" + std::to_string(radii[k - 1]) + " to R=" +
                               std::to_string(radii[k]));
    curve.rows.push_back({static_cast<std::int64_t>(radii[k]), m.value, m.iterations, m.converged});
  }
  return curve;
}

RingElement CentralSequence::at(std::int64_t index) const {
  if (kind == CentralKind::powers_of_central_element) return RingElement(group, group->pow(generator, index));
  if (index == 0) return RingElement::one(group);
  return class_sum(group, group->pow(generator, std::abs(index)), kClassCap);
}

CentralSequence central_catalog(const GroupPtr& group, std::size_t count) {
  const auto& spec = group->spec();
  CentralSequence seq{group, CentralKind::powers_of_central_element, {}};
  switch (spec.kind) {
    case GroupKind::heisenberg:
      seq.generator = Element{{0, 0, 1}};
      break;
    case GroupKind::lattice:
      seq.generator = group->generators()[0];
      break;
    case GroupKind::free_group:
      if (spec.param != 1)
        throw InvalidArgument("no infinite central family in catalog: " + group->name() +
                              " has trivial center and its nontrivial conjugacy classes are infinite");
      seq.generator = group->generators()[0];
      break;
    case GroupKind::infinite_dihedral:
      seq.kind = CentralKind::class_sums;
      seq.generator = group->generators()[0];
      break;
    case GroupKind::trivial:
    case GroupKind::cyclic:
    case GroupKind::symmetric3:
      throw InvalidArgument("no infinite central family in catalog: " + group->name() +
                            " is finite, so its center and its conjugacy classes are finite");
  }
  if (seq.kind == CentralKind::powers_of_central_element) {
    if (!is_central(RingElement(group, seq.generator)))
      throw InvariantViolation("catalog generator " + group->format(seq.generator) + " is not central");
    Element acc = seq.generator;
    for (std::size_t k = 1; k <= kInfiniteOrderCheck; ++k, acc = group->mul(acc, seq.generator))
      if (acc == group->identity())
        throw InvariantViolation("central generator has finite order " + std::to_string(k));
  }
  for (const auto& u : central_listing(seq, count))
    if (!is_central(u)) throw InvariantViolation("central family element " + format(u) + " is not central");
  return seq;
}

std::vector<RingElement> central_listing(const CentralSequence& seq, std::size_t count) {
  std::vector<RingElement> out;
  if (seq.kind == CentralKind::class_sums) {
    for (std::size_t n = 1; n <= count; ++n) out.push_back(seq.at(static_cast<std::int64_t>(n)));
    return out;
  }
  const auto lo = -static_cast<std::int64_t>((count - (count ? 1 : 0)) / 2);
  for (std::size_t k = 0; k < count; ++k) out.push_back(seq.at(lo + static_cast<std::int64_t>(k)));
  return out;
}

DecayCurve translation_pairing_decay(const CochainVector& y, const ChainVector& x, const CentralSequence& seq,
                                     std::span<const std::int64_t> indices, Exec exec) {
  if (!seq.group->same_as(*x.space().group)) throw InvalidArgument("central family from another group");
  DecayCurve curve{"translation-decay", seq.group->name(), "", 0, x.space().p,
                   seq.kind == CentralKind::class_sums ? IndexKind::class_sum : IndexKind::translation, {}};
  for (const auto i : indices) {
    const ChainVector moved = translate_ring(x, seq.at(i));
    curve.rows.push_back({i, pairing(y, moved, exec), 0, true});
  }
  return curve;
}

namespace {

// Indices of the largest-magnitude coefficients whose complement has
// l^e-norm below eps.
std::vector<bool> head_mask(const Eigen::VectorXd& v, double e, double eps) {
  const auto n = static_cast<std::size_t>(v.size());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(v[static_cast<Eigen::Index>(a)]) > std::abs(v[static_cast<Eigen::Index>(b)]);
  });
  std::vector<double> suffix(n + 1, 0.0);
  for (std::size_t k = n; k-- > 0;)
    suffix[k] = suffix[k + 1] + std::pow(std::abs(v[static_cast<Eigen::Index>(order[k])]), e);
  std::vector<bool> mask(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    if (std::pow(suffix[k], 1.0 / e) < eps) break;
    mask[order[k]] = true;
  }
  return mask;
}

}  // namespace

CutoffSplit cutoff_split(const CochainVector& y, const ChainVector& x, double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidArgument("cut-off epsilon must be positive");
  const auto mx = head_mask(x.coefficients(), x.exponent(), epsilon);
  const auto my = head_mask(y.coefficients(), y.exponent(), epsilon);
  Eigen::VectorXd xa = x.coefficients(), yb = y.coefficients();
  CutoffSplit s;
  for (std::size_t k = 0; k < mx.size(); ++k) {
    if (!mx[k]) xa[static_cast<Eigen::Index>(k)] = 0.0;
    s.head_size_x += mx[k];
  }
  for (std::size_t k = 0; k < my.size(); ++k) {
    if (!my[k]) yb[static_cast<Eigen::Index>(k)] = 0.0;
    s.head_size_y += my[k];
  }
  s.epsilon = epsilon;
  s.full = pairing(y, x, Exec::serial);
  s.head = pairing(CochainVector(y.space(), yb), ChainVector(x.space(), xa), Exec::serial);
  s.tail = std::abs(s.full - s.head);
  s.bound = epsilon * (epsilon + norm(x, Exec::serial) + norm(y, Exec::serial));
  return s;
}

std::vector<std::size_t> finite_group_homology_ranks(int n, int N, double p, double threshold_scale) {
  require_exponent(p);
  if (N < 0) throw InvalidArgument("top degree must be >= 0");
  if (n == 1) {
    std::vector<std::size_t> dims(static_cast<std::size_t>(N) + 1, 0);
    dims[0] = 1;
    return dims;
  }
  const Resolution res = periodic_cyclic_resolution(n, N + 1);
  const auto radius = static_cast<std::size_t>(n);  // ball(n) is all of C_n
  const double threshold = threshold_scale * 1e-8;
  std::vector<std::size_t> ranks(static_cast<std::size_t>(N) + 2, 0);  // ranks[i] = rank d_i, d_0 = 0
  for (int i = 1; i <= N + 1; ++i) {
    const auto op = assemble_boundary(res, static_cast<std::size_t>(i), radius, p, Exec::serial);
    if (op.domain.ball->size() != static_cast<std::size_t>(n) || op.codomain.ball->size() != static_cast<std::size_t>(n))
      throw InvariantViolation("truncation did not cover the finite group");
    ranks[static_cast<std::size_t>(i)] = numeric_rank(op.matrix, threshold);
  }
  std::vector<std::size_t> dims;
  for (int i = 0; i <= N; ++i) {
    const std::size_t kernel = static_cast<std::size_t>(n) - ranks[static_cast<std::size_t>(i)];
    dims.push_back(kernel - ranks[static_cast<std::size_t>(i) + 1]);
  }
  return dims;
}

FiniteIndexReport finite_index_compare(int n, int m, double p, int N) {
  if (n < 1 || m < 1) throw InvalidArgument("group orders must be positive");
  if (n % m != 0)
    throw InvalidArgument("C_" + std::to_string(m) + " is not a subgroup of C_" + std::to_string(n) + ": " +
                          std::to_string(m) + " does not divide " + std::to_string(n));
  FiniteIndexReport r;
  r.group_ranks = finite_group_homology_ranks(n, N, p);
  r.subgroup_ranks = finite_group_homology_ranks(m, N, p);
  r.equal = r.group_ranks == r.subgroup_ranks;
  return r;
}

}  // namespace lplab
