#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "lplab/lp_complex.hpp"

namespace lplab {

enum class MinimizationMethod { exact_least_squares, irls };

struct IrlsOptions {
  std::size_t max_iterations = 500;
  double tolerance = 1e-10;  // stop once the objective improves by less
  double eps_start = 1e-3;   // smoothing in w_k = (r_k^2 + eps)^((p-2)/2)
  double eps_end = 1e-12;
  double eps_decay = 0.1;
};

struct MinimizationResult {
  double value = 0.0;  // min_c ||x - T c||_p
  Eigen::VectorXd argmin;
  std::size_t iterations = 0;
  double final_step = 0.0;  // last objective improvement
  MinimizationMethod method = MinimizationMethod::exact_least_squares;
  bool converged = true;
  // max |T^T r| for the least-squares path; 0 for IRLS.
  double orthogonality = 0.0;
  std::vector<double> objective_trace;  // IRLS objective after each iteration
};

// p = 2 solves by complete orthogonal decomposition; otherwise IRLS with
// damped steps, so the objective never increases between iterations.
MinimizationResult lp_distance(const Eigen::VectorXd& x, const Eigen::MatrixXd& T, double p,
                               const IrlsOptions& options = {});
MinimizationResult lp_distance(const ChainVector& x, const BoundaryOperator& T, const IrlsOptions& options = {});

enum class IndexKind { radius, translation, class_sum };
std::string index_kind_name(IndexKind k);  // "R", "i", "n"

struct CurveRow {
  std::int64_t index = 0;
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = true;
};

struct DecayCurve {
  std::string experiment;
  std::string group;
  std::string resolution;
  std::size_t degree = 0;
  double p = 2.0;
  IndexKind kind = IndexKind::radius;
  std::vector<CurveRow> rows;
};

// Header: experiment,group,resolution,degree,p,index_kind,index,value,iterations,converged
void write_decay_csv_header(std::ostream& out);
void write_decay_csv_rows(std::ostream& out, const DecayCurve& curve);

// Finitely supported chain given by (copy, element, value) triples.
struct SparseChain {
  std::vector<std::tuple<std::size_t, Element, double>> entries;
};

// Embeds x into a truncated space; throws when x is not supported there.
ChainVector embed(const SparseChain& x, const TruncatedSpace& space);

// For each R, the l^p distance from x (a degree-i chain) to the image of
// d_{i+1} on ball(R). Throws InvariantViolation if the curve increases
// beyond solver accuracy.
DecayCurve boundary_distance_curve(const Resolution& res, std::size_t degree, const SparseChain& x, double p,
                                   std::span<const std::size_t> radii, const IrlsOptions& options = {},
                                   Exec exec = Exec::parallel);

enum class CentralKind { powers_of_central_element, class_sums };

// Inverse-closed family of central ring elements indexed by integers, with
// the identity at index 0.
struct CentralSequence {
  GroupPtr group;
  CentralKind kind = CentralKind::powers_of_central_element;
  // powers: D[i] = g^i; class sums: D[n] = class sum of g^|n|, D[0] = 1.
  Element generator;

  RingElement at(std::int64_t index) const;
};

// Heisenberg: powers of z = (0,0,1). Z^d: powers of t_1. Dihedral: class
// sums r^n + r^-n. Rejects groups without such a family.
CentralSequence central_catalog(const GroupPtr& group, std::size_t count);
// The count-element listing the catalog reports: powers -k..k for powers, or
// the class sums 1..count.
std::vector<RingElement> central_listing(const CentralSequence& seq, std::size_t count);

// b(y, translate(x, D[i])) for each index.
DecayCurve translation_pairing_decay(const CochainVector& y, const ChainVector& x, const CentralSequence& seq,
                                     std::span<const std::int64_t> indices, Exec exec = Exec::parallel);

// Cut-off split of the pairing: A, B are the smallest sets of largest
// coefficients with ||x - x_A||_p < eps and ||y - y_B||_q < eps. Then
// |b(y,x) - b(y_B, x_A)| <= eps (eps + ||x||_p + ||y||_q) by Hoelder.
struct CutoffSplit {
  double epsilon = 0.0;
  double full = 0.0;
  double head = 0.0;
  double tail = 0.0;   // |full - head|
  double bound = 0.0;  // eps (eps + ||x|| + ||y||)
  std::size_t head_size_x = 0;
  std::size_t head_size_y = 0;
  bool honored() const { return tail <= bound; }
};
CutoffSplit cutoff_split(const CochainVector& y, const ChainVector& x, double epsilon);

// dim H_i(C_n; l^p) for i = 0..N using the periodic resolution, with rank
// threshold threshold_scale * 1e-8 * sigma_max.
std::vector<std::size_t> finite_group_homology_ranks(int n, int N, double p, double threshold_scale = 1.0);

struct FiniteIndexReport {
  std::vector<std::size_t> group_ranks;     // C_n
  std::vector<std::size_t> subgroup_ranks;  // C_m
  bool equal = false;
};
FiniteIndexReport finite_index_compare(int n, int m, double p, int N = 3);

}  // namespace lplab
