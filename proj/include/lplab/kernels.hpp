#pragma once

// Data-parallel inner loops. Each kernel has a serial reference
// implementation and an OpenMP implementation; tests check that they agree
// and bench/ compares their throughput.
//
// Floating-point reductions in both paths sum fixed-size blocks and
// then combine the block partials in order, so the result does not depend on
// the thread count or schedule.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lplab/common.hpp"
#include "lplab/groups.hpp"

namespace lplab::kernels {

inline constexpr std::size_t kReductionBlock = 1024;

// sum_k |v_k|^exponent
double power_sum(std::span<const double> v, double exponent, Exec exec);

// sum_k a_k b_k over the common length.
double dot(std::span<const double> a, std::span<const double> b, Exec exec);

// One boundary entry: right multiplication by sum_b coef_b * b.
struct ConvolutionTerm {
  Element element;
  double coefficient;
};

// Entries (r, c) of a ring matrix flattened row-major as term lists.
struct ConvolutionStencil {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<ConvolutionTerm>> entries;
};

// Dense matrix of right convolution by the stencil, from copies of
// domain_ball to copies of codomain_ball. Column (c, h) receives coef at row
// (r, h*b) for each term b of entry (r, c).
Eigen::MatrixXd assemble_convolution(const Group& group, const ConvolutionStencil& stencil,
                                     const Ball& domain_ball, const Ball& codomain_ball, Exec exec);

}  // namespace lplab::kernels
