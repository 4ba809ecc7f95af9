#include <doctest.h>

#include <omp.h>

#include "lplab/kernels.hpp"
#include "lplab/lp_complex.hpp"
#include "oracles.hpp"

using namespace lplab;

TEST_CASE("serial and parallel reductions agree bit for bit") {
  Rng rng(1);
  for (const std::size_t n : {0u, 1u, 1023u, 1024u, 1025u, 50000u}) {
    std::vector<double> a(n), b(n);
    for (auto& v : a) v = rng.uniform_real(-1, 1);
    for (auto& v : b) v = rng.uniform_real(-1, 1);
    for (const double e : {1.5, 2.0, 3.0}) {
      const double s = kernels::power_sum(a, e, Exec::serial);
      for (int threads : {1, 2, 3, 5}) {
        omp_set_num_threads(threads);
        CHECK(kernels::power_sum(a, e, Exec::parallel) == s);
      }
      const Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(a.data(), static_cast<Eigen::Index>(n));
      CHECK(std::pow(s, 1.0 / e) == doctest::Approx(oracle::naive_norm(v, e)).epsilon(1e-12));
    }
    const double d = kernels::dot(a, b, Exec::serial);
    for (int threads : {1, 2, 4}) {
      omp_set_num_threads(threads);
      CHECK(kernels::dot(a, b, Exec::parallel) == d);
    }
  }
}

TEST_CASE("serial and parallel operator assembly agree exactly") {
  for (const char* name : {"cyclic-inf", "lattice:3", "fox:heisenberg", "fox:free:2", "cyclic:6:4"}) {
    const auto res = make_resolution(name);
    for (std::size_t i = 1; i <= res.length(); ++i) {
      const auto s = assemble_boundary(res, i, 3, 2.0, Exec::serial);
      for (int threads : {1, 3}) {
        omp_set_num_threads(threads);
        CHECK(assemble_boundary(res, i, 3, 2.0, Exec::parallel).matrix == s.matrix);
      }
    }
  }
}
