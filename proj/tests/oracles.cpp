#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

HeisMatrix heis_mul(const HeisMatrix& a, const HeisMatrix& b) {
  // [[1,a0,a2],[0,1,a1],[0,0,1]] * [[1,b0,b2],[0,1,b1],[0,0,1]]
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[0] * b[1]};
}

namespace {
const std::array<HeisMatrix, 4> kLetters = {{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}}};
}

std::set<HeisMatrix> heisenberg_words_up_to(int radius) {
  std::set<HeisMatrix> out{{0, 0, 0}};
  std::vector<HeisMatrix> words{{0, 0, 0}};
  for (int len = 1; len <= radius; ++len) {
    std::vector<HeisMatrix> next;
    for (const auto& w : words)
      for (const auto& l : kLetters) next.push_back(heis_mul(w, l));
    for (const auto& w : next) out.insert(w);
    words = std::move(next);
  }
  return out;
}

int heisenberg_word_length(const HeisMatrix& m, int max_len) {
  for (int len = 0; len <= max_len; ++len)
    if (heisenberg_words_up_to(len).count(m)) return len;
  return -1;
}

Eigen::MatrixXd z_boundary_natural(int R) {
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(2 * R + 3, 2 * R + 1);
  for (int k = -R; k <= R; ++k) {
    const int col = k + R;
    T(k + 1 + (R + 1), col) += 1.0;  // t^{k+1}
    T(k + (R + 1), col) -= 1.0;      // t^k
  }
  return T;
}

double normal_equations_distance(const Eigen::MatrixXd& T, const Eigen::VectorXd& x) {
  const Eigen::MatrixXd G = T.transpose() * T;
  const Eigen::LLT<Eigen::MatrixXd> llt(G);
  if (llt.info() != Eigen::Success) throw std::runtime_error("normal equations are singular");
  const Eigen::VectorXd c = llt.solve(T.transpose() * x);
  return (x - T * c).norm();
}

std::size_t rational_rank(std::vector<std::vector<mpq_class>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<mpq_class>> cyclic_boundary(int n, int degree) {
  std::vector<std::vector<mpq_class>> M(n, std::vector<mpq_class>(n, 0));
  for (int k = 0; k < n; ++k) {
    if (degree % 2 == 1) {
      M[(k + 1) % n][k] += 1;
      M[k][k] -= 1;
    } else {
      for (int j = 0; j < n; ++j) M[j][k] += 1;
    }
  }
  return M;
}

std::vector<std::size_t> cyclic_homology_dims(int n, int N) {
  std::vector<std::size_t> rank(N + 2, 0);
  for (int i = 1; i <= N + 1; ++i) rank[i] = rational_rank(cyclic_boundary(n, i));
  std::vector<std::size_t> dims;
  for (int i = 0; i <= N; ++i) dims.push_back(n - rank[i] - rank[i + 1]);
  return dims;
}

double naive_norm(const Eigen::VectorXd& v, double p) {
  double s = 0.0;
  for (int k = 0; k < v.size(); ++k) s += std::pow(std::fabs(v(k)), p);
  return std::pow(s, 1.0 / p);
}

Dihedral dihedral_mul(const Dihedral& u, const Dihedral& v) {
  // r^a s^f r^b s^g = r^(a + (-1)^f b) s^(f+g)
  return {u.first + (u.second ? -v.first : v.first), (u.second + v.second) % 2};
}

double dihedral_class_pairing(const std::vector<std::pair<Dihedral, double>>& y,
                              const std::vector<std::pair<Dihedral, double>>& x, std::int64_t n) {
  double s = 0.0;
  for (const auto& [g, yv] : y)
    for (const auto& [k, xv] : x) {
      if (dihedral_mul({n, 0}, k) == g) s += yv * xv;
      if (dihedral_mul({-n, 0}, k) == g) s += yv * xv;
    }
  return s;
}

}  // namespace oracle
