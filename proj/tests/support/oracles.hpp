#pragma once

// Independent reference computations used only by the tests. None of these
// share code paths with the library routines they check.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hopfarb/exact_linalg.hpp"
#include "hopfarb/laurent_polynomial.hpp"

namespace hopfarb::oracle {

// Every labelled plane tree with n vertices as canonical text, generated by
// the recursive decomposition tree = sign + ordered forest of subtrees.
inline std::vector<std::string> all_tree_texts(std::size_t n) {
  static std::map<std::size_t, std::vector<std::string>> trees_memo;
  static std::map<std::size_t, std::vector<std::vector<std::string>>> forests_memo;

  struct Gen {
    static const std::vector<std::vector<std::string>>& forests(std::size_t m) {
      auto it = forests_memo.find(m);
      if (it != forests_memo.end()) return it->second;
      std::vector<std::vector<std::string>> out;
      if (m == 0) {
        out.push_back({});
      } else {
        for (std::size_t k = 1; k <= m; ++k) {
          for (const auto& first : trees(k)) {
            for (const auto& rest : forests(m - k)) {
              std::vector<std::string> f{first};
              f.insert(f.end(), rest.begin(), rest.end());
              out.push_back(std::move(f));
            }
          }
        }
      }
      return forests_memo[m] = std::move(out);
    }
    static const std::vector<std::string>& trees(std::size_t n) {
      auto it = trees_memo.find(n);
      if (it != trees_memo.end()) return it->second;
      std::vector<std::string> out;
      for (const char* sign : {"+", "-"}) {
        for (const auto& f : forests(n - 1)) {
          std::string s = sign;
          if (!f.empty()) {
            s += "(";
            for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + f[i];
            s += ")";
          }
          out.push_back(std::move(s));
        }
      }
      return trees_memo[n] = std::move(out);
    }
  };
  return Gen::trees(n);
}

// Polynomial in t with integer coefficients, ascending powers.
using Poly = std::vector<BigInt>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

inline void poly_add_into(Poly& acc, const Poly& p, int sign) {
  if (acc.size() < p.size()) acc.resize(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i] += sign * p[i];
}

// det(V - t V^T) by Laplace expansion along the first row.
inline Poly cofactor_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return {1};
  if (n == 1) return m[0][0];
  Poly acc;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    poly_add_into(acc, poly_mul(m[0][c], cofactor_det(minor)), c % 2 == 0 ? 1 : -1);
  }
  return acc;
}

inline LaurentPolynomial cofactor_alexander(const IntMatrix& v) {
  const std::size_t n = v.rows();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Poly{v(i, j), -v(j, i)};
  }
  return LaurentPolynomial(0, cofactor_det(m));
}

inline Eigen::MatrixXd to_eigen(const IntMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      out(i, j) = static_cast<double>(m(static_cast<std::size_t>(i),
                                        static_cast<std::size_t>(j)));
    }
  }
  return out;
}

struct FloatInertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

// Eigenvalue count for small well-conditioned integer matrices.
inline FloatInertia eigen_inertia(const IntMatrix& symmetric) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(symmetric));
  FloatInertia out;
  for (double ev : solver.eigenvalues()) {
    if (ev > 1e-9) {
      ++out.positive;
    } else if (ev < -1e-9) {
      ++out.negative;
    } else {
      ++out.zero;
    }
  }
  return out;
}

inline std::size_t eigen_rank(const IntMatrix& m) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(to_eigen(m));
  lu.setThreshold(1e-9);
  return static_cast<std::size_t>(lu.rank());
}

}  // namespace hopfarb::oracle
