#pragma once

// Reference helpers shared by the linear algebra test and the acceptance run.

#include <random>
#include <vector>

#include "itermag/exact_linalg.hpp"

namespace itermag::testing {

using Dense = std::vector<std::vector<Integer>>;

inline Dense random_dense(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Dense                              d(r, std::vector<Integer>(c));
  for (auto& row : d) {
    for (auto& x : row) {
      x = dist(rng);
    }
  }
  return d;
}

inline Integer det(Dense m) {
  // Bareiss fraction-free elimination.
  std::size_t const n = m.size();
  if (n == 0) {
    return 1;
  }
  Integer prev = 1;
  int     sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && m[s][k] == 0) {
        ++s;
      }
      if (s == n) {
        return 0;
      }
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// d_i = D_i / D_{i-1}, D_i = gcd of all i x i minors.
inline std::vector<Integer> factors_from_minors(Dense const& m) {
  std::size_t const    r = m.size();
  std::size_t const    c = r ? m[0].size() : 0;
  std::vector<Integer> out;
  Integer              prev = 1;
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    std::vector<std::vector<std::size_t>> rs;
    std::vector<std::vector<std::size_t>> cs;
    std::vector<std::size_t>              cur;
    subsets(r, k, 0, cur, rs);
    subsets(c, k, 0, cur, cs);
    Integer g = 0;
    for (auto const& ri : rs) {
      for (auto const& ci : cs) {
        Dense sub(k, std::vector<Integer>(k));
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t b = 0; b < k; ++b) {
            sub[a][b] = m[ri[a]][ci[b]];
          }
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det(sub).get_mpz_t());
      }
    }
    if (g == 0) {
      break;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

}  // namespace itermag::testing
