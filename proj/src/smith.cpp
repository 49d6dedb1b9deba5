// Smith normal form.
//
// The boundary matrices we meet are huge, very sparse and almost entirely
// +-1. We first eliminate greedily with unit pivots (each such pivot
// contributes an invariant factor 1), using column operations only, and
// hand whatever is left to a dense algorithm. The elimination runs in int64
// with overflow checks and restarts in GMP arithmetic if anything overflows.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "itermag/exact_linalg.hpp"

namespace itermag {

namespace {

struct Overflow {};

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(Integer const& v) { return v == 1 || v == -1; }
inline bool is_zero(std::int64_t v) { return v == 0; }
inline bool is_zero(Integer const& v) { return sgn(v) == 0; }

// a - f * b
inline std::int64_t sub_mul(std::int64_t a, std::int64_t f, std::int64_t b) {
  std::int64_t p = 0;
  std::int64_t r = 0;
  if (__builtin_mul_overflow(f, b, &p) || __builtin_sub_overflow(a, p, &r)) {
    throw Overflow{};
  }
  return r;
}
inline Integer sub_mul(Integer const& a, Integer const& f, Integer const& b) {
  return a - f * b;
}

inline std::int64_t neg_checked(std::int64_t v) {
  if (v == INT64_MIN) {
    throw Overflow{};
  }
  return -v;
}
inline Integer neg_checked(Integer const& v) { return -v; }

inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }
inline Integer to_integer(Integer const& v) { return v; }

template <class T>
struct UnitEliminator {
  using Col = std::vector<std::pair<std::uint32_t, T>>;

  std::size_t                        nrows;
  std::vector<Col>                   cols;
  std::vector<std::uint32_t>         row_count;
  std::vector<std::vector<uint32_t>> row_cols;  // may hold stale column ids
  std::vector<char>                  col_dead;
  std::size_t                        unit_pivots = 0;

  using Key = std::pair<std::size_t, std::uint32_t>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;

  explicit UnitEliminator(std::size_t rows, std::vector<Col> c)
      : nrows(rows), cols(std::move(c)), row_count(rows, 0), row_cols(rows),
        col_dead(cols.size(), 0) {
    for (std::uint32_t j = 0; j < cols.size(); ++j) {
      for (auto const& e : cols[j]) {
        ++row_count[e.first];
        row_cols[e.first].push_back(j);
      }
      if (!cols[j].empty()) {
        queue.emplace(cols[j].size(), j);
      }
    }
  }

  static bool contains(Col const& col, std::uint32_t r) {
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](auto const& e, std::uint32_t x) { return e.first < x; });
    return it != col.end() && it->first == r;
  }

  static T const& value_at(Col const& col, std::uint32_t r) {
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](auto const& e, std::uint32_t x) { return e.first < x; });
    return it->second;
  }

  // cols[c] -= f * cols[p]
  void axpy(std::uint32_t c, T const& f, std::uint32_t p) {
    Col const& src = cols[p];
    Col&       dst = cols[c];
    Col        out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0;
    std::size_t k = 0;
    while (i < dst.size() || k < src.size()) {
      if (k == src.size() || (i < dst.size() && dst[i].first < src[k].first)) {
        out.push_back(std::move(dst[i]));
        ++i;
      } else if (i == dst.size() || src[k].first < dst[i].first) {
        std::uint32_t const r = src[k].first;
        out.emplace_back(r, sub_mul(T(0), f, src[k].second));
        ++row_count[r];
        row_cols[r].push_back(c);
        ++k;
      } else {
        T v = sub_mul(dst[i].second, f, src[k].second);
        if (is_zero(v)) {
          --row_count[dst[i].first];
        } else {
          out.emplace_back(dst[i].first, std::move(v));
        }
        ++i;
        ++k;
      }
    }
    dst = std::move(out);
  }

  void run() {
    std::vector<std::uint32_t> targets;
    while (!queue.empty()) {
      auto [size, p] = queue.top();
      queue.pop();
      if (col_dead[p] || cols[p].size() != size || size == 0) {
        continue;
      }
      // Unit entry in the sparsest row.
      Col const&    col   = cols[p];
      std::uint32_t best  = UINT32_MAX;
      std::uint32_t bestc = UINT32_MAX;
      for (auto const& e : col) {
        if (is_unit(e.second) && row_count[e.first] < bestc) {
          best  = e.first;
          bestc = row_count[e.first];
        }
      }
      if (best == UINT32_MAX) {
        continue;  // re-queued if a later pivot touches it
      }
      std::uint32_t const r     = best;
      T const             pivot = value_at(col, r);

      targets.clear();
      for (std::uint32_t c : row_cols[r]) {
        if (c != p && !col_dead[c] && contains(cols[c], r)) {
          targets.push_back(c);
        }
      }
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      row_cols[r].clear();

      for (std::uint32_t c : targets) {
        // pivot is +-1 so a/pivot == a*pivot
        T f = value_at(cols[c], r);
        if (pivot != T(1)) {
          f = neg_checked(f);
        }
        axpy(c, f, p);
        if (!cols[c].empty()) {
          queue.emplace(cols[c].size(), c);
        }
      }
      for (auto const& e : cols[p]) {
        --row_count[e.first];
      }
      cols[p].clear();
      col_dead[p] = 1;
      ++unit_pivots;
    }
  }

  // Remaining nonzero block as a dense GMP matrix.
  std::vector<std::vector<Integer>> residual() const {
    std::vector<std::int64_t> row_map(nrows, -1);
    std::size_t               nr = 0;
    std::vector<std::uint32_t> live;
    for (std::uint32_t j = 0; j < cols.size(); ++j) {
      if (col_dead[j] || cols[j].empty()) {
        continue;
      }
      live.push_back(j);
      for (auto const& e : cols[j]) {
        if (row_map[e.first] < 0) {
          row_map[e.first] = static_cast<std::int64_t>(nr++);
        }
      }
    }
    std::vector<std::vector<Integer>> d(nr, std::vector<Integer>(live.size(), 0));
    for (std::size_t k = 0; k < live.size(); ++k) {
      for (auto const& e : cols[live[k]]) {
        d[static_cast<std::size_t>(row_map[e.first])][k] = to_integer(e.second);
      }
    }
    return d;
  }
};

template <class T>
SmithForm eliminate(IntMatrix const& m, std::vector<typename UnitEliminator<T>::Col> cols) {
  UnitEliminator<T> el(m.rows(), std::move(cols));
  el.run();
  SmithForm rest = dense_smith_normal_form(el.residual());
  SmithForm out;
  out.rank = el.unit_pivots + rest.rank;
  out.invariant_factors.assign(el.unit_pivots, Integer(1));
  out.invariant_factors.insert(out.invariant_factors.end(), rest.invariant_factors.begin(),
                               rest.invariant_factors.end());
  return out;
}

}  // namespace

SmithForm smith_normal_form(IntMatrix const& m) {
  using Small = UnitEliminator<std::int64_t>::Col;
  bool               fits = true;
  std::vector<Small> small(m.cols());
  for (std::size_t j = 0; j < m.cols() && fits; ++j) {
    small[j].reserve(m.column(j).size());
    for (auto const& [r, v] : m.column(j)) {
      if (!v.fits_slong_p()) {
        fits = false;
        break;
      }
      small[j].emplace_back(r, static_cast<std::int64_t>(v.get_si()));
    }
  }
  if (fits) {
    try {
      return eliminate<std::int64_t>(m, std::move(small));
    } catch (Overflow const&) {
      // fall through to GMP
    }
  }
  std::vector<UnitEliminator<Integer>::Col> big(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    big[j].assign(m.column(j).begin(), m.column(j).end());
  }
  return eliminate<Integer>(m, std::move(big));
}

SmithForm dense_smith_normal_form(std::vector<std::vector<Integer>> a) {
  SmithForm         out;
  std::size_t const nr = a.size();
  std::size_t const nc = nr == 0 ? 0 : a.front().size();
  for (auto const& row : a) {
    if (row.size() != nc) {
      throw std::invalid_argument("dense_smith_normal_form: ragged rows");
    }
  }

  auto find_min = [&](std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool    found = false;
    Integer best;
    for (std::size_t i = t; i < nr; ++i) {
      for (std::size_t j = t; j < nc; ++j) {
        if (sgn(a[i][j]) != 0 && (!found || abs(a[i][j]) < best)) {
          best  = abs(a[i][j]);
          pi    = i;
          pj    = j;
          found = true;
          if (best == 1) {
            return true;
          }
        }
      }
    }
    return found;
  };

  Integer q;
  for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
    std::size_t pi = 0;
    std::size_t pj = 0;
    if (!find_min(t, pi, pj)) {
      break;
    }
    std::swap(a[t], a[pi]);
    if (pj != t) {
      for (std::size_t i = 0; i < nr; ++i) {
        std::swap(a[i][t], a[i][pj]);
      }
    }
    for (;;) {
      bool dirty = false;
      // Column t below the pivot.
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (sgn(a[i][t]) == 0) {
          continue;
        }
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < nc; ++j) {
          a[i][j] -= q * a[t][j];
        }
        if (sgn(a[i][t]) != 0) {
          dirty = true;
        }
      }
      // Row t right of the pivot.
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (sgn(a[t][j]) == 0) {
          continue;
        }
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < nr; ++i) {
          a[i][j] -= q * a[i][t];
        }
        if (sgn(a[t][j]) != 0) {
          dirty = true;
        }
      }
      if (!dirty) {
        // Pivot must divide the rest, else fold an offending row in.
        std::size_t bad = nr;
        for (std::size_t i = t + 1; i < nr && bad == nr; ++i) {
          for (std::size_t j = t + 1; j < nc; ++j) {
            if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
              bad = i;
              break;
            }
          }
        }
        if (bad == nr) {
          break;
        }
        for (std::size_t j = t; j < nc; ++j) {
          a[t][j] += a[bad][j];
        }
      }
      // Bring the smallest entry of row t / column t to the corner.
      std::size_t bi = t;
      std::size_t bj = t;
      for (std::size_t i = t; i < nr; ++i) {
        if (sgn(a[i][t]) != 0 && abs(a[i][t]) < abs(a[bi][bj])) {
          bi = i;
          bj = t;
        }
      }
      for (std::size_t j = t; j < nc; ++j) {
        if (sgn(a[t][j]) != 0 && abs(a[t][j]) < abs(a[bi][bj])) {
          bi = t;
          bj = j;
        }
      }
      if (bi != t) {
        std::swap(a[t], a[bi]);
      }
      if (bj != t) {
        for (std::size_t i = 0; i < nr; ++i) {
          std::swap(a[i][t], a[i][bj]);
        }
      }
    }
    out.invariant_factors.push_back(abs(a[t][t]));
    ++out.rank;
  }
  return out;
}

}  // namespace itermag
