#include "itermag/magnitude.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>

#include "itermag/interner.hpp"

namespace itermag {

namespace {

std::string join_names(std::vector<std::string> const& names, std::span<std::uint32_t const> ids) {
  std::string s = "(";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) {
      s += ",";
    }
    s += names[ids[i]];
  }
  return s + ")";
}

// Distances rescaled to integers by a common denominator; -1 is infinity.
struct ScaledMetric {
  std::size_t               n = 0;
  std::vector<std::int64_t> d;
  Integer                   denom = 1;
  std::int64_t              min_positive = -1;

  explicit ScaledMetric(GenMetricSpace const& x) : n(x.size()), d(n * n, -1) {
    for (auto const& row : x.d) {
      for (auto const& v : row) {
        if (v.is_finite()) {
          denom = lcm(denom, Integer(v.value().get_den()));
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (x.d[a][b].is_finite()) {
          d[a * n + b] = scale(x.d[a][b].value());
          if (d[a * n + b] > 0 && (min_positive < 0 || d[a * n + b] < min_positive)) {
            min_positive = d[a * n + b];
          }
        }
      }
    }
  }
  std::int64_t at(std::size_t a, std::size_t b) const { return d[a * n + b]; }
  // -1 when the value is not a multiple of 1/denom (never reachable).
  std::int64_t scale(Rational const& q) const {
    Rational s = q * Rational(denom);
    s.canonicalize();
    if (s.get_den() != 1) {
      return -1;
    }
    if (!s.get_num().fits_slong_p()) {
      throw std::overflow_error("distance too large after rescaling");
    }
    return s.get_num().get_si();
  }
  Rational unscale(std::int64_t v) const {
    Rational q(Integer(static_cast<long>(v)), denom);
    q.canonicalize();
    return q;
  }
  bool between(std::size_t a, std::size_t z, std::size_t b) const {
    std::int64_t ab = at(a, b), az = at(a, z), zb = at(z, b);
    if (az < 0 || zb < 0) {
      return false;
    }
    return ab >= 0 && ab == az + zb;
  }
};

// Tuples of length n+1 with total length `target`, in lexicographic order.
// `allow_repeats` admits x_i = x_{i+1}.
void enumerate_tuples(ScaledMetric const& m, int n, std::int64_t target, bool allow_repeats,
                      FlatInterner& out) {
  std::vector<std::uint32_t> cur(static_cast<std::size_t>(n + 1));
  std::function<void(int, std::int64_t)> rec = [&](int pos, std::int64_t len) {
    if (pos == n + 1) {
      if (len == target) {
        out.intern(cur);
      }
      return;
    }
    for (std::uint32_t p = 0; p < m.n; ++p) {
      std::int64_t add = 0;
      if (pos > 0) {
        std::uint32_t prev = cur[static_cast<std::size_t>(pos - 1)];
        if (p == prev && !allow_repeats) {
          continue;
        }
        add = m.at(prev, p);
        if (add < 0 || len + add > target) {
          continue;
        }
      }
      cur[static_cast<std::size_t>(pos)] = p;
      rec(pos + 1, len + add);
    }
  };
  rec(0, 0);
}

}  // namespace

BasedSimplicialObject nerve_category(FinCategory const& x, int max_degree) {
  if (max_degree < 0) {
    throw std::invalid_argument("max_degree must be nonnegative");
  }
  auto const D = static_cast<std::size_t>(max_degree);
  // degree 0 keyed by object, degree n by the n morphisms
  auto ints = std::make_shared<std::vector<FlatInterner>>();
  ints->emplace_back(1);
  for (std::uint32_t o = 0; o < x.num_objects(); ++o) {
    std::uint32_t k[1] = {o};
    (*ints)[0].intern(k);
  }
  for (std::size_t n = 1; n <= D; ++n) {
    ints->emplace_back(n);
    std::vector<std::uint32_t>          cur(n);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (pos == n) {
        (*ints)[n].intern(cur);
        return;
      }
      for (std::uint32_t f = 0; f < x.num_morphisms(); ++f) {
        if (pos > 0 && x.morphisms[cur[pos - 1]].tgt != x.morphisms[f].src) {
          continue;
        }
        cur[pos] = f;
        rec(pos + 1);
      }
    };
    rec(0);
  }

  BasedSimplicialObject s;
  s.sizes.resize(D + 1);
  for (std::size_t n = 0; n <= D; ++n) {
    s.sizes[n] = (*ints)[n].size();
  }
  s.face.resize(D + 1);
  s.degeneracy.resize(D + 1);
  for (std::size_t n = 1; n <= D; ++n) {
    s.face[n].assign(n + 1, GenMap(s.sizes[n]));
    for (std::uint32_t g = 0; g < s.sizes[n]; ++g) {
      auto key = (*ints)[n].key(g);
      if (n == 1) {
        auto const& f      = x.morphisms[key[0]];
        s.face[1][0][g]    = static_cast<std::int32_t>(f.tgt);
        s.face[1][1][g]    = static_cast<std::int32_t>(f.src);
        continue;
      }
      std::vector<std::uint32_t> t(key.begin(), key.end());
      for (std::size_t i = 0; i <= n; ++i) {
        std::vector<std::uint32_t> r;
        if (i == 0) {
          r.assign(t.begin() + 1, t.end());
        } else if (i == n) {
          r.assign(t.begin(), t.end() - 1);
        } else {
          r = t;
          std::int32_t c = x.then[t[i - 1]][t[i]];
          r[i - 1]       = static_cast<std::uint32_t>(c);
          r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
        }
        s.face[n][i][g] = static_cast<std::int32_t>((*ints)[n - 1].find(r));
      }
    }
  }
  for (std::size_t n = 0; n < D; ++n) {
    s.degeneracy[n].assign(n + 1, GenMap(s.sizes[n]));
    for (std::uint32_t g = 0; g < s.sizes[n]; ++g) {
      auto key = (*ints)[n].key(g);
      for (std::size_t i = 0; i <= n; ++i) {
        std::vector<std::uint32_t> r;
        if (n == 0) {
          r = {x.identity[key[0]]};
        } else {
          r.assign(key.begin(), key.end());
          Index obj = i == 0 ? x.morphisms[key[0]].src : x.morphisms[key[i - 1]].tgt;
          r.insert(r.begin() + static_cast<std::ptrdiff_t>(i), x.identity[obj]);
        }
        s.degeneracy[n][i][g] = static_cast<std::int32_t>((*ints)[n + 1].find(r));
      }
    }
  }
  auto objects   = x.objects;
  auto morphisms = std::make_shared<std::vector<std::string>>();
  for (auto const& m : x.morphisms) {
    morphisms->push_back(m.name);
  }
  s.label = [ints, objects, morphisms](int n, std::size_t i) {
    auto key = (*ints)[static_cast<std::size_t>(n)].key(static_cast<std::uint32_t>(i));
    return n == 0 ? objects[key[0]] : join_names(*morphisms, key);
  };
  return s;
}

AdjacencyResult adjacency(GenMetricSpace const& x, Index a, Index b) {
  if (a == b) {
    throw std::invalid_argument("adjacency needs two distinct points");
  }
  for (Index z = 0; z < x.size(); ++z) {
    if (z == a || z == b) {
      continue;
    }
    if (x.d[a][b].is_finite() && x.d[a][b] == x.d[a][z] + x.d[z][b]) {
      return {false, z};
    }
  }
  return {};
}

std::vector<Rational> reachable_gradings(GenMetricSpace const& x, int max_degree) {
  ScaledMetric                     m(x);
  std::set<std::int64_t>           seen;
  std::vector<std::uint32_t>       cur(static_cast<std::size_t>(max_degree) + 1);
  std::function<void(int, std::int64_t)> rec = [&](int pos, std::int64_t len) {
    seen.insert(len);
    if (pos > max_degree) {
      return;
    }
    for (std::uint32_t p = 0; p < m.n; ++p) {
      if (pos == 0) {
        cur[0] = p;
        rec(1, 0);
        continue;
      }
      std::uint32_t prev = cur[static_cast<std::size_t>(pos - 1)];
      if (p == prev || m.at(prev, p) < 0) {
        continue;
      }
      cur[static_cast<std::size_t>(pos)] = p;
      rec(pos + 1, len + m.at(prev, p));
    }
  };
  if (m.n > 0) {
    rec(0, 0);
  }
  std::vector<Rational> out;
  for (auto v : seen) {
    out.push_back(m.unscale(v));
  }
  return out;
}

GradedChainComplex magnitude_complex_metric(GenMetricSpace const& x, int max_degree,
                                            std::optional<std::vector<Rational>> gradings) {
  if (max_degree < 0) {
    throw std::invalid_argument("max_degree must be nonnegative");
  }
  ScaledMetric m(x);
  std::vector<Rational> ells = gradings ? *gradings : reachable_gradings(x, max_degree);
  GradedChainComplex    out;
  auto const            D = static_cast<std::size_t>(max_degree);
  for (auto const& ell : ells) {
    if (ell < 0) {
      throw std::invalid_argument("gradings must be nonnegative");
    }
    std::int64_t const target = m.scale(ell);
    auto ints = std::make_shared<std::vector<FlatInterner>>();
    for (std::size_t n = 0; n <= D; ++n) {
      ints->emplace_back(n + 1);
      if (target >= 0) {
        enumerate_tuples(m, static_cast<int>(n), target, false, ints->back());
      }
    }
    BasedChainComplex c;
    c.dims.resize(D + 1);
    for (std::size_t n = 0; n <= D; ++n) {
      c.dims[n] = (*ints)[n].size();
    }
    c.boundary.emplace_back(0, c.dims[0]);
    for (std::size_t n = 1; n <= D; ++n) {
      IntMatrix                  d(c.dims[n - 1], c.dims[n]);
      std::vector<std::uint32_t> r(n);
      for (std::uint32_t g = 0; g < c.dims[n]; ++g) {
        auto              t = (*ints)[n].key(g);
        IntMatrix::Column col;
        for (std::size_t i = 1; i < n; ++i) {
          if (!m.between(t[i - 1], t[i], t[i + 1])) {
            continue;
          }
          std::copy(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i), r.begin());
          std::copy(t.begin() + static_cast<std::ptrdiff_t>(i + 1), t.end(),
                    r.begin() + static_cast<std::ptrdiff_t>(i));
          std::uint32_t f = (*ints)[n - 1].find(r);
          if (f == FlatInterner::kMissing) {
            throw std::logic_error("metric face left the basis");
          }
          col.emplace_back(f, i % 2 == 0 ? 1 : -1);
        }
        d.set_column(g, std::move(col));
      }
      c.boundary.push_back(std::move(d));
    }
    // No tuple of degree D+1 fits when (D+1) * min positive distance > ell.
    bool complete = m.min_positive < 0 || target < 0
                    || static_cast<__int128>(D + 1) * m.min_positive > target;
    c.faithful_through = complete ? max_degree : max_degree - 1;
    auto names         = x.points;
    c.label            = [ints, names](int n, std::size_t i) {
      return join_names(names, (*ints)[static_cast<std::size_t>(n)].key(static_cast<std::uint32_t>(i)));
    };
    out.emplace(ell, std::move(c));
  }
  return out;
}

BasedSimplicialObject metric_nerve(GenMetricSpace const& x, Rational const& grading, int max_degree) {
  if (max_degree < 0) {
    throw std::invalid_argument("max_degree must be nonnegative");
  }
  ScaledMetric       m(x);
  std::int64_t const target = m.scale(grading);
  auto const         D      = static_cast<std::size_t>(max_degree);
  auto               ints   = std::make_shared<std::vector<FlatInterner>>();
  for (std::size_t n = 0; n <= D; ++n) {
    ints->emplace_back(n + 1);
    if (target >= 0) {
      enumerate_tuples(m, static_cast<int>(n), target, true, ints->back());
    }
  }
  BasedSimplicialObject s;
  s.sizes.resize(D + 1);
  for (std::size_t n = 0; n <= D; ++n) {
    s.sizes[n] = (*ints)[n].size();
  }
  s.face.resize(D + 1);
  s.degeneracy.resize(D + 1);
  for (std::size_t n = 1; n <= D; ++n) {
    s.face[n].assign(n + 1, GenMap(s.sizes[n], kZero));
    for (std::uint32_t g = 0; g < s.sizes[n]; ++g) {
      auto t = (*ints)[n].key(g);
      for (std::size_t i = 0; i <= n; ++i) {
        bool keep;
        if (i == 0) {
          keep = t[0] == t[1];
        } else if (i == n) {
          keep = t[n - 1] == t[n];
        } else {
          keep = m.between(t[i - 1], t[i], t[i + 1]);
        }
        if (!keep) {
          continue;
        }
        std::vector<std::uint32_t> r(t.begin(), t.end());
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
        s.face[n][i][g] = static_cast<std::int32_t>((*ints)[n - 1].find(r));
      }
    }
  }
  for (std::size_t n = 0; n < D; ++n) {
    s.degeneracy[n].assign(n + 1, GenMap(s.sizes[n]));
    for (std::uint32_t g = 0; g < s.sizes[n]; ++g) {
      auto t = (*ints)[n].key(g);
      for (std::size_t i = 0; i <= n; ++i) {
        std::vector<std::uint32_t> r(t.begin(), t.end());
        r.insert(r.begin() + static_cast<std::ptrdiff_t>(i), t[i]);
        s.degeneracy[n][i][g] = static_cast<std::int32_t>((*ints)[n + 1].find(r));
      }
    }
  }
  auto names = x.points;
  s.label    = [ints, names](int n, std::size_t i) {
    return join_names(names, (*ints)[static_cast<std::size_t>(n)].key(static_cast<std::uint32_t>(i)));
  };
  return s;
}

}  // namespace itermag
