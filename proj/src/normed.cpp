#include <set>
#include <stdexcept>

#include "itermag/errors.hpp"
#include "itermag/interner.hpp"
#include "itermag/iterated.hpp"

namespace itermag {

namespace {

// Norms rescaled to integers; d(g, h) = |h^-1 g|.
struct ScaledNorm {
  FiniteGroup const&        g;
  std::size_t               n;
  Integer                   denom = 1;
  std::vector<std::int64_t> dist;

  explicit ScaledNorm(NormedGroup const& ng) : g(ng.group), n(ng.group.order()), dist(n * n) {
    for (auto const& v : ng.norm) {
      denom = lcm(denom, Integer(v.get_den()));
    }
    std::vector<std::int64_t> norm(n);
    for (std::size_t a = 0; a < n; ++a) {
      Rational s = ng.norm[a] * Rational(denom);
      s.canonicalize();
      if (!s.get_num().fits_slong_p()) {
        throw std::overflow_error("norm too large after rescaling");
      }
      norm[a] = s.get_num().get_si();
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        dist[a * n + b] = norm[g.mul(g.inv(b), a)];
      }
    }
  }
  std::int64_t d(Elem a, Elem b) const { return dist[static_cast<std::size_t>(a) * n + b]; }
  // -1 when the grading is not a multiple of 1/denom
  std::int64_t scale(Rational const& q) const {
    Rational s = q * Rational(denom);
    s.canonicalize();
    if (s.get_den() != 1) {
      return -1;
    }
    if (!s.get_num().fits_slong_p()) {
      throw std::overflow_error("grading too large after rescaling");
    }
    return s.get_num().get_si();
  }
};

// All (q+1) x p matrices of scaled length `target`, row major, lexicographic.
void enumerate_matrices(ScaledNorm const& m, int p, int q, std::int64_t target, FlatInterner& out) {
  auto const                 P = static_cast<std::size_t>(p);
  std::size_t const          cells = P * static_cast<std::size_t>(q + 1);
  std::vector<std::uint32_t> cur(cells);
  if (cells == 0) {
    if (target == 0) {
      out.intern(cur);
    }
    return;
  }
  auto rec = [&](auto& self, std::size_t pos, std::int64_t len) -> void {
    if (pos == cells) {
      if (len == target) {
        out.intern(cur);
      }
      return;
    }
    for (std::uint32_t a = 0; a < m.n; ++a) {
      std::int64_t add = pos >= P ? m.d(cur[pos - P], a) : 0;
      if (len + add > target) {
        continue;
      }
      cur[pos] = a;
      self(self, pos + 1, len + add);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

Rational matrix_length(NormedGroup const& g, int p, int q, std::vector<Elem> const& m) {
  auto const P = static_cast<std::size_t>(p);
  if (m.size() != P * static_cast<std::size_t>(q + 1)) {
    throw std::invalid_argument("matrix_length: wrong number of entries");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(q); ++i) {
    for (std::size_t j = 0; j < P; ++j) {
      Elem a = m[i * P + j], b = m[(i + 1) * P + j];
      total += g.norm[g.group.mul(g.group.inv(b), a)];
    }
  }
  return total;
}

std::vector<Rational> norm_values(NormedGroup const& g) {
  std::set<Rational> v{Rational(0)};
  v.insert(g.norm.begin(), g.norm.end());
  return {v.begin(), v.end()};
}

BasedBisimplicialObject double_nerve_normed_group(NormedGroup const& ng, Rational const& grading,
                                                  Region const& region) {
  if (grading < 0) {
    throw std::invalid_argument("grading must be nonnegative");
  }
  ScaledNorm const   m(ng);
  FiniteGroup const& G      = ng.group;
  std::int64_t const target = m.scale(grading);

  BasedBisimplicialObject b;
  b.reset(region.P, region.Q, region.bound);
  auto const np = static_cast<std::size_t>(region.P + 1);
  auto const nq = static_cast<std::size_t>(region.Q + 1);
  auto       ints = std::make_shared<std::vector<std::vector<FlatInterner>>>(np);
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t q = 0; q < nq; ++q) {
      (*ints)[p].emplace_back(p * (q + 1));
      if (b.present(static_cast<int>(p), static_cast<int>(q)) && target >= 0) {
        enumerate_matrices(m, static_cast<int>(p), static_cast<int>(q), target, (*ints)[p][q]);
      }
      b.sizes[p][q] = (*ints)[p][q].size();
    }
  }
  auto find = [&](std::size_t p, std::size_t q, std::vector<std::uint32_t> const& key) {
    std::uint32_t id = (*ints)[p][q].find(key);
    if (id == FlatInterner::kMissing) {
      throw std::logic_error("normed nerve structure map changed the total length");
    }
    return static_cast<std::int32_t>(id);
  };

  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t q = 0; q < nq; ++q) {
      if (!b.present(static_cast<int>(p), static_cast<int>(q))) {
        continue;
      }
      auto const&  in  = (*ints)[p][q];
      std::size_t  sz  = in.size();
      std::size_t  R   = q + 1;  // rows
      auto at = [&](std::span<std::uint32_t const> k, std::size_t i, std::size_t j) { return k[i * p + j]; };

      if (p >= 1) {
        for (std::size_t j = 0; j <= p; ++j) {
          GenMap f(sz, kZero);
          for (std::uint32_t g = 0; g < sz; ++g) {
            auto                       k = in.key(g);
            std::vector<std::uint32_t> out;
            out.reserve(R * (p - 1));
            if (j == 0 || j == p) {
              // drop an outer column, only if it has length 0
              std::size_t const c = j == 0 ? 0 : p - 1;
              bool              constant = true;
              for (std::size_t i = 0; i + 1 < R; ++i) {
                constant = constant && at(k, i, c) == at(k, i + 1, c);
              }
              if (!constant) {
                continue;
              }
              for (std::size_t i = 0; i < R; ++i) {
                for (std::size_t c2 = 0; c2 < p; ++c2) {
                  if (c2 != c) {
                    out.push_back(at(k, i, c2));
                  }
                }
              }
            } else {
              // multiply columns j-1 and j, only if every step stays additive
              bool ok = true;
              for (std::size_t i = 0; i + 1 < R && ok; ++i) {
                Elem u0 = at(k, i, j - 1), u1 = at(k, i + 1, j - 1);
                Elem v0 = at(k, i, j), v1 = at(k, i + 1, j);
                ok = m.d(G.mul(u0, v0), G.mul(u1, v1)) == m.d(u0, u1) + m.d(v0, v1);
              }
              if (!ok) {
                continue;
              }
              for (std::size_t i = 0; i < R; ++i) {
                for (std::size_t c2 = 0; c2 < p; ++c2) {
                  if (c2 == j - 1) {
                    out.push_back(G.mul(at(k, i, j - 1), at(k, i, j)));
                  } else if (c2 != j) {
                    out.push_back(at(k, i, c2));
                  }
                }
              }
            }
            f[g] = find(p - 1, q, out);
          }
          b.hface[p][q].push_back(std::move(f));
        }
      }
      if (q >= 1) {
        for (std::size_t i = 0; i <= q; ++i) {
          GenMap f(sz, kZero);
          for (std::uint32_t g = 0; g < sz; ++g) {
            auto k    = in.key(g);
            bool keep = true;
            for (std::size_t c = 0; c < p && keep; ++c) {
              if (i == 0) {
                keep = at(k, 0, c) == at(k, 1, c);
              } else if (i == q) {
                keep = at(k, q - 1, c) == at(k, q, c);
              } else {
                Elem x = at(k, i - 1, c), z = at(k, i, c), y = at(k, i + 1, c);
                keep   = m.d(x, y) == m.d(x, z) + m.d(z, y);
              }
            }
            if (!keep) {
              continue;
            }
            std::vector<std::uint32_t> out;
            out.reserve(q * p);
            for (std::size_t r = 0; r < R; ++r) {
              if (r != i) {
                for (std::size_t c = 0; c < p; ++c) {
                  out.push_back(at(k, r, c));
                }
              }
            }
            f[g] = find(p, q - 1, out);
          }
          b.vface[p][q].push_back(std::move(f));
        }
      }
      if (b.present(static_cast<int>(p) + 1, static_cast<int>(q))) {
        // identity column inserted at index j
        for (std::size_t j = 0; j <= p; ++j) {
          GenMap d(sz);
          for (std::uint32_t g = 0; g < sz; ++g) {
            auto                       k = in.key(g);
            std::vector<std::uint32_t> out;
            out.reserve(R * (p + 1));
            for (std::size_t i = 0; i < R; ++i) {
              for (std::size_t c = 0; c <= p; ++c) {
                if (c == j) {
                  out.push_back(G.e);
                }
                if (c < p) {
                  out.push_back(at(k, i, c));
                }
              }
            }
            d[g] = find(p + 1, q, out);
          }
          b.hdeg[p][q].push_back(std::move(d));
        }
      }
      if (b.present(static_cast<int>(p), static_cast<int>(q) + 1)) {
        // row i repeated
        for (std::size_t i = 0; i <= q; ++i) {
          GenMap d(sz);
          for (std::uint32_t g = 0; g < sz; ++g) {
            auto                       k = in.key(g);
            std::vector<std::uint32_t> out(k.begin(), k.end());
            out.insert(out.begin() + static_cast<std::ptrdiff_t>(i * p), k.begin() + static_cast<std::ptrdiff_t>(i * p),
                       k.begin() + static_cast<std::ptrdiff_t>((i + 1) * p));
            d[g] = find(p, q + 1, out);
          }
          b.vdeg[p][q].push_back(std::move(d));
        }
      }
    }
  }
  auto names = G.names;
  b.label    = [ints, names](int p, int q, std::size_t i) {
    auto        k = (*ints)[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)].key(static_cast<std::uint32_t>(i));
    std::string s = "[";
    for (std::size_t r = 0; r <= static_cast<std::size_t>(q); ++r) {
      if (r) {
        s += "; ";
      }
      for (std::size_t c = 0; c < static_cast<std::size_t>(p); ++c) {
        if (c) {
          s += " ";
        }
        s += names[k[r * static_cast<std::size_t>(p) + c]];
      }
    }
    return s + "]";
  };
  return b;
}

BasedChainComplex normed_group_complex(NormedGroup const& g, Rational const& grading, int max_degree,
                                       Route route, bool normalize_rows) {
  if (max_degree < 0) {
    throw std::invalid_argument("max_degree must be nonnegative");
  }
  Region const r = route == Route::diagonal ? square_region(max_degree) : tot_region(max_degree);
  return iterated_complex(double_nerve_normed_group(g, grading, r), route, normalize_rows);
}

GradedHomologyTable normed_group_homology(NormedGroup const& g, std::vector<Rational> const& gradings,
                                          int max_degree, Route route, bool normalize_rows) {
  GradedHomologyTable out;
  for (auto const& l : gradings) {
    out.emplace(l, homology_table(normed_group_complex(g, l, max_degree, route, normalize_rows),
                                  max_degree - 1));
  }
  return out;
}

ValidationReport check_adjacency_factorization(NormedGroup const& ng) {
  ScaledNorm const   m(ng);
  FiniteGroup const& G = ng.group;
  for (Elem g = 0; g < m.n; ++g) {
    for (Elem h = 0; h < m.n; ++h) {
      if (g == h) {
        continue;
      }
      bool between = false;
      for (Elem z = 0; z < m.n && !between; ++z) {
        between = z != g && z != h && m.d(g, h) == m.d(g, z) + m.d(z, h);
      }
      bool factors = false;
      for (Elem g0 = 0; g0 < m.n && !factors; ++g0) {
        Elem const g1 = G.mul(G.inv(g0), g);
        for (Elem h0 = 0; h0 < m.n && !factors; ++h0) {
          Elem const h1 = G.mul(G.inv(h0), h);
          factors = g0 != h0 && g1 != h1 && m.d(g, h) == m.d(g0, h0) + m.d(g1, h1);
        }
      }
      if (between != factors) {
        return ValidationReport::fail("pair (" + G.names[g] + ", " + G.names[h] + "): non-adjacent = "
                                      + (between ? "true" : "false") + ", factorizable = "
                                      + (factors ? "true" : "false"));
      }
    }
  }
  return ValidationReport::pass();
}

}  // namespace itermag
