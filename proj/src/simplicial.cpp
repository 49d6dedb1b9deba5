#include "itermag/simplicial.hpp"

#include <memory>
#include <string>

#include "itermag/errors.hpp"

namespace itermag {

namespace {

std::int32_t apply(GenMap const& m, std::int32_t g) { return g == kZero ? kZero : m[static_cast<std::size_t>(g)]; }

// Simplicial identities for one simplicial direction. `has(n)` says whether
// degree n exists, face(n, i) is the map out of degree n, deg(n, i) the map
// out of degree n into n+1 (only consulted when has(n+1)).
template <class Has, class Size, class Face, class Deg>
ValidationReport check_identities(int max_n, Has has, Size size, Face face, Deg deg,
                                  std::string const& where) {
  auto fail = [&](std::string const& what, int n, std::size_t g) {
    return ValidationReport::fail(where + ": " + what + " fails on generator " + std::to_string(g)
                                  + " in degree " + std::to_string(n));
  };
  for (int n = 0; n <= max_n; ++n) {
    if (!has(n)) {
      continue;
    }
    std::size_t const count = size(n);
    // Shapes.
    if (n >= 1) {
      for (int i = 0; i <= n; ++i) {
        GenMap const& f = face(n, i);
        if (f.size() != count) {
          return ValidationReport::fail(where + ": face table has wrong size in degree "
                                        + std::to_string(n));
        }
        for (auto x : f) {
          if (x != kZero && (x < 0 || static_cast<std::size_t>(x) >= size(n - 1))) {
            return ValidationReport::fail(where + ": face leaves the basis in degree "
                                          + std::to_string(n));
          }
        }
      }
    }
    if (has(n + 1)) {
      for (int i = 0; i <= n; ++i) {
        GenMap const& s = deg(n, i);
        if (s.size() != count) {
          return ValidationReport::fail(where + ": degeneracy table has wrong size in degree "
                                        + std::to_string(n));
        }
        std::vector<char> hit(size(n + 1), 0);
        for (auto x : s) {
          if (x < 0 || static_cast<std::size_t>(x) >= size(n + 1)) {
            return ValidationReport::fail(where + ": degeneracy leaves the basis in degree "
                                          + std::to_string(n));
          }
          if (hit[static_cast<std::size_t>(x)]++) {
            return ValidationReport::fail(where + ": degeneracy not injective in degree "
                                          + std::to_string(n));
          }
        }
      }
    }
    for (std::size_t gi = 0; gi < count; ++gi) {
      auto const g = static_cast<std::int32_t>(gi);
      if (n >= 2) {
        for (int j = 1; j <= n; ++j) {
          for (int i = 0; i < j; ++i) {
            if (apply(face(n - 1, i), apply(face(n, j), g))
                != apply(face(n - 1, j - 1), apply(face(n, i), g))) {
              return fail("d_i d_j = d_{j-1} d_i (i=" + std::to_string(i)
                              + ", j=" + std::to_string(j) + ")",
                          n, gi);
            }
          }
        }
      }
      if (has(n + 1)) {
        for (int j = 0; j <= n; ++j) {
          std::int32_t const s = apply(deg(n, j), g);
          for (int i = 0; i <= n + 1; ++i) {
            std::int32_t const lhs = apply(face(n + 1, i), s);
            std::int32_t       rhs = 0;
            if (i == j || i == j + 1) {
              rhs = g;
            } else if (i < j) {
              rhs = apply(deg(n - 1, j - 1), apply(face(n, i), g));
            } else {
              rhs = apply(deg(n - 1, j), apply(face(n, i - 1), g));
            }
            if (lhs != rhs) {
              return fail("face/degeneracy identity (i=" + std::to_string(i)
                              + ", j=" + std::to_string(j) + ")",
                          n, gi);
            }
          }
        }
        if (has(n + 2)) {
          for (int j = 0; j <= n; ++j) {
            for (int i = 0; i <= j; ++i) {
              if (apply(deg(n + 1, i), apply(deg(n, j), g))
                  != apply(deg(n + 1, j + 1), apply(deg(n, i), g))) {
                return fail("s_i s_j = s_{j+1} s_i", n, gi);
              }
            }
          }
        }
      }
    }
  }
  return ValidationReport::pass();
}

IntMatrix alternating_sum(std::vector<GenMap> const& faces, std::size_t rows, std::size_t cols,
                          std::vector<std::int32_t> const* row_map = nullptr,
                          std::vector<std::size_t> const* col_list = nullptr) {
  std::size_t const ncols = col_list ? col_list->size() : cols;
  IntMatrix         m(rows, ncols);
  for (std::size_t c = 0; c < ncols; ++c) {
    std::size_t const g = col_list ? (*col_list)[c] : c;
    IntMatrix::Column col;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      std::int32_t t = faces[i][g];
      if (t == kZero) {
        continue;
      }
      if (row_map) {
        t = (*row_map)[static_cast<std::size_t>(t)];
        if (t < 0) {
          continue;  // lands on a degenerate generator
        }
      }
      col.emplace_back(static_cast<std::uint32_t>(t), i % 2 == 0 ? 1 : -1);
    }
    m.set_column(c, std::move(col));
  }
  return m;
}

}  // namespace

ValidationReport validate_simplicial(BasedSimplicialObject const& s) {
  int const D = s.top_degree();
  if (s.face.size() != s.sizes.size() || s.degeneracy.size() != s.sizes.size()) {
    return ValidationReport::fail("simplicial tables do not match the degree range");
  }
  for (int n = 0; n <= D; ++n) {
    auto const un = static_cast<std::size_t>(n);
    if (s.face[un].size() != (n == 0 ? 0u : un + 1)
        || s.degeneracy[un].size() != (n == D ? 0u : un + 1)) {
      return ValidationReport::fail("wrong number of face/degeneracy maps in degree "
                                    + std::to_string(n));
    }
  }
  return check_identities(
      D, [&](int n) { return n >= 0 && n <= D; },
      [&](int n) { return s.sizes[static_cast<std::size_t>(n)]; },
      [&](int n, int i) -> GenMap const& {
        return s.face[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
      },
      [&](int n, int i) -> GenMap const& {
        return s.degeneracy[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
      },
      "simplicial object");
}

BasedChainComplex unnormalized_chains(BasedSimplicialObject const& s) {
  BasedChainComplex c;
  int const         D = s.top_degree();
  c.dims            = s.sizes;
  c.boundary.resize(s.sizes.size());
  c.faithful_through = D - 1;
  if (D >= 0) {
    c.boundary[0] = IntMatrix(0, s.sizes[0]);
  }
  for (int n = 1; n <= D; ++n) {
    auto const un = static_cast<std::size_t>(n);
    c.boundary[un] = alternating_sum(s.face[un], s.sizes[un - 1], s.sizes[un]);
  }
  c.label = s.label;
  return c;
}

std::vector<std::size_t> nondegenerate(BasedSimplicialObject const& s, int n) {
  auto const        un = static_cast<std::size_t>(n);
  std::vector<char> degenerate(s.sizes[un], 0);
  if (n >= 1) {
    for (auto const& sigma : s.degeneracy[un - 1]) {
      for (auto x : sigma) {
        if (x < 0 || static_cast<std::size_t>(x) >= s.sizes[un]) {
          throw ValidationError("degeneracy image outside the basis in degree "
                                + std::to_string(n));
        }
        degenerate[static_cast<std::size_t>(x)] = 1;
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < s.sizes[un]; ++g) {
    if (!degenerate[g]) {
      out.push_back(g);
    }
  }
  return out;
}

BasedChainComplex normalized_chains(BasedSimplicialObject const& s) {
  int const                             D = s.top_degree();
  BasedChainComplex                     c;
  std::vector<std::vector<std::size_t>> keep(static_cast<std::size_t>(D + 1));
  std::vector<std::vector<std::int32_t>> remap(static_cast<std::size_t>(D + 1));
  for (int n = 0; n <= D; ++n) {
    auto const un = static_cast<std::size_t>(n);
    keep[un]      = nondegenerate(s, n);
    remap[un].assign(s.sizes[un], -1);
    for (std::size_t k = 0; k < keep[un].size(); ++k) {
      remap[un][keep[un][k]] = static_cast<std::int32_t>(k);
    }
    c.dims.push_back(keep[un].size());
  }
  c.boundary.resize(c.dims.size());
  c.faithful_through = D - 1;
  if (D >= 0) {
    c.boundary[0] = IntMatrix(0, c.dims[0]);
  }
  for (int n = 1; n <= D; ++n) {
    auto const un = static_cast<std::size_t>(n);
    c.boundary[un] =
        alternating_sum(s.face[un], c.dims[un - 1], s.sizes[un], &remap[un - 1], &keep[un]);
  }
  if (s.label) {
    auto kept = std::make_shared<std::vector<std::vector<std::size_t>>>(std::move(keep));
    auto lab  = s.label;
    c.label   = [kept, lab](int n, std::size_t i) {
      return lab(n, (*kept)[static_cast<std::size_t>(n)][i]);
    };
  }
  return c;
}

void BasedBisimplicialObject::reset(int p_max, int q_max, int bound) {
  P           = p_max;
  Q           = q_max;
  total_bound = bound;
  auto grid   = [&](auto& t) {
    t.assign(static_cast<std::size_t>(P + 1), {});
    for (auto& row : t) {
      row.resize(static_cast<std::size_t>(Q + 1));
    }
  };
  grid(sizes);
  grid(hface);
  grid(vface);
  grid(hdeg);
  grid(vdeg);
}

ValidationReport validate_bisimplicial(BasedBisimplicialObject const& b) {
  auto sz = [&](int p, int q) -> std::size_t {
    return b.present(p, q) ? b.sizes[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] : 0;
  };
  auto at = [](auto const& t, int p, int q, int i) -> GenMap const& {
    return t[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)][static_cast<std::size_t>(i)];
  };
  for (int p = 0; p <= b.P; ++p) {
    for (int q = 0; q <= b.Q; ++q) {
      if (!b.present(p, q)) {
        continue;
      }
      auto const up = static_cast<std::size_t>(p);
      auto const uq = static_cast<std::size_t>(q);
      if (b.hface[up][uq].size() != (p == 0 ? 0u : up + 1)
          || b.vface[up][uq].size() != (q == 0 ? 0u : uq + 1)
          || b.hdeg[up][uq].size() != (b.present(p + 1, q) ? up + 1 : 0u)
          || b.vdeg[up][uq].size() != (b.present(p, q + 1) ? uq + 1 : 0u)) {
        return ValidationReport::fail("wrong number of maps at (" + std::to_string(p) + ","
                                      + std::to_string(q) + ")");
      }
    }
  }
  // Rows.
  for (int q = 0; q <= b.Q; ++q) {
    auto r = check_identities(
        b.P, [&](int p) { return b.present(p, q); }, [&](int p) { return sz(p, q); },
        [&](int p, int i) -> GenMap const& { return at(b.hface, p, q, i); },
        [&](int p, int i) -> GenMap const& { return at(b.hdeg, p, q, i); },
        "row " + std::to_string(q));
    if (!r) {
      return r;
    }
  }
  for (int p = 0; p <= b.P; ++p) {
    auto r = check_identities(
        b.Q, [&](int q) { return b.present(p, q); }, [&](int q) { return sz(p, q); },
        [&](int q, int i) -> GenMap const& { return at(b.vface, p, q, i); },
        [&](int q, int i) -> GenMap const& { return at(b.vdeg, p, q, i); },
        "column " + std::to_string(p));
    if (!r) {
      return r;
    }
  }
  // Horizontal and vertical structure commute.
  for (int p = 0; p <= b.P; ++p) {
    for (int q = 0; q <= b.Q; ++q) {
      if (!b.present(p, q)) {
        continue;
      }
      std::string const where = " at (" + std::to_string(p) + "," + std::to_string(q) + ")";
      for (std::size_t gi = 0; gi < sz(p, q); ++gi) {
        auto const g = static_cast<std::int32_t>(gi);
        for (int i = 0; i <= p; ++i) {
          for (int j = 0; j <= q; ++j) {
            if (p >= 1 && q >= 1
                && apply(at(b.hface, p, q - 1, i), apply(at(b.vface, p, q, j), g))
                       != apply(at(b.vface, p - 1, q, j), apply(at(b.hface, p, q, i), g))) {
              return ValidationReport::fail("horizontal and vertical faces do not commute"
                                            + where);
            }
            if (b.present(p + 1, q + 1)
                && apply(at(b.hdeg, p, q + 1, i), apply(at(b.vdeg, p, q, j), g))
                       != apply(at(b.vdeg, p + 1, q, j), apply(at(b.hdeg, p, q, i), g))) {
              return ValidationReport::fail("horizontal and vertical degeneracies do not commute"
                                            + where);
            }
            if (p >= 1 && b.present(p, q + 1)
                && apply(at(b.hface, p, q + 1, i), apply(at(b.vdeg, p, q, j), g))
                       != apply(at(b.vdeg, p - 1, q, j), apply(at(b.hface, p, q, i), g))) {
              return ValidationReport::fail(
                  "horizontal faces do not commute with vertical degeneracies" + where);
            }
            if (q >= 1 && b.present(p + 1, q)
                && apply(at(b.vface, p + 1, q, j), apply(at(b.hdeg, p, q, i), g))
                       != apply(at(b.hdeg, p, q - 1, i), apply(at(b.vface, p, q, j), g))) {
              return ValidationReport::fail(
                  "vertical faces do not commute with horizontal degeneracies" + where);
            }
          }
        }
      }
    }
  }
  return ValidationReport::pass();
}

BasedSimplicialObject diagonal(BasedBisimplicialObject const& b) {
  if (b.P != b.Q || b.total_bound < 2 * b.P) {
    throw std::invalid_argument("diagonal: bisimplicial object is not built on a square region");
  }
  int const             D = b.P;
  BasedSimplicialObject s;
  s.sizes.resize(static_cast<std::size_t>(D + 1));
  s.face.resize(s.sizes.size());
  s.degeneracy.resize(s.sizes.size());
  for (int n = 0; n <= D; ++n) {
    auto const un = static_cast<std::size_t>(n);
    s.sizes[un]   = b.sizes[un][un];
    if (n >= 1) {
      for (std::size_t i = 0; i <= un; ++i) {
        GenMap const& v = b.vface[un][un][i];
        GenMap const& h = b.hface[un][un - 1][i];
        GenMap        f(s.sizes[un]);
        for (std::size_t g = 0; g < f.size(); ++g) {
          f[g] = apply(h, v[g]);
        }
        s.face[un].push_back(std::move(f));
      }
    }
    if (n < D) {
      for (std::size_t i = 0; i <= un; ++i) {
        GenMap const& v = b.vdeg[un][un][i];
        GenMap const& h = b.hdeg[un][un + 1][i];
        GenMap        d(s.sizes[un]);
        for (std::size_t g = 0; g < d.size(); ++g) {
          d[g] = apply(h, v[g]);
        }
        s.degeneracy[un].push_back(std::move(d));
      }
    }
  }
  if (b.label) {
    auto lab = b.label;
    s.label  = [lab](int n, std::size_t i) { return lab(n, n, i); };
  }
  return s;
}

namespace {

BasedDoubleComplex assemble(BasedBisimplicialObject const& b, bool normalize_rows) {
  BasedDoubleComplex d;
  d.P           = b.P;
  d.Q           = b.Q;
  d.total_bound = b.total_bound;
  auto const np = static_cast<std::size_t>(b.P + 1);
  auto const nq = static_cast<std::size_t>(b.Q + 1);
  d.dims.assign(np, std::vector<std::size_t>(nq, 0));
  d.horizontal.assign(np, std::vector<IntMatrix>(nq));
  d.vertical.assign(np, std::vector<IntMatrix>(nq));

  // keep[p][q]: generators kept; remap: old index -> new index or -1.
  std::vector<std::vector<std::vector<std::size_t>>>  keep(np, std::vector<std::vector<std::size_t>>(nq));
  std::vector<std::vector<std::vector<std::int32_t>>> remap(np, std::vector<std::vector<std::int32_t>>(nq));
  for (int p = 0; p <= b.P; ++p) {
    for (int q = 0; q <= b.Q; ++q) {
      if (!b.present(p, q)) {
        continue;
      }
      auto const        up = static_cast<std::size_t>(p);
      auto const        uq = static_cast<std::size_t>(q);
      std::size_t const n  = b.sizes[up][uq];
      std::vector<char> degenerate(n, 0);
      if (normalize_rows && p >= 1) {
        for (auto const& sigma : b.hdeg[up - 1][uq]) {
          for (auto x : sigma) {
            if (x < 0 || static_cast<std::size_t>(x) >= n) {
              throw ValidationError("horizontal degeneracy leaves the basis");
            }
            degenerate[static_cast<std::size_t>(x)] = 1;
          }
        }
      }
      remap[up][uq].assign(n, -1);
      for (std::size_t g = 0; g < n; ++g) {
        if (!degenerate[g]) {
          remap[up][uq][g] = static_cast<std::int32_t>(keep[up][uq].size());
          keep[up][uq].push_back(g);
        }
      }
      d.dims[up][uq] = keep[up][uq].size();
    }
  }
  for (int p = 0; p <= b.P; ++p) {
    for (int q = 0; q <= b.Q; ++q) {
      if (!b.present(p, q)) {
        continue;
      }
      auto const up = static_cast<std::size_t>(p);
      auto const uq = static_cast<std::size_t>(q);
      if (p >= 1) {
        d.horizontal[up][uq] = alternating_sum(b.hface[up][uq], d.dims[up - 1][uq], 0,
                                               &remap[up - 1][uq], &keep[up][uq]);
      } else {
        d.horizontal[up][uq] = IntMatrix(0, d.dims[up][uq]);
      }
      if (q >= 1) {
        d.vertical[up][uq] = alternating_sum(b.vface[up][uq], d.dims[up][uq - 1], 0,
                                             &remap[up][uq - 1], &keep[up][uq]);
      } else {
        d.vertical[up][uq] = IntMatrix(0, d.dims[up][uq]);
      }
    }
  }
  if (b.label) {
    auto kept = std::make_shared<decltype(keep)>(std::move(keep));
    auto lab  = b.label;
    d.label   = [kept, lab](int p, int q, std::size_t i) {
      return lab(p, q, (*kept)[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)][i]);
    };
  }
  return d;
}

}  // namespace

BasedDoubleComplex double_chains(BasedBisimplicialObject const& b) { return assemble(b, false); }

BasedDoubleComplex row_normalize(BasedBisimplicialObject const& b) { return assemble(b, true); }

BasedBisimplicialObject external_product(BasedSimplicialObject const& s,
                                         BasedSimplicialObject const& t) {
  int const               D = std::min(s.top_degree(), t.top_degree());
  BasedBisimplicialObject b;
  b.reset(D, D, 2 * D);
  for (int p = 0; p <= D; ++p) {
    for (int q = 0; q <= D; ++q) {
      auto const        up = static_cast<std::size_t>(p);
      auto const        uq = static_cast<std::size_t>(q);
      std::size_t const ns = s.sizes[up];
      std::size_t const nt = t.sizes[uq];
      b.sizes[up][uq]      = ns * nt;
      auto pair_map = [&](GenMap const* on_s, GenMap const* on_t, std::size_t nt_out) {
        GenMap m(ns * nt);
        for (std::size_t a = 0; a < ns; ++a) {
          for (std::size_t c = 0; c < nt; ++c) {
            std::int32_t x = on_s ? (*on_s)[a] : static_cast<std::int32_t>(a);
            std::int32_t y = on_t ? (*on_t)[c] : static_cast<std::int32_t>(c);
            m[a * nt + c]  = (x == kZero || y == kZero)
                                 ? kZero
                                 : static_cast<std::int32_t>(static_cast<std::size_t>(x) * nt_out
                                                             + static_cast<std::size_t>(y));
          }
        }
        return m;
      };
      if (p >= 1) {
        for (std::size_t i = 0; i <= up; ++i) {
          b.hface[up][uq].push_back(pair_map(&s.face[up][i], nullptr, nt));
        }
      }
      if (q >= 1) {
        for (std::size_t j = 0; j <= uq; ++j) {
          b.vface[up][uq].push_back(pair_map(nullptr, &t.face[uq][j], t.sizes[uq - 1]));
        }
      }
      if (p < D) {
        for (std::size_t i = 0; i <= up; ++i) {
          b.hdeg[up][uq].push_back(pair_map(&s.degeneracy[up][i], nullptr, nt));
        }
      }
      if (q < D) {
        for (std::size_t j = 0; j <= uq; ++j) {
          b.vdeg[up][uq].push_back(pair_map(nullptr, &t.degeneracy[uq][j], t.sizes[uq + 1]));
        }
      }
    }
  }
  auto ss = std::make_shared<BasedSimplicialObject>(s);
  auto tt = std::make_shared<BasedSimplicialObject>(t);
  b.label = [ss, tt](int p, int q, std::size_t i) {
    std::size_t const nt = tt->sizes[static_cast<std::size_t>(q)];
    auto name = [](BasedSimplicialObject const& x, int n, std::size_t k) {
      return x.label ? x.label(n, k) : std::to_string(k);
    };
    return "(" + name(*ss, p, i / nt) + ", " + name(*tt, q, i % nt) + ")";
  };
  return b;
}

}  // namespace itermag
