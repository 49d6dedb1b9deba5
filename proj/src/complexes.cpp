#include "itermag/complexes.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "itermag/errors.hpp"

namespace itermag {

std::string BasedChainComplex::label_of(int degree, std::size_t index) const {
  if (label) {
    return label(degree, index);
  }
  return "e" + std::to_string(degree) + "_" + std::to_string(index);
}

BasedChainComplex zero_complex(int top, int faithful) {
  BasedChainComplex c;
  c.dims.assign(static_cast<std::size_t>(top + 1), 0);
  c.boundary.assign(static_cast<std::size_t>(top + 1), IntMatrix(0, 0));
  c.faithful_through = faithful;
  return c;
}

ValidationReport validate_complex(BasedChainComplex const& c) {
  if (c.boundary.size() != c.dims.size()) {
    return ValidationReport::fail("complex has " + std::to_string(c.dims.size())
                                  + " degrees but " + std::to_string(c.boundary.size())
                                  + " boundary matrices");
  }
  if (c.faithful_through > c.top_degree()) {
    return ValidationReport::fail("faithful degree exceeds top degree");
  }
  for (std::size_t k = 0; k < c.dims.size(); ++k) {
    std::size_t const want_rows = k == 0 ? 0 : c.dims[k - 1];
    if (c.boundary[k].rows() != want_rows || c.boundary[k].cols() != c.dims[k]) {
      return ValidationReport::fail("boundary in degree " + std::to_string(k) + " is "
                                    + std::to_string(c.boundary[k].rows()) + "x"
                                    + std::to_string(c.boundary[k].cols()) + ", expected "
                                    + std::to_string(want_rows) + "x"
                                    + std::to_string(c.dims[k]));
    }
  }
  for (std::size_t k = 2; k < c.dims.size(); ++k) {
    if (!(c.boundary[k - 1] * c.boundary[k]).is_zero()) {
      return ValidationReport::fail("d o d != 0 at degree " + std::to_string(k));
    }
  }
  return ValidationReport::pass();
}

int BasedDoubleComplex::complete_total_degree() const noexcept {
  return std::min({P, Q, total_bound});
}

ValidationReport validate_double_complex(BasedDoubleComplex const& b) {
  auto dim = [&](int p, int q) -> std::size_t {
    return b.present(p, q) ? b.dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] : 0;
  };
  auto where = [](int p, int q) {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  };
  if (b.dims.size() != static_cast<std::size_t>(b.P + 1)
      || b.horizontal.size() != b.dims.size() || b.vertical.size() != b.dims.size()) {
    return ValidationReport::fail("double complex tables do not match P");
  }
  for (int p = 0; p <= b.P; ++p) {
    auto const up = static_cast<std::size_t>(p);
    if (b.dims[up].size() != static_cast<std::size_t>(b.Q + 1)
        || b.horizontal[up].size() != b.dims[up].size()
        || b.vertical[up].size() != b.dims[up].size()) {
      return ValidationReport::fail("double complex tables do not match Q");
    }
    for (int q = 0; q <= b.Q; ++q) {
      if (!b.present(p, q)) {
        continue;
      }
      auto const  uq = static_cast<std::size_t>(q);
      auto const& h  = b.horizontal[up][uq];
      auto const& v  = b.vertical[up][uq];
      if (h.cols() != dim(p, q) || h.rows() != dim(p - 1, q)) {
        return ValidationReport::fail("horizontal map at " + where(p, q) + " has wrong shape");
      }
      if (v.cols() != dim(p, q) || v.rows() != dim(p, q - 1)) {
        return ValidationReport::fail("vertical map at " + where(p, q) + " has wrong shape");
      }
      if (p >= 2 && !(b.horizontal[up - 1][uq] * h).is_zero()) {
        return ValidationReport::fail("horizontal d o d != 0 at " + where(p, q));
      }
      if (q >= 2 && !(b.vertical[up][uq - 1] * v).is_zero()) {
        return ValidationReport::fail("vertical d o d != 0 at " + where(p, q));
      }
      if (p >= 1 && q >= 1
          && !(b.horizontal[up][uq - 1] * v == b.vertical[up - 1][uq] * h)) {
        return ValidationReport::fail("differentials do not commute at " + where(p, q));
      }
    }
  }
  return ValidationReport::pass();
}

BasedChainComplex total_complex(BasedDoubleComplex const& b) {
  // A genuinely bounded double complex contributes every present block.
  int const top = b.total_faithful_through ? std::min(b.P + b.Q, b.total_bound)
                                           : b.complete_total_degree();
  BasedChainComplex out;
  out.dims.assign(static_cast<std::size_t>(top + 1), 0);
  out.boundary.resize(static_cast<std::size_t>(top + 1));
  out.faithful_through = b.total_faithful_through ? std::min(*b.total_faithful_through, top) : top - 1;

  // offsets[n][p] = start of block (p, n-p) within Tot_n
  std::vector<std::vector<std::size_t>> offsets(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    auto& off = offsets[static_cast<std::size_t>(n)];
    off.assign(static_cast<std::size_t>(n + 1), 0);
    std::size_t acc = 0;
    for (int p = 0; p <= n; ++p) {
      off[static_cast<std::size_t>(p)] = acc;
      if (b.present(p, n - p)) {
        acc += b.dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(n - p)];
      }
    }
    out.dims[static_cast<std::size_t>(n)] = acc;
  }

  for (int n = 0; n <= top; ++n) {
    std::size_t const rows = n == 0 ? 0 : out.dims[static_cast<std::size_t>(n - 1)];
    IntMatrix         d(rows, out.dims[static_cast<std::size_t>(n)]);
    for (int p = 0; p <= n; ++p) {
      int const q = n - p;
      if (!b.present(p, q)) {
        continue;
      }
      auto const  up = static_cast<std::size_t>(p);
      auto const  uq = static_cast<std::size_t>(q);
      auto const& h  = b.horizontal[up][uq];
      auto const& v  = b.vertical[up][uq];
      std::size_t base = offsets[static_cast<std::size_t>(n)][up];
      for (std::size_t i = 0; i < b.dims[up][uq]; ++i) {
        IntMatrix::Column col;
        if (p > 0) {
          std::size_t const to = offsets[static_cast<std::size_t>(n - 1)][up - 1];
          for (auto const& [r, val] : h.column(i)) {
            col.emplace_back(static_cast<std::uint32_t>(to + r), val);
          }
        }
        if (q > 0) {
          std::size_t const to = offsets[static_cast<std::size_t>(n - 1)][up];
          for (auto const& [r, val] : v.column(i)) {
            col.emplace_back(static_cast<std::uint32_t>(to + r), p % 2 == 0 ? val : Integer(-val));
          }
        }
        d.set_column(base + i, std::move(col));
      }
    }
    out.boundary[static_cast<std::size_t>(n)] = std::move(d);
  }

  if (b.label) {
    auto offs  = offsets;
    auto lab   = b.label;
    out.label  = [offs, lab](int n, std::size_t idx) {
      auto const& off = offs[static_cast<std::size_t>(n)];
      std::size_t p   = static_cast<std::size_t>(
          std::upper_bound(off.begin(), off.end(), idx) - off.begin() - 1);
      return lab(static_cast<int>(p), n - static_cast<int>(p), idx - off[p]);
    };
  }
  return out;
}

namespace {
int effective_top(BasedChainComplex const& c) {
  return c.faithful_through >= c.top_degree() ? std::numeric_limits<int>::max()
                                              : c.top_degree();
}
int effective_faithful(BasedChainComplex const& c) {
  return c.faithful_through >= c.top_degree() ? std::numeric_limits<int>::max()
                                              : c.faithful_through;
}
}  // namespace

BasedChainComplex tensor_complex(BasedChainComplex const& c, BasedChainComplex const& d) {
  int const tc  = c.top_degree();
  int const td  = d.top_degree();
  int       top = std::min({effective_top(c), effective_top(d), tc + td});
  if (tc < 0 || td < 0) {
    top = -1;
  }
  int faithful = std::min(effective_faithful(c), effective_faithful(d));
  if (faithful == std::numeric_limits<int>::max()) {
    faithful = top;
  }

  BasedChainComplex out;
  out.dims.assign(static_cast<std::size_t>(top + 1), 0);
  out.boundary.resize(static_cast<std::size_t>(top + 1));
  out.faithful_through = std::min(faithful, top);

  auto cdim = [&](int j) { return j >= 0 && j <= tc ? c.dims[static_cast<std::size_t>(j)] : 0; };
  auto ddim = [&](int k) { return k >= 0 && k <= td ? d.dims[static_cast<std::size_t>(k)] : 0; };

  std::vector<std::vector<std::size_t>> offsets(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    auto& off = offsets[static_cast<std::size_t>(n)];
    off.assign(static_cast<std::size_t>(n + 1), 0);
    std::size_t acc = 0;
    for (int j = 0; j <= n; ++j) {
      off[static_cast<std::size_t>(j)] = acc;
      acc += cdim(j) * ddim(n - j);
    }
    out.dims[static_cast<std::size_t>(n)] = acc;
  }

  for (int n = 0; n <= top; ++n) {
    auto const  un   = static_cast<std::size_t>(n);
    std::size_t rows = n == 0 ? 0 : out.dims[un - 1];
    IntMatrix   m(rows, out.dims[un]);
    for (int j = 0; j <= n; ++j) {
      int const         k  = n - j;
      std::size_t const nc = cdim(j);
      std::size_t const nd = ddim(k);
      for (std::size_t ic = 0; ic < nc; ++ic) {
        for (std::size_t id = 0; id < nd; ++id) {
          IntMatrix::Column col;
          if (j > 0) {
            std::size_t const to = offsets[un - 1][static_cast<std::size_t>(j - 1)];
            for (auto const& [r, v] : c.boundary[static_cast<std::size_t>(j)].column(ic)) {
              col.emplace_back(static_cast<std::uint32_t>(to + r * nd + id), v);
            }
          }
          if (k > 0) {
            std::size_t const to  = offsets[un - 1][static_cast<std::size_t>(j)];
            std::size_t const nd1 = ddim(k - 1);
            for (auto const& [r, v] : d.boundary[static_cast<std::size_t>(k)].column(id)) {
              col.emplace_back(static_cast<std::uint32_t>(to + ic * nd1 + r),
                               j % 2 == 0 ? v : Integer(-v));
            }
          }
          m.set_column(offsets[un][static_cast<std::size_t>(j)] + ic * nd + id,
                       std::move(col));
        }
      }
    }
    out.boundary[un] = std::move(m);
  }

  auto cc   = std::make_shared<BasedChainComplex>(c);
  auto dd   = std::make_shared<BasedChainComplex>(d);
  out.label = [cc, dd, offsets](int n, std::size_t idx) {
    auto const& off = offsets[static_cast<std::size_t>(n)];
    for (int j = n; j >= 0; --j) {
      std::size_t const start = off[static_cast<std::size_t>(j)];
      int const         k     = n - j;
      std::size_t const nd    = k <= dd->top_degree() ? dd->dims[static_cast<std::size_t>(k)] : 0;
      std::size_t const nc    = j <= cc->top_degree() ? cc->dims[static_cast<std::size_t>(j)] : 0;
      if (idx >= start && idx < start + nc * nd) {
        std::size_t const local = idx - start;
        return "(" + cc->label_of(j, local / nd) + ", " + dd->label_of(k, local % nd) + ")";
      }
    }
    return std::string("?");
  };
  return out;
}

BasedChainComplex direct_sum_complex(BasedChainComplex const& a, BasedChainComplex const& b) {
  int top = std::min(effective_top(a), effective_top(b));
  if (top == std::numeric_limits<int>::max()) {
    top = std::max(a.top_degree(), b.top_degree());
  }
  int faithful = std::min(effective_faithful(a), effective_faithful(b));
  if (faithful == std::numeric_limits<int>::max()) {
    faithful = top;
  }
  auto adim = [&](int k) { return k <= a.top_degree() ? a.dims[static_cast<std::size_t>(k)] : 0; };
  auto bdim = [&](int k) { return k <= b.top_degree() ? b.dims[static_cast<std::size_t>(k)] : 0; };

  BasedChainComplex out;
  out.faithful_through = std::min(faithful, top);
  out.dims.resize(static_cast<std::size_t>(top + 1));
  out.boundary.resize(static_cast<std::size_t>(top + 1));
  for (int k = 0; k <= top; ++k) {
    auto const uk = static_cast<std::size_t>(k);
    out.dims[uk]  = adim(k) + bdim(k);
    std::size_t const rows = k == 0 ? 0 : adim(k - 1) + bdim(k - 1);
    IntMatrix         m(rows, out.dims[uk]);
    for (std::size_t i = 0; i < adim(k); ++i) {
      m.set_column(i, a.boundary[uk].column(i));
    }
    for (std::size_t i = 0; i < bdim(k); ++i) {
      IntMatrix::Column col;
      for (auto const& [r, v] : b.boundary[uk].column(i)) {
        col.emplace_back(static_cast<std::uint32_t>(r + adim(k - 1)), v);
      }
      m.set_column(adim(k) + i, std::move(col));
    }
    out.boundary[uk] = std::move(m);
  }
  auto aa   = std::make_shared<BasedChainComplex>(a);
  auto bb   = std::make_shared<BasedChainComplex>(b);
  out.label = [aa, bb](int k, std::size_t idx) {
    std::size_t const na = k <= aa->top_degree() ? aa->dims[static_cast<std::size_t>(k)] : 0;
    return idx < na ? aa->label_of(k, idx) : bb->label_of(k, idx - na);
  };
  return out;
}

GradedChainComplex graded_tensor(GradedChainComplex const& c, GradedChainComplex const& d) {
  GradedChainComplex out;
  for (auto const& [r, cr] : c) {
    for (auto const& [s, ds] : d) {
      Rational          l     = r + s;
      BasedChainComplex piece = tensor_complex(cr, ds);
      auto              it    = out.find(l);
      if (it == out.end()) {
        out.emplace(l, std::move(piece));
      } else {
        it->second = direct_sum_complex(it->second, piece);
      }
    }
  }
  return out;
}

HomologyTable homology_table(BasedChainComplex const& c, int max_degree) {
  if (max_degree < 0) {
    return {};
  }
  bool const complete = c.faithful_through >= c.top_degree();
  if (!complete && max_degree > c.faithful_through) {
    std::ostringstream os;
    os << "homology in degree " << max_degree << " needs a construction faithful through "
       << "that degree; this complex is faithful only through degree " << c.faithful_through
       << " (rebuild with max degree >= " << max_degree << ")";
    throw TruncationError(os.str(), max_degree);
  }
  int const              top = c.top_degree();
  std::vector<SmithForm> snf(static_cast<std::size_t>(max_degree + 2));
  for (int k = 1; k <= std::min(max_degree + 1, top); ++k) {
    if (k >= 2 && !(c.boundary[static_cast<std::size_t>(k - 1)]
                    * c.boundary[static_cast<std::size_t>(k)])
                       .is_zero()) {
      throw InvalidComplex("d o d != 0 at degree " + std::to_string(k));
    }
    snf[static_cast<std::size_t>(k)] = smith_normal_form(c.boundary[static_cast<std::size_t>(k)]);
  }
  HomologyTable out;
  for (int k = 0; k <= max_degree; ++k) {
    std::size_t const n = k <= top ? c.dims[static_cast<std::size_t>(k)] : 0;
    out.push_back(homology_from_smith(n, snf[static_cast<std::size_t>(k)],
                                      snf[static_cast<std::size_t>(k + 1)]));
  }
  return out;
}

GradedHomologyTable graded_homology_table(GradedChainComplex const& c, int max_degree) {
  GradedHomologyTable out;
  for (auto const& [l, piece] : c) {
    out.emplace(l, homology_table(piece, max_degree));
  }
  return out;
}

std::string table_to_string(HomologyTable const& t) {
  std::string s;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) {
      s += ", ";
    }
    s += t[k].to_string();
  }
  return s;
}

}  // namespace itermag
