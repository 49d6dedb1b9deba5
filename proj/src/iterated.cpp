#include "itermag/iterated.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "itermag/magnitude.hpp"
#include "itermag/oracles.hpp"

namespace itermag {

namespace {

BasedChainComplex chains(BasedSimplicialObject const& s, bool normalize) {
  return normalize ? normalized_chains(s) : unnormalized_chains(s);
}

// a + b on the same region; b's generators follow a's.
BasedBisimplicialObject direct_sum(BasedBisimplicialObject const& a, BasedBisimplicialObject const& b) {
  if (a.P != b.P || a.Q != b.Q || a.total_bound != b.total_bound) {
    throw std::invalid_argument("direct sum of bisimplicial objects on different regions");
  }
  BasedBisimplicialObject s;
  s.reset(a.P, a.Q, a.total_bound);
  auto const np = static_cast<std::size_t>(a.P + 1);
  auto const nq = static_cast<std::size_t>(a.Q + 1);
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t q = 0; q < nq; ++q) {
      s.sizes[p][q] = a.sizes[p][q] + b.sizes[p][q];
    }
  }
  auto merge = [](std::vector<GenMap> const& x, std::vector<GenMap> const& y, std::size_t shift) {
    std::vector<GenMap> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
      GenMap m = x[i];
      for (auto v : y[i]) {
        m.push_back(v == kZero ? kZero : v + static_cast<std::int32_t>(shift));
      }
      out.push_back(std::move(m));
    }
    return out;
  };
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t q = 0; q < nq; ++q) {
      if (p >= 1) {
        s.hface[p][q] = merge(a.hface[p][q], b.hface[p][q], a.sizes[p - 1][q]);
      }
      if (q >= 1) {
        s.vface[p][q] = merge(a.vface[p][q], b.vface[p][q], a.sizes[p][q - 1]);
      }
      if (p + 1 < np) {
        s.hdeg[p][q] = merge(a.hdeg[p][q], b.hdeg[p][q], a.sizes[p + 1][q]);
      }
      if (q + 1 < nq) {
        s.vdeg[p][q] = merge(a.vdeg[p][q], b.vdeg[p][q], a.sizes[p][q + 1]);
      }
    }
  }
  auto la = a.label, lb = b.label;
  auto sa = a.sizes;
  s.label = [la, lb, sa](int p, int q, std::size_t i) {
    std::size_t const na = sa[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
    return i < na ? la(p, q, i) : lb(p, q, i - na);
  };
  return s;
}

// All sizes zero, every structure map present and empty.
BasedBisimplicialObject empty_bisimplicial(Region const& r) {
  BasedBisimplicialObject b;
  b.reset(r.P, r.Q, r.bound);
  for (int p = 0; p <= r.P; ++p) {
    for (int q = 0; q <= r.Q; ++q) {
      if (!b.present(p, q)) {
        continue;
      }
      auto const up = static_cast<std::size_t>(p);
      auto const uq = static_cast<std::size_t>(q);
      if (p >= 1) {
        b.hface[up][uq].assign(up + 1, {});
      }
      if (q >= 1) {
        b.vface[up][uq].assign(uq + 1, {});
      }
      if (b.present(p + 1, q)) {
        b.hdeg[up][uq].assign(up + 1, {});
      }
      if (b.present(p, q + 1)) {
        b.vdeg[up][uq].assign(uq + 1, {});
      }
    }
  }
  b.label = [](int, int, std::size_t) { return std::string(); };
  return b;
}

bool same_table(HomologyTable const& a, HomologyTable const& b) {
  std::size_t const n = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    auto const x = k < a.size() ? a[k] : FgAbelianGroup::zero();
    auto const y = k < b.size() ? b[k] : FgAbelianGroup::zero();
    if (!(x == y)) {
      return false;
    }
  }
  return true;
}

KunnethReport compare(GradedHomologyTable direct, GradedHomologyTable predicted) {
  KunnethReport r;
  std::set<Rational> keys;
  for (auto const& [k, v] : direct) {
    keys.insert(k);
  }
  for (auto const& [k, v] : predicted) {
    keys.insert(k);
  }
  for (auto const& k : keys) {
    HomologyTable none;
    auto const&   a = direct.count(k) ? direct.at(k) : none;
    auto const&   b = predicted.count(k) ? predicted.at(k) : none;
    if (!same_table(a, b)) {
      r.ok      = false;
      r.message = "grading " + rational_to_string(k) + ": direct " + table_to_string(a) + ", predicted "
                  + table_to_string(b);
      break;
    }
  }
  r.direct    = std::move(direct);
  r.predicted = std::move(predicted);
  return r;
}

}  // namespace

BasedChainComplex iterated_complex(BasedBisimplicialObject const& b, Route route, bool normalize_rows) {
  if (route == Route::diagonal) {
    return chains(diagonal(b), normalize_rows);
  }
  return total_complex(normalize_rows ? row_normalize(b) : double_chains(b));
}

BasedChainComplex iterated_complex(StrictNCat const& x, int max_degree, Route route, bool normalize_rows) {
  MbEngine engine(x);
  if (route == Route::diagonal) {
    return chains(engine.simplicial(max_degree), normalize_rows);
  }
  return iterated_complex(engine.bisimplicial(tot_region(max_degree)), Route::tot, normalize_rows);
}

BasedBisimplicialObject metric_external_product(GenMetricSpace const& x, GenMetricSpace const& y,
                                                Rational const& grading, int max_degree) {
  auto out = empty_bisimplicial(square_region(max_degree));
  auto const ys = reachable_gradings(y, max_degree);
  bool       first = true;
  for (auto const& r : reachable_gradings(x, max_degree)) {
    Rational const s = grading - r;
    if (s < 0 || std::find(ys.begin(), ys.end(), s) == ys.end()) {
      continue;
    }
    auto part = external_product(metric_nerve(x, r, max_degree), metric_nerve(y, s, max_degree));
    out       = first ? std::move(part) : direct_sum(out, part);
    first     = false;
  }
  return out;
}

HomologyTable metric_product_homology(GenMetricSpace const& x, GenMetricSpace const& y,
                                      Rational const& grading, int max_degree, Route route,
                                      bool normalize_rows) {
  auto b = metric_external_product(x, y, grading, max_degree);
  return homology_table(iterated_complex(b, route, normalize_rows), max_degree - 1);
}

HomologyTable category_product_homology(FinCategory const& x, FinCategory const& y, int max_degree,
                                        Route route, bool normalize_rows) {
  auto b = external_product(nerve_category(x, max_degree), nerve_category(y, max_degree));
  return homology_table(iterated_complex(b, route, normalize_rows), max_degree - 1);
}

KunnethReport kunneth_check(GenMetricSpace const& x, GenMetricSpace const& y, int max_degree) {
  int const D      = max_degree + 1;
  auto      direct = graded_homology_table(magnitude_complex_metric(tensor_metric(x, y), D), max_degree);
  auto      hx     = graded_homology_table(magnitude_complex_metric(x, D), max_degree);
  auto      hy     = graded_homology_table(magnitude_complex_metric(y, D), max_degree);
  return compare(std::move(direct), oracle_kunneth(hx, hy));
}

KunnethReport kunneth_check(FinCategory const& x, FinCategory const& y, int max_degree) {
  int const D = max_degree + 1;
  auto h = [&](FinCategory const& c) {
    return homology_table(normalized_chains(nerve_category(c, D)), max_degree);
  };
  GradedHomologyTable direct{{Rational(0), h(product_category(x, y))}};
  GradedHomologyTable hx{{Rational(0), h(x)}};
  GradedHomologyTable hy{{Rational(0), h(y)}};
  return compare(std::move(direct), oracle_kunneth(hx, hy));
}

}  // namespace itermag
