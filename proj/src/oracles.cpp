#include "itermag/oracles.hpp"

#include <algorithm>
#include <stdexcept>

#include "itermag/magnitude.hpp"
#include "itermag/simplicial.hpp"

namespace itermag {

FgAbelianGroup oracle_mh1_metric(GenMetricSpace const& x, Rational const& ell) {
  std::size_t const n     = x.size();
  std::size_t       count = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || x.d[a][b].is_infinite() || x.d[a][b].value() != ell) {
        continue;
      }
      bool adjacent = true;
      for (std::size_t z = 0; z < n && adjacent; ++z) {
        if (z != a && z != b && x.d[a][z].is_finite() && x.d[z][b].is_finite()
            && x.d[a][z].value() + x.d[z][b].value() == ell) {
          adjacent = false;
        }
      }
      count += adjacent ? 1 : 0;
    }
  }
  return FgAbelianGroup::free(count);
}

FgAbelianGroup abelianization(FiniteGroup const& g) {
  std::size_t const n = g.order();
  IntMatrix         rel(n, n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      std::size_t const c = static_cast<std::size_t>(a) * n + b;
      rel.add_to(a, c, 1);
      rel.add_to(b, c, 1);
      rel.add_to(g.mul(a, b), c, -1);
    }
  }
  return homology_between(IntMatrix(0, n), rel);
}

std::pair<FgAbelianGroup, FgAbelianGroup> oracle_mh01_catgroup(CatGroup const& g) {
  return {FgAbelianGroup::free(1), abelianization(component_group(g).quotient.group)};
}

FgAbelianGroup oracle_mh2_normed(NormedGroup const& ng, Rational const& ell) {
  if (ell <= 0) {
    throw std::invalid_argument("the indecomposable count needs a positive grading");
  }
  FiniteGroup const& G = ng.group;
  std::size_t const  n = G.order();
  std::vector<char>  indecomposable(n, 0);
  for (Elem g = 0; g < n; ++g) {
    if (g == G.e || ng.norm[g] != ell) {
      continue;
    }
    bool ok = true;
    for (Elem h = 0; h < n && ok; ++h) {
      if (h != G.e && h != g && ng.norm[h] + ng.norm[G.mul(G.inv(h), g)] == ng.norm[g]) {
        ok = false;
      }
    }
    indecomposable[g] = ok ? 1 : 0;
  }
  std::vector<char> seen(n, 0);
  std::size_t       classes = 0;
  for (Elem g = 0; g < n; ++g) {
    if (!indecomposable[g] || seen[g]) {
      continue;
    }
    ++classes;
    for (Elem k = 0; k < n; ++k) {
      seen[G.conj(k, g)] = 1;
    }
  }
  return FgAbelianGroup::free(classes);
}

HomologyTable oracle_group_homology(FiniteGroup const& g, int max_degree) {
  auto c = normalized_chains(nerve_category(group_as_category(g), max_degree + 1));
  return homology_table(c, max_degree);
}

HomologyTable oracle_suspension(HomologyTable const& x) {
  if (x.empty()) {
    throw std::invalid_argument("oracle_suspension needs at least MH_0");
  }
  if (!x[0].is_free() || x[0].free_rank() == 0) {
    throw std::invalid_argument("MH_0 must be free and nonzero, got " + x[0].to_string());
  }
  HomologyTable out{FgAbelianGroup::free(1), FgAbelianGroup::free(x[0].free_rank() - 1)};
  for (std::size_t k = 1; k < x.size(); ++k) {
    out.push_back(x[k]);
  }
  return out;
}

HomologyTable oracle_kunneth(HomologyTable const& hx, HomologyTable const& hy) {
  std::size_t const len = std::min(hx.size(), hy.size());
  HomologyTable     out(len);
  for (std::size_t n = 0; n < len; ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      out[n] = direct_sum(out[n], tensor_fg(hx[j], hy[n - j]));
    }
    for (std::size_t j = 0; n >= 1 && j <= n - 1; ++j) {
      out[n] = direct_sum(out[n], tor_fg(hx[j], hy[n - 1 - j]));
    }
  }
  return out;
}

GradedHomologyTable oracle_kunneth(GradedHomologyTable const& hx, GradedHomologyTable const& hy) {
  GradedHomologyTable out;
  for (auto const& [r, tx] : hx) {
    for (auto const& [s, ty] : hy) {
      auto  part = oracle_kunneth(tx, ty);
      auto& slot = out[Rational(r + s)];
      if (slot.size() < part.size()) {
        slot.resize(part.size());
      }
      for (std::size_t n = 0; n < part.size(); ++n) {
        slot[n] = direct_sum(slot[n], part[n]);
      }
    }
  }
  return out;
}

}  // namespace itermag
