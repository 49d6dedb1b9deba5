#pragma once

// Seeded random inputs shared by the property tests and the acceptance run.

#include <random>
#include <string>
#include <vector>

#include "itermag/enriched.hpp"
#include "itermag/magnitude.hpp"
#include "itermag/simplicial.hpp"

namespace itermag::testing {

// Random relation, closed reflexively and transitively, as a thin category.
inline FinCategory random_preorder(std::mt19937& rng, std::size_t n) {
  std::bernoulli_distribution        edge(0.35);
  std::vector<std::vector<char>>     le(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      le[a][b] = a == b || edge(rng);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        le[a][b] = le[a][b] || (le[a][k] && le[k][b]);
      }
    }
  }
  FinCategory c;
  std::vector<std::vector<std::int32_t>> arrow(n, std::vector<std::int32_t>(n, -1));
  for (std::size_t a = 0; a < n; ++a) {
    c.objects.push_back("o" + std::to_string(a));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (le[a][b]) {
        arrow[a][b] = static_cast<std::int32_t>(c.morphisms.size());
        c.morphisms.push_back({c.objects[a] + "<=" + c.objects[b], static_cast<Index>(a), static_cast<Index>(b)});
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    c.identity.push_back(static_cast<Index>(arrow[a][a]));
  }
  std::size_t const m = c.morphisms.size();
  c.then.assign(m, std::vector<std::int32_t>(m, kUndefined));
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t g = 0; g < m; ++g) {
      if (c.morphisms[f].tgt == c.morphisms[g].src) {
        c.then[f][g] = arrow[c.morphisms[f].src][c.morphisms[g].tgt];
      }
    }
  }
  return c;
}

// Random positive rationals with small denominators, closed under shortest
// paths, so the triangle inequality holds. Asymmetric unless `symmetric`.
inline GenMetricSpace random_metric(std::mt19937& rng, std::size_t n, bool symmetric) {
  std::uniform_int_distribution<int> num(1, 6), den(1, 3);
  GenMetricSpace                     x;
  for (std::size_t a = 0; a < n; ++a) {
    x.points.push_back("p" + std::to_string(a));
  }
  x.d.assign(n, std::vector<Extended>(n, Extended(0)));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && (!symmetric || a < b)) {
        Rational v(num(rng), den(rng));
        v.canonicalize();
        x.d[a][b] = Extended(v);
        if (symmetric) {
          x.d[b][a] = Extended(v);
        }
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto via = x.d[a][k] + x.d[k][b];
        if (via < x.d[a][b]) {
          x.d[a][b] = via;
        }
      }
    }
  }
  return x;
}

// The i-th of a family of small simplicial objects: nerves of random
// preorders and groups, and unnormalized metric nerves in a random grading.
inline BasedSimplicialObject random_simplicial(std::mt19937& rng, int i) {
  switch (i % 3) {
    case 0:
      return nerve_category(random_preorder(rng, 2 + static_cast<std::size_t>(i % 4)), 4);
    case 1: {
      std::uniform_int_distribution<std::size_t> n(2, 3);
      return nerve_category(product_category(random_preorder(rng, n(rng)), circle_category()), 3);
    }
    default: {
      auto x     = random_metric(rng, 3, i % 2 == 0);
      auto grads = reachable_gradings(x, 3);
      std::uniform_int_distribution<std::size_t> pick(0, grads.size() - 1);
      return metric_nerve(x, grads[pick(rng)], 3);
    }
  }
}

}  // namespace itermag::testing
