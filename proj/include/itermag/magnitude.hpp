#pragma once

// First-order magnitude nerves: ordinary categories and generalized metric
// spaces.

#include <optional>
#include <vector>

#include "itermag/complexes.hpp"
#include "itermag/enriched.hpp"
#include "itermag/simplicial.hpp"

namespace itermag {

// Degree n: composable n-tuples (f1, ..., fn), objects in degree 0. delta_0
// drops f1 (for n = 1: the codomain), delta_n drops fn, inner faces compose,
// sigma_i inserts the identity at position i.
BasedSimplicialObject nerve_category(FinCategory const& x, int max_degree);

struct AdjacencyResult {
  bool                 adjacent = true;
  std::optional<Index> witness;  // a point strictly between, when not adjacent
};

// Throws std::invalid_argument when a == b.
AdjacencyResult adjacency(GenMetricSpace const& x, Index a, Index b);

// Every finite length of a tuple (x0..xn), x_i != x_{i+1}, with n <= max_degree.
std::vector<Rational> reachable_gradings(GenMetricSpace const& x, int max_degree);

// Normalized magnitude complex, one chain complex per grading, degrees
// 0..max_degree. Without explicit gradings every reachable grading is built.
// Faithful through max_degree - 1, or complete when no tuple of degree
// max_degree + 1 can reach the grading.
GradedChainComplex magnitude_complex_metric(GenMetricSpace const& x, int max_degree,
                                            std::optional<std::vector<Rational>> gradings = {});

// Unnormalized nerve in one grading: all tuples of total length `grading`,
// repeats allowed. Outer faces need a repeated end point; inner faces need
// betweenness.
BasedSimplicialObject metric_nerve(GenMetricSpace const& x, Rational const& grading, int max_degree);

}  // namespace itermag
