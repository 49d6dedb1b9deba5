#pragma once

// Closed-form predictions, computed without the iterated pipeline. They share
// only exact_linalg and the enriched data model with it (and, for group
// homology, the first-order nerve of a one-object category).

#include <utility>

#include "itermag/complexes.hpp"
#include "itermag/enriched.hpp"

namespace itermag {

// Free abelian group on ordered pairs (x, y), x != y, adjacent, d(x, y) = l.
FgAbelianGroup oracle_mh1_metric(GenMetricSpace const& x, Rational const& ell);

// Abelianization from the multiplication table: Z^G modulo [ab] = [a] + [b].
FgAbelianGroup abelianization(FiniteGroup const& g);

// (MH_0, MH_1) = (Z, Con(G)_ab).
std::pair<FgAbelianGroup, FgAbelianGroup> oracle_mh01_catgroup(CatGroup const& g);

// Z^(number of conjugacy classes of indecomposable elements of norm l).
// Throws std::invalid_argument for l <= 0.
FgAbelianGroup oracle_mh2_normed(NormedGroup const& g, Rational const& ell);

// Bar complex of the one-object category, degrees 0..max_degree.
HomologyTable oracle_group_homology(FiniteGroup const& g, int max_degree);

// Table of the suspension from the table of X (one degree longer). Throws
// std::invalid_argument when MH_0(X) is zero or not free.
HomologyTable oracle_suspension(HomologyTable const& x);

// Split Kunneth assembly; the result has min(|hx|, |hy|) degrees.
HomologyTable       oracle_kunneth(HomologyTable const& hx, HomologyTable const& hy);
GradedHomologyTable oracle_kunneth(GradedHomologyTable const& hx, GradedHomologyTable const& hy);

}  // namespace itermag
