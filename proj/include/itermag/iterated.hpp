#pragma once

// Double and iterated magnitude nerves: strict n-categories (Cat-groups and
// spheres among them) through the MB^n recursion, and normed groups through
// their length-graded matrix nerve.

#include <memory>
#include <optional>
#include <vector>

#include "itermag/complexes.hpp"
#include "itermag/enriched.hpp"
#include "itermag/simplicial.hpp"

namespace itermag {

enum class Route { diagonal, tot };

// Bidegrees (p, q) with p <= P, q <= Q, p + q <= bound.
struct Region {
  int P     = 0;
  int Q     = 0;
  int bound = 0;
};
// Everything Tot needs to be faithful through D - 1.
inline Region tot_region(int D) { return {D, D, D}; }
// Everything diagonal() needs for degrees 0..D.
inline Region square_region(int D) { return {D, D, 2 * D}; }

// ---------------------------------------------------------------------------
// MB^n for a strict n-category.
//
// A level-L generator over base dimension b with path length p and sub-degree
// r is a path of p+1 b-cells joined by p level-(L-1) generators of degree r
// over dimension b+1 (diagonal ones, p = r). Level 0 is a single cell. The
// top level L = n, b = 0 gives MB^n on the diagonal and the bisimplicial
// object MB^{MB^{n-1}} off it.

class MbEngine {
 public:
  explicit MbEngine(StrictNCat x);
  ~MbEngine();
  MbEngine(MbEngine&&) noexcept;
  MbEngine& operator=(MbEngine&&) noexcept;

  StrictNCat const& category() const noexcept;

  // MB^n(X) in degrees 0..D.
  BasedSimplicialObject simplicial(int max_degree);
  // MB^{MB^{n-1}}(X) on the region.
  BasedBisimplicialObject bisimplicial(Region const& region);

  struct Impl;

 private:
  std::shared_ptr<Impl> impl_;
};

BasedSimplicialObject   mb_n(StrictNCat const& x, int max_degree);
BasedBisimplicialObject double_nerve(StrictNCat const& x, Region const& region);
// Throws ValidationError unless x has level 2.
BasedBisimplicialObject double_nerve_2cat(StrictNCat const& x, Region const& region);
BasedBisimplicialObject double_nerve_2cat(CatGroup const& g, Region const& region);

// Degree 0 of MB^n(x) is the 0-cells, degree 1 is the n-cells, and delta_0,
// delta_1 send an n-cell to its codomain and domain 0-cells. Needs n >= 1.
ValidationReport check_mb_n_low_degrees(StrictNCat const& x);

// ---------------------------------------------------------------------------
// Chains from a bisimplicial object.

// diagonal: normalized chains of diag(b), needs a square region.
// tot: Tot of double_chains(b) (or row_normalize(b)), needs tot_region.
// Both are faithful through D - 1.
BasedChainComplex iterated_complex(BasedBisimplicialObject const& b, Route route, bool normalize_rows);

// MB^n(x) up to degree D by either route. The diagonal route uses the direct
// diagonal enumeration, never the full square.
BasedChainComplex iterated_complex(StrictNCat const& x, int max_degree, Route route, bool normalize_rows);

// ---------------------------------------------------------------------------
// Normed groups.
//
// B_{p,q} in grading l: (q+1) x p matrices of group elements, stored row
// major, whose column lengths sum to l. Rows are simplices of the metric
// nerve of G, columns are composed by multiplication.

BasedBisimplicialObject double_nerve_normed_group(NormedGroup const& g, Rational const& grading,
                                                  Region const& region);

// Exact total length of a (q+1) x p matrix given row major.
Rational matrix_length(NormedGroup const& g, int p, int q, std::vector<Elem> const& m);

// 0 and every nonzero norm value.
std::vector<Rational> norm_values(NormedGroup const& g);

BasedChainComplex normed_group_complex(NormedGroup const& g, Rational const& grading, int max_degree,
                                       Route route, bool normalize_rows);

// Homology through degree max_degree - 1 for each grading.
GradedHomologyTable normed_group_homology(NormedGroup const& g, std::vector<Rational> const& gradings,
                                          int max_degree, Route route = Route::tot,
                                          bool normalize_rows = true);

// Brute-force strict betweenness against the factorization criterion, for
// every pair g != h. Empty message when they agree everywhere.
ValidationReport check_adjacency_factorization(NormedGroup const& g);

// ---------------------------------------------------------------------------
// Products and Kunneth.

// Graded bisimplicial slice sum_{r+s=l} N^r(X) x N^s(Y) of unnormalized
// metric nerves, on square_region(max_degree).
BasedBisimplicialObject metric_external_product(GenMetricSpace const& x, GenMetricSpace const& y,
                                                Rational const& grading, int max_degree);

// Homology of the grading-l slice of X (x) Y through degree D-1 by one of the
// two Eilenberg-Zilber routes.
HomologyTable metric_product_homology(GenMetricSpace const& x, GenMetricSpace const& y,
                                      Rational const& grading, int max_degree, Route route,
                                      bool normalize_rows);

HomologyTable category_product_homology(FinCategory const& x, FinCategory const& y, int max_degree,
                                        Route route, bool normalize_rows);

struct KunnethReport {
  bool                ok = true;
  GradedHomologyTable direct;
  GradedHomologyTable predicted;
  std::string         message;
};

// Direct homology of the tensor product against the split Kunneth assembly,
// degrees 0..max_degree, every grading reachable by X (x) Y in degree
// max_degree + 1. Ungraded inputs use the single grading 0.
KunnethReport kunneth_check(GenMetricSpace const& x, GenMetricSpace const& y, int max_degree);
KunnethReport kunneth_check(FinCategory const& x, FinCategory const& y, int max_degree);

}  // namespace itermag
