#pragma once

// Finite presentations of the enriched structures: categories, generalized
// metric spaces, normed groups, Cat-groups, preordered groups and strict
// n-categories, with validators, builders and structural utilities.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "itermag/complexes.hpp"
#include "itermag/groups.hpp"
#include "itermag/rational.hpp"

namespace itermag {

using Index = std::uint32_t;
inline constexpr std::int32_t kUndefined = -1;

// ---------------------------------------------------------------------------
// Categories

struct FinCategory {
  struct Morphism {
    std::string name;
    Index       src = 0;
    Index       tgt = 0;
  };
  std::vector<std::string> objects;
  std::vector<Morphism>    morphisms;
  std::vector<Index>       identity;  // per object
  // then[f][g] = "f, then g" (g o f) when tgt f = src g, else kUndefined.
  std::vector<std::vector<std::int32_t>> then;

  std::size_t num_objects() const noexcept { return objects.size(); }
  std::size_t num_morphisms() const noexcept { return morphisms.size(); }
  Index       object_index(std::string const& name) const;
  Index       morphism_index(std::string const& name) const;
};

ValidationReport validate(FinCategory const& c);

// One object; morphisms are the group elements.
FinCategory group_as_category(FiniteGroup const& g);
FinCategory discrete_category(std::vector<std::string> const& objects);
FinCategory terminal_category();
FinCategory product_category(FinCategory const& x, FinCategory const& y);
// Poset {0 < 1 < ... < n-1} as a category.
FinCategory linear_order_category(std::size_t n);
// Objects A, B; morphisms id_A, id_B, f, g : A -> B.
FinCategory circle_category();

// ---------------------------------------------------------------------------
// Generalized metric spaces

struct GenMetricSpace {
  std::vector<std::string>           points;
  std::vector<std::vector<Extended>> d;

  std::size_t size() const noexcept { return points.size(); }
};

ValidationReport validate(GenMetricSpace const& x);

GenMetricSpace tensor_metric(GenMetricSpace const& x, GenMetricSpace const& y);
// Shortest directed path lengths; unreachable pairs at infinity.
GenMetricSpace digraph_metric(std::vector<std::string> points,
                              std::vector<std::pair<Index, Index>> const& edges);
GenMetricSpace cycle_digraph(std::size_t n);
GenMetricSpace cycle_graph(std::size_t n);
GenMetricSpace complete_graph(std::size_t n);
// n points at mutual distance d.
GenMetricSpace discrete_space(std::size_t n, Extended const& d);

// ---------------------------------------------------------------------------
// Normed groups

struct NormedGroup {
  FiniteGroup           group;
  std::vector<Rational> norm;

  // d(g, h) = |h^-1 g|
  Rational const& dist(Elem g, Elem h) const { return norm[group.mul(group.inv(h), g)]; }
};

ValidationReport validate(NormedGroup const& g);

// Word norm for conjugates of S (closed under inverses first). Throws
// ValidationError if S does not normally generate G.
NormedGroup word_norm_group(FiniteGroup const& g, Subset const& s);

// The bi-invariant metric d(g,h) = |h^-1 g|.
GenMetricSpace metric_of(NormedGroup const& g);

// ---------------------------------------------------------------------------
// Cat-groups: a category on the group's elements with a functorial
// multiplication on morphisms.

struct CatGroup {
  FiniteGroup                            group;
  FinCategory                            cells;  // object i is group element i
  std::vector<std::vector<std::int32_t>> mul;    // mul[f][f'] : morphism

  std::size_t num_arrows() const noexcept { return cells.num_morphisms(); }
};

ValidationReport validate(CatGroup const& g);

// Objects G, arrows (k, g) : g -> kg for k in N. Throws ValidationError if N
// is not normal.
CatGroup two_group_from_normal_subgroup(FiniteGroup const& g, Subset const& n);

// Partition of the objects under the equivalence generated by nonempty homs.
std::vector<std::vector<Index>> connected_components(FinCategory const& c);

struct ComponentGroup {
  Subset   identity_component;
  Quotient quotient;
};
ComponentGroup component_group(CatGroup const& g);

// ---------------------------------------------------------------------------
// Preordered groups

struct PreorderedGroup {
  FiniteGroup                    group;
  std::vector<std::vector<char>> leq;  // leq[g][h]: g <= h

  Subset positive_cone() const;
};

ValidationReport validate(PreorderedGroup const& g);

// g <= h iff h g^-1 in P. Throws ValidationError unless P is a
// conjugation-closed submonoid.
PreorderedGroup preordered_group_from_cone(FiniteGroup const& g, Subset const& p);

// The thin Cat-group with an arrow g -> h iff g <= h.
CatGroup as_cat_group(PreorderedGroup const& g);

// ---------------------------------------------------------------------------
// Strict n-categories as cell tables.
//
// cells[k] for k = 0..n. For k >= 1 each k-cell has a source and target
// (k-1)-cell; each k-cell with k < n has an identity (k+1)-cell. comp[k][j]
// composes k-cells along j-cells (j < k) in diagrammatic order: a ;_j b is
// defined iff the j-dimensional target of a equals the j-dimensional source
// of b. Stored densely, kUndefined where undefined.

struct StrictNCat {
  int                                                 n = 0;
  std::vector<std::vector<std::string>>               names;  // names[k][c]
  std::vector<std::vector<Index>>                     src, tgt;
  std::vector<std::vector<Index>>                     id;
  std::vector<std::vector<std::vector<std::int32_t>>> comp;  // comp[k][j][a * N_k + b]

  std::size_t count(int k) const { return names[static_cast<std::size_t>(k)].size(); }
  Index       source_at(int k, Index c, int j) const;  // iterated source in dim j
  Index       target_at(int k, Index c, int j) const;
  Index       identity_to(int k, Index c, int m) const;  // iterated identity up to dim m
  std::int32_t compose(int k, int j, Index a, Index b) const {
    return comp[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]
               [static_cast<std::size_t>(a) * count(k) + b];
  }
  bool empty() const { return names.empty() || names[0].empty(); }
};

ValidationReport validate(StrictNCat const& x);

StrictNCat discrete_ncat(std::vector<std::string> const& points);  // level 0
StrictNCat as_ncat(FinCategory const& c);                           // level 1
StrictNCat as_ncat(CatGroup const& g);                              // level 2, one object
// Level-1 n-category back to a category (throws unless n == 1).
FinCategory as_category(StrictNCat const& x);

// Two objects A, B; hom(A,B) = X, hom(A,A) and hom(B,B) terminal, hom(B,A) empty.
StrictNCat suspension(StrictNCat const& x);
StrictNCat suspension(FinCategory const& x);
// S^0 = two points, S^n = suspension of S^(n-1).
StrictNCat sphere_ncat(int n);

std::vector<std::vector<Index>> connected_components(StrictNCat const& x);

}  // namespace itermag
