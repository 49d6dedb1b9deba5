#pragma once

// Based simplicial and bisimplicial free abelian groups. Every face sends a
// generator to a generator or to zero; every degeneracy sends a generator to
// a generator, injectively. Chains are assembled from these tables.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "itermag/complexes.hpp"

namespace itermag {

// Face image meaning "zero".
inline constexpr std::int32_t kZero = -1;

using GenMap = std::vector<std::int32_t>;

struct BasedSimplicialObject {
  std::vector<std::size_t> sizes;  // degrees 0..D
  // face[n][i] for 1 <= n <= D, 0 <= i <= n (face[0] is empty)
  std::vector<std::vector<GenMap>> face;
  // degeneracy[n][i] for 0 <= n < D, 0 <= i <= n (degeneracy[D] is empty)
  std::vector<std::vector<GenMap>> degeneracy;
  LabelFn                          label;

  int top_degree() const noexcept { return static_cast<int>(sizes.size()) - 1; }
};

ValidationReport validate_simplicial(BasedSimplicialObject const& s);

// d_n = sum (-1)^i delta_i. Faithful through D-1.
BasedChainComplex unnormalized_chains(BasedSimplicialObject const& s);

// Quotient by the degenerate generators; basis = nondegenerate generators in
// their original order. Throws ValidationError if a degeneracy leaves the basis.
BasedChainComplex normalized_chains(BasedSimplicialObject const& s);

// Indices of nondegenerate generators in degree n.
std::vector<std::size_t> nondegenerate(BasedSimplicialObject const& s, int n);

struct BasedBisimplicialObject {
  int P           = 0;
  int Q           = 0;
  int total_bound = 0;

  std::vector<std::vector<std::size_t>> sizes;  // sizes[p][q], zero when absent
  // hface[p][q][i] : (p,q) -> (p-1,q), i in 0..p
  // vface[p][q][i] : (p,q) -> (p,q-1), i in 0..q
  // hdeg[p][q][i]  : (p,q) -> (p+1,q), present when (p+1,q) is
  // vdeg[p][q][i]  : (p,q) -> (p,q+1), present when (p,q+1) is
  std::vector<std::vector<std::vector<GenMap>>> hface, vface, hdeg, vdeg;
  std::function<std::string(int p, int q, std::size_t index)> label;

  bool present(int p, int q) const noexcept {
    return p >= 0 && q >= 0 && p <= P && q <= Q && p + q <= total_bound;
  }
  // Allocates empty tables for the given region.
  void reset(int p_max, int q_max, int bound);
};

ValidationReport validate_bisimplicial(BasedBisimplicialObject const& b);

// Requires a square region (P == Q, total_bound >= 2P).
BasedSimplicialObject diagonal(BasedBisimplicialObject const& b);

BasedDoubleComplex double_chains(BasedBisimplicialObject const& b);

// Rows normalized (quotient by horizontal degeneracies), columns unnormalized.
BasedDoubleComplex row_normalize(BasedBisimplicialObject const& b);

// B_pq = S_p x T_q on the square [0, min(D_S, D_T)]^2.
BasedBisimplicialObject external_product(BasedSimplicialObject const& s,
                                         BasedSimplicialObject const& t);

}  // namespace itermag
