#pragma once

// Based chain complexes over Z, double complexes, length-graded complexes,
// total complexes and tensor products.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "itermag/exact_linalg.hpp"
#include "itermag/rational.hpp"

namespace itermag {

// Human-readable name of generator `index` in degree `degree`. Kept lazy
// because some bases run to hundreds of thousands of generators.
using LabelFn = std::function<std::string(int degree, std::size_t index)>;

struct ValidationReport {
  bool        ok = true;
  std::string message;

  static ValidationReport pass() { return {}; }
  static ValidationReport fail(std::string m) { return {false, std::move(m)}; }
  explicit operator bool() const noexcept { return ok; }
};

// Degrees 0..top_degree(). boundary[k] maps degree k to degree k-1
// (boundary[0] is the zero map out of degree 0, with 0 rows).
struct BasedChainComplex {
  std::vector<std::size_t> dims;
  std::vector<IntMatrix>   boundary;
  LabelFn                  label;
  // Highest degree whose homology equals that of the untruncated object.
  int faithful_through = -1;

  int         top_degree() const noexcept { return static_cast<int>(dims.size()) - 1; }
  std::string label_of(int degree, std::size_t index) const;
};

// Empty complex on degrees 0..top, faithful through `faithful`.
BasedChainComplex zero_complex(int top, int faithful);

ValidationReport validate_complex(BasedChainComplex const& c);

// Bidegrees (p,q) with p <= P, q <= Q and p + q <= total_bound.
// horizontal[p][q] : (p,q) -> (p-1,q), vertical[p][q] : (p,q) -> (p,q-1).
// The two differentials commute; the Tot sign is introduced in total_complex.
struct BasedDoubleComplex {
  int P = 0;
  int Q = 0;
  int total_bound = 0;

  std::vector<std::vector<std::size_t>> dims;
  std::vector<std::vector<IntMatrix>>   horizontal;
  std::vector<std::vector<IntMatrix>>   vertical;
  std::function<std::string(int p, int q, std::size_t index)> label;
  // Set when the double complex is genuinely bounded, so Tot is faithful
  // beyond complete_total_degree() - 1.
  std::optional<int> total_faithful_through;

  bool present(int p, int q) const noexcept {
    return p >= 0 && q >= 0 && p <= P && q <= Q && p + q <= total_bound;
  }
  // Degrees n whose Tot_n contains every (p,q) with p+q = n.
  int complete_total_degree() const noexcept;
};

ValidationReport validate_double_complex(BasedDoubleComplex const& b);

// Tot_n = sum_{p+q=n} B_pq ordered by p; d = horizontal + (-1)^p vertical.
BasedChainComplex total_complex(BasedDoubleComplex const& b);

// Koszul-signed tensor product; basis of degree n ordered by (j, c-index, d-index).
BasedChainComplex tensor_complex(BasedChainComplex const& c, BasedChainComplex const& d);

// Block-diagonal sum on the common degree range.
BasedChainComplex direct_sum_complex(BasedChainComplex const& a, BasedChainComplex const& b);

using GradedChainComplex = std::map<Rational, BasedChainComplex>;

GradedChainComplex graded_tensor(GradedChainComplex const& c, GradedChainComplex const& d);

using HomologyTable       = std::vector<FgAbelianGroup>;
using GradedHomologyTable = std::map<Rational, HomologyTable>;

// H_0..H_max_degree. Throws TruncationError when max_degree exceeds the
// degree up to which the complex is faithful.
HomologyTable homology_table(BasedChainComplex const& c, int max_degree);

GradedHomologyTable graded_homology_table(GradedChainComplex const& c, int max_degree);

std::string table_to_string(HomologyTable const& t);

}  // namespace itermag
