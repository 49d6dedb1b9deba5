#pragma once

// Exact integer linear algebra: sparse integer matrices, Smith normal form,
// homology of free chain complexes and Tor/tensor of finitely generated
// abelian groups. Nothing in here ever touches floating point.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace itermag {

using Integer = mpz_class;

// Column-sparse integer matrix. Columns are kept sorted by row index and
// never store explicit zeros.
class IntMatrix {
 public:
  using Entry  = std::pair<std::uint32_t, Integer>;
  using Column = std::vector<Entry>;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  // Row-major dense input.
  static IntMatrix from_dense(std::vector<std::vector<Integer>> const& rows);
  static IntMatrix from_dense(std::vector<std::vector<long>> const& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  std::size_t nonzeros() const noexcept;
  bool        is_zero() const noexcept;

  Integer at(std::size_t r, std::size_t c) const;
  void    set(std::size_t r, std::size_t c, Integer const& value);
  void    add_to(std::size_t r, std::size_t c, Integer const& value);

  Column const& column(std::size_t c) const { return columns_.at(c); }
  // Takes an unsorted list of (row, value) pairs, merging duplicates.
  void set_column(std::size_t c, Column entries);

  std::vector<std::vector<Integer>> to_dense() const;
  IntMatrix                         transposed() const;

  friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
  friend bool      operator==(IntMatrix const& a, IntMatrix const& b);

 private:
  std::size_t         rows_ = 0;
  std::vector<Column> columns_;
};

struct SmithForm {
  // Diagonal of the Smith form, nonzero entries only, d1 | d2 | ...
  std::vector<Integer> invariant_factors;
  std::size_t          rank = 0;
};

SmithForm smith_normal_form(IntMatrix const& m);

// Dense reference algorithm, also used on the residual block left over by
// the sparse unit-pivot elimination.
SmithForm dense_smith_normal_form(std::vector<std::vector<Integer>> m);

// Z^r + Z/d1 + ... + Z/dk in invariant-factor form.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  // Throws std::invalid_argument unless torsion is a divisibility chain with
  // every entry >= 2.
  FgAbelianGroup(std::size_t free_rank, std::vector<Integer> torsion);

  static FgAbelianGroup zero() { return {}; }
  static FgAbelianGroup free(std::size_t rank) { return {rank, {}}; }
  static FgAbelianGroup cyclic(Integer const& order);
  // Any list of cyclic orders (0 means Z, 1 is dropped), normalized.
  static FgAbelianGroup from_cyclic_orders(std::size_t             free_rank,
                                           std::vector<Integer> const& orders);

  std::size_t                 free_rank() const noexcept { return free_rank_; }
  std::vector<Integer> const& torsion() const noexcept { return torsion_; }
  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  bool is_free() const noexcept { return torsion_.empty(); }

  // "0", "Z", "Z^2 ⊕ Z/2 ⊕ Z/4"
  std::string to_string() const;

  friend bool operator==(FgAbelianGroup const&, FgAbelianGroup const&) = default;

 private:
  std::size_t          free_rank_ = 0;
  std::vector<Integer> torsion_;
};

FgAbelianGroup direct_sum(FgAbelianGroup const& a, FgAbelianGroup const& b);
FgAbelianGroup tensor_fg(FgAbelianGroup const& a, FgAbelianGroup const& b);
FgAbelianGroup tor_fg(FgAbelianGroup const& a, FgAbelianGroup const& b);

// H = ker(d_k) / im(d_{k+1}). Throws std::invalid_argument on a dimension
// mismatch and InvalidComplex when d_k * d_{k+1} != 0.
FgAbelianGroup homology_between(IntMatrix const& d_k, IntMatrix const& d_k_plus_1);

// Same computation when the Smith forms are already known.
FgAbelianGroup homology_from_smith(std::size_t      n_k,
                                   SmithForm const& d_k,
                                   SmithForm const& d_k_plus_1);

}  // namespace itermag
