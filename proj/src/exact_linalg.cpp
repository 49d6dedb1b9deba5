#include "itermag/exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "itermag/errors.hpp"

namespace itermag {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), columns_(cols) {}

IntMatrix IntMatrix::from_dense(std::vector<std::vector<Integer>> const& rows) {
  std::size_t const r = rows.size();
  std::size_t const c = r == 0 ? 0 : rows.front().size();
  IntMatrix         m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) {
      throw std::invalid_argument("IntMatrix::from_dense: ragged rows");
    }
    for (std::size_t j = 0; j < c; ++j) {
      if (sgn(rows[i][j]) != 0) {
        m.columns_[j].emplace_back(static_cast<std::uint32_t>(i), rows[i][j]);
      }
    }
  }
  return m;
}

IntMatrix IntMatrix::from_dense(std::vector<std::vector<long>> const& rows) {
  std::vector<std::vector<Integer>> big;
  big.reserve(rows.size());
  for (auto const& row : rows) {
    big.emplace_back(row.begin(), row.end());
  }
  return from_dense(big);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.columns_[i].emplace_back(static_cast<std::uint32_t>(i), 1);
  }
  return m;
}

std::size_t IntMatrix::nonzeros() const noexcept {
  std::size_t n = 0;
  for (auto const& col : columns_) {
    n += col.size();
  }
  return n;
}

bool IntMatrix::is_zero() const noexcept {
  return std::all_of(columns_.begin(), columns_.end(),
                     [](Column const& c) { return c.empty(); });
}

Integer IntMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= columns_.size()) {
    throw std::out_of_range("IntMatrix::at");
  }
  auto const& col = columns_[c];
  auto        it  = std::lower_bound(
      col.begin(), col.end(), r,
      [](Entry const& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) {
    return it->second;
  }
  return 0;
}

void IntMatrix::set(std::size_t r, std::size_t c, Integer const& value) {
  if (r >= rows_ || c >= columns_.size()) {
    throw std::out_of_range("IntMatrix::set");
  }
  auto& col = columns_[c];
  auto  it  = std::lower_bound(
      col.begin(), col.end(), r,
      [](Entry const& e, std::size_t row) { return e.first < row; });
  bool const present = it != col.end() && it->first == r;
  if (sgn(value) == 0) {
    if (present) {
      col.erase(it);
    }
  } else if (present) {
    it->second = value;
  } else {
    col.insert(it, Entry{static_cast<std::uint32_t>(r), value});
  }
}

void IntMatrix::add_to(std::size_t r, std::size_t c, Integer const& value) {
  set(r, c, at(r, c) + value);
}

void IntMatrix::set_column(std::size_t c, Column entries) {
  if (c >= columns_.size()) {
    throw std::out_of_range("IntMatrix::set_column");
  }
  std::sort(entries.begin(), entries.end(),
            [](Entry const& a, Entry const& b) { return a.first < b.first; });
  Column merged;
  merged.reserve(entries.size());
  for (auto& e : entries) {
    if (e.first >= rows_) {
      throw std::out_of_range("IntMatrix::set_column: row out of range");
    }
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(std::move(e));
    }
  }
  std::erase_if(merged, [](Entry const& e) { return sgn(e.second) == 0; });
  columns_[c] = std::move(merged);
}

std::vector<std::vector<Integer>> IntMatrix::to_dense() const {
  std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols(), 0));
  for (std::size_t c = 0; c < cols(); ++c) {
    for (auto const& [r, v] : columns_[c]) {
      d[r][c] = v;
    }
  }
  return d;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols(), rows_);
  for (std::size_t c = 0; c < cols(); ++c) {
    for (auto const& [r, v] : columns_[c]) {
      t.columns_[r].emplace_back(static_cast<std::uint32_t>(c), v);
    }
  }
  return t;
}

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("IntMatrix product: dimension mismatch");
  }
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    IntMatrix::Column acc;
    for (auto const& [k, v] : b.columns_[c]) {
      for (auto const& [r, w] : a.columns_[k]) {
        acc.emplace_back(r, v * w);
      }
    }
    out.set_column(c, std::move(acc));
  }
  return out;
}

bool operator==(IntMatrix const& a, IntMatrix const& b) {
  return a.rows_ == b.rows_ && a.columns_ == b.columns_;
}

// ---------------------------------------------------------------------------
// FgAbelianGroup
// ---------------------------------------------------------------------------

FgAbelianGroup::FgAbelianGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) {
      throw std::invalid_argument("FgAbelianGroup: torsion factor < 2");
    }
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0) {
      throw std::invalid_argument("FgAbelianGroup: torsion is not a divisibility chain");
    }
  }
}

FgAbelianGroup FgAbelianGroup::cyclic(Integer const& order) {
  return from_cyclic_orders(0, {order});
}

FgAbelianGroup FgAbelianGroup::from_cyclic_orders(std::size_t                 free_rank,
                                                  std::vector<Integer> const& orders) {
  std::vector<Integer> finite;
  for (auto const& o : orders) {
    Integer a = abs(o);
    if (a == 0) {
      ++free_rank;
    } else if (a != 1) {
      finite.push_back(a);
    }
  }
  // Invariant factors of diag(orders) are exactly the normalized torsion.
  std::vector<std::vector<Integer>> diag(finite.size(),
                                         std::vector<Integer>(finite.size(), 0));
  for (std::size_t i = 0; i < finite.size(); ++i) {
    diag[i][i] = finite[i];
  }
  auto                 snf = dense_smith_normal_form(std::move(diag));
  std::vector<Integer> torsion;
  for (auto const& d : snf.invariant_factors) {
    if (d != 1) {
      torsion.push_back(d);
    }
  }
  return {free_rank, std::move(torsion)};
}

std::string FgAbelianGroup::to_string() const {
  if (is_trivial()) {
    return "0";
  }
  std::ostringstream os;
  bool               first = true;
  if (free_rank_ > 0) {
    os << "Z";
    if (free_rank_ > 1) {
      os << "^" << free_rank_;
    }
    first = false;
  }
  for (auto const& d : torsion_) {
    if (!first) {
      os << " ⊕ ";
    }
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

FgAbelianGroup direct_sum(FgAbelianGroup const& a, FgAbelianGroup const& b) {
  std::vector<Integer> orders = a.torsion();
  orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  return FgAbelianGroup::from_cyclic_orders(a.free_rank() + b.free_rank(), orders);
}

namespace {
Integer gcd_of(Integer const& a, Integer const& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
}  // namespace

FgAbelianGroup tensor_fg(FgAbelianGroup const& a, FgAbelianGroup const& b) {
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < b.free_rank(); ++i) {
    orders.insert(orders.end(), a.torsion().begin(), a.torsion().end());
  }
  for (std::size_t i = 0; i < a.free_rank(); ++i) {
    orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  }
  for (auto const& d : a.torsion()) {
    for (auto const& e : b.torsion()) {
      orders.push_back(gcd_of(d, e));
    }
  }
  return FgAbelianGroup::from_cyclic_orders(a.free_rank() * b.free_rank(), orders);
}

FgAbelianGroup tor_fg(FgAbelianGroup const& a, FgAbelianGroup const& b) {
  std::vector<Integer> orders;
  for (auto const& d : a.torsion()) {
    for (auto const& e : b.torsion()) {
      orders.push_back(gcd_of(d, e));
    }
  }
  return FgAbelianGroup::from_cyclic_orders(0, orders);
}

FgAbelianGroup homology_from_smith(std::size_t      n_k,
                                   SmithForm const& d_k,
                                   SmithForm const& d_k_plus_1) {
  if (d_k.rank + d_k_plus_1.rank > n_k) {
    throw InvalidComplex("homology: ranks exceed chain group rank");
  }
  std::vector<Integer> torsion;
  for (auto const& f : d_k_plus_1.invariant_factors) {
    if (f != 1) {
      torsion.push_back(f);
    }
  }
  return {n_k - d_k.rank - d_k_plus_1.rank, std::move(torsion)};
}

FgAbelianGroup homology_between(IntMatrix const& d_k, IntMatrix const& d_k_plus_1) {
  if (d_k.cols() != d_k_plus_1.rows()) {
    throw std::invalid_argument("homology_between: d_k has " + std::to_string(d_k.cols())
                                + " columns but d_{k+1} has "
                                + std::to_string(d_k_plus_1.rows()) + " rows");
  }
  if (!(d_k * d_k_plus_1).is_zero()) {
    throw InvalidComplex("homology_between: d_k * d_{k+1} != 0");
  }
  return homology_from_smith(d_k.cols(), smith_normal_form(d_k),
                             smith_normal_form(d_k_plus_1));
}

}  // namespace itermag
