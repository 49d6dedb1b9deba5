#pragma once

// Finite groups given by multiplication tables.

#include <cstdint>
#include <string>
#include <vector>

#include "itermag/complexes.hpp"

namespace itermag {

using Elem = std::uint32_t;

struct FiniteGroup {
  std::vector<std::string>       names;
  std::vector<std::vector<Elem>> table;  // table[a][b] = ab
  std::vector<Elem>              inverse;
  Elem                           e = 0;

  std::size_t order() const noexcept { return names.size(); }
  Elem        mul(Elem a, Elem b) const { return table[a][b]; }
  Elem        inv(Elem a) const { return inverse[a]; }
  // g h g^-1
  Elem conj(Elem g, Elem h) const { return table[table[g][h]][inverse[g]]; }
  Elem index_of(std::string const& name) const;  // throws std::invalid_argument
};

ValidationReport validate_group(FiniteGroup const& g);

// Finds the identity and inverses, then validates. Throws ValidationError.
FiniteGroup group_from_table(std::vector<std::string> names, std::vector<std::vector<Elem>> table);

// Permutations of {0..m-1} as image vectors; the group they generate.
// Elements are ordered identity first, then lexicographically by image.
// Names are cycle notation on the points 1..m, identity "e".
FiniteGroup group_from_permutations(std::vector<std::vector<std::uint32_t>> const& generators);

FiniteGroup trivial_group();
FiniteGroup cyclic_group(std::size_t n);        // elements "0".."n-1"
FiniteGroup symmetric_group(std::size_t n);     // as permutations
FiniteGroup dihedral_group(std::size_t n);      // order 2n, symmetries of an n-gon
FiniteGroup quaternion_group();                 // "1","-1","i","-i","j","-j","k","-k"
FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h);

// "trivial", "Z<n>", "S3", "S4", "D<n>" (order 2n), "Q8", "Z2xZ2", "Z2xZ4", "Z2xZ2xZ2".
FiniteGroup named_group(std::string const& name);

// The fourteen groups of order <= 8 up to isomorphism, with their names.
std::vector<std::pair<std::string, FiniteGroup>> groups_of_order_at_most_8();

using Subset = std::vector<Elem>;  // sorted element indices

bool   is_subgroup(FiniteGroup const& g, Subset const& s);
bool   is_normal_subgroup(FiniteGroup const& g, Subset const& s);
Subset generated_subgroup(FiniteGroup const& g, Subset const& gens);
Subset normal_closure(FiniteGroup const& g, Subset const& gens);
std::vector<Subset> all_subgroups(FiniteGroup const& g);
std::vector<Subset> normal_subgroups(FiniteGroup const& g);
std::vector<Subset> conjugacy_classes(FiniteGroup const& g);

struct Quotient {
  FiniteGroup       group;       // cosets, named by their least representative
  std::vector<Elem> projection;  // element -> coset
};

// G/N for a normal subgroup N. Throws std::invalid_argument otherwise.
Quotient quotient_group(FiniteGroup const& g, Subset const& n);

}  // namespace itermag
