#include "itermag/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "itermag/errors.hpp"

namespace itermag {

Elem FiniteGroup::index_of(std::string const& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) {
    throw std::invalid_argument("unknown group element '" + name + "'");
  }
  return static_cast<Elem>(it - names.begin());
}

ValidationReport validate_group(FiniteGroup const& g) {
  std::size_t const n = g.order();
  if (n == 0) {
    return ValidationReport::fail("group has no elements");
  }
  if (g.table.size() != n || g.inverse.size() != n || g.e >= n) {
    return ValidationReport::fail("group tables have inconsistent sizes");
  }
  for (auto const& row : g.table) {
    if (row.size() != n) {
      return ValidationReport::fail("multiplication table is not square");
    }
    for (Elem x : row) {
      if (x >= n) {
        return ValidationReport::fail("multiplication table entry out of range");
      }
    }
  }
  std::set<std::string> seen(g.names.begin(), g.names.end());
  if (seen.size() != n) {
    return ValidationReport::fail("duplicate element names");
  }
  for (Elem a = 0; a < n; ++a) {
    if (g.mul(g.e, a) != a || g.mul(a, g.e) != a) {
      return ValidationReport::fail("'" + g.names[g.e] + "' is not a unit for '" + g.names[a] + "'");
    }
    if (g.inverse[a] >= n || g.mul(a, g.inverse[a]) != g.e || g.mul(g.inverse[a], a) != g.e) {
      return ValidationReport::fail("'" + g.names[a] + "' has no inverse");
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          return ValidationReport::fail("associativity fails for (" + g.names[a] + ", "
                                        + g.names[b] + ", " + g.names[c] + ")");
        }
      }
    }
  }
  return ValidationReport::pass();
}

FiniteGroup group_from_table(std::vector<std::string> names, std::vector<std::vector<Elem>> table) {
  FiniteGroup g;
  g.names       = std::move(names);
  g.table       = std::move(table);
  std::size_t n = g.names.size();
  if (n == 0 || g.table.size() != n) {
    throw ValidationError("multiplication table must be |G| x |G| with |G| >= 1");
  }
  for (auto const& row : g.table) {
    if (row.size() != n) {
      throw ValidationError("multiplication table is not square");
    }
    for (Elem x : row) {
      if (x >= n) {
        throw ValidationError("multiplication table entry out of range");
      }
    }
  }
  bool found = false;
  for (Elem a = 0; a < n && !found; ++a) {
    bool unit = true;
    for (Elem b = 0; b < n && unit; ++b) {
      unit = g.table[a][b] == b && g.table[b][a] == b;
    }
    if (unit) {
      g.e   = a;
      found = true;
    }
  }
  if (!found) {
    throw ValidationError("multiplication table has no identity element");
  }
  g.inverse.assign(n, static_cast<Elem>(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (g.table[a][b] == g.e && g.table[b][a] == g.e) {
        g.inverse[a] = b;
        break;
      }
    }
    if (g.inverse[a] == n) {
      throw ValidationError("element '" + g.names[a] + "' has no inverse");
    }
  }
  if (auto r = validate_group(g); !r) {
    throw ValidationError(r.message);
  }
  return g;
}

namespace {

std::string cycle_name(std::vector<std::uint32_t> const& p) {
  std::string       out;
  std::vector<char> seen(p.size(), 0);
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) {
      continue;
    }
    out += "(";
    std::uint32_t j     = i;
    bool          first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) {
        out += " ";
      }
      out += std::to_string(j + 1);
      first = false;
      j     = p[j];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

FiniteGroup group_from_permutations(std::vector<std::vector<std::uint32_t>> const& generators) {
  std::size_t m = 0;
  for (auto const& gen : generators) {
    m = std::max(m, gen.size());
  }
  for (auto const& gen : generators) {
    std::vector<std::uint32_t> s = gen;
    std::sort(s.begin(), s.end());
    for (std::uint32_t i = 0; i < s.size(); ++i) {
      if (s[i] != i) {
        throw ValidationError("generator is not a permutation of 0..n-1");
      }
    }
  }
  using Perm = std::vector<std::uint32_t>;
  auto extend = [m](Perm p) {
    for (auto i = static_cast<std::uint32_t>(p.size()); i < m; ++i) {
      p.push_back(i);
    }
    return p;
  };
  Perm id(m);
  std::iota(id.begin(), id.end(), 0u);
  std::set<Perm>   elems{id};
  std::queue<Perm> todo;
  todo.push(id);
  while (!todo.empty()) {
    Perm p = todo.front();
    todo.pop();
    for (auto const& raw : generators) {
      Perm g = extend(raw);
      Perm q(m);
      for (std::size_t i = 0; i < m; ++i) {
        q[i] = g[p[i]];  // p then g
      }
      if (elems.insert(q).second) {
        todo.push(q);
      }
    }
  }
  std::vector<Perm> list;
  list.push_back(id);
  for (auto const& p : elems) {
    if (p != id) {
      list.push_back(p);
    }
  }
  std::map<Perm, Elem> index;
  for (Elem i = 0; i < list.size(); ++i) {
    index[list[i]] = i;
  }
  std::vector<std::string>       names;
  std::vector<std::vector<Elem>> table(list.size(), std::vector<Elem>(list.size()));
  for (auto const& p : list) {
    names.push_back(cycle_name(p));
  }
  // ab acts as "first b, then a" on points: (ab)(x) = a(b(x)).
  for (Elem a = 0; a < list.size(); ++a) {
    for (Elem b = 0; b < list.size(); ++b) {
      Perm q(m);
      for (std::size_t i = 0; i < m; ++i) {
        q[i] = list[a][list[b][i]];
      }
      table[a][b] = index.at(q);
    }
  }
  return group_from_table(std::move(names), std::move(table));
}

FiniteGroup trivial_group() { return group_from_table({"e"}, {{0}}); }

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("cyclic_group: order must be positive");
  }
  std::vector<std::string>       names;
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      table[a][b] = static_cast<Elem>((a + b) % n);
    }
  }
  return group_from_table(std::move(names), std::move(table));
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n <= 1) {
    return trivial_group();
  }
  std::vector<std::uint32_t> swap01(n);
  std::vector<std::uint32_t> cycle(n);
  std::iota(swap01.begin(), swap01.end(), 0u);
  std::swap(swap01[0], swap01[1]);
  for (std::uint32_t i = 0; i < n; ++i) {
    cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
  }
  return group_from_permutations({swap01, cycle});
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 3) {
    // D1 = Z2, D2 = Z2 x Z2; the polygon action degenerates.
    return n == 1 ? cyclic_group(2) : direct_product(cyclic_group(2), cyclic_group(2));
  }
  std::vector<std::uint32_t> rot(n);
  std::vector<std::uint32_t> ref(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    rot[i] = static_cast<std::uint32_t>((i + 1) % n);
    ref[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return group_from_permutations({rot, ref});
}

FiniteGroup quaternion_group() {
  // Elements as (sign, unit) with unit in {1,i,j,k}.
  std::vector<std::string> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  // unit products: u*v = sign * w
  int const unit_mul[4][4][2] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  std::vector<std::vector<Elem>> table(8, std::vector<Elem>(8));
  for (Elem a = 0; a < 8; ++a) {
    for (Elem b = 0; b < 8; ++b) {
      int const sa = a % 2 ? -1 : 1;
      int const sb = b % 2 ? -1 : 1;
      auto const& uv = unit_mul[a / 2][b / 2];
      int const   s  = sa * sb * uv[0];
      table[a][b]    = static_cast<Elem>(2 * uv[1] + (s < 0 ? 1 : 0));
    }
  }
  return group_from_table(std::move(names), std::move(table));
}

FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h) {
  std::size_t const              n = g.order() * h.order();
  std::vector<std::string>       names;
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < h.order(); ++b) {
      names.push_back("(" + g.names[a] + "," + h.names[b] + ")");
    }
  }
  auto const hn = static_cast<Elem>(h.order());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      table[x][y] = g.mul(x / hn, y / hn) * hn + h.mul(x % hn, y % hn);
    }
  }
  return group_from_table(std::move(names), std::move(table));
}

FiniteGroup named_group(std::string const& name) {
  if (name == "trivial" || name == "1") {
    return trivial_group();
  }
  if (name == "Q8") {
    return quaternion_group();
  }
  if (name == "Z2xZ2") {
    return direct_product(cyclic_group(2), cyclic_group(2));
  }
  if (name == "Z2xZ4" || name == "Z4xZ2") {
    return direct_product(cyclic_group(4), cyclic_group(2));
  }
  if (name == "Z2xZ2xZ2") {
    return direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2));
  }
  auto number = [&](std::size_t from) -> std::size_t {
    std::string digits = name.substr(from);
    if (digits.empty() || digits.size() > 3
        || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("unknown group name '" + name + "'");
    }
    return static_cast<std::size_t>(std::stoul(digits));
  };
  if (name.size() >= 2 && name[0] == 'Z') {
    return cyclic_group(number(1));
  }
  if (name.size() >= 2 && name[0] == 'S') {
    std::size_t n = number(1);
    if (n > 6) {
      throw std::invalid_argument("symmetric groups above S6 are not supported");
    }
    return symmetric_group(n);
  }
  if (name.size() >= 2 && name[0] == 'D') {
    return dihedral_group(number(1));
  }
  throw std::invalid_argument("unknown group name '" + name + "'");
}

std::vector<std::pair<std::string, FiniteGroup>> groups_of_order_at_most_8() {
  std::vector<std::pair<std::string, FiniteGroup>> out;
  out.emplace_back("trivial", trivial_group());
  for (std::size_t n : {2, 3, 4, 5, 6, 7, 8}) {
    out.emplace_back("Z" + std::to_string(n), cyclic_group(n));
  }
  out.emplace_back("Z2xZ2", named_group("Z2xZ2"));
  out.emplace_back("S3", symmetric_group(3));
  out.emplace_back("Z2xZ4", named_group("Z2xZ4"));
  out.emplace_back("Z2xZ2xZ2", named_group("Z2xZ2xZ2"));
  out.emplace_back("D4", dihedral_group(4));
  out.emplace_back("Q8", quaternion_group());
  return out;
}

bool is_subgroup(FiniteGroup const& g, Subset const& s) {
  if (std::find(s.begin(), s.end(), g.e) == s.end()) {
    return false;
  }
  std::vector<char> in(g.order(), 0);
  for (Elem x : s) {
    if (x >= g.order()) {
      return false;
    }
    in[x] = 1;
  }
  for (Elem a : s) {
    if (!in[g.inv(a)]) {
      return false;
    }
    for (Elem b : s) {
      if (!in[g.mul(a, b)]) {
        return false;
      }
    }
  }
  return true;
}

bool is_normal_subgroup(FiniteGroup const& g, Subset const& s) {
  if (!is_subgroup(g, s)) {
    return false;
  }
  std::vector<char> in(g.order(), 0);
  for (Elem x : s) {
    in[x] = 1;
  }
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem h : s) {
      if (!in[g.conj(x, h)]) {
        return false;
      }
    }
  }
  return true;
}

namespace {
Subset closure(FiniteGroup const& g, Subset seeds, bool conjugates) {
  std::vector<char> in(g.order(), 0);
  Subset            out{g.e};
  in[g.e] = 1;
  if (conjugates) {
    Subset more;
    for (Elem s : seeds) {
      for (Elem x = 0; x < g.order(); ++x) {
        more.push_back(g.conj(x, s));
      }
    }
    seeds = std::move(more);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elem s : seeds) {
      Elem y = g.mul(out[i], s);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

Subset generated_subgroup(FiniteGroup const& g, Subset const& gens) { return closure(g, gens, false); }

Subset normal_closure(FiniteGroup const& g, Subset const& gens) { return closure(g, gens, true); }

std::vector<Subset> all_subgroups(FiniteGroup const& g) {
  // Adjoin one element at a time, starting from the trivial subgroup. Any
  // subgroup is reached along a chain of such steps.
  std::set<Subset> found{Subset{g.e}};
  bool             grew = true;
  while (grew) {
    grew = false;
    std::vector<Subset> current(found.begin(), found.end());
    for (auto const& h : current) {
      for (Elem x = 0; x < g.order(); ++x) {
        if (std::binary_search(h.begin(), h.end(), x)) {
          continue;
        }
        Subset gens = h;
        gens.push_back(x);
        if (found.insert(generated_subgroup(g, gens)).second) {
          grew = true;
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<Subset> normal_subgroups(FiniteGroup const& g) {
  std::vector<Subset> out;
  for (auto const& h : all_subgroups(g)) {
    if (is_normal_subgroup(g, h)) {
      out.push_back(h);
    }
  }
  return out;
}

std::vector<Subset> conjugacy_classes(FiniteGroup const& g) {
  std::vector<char>   done(g.order(), 0);
  std::vector<Subset> out;
  for (Elem h = 0; h < g.order(); ++h) {
    if (done[h]) {
      continue;
    }
    Subset cls;
    for (Elem x = 0; x < g.order(); ++x) {
      Elem c = g.conj(x, h);
      if (!done[c]) {
        done[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

Quotient quotient_group(FiniteGroup const& g, Subset const& n) {
  if (!is_normal_subgroup(g, n)) {
    throw std::invalid_argument("quotient_group: subset is not a normal subgroup");
  }
  std::vector<std::int64_t> coset(g.order(), -1);
  std::vector<Elem>         reps;
  for (Elem a = 0; a < g.order(); ++a) {
    if (coset[a] >= 0) {
      continue;
    }
    for (Elem k : n) {
      coset[g.mul(k, a)] = static_cast<std::int64_t>(reps.size());
    }
    reps.push_back(a);
  }
  Quotient q;
  q.projection.resize(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    q.projection[a] = static_cast<Elem>(coset[a]);
  }
  std::vector<std::string>       names;
  std::vector<std::vector<Elem>> table(reps.size(), std::vector<Elem>(reps.size()));
  for (Elem i = 0; i < reps.size(); ++i) {
    names.push_back(n.size() == 1 ? g.names[reps[i]] : "[" + g.names[reps[i]] + "]");
    for (Elem j = 0; j < reps.size(); ++j) {
      table[i][j] = q.projection[g.mul(reps[i], reps[j])];
    }
  }
  q.group = group_from_table(std::move(names), std::move(table));
  return q;
}

}  // namespace itermag
