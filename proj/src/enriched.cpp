#include "itermag/enriched.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "itermag/errors.hpp"

namespace itermag {

namespace {

struct UnionFind {
  std::vector<Index> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  Index find(Index x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x         = parent[x];
    }
    return x;
  }
  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<Index>> classes() {
    std::map<Index, std::vector<Index>> by_root;
    for (Index x = 0; x < parent.size(); ++x) {
      by_root[find(x)].push_back(x);
    }
    std::vector<std::vector<Index>> out;
    for (auto& [root, members] : by_root) {
      out.push_back(std::move(members));
    }
    return out;
  }
};

bool unique_names(std::vector<std::string> const& names) {
  std::set<std::string> s(names.begin(), names.end());
  return s.size() == names.size();
}

}  // namespace

// ---------------------------------------------------------------------------
// FinCategory

Index FinCategory::object_index(std::string const& name) const {
  auto it = std::find(objects.begin(), objects.end(), name);
  if (it == objects.end()) {
    throw std::invalid_argument("unknown object '" + name + "'");
  }
  return static_cast<Index>(it - objects.begin());
}

Index FinCategory::morphism_index(std::string const& name) const {
  for (Index i = 0; i < morphisms.size(); ++i) {
    if (morphisms[i].name == name) {
      return i;
    }
  }
  throw std::invalid_argument("unknown morphism '" + name + "'");
}

ValidationReport validate(FinCategory const& c) {
  std::size_t const no = c.num_objects();
  std::size_t const nm = c.num_morphisms();
  if (!unique_names(c.objects)) {
    return ValidationReport::fail("duplicate object names");
  }
  std::vector<std::string> mnames;
  for (auto const& m : c.morphisms) {
    if (m.src >= no || m.tgt >= no) {
      return ValidationReport::fail("morphism '" + m.name + "' has an unknown endpoint");
    }
    mnames.push_back(m.name);
  }
  if (!unique_names(mnames)) {
    return ValidationReport::fail("duplicate morphism names");
  }
  if (c.identity.size() != no) {
    return ValidationReport::fail("every object needs an identity");
  }
  for (Index x = 0; x < no; ++x) {
    Index i = c.identity[x];
    if (i >= nm || c.morphisms[i].src != x || c.morphisms[i].tgt != x) {
      return ValidationReport::fail("identity of '" + c.objects[x] + "' is not an endomorphism of it");
    }
  }
  if (c.then.size() != nm) {
    return ValidationReport::fail("composition table has wrong size");
  }
  for (Index f = 0; f < nm; ++f) {
    if (c.then[f].size() != nm) {
      return ValidationReport::fail("composition table has wrong size");
    }
    auto const& mf = c.morphisms[f];
    for (Index g = 0; g < nm; ++g) {
      auto const&  mg = c.morphisms[g];
      std::int32_t h  = c.then[f][g];
      if (mf.tgt != mg.src) {
        if (h != kUndefined) {
          return ValidationReport::fail("composite of non-composable '" + mf.name + "', '"
                                        + mg.name + "' is defined");
        }
        continue;
      }
      if (h < 0 || static_cast<std::size_t>(h) >= nm) {
        return ValidationReport::fail("composite of '" + mf.name + "' then '" + mg.name
                                      + "' is missing");
      }
      auto const& mh = c.morphisms[static_cast<std::size_t>(h)];
      if (mh.src != mf.src || mh.tgt != mg.tgt) {
        return ValidationReport::fail("composite of '" + mf.name + "' then '" + mg.name
                                      + "' has the wrong endpoints");
      }
    }
    if (c.then[c.identity[mf.src]][f] != static_cast<std::int32_t>(f)
        || c.then[f][c.identity[mf.tgt]] != static_cast<std::int32_t>(f)) {
      return ValidationReport::fail("unit law fails for '" + mf.name + "'");
    }
  }
  for (Index f = 0; f < nm; ++f) {
    for (Index g = 0; g < nm; ++g) {
      std::int32_t fg = c.then[f][g];
      if (fg < 0) {
        continue;
      }
      for (Index h = 0; h < nm; ++h) {
        std::int32_t gh = c.then[g][h];
        if (gh < 0) {
          continue;
        }
        if (c.then[static_cast<std::size_t>(fg)][h] != c.then[f][static_cast<std::size_t>(gh)]) {
          return ValidationReport::fail("associativity fails for '" + c.morphisms[f].name + "', '"
                                        + c.morphisms[g].name + "', '" + c.morphisms[h].name + "'");
        }
      }
    }
  }
  return ValidationReport::pass();
}

FinCategory group_as_category(FiniteGroup const& g) {
  FinCategory c;
  c.objects = {"*"};
  for (Elem a = 0; a < g.order(); ++a) {
    c.morphisms.push_back({g.names[a], 0, 0});
  }
  c.identity = {g.e};
  c.then.assign(g.order(), std::vector<std::int32_t>(g.order()));
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) {
      c.then[a][b] = static_cast<std::int32_t>(g.mul(a, b));
    }
  }
  return c;
}

FinCategory discrete_category(std::vector<std::string> const& objects) {
  FinCategory c;
  c.objects = objects;
  for (Index x = 0; x < objects.size(); ++x) {
    c.morphisms.push_back({"id_" + objects[x], x, x});
    c.identity.push_back(x);
  }
  c.then.assign(objects.size(), std::vector<std::int32_t>(objects.size(), kUndefined));
  for (Index x = 0; x < objects.size(); ++x) {
    c.then[x][x] = static_cast<std::int32_t>(x);
  }
  return c;
}

FinCategory terminal_category() { return discrete_category({"*"}); }

FinCategory product_category(FinCategory const& x, FinCategory const& y) {
  FinCategory       c;
  std::size_t const oy = y.num_objects();
  std::size_t const my = y.num_morphisms();
  for (auto const& a : x.objects) {
    for (auto const& b : y.objects) {
      c.objects.push_back("(" + a + "," + b + ")");
    }
  }
  for (auto const& f : x.morphisms) {
    for (auto const& g : y.morphisms) {
      c.morphisms.push_back({"(" + f.name + "," + g.name + ")",
                             static_cast<Index>(f.src * oy + g.src),
                             static_cast<Index>(f.tgt * oy + g.tgt)});
    }
  }
  for (Index a = 0; a < x.num_objects(); ++a) {
    for (Index b = 0; b < oy; ++b) {
      c.identity.push_back(static_cast<Index>(x.identity[a] * my + y.identity[b]));
    }
  }
  std::size_t const nm = c.morphisms.size();
  c.then.assign(nm, std::vector<std::int32_t>(nm, kUndefined));
  for (Index u = 0; u < nm; ++u) {
    for (Index v = 0; v < nm; ++v) {
      std::int32_t fx = x.then[u / my][v / my];
      std::int32_t gy = y.then[u % my][v % my];
      if (fx >= 0 && gy >= 0) {
        c.then[u][v] = static_cast<std::int32_t>(static_cast<std::size_t>(fx) * my
                                                 + static_cast<std::size_t>(gy));
      }
    }
  }
  return c;
}

FinCategory linear_order_category(std::size_t n) {
  FinCategory                           c;
  std::map<std::pair<Index, Index>, Index> idx;
  for (Index i = 0; i < n; ++i) {
    c.objects.push_back(std::to_string(i));
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      idx[{i, j}] = static_cast<Index>(c.morphisms.size());
      c.morphisms.push_back({std::to_string(i) + "<=" + std::to_string(j), i, j});
    }
  }
  for (Index i = 0; i < n; ++i) {
    c.identity.push_back(idx[{i, i}]);
  }
  std::size_t const nm = c.morphisms.size();
  c.then.assign(nm, std::vector<std::int32_t>(nm, kUndefined));
  for (Index f = 0; f < nm; ++f) {
    for (Index g = 0; g < nm; ++g) {
      if (c.morphisms[f].tgt == c.morphisms[g].src) {
        c.then[f][g] = static_cast<std::int32_t>(idx[{c.morphisms[f].src, c.morphisms[g].tgt}]);
      }
    }
  }
  return c;
}

FinCategory circle_category() {
  FinCategory c;
  c.objects   = {"A", "B"};
  c.morphisms = {{"id_A", 0, 0}, {"id_B", 1, 1}, {"f", 0, 1}, {"g", 0, 1}};
  c.identity  = {0, 1};
  c.then.assign(4, std::vector<std::int32_t>(4, kUndefined));
  c.then[0][0] = 0;
  c.then[1][1] = 1;
  c.then[0][2] = c.then[2][1] = 2;
  c.then[0][3] = c.then[3][1] = 3;
  return c;
}

std::vector<std::vector<Index>> connected_components(FinCategory const& c) {
  UnionFind uf(c.num_objects());
  for (auto const& m : c.morphisms) {
    uf.unite(m.src, m.tgt);
  }
  return uf.classes();
}

// ---------------------------------------------------------------------------
// Metric spaces

ValidationReport validate(GenMetricSpace const& x) {
  std::size_t const n = x.size();
  if (!unique_names(x.points)) {
    return ValidationReport::fail("duplicate point names");
  }
  if (x.d.size() != n) {
    return ValidationReport::fail("distance matrix must be |X| x |X|");
  }
  for (auto const& row : x.d) {
    if (row.size() != n) {
      return ValidationReport::fail("distance matrix must be |X| x |X|");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Extended const& v = x.d[a][b];
      if (v.is_finite() && v.value() < 0) {
        return ValidationReport::fail("negative distance d(" + x.points[a] + "," + x.points[b] + ")");
      }
      if (a == b && !(v == Extended(0))) {
        return ValidationReport::fail("d(" + x.points[a] + "," + x.points[a] + ") != 0");
      }
      if (a != b && v == Extended(0)) {
        return ValidationReport::fail("distinct points " + x.points[a] + ", " + x.points[b]
                                      + " at distance 0 (metric must be separated)");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (x.d[a][c] > x.d[a][b] + x.d[b][c]) {
          return ValidationReport::fail("triangle inequality fails: d(" + x.points[a] + ","
                                        + x.points[c] + ") > d(" + x.points[a] + ","
                                        + x.points[b] + ") + d(" + x.points[b] + ","
                                        + x.points[c] + ")");
        }
      }
    }
  }
  return ValidationReport::pass();
}

GenMetricSpace tensor_metric(GenMetricSpace const& x, GenMetricSpace const& y) {
  GenMetricSpace    t;
  std::size_t const ny = y.size();
  for (auto const& a : x.points) {
    for (auto const& b : y.points) {
      t.points.push_back("(" + a + "," + b + ")");
    }
  }
  std::size_t const n = t.points.size();
  t.d.assign(n, std::vector<Extended>(n));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      t.d[u][v] = x.d[u / ny][v / ny] + y.d[u % ny][v % ny];
    }
  }
  return t;
}

GenMetricSpace digraph_metric(std::vector<std::string> points,
                              std::vector<std::pair<Index, Index>> const& edges) {
  GenMetricSpace    x;
  std::size_t const n = points.size();
  x.points            = std::move(points);
  std::vector<std::vector<Index>> out(n);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) {
      throw ValidationError("edge endpoint out of range");
    }
    if (a != b) {
      out[a].push_back(b);
    }
  }
  x.d.assign(n, std::vector<Extended>(n, Extended::infinity()));
  for (Index s = 0; s < n; ++s) {
    std::vector<long> dist(n, -1);
    std::queue<Index> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Index a = q.front();
      q.pop();
      for (Index b : out[a]) {
        if (dist[b] < 0) {
          dist[b] = dist[a] + 1;
          q.push(b);
        }
      }
    }
    for (Index t = 0; t < n; ++t) {
      if (dist[t] >= 0) {
        x.d[s][t] = Extended(dist[t]);
      }
    }
  }
  return x;
}

namespace {
std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) {
    v.push_back(std::to_string(i));
  }
  return v;
}
}  // namespace

GenMetricSpace cycle_digraph(std::size_t n) {
  std::vector<std::pair<Index, Index>> e;
  for (Index i = 0; i < n; ++i) {
    e.emplace_back(i, static_cast<Index>((i + 1) % n));
  }
  return digraph_metric(numbered(n), e);
}

GenMetricSpace cycle_graph(std::size_t n) {
  std::vector<std::pair<Index, Index>> e;
  for (Index i = 0; i < n; ++i) {
    auto j = static_cast<Index>((i + 1) % n);
    e.emplace_back(i, j);
    e.emplace_back(j, i);
  }
  return digraph_metric(numbered(n), e);
}

GenMetricSpace complete_graph(std::size_t n) { return discrete_space(n, Extended(1)); }

GenMetricSpace discrete_space(std::size_t n, Extended const& d) {
  GenMetricSpace x;
  x.points = numbered(n);
  x.d.assign(n, std::vector<Extended>(n, d));
  for (std::size_t i = 0; i < n; ++i) {
    x.d[i][i] = Extended(0);
  }
  return x;
}

// ---------------------------------------------------------------------------
// Normed groups

ValidationReport validate(NormedGroup const& g) {
  if (auto r = validate_group(g.group); !r) {
    return r;
  }
  FiniteGroup const& G = g.group;
  if (g.norm.size() != G.order()) {
    return ValidationReport::fail("norm must assign a value to every element");
  }
  if (g.norm[G.e] != 0) {
    return ValidationReport::fail("|e| != 0");
  }
  for (Elem a = 0; a < G.order(); ++a) {
    if (a != G.e && g.norm[a] <= 0) {
      return ValidationReport::fail("|" + G.names[a] + "| must be positive");
    }
  }
  for (Elem a = 0; a < G.order(); ++a) {
    for (Elem b = 0; b < G.order(); ++b) {
      if (g.norm[G.mul(a, b)] > g.norm[a] + g.norm[b]) {
        return ValidationReport::fail("|gh| <= |g| + |h| fails for g = " + G.names[a]
                                      + ", h = " + G.names[b]);
      }
      if (g.norm[G.conj(a, b)] != g.norm[b]) {
        return ValidationReport::fail("norm is not conjugation invariant: |" + G.names[a] + " "
                                      + G.names[b] + " " + G.names[a] + "^-1| != |" + G.names[b]
                                      + "|");
      }
    }
  }
  return ValidationReport::pass();
}

NormedGroup word_norm_group(FiniteGroup const& g, Subset const& s) {
  std::set<Elem> steps;
  for (Elem x : s) {
    if (x >= g.order()) {
      throw ValidationError("word norm generator out of range");
    }
    for (Elem c = 0; c < g.order(); ++c) {
      steps.insert(g.conj(c, x));
      steps.insert(g.conj(c, g.inv(x)));
    }
  }
  std::vector<long> dist(g.order(), -1);
  std::queue<Elem>  q;
  dist[g.e] = 0;
  q.push(g.e);
  while (!q.empty()) {
    Elem a = q.front();
    q.pop();
    for (Elem t : steps) {
      Elem b = g.mul(a, t);
      if (dist[b] < 0) {
        dist[b] = dist[a] + 1;
        q.push(b);
      }
    }
  }
  NormedGroup out;
  out.group = g;
  for (Elem a = 0; a < g.order(); ++a) {
    if (dist[a] < 0) {
      throw ValidationError("word norm: the given set does not normally generate the group ('"
                            + g.names[a] + "' is unreachable)");
    }
    out.norm.emplace_back(dist[a]);
  }
  return out;
}

GenMetricSpace metric_of(NormedGroup const& g) {
  GenMetricSpace x;
  x.points          = g.group.names;
  std::size_t const n = g.group.order();
  x.d.assign(n, std::vector<Extended>(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      x.d[a][b] = Extended(g.dist(a, b));
    }
  }
  return x;
}

// ---------------------------------------------------------------------------
// Cat-groups

ValidationReport validate(CatGroup const& g) {
  if (auto r = validate_group(g.group); !r) {
    return r;
  }
  if (auto r = validate(g.cells); !r) {
    return r;
  }
  FiniteGroup const& G = g.group;
  FinCategory const& C = g.cells;
  std::size_t const  m = C.num_morphisms();
  if (C.num_objects() != G.order()) {
    return ValidationReport::fail("objects of the Cat-group must be the group elements");
  }
  if (g.mul.size() != m) {
    return ValidationReport::fail("arrow multiplication table has wrong size");
  }
  for (Index f = 0; f < m; ++f) {
    if (g.mul[f].size() != m) {
      return ValidationReport::fail("arrow multiplication table has wrong size");
    }
    for (Index h = 0; h < m; ++h) {
      std::int32_t p = g.mul[f][h];
      if (p < 0 || static_cast<std::size_t>(p) >= m) {
        return ValidationReport::fail("product of arrows '" + C.morphisms[f].name + "', '"
                                      + C.morphisms[h].name + "' is missing");
      }
      auto const& mp = C.morphisms[static_cast<std::size_t>(p)];
      if (mp.src != G.mul(C.morphisms[f].src, C.morphisms[h].src)
          || mp.tgt != G.mul(C.morphisms[f].tgt, C.morphisms[h].tgt)) {
        return ValidationReport::fail("product of arrows '" + C.morphisms[f].name + "', '"
                                      + C.morphisms[h].name + "' has the wrong endpoints");
      }
    }
  }
  for (Elem a = 0; a < G.order(); ++a) {
    for (Elem b = 0; b < G.order(); ++b) {
      if (g.mul[C.identity[a]][C.identity[b]] != static_cast<std::int32_t>(C.identity[G.mul(a, b)])) {
        return ValidationReport::fail("multiplication does not preserve identities");
      }
    }
  }
  Index const unit = C.identity[G.e];
  for (Index f = 0; f < m; ++f) {
    if (g.mul[unit][f] != static_cast<std::int32_t>(f) || g.mul[f][unit] != static_cast<std::int32_t>(f)) {
      return ValidationReport::fail("identity arrow of e is not a unit for '" + C.morphisms[f].name + "'");
    }
    for (Index h = 0; h < m; ++h) {
      auto const fh = static_cast<std::size_t>(g.mul[f][h]);
      for (Index k = 0; k < m; ++k) {
        if (g.mul[fh][k] != g.mul[f][static_cast<std::size_t>(g.mul[h][k])]) {
          return ValidationReport::fail("arrow multiplication is not associative");
        }
      }
    }
  }
  // Interchange: m(f;f2, h;h2) = m(f,h);m(f2,h2).
  for (Index f = 0; f < m; ++f) {
    for (Index f2 = 0; f2 < m; ++f2) {
      std::int32_t ff = C.then[f][f2];
      if (ff < 0) {
        continue;
      }
      for (Index h = 0; h < m; ++h) {
        for (Index h2 = 0; h2 < m; ++h2) {
          std::int32_t hh = C.then[h][h2];
          if (hh < 0) {
            continue;
          }
          std::int32_t lhs = g.mul[static_cast<std::size_t>(ff)][static_cast<std::size_t>(hh)];
          std::int32_t rhs = C.then[static_cast<std::size_t>(g.mul[f][h])]
                                   [static_cast<std::size_t>(g.mul[f2][h2])];
          if (lhs != rhs) {
            return ValidationReport::fail("interchange law fails for '" + C.morphisms[f].name
                                          + "';'" + C.morphisms[f2].name + "' and '"
                                          + C.morphisms[h].name + "';'" + C.morphisms[h2].name
                                          + "'");
          }
        }
      }
    }
  }
  return ValidationReport::pass();
}

CatGroup two_group_from_normal_subgroup(FiniteGroup const& g, Subset const& n) {
  if (!is_normal_subgroup(g, n)) {
    throw ValidationError("N is not a normal subgroup of G");
  }
  CatGroup out;
  out.group = g;
  auto& C   = out.cells;
  C.objects = g.names;
  std::vector<std::int32_t> pos(g.order(), -1);
  for (std::size_t i = 0; i < n.size(); ++i) {
    pos[n[i]] = static_cast<std::int32_t>(i);
  }
  std::size_t const nn    = n.size();
  auto              arrow = [&](Elem k, Elem base) {
    return static_cast<Index>(base * nn + static_cast<std::size_t>(pos[k]));
  };
  for (Elem base = 0; base < g.order(); ++base) {
    for (Elem k : n) {
      C.morphisms.push_back({"(" + g.names[k] + "," + g.names[base] + ")", base, g.mul(k, base)});
    }
  }
  for (Elem base = 0; base < g.order(); ++base) {
    C.identity.push_back(arrow(g.e, base));
  }
  std::size_t const m = C.morphisms.size();
  C.then.assign(m, std::vector<std::int32_t>(m, kUndefined));
  out.mul.assign(m, std::vector<std::int32_t>(m));
  for (Index a = 0; a < m; ++a) {
    Elem const ga = static_cast<Elem>(a / nn);
    Elem const ka = n[a % nn];
    for (Index b = 0; b < m; ++b) {
      Elem const gb = static_cast<Elem>(b / nn);
      Elem const kb = n[b % nn];
      if (g.mul(ka, ga) == gb) {
        // (ka, ga) then (kb, ka ga) = (kb ka, ga)
        C.then[a][b] = static_cast<std::int32_t>(arrow(g.mul(kb, ka), ga));
      }
      // (ka, ga) * (kb, gb) = (ka . ga kb ga^-1, ga gb)
      out.mul[a][b] = static_cast<std::int32_t>(arrow(g.mul(ka, g.conj(ga, kb)), g.mul(ga, gb)));
    }
  }
  return out;
}

ComponentGroup component_group(CatGroup const& g) {
  ComponentGroup out;
  for (auto const& cls : connected_components(g.cells)) {
    if (std::find(cls.begin(), cls.end(), g.group.e) != cls.end()) {
      out.identity_component.assign(cls.begin(), cls.end());
    }
  }
  std::sort(out.identity_component.begin(), out.identity_component.end());
  out.quotient = quotient_group(g.group, out.identity_component);
  return out;
}

// ---------------------------------------------------------------------------
// Preordered groups

Subset PreorderedGroup::positive_cone() const {
  Subset p;
  for (Elem a = 0; a < group.order(); ++a) {
    if (leq[group.e][a]) {
      p.push_back(a);
    }
  }
  return p;
}

ValidationReport validate(PreorderedGroup const& g) {
  if (auto r = validate_group(g.group); !r) {
    return r;
  }
  FiniteGroup const& G = g.group;
  std::size_t const  n = G.order();
  if (g.leq.size() != n) {
    return ValidationReport::fail("order relation must be |G| x |G|");
  }
  for (auto const& row : g.leq) {
    if (row.size() != n) {
      return ValidationReport::fail("order relation must be |G| x |G|");
    }
  }
  for (Elem a = 0; a < n; ++a) {
    if (!g.leq[a][a]) {
      return ValidationReport::fail("not reflexive at " + G.names[a]);
    }
    for (Elem b = 0; b < n; ++b) {
      if (!g.leq[a][b]) {
        continue;
      }
      for (Elem c = 0; c < n; ++c) {
        if (g.leq[b][c] && !g.leq[a][c]) {
          return ValidationReport::fail("not transitive: " + G.names[a] + " <= " + G.names[b]
                                        + " <= " + G.names[c]);
        }
        if (!g.leq[G.mul(a, c)][G.mul(b, c)] || !g.leq[G.mul(c, a)][G.mul(c, b)]) {
          return ValidationReport::fail("order is not translation invariant: " + G.names[a]
                                        + " <= " + G.names[b] + " under " + G.names[c]);
        }
      }
    }
  }
  return ValidationReport::pass();
}

PreorderedGroup preordered_group_from_cone(FiniteGroup const& g, Subset const& p) {
  std::vector<char> in(g.order(), 0);
  for (Elem x : p) {
    if (x >= g.order()) {
      throw ValidationError("cone element out of range");
    }
    in[x] = 1;
  }
  if (!in[g.e]) {
    throw ValidationError("positive cone must contain the identity");
  }
  for (Elem a : p) {
    for (Elem b : p) {
      if (!in[g.mul(a, b)]) {
        throw ValidationError("positive cone is not closed under multiplication: " + g.names[a]
                              + " " + g.names[b]);
      }
    }
    for (Elem c = 0; c < g.order(); ++c) {
      if (!in[g.conj(c, a)]) {
        throw ValidationError("positive cone is not closed under conjugation: " + g.names[a]
                              + " by " + g.names[c]);
      }
    }
  }
  PreorderedGroup out;
  out.group = g;
  out.leq.assign(g.order(), std::vector<char>(g.order(), 0));
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) {
      out.leq[a][b] = in[g.mul(b, g.inv(a))];
    }
  }
  return out;
}

CatGroup as_cat_group(PreorderedGroup const& g) {
  FiniteGroup const& G = g.group;
  CatGroup           out;
  out.group       = G;
  auto& C         = out.cells;
  C.objects       = G.names;
  std::size_t const n = G.order();
  std::vector<std::vector<std::int32_t>> idx(n, std::vector<std::int32_t>(n, -1));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (g.leq[a][b]) {
        idx[a][b] = static_cast<std::int32_t>(C.morphisms.size());
        C.morphisms.push_back({G.names[a] + "<=" + G.names[b], a, b});
      }
    }
  }
  for (Elem a = 0; a < n; ++a) {
    C.identity.push_back(static_cast<Index>(idx[a][a]));
  }
  std::size_t const m = C.morphisms.size();
  C.then.assign(m, std::vector<std::int32_t>(m, kUndefined));
  out.mul.assign(m, std::vector<std::int32_t>(m));
  for (Index f = 0; f < m; ++f) {
    auto const& mf = C.morphisms[f];
    for (Index h = 0; h < m; ++h) {
      auto const& mh = C.morphisms[h];
      if (mf.tgt == mh.src) {
        C.then[f][h] = idx[mf.src][mh.tgt];
      }
      out.mul[f][h] = idx[G.mul(mf.src, mh.src)][G.mul(mf.tgt, mh.tgt)];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Strict n-categories

Index StrictNCat::source_at(int k, Index c, int j) const {
  for (int d = k; d > j; --d) {
    c = src[static_cast<std::size_t>(d)][c];
  }
  return c;
}

Index StrictNCat::target_at(int k, Index c, int j) const {
  for (int d = k; d > j; --d) {
    c = tgt[static_cast<std::size_t>(d)][c];
  }
  return c;
}

Index StrictNCat::identity_to(int k, Index c, int m) const {
  for (int d = k; d < m; ++d) {
    c = id[static_cast<std::size_t>(d)][c];
  }
  return c;
}

namespace {

void shape(StrictNCat& x) {
  auto const levels = static_cast<std::size_t>(x.n + 1);
  x.names.resize(levels);
  x.src.resize(levels);
  x.tgt.resize(levels);
  x.id.resize(levels - 1);
  x.comp.resize(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    x.comp[k].resize(k);
  }
}

}  // namespace

ValidationReport validate(StrictNCat const& x) {
  if (x.n < 0) {
    return ValidationReport::fail("negative level");
  }
  auto const levels = static_cast<std::size_t>(x.n + 1);
  if (x.names.size() != levels || x.src.size() != levels || x.tgt.size() != levels
      || x.id.size() != levels - 1 || x.comp.size() != levels) {
    return ValidationReport::fail("cell tables do not match the level");
  }
  auto name = [&](int k, Index c) {
    return "'" + x.names[static_cast<std::size_t>(k)][c] + "'";
  };
  for (int k = 0; k <= x.n; ++k) {
    auto const uk = static_cast<std::size_t>(k);
    if (!unique_names(x.names[uk])) {
      return ValidationReport::fail("duplicate cell names in dimension " + std::to_string(k));
    }
    std::size_t const nk = x.count(k);
    if (k >= 1) {
      if (x.src[uk].size() != nk || x.tgt[uk].size() != nk) {
        return ValidationReport::fail("source/target tables have wrong size in dimension "
                                      + std::to_string(k));
      }
      for (Index c = 0; c < nk; ++c) {
        if (x.src[uk][c] >= x.count(k - 1) || x.tgt[uk][c] >= x.count(k - 1)) {
          return ValidationReport::fail("boundary of " + name(k, c) + " out of range");
        }
        if (k >= 2
            && (x.src[uk - 1][x.src[uk][c]] != x.src[uk - 1][x.tgt[uk][c]]
                || x.tgt[uk - 1][x.src[uk][c]] != x.tgt[uk - 1][x.tgt[uk][c]])) {
          return ValidationReport::fail("globularity fails for " + name(k, c));
        }
      }
    }
    if (k < x.n) {
      if (x.id[uk].size() != nk) {
        return ValidationReport::fail("identity table has wrong size in dimension "
                                      + std::to_string(k));
      }
      for (Index c = 0; c < nk; ++c) {
        Index i = x.id[uk][c];
        if (i >= x.count(k + 1) || x.src[uk + 1][i] != c || x.tgt[uk + 1][i] != c) {
          return ValidationReport::fail("identity of " + name(k, c) + " has wrong boundary");
        }
      }
    }
    if (x.comp[uk].size() != uk) {
      return ValidationReport::fail("composition tables have wrong shape");
    }
    for (int j = 0; j < k; ++j) {
      auto const& table = x.comp[uk][static_cast<std::size_t>(j)];
      if (table.size() != nk * nk) {
        return ValidationReport::fail("composition table has wrong size");
      }
      for (Index a = 0; a < nk; ++a) {
        for (Index b = 0; b < nk; ++b) {
          std::int32_t r          = x.compose(k, j, a, b);
          bool const   composable = x.target_at(k, a, j) == x.source_at(k, b, j);
          if (!composable) {
            if (r != kUndefined) {
              return ValidationReport::fail("composite of non-composable " + name(k, a) + ", "
                                            + name(k, b) + " is defined");
            }
            continue;
          }
          if (r < 0 || static_cast<std::size_t>(r) >= nk) {
            return ValidationReport::fail("composite of " + name(k, a) + ", " + name(k, b)
                                          + " along dimension " + std::to_string(j) + " is missing");
          }
          auto const   ur = static_cast<Index>(r);
          std::int32_t want_src;
          std::int32_t want_tgt;
          if (j == k - 1) {
            want_src = static_cast<std::int32_t>(x.src[uk][a]);
            want_tgt = static_cast<std::int32_t>(x.tgt[uk][b]);
          } else {
            want_src = x.compose(k - 1, j, x.src[uk][a], x.src[uk][b]);
            want_tgt = x.compose(k - 1, j, x.tgt[uk][a], x.tgt[uk][b]);
          }
          if (static_cast<std::int32_t>(x.src[uk][ur]) != want_src
              || static_cast<std::int32_t>(x.tgt[uk][ur]) != want_tgt) {
            return ValidationReport::fail("composite of " + name(k, a) + ", " + name(k, b)
                                          + " has the wrong boundary");
          }
        }
        // Units.
        Index const left  = x.identity_to(j, x.source_at(k, a, j), k);
        Index const right = x.identity_to(j, x.target_at(k, a, j), k);
        if (x.compose(k, j, left, a) != static_cast<std::int32_t>(a)
            || x.compose(k, j, a, right) != static_cast<std::int32_t>(a)) {
          return ValidationReport::fail("unit law fails for " + name(k, a) + " in dimension "
                                        + std::to_string(j));
        }
      }
      // Associativity.
      for (Index a = 0; a < nk; ++a) {
        for (Index b = 0; b < nk; ++b) {
          std::int32_t ab = x.compose(k, j, a, b);
          if (ab < 0) {
            continue;
          }
          for (Index c = 0; c < nk; ++c) {
            std::int32_t bc = x.compose(k, j, b, c);
            if (bc < 0) {
              continue;
            }
            if (x.compose(k, j, static_cast<Index>(ab), c)
                != x.compose(k, j, a, static_cast<Index>(bc))) {
              return ValidationReport::fail("associativity fails for " + name(k, a) + ", "
                                            + name(k, b) + ", " + name(k, c));
            }
          }
        }
      }
      // Identities are functorial.
      if (k < x.n) {
        for (Index a = 0; a < nk; ++a) {
          for (Index b = 0; b < nk; ++b) {
            std::int32_t ab = x.compose(k, j, a, b);
            if (ab < 0) {
              continue;
            }
            if (x.compose(k + 1, j, x.id[uk][a], x.id[uk][b])
                != static_cast<std::int32_t>(x.id[uk][static_cast<Index>(ab)])) {
              return ValidationReport::fail("identity does not preserve the composite of "
                                            + name(k, a) + ", " + name(k, b));
            }
          }
        }
      }
    }
    // Interchange for i < j < k.
    for (int j = 1; j < k; ++j) {
      std::vector<std::pair<Index, Index>> pairs;
      for (Index a = 0; a < nk; ++a) {
        for (Index b = 0; b < nk; ++b) {
          if (x.compose(k, j, a, b) >= 0) {
            pairs.emplace_back(a, b);
          }
        }
      }
      for (int i = 0; i < j; ++i) {
        for (auto [a, b] : pairs) {
          for (auto [c, d] : pairs) {
            std::int32_t ac = x.compose(k, i, a, c);
            std::int32_t bd = x.compose(k, i, b, d);
            if (ac < 0 || bd < 0) {
              continue;
            }
            std::int32_t lhs = x.compose(k, i, static_cast<Index>(x.compose(k, j, a, b)),
                                         static_cast<Index>(x.compose(k, j, c, d)));
            std::int32_t rhs = x.compose(k, j, static_cast<Index>(ac), static_cast<Index>(bd));
            if (lhs != rhs) {
              return ValidationReport::fail("interchange law fails for " + name(k, a) + ", "
                                            + name(k, b) + ", " + name(k, c) + ", " + name(k, d));
            }
          }
        }
      }
    }
  }
  return ValidationReport::pass();
}

StrictNCat discrete_ncat(std::vector<std::string> const& points) {
  StrictNCat x;
  x.n = 0;
  shape(x);
  x.names[0] = points;
  return x;
}

StrictNCat as_ncat(FinCategory const& c) {
  StrictNCat x;
  x.n = 1;
  shape(x);
  x.names[0] = c.objects;
  std::size_t const m = c.num_morphisms();
  for (auto const& f : c.morphisms) {
    x.names[1].push_back(f.name);
    x.src[1].push_back(f.src);
    x.tgt[1].push_back(f.tgt);
  }
  x.id[0] = c.identity;
  x.comp[1][0].resize(m * m);
  for (Index a = 0; a < m; ++a) {
    for (Index b = 0; b < m; ++b) {
      x.comp[1][0][a * m + b] = c.then[a][b];
    }
  }
  return x;
}

StrictNCat as_ncat(CatGroup const& g) {
  StrictNCat x;
  x.n = 2;
  shape(x);
  FiniteGroup const& G = g.group;
  FinCategory const& C = g.cells;
  std::size_t const  n = G.order();
  std::size_t const  m = C.num_morphisms();
  x.names[0]           = {"*"};
  x.names[1]           = G.names;
  x.src[1].assign(n, 0);
  x.tgt[1].assign(n, 0);
  x.id[0] = {G.e};
  x.comp[1][0].resize(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      x.comp[1][0][a * n + b] = static_cast<std::int32_t>(G.mul(a, b));
    }
  }
  for (auto const& f : C.morphisms) {
    x.names[2].push_back(f.name);
    x.src[2].push_back(f.src);
    x.tgt[2].push_back(f.tgt);
  }
  x.id[1] = C.identity;
  x.comp[2][0].resize(m * m);
  x.comp[2][1].resize(m * m);
  for (Index a = 0; a < m; ++a) {
    for (Index b = 0; b < m; ++b) {
      x.comp[2][0][a * m + b] = g.mul[a][b];
      x.comp[2][1][a * m + b] = C.then[a][b];
    }
  }
  return x;
}

FinCategory as_category(StrictNCat const& x) {
  if (x.n != 1) {
    throw std::invalid_argument("as_category: not a 1-category");
  }
  FinCategory c;
  c.objects           = x.names[0];
  std::size_t const m = x.count(1);
  for (Index f = 0; f < m; ++f) {
    c.morphisms.push_back({x.names[1][f], x.src[1][f], x.tgt[1][f]});
  }
  c.identity = x.id[0];
  c.then.assign(m, std::vector<std::int32_t>(m));
  for (Index a = 0; a < m; ++a) {
    for (Index b = 0; b < m; ++b) {
      c.then[a][b] = x.compose(1, 0, a, b);
    }
  }
  return c;
}

StrictNCat suspension(StrictNCat const& x) {
  StrictNCat y;
  y.n = x.n + 1;
  shape(y);
  y.names[0] = {"A", "B"};
  auto tower = [](int k, char const* obj) {
    std::string base = std::string(obj);
    return k == 1 ? "id(" + base + ")" : "id^" + std::to_string(k) + "(" + base + ")";
  };
  for (int k = 0; k <= x.n; ++k) {
    auto const uk = static_cast<std::size_t>(k);
    auto const uy = uk + 1;
    y.names[uy]   = {tower(k + 1, "A"), tower(k + 1, "B")};
    for (auto const& nm : x.names[uk]) {
      y.names[uy].push_back("[" + nm + "]");
    }
    std::size_t const nx = x.count(k);
    std::size_t const ny = nx + 2;
    y.src[uy]            = {0, 1};
    y.tgt[uy]            = {0, 1};
    for (Index c = 0; c < nx; ++c) {
      y.src[uy].push_back(k == 0 ? 0 : 2 + x.src[uk][c]);
      y.tgt[uy].push_back(k == 0 ? 1 : 2 + x.tgt[uk][c]);
    }
    if (k < x.n) {
      y.id[uy] = {0, 1};
      for (Index c = 0; c < nx; ++c) {
        y.id[uy].push_back(2 + x.id[uk][c]);
      }
    }
    // Along objects: forced composition with the identity towers.
    auto& along0 = y.comp[uy][0];
    along0.assign(ny * ny, kUndefined);
    along0[0 * ny + 0] = 0;
    along0[1 * ny + 1] = 1;
    for (Index c = 0; c < nx; ++c) {
      along0[0 * ny + 2 + c]       = static_cast<std::int32_t>(2 + c);
      along0[(2 + c) * ny + 1]     = static_cast<std::int32_t>(2 + c);
    }
    // Along higher cells: inside each hom.
    for (int j = 0; j < k; ++j) {
      auto& t = y.comp[uy][static_cast<std::size_t>(j + 1)];
      t.assign(ny * ny, kUndefined);
      t[0 * ny + 0] = 0;
      t[1 * ny + 1] = 1;
      for (Index a = 0; a < nx; ++a) {
        for (Index b = 0; b < nx; ++b) {
          std::int32_t r = x.compose(k, j, a, b);
          if (r >= 0) {
            t[(2 + a) * ny + 2 + b] = 2 + r;
          }
        }
      }
    }
  }
  y.id[0] = {0, 1};
  return y;
}

StrictNCat suspension(FinCategory const& x) { return suspension(as_ncat(x)); }

StrictNCat sphere_ncat(int n) {
  if (n < 0) {
    throw std::invalid_argument("sphere_ncat: negative dimension");
  }
  StrictNCat s = discrete_ncat({"a", "b"});
  for (int k = 0; k < n; ++k) {
    s = suspension(s);
  }
  return s;
}

std::vector<std::vector<Index>> connected_components(StrictNCat const& x) {
  UnionFind uf(x.count(0));
  if (x.n >= 1) {
    for (Index f = 0; f < x.count(1); ++f) {
      uf.unite(x.src[1][f], x.tgt[1][f]);
    }
  }
  return uf.classes();
}

}  // namespace itermag
