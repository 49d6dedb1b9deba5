#include <array>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "itermag/errors.hpp"
#include "itermag/interner.hpp"
#include "itermag/iterated.hpp"

namespace itermag {

namespace {

constexpr std::int32_t kUnknown = -2;

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

struct MbEngine::Impl {
  struct Table {
    int          L = 0, b = 0, p = 0, r = 0;
    FlatInterner keys;
    // memoized structure maps, one vector per index i
    std::vector<std::vector<std::int32_t>> hface, vface, hdeg, vdeg;
    // ids grouped by source b-cell (tables used as subs)
    std::vector<std::vector<std::uint32_t>> by_source;
    bool                                    indexed = false;

    explicit Table(std::size_t width) : keys(width) {}
  };

  StrictNCat                                                  x;
  std::map<std::array<int, 4>, std::unique_ptr<Table>>        tables;
  std::map<std::array<int, 4>, std::unordered_map<std::uint64_t, std::uint32_t>> compose_memo;
  std::map<std::array<int, 3>, std::unordered_map<std::uint32_t, std::uint32_t>> const_memo;

  explicit Impl(StrictNCat c) : x(std::move(c)) {}

  std::size_t cells(int k) const { return x.count(k); }

  Table& table(int L, int b, int p, int r) {
    if (L == 0) {
      p = r = 0;
    }
    std::array<int, 4> const k{L, b, p, r};
    auto                     it = tables.find(k);
    if (it != tables.end()) {
      return *it->second;
    }
    auto const width = L == 0 ? 1u : static_cast<std::size_t>(2 * p + 1);
    auto       t     = std::make_unique<Table>(width);
    t->L = L;
    t->b = b;
    t->p = p;
    t->r = r;
    if (L == 0) {
      for (std::uint32_t c = 0; c < cells(b); ++c) {
        std::uint32_t key[1] = {c};
        t->keys.intern(key);
      }
    } else {
      Table& sub = table(L - 1, b + 1, r, r);
      index(sub);
      std::vector<std::uint32_t> key(width);
      auto const                 P = static_cast<std::size_t>(p);
      // key = objs[0..p], subs[0..p-1]
      auto rec = [&](auto& self, std::size_t k) -> void {
        if (k == P) {
          t->keys.intern(key);
          return;
        }
        for (std::uint32_t s : sub.by_source[key[k]]) {
          key[P + 1 + k] = s;
          key[k + 1]     = target(sub, s);
          self(self, k + 1);
        }
      };
      for (std::uint32_t c = 0; c < cells(b); ++c) {
        key[0] = c;
        rec(rec, 0);
      }
    }
    auto& ref = *t;
    auto  n   = ref.keys.size();
    ref.hface.assign(static_cast<std::size_t>(p + 1), std::vector<std::int32_t>(n, kUnknown));
    ref.vface.assign(static_cast<std::size_t>(r + 1), std::vector<std::int32_t>(n, kUnknown));
    ref.hdeg.assign(static_cast<std::size_t>(p + 1), std::vector<std::int32_t>(n, kUnknown));
    ref.vdeg.assign(static_cast<std::size_t>(r + 1), std::vector<std::int32_t>(n, kUnknown));
    tables.emplace(k, std::move(t));
    return ref;
  }

  // b-cell at position 0 of a generator (the cell itself at level 0).
  Index first_obj(Table const& t, std::uint32_t id) const { return t.keys.key(id)[0]; }
  Index source(Table const& t, std::uint32_t id) const {
    return x.src[static_cast<std::size_t>(t.b)][first_obj(t, id)];
  }
  Index target(Table const& t, std::uint32_t id) const {
    return x.tgt[static_cast<std::size_t>(t.b)][first_obj(t, id)];
  }

  void index(Table& t) {
    if (t.indexed) {
      return;
    }
    t.by_source.assign(cells(t.b - 1), {});
    for (std::uint32_t id = 0; id < t.keys.size(); ++id) {
      t.by_source[source(t, id)].push_back(id);
    }
    t.indexed = true;
  }

  std::uint32_t lookup(Table const& t, std::vector<std::uint32_t> const& key) const {
    std::uint32_t id = t.keys.find(key);
    if (id == FlatInterner::kMissing) {
      throw std::logic_error("MB^n structure map left the enumerated basis");
    }
    return id;
  }

  // compose along j-cells, both arguments in the diagonal table (L, b, r, r)
  std::uint32_t compose(int L, int b, int r, int j, std::uint32_t s, std::uint32_t t) {
    if (L == 0) {
      std::int32_t c = x.compose(b, j, s, t);
      if (c < 0) {
        throw std::logic_error("MB^n composite undefined");
      }
      return static_cast<std::uint32_t>(c);
    }
    auto& memo = compose_memo[{L, b, r, j}];
    auto  it   = memo.find(pair_key(s, t));
    if (it != memo.end()) {
      return it->second;
    }
    Table&                     tab = table(L, b, r, r);
    auto                       ks  = tab.keys.key(s);
    auto                       kt  = tab.keys.key(t);
    std::vector<std::uint32_t> key(ks.size());
    auto const                 R = static_cast<std::size_t>(r);
    for (std::size_t k = 0; k <= R; ++k) {
      std::int32_t c = x.compose(b, j, ks[k], kt[k]);
      if (c < 0) {
        throw std::logic_error("MB^n composite undefined");
      }
      key[k] = static_cast<std::uint32_t>(c);
    }
    std::vector<std::uint32_t> a(ks.begin() + static_cast<std::ptrdiff_t>(R + 1), ks.end());
    std::vector<std::uint32_t> bb(kt.begin() + static_cast<std::ptrdiff_t>(R + 1), kt.end());
    for (std::size_t k = 0; k < R; ++k) {
      key[R + 1 + k] = compose(L - 1, b + 1, r, j, a[k], bb[k]);
    }
    std::uint32_t id = lookup(tab, key);
    memo.emplace(pair_key(s, t), id);
    return id;
  }

  // constant generator on the b-cell c in the diagonal table (L, b, r, r)
  std::uint32_t constant(int L, int b, int r, Index c) {
    if (L == 0) {
      return c;
    }
    auto& memo = const_memo[{L, b, r}];
    auto  it   = memo.find(c);
    if (it != memo.end()) {
      return it->second;
    }
    auto const                 R = static_cast<std::size_t>(r);
    std::vector<std::uint32_t> key(2 * R + 1, c);
    std::uint32_t const        inner = constant(L - 1, b + 1, r, x.id[static_cast<std::size_t>(b)][c]);
    for (std::size_t k = 0; k < R; ++k) {
      key[R + 1 + k] = inner;
    }
    std::uint32_t id = lookup(table(L, b, r, r), key);
    memo.emplace(c, id);
    return id;
  }

  std::uint32_t diag_face(int L, int b, int r, int i, std::uint32_t id) {
    if (L == 0) {
      return id;
    }
    return hface(table(L, b, r, r - 1), i, vface(table(L, b, r, r), i, id));
  }

  std::uint32_t diag_deg(int L, int b, int r, int i, std::uint32_t id) {
    if (L == 0) {
      return id;
    }
    return hdeg(table(L, b, r, r + 1), i, vdeg(table(L, b, r, r), i, id));
  }

  // (p, r) -> (p-1, r)
  std::uint32_t hface(Table& t, int i, std::uint32_t id) {
    if (t.L == 0) {
      return id;
    }
    auto& slot = t.hface[static_cast<std::size_t>(i)][id];
    if (slot != kUnknown) {
      return static_cast<std::uint32_t>(slot);
    }
    auto const                 P = static_cast<std::size_t>(t.p);
    auto                       k = t.keys.key(id);
    std::vector<std::uint32_t> objs(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(P + 1));
    std::vector<std::uint32_t> subs(k.begin() + static_cast<std::ptrdiff_t>(P + 1), k.end());
    auto const                 ui = static_cast<std::size_t>(i);
    if (ui == 0) {
      objs.erase(objs.begin());
      subs.erase(subs.begin());
    } else if (ui == P) {
      objs.pop_back();
      subs.pop_back();
    } else {
      subs[ui - 1] = compose(t.L - 1, t.b + 1, t.r, t.b, subs[ui - 1], subs[ui]);
      subs.erase(subs.begin() + static_cast<std::ptrdiff_t>(ui));
      objs.erase(objs.begin() + static_cast<std::ptrdiff_t>(ui));
    }
    objs.insert(objs.end(), subs.begin(), subs.end());
    auto res = lookup(table(t.L, t.b, t.p - 1, t.r), objs);
    slot     = static_cast<std::int32_t>(res);
    return res;
  }

  // (p, r) -> (p, r-1)
  std::uint32_t vface(Table& t, int i, std::uint32_t id) {
    if (t.L == 0) {
      return id;
    }
    auto& slot = t.vface[static_cast<std::size_t>(i)][id];
    if (slot != kUnknown) {
      return static_cast<std::uint32_t>(slot);
    }
    auto const                 P = static_cast<std::size_t>(t.p);
    auto                       k = t.keys.key(id);
    std::vector<std::uint32_t> key(k.begin(), k.end());
    for (std::size_t s = P + 1; s < key.size(); ++s) {
      key[s] = diag_face(t.L - 1, t.b + 1, t.r, i, key[s]);
    }
    auto res = lookup(table(t.L, t.b, t.p, t.r - 1), key);
    slot     = static_cast<std::int32_t>(res);
    return res;
  }

  // (p, r) -> (p+1, r)
  std::uint32_t hdeg(Table& t, int i, std::uint32_t id) {
    if (t.L == 0) {
      return id;
    }
    auto& slot = t.hdeg[static_cast<std::size_t>(i)][id];
    if (slot != kUnknown) {
      return static_cast<std::uint32_t>(slot);
    }
    auto const                 P  = static_cast<std::size_t>(t.p);
    auto const                 ui = static_cast<std::size_t>(i);
    auto                       k  = t.keys.key(id);
    std::vector<std::uint32_t> objs(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(P + 1));
    std::vector<std::uint32_t> subs(k.begin() + static_cast<std::ptrdiff_t>(P + 1), k.end());
    Index const                o = objs[ui];
    objs.insert(objs.begin() + static_cast<std::ptrdiff_t>(ui), o);
    subs.insert(subs.begin() + static_cast<std::ptrdiff_t>(ui),
                constant(t.L - 1, t.b + 1, t.r, x.id[static_cast<std::size_t>(t.b)][o]));
    objs.insert(objs.end(), subs.begin(), subs.end());
    auto res = lookup(table(t.L, t.b, t.p + 1, t.r), objs);
    slot     = static_cast<std::int32_t>(res);
    return res;
  }

  // (p, r) -> (p, r+1)
  std::uint32_t vdeg(Table& t, int i, std::uint32_t id) {
    if (t.L == 0) {
      return id;
    }
    auto& slot = t.vdeg[static_cast<std::size_t>(i)][id];
    if (slot != kUnknown) {
      return static_cast<std::uint32_t>(slot);
    }
    auto const                 P = static_cast<std::size_t>(t.p);
    auto                       k = t.keys.key(id);
    std::vector<std::uint32_t> key(k.begin(), k.end());
    for (std::size_t s = P + 1; s < key.size(); ++s) {
      key[s] = diag_deg(t.L - 1, t.b + 1, t.r, i, key[s]);
    }
    auto res = lookup(table(t.L, t.b, t.p, t.r + 1), key);
    slot     = static_cast<std::int32_t>(res);
    return res;
  }

  std::string label(int L, int b, int p, int r, std::uint32_t id) {
    Table& t = table(L, b, p, r);
    auto   k = t.keys.key(id);
    if (L == 0) {
      return x.names[static_cast<std::size_t>(b)][k[0]];
    }
    auto const  P = static_cast<std::size_t>(t.p);
    std::string s = "(" + x.names[static_cast<std::size_t>(b)][k[0]];
    for (std::size_t j = 0; j < P; ++j) {
      s += "; " + label(L - 1, b + 1, r, r, k[P + 1 + j]) + "; "
           + x.names[static_cast<std::size_t>(b)][k[j + 1]];
    }
    return s + ")";
  }
};

MbEngine::MbEngine(StrictNCat x) : impl_(std::make_shared<Impl>(std::move(x))) {}
MbEngine::~MbEngine()                              = default;
MbEngine::MbEngine(MbEngine&&) noexcept            = default;
MbEngine& MbEngine::operator=(MbEngine&&) noexcept = default;

StrictNCat const& MbEngine::category() const noexcept { return impl_->x; }

BasedSimplicialObject MbEngine::simplicial(int max_degree) {
  if (max_degree < 0) {
    throw std::invalid_argument("max_degree must be nonnegative");
  }
  auto&                 m = *impl_;
  int const             n = m.x.n;
  BasedSimplicialObject s;
  auto const            D = static_cast<std::size_t>(max_degree);
  s.sizes.resize(D + 1);
  s.face.resize(D + 1);
  s.degeneracy.resize(D + 1);
  for (int q = 0; q <= max_degree; ++q) {
    s.sizes[static_cast<std::size_t>(q)] = m.table(n, 0, q, q).keys.size();
  }
  for (int q = 0; q <= max_degree; ++q) {
    auto const  uq = static_cast<std::size_t>(q);
    std::size_t sz = s.sizes[uq];
    if (q >= 1) {
      for (int i = 0; i <= q; ++i) {
        GenMap f(sz);
        for (std::uint32_t g = 0; g < sz; ++g) {
          f[g] = static_cast<std::int32_t>(m.diag_face(n, 0, q, i, g));
        }
        s.face[uq].push_back(std::move(f));
      }
    }
    if (q < max_degree) {
      for (int i = 0; i <= q; ++i) {
        GenMap d(sz);
        for (std::uint32_t g = 0; g < sz; ++g) {
          d[g] = static_cast<std::int32_t>(m.diag_deg(n, 0, q, i, g));
        }
        s.degeneracy[uq].push_back(std::move(d));
      }
    }
  }
  auto keep = impl_;
  s.label   = [keep, n](int q, std::size_t i) {
    return keep->label(n, 0, q, q, static_cast<std::uint32_t>(i));
  };
  return s;
}

BasedBisimplicialObject MbEngine::bisimplicial(Region const& region) {
  auto&                   m = *impl_;
  int const               n = m.x.n;
  // the sub level of the top: paths at level n, subs diagonal at level n-1
  BasedBisimplicialObject b;
  b.reset(region.P, region.Q, region.bound);
  auto table = [&](int p, int q) -> Impl::Table& {
    return n == 0 ? m.table(0, 0, 0, 0) : m.table(n, 0, p, q);
  };
  for (int p = 0; p <= region.P; ++p) {
    for (int q = 0; q <= region.Q; ++q) {
      if (b.present(p, q)) {
        b.sizes[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = table(p, q).keys.size();
      }
    }
  }
  for (int p = 0; p <= region.P; ++p) {
    for (int q = 0; q <= region.Q; ++q) {
      if (!b.present(p, q)) {
        continue;
      }
      auto const  up = static_cast<std::size_t>(p);
      auto const  uq = static_cast<std::size_t>(q);
      auto&       t  = table(p, q);
      std::size_t sz = b.sizes[up][uq];
      auto        fill = [&](std::vector<GenMap>& out, int count, auto&& fn) {
        for (int i = 0; i < count; ++i) {
          GenMap g(sz);
          for (std::uint32_t j = 0; j < sz; ++j) {
            g[j] = static_cast<std::int32_t>(fn(i, j));
          }
          out.push_back(std::move(g));
        }
      };
      if (p >= 1) {
        fill(b.hface[up][uq], p + 1, [&](int i, std::uint32_t j) { return m.hface(t, i, j); });
      }
      if (q >= 1) {
        fill(b.vface[up][uq], q + 1, [&](int i, std::uint32_t j) { return m.vface(t, i, j); });
      }
      if (b.present(p + 1, q)) {
        fill(b.hdeg[up][uq], p + 1, [&](int i, std::uint32_t j) { return m.hdeg(t, i, j); });
      }
      if (b.present(p, q + 1)) {
        fill(b.vdeg[up][uq], q + 1, [&](int i, std::uint32_t j) { return m.vdeg(t, i, j); });
      }
    }
  }
  auto keep = impl_;
  b.label   = [keep, n](int p, int q, std::size_t i) {
    return keep->label(n, 0, n == 0 ? 0 : p, n == 0 ? 0 : q, static_cast<std::uint32_t>(i));
  };
  return b;
}

BasedSimplicialObject mb_n(StrictNCat const& x, int max_degree) {
  return MbEngine(x).simplicial(max_degree);
}

BasedBisimplicialObject double_nerve(StrictNCat const& x, Region const& region) {
  return MbEngine(x).bisimplicial(region);
}

BasedBisimplicialObject double_nerve_2cat(StrictNCat const& x, Region const& region) {
  if (x.n != 2) {
    throw ValidationError("double_nerve_2cat needs a 2-category, got level " + std::to_string(x.n));
  }
  return double_nerve(x, region);
}

BasedBisimplicialObject double_nerve_2cat(CatGroup const& g, Region const& region) {
  return double_nerve(as_ncat(g), region);
}

ValidationReport check_mb_n_low_degrees(StrictNCat const& x) {
  if (x.n < 1) {
    return ValidationReport::fail("the degree-1 description needs level >= 1");
  }
  auto s = mb_n(x, 1);
  if (s.sizes[0] != x.count(0)) {
    return ValidationReport::fail("degree 0 has " + std::to_string(s.sizes[0]) + " generators, expected "
                                  + std::to_string(x.count(0)) + " 0-cells");
  }
  if (s.sizes[1] != x.count(x.n)) {
    return ValidationReport::fail("degree 1 has " + std::to_string(s.sizes[1]) + " generators, expected "
                                  + std::to_string(x.count(x.n)) + " top cells");
  }
  // Walk down to the top cell of each degree-1 generator.
  MbEngine::Impl     m(x);
  std::vector<char>  hit(x.count(x.n), 0);
  auto&              top = m.table(x.n, 0, 1, 1);
  for (std::uint32_t g = 0; g < top.keys.size(); ++g) {
    std::uint32_t id = g;
    for (int L = x.n, b = 0; L > 0; --L, ++b) {
      id = m.table(L, b, 1, 1).keys.key(id)[2];
    }
    Index const cell = id;
    if (hit[cell]) {
      return ValidationReport::fail("top cell " + x.names[static_cast<std::size_t>(x.n)][cell]
                                    + " appears twice in degree 1");
    }
    hit[cell]    = 1;
    auto d0      = m.table(x.n, 0, 0, 0).keys.key(static_cast<std::uint32_t>(s.face[1][0][g]))[0];
    auto d1      = m.table(x.n, 0, 0, 0).keys.key(static_cast<std::uint32_t>(s.face[1][1][g]))[0];
    if (d0 != x.target_at(x.n, cell, 0) || d1 != x.source_at(x.n, cell, 0)) {
      return ValidationReport::fail("faces of " + x.names[static_cast<std::size_t>(x.n)][cell]
                                    + " are not its codomain and domain 0-cells");
    }
  }
  return ValidationReport::pass();
}

}  // namespace itermag
