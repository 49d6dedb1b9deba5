#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "itermag/complexes.hpp"
#include "itermag/errors.hpp"

using namespace itermag;

namespace {

BasedChainComplex make(std::vector<std::size_t> dims, std::vector<IntMatrix> higher, int faithful) {
  BasedChainComplex c;
  c.dims = std::move(dims);
  c.boundary.emplace_back(0, c.dims[0]);
  for (auto& m : higher) {
    c.boundary.push_back(std::move(m));
  }
  c.faithful_through = faithful;
  return c;
}

// Z -0-> Z, complete.
BasedChainComplex zero_circle() { return make({1, 1}, {IntMatrix(1, 1)}, 1); }

// Vertices a,b; edges f,g: a->b. d f = b - a.
BasedChainComplex graph_circle() {
  return make({2, 2}, {IntMatrix::from_dense(std::vector<std::vector<long>>{{-1, -1}, {1, 1}})}, 1);
}

BasedChainComplex unit() { return make({1}, {}, 0); }

std::vector<std::size_t> ranks(HomologyTable const& t) {
  std::vector<std::size_t> r;
  for (auto const& g : t) {
    r.push_back(g.free_rank());
  }
  return r;
}

}  // namespace

TEST_CASE("validate_complex") {
  CHECK(validate_complex(graph_circle()).ok);
  CHECK(validate_complex(zero_complex(3, 3)).ok);

  auto bad = make({1, 1, 1},
                  {IntMatrix::from_dense(std::vector<std::vector<long>>{{1}}),
                   IntMatrix::from_dense(std::vector<std::vector<long>>{{1}})},
                  2);
  auto r = validate_complex(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.message.find("2") != std::string::npos);

  auto shape = make({1, 2}, {IntMatrix(1, 3)}, 1);
  CHECK_FALSE(validate_complex(shape).ok);
}

TEST_CASE("homology_table and truncation") {
  auto h = homology_table(graph_circle(), 1);
  CHECK(h == HomologyTable{FgAbelianGroup::free(1), FgAbelianGroup::free(1)});
  // complete complexes answer beyond the top
  CHECK(homology_table(graph_circle(), 3)[3].is_trivial());

  auto trunc = graph_circle();
  trunc.faithful_through = 0;
  CHECK_THROWS_AS(homology_table(trunc, 1), TruncationError);
  try {
    homology_table(trunc, 1);
  } catch (TruncationError const& e) {
    CHECK(e.required_max_degree() >= 1);
  }

  auto bad = make({1, 1, 1},
                  {IntMatrix::from_dense(std::vector<std::vector<long>>{{1}}),
                   IntMatrix::from_dense(std::vector<std::vector<long>>{{1}})},
                  2);
  CHECK_THROWS_AS(homology_table(bad, 1), InvalidComplex);
}

TEST_CASE("bar complex of Z/2 (normalized, hand built)") {
  // One generator [1|...|1] per degree; d alternates 0, 2.
  std::vector<IntMatrix> d;
  for (int k = 1; k <= 4; ++k) {
    d.push_back(IntMatrix::from_dense(std::vector<std::vector<long>>{{k % 2 == 0 ? 2 : 0}}));
  }
  auto c = make({1, 1, 1, 1, 1}, std::move(d), 3);
  auto h = homology_table(c, 3);
  CHECK(h[0] == FgAbelianGroup::free(1));
  CHECK(h[1] == FgAbelianGroup::cyclic(2));
  CHECK(h[2].is_trivial());
  CHECK(h[3] == FgAbelianGroup::cyclic(2));
}

TEST_CASE("total complex") {
  SECTION("concentrated in (0,0)") {
    BasedDoubleComplex b;
    b.P = b.Q = b.total_bound = 0;
    b.dims                    = {{3}};
    b.horizontal              = {{IntMatrix(0, 3)}};
    b.vertical                = {{IntMatrix(0, 3)}};
    b.total_faithful_through  = 5;
    REQUIRE(validate_double_complex(b).ok);
    auto t = total_complex(b);
    CHECK(t.dims == std::vector<std::size_t>{3});
    CHECK(homology_table(t, 2)[0] == FgAbelianGroup::free(3));
  }
  SECTION("acyclic square") {
    BasedDoubleComplex b;
    b.P = b.Q = 1;
    b.total_bound = 2;
    b.dims        = {{1, 1}, {1, 1}};
    IntMatrix one = IntMatrix::from_dense(std::vector<std::vector<long>>{{1}});
    b.horizontal  = {{IntMatrix(0, 1), IntMatrix(0, 1)}, {one, one}};
    b.vertical    = {{IntMatrix(0, 1), one}, {IntMatrix(0, 1), one}};
    b.total_faithful_through = 4;
    REQUIRE(validate_double_complex(b).ok);
    auto t = total_complex(b);
    REQUIRE(validate_complex(t).ok);
    for (auto const& g : homology_table(t, 3)) {
      CHECK(g.is_trivial());
    }
  }
  SECTION("non-commuting square is rejected") {
    BasedDoubleComplex b;
    b.P = b.Q = 1;
    b.total_bound = 2;
    b.dims        = {{1, 1}, {1, 1}};
    IntMatrix one = IntMatrix::from_dense(std::vector<std::vector<long>>{{1}});
    IntMatrix two = IntMatrix::from_dense(std::vector<std::vector<long>>{{2}});
    b.horizontal  = {{IntMatrix(0, 1), IntMatrix(0, 1)}, {one, two}};
    b.vertical    = {{IntMatrix(0, 1), one}, {IntMatrix(0, 1), one}};
    CHECK_FALSE(validate_double_complex(b).ok);
  }
}

TEST_CASE("tensor complex") {
  auto c = graph_circle();
  auto u = tensor_complex(c, unit());
  CHECK(u.dims == c.dims);
  CHECK(homology_table(u, 1) == homology_table(c, 1));

  auto zz = tensor_complex(zero_circle(), zero_circle());
  REQUIRE(validate_complex(zz).ok);
  CHECK(ranks(homology_table(zz, 2)) == std::vector<std::size_t>{1, 2, 1});

  auto cc = tensor_complex(graph_circle(), graph_circle());
  REQUIRE(validate_complex(cc).ok);
  CHECK(cc.dims == std::vector<std::size_t>{4, 8, 4});
  CHECK(ranks(homology_table(cc, 2)) == std::vector<std::size_t>{1, 2, 1});
  CHECK(cc.label_of(1, 0).find(',') != std::string::npos);

  // Torsion: (Z -2-> Z) tensor itself has H1 = Z/2 and H2 = Z/2 (Tor).
  auto m2 = make({1, 1}, {IntMatrix::from_dense(std::vector<std::vector<long>>{{2}})}, 1);
  auto t  = homology_table(tensor_complex(m2, m2), 2);
  CHECK(t[0] == FgAbelianGroup::cyclic(2));
  CHECK(t[1] == FgAbelianGroup::cyclic(2));
  CHECK(t[2].is_trivial());
}

TEST_CASE("tensor faithfulness is the minimum") {
  auto a             = graph_circle();
  auto b             = graph_circle();
  a.faithful_through = 0;
  auto t             = tensor_complex(a, b);
  CHECK_NOTHROW(homology_table(t, 0));
  CHECK_THROWS_AS(homology_table(t, 1), TruncationError);
}

TEST_CASE("graded tensor") {
  GradedChainComplex x;
  x[Rational(0)] = unit();
  x[Rational(1)] = make({0, 1}, {IntMatrix(0, 1)}, 1);
  auto y         = graded_tensor(x, x);
  std::vector<Rational> keys;
  for (auto const& [k, v] : y) {
    keys.push_back(k);
  }
  CHECK(keys == std::vector<Rational>{0, 1, 2});

  // Two 2-point spaces at distance 1. Each has 2 vertices in grading 0 and
  // the 2 ordered pairs (a,b), (b,a) in grading 1, so the degree-1 part of
  // grading 1 is (edge, vertex) plus (vertex, edge): 2*2 + 2*2.
  GradedChainComplex p;
  p[Rational(0)] = make({2}, {}, 0);
  p[Rational(1)] = make({0, 2}, {IntMatrix(0, 2)}, 1);
  auto pp        = graded_tensor(p, p);
  REQUIRE(pp.count(Rational(1)));
  CHECK(pp.at(Rational(1)).dims.at(1) == 8);
  // with only a -> b at distance 1 (b -> a at infinity): 1*2 + 2*1
  GradedChainComplex dir;
  dir[Rational(0)] = make({2}, {}, 0);
  dir[Rational(1)] = make({0, 1}, {IntMatrix(0, 1)}, 1);
  CHECK(graded_tensor(dir, dir).at(Rational(1)).dims.at(1) == 4);

  GradedChainComplex empty;
  CHECK(graded_tensor(x, empty).empty());
}

TEST_CASE("homology invariant under basis permutation") {
  std::mt19937 rng(7);
  auto         c = tensor_complex(graph_circle(), graph_circle());
  auto         h = homology_table(c, 2);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<std::size_t>> perm(c.dims.size());
    for (std::size_t k = 0; k < c.dims.size(); ++k) {
      perm[k].resize(c.dims[k]);
      std::iota(perm[k].begin(), perm[k].end(), 0);
      std::shuffle(perm[k].begin(), perm[k].end(), rng);
    }
    BasedChainComplex p = c;
    for (std::size_t k = 1; k < c.dims.size(); ++k) {
      IntMatrix m(c.dims[k - 1], c.dims[k]);
      for (std::size_t col = 0; col < c.dims[k]; ++col) {
        for (auto const& [r, v] : c.boundary[k].column(col)) {
          m.set(perm[k - 1][r], perm[k][col], v);
        }
      }
      p.boundary[k] = std::move(m);
    }
    CHECK(homology_table(p, 2) == h);
  }
}

TEST_CASE("direct sum") {
  auto s = direct_sum_complex(graph_circle(), zero_circle());
  CHECK(ranks(homology_table(s, 1)) == std::vector<std::size_t>{2, 2});
}
