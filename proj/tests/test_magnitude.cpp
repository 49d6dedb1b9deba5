#include <catch_amalgamated.hpp>

#include "itermag/errors.hpp"
#include "itermag/magnitude.hpp"
#include "itermag/oracles.hpp"

using namespace itermag;

namespace {

GenMetricSpace two_point() { return discrete_space(2, Extended(1)); }

// 0 - 1 - 2 with unit steps
GenMetricSpace unit_line() {
  return digraph_metric({"0", "1", "2"}, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
}

}  // namespace

TEST_CASE("nerve of the terminal category") {
  auto s = nerve_category(terminal_category(), 3);
  REQUIRE(validate_simplicial(s).ok);
  CHECK(s.sizes == std::vector<std::size_t>{1, 1, 1, 1});
  for (int n = 1; n <= 3; ++n) {
    CHECK(nondegenerate(s, n).empty());
  }
}

TEST_CASE("nerve of the circle category") {
  auto s = nerve_category(circle_category(), 3);
  REQUIRE(validate_simplicial(s).ok);
  CHECK(s.sizes[1] == 4);
  auto nd = nondegenerate(s, 1);
  REQUIRE(nd.size() == 2);
  CHECK(s.label(1, nd[0]) == "(f)");
  CHECK(s.label(1, nd[1]) == "(g)");
  // delta_0 f = codomain, delta_1 f = domain
  auto c = circle_category();
  CHECK(s.face[1][0][nd[0]] == static_cast<std::int32_t>(c.object_index("B")));
  CHECK(s.face[1][1][nd[0]] == static_cast<std::int32_t>(c.object_index("A")));
  auto h = homology_table(normalized_chains(s), 2);
  CHECK(h == HomologyTable{FgAbelianGroup::free(1), FgAbelianGroup::free(1), FgAbelianGroup::zero()});
  CHECK(homology_table(unnormalized_chains(s), 2) == h);
}

TEST_CASE("bar complex of Z/2 from the nerve") {
  auto s = nerve_category(group_as_category(cyclic_group(2)), 4);
  REQUIRE(validate_simplicial(s).ok);
  CHECK(s.sizes == std::vector<std::size_t>{1, 2, 4, 8, 16});
  auto h = homology_table(normalized_chains(s), 3);
  CHECK(h[0] == FgAbelianGroup::free(1));
  CHECK(h[1] == FgAbelianGroup::cyclic(2));
  CHECK(h[2].is_trivial());
  CHECK(h[3] == FgAbelianGroup::cyclic(2));
}

TEST_CASE("adjacency") {
  CHECK(adjacency(two_point(), 0, 1).adjacent);
  auto line = unit_line();
  auto r    = adjacency(line, 0, 2);
  CHECK_FALSE(r.adjacent);
  CHECK(r.witness == std::optional<Index>(1));
  CHECK(adjacency(line, 0, 1).adjacent);
  CHECK_FALSE(adjacency(cycle_graph(6), 0, 3).adjacent);
  CHECK(adjacency(cycle_graph(6), 0, 1).adjacent);
  CHECK_THROWS_AS(adjacency(line, 1, 1), std::invalid_argument);
}

TEST_CASE("2-point space is concentrated on the diagonal") {
  int const D = 4;
  auto      c = magnitude_complex_metric(two_point(), D);
  for (auto const& [ell, cx] : c) {
    REQUIRE(validate_complex(cx).ok);
  }
  auto h = graded_homology_table(c, D - 1);
  for (auto const& [ell, t] : h) {
    for (int k = 0; k < D; ++k) {
      INFO("l = " << ell.get_str() << ", k = " << k);
      bool const diag = ell == k;
      CHECK(t[static_cast<std::size_t>(k)] == (diag ? FgAbelianGroup::free(2) : FgAbelianGroup::zero()));
    }
  }
}

TEST_CASE("MH_0 is free on the points") {
  for (auto const& x : {cycle_graph(5), cycle_digraph(4), unit_line(), complete_graph(3)}) {
    auto h = graded_homology_table(magnitude_complex_metric(x, 2), 1);
    CHECK(h.at(Rational(0))[0] == FgAbelianGroup::free(x.size()));
    for (auto const& [ell, t] : h) {
      if (ell > 0) {
        CHECK(t[0].is_trivial());
      }
    }
  }
}

TEST_CASE("cycle_digraph(3) in grading 1") {
  auto c = magnitude_complex_metric(cycle_digraph(3), 2, std::vector<Rational>{Rational(1)});
  REQUIRE(c.size() == 1);
  CHECK(homology_table(c.at(Rational(1)), 1)[1] == FgAbelianGroup::free(3));
}

TEST_CASE("reachable gradings and infinite distances") {
  auto iso = digraph_metric({"x", "y", "z"}, {{0, 1}});
  CHECK(reachable_gradings(iso, 3) == std::vector<Rational>{0, 1});
  auto c = magnitude_complex_metric(iso, 3);
  CHECK(c.at(Rational(1)).dims[1] == 1);
  CHECK(c.at(Rational(1)).dims[2] == 0);

  auto half    = discrete_space(2, Extended(Rational(1, 2)));
  auto grads   = reachable_gradings(half, 2);
  CHECK(grads == std::vector<Rational>{0, Rational(1, 2), 1});
  CHECK_THROWS_AS(magnitude_complex_metric(half, -1), std::invalid_argument);
}

TEST_CASE("support bound and completeness") {
  // min positive distance 1, so degree n needs grading >= n
  auto c = magnitude_complex_metric(cycle_graph(4), 3);
  for (auto const& [ell, cx] : c) {
    for (int n = 0; n <= cx.top_degree(); ++n) {
      if (Rational(n) > ell) {
        CHECK(cx.dims[static_cast<std::size_t>(n)] == 0);
      }
    }
    // nothing of degree 4 fits below grading 4
    CHECK(cx.faithful_through == (ell < 4 ? 3 : 2));
  }
  CHECK_THROWS_AS(homology_table(c.at(Rational(4)), 3), TruncationError);
}

TEST_CASE("metric MH_1 against the adjacency count") {
  for (auto const& x : {cycle_graph(5), cycle_digraph(5), unit_line(), cycle_graph(6)}) {
    auto h = graded_homology_table(magnitude_complex_metric(x, 2), 1);
    for (auto const& [ell, t] : h) {
      CHECK(t[1] == oracle_mh1_metric(x, ell));
    }
  }
}

TEST_CASE("unnormalized metric nerve") {
  auto x = cycle_graph(3);
  for (int l = 0; l <= 3; ++l) {
    auto s = metric_nerve(x, Rational(l), 4);
    REQUIRE(validate_simplicial(s).ok);
    auto un = homology_table(unnormalized_chains(s), 3);
    auto nm = homology_table(normalized_chains(s), 3);
    CHECK(un == nm);
    auto direct = magnitude_complex_metric(x, 4, std::vector<Rational>{Rational(l)});
    CHECK(homology_table(direct.at(Rational(l)), 3) == nm);
  }
}
