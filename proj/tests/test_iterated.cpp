#include <catch_amalgamated.hpp>

#include "itermag/errors.hpp"
#include "itermag/iterated.hpp"
#include "itermag/magnitude.hpp"
#include "itermag/oracles.hpp"

using namespace itermag;

namespace {

HomologyTable sphere_expected(int n, int top) {
  HomologyTable t(static_cast<std::size_t>(top + 1));
  t[0]                          = FgAbelianGroup::free(1);
  t[static_cast<std::size_t>(n)] = FgAbelianGroup::free(1);
  return t;
}

HomologyTable mb_homology(StrictNCat const& x, int D, Route route, bool norm) {
  return homology_table(iterated_complex(x, D, route, norm), D - 1);
}

Subset subset_of(FiniteGroup const& g, std::vector<std::string> const& names) {
  Subset s;
  for (auto const& n : names) {
    s.push_back(g.index_of(n));
  }
  std::sort(s.begin(), s.end());
  return s;
}

NormedGroup s3_word() {
  auto s3 = symmetric_group(3);
  return word_norm_group(s3, {s3.index_of("(1 2)")});
}

}  // namespace

TEST_CASE("MB^1 is the category nerve") {
  auto c = circle_category();
  auto a = mb_n(as_ncat(c), 3);
  auto b = nerve_category(c, 3);
  REQUIRE(validate_simplicial(a).ok);
  CHECK(a.sizes == b.sizes);
  CHECK(homology_table(normalized_chains(a), 2) == homology_table(normalized_chains(b), 2));
}

TEST_CASE("MB^n simplicial identities") {
  for (int n = 1; n <= 3; ++n) {
    INFO("sphere " << n);
    auto s = mb_n(sphere_ncat(n), n + 1);
    CHECK(validate_simplicial(s).ok);
    auto b = double_nerve(sphere_ncat(n), square_region(n + 1));
    CHECK(validate_bisimplicial(b).ok);
    // diag of the bisimplicial object is the direct diagonal
    auto d = diagonal(b);
    CHECK(d.sizes == s.sizes);
    CHECK(d.face == s.face);
    CHECK(d.degeneracy == s.degeneracy);
  }
}

TEST_CASE("MB^n low degrees") {
  for (int n = 1; n <= 4; ++n) {
    INFO(n);
    CHECK(check_mb_n_low_degrees(sphere_ncat(n)).ok);
  }
  auto s2 = mb_n(sphere_ncat(2), 1);
  CHECK(s2.sizes[0] == 2);
  CHECK(s2.sizes[1] == sphere_ncat(2).count(2));
  auto s3 = symmetric_group(3);
  CHECK(check_mb_n_low_degrees(as_ncat(two_group_from_normal_subgroup(s3, subset_of(s3, {"e", "(1 2 3)", "(1 3 2)"})))).ok);
  CHECK(check_mb_n_low_degrees(suspension(circle_category())).ok);
}

TEST_CASE("sphere homology by both routes") {
  for (int n = 1; n <= 3; ++n) {
    int const D = n + 2;  // homology through degree n+1
    INFO("n = " << n);
    auto expected = sphere_expected(n, n + 1);
    CHECK(mb_homology(sphere_ncat(n), D, Route::diagonal, true) == expected);
    CHECK(mb_homology(sphere_ncat(n), D, Route::tot, false) == expected);
    CHECK(mb_homology(sphere_ncat(n), D, Route::tot, true) == expected);
  }
}

TEST_CASE("suspension ladder against the oracle") {
  HomologyTable h = {FgAbelianGroup::free(2)};  // S^0
  for (int n = 1; n <= 3; ++n) {
    h = oracle_suspension(h);
    CHECK(h == sphere_expected(n, n));
  }
}

TEST_CASE("MH_0 counts components of suspensions") {
  auto x = suspension(discrete_ncat({"p", "q", "r"}));
  auto h = mb_homology(x, 3, Route::diagonal, true);
  CHECK(h[0] == FgAbelianGroup::free(1));
  // MH_1 + Z = MH_0(X) = Z^3
  CHECK(h[1] == FgAbelianGroup::free(2));
  auto empty = suspension(discrete_ncat({}));
  CHECK(mb_homology(empty, 2, Route::diagonal, true)[0] == FgAbelianGroup::free(2));
}

TEST_CASE("Cat-groups") {
  auto s3 = symmetric_group(3);
  auto a3 = subset_of(s3, {"e", "(1 2 3)", "(1 3 2)"});
  auto g  = two_group_from_normal_subgroup(s3, a3);
  auto x  = as_ncat(g);
  for (auto route : {Route::diagonal, Route::tot}) {
    auto h = mb_homology(x, 2, route, true);
    CHECK(h[0] == FgAbelianGroup::free(1));
    CHECK(h[1] == FgAbelianGroup::cyclic(2));
  }
  auto [m0, m1] = oracle_mh01_catgroup(g);
  CHECK(m0 == FgAbelianGroup::free(1));
  CHECK(m1 == FgAbelianGroup::cyclic(2));

  // codiscrete
  auto z2  = cyclic_group(2);
  auto cod = as_ncat(two_group_from_normal_subgroup(z2, {0, 1}));
  auto hc  = mb_homology(cod, 2, Route::tot, true);
  CHECK(hc[1].is_trivial());

  // discrete: group homology
  auto z4   = cyclic_group(4);
  auto disc = as_ncat(two_group_from_normal_subgroup(z4, {z4.e}));
  CHECK(mb_homology(disc, 3, Route::tot, true) == oracle_group_homology(z4, 2));
  CHECK(mb_homology(disc, 3, Route::diagonal, true) == oracle_group_homology(z4, 2));
}

TEST_CASE("double nerve of a 2-category rejects other levels") {
  CHECK_THROWS_AS(double_nerve_2cat(sphere_ncat(1), tot_region(2)), ValidationError);
  CHECK(validate_bisimplicial(double_nerve_2cat(sphere_ncat(2), tot_region(3))).ok);
}

TEST_CASE("terminal 2-category") {
  auto t = as_ncat(two_group_from_normal_subgroup(trivial_group(), {0}));
  auto h = mb_homology(t, 3, Route::tot, true);
  CHECK(h == HomologyTable{FgAbelianGroup::free(1), FgAbelianGroup::zero(), FgAbelianGroup::zero()});
}

TEST_CASE("normed group matrix nerve") {
  NormedGroup z2{cyclic_group(2), {Rational(0), Rational(1)}};
  auto        b = double_nerve_normed_group(z2, Rational(1), square_region(2));
  REQUIRE(validate_bisimplicial(b).ok);
  CHECK(b.sizes[1][1] == 2);
  CHECK(b.sizes[0][2] == 0);
  CHECK(b.sizes[2][0] == 0);
  CHECK(b.label(1, 1, 0) == "[0; 1]");

  auto b0 = double_nerve_normed_group(z2, Rational(0), square_region(2));
  CHECK(b0.sizes[0][1] == 1);
  CHECK(b0.sizes[2][1] == 4);
  CHECK(matrix_length(z2, 1, 2, {0, 1, 1}) == 1);

  auto s3 = s3_word();
  CHECK(validate_bisimplicial(double_nerve_normed_group(s3, Rational(2), square_region(2))).ok);
  CHECK(norm_values(s3) == std::vector<Rational>{0, 1, 2});
}

TEST_CASE("normed S3 with the transposition word norm") {
  auto g = s3_word();
  for (auto route : {Route::tot, Route::diagonal}) {
    for (bool norm : {true, false}) {
      INFO("route " << (route == Route::tot ? "tot" : "diag") << ", normalized " << norm);
      auto h = normed_group_homology(g, {Rational(0), Rational(1), Rational(2)}, 3, route, norm);
      CHECK(h.at(Rational(0)) == oracle_group_homology(g.group, 2));
      for (int l = 1; l <= 2; ++l) {
        auto const& t = h.at(Rational(l));
        CHECK(t[0].is_trivial());
        CHECK(t[1].is_trivial());
        CHECK(t[2] == oracle_mh2_normed(g, Rational(l)));
      }
    }
  }
  CHECK(oracle_mh2_normed(g, Rational(1)) == FgAbelianGroup::free(1));
  CHECK(oracle_mh2_normed(g, Rational(2)).is_trivial());
}

TEST_CASE("adjacency factorization on normed groups") {
  CHECK(check_adjacency_factorization(s3_word()).ok);
  NormedGroup z4{cyclic_group(4), {Rational(0), Rational(1), Rational(2), Rational(1)}};
  CHECK(check_adjacency_factorization(z4).ok);
}

TEST_CASE("metric Eilenberg-Zilber routes") {
  auto pt  = discrete_space(1, Extended(0));
  auto two = discrete_space(2, Extended(1));
  auto c3  = cycle_graph(3);
  for (int l = 0; l <= 3; ++l) {
    auto direct = magnitude_complex_metric(tensor_metric(c3, two), 4, std::vector<Rational>{Rational(l)});
    auto want   = homology_table(direct.at(Rational(l)), 3);
    for (auto route : {Route::diagonal, Route::tot}) {
      for (bool norm : {true, false}) {
        CHECK(metric_product_homology(c3, two, Rational(l), 4, route, norm) == want);
      }
    }
    auto single = magnitude_complex_metric(c3, 4, std::vector<Rational>{Rational(l)});
    CHECK(metric_product_homology(c3, pt, Rational(l), 4, Route::tot, true)
          == homology_table(single.at(Rational(l)), 3));
  }
}

TEST_CASE("Kunneth checks") {
  auto two = discrete_space(2, Extended(1));
  auto r   = kunneth_check(two, two, 3);
  CHECK(r.ok);
  INFO(r.message);
  // sum over j + k = n of Z^2 (x) Z^2; in degree 1 these are the 8 ordered
  // adjacent pairs of the 4-cycle
  for (int n = 1; n <= 3; ++n) {
    CHECK(r.direct.at(Rational(n))[static_cast<std::size_t>(n)]
          == FgAbelianGroup::free(4 * static_cast<std::size_t>(n + 1)));
  }
  CHECK(r.direct.at(Rational(1))[1] == oracle_mh1_metric(tensor_metric(two, two), Rational(1)));
  CHECK(kunneth_check(cycle_graph(3), two, 3).ok);
  CHECK(kunneth_check(two, discrete_space(1, Extended(0)), 3).ok);
  auto cc = kunneth_check(circle_category(), circle_category(), 3);
  CHECK(cc.ok);
  auto const& t = cc.direct.at(Rational(0));
  CHECK(t[0] == FgAbelianGroup::free(1));
  CHECK(t[1] == FgAbelianGroup::free(2));
  CHECK(t[2] == FgAbelianGroup::free(1));
  CHECK(t[3].is_trivial());
  auto h = category_product_homology(circle_category(), circle_category(), 4, Route::tot, true);
  CHECK(h == t);
}
