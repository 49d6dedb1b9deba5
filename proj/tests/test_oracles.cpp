#include <catch_amalgamated.hpp>

#include <numeric>

#include "itermag/oracles.hpp"

using namespace itermag;

namespace {

using G = FgAbelianGroup;

GenMetricSpace unit_line() {
  return digraph_metric({"0", "1", "2"}, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
}

FiniteGroup named(std::string const& name) {
  for (auto const& [n, g] : groups_of_order_at_most_8()) {
    if (n == name) {
      return g;
    }
  }
  throw std::invalid_argument(name);
}

}  // namespace

TEST_CASE("oracle_mh1_metric") {
  CHECK(oracle_mh1_metric(discrete_space(2, Extended(1)), Rational(1)) == G::free(2));
  CHECK(oracle_mh1_metric(unit_line(), Rational(2)).is_trivial());
  CHECK(oracle_mh1_metric(unit_line(), Rational(1)) == G::free(4));
  CHECK(oracle_mh1_metric(cycle_digraph(4), Rational(1)) == G::free(4));
}

TEST_CASE("abelianization") {
  CHECK(abelianization(symmetric_group(3)) == G::cyclic(2));
  CHECK(abelianization(cyclic_group(4)) == G::cyclic(4));
  CHECK(abelianization(trivial_group()).is_trivial());
  CHECK(abelianization(named("Q8")) == G::from_cyclic_orders(0, {2, 2}));
}

TEST_CASE("oracle_mh01_catgroup") {
  auto s3 = symmetric_group(3);
  auto a3 = generated_subgroup(s3, {s3.index_of("(1 2 3)")});
  CHECK(oracle_mh01_catgroup(two_group_from_normal_subgroup(s3, a3)).second == G::cyclic(2));
  auto z4 = cyclic_group(4);
  CHECK(oracle_mh01_catgroup(two_group_from_normal_subgroup(z4, {z4.e})).second == G::cyclic(4));
  CHECK(oracle_mh01_catgroup(two_group_from_normal_subgroup(z4, {0, 1, 2, 3})).second.is_trivial());
  CHECK(oracle_mh01_catgroup(two_group_from_normal_subgroup(z4, {0, 1, 2, 3})).first == G::free(1));
}

TEST_CASE("oracle_mh2_normed") {
  auto s3 = symmetric_group(3);
  auto w  = word_norm_group(s3, {s3.index_of("(1 2)")});
  CHECK(oracle_mh2_normed(w, Rational(1)) == G::free(1));
  CHECK(oracle_mh2_normed(w, Rational(2)).is_trivial());
  NormedGroup z2{cyclic_group(2), {Rational(0), Rational(1)}};
  CHECK(oracle_mh2_normed(z2, Rational(1)) == G::free(1));
  CHECK_THROWS_AS(oracle_mh2_normed(z2, Rational(0)), std::invalid_argument);
}

TEST_CASE("oracle_mh2_normed is invariant under relabeling by an automorphism") {
  // inversion is an automorphism of an abelian group
  auto        z4 = cyclic_group(4);
  NormedGroup n{z4, {Rational(0), Rational(1), Rational(3, 2), Rational(1)}};
  NormedGroup m = n;
  for (Elem g = 0; g < 4; ++g) {
    m.norm[z4.inv(g)] = n.norm[g];
  }
  for (auto l : {Rational(1), Rational(3, 2)}) {
    CHECK(oracle_mh2_normed(n, l) == oracle_mh2_normed(m, l));
  }
  // conjugation by a transposition on S3
  auto s3 = symmetric_group(3);
  auto w  = word_norm_group(s3, {s3.index_of("(1 2)")});
  auto c  = w;
  Elem t  = s3.index_of("(1 3)");
  for (Elem g = 0; g < 6; ++g) {
    c.norm[s3.conj(t, g)] = w.norm[g];
  }
  CHECK(oracle_mh2_normed(c, Rational(1)) == oracle_mh2_normed(w, Rational(1)));
}

TEST_CASE("oracle_group_homology") {
  CHECK(oracle_group_homology(cyclic_group(2), 3)
        == HomologyTable{G::free(1), G::cyclic(2), G::zero(), G::cyclic(2)});
  CHECK(oracle_group_homology(cyclic_group(3), 1)[1] == G::cyclic(3));
  CHECK(oracle_group_homology(trivial_group(), 3) == HomologyTable{G::free(1), G::zero(), G::zero(), G::zero()});
}

TEST_CASE("oracle_suspension") {
  CHECK(oracle_suspension({G::free(1), G::free(1), G::zero()})
        == HomologyTable{G::free(1), G::zero(), G::free(1), G::zero()});
  CHECK(oracle_suspension({G::free(2)}) == HomologyTable{G::free(1), G::free(1)});
  CHECK(oracle_suspension({G::free(1), G::cyclic(2)})[1].is_trivial());
  CHECK_THROWS_AS(oracle_suspension({}), std::invalid_argument);
  CHECK_THROWS_AS(oracle_suspension({G::zero()}), std::invalid_argument);
}

TEST_CASE("oracle_kunneth") {
  HomologyTable pt{G::free(1), G::zero(), G::zero()};
  HomologyTable x{G::free(1), G::cyclic(2), G::free(3)};
  CHECK(oracle_kunneth(x, pt) == x);
  HomologyTable circle{G::free(1), G::free(1), G::zero()};
  CHECK(oracle_kunneth(circle, circle) == HomologyTable{G::free(1), G::free(2), G::free(1)});
  // Tor(Z/2, Z/2) lands one degree up
  HomologyTable m{G::free(1), G::cyclic(2), G::zero()};
  CHECK(oracle_kunneth(m, m)[2] == G::cyclic(2));

  GradedHomologyTable gx{{Rational(0), {G::free(2), G::zero()}}, {Rational(1), {G::zero(), G::free(2)}}};
  auto                sq = oracle_kunneth(gx, gx);
  CHECK(sq.at(Rational(1))[1] == G::free(8));
  CHECK(sq.at(Rational(2))[1].is_trivial());
}
