#include <catch_amalgamated.hpp>

#include "itermag/enriched.hpp"
#include "itermag/errors.hpp"

using namespace itermag;

namespace {

Subset subset_of(FiniteGroup const& g, std::vector<std::string> const& names) {
  Subset s;
  for (auto const& n : names) {
    s.push_back(g.index_of(n));
  }
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("category builders validate") {
  CHECK(validate(circle_category()).ok);
  CHECK(validate(terminal_category()).ok);
  CHECK(validate(linear_order_category(4)).ok);
  CHECK(validate(group_as_category(symmetric_group(3))).ok);
  auto sq = product_category(circle_category(), circle_category());
  CHECK(sq.num_objects() == 4);
  CHECK(validate(sq).ok);
  auto xt = product_category(circle_category(), terminal_category());
  CHECK(xt.num_morphisms() == 4);
  CHECK(validate(xt).ok);
}

TEST_CASE("category validator catches broken tables") {
  auto c      = circle_category();
  c.then[0][2] = 3;  // id_A then f = g
  CHECK_FALSE(validate(c).ok);
  auto d      = circle_category();
  d.then[2][3] = 2;  // f then g is not composable
  CHECK_FALSE(validate(d).ok);
}

TEST_CASE("metric spaces") {
  auto c3 = cycle_digraph(3);
  REQUIRE(validate(c3).ok);
  CHECK(c3.d[0][1] == Extended(1));
  CHECK(c3.d[1][0] == Extended(2));

  auto g4 = cycle_graph(4);
  REQUIRE(validate(g4).ok);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      CHECK(g4.d[a][b] <= Extended(2));
      CHECK(g4.d[a][b] == g4.d[b][a]);
    }
  }

  auto iso = digraph_metric({"x", "y"}, {});
  CHECK(iso.d[0][1].is_infinite());
  CHECK(validate(iso).ok);

  auto two = discrete_space(2, Extended(1));
  auto sq  = tensor_metric(two, two);
  REQUIRE(validate(sq).ok);
  CHECK(sq.d[0][3] == Extended(2));
  CHECK(sq.d[0][1] == Extended(1));
  auto pt = tensor_metric(c3, discrete_space(1, Extended(0)));
  CHECK(pt.d == c3.d);

  auto bad    = discrete_space(3, Extended(1));
  bad.d[0][2] = Extended(3);
  CHECK_FALSE(validate(bad).ok);
  auto unsep    = discrete_space(2, Extended(0));
  CHECK_FALSE(validate(unsep).ok);
  CHECK(validate(complete_graph(5)).ok);
}

TEST_CASE("normed groups") {
  auto z2 = cyclic_group(2);
  NormedGroup n{z2, {Rational(0), Rational(1)}};
  CHECK(validate(n).ok);

  auto        s3 = symmetric_group(3);
  NormedGroup discrete{s3, std::vector<Rational>(6, Rational(1))};
  discrete.norm[s3.e] = 0;
  CHECK(validate(discrete).ok);

  auto broken = discrete;
  for (auto c : subset_of(s3, {"(1 2 3)", "(1 3 2)"})) {
    broken.norm[c] = 3;
  }
  auto r = validate(broken);
  CHECK_FALSE(r.ok);
  CHECK(r.message.find("|gh|") != std::string::npos);

  auto nonconj = discrete;
  nonconj.norm[s3.index_of("(1 2)")] = Rational(3, 2);
  CHECK_FALSE(validate(nonconj).ok);
}

TEST_CASE("word norms") {
  auto s3 = symmetric_group(3);
  auto w  = word_norm_group(s3, {s3.index_of("(1 2)")});
  REQUIRE(validate(w).ok);
  for (Elem g = 0; g < 6; ++g) {
    auto const& nm = s3.names[g];
    if (g == s3.e) {
      CHECK(w.norm[g] == 0);
    } else if (nm.size() == 5) {  // transposition "(a b)"
      CHECK(w.norm[g] == 1);
    } else {
      CHECK(w.norm[g] == 2);
    }
  }
  auto z4 = word_norm_group(cyclic_group(4), {1});
  CHECK(z4.norm == std::vector<Rational>{0, 1, 2, 1});
  CHECK(word_norm_group(cyclic_group(2), {1}).norm[1] == 1);

  // S = {(1 2 3)} only reaches A3.
  CHECK_THROWS_AS(word_norm_group(s3, {s3.index_of("(1 2 3)")}), ValidationError);

  auto m = metric_of(w);
  CHECK(validate(m).ok);
}

TEST_CASE("word norms on all small groups are conjugation invariant") {
  for (auto const& [name, g] : groups_of_order_at_most_8()) {
    Subset all;
    for (Elem a = 0; a < g.order(); ++a) {
      all.push_back(a);
    }
    INFO(name);
    CHECK(validate(word_norm_group(g, all)).ok);
  }
}

TEST_CASE("Cat-groups from normal subgroups") {
  auto s3 = symmetric_group(3);
  auto a3 = generated_subgroup(s3, {s3.index_of("(1 2 3)")});
  auto g  = two_group_from_normal_subgroup(s3, a3);
  REQUIRE(validate(g).ok);
  auto const& C = g.cells;
  for (Elem a = 0; a < 6; ++a) {
    for (Elem b = 0; b < 6; ++b) {
      std::size_t hom = 0;
      for (auto const& f : C.morphisms) {
        hom += (f.src == a && f.tgt == b) ? 1 : 0;
      }
      bool same = std::binary_search(a3.begin(), a3.end(), s3.mul(a, s3.inv(b)));
      CHECK(hom == (same ? 1u : 0u));
    }
  }
  auto cg = component_group(g);
  CHECK(cg.identity_component == a3);
  CHECK(cg.quotient.group.order() == 2);

  auto disc = two_group_from_normal_subgroup(cyclic_group(2), {0});
  CHECK(disc.num_arrows() == 2);
  CHECK(component_group(disc).quotient.group.order() == 2);

  Subset whole{0, 1, 2, 3, 4, 5};
  CHECK(component_group(two_group_from_normal_subgroup(s3, whole)).quotient.group.order() == 1);

  CHECK_THROWS_AS(two_group_from_normal_subgroup(s3, generated_subgroup(s3, {s3.index_of("(1 2)")})),
                  ValidationError);
}

TEST_CASE("G_N validates for every normal subgroup of every group of order <= 8") {
  for (auto const& [name, g] : groups_of_order_at_most_8()) {
    for (auto const& n : normal_subgroups(g)) {
      INFO(name << " |N| = " << n.size());
      auto cg = two_group_from_normal_subgroup(g, n);
      CHECK(validate(cg).ok);
      CHECK(validate(as_ncat(cg)).ok);
      CHECK(component_group(cg).identity_component == n);
    }
  }
}

TEST_CASE("preordered groups") {
  auto s3 = symmetric_group(3);
  auto p  = preordered_group_from_cone(s3, {s3.e});
  REQUIRE(validate(p).ok);
  for (Elem a = 0; a < 6; ++a) {
    for (Elem b = 0; b < 6; ++b) {
      CHECK(static_cast<bool>(p.leq[a][b]) == (a == b));
    }
  }
  auto co = preordered_group_from_cone(s3, {0, 1, 2, 3, 4, 5});
  CHECK(validate(co).ok);
  auto a3 = generated_subgroup(s3, {s3.index_of("(1 2 3)")});
  auto q  = preordered_group_from_cone(s3, a3);
  REQUIRE(validate(q).ok);
  CHECK(q.positive_cone() == a3);
  auto cg = as_cat_group(q);
  REQUIRE(validate(cg).ok);
  CHECK(component_group(cg).quotient.group.order() == 2);

  CHECK_THROWS_AS(preordered_group_from_cone(s3, {s3.index_of("(1 2 3)")}), ValidationError);
  CHECK_THROWS_AS(preordered_group_from_cone(s3, generated_subgroup(s3, {s3.index_of("(1 2)")})),
                  ValidationError);
}

TEST_CASE("finite cones are subgroups and the order is symmetric") {
  for (auto const& [name, g] : groups_of_order_at_most_8()) {
    for (auto const& n : normal_subgroups(g)) {
      auto p = preordered_group_from_cone(g, n);
      INFO(name);
      CHECK(validate(p).ok);
      CHECK(is_subgroup(g, p.positive_cone()));
      for (Elem a = 0; a < g.order(); ++a) {
        for (Elem b = 0; b < g.order(); ++b) {
          CHECK(p.leq[a][b] == p.leq[b][a]);
        }
      }
    }
  }
}

TEST_CASE("strict n-categories and suspension") {
  auto s0 = sphere_ncat(0);
  CHECK(s0.n == 0);
  CHECK(s0.count(0) == 2);

  auto s1 = sphere_ncat(1);
  REQUIRE(validate(s1).ok);
  CHECK(s1.count(0) == 2);
  CHECK(s1.count(1) == 4);
  // same shape as the hand-built circle: two identities and two parallel arrows
  auto c = as_category(s1);
  REQUIRE(validate(c).ok);
  std::size_t parallel = 0;
  for (auto const& m : c.morphisms) {
    parallel += (m.src == 0 && m.tgt == 1) ? 1 : 0;
  }
  CHECK(parallel == 2);

  auto s2 = sphere_ncat(2);
  REQUIRE(validate(s2).ok);
  CHECK(s2.count(2) == 6);
  auto g1 = suspension(s1);
  CHECK(g1.names == s2.names);
  CHECK(g1.comp == s2.comp);

  for (int n = 3; n <= 4; ++n) {
    auto s = sphere_ncat(n);
    INFO(n);
    CHECK(validate(s).ok);
    // two non-identity cells in each dimension >= 1
    for (int k = 1; k <= n; ++k) {
      CHECK(s.count(k) == 2 * static_cast<std::size_t>(k) + 2);
    }
  }

  // hom(B, A) is empty: nothing goes from B to A.
  for (Index f = 0; f < s2.count(1); ++f) {
    CHECK_FALSE((s2.src[1][f] == 1 && s2.tgt[1][f] == 0));
  }
}

TEST_CASE("suspension of categories and 2-categories") {
  auto gc = suspension(circle_category());
  CHECK(validate(gc).ok);
  auto s3 = symmetric_group(3);
  auto a3 = generated_subgroup(s3, {s3.index_of("(1 2 3)")});
  auto g2 = suspension(as_ncat(two_group_from_normal_subgroup(s3, a3)));
  CHECK(g2.n == 3);
  CHECK(validate(g2).ok);
  auto lin = suspension(linear_order_category(3));
  CHECK(validate(lin).ok);
}

TEST_CASE("n-category validator catches a broken horizontal composite") {
  auto s3 = symmetric_group(3);
  auto x  = as_ncat(two_group_from_normal_subgroup(s3, {0, 1, 2, 3, 4, 5}));
  REQUIRE(validate(x).ok);
  std::size_t const m = x.count(2);
  bool              swapped = false;
  for (Index a = 0; a < m && !swapped; ++a) {
    for (Index b = 0; b < m && !swapped; ++b) {
      if (x.compose(2, 0, a, b) != x.compose(2, 0, b, a)) {
        std::swap(x.comp[2][0][a * m + b], x.comp[2][0][b * m + a]);
        swapped = true;
      }
    }
  }
  REQUIRE(swapped);
  CHECK_FALSE(validate(x).ok);
}

TEST_CASE("connected components") {
  CHECK(connected_components(discrete_category({"a", "b", "c"})).size() == 3);
  CHECK(connected_components(circle_category()).size() == 1);
  CHECK(connected_components(sphere_ncat(2)).size() == 1);
  CHECK(connected_components(suspension(discrete_ncat({}))).size() == 2);
  CHECK(connected_components(sphere_ncat(0)).size() == 2);
}
