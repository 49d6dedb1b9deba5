#include <catch_amalgamated.hpp>

#include "itermag/errors.hpp"
#include "itermag/magnitude.hpp"
#include "itermag/simplicial.hpp"
#include "random_objects.hpp"

using namespace itermag;
using namespace itermag::testing;

TEST_CASE("random preorders and metrics validate") {
  std::mt19937 rng(11);
  for (int i = 0; i < 20; ++i) {
    CHECK(validate(random_preorder(rng, 4)).ok);
    CHECK(validate(random_metric(rng, 5, i % 2 == 0)).ok);
  }
}

TEST_CASE("normalized and unnormalized chains agree on random simplicial objects") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 50; ++i) {
    auto s = random_simplicial(rng, i);
    INFO("object " << i);
    REQUIRE(validate_simplicial(s).ok);
    auto un = unnormalized_chains(s);
    auto nm = normalized_chains(s);
    REQUIRE(validate_complex(un).ok);
    REQUIRE(validate_complex(nm).ok);
    int const top = s.top_degree() - 1;
    CHECK(homology_table(un, top) == homology_table(nm, top));
  }
}

TEST_CASE("validator catches a broken simplicial identity") {
  auto s = nerve_category(circle_category(), 2);
  REQUIRE(validate_simplicial(s).ok);
  // swap the two outer faces in degree 1
  std::swap(s.face[1][0], s.face[1][1]);
  CHECK_FALSE(validate_simplicial(s).ok);
}

TEST_CASE("normalized chains reject a degeneracy outside the basis") {
  auto s             = nerve_category(terminal_category(), 2);
  s.degeneracy[0][0] = {kZero};
  CHECK_THROWS(normalized_chains(s));
}

TEST_CASE("external product, diagonal and Tot") {
  std::mt19937 rng(5);
  for (int i = 0; i < 6; ++i) {
    auto x = random_preorder(rng, 3);
    auto s = nerve_category(x, 3);
    auto t = nerve_category(circle_category(), 3);
    auto b = external_product(s, t);
    REQUIRE(validate_bisimplicial(b).ok);
    auto d = diagonal(b);
    REQUIRE(validate_simplicial(d).ok);
    auto hd = homology_table(normalized_chains(d), 2);
    auto ht = homology_table(total_complex(double_chains(b)), 2);
    auto hr = homology_table(total_complex(row_normalize(b)), 2);
    CHECK(hd == ht);
    CHECK(hd == hr);
    // the diagonal of the external product is the nerve of the product
    auto direct = nerve_category(product_category(x, circle_category()), 3);
    CHECK(d.sizes == direct.sizes);
    CHECK(homology_table(normalized_chains(direct), 2) == hd);
  }
}

TEST_CASE("diagonal needs a square region") {
  BasedBisimplicialObject b;
  b.reset(2, 2, 2);
  CHECK_THROWS_AS(diagonal(b), std::invalid_argument);
}
