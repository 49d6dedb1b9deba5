#include <catch_amalgamated.hpp>

#include "itermag/errors.hpp"
#include "itermag/groups.hpp"

using namespace itermag;

TEST_CASE("named groups are groups of the right order") {
  auto all = groups_of_order_at_most_8();
  CHECK(all.size() == 14);
  for (auto const& [name, g] : all) {
    INFO(name);
    CHECK(validate_group(g).ok);
  }
  CHECK(named_group("S3").order() == 6);
  CHECK(named_group("D4").order() == 8);
  CHECK(named_group("Q8").order() == 8);
  CHECK(named_group("Z5").order() == 5);
  CHECK(named_group("trivial").order() == 1);
  CHECK_THROWS(named_group("nonsense"));
}

TEST_CASE("permutation groups") {
  auto s3 = symmetric_group(3);
  CHECK(s3.names[s3.e] == "e");
  auto t  = s3.index_of("(1 2)");
  auto c  = s3.index_of("(1 2 3)");
  CHECK(s3.mul(t, t) == s3.e);
  CHECK(s3.mul(c, s3.mul(c, c)) == s3.e);
  // (1 3)(1 2) = (1 2 3) with right-to-left composition
  CHECK(s3.mul(s3.index_of("(1 3)"), t) == c);
}

TEST_CASE("group_from_table rejects non-groups") {
  CHECK_THROWS_AS(group_from_table({"a", "b"}, {{0, 0}, {0, 0}}), ValidationError);
  auto z2 = group_from_table({"x", "y"}, {{1, 0}, {0, 1}});
  CHECK(z2.e == 1);
  CHECK(z2.inv(0) == 0);
}

TEST_CASE("subgroups and quotients") {
  auto s3 = symmetric_group(3);
  CHECK(all_subgroups(s3).size() == 6);
  CHECK(normal_subgroups(s3).size() == 3);
  CHECK(conjugacy_classes(s3).size() == 3);
  auto a3 = generated_subgroup(s3, {s3.index_of("(1 2 3)")});
  CHECK(a3.size() == 3);
  CHECK(is_normal_subgroup(s3, a3));
  auto t = generated_subgroup(s3, {s3.index_of("(1 2)")});
  CHECK_FALSE(is_normal_subgroup(s3, t));
  CHECK(normal_closure(s3, {s3.index_of("(1 2)")}).size() == 6);
  auto q = quotient_group(s3, a3);
  CHECK(q.group.order() == 2);
  CHECK(validate_group(q.group).ok);
  CHECK_THROWS(quotient_group(s3, t));

  auto q8 = quaternion_group();
  CHECK(normal_subgroups(q8).size() == 6);  // every subgroup of Q8 is normal
  CHECK(all_subgroups(q8).size() == 6);
  CHECK(conjugacy_classes(named_group("D4")).size() == 5);
}
