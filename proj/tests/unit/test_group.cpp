#include <doctest.h>

#include <algorithm>
#include <vector>

#include "ringlab/error.hpp"
#include "ringlab/group.hpp"

using namespace ringlab;

TEST_CASE("standard catalog") {
  const auto& groups = standard_groups();
  REQUIRE(groups.size() == 10);
  std::vector<int> orders;
  for (const FiniteGroup& g : groups) orders.push_back(g.order);
  CHECK(orders == std::vector<int>{1, 2, 3, 4, 4, 5, 6, 8, 8, 8});
  for (const FiniteGroup& g : groups) CHECK_NOTHROW(validate_group(g));
}

TEST_CASE("cyclic groups") {
  const FiniteGroup c4 = cyclic_group(4);
  CHECK(c4.op(3, 2) == 1);
  CHECK(c4.inverse(1) == 3);
  CHECK(c4.element_order(1) == 4);
  CHECK(c4.element_order(2) == 2);
  CHECK(c4.is_abelian());
}

TEST_CASE("symmetric group on three points") {
  const FiniteGroup s3 = symmetric_3();
  CHECK(s3.order == 6);
  CHECK_FALSE(s3.is_abelian());
  std::vector<int> orders;
  for (int a = 0; a < 6; ++a) orders.push_back(s3.element_order(static_cast<Elem>(a)));
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<int>{1, 2, 2, 2, 3, 3});
}

TEST_CASE("quaternion group") {
  const FiniteGroup q8 = quaternion_8();
  CHECK(q8.order == 8);
  CHECK_FALSE(q8.is_abelian());
  int involutions = 0;
  for (int a = 0; a < 8; ++a)
    if (q8.element_order(static_cast<Elem>(a)) == 2) ++involutions;
  CHECK(involutions == 1);  // only -1
  CHECK(is_p_group(q8, 2));
}

TEST_CASE("dihedral group of the square") {
  const FiniteGroup d4 = dihedral_4();
  CHECK(d4.order == 8);
  CHECK_FALSE(d4.is_abelian());
  CHECK(is_p_group(d4, 2));
}

TEST_CASE("p-group detection") {
  CHECK(is_p_group(cyclic_group(4), 2));
  CHECK_FALSE(is_p_group(cyclic_group(3), 2));
  CHECK(is_p_group(group_product(cyclic_group(2), cyclic_group(2)), 2));
  CHECK(is_p_group(cyclic_group(1), 2));
  CHECK_FALSE(is_p_group(symmetric_3(), 2));
}

TEST_CASE("catalog lookup is case-insensitive") {
  CHECK(group_by_name("c2xc2").has_value());
  CHECK(group_by_name("C2xC2")->order == 4);
  CHECK(group_by_name("q8")->order == 8);
  CHECK_FALSE(group_by_name("G7").has_value());
}
