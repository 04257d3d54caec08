#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pargroup/error.hpp"
#include "pargroup/group.hpp"
#include "pargroup/lattice.hpp"
#include "zoo.hpp"

using namespace pargroup;

namespace {

std::multiset<int> element_orders(const FiniteGroup& g) {
  std::multiset<int> out;
  for (int x = 0; x < g.order(); ++x) out.insert(g.element_order(x));
  return out;
}

// Steiner loop over the affine plane AG(2,3): identity plus the nine points
// of (Z_3)^2 with x*y the third point of the line through x and y. A loop
// with two-sided inverses that is not associative.
std::vector<std::vector<int>> steiner_loop_10() {
  auto third = [](int x, int y) {
    int ax = x / 3, bx = x % 3, ay = y / 3, by = y % 3;
    return ((6 - ax - ay) % 3) * 3 + (6 - bx - by) % 3;  // -x-y
  };
  std::vector<std::vector<int>> rows(10, std::vector<int>(10));
  for (int i = 0; i < 10; ++i) rows[0][i] = rows[i][0] = i;
  for (int x = 0; x < 9; ++x)
    for (int y = 0; y < 9; ++y) rows[x + 1][y + 1] = x == y ? 0 : third(x, y) + 1;
  return rows;
}

}  // namespace

TEST_CASE("trivial group from a 1x1 table") {
  FiniteGroup g = group_from_table(1, {{0}});
  CHECK(g.order() == 1);
  CHECK(g.identity() == 0);
  CHECK(g.inv(0) == 0);
}

TEST_CASE("order-2 table") {
  FiniteGroup g = group_from_table(2, {{0, 1}, {1, 0}});
  CHECK(g.identity() == 0);
  CHECK(g.inv(0) == 0);
  CHECK(g.inv(1) == 1);
}

TEST_CASE("Z4 from addition mod 4") {
  std::vector<std::vector<int>> rows(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rows[i][j] = (i + j) % 4;
  FiniteGroup g = group_from_table(4, rows);
  CHECK(g.inv(0) == 0);
  CHECK(g.inv(1) == 3);
  CHECK(g.inv(2) == 2);
  CHECK(g.inv(3) == 1);
  CHECK(g.is_abelian());
}

TEST_CASE("table validation errors name the first violation") {
  try {
    group_from_table(2, {{0, 0}, {1, 1}});
    FAIL("expected NotLatinSquare");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotLatinSquare);
    CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
  }

  // Latin square without a two-sided identity
  try {
    group_from_table(3, {{1, 0, 2}, {0, 2, 1}, {2, 1, 0}});
    FAIL("expected NoIdentity");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoIdentity);
  }

  // loop whose element 1 has only a one-sided inverse
  try {
    group_from_table(5, {{0, 1, 2, 3, 4},
                         {1, 2, 0, 4, 3},
                         {2, 4, 3, 0, 1},
                         {3, 0, 4, 1, 2},
                         {4, 3, 1, 2, 0}});
    FAIL("expected NoInverse");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoInverse);
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }

  // Steiner loop: inverses exist everywhere, associativity fails
  try {
    group_from_table(10, steiner_loop_10());
    FAIL("expected NotAssociative");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAssociative);
  }
}

TEST_CASE("Klein four-group") {
  FiniteGroup g = group_abelian({2, 2});
  CHECK(g.order() == 4);
  CHECK(g.is_abelian());
  for (int x = 0; x < 4; ++x) CHECK(g.mul(x, x) == g.identity());
}

TEST_CASE("permutation closure of S3") {
  FiniteGroup g = zoo::s3();
  CHECK(g.order() == 6);
  CHECK_FALSE(g.is_abelian());
  CHECK(g.label(0) == "()");
}

TEST_CASE("product Z2 x Z3 is cyclic of order 6") {
  FiniteGroup g = group_direct_product(group_cyclic(2), group_cyclic(3));
  CHECK(g.order() == 6);
  // same element-order census as Z6, and a generator of order 6 exists
  CHECK(element_orders(g) == element_orders(group_cyclic(6)));
  CHECK(element_orders(g).count(6) == 2);
}

TEST_CASE("metacyclic pair constructor") {
  SUBCASE("order 605 groups") {
    FiniteGroup g1 = group_metacyclic_pair(11, 5, 3, 9);
    CHECK(g1.order() == 605);
    CHECK_FALSE(g1.is_abelian());
    FiniteGroup g2 = group_metacyclic_pair(11, 5, 3, 4);
    CHECK(g2.order() == 605);
  }
  SUBCASE("order 18 with inversion action") {
    FiniteGroup g = group_metacyclic_pair(3, 2, 2, 2);
    CHECK(g.order() == 18);
    CHECK_FALSE(g.is_abelian());
  }
  SUBCASE("bad action rejected") {
    try {
      group_metacyclic_pair(11, 5, 3, 2);  // 2^5 = 32 = 10 mod 11
      FAIL("expected BadAction");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BadAction);
    }
  }
}

TEST_CASE("conjugacy classes") {
  SUBCASE("abelian groups split into singletons") {
    for (const auto& g : {group_cyclic(5), group_abelian({2, 4})}) {
      auto classes = conjugacy_classes(g);
      CHECK(classes.size() == static_cast<std::size_t>(g.order()));
    }
  }
  SUBCASE("S3 has classes of sizes 1, 3, 2") {
    auto classes = conjugacy_classes(zoo::s3());
    std::multiset<std::size_t> sizes;
    for (const auto& c : classes) sizes.insert(c.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
  }
  SUBCASE("the order-605 group has 29 classes") {
    CHECK(conjugacy_classes(group_metacyclic_pair(11, 5, 3, 9)).size() == 29);
  }
  SUBCASE("class equation") {
    for (const auto& [name, g] : zoo::oracle_zoo()) {
      CAPTURE(name);
      auto classes = conjugacy_classes(g);
      int total = 0;
      for (const auto& c : classes) {
        total += static_cast<int>(c.size());
        CHECK(g.order() % c.size() == 0);
      }
      CHECK(total == g.order());
    }
  }
}

TEST_CASE("commutator subgroup of S3 is the order-3 subgroup") {
  FiniteGroup g = zoo::s3();
  Subgroup comm = commutator_subgroup(g);
  CHECK(comm.order == 3);
  // expected: identity plus both 3-cycles
  Subset expect(6);
  for (int x = 0; x < 6; ++x)
    if (g.element_order(x) != 2) expect.set(x);
  CHECK(comm.elems == expect);
}

TEST_CASE("stabilizers of subsets") {
  FiniteGroup g = group_cyclic(4);
  SUBCASE("a subgroup stabilizes itself") {
    Subgroup s = stabilizer_of_subset(g, Subset::from_elements(4, {0, 2}));
    CHECK(s.order == 2);
    CHECK(s.elems == Subset::from_elements(4, {0, 2}));
  }
  SUBCASE("a non-subgroup subset can have trivial stabilizer") {
    Subgroup s = stabilizer_of_subset(g, Subset::from_elements(4, {0, 1}));
    CHECK(s.order == 1);
    CHECK(s.elems.test(0));
  }
  SUBCASE("identity required") {
    try {
      stabilizer_of_subset(g, Subset::from_elements(4, {1, 2}));
      FAIL("expected SubsetMissingIdentity");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::SubsetMissingIdentity);
    }
  }
  SUBCASE("stabilizer order divides subset size") {
    for (const auto& [name, g2] : zoo::oracle_zoo()) {
      if (g2.order() > 8) continue;
      CAPTURE(name);
      const std::uint64_t total = std::uint64_t{1} << (g2.order() - 1);
      const int e = g2.identity();
      for (std::uint64_t c = 0; c < total; ++c) {
        std::uint64_t mask = ((c >> e) << (e + 1)) | (c & ((std::uint64_t{1} << e) - 1)) |
                             (std::uint64_t{1} << e);
        Subset a = Subset::from_mask(g2.order(), mask);
        Subgroup s = stabilizer_of_subset(g2, a);
        CHECK(a.count() % s.order == 0);
        CHECK(a.contains(s.elems));
      }
    }
  }
}

TEST_CASE("right cosets partition the group") {
  FiniteGroup g = group_cyclic(4);
  auto cosets = right_cosets(g, Subset::from_elements(4, {0, 2}));
  REQUIRE(cosets.size() == 2);
  CHECK(cosets[0] == Subset::from_elements(4, {0, 2}));
  CHECK(cosets[1] == Subset::from_elements(4, {1, 3}));
}

TEST_CASE("mtab round trip") {
  for (const auto& [name, g] : zoo::oracle_zoo()) {
    CAPTURE(name);
    FiniteGroup back = parse_mtab(write_mtab(g));
    REQUIRE(back.order() == g.order());
    for (int s = 0; s < g.order(); ++s)
      for (int t = 0; t < g.order(); ++t) CHECK(back.mul(s, t) == g.mul(s, t));
    CHECK(back.identity() == g.identity());
  }
}

TEST_CASE("mtab parser rejects malformed input") {
  CHECK_THROWS_AS(parse_mtab(std::string("mtab 2 2\n0 1\n1 0\n")), Error);
  CHECK_THROWS_AS(parse_mtab(std::string("mtab 1 2\n0 1\n1 0\nextra\n")), Error);
  CHECK_THROWS_AS(parse_mtab(std::string("mtab 1 2\n0 1\n1 0 9\n")), Error);
  CHECK_THROWS_AS(parse_mtab(std::string("mtab 1 2\n0 1\n1 0\n# note hi\n")), Error);
  FiniteGroup g = parse_mtab(std::string("mtab 1 2\n0 1\n1 0\n# label 1 flip\n"));
  CHECK(g.label(1) == "flip");
}

TEST_CASE("subgroup extraction preserves structure") {
  FiniteGroup g = zoo::s3();
  Subgroup comm = commutator_subgroup(g);
  SubgroupView view = subgroup_as_group(g, comm.elems);
  CHECK(view.group.order() == 3);
  CHECK(view.group.is_abelian());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(view.elements[view.group.mul(i, j)] == g.mul(view.elements[i], view.elements[j]));
}
