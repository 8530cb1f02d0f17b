#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracle_pfn.hpp"
#include "skewlat/heyting.hpp"
#include "skewlat/models.hpp"
#include "skewlat/properties.hpp"
#include "testutil.hpp"

using namespace skewlat;

TEST_SUITE_BEGIN("properties");

TEST_CASE("symmetry") {
  CHECK(is_symmetric(chain_lattice(4)).passed);
  CHECK(is_symmetric(build_pfn_algebra(2)).passed);
  // flat band: no pair commutes under either operation, so still symmetric
  CHECK(is_symmetric(rectangular_band(2, Hand::left)).passed);
}

TEST_CASE("normality") {
  CHECK(is_normal(build_pfn_algebra(3)).passed);
  CHECK(is_normal(boolean_lattice(3)).passed);
  // ad-hoc tables where the middle factors do not swap
  FiniteAlgebra odd;
  odd.size = 3;
  odd.meet = OpTable(3);
  odd.join = OpTable(3);
  for (int x = 0; x < 3; ++x) odd.meet.at(x, x) = x;
  odd.meet.at(0, 1) = 1;
  odd.meet.at(1, 0) = 1;
  odd.meet.at(0, 2) = 2;
  odd.meet.at(2, 0) = 0;
  odd.meet.at(1, 2) = 2;
  odd.meet.at(2, 1) = 1;
  const CheckReport r = is_normal(odd);
  CHECK(!r.passed);
  REQUIRE(r.witness.has_value());
  const auto& w = *r.witness;
  CHECK(meet_all(odd, {w[0], w[1], w[2], w[0]}) != meet_all(odd, {w[0], w[2], w[1], w[0]}));
}

TEST_CASE("normality matches the down-set criterion on the corpus pieces") {
  for (const FiniteAlgebra& alg :
       {build_pfn_algebra(2), rectangular_band(3, Hand::left), chain_lattice(5),
        direct_product(rectangular_band(2, Hand::left), rectangular_band(2, Hand::right))}) {
    const OrderRelations ord = compute_orders(alg);
    bool all_lattices = true;
    for (int u = 0; u < alg.size; ++u)
      all_lattices = all_lattices && down_set(alg, ord, u).lattice_check.passed;
    CHECK(is_normal(alg).passed == all_lattices);
  }
}

TEST_CASE("strong distributivity and its consequences") {
  for (const FiniteAlgebra& alg : {build_pfn_algebra(2), build_pfn_algebra(3)}) {
    CHECK(is_strongly_distributive(alg).passed);
    CHECK(is_distributive_eq12(alg).passed);
    CHECK(is_symmetric(alg).passed);
    CHECK(is_normal(alg).passed);
    CHECK(is_strongly_distributive(d_partition(alg).quotient).passed);
  }
}

TEST_CASE("the diamond is not distributive") {
  const FiniteAlgebra m3 = testutil::m3_diamond();
  REQUIRE(all_passed(validate_skew_lattice(m3)));
  const CheckReport r = is_distributive_eq12(m3);
  CHECK(!r.passed);
  REQUIRE(r.witness.has_value());
  CHECK(is_distributive_eq12(chain_lattice(4)).passed);
  CHECK(is_distributive_eq12(boolean_lattice(2)).passed);
}

TEST_CASE("handedness") {
  CHECK(handedness(build_pfn_algebra(2)) == Handedness::left);
  CHECK(handedness(chain_lattice(3)) == Handedness::both);
  CHECK(handedness(testutil::transpose(build_pfn_algebra(1))) == Handedness::right);
  CHECK(handedness(direct_product(rectangular_band(2, Hand::left),
                                  rectangular_band(2, Hand::right))) == Handedness::neither);
}

TEST_CASE("top class") {
  const FiniteAlgebra p1 = build_pfn_algebra(1);
  CHECK(top_class(p1) == std::vector<int>{1, 2});  // the total functions
  CHECK(top_class(boolean_lattice(3)) == std::vector<int>{7});
  const Subalgebra sub = subalgebra_closure(p1, std::vector<int>{0}, false);
  CHECK(top_class(sub.alg) == std::vector<int>{0});
  // every total function lands in the top class of the m=2 model
  const FiniteAlgebra p2 = build_pfn_algebra(2);
  const auto top = top_class(p2);
  REQUIRE(top.has_value());
  std::vector<int> totals;
  for (int x = 0; x < 9; ++x)
    if (oracle::dom(oracle::from_index(x, 2)).size() == 2) totals.push_back(x);
  CHECK(*top == totals);
}

TEST_CASE("lattice sections at top elements") {
  const FiniteAlgebra p1 = build_pfn_algebra(1);
  CHECK(lattice_section_at(p1, 2) == std::vector<int>{0, 2});
  CHECK(lattice_section_at(p1, 1) == std::vector<int>{0, 1});
  const FiniteAlgebra b8 = boolean_lattice(3);
  CHECK(lattice_section_at(b8, 7).size() == 8);  // the whole carrier
  CHECK_THROWS_AS(lattice_section_at(p1, 0), domain_error);
}

TEST_CASE("commuting subsets of the m=1 model") {
  const FiniteAlgebra p1 = build_pfn_algebra(1);
  const auto subsets = commuting_subsets(p1, 0);
  bool saw_empty = false, saw_01 = false;
  for (const CommutingSubset& s : subsets) {
    if (s.members.empty()) {
      saw_empty = true;
      CHECK(s.supremum == 0);  // join of the empty set is the bottom
    }
    if (s.members == std::vector<int>{0, 1}) {
      saw_01 = true;
      CHECK(s.supremum == 1);
    }
    CHECK(s.members != std::vector<int>{1, 2});  // meet does not commute there
    for (size_t i = 0; i < s.members.size(); ++i)
      for (size_t j = 0; j < s.members.size(); ++j)
        CHECK(p1.meet(s.members[i], s.members[j]) == p1.meet(s.members[j], s.members[i]));
  }
  CHECK(saw_empty);
  CHECK(saw_01);
  CHECK(subsets.size() == 6);  // {}, {0}, {1}, {2}, {0,1}, {0,2}

  // size cap honoured
  for (const CommutingSubset& s : commuting_subsets(p1, 1))
    CHECK(s.members.size() <= 1);
}

TEST_CASE("suprema agree with unions of compatible partial functions") {
  const int m = 2;
  const FiniteAlgebra p2 = build_pfn_algebra(m);
  for (const CommutingSubset& s : commuting_subsets(p2, 0)) {
    const auto u = oracle::compatible_union(s.members, m);
    REQUIRE(u.has_value());  // commuting means pairwise compatible
    REQUIRE(s.supremum.has_value());
    CHECK(*s.supremum == oracle::to_index(*u, m));
  }
}

TEST_CASE("iterated binary joins happen to realize suprema on these models") {
  // recorded observation, not an assumed law
  for (int m : {1, 2}) {
    const FiniteAlgebra alg = build_pfn_algebra(m);
    for (const CommutingSubset& s : commuting_subsets(alg, 0)) {
      if (s.members.empty()) continue;
      int acc = s.members.front();
      for (size_t i = 1; i < s.members.size(); ++i) acc = alg.join(acc, s.members[i]);
      REQUIRE(s.supremum.has_value());
      CHECK(acc == *s.supremum);
    }
  }
}

TEST_CASE("join completeness") {
  CHECK(is_join_complete(build_pfn_algebra(1), 0).passed);
  CHECK(is_join_complete(build_pfn_algebra(2), 0).passed);
  CHECK(is_join_complete(boolean_lattice(3), 0).passed);
  // a flat band has no bottom, so the empty subset already fails
  const CheckReport r = is_join_complete(rectangular_band(2, Hand::left), 0);
  CHECK(!r.passed);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->empty());
}

TEST_CASE("classification profile of the m=2 model") {
  const PropertyProfile p = classify(build_pfn_algebra(2), 0);
  CHECK(p.symmetric);
  CHECK(p.normal);
  CHECK(p.regular);
  CHECK(p.left_handed);
  CHECK(!p.right_handed);
  CHECK(p.strongly_distributive);
  CHECK(p.distributive_eq12);
  CHECK(!p.rectangular);
  CHECK(p.has_zero);
  CHECK(p.has_top_class);
  CHECK(p.join_complete);
  CHECK(is_rectangular(rectangular_band(3, Hand::left)).passed);
}

TEST_SUITE_END();
