#include <doctest.h>

#include <map>
#include <set>

#include "hyperoct/bn_group.hpp"
#include "hyperoct/signed_combinatorics.hpp"
#include "hyperoct/signed_permutation.hpp"

using namespace hyperoct;

namespace {

// Orbits of B_n on itself by conjugation, computed without cycle types.
std::vector<std::set<SignedPermutation>> conjugation_orbits(int n) {
  const auto els = all_signed_permutations(n);
  std::set<SignedPermutation> seen;
  std::vector<std::set<SignedPermutation>> orbits;
  for (const auto& g : els) {
    if (seen.count(g)) continue;
    std::set<SignedPermutation> orbit;
    for (const auto& x : els) orbit.insert(x * g * x.inverse());
    seen.insert(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace

TEST_CASE("composition applies the right factor first") {
  const auto a = SignedPermutation::from_one_line({2, -1, 3});
  const auto b = SignedPermutation::from_one_line({-3, 1, 2});
  const auto ab = a * b;
  for (int i = -3; i <= 3; ++i)
    if (i != 0) CHECK(ab(i) == a(b(i)));
  CHECK(a * a.inverse() == SignedPermutation::identity(3));
  CHECK(SignedPermutation::parse("2,-3,1").to_string() == SignedPermutation::from_one_line({2, -3, 1}).to_string());
  CHECK_THROWS_AS(SignedPermutation::from_one_line({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(compose(a, SignedPermutation::identity(2)), std::invalid_argument);
}

TEST_CASE("group orders and enumeration") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(all_signed_permutations(n).size() == hyperoctahedral_order(n));
    std::set<SignedPermutation> distinct;
    for (const auto& s : all_signed_permutations(n)) distinct.insert(s);
    CHECK(distinct.size() == hyperoctahedral_order(n));
  }
  CHECK(hyperoctahedral_order(4) == 384);
}

TEST_CASE("signed partitions count the bipartitions and start at the identity class") {
  const std::vector<std::size_t> bipartitions = {2, 5, 10, 20, 36};
  for (int n = 1; n <= 5; ++n) {
    const auto sp = signed_partitions(n);
    CHECK(sp.size() == bipartitions[static_cast<std::size_t>(n - 1)]);
    CHECK(sp.front() == SignedPartition{Partition(static_cast<std::size_t>(n), 1), {}});
    for (const auto& l : sp) CHECK(SignedPartition::parse(l.to_string()) == l);
  }
  std::vector<std::string> b2;
  for (const auto& l : signed_partitions(2)) b2.push_back(l.to_string());
  CHECK(b2 == std::vector<std::string>{"(1,1|)", "(2|)", "(1|1)", "(|2)", "(|1,1)"});
  CHECK_THROWS_AS(SignedPartition::parse("(1,2|)"), std::invalid_argument);
  CHECK_THROWS_AS(SignedPartition::parse("2|1"), std::invalid_argument);
}

TEST_CASE("cycle type is a complete conjugacy invariant") {
  for (int n = 1; n <= 3; ++n) {
    const auto orbits = conjugation_orbits(n);
    CHECK(orbits.size() == signed_partitions(n).size());
    std::map<SignedPartition, std::size_t> sizes;
    for (const auto& orbit : orbits) {
      const auto t = cycle_type(*orbit.begin());
      for (const auto& g : orbit) CHECK(cycle_type(g) == t);
      CHECK(sizes.emplace(t, orbit.size()).second);
    }
    for (const auto& c : conjugacy_classes(n)) {
      CHECK(c.size == sizes.at(c.label));
      CHECK(cycle_type(c.representative) == c.label);
    }
  }
}

TEST_CASE("cycle types of small elements") {
  CHECK(cycle_type(SignedPermutation::from_one_line({-1})).to_string() == "(|1)");
  CHECK(cycle_type(SignedPermutation::from_one_line({2, -1})).to_string() == "(|2)");
  CHECK(cycle_type(SignedPermutation::from_one_line({-2, -1})).to_string() == "(2|)");
  CHECK(cycle_type(SignedPermutation::from_one_line({2, 3, 1})).to_string() == "(3|)");
  CHECK(cycle_type(longest_element(3)).to_string() == "(|1,1,1)");
}

TEST_CASE("centralizer orders match a brute-force count") {
  for (int n = 1; n <= 3; ++n) {
    const auto els = all_signed_permutations(n);
    for (const auto& l : signed_partitions(n)) {
      const auto rep = standard_representative(l);
      std::uint64_t commuting = 0;
      for (const auto& x : els)
        if (x * rep == rep * x) ++commuting;
      CHECK(centralizer_order(l) == commuting);
      for (const auto& g : centralizer_generators(l)) CHECK(g.element * rep == rep * g.element);
    }
  }
  CHECK(centralizer_order(SignedPartition::parse("(2,2|1)")) == 4 * 4 * 2 * 2);
  CHECK(centralizer_order(SignedPartition::parse("(|3)")) == 6);
}

TEST_CASE("standard representatives have the requested type") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : signed_partitions(n)) CHECK(cycle_type(standard_representative(l)) == l);
}

TEST_CASE("signed compositions and descent shapes") {
  for (int n = 1; n <= 5; ++n) {
    int p = 2;
    for (int i = 1; i < n; ++i) p *= 3;
    CHECK(signed_compositions(n).size() == static_cast<std::size_t>(p));
  }
  CHECK(mr_shape(SignedPermutation::from_one_line({2, -3, 1})).parts == std::vector<int>{1, -1, 1});
  CHECK(mr_shape(SignedPermutation::from_one_line({1, 2, -3})).parts == std::vector<int>{2, -1});
  CHECK(mr_shape(SignedPermutation::from_one_line({-1, -2})).parts == std::vector<int>{-2});
  CHECK(mr_shape(SignedPermutation::from_one_line({-2, -1})).parts == std::vector<int>{-1, -1});
  CHECK(descent_set(SignedPermutation::from_one_line({3, 1, 2})) == std::vector<int>{1});

  // Every element has exactly one shape, so shape classes partition B_n.
  for (int n = 1; n <= 4; ++n) {
    std::map<std::vector<int>, int> count;
    for (const auto& s : all_signed_permutations(n)) ++count[mr_shape(s).parts];
    CHECK(count.size() == signed_compositions(n).size());
  }
}

TEST_CASE("composition helpers") {
  const auto d = composition_helpers(SignedComposition{{2, -1, 1}});
  CHECK(d.magnitudes == std::vector<int>{2, 1, 1});
  CHECK(d.partial_sums == std::vector<int>{2, 3});
  CHECK(d.blocks == std::vector<std::vector<int>>{{1, 2}, {3}, {4}});
  CHECK(d.sorted.to_string() == "(2,1|1)");
}

TEST_CASE("lifting fixes zero and preserves products") {
  const auto a = SignedPermutation::from_one_line({2, -1});
  const auto b = SignedPermutation::from_one_line({-1, 2});
  CHECK(lift_fixing_zero(a)(1) == 1);
  CHECK(lift_fixing_zero(a)(2) == 3);
  CHECK(lift_fixing_zero(a * b) == lift_fixing_zero(a) * lift_fixing_zero(b));
}

TEST_CASE("group table agrees with composition") {
  const auto& g = BnGroup::get(3);
  for (std::uint32_t a = 0; a < g.order(); a += 7)
    for (std::uint32_t b = 0; b < g.order(); ++b) {
      CHECK(g.element(g.multiply(a, b)) == g.element(a) * g.element(b));
      CHECK(g.element(g.inverse(b)) == g.element(b).inverse());
    }
  CHECK(g.element(g.identity_index()) == SignedPermutation::identity(3));
}
