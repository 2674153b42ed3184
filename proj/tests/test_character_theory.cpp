#include <doctest.h>

#include "hyperoct/bn_group.hpp"
#include "hyperoct/character_theory.hpp"

using namespace hyperoct;

namespace {

ClassFunction row(int n, const char* label) { return character_table(n).row(SignedPartition::parse(label)); }

ClassFunction ints(int n, std::vector<int> v) {
  std::vector<Rational> q(v.begin(), v.end());
  return ClassFunction(n, std::move(q));
}

// Induction of a +-1-valued character straight from the definition, summing
// over the whole group.
ClassFunction brute_induce(const SubgroupCharacter& chi) {
  const int n = chi.rank;
  const auto& g = BnGroup::get(n);
  std::map<SignedPermutation, Rational> value;
  for (std::size_t i = 0; i < chi.order(); ++i) {
    const int e = chi.exponents[i] % chi.root_order;
    REQUIRE((2 * e) % chi.root_order == 0);
    value[chi.elements[i]] = e == 0 ? 1 : -1;
  }
  ClassFunction out(n);
  for (const auto& c : g.classes()) {
    Rational s = 0;
    for (const auto& x : g.elements()) {
      auto it = value.find(x.inverse() * c.representative * x);
      if (it != value.end()) s += it->second;
    }
    out[g.class_index(c.label)] = s / Rational(static_cast<long>(chi.order()));
  }
  return out;
}

}  // namespace

TEST_CASE("symmetric group characters by Murnaghan-Nakayama") {
  CHECK(sn_character({2, 1}, {1, 1, 1}) == 2);
  CHECK(sn_character({2, 1}, {2, 1}) == 0);
  CHECK(sn_character({2, 1}, {3}) == -1);
  CHECK(sn_character({2, 2}, {2, 2}) == 2);
  CHECK(sn_character({2, 2}, {3, 1}) == -1);
  CHECK(sn_character({3, 1}, {4}) == -1);
  CHECK(sn_character({2, 1, 1}, {4}) == 1);
  CHECK(sn_character({3, 2}, {1, 1, 1, 1, 1}) == 5);
}

TEST_CASE("B_1 and B_2 character tables") {
  CHECK(row(1, "(1|)") == ints(1, {1, 1}));
  CHECK(row(1, "(|1)") == ints(1, {1, -1}));
  // Columns (1,1|), (2|), (1|1), (|2), (|1,1).
  CHECK(row(2, "(2|)") == ints(2, {1, 1, 1, 1, 1}));
  CHECK(row(2, "(|1,1)") == ints(2, {1, -1, -1, 1, 1}));
  CHECK(row(2, "(1,1|)") == ints(2, {1, -1, 1, -1, 1}));
  CHECK(row(2, "(|2)") == ints(2, {1, 1, -1, -1, 1}));
  CHECK(row(2, "(1|1)") == ints(2, {2, 0, 0, 0, -2}));
}

TEST_CASE("orthogonality relations") {
  for (int n = 1; n <= 4; ++n) {
    const auto& rows = character_table(n).rows();
    Rational burnside = 0;
    for (std::size_t a = 0; a < rows.size(); ++a) {
      burnside += rows[a].degree() * rows[a].degree();
      for (std::size_t b = 0; b < rows.size(); ++b) CHECK(inner_product(rows[a], rows[b]) == (a == b ? 1 : 0));
    }
    CHECK(burnside == Rational(static_cast<long>(hyperoctahedral_order(n))));
  }
}

TEST_CASE("linear characters and twists") {
  const auto lc = linear_characters(3);
  CHECK(lc.trivial == trivial_character(3));
  CHECK(lc.negative_sign == row(3, "(|3)"));
  CHECK(lc.type_a_sign == row(3, "(1,1,1|)"));
  CHECK(lc.product == row(3, "(|1,1,1)"));
  CHECK(pullback_from_sn({2, 1}) == row(3, "(2,1|)"));
}

TEST_CASE("induction products") {
  const auto p = induction_product(bn_irreducible(SignedPartition::parse("(1|)")), bn_irreducible(SignedPartition::parse("(1|)")));
  CHECK(p == row(2, "(2|)") + row(2, "(1,1|)"));
  const auto q = induction_product(bn_irreducible(SignedPartition::parse("(1|)")), bn_irreducible(SignedPartition::parse("(|1)")));
  CHECK(q == row(2, "(1|1)"));
}

TEST_CASE("induction agrees with the definition") {
  for (int n = 2; n <= 3; ++n) {
    const auto chi = linear_character_closure(
        n, {{longest_element(n), n % 2, 2}, {simple_transposition(n, 1), 0, 1}, {sign_change(n, 1), 1, 2}});
    CHECK(induce_character(chi) == brute_induce(chi));
  }
  const auto cox = linear_character_closure(3, {{coxeter_element(3), 3, 6}});
  CHECK(induce_character(cox) == brute_induce(cox));
}

TEST_CASE("closure rejects inconsistent values") {
  CHECK_THROWS_AS(linear_character_closure(2, {{simple_transposition(2, 1), 1, 3}}), std::domain_error);
}

TEST_CASE("rho on the centralizer of a negative cycle is faithful") {
  for (int n = 1; n <= 4; ++n) {
    const auto rho = rho_character(SignedPartition{{}, {n}});
    CHECK(rho.order() == static_cast<std::size_t>(2 * n));
    CHECK(decompose(induce_character(rho)).size() > 0);
  }
}

TEST_CASE("Coxeter elements") {
  for (int N = 1; N <= 5; ++N) {
    const auto c = coxeter_element(N);
    CHECK(cycle_type(c) == SignedPartition{{}, {N}});
    auto h = c;
    int order = 1;
    while (!(h == SignedPermutation::identity(N))) {
      h = h * c;
      ++order;
    }
    CHECK(order == 2 * N);
  }
  CHECK(coxeter_element(3).one_line() == std::vector<int>{2, 3, -1});
}

TEST_CASE("coset character of the rank-two Coxeter group") {
  const auto coset = coset_permutation_character(coxeter_element(2));
  CHECK(coset == ints(2, {2, 0, 0, 2, 2}));
  CHECK(coset == row(2, "(2|)") + row(2, "(|1,1)"));
}

TEST_CASE("decomposition") {
  const auto d = decompose(regular_character(2));
  for (const auto& [l, m] : d) CHECK(Rational(m) == character_table(2).row(l).degree());
  CHECK_THROWS_AS(decompose(trivial_character(2) * Rational(1, 2)), std::domain_error);
  CHECK_THROWS_AS(decompose(trivial_character(2) - row(2, "(1|1)")), std::domain_error);
  CHECK(decomposition_to_string(decompose(row(2, "(1|1)") * Rational(2))) == "2*chi(1|1)");
}

TEST_CASE("character table serialization") {
  const auto& t = character_table(3);
  CHECK(CharacterTable::from_json(t.to_json()).rows() == t.rows());
  auto j = t.to_json();
  j["n"] = 2;
  CHECK_THROWS_AS(CharacterTable::from_json(j), std::invalid_argument);
  CHECK_THROWS_AS(CharacterTable::from_json(nlohmann::json::array()), std::invalid_argument);
}
