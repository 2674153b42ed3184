#include <doctest.h>

#include <map>
#include <random>

#include "hyperoct/bn_group.hpp"
#include "hyperoct/group_algebra.hpp"
#include "hyperoct/linear_algebra.hpp"

using namespace hyperoct;

namespace {

// Convolution straight from the definition, keyed by the elements themselves.
std::map<SignedPermutation, Rational> naive_product(const AlgebraElement& a, const AlgebraElement& b) {
  std::map<SignedPermutation, Rational> out;
  for (const auto& [x, c] : a.terms())
    for (const auto& [y, d] : b.terms()) out[x * y] += c * d;
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

std::map<SignedPermutation, Rational> as_map(const AlgebraElement& a) {
  std::map<SignedPermutation, Rational> out;
  for (const auto& [x, c] : a.terms()) out[x] = c;
  return out;
}

AlgebraElement random_element(int n, std::mt19937& rng) {
  const auto& els = BnGroup::get(n).elements();
  std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  AlgebraElement x(n);
  for (int t = 0; t < 5; ++t) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    x.add_term(els[pick(rng)], c);
  }
  return x;
}

std::size_t ideal_rank(const AlgebraElement& e) {
  const auto& g = BnGroup::get(e.rank());
  RationalMatrix rows;
  for (const auto& x : g.elements()) {
    std::vector<Rational> row(g.order());
    const auto ex = e * AlgebraElement::basis(x);
    for (const auto& [i, c] : ex.indexed_terms()) row[i] = c;
    rows.push_back(std::move(row));
  }
  return matrix_rank(std::move(rows));
}

const Rational half(1, 2);

}  // namespace

TEST_CASE("product agrees with direct convolution") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_element(n, rng), b = random_element(n, rng);
      CHECK(as_map(a * b) == naive_product(a, b));
    }
}

TEST_CASE("algebra elements keep canonical terms") {
  const auto s = simple_transposition(2, 1);
  AlgebraElement x(2);
  x.add_term(s, 1);
  x.add_term(s, -1);
  CHECK(x.is_zero());
  x.add_term(s, half);
  CHECK(x.coefficient(s) == half);
  CHECK(AlgebraElement::from_json(2, x.to_json()) == x);
  CHECK_THROWS_AS(AlgebraElement::identity(2) + AlgebraElement::identity(3), std::invalid_argument);
}

TEST_CASE("rank-one idempotents are the sign averages") {
  const auto id = AlgebraElement::identity(1), t1 = AlgebraElement::basis(sign_change(1, 1));
  CHECK(vazirani_idempotent(SignedPartition::parse("(1|)")) == (id + t1) * half);
  CHECK(vazirani_idempotent(SignedPartition::parse("(|1)")) == (id - t1) * half);
  CHECK(g_k(1, 1) == (id + t1) * half);
  CHECK(g_k(1, 0) == (id - t1) * half);
}

TEST_CASE("signed-partition idempotents form a complete orthogonal family") {
  for (int n = 1; n <= 3; ++n) {
    AlgebraElement sum(n);
    const auto lambdas = signed_partitions(n);
    for (const auto& a : lambdas) {
      const auto ga = vazirani_idempotent(a);
      sum += ga;
      for (const auto& b : lambdas) {
        const auto p = ga * vazirani_idempotent(b);
        if (a == b)
          CHECK(p == ga);
        else
          CHECK(p.is_zero());
      }
    }
    CHECK(sum == AlgebraElement::identity(n));
  }
}

TEST_CASE("graded idempotents group the family by positive length") {
  for (int n = 1; n <= 3; ++n) {
    AlgebraElement sum(n);
    for (int k = 0; k <= n; ++k) {
      AlgebraElement want(n);
      for (const auto& l : signed_partitions(n))
        if (static_cast<int>(l.positive.size()) == k) want += vazirani_idempotent(l);
      CHECK(g_k(n, k) == want);
      sum += g_k(n, k);
    }
    CHECK(sum == AlgebraElement::identity(n));
  }
}

TEST_CASE("type-A Eulerian elements of S_2 and S_3") {
  const auto s = AlgebraElement::basis(simple_transposition(2, 1));
  const auto id2 = AlgebraElement::identity(2);
  CHECK(eulerian_idempotent_k(2, 0) == (id2 - s) * half);
  CHECK(eulerian_idempotent_k(2, 1) == (id2 + s) * half);

  AlgebraElement e2(3);
  for (const auto& w : BnGroup::get(3).elements())
    if (w.is_positive()) e2.add_term(w, Rational(1, 6));
  CHECK(eulerian_idempotent_k(3, 2) == e2);
  const auto w0 = AlgebraElement::basis(SignedPermutation::from_one_line({3, 2, 1}));
  CHECK(eulerian_idempotent_k(3, 1) == (AlgebraElement::identity(3) - w0) * half);
}

TEST_CASE("forgetting signs is an algebra map onto S_n") {
  std::mt19937 rng(11);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_element(n, rng), b = random_element(n, rng);
      CHECK(tau_map(a * b) == tau_map(a) * tau_map(b));
      CHECK(tau_map(a + b) == tau_map(a) + tau_map(b));
      for (const auto& [w, c] : tau_map(a).terms()) CHECK(w.is_positive());
    }
}

TEST_CASE("shape sums partition the group") {
  for (int n = 1; n <= 3; ++n) {
    AlgebraElement sum(n), all(n);
    for (const auto& a : signed_compositions(n)) sum += y_basis(a);
    for (const auto& w : BnGroup::get(n).elements()) all.add_term(w, 1);
    CHECK(sum == all);
  }
}

TEST_CASE("Reutenauer and sign projectors") {
  const auto r = reutenauer_idempotent(3, {1, 2, 3});
  CHECK(r * r == r);
  const auto p = epsilon(2, {1, 2}, 1), m = epsilon(2, {1, 2}, -1);
  CHECK(p * p == p);
  CHECK((p * m).is_zero());
  CHECK(x_basis(3, {}) == AlgebraElement::identity(3));
}

TEST_CASE("right-ideal character degree equals the ideal dimension") {
  for (int n = 1; n <= 2; ++n)
    for (const auto& l : signed_partitions(n)) {
      const auto g = vazirani_idempotent(l);
      CHECK(right_ideal_character(g).degree() == Rational(static_cast<long>(ideal_rank(g))));
    }
  CHECK(right_ideal_character(AlgebraElement::identity(2)) == regular_character(2));
  CHECK_THROWS_AS(right_ideal_character(AlgebraElement::identity(2) * Rational(2)), std::domain_error);
}
