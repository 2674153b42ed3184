#include <doctest.h>

#include <random>

#include "hyperoct/presented_rings.hpp"
#include "hyperoct/rewrite_system.hpp"

using namespace hyperoct;

namespace {

RingElement expr(Space s, const std::string& text) { return parse_label_expression(s, text); }

FreePolynomial random_free(int n, std::mt19937& rng) {
  const int gens = GeneratorSet::get(n).size();
  std::uniform_int_distribution<int> pick(0, gens - 1), coeff(-3, 3), size(1, n);
  FreePolynomial p;
  for (int t = 0; t < 4; ++t) {
    Monomial m = 0;
    for (int k = size(rng); k > 0; --k) m |= Monomial{1} << pick(rng);
    p[m] += coeff(rng);
  }
  std::erase_if(p, [](const auto& t) { return t.second == 0; });
  return p;
}

}  // namespace

TEST_CASE("generator order and names") {
  const auto& g = GeneratorSet::get(2);
  CHECK(g.size() == 4);
  CHECK(g[0].pretty_name() == "z1");
  CHECK(g.id_of_json_name("z12-") == g.id_of(Generator{1, 2, true}));
  CHECK(Generator{1, 2, true}.pretty_name() == "z1~2");
  CHECK(ZLabel::parse("z~12") == ZLabel::pair(-1, 2));
  CHECK(ZLabel::parse("z1~2").to_string() == "z1~2");
}

TEST_CASE("Hilbert series and nbc counts") {
  CHECK(hilbert_series(2) == std::vector<std::uint64_t>{1, 4, 3});
  CHECK(hilbert_series(3) == std::vector<std::uint64_t>{1, 9, 23, 15});
  for (int n = 1; n <= 5; ++n) {
    const auto h = hilbert_series(n);
    std::uint64_t total = 0;
    for (int k = 0; k <= n; ++k) {
      CHECK(nbc_basis(n, k).size() == h[static_cast<std::size_t>(k)]);
      total += h[static_cast<std::size_t>(k)];
    }
    CHECK(nbc_basis(n).size() == total);
  }
}

TEST_CASE("one straightening rule per broken circuit") {
  // Hand j carries 2j-1 generators, and each pair in a hand is broken.
  const std::vector<std::size_t> counts = {0, 3, 13, 34};
  for (int n = 1; n <= 4; ++n)
    for (bool graded : {true, false}) {
      const auto sys = RewriteSystem::get(n, graded);
      CHECK(sys->rules().size() == counts[static_cast<std::size_t>(n - 1)]);
      CHECK(sys->critical_pair_failures().empty());
      for (const auto& [lhs, rhs] : sys->rules())
        for (const auto& [m, c] : rhs) {
          CHECK(monomial_less(m, lhs));
          CHECK(sys->is_nbc(m));
        }
    }
}

TEST_CASE("reduction is independent of strategy") {
  std::mt19937 rng(3);
  for (int n = 2; n <= 4; ++n)
    for (bool graded : {true, false}) {
      const auto sys = RewriteSystem::get(n, graded);
      for (int trial = 0; trial < 30; ++trial) {
        const auto p = random_free(n, rng);
        const auto nf = sys->normal_form(p);
        CHECK(sys->naive_reduce(p, false) == nf);
        CHECK(sys->naive_reduce(p, true) == nf);
      }
    }
}

TEST_CASE("defining relations vanish") {
  for (int n = 1; n <= 3; ++n)
    for (bool graded : {true, false}) {
      const auto sys = RewriteSystem::get(n, graded);
      for (const auto& r : RewriteSystem::defining_relations(n, graded)) CHECK(sys->normal_form(r).empty());
    }
}

TEST_CASE("rewrite rules survive JSON") {
  const auto sys = RewriteSystem::get(3, false);
  const auto back = RewriteSystem::from_json(sys->to_json());
  CHECK(back->rules() == sys->rules());
  auto j = sys->to_json();
  j["rules"] = nlohmann::json::array();
  CHECK_THROWS_AS(RewriteSystem::from_json(j), std::invalid_argument);
}

TEST_CASE("label canonicalization") {
  const auto z3 = Space::Z3(2), z1 = Space::Z1(2);
  CHECK(expr(z3, "z~1") == expr(z3, "-z1"));
  CHECK(expr(z1, "z~1") == expr(z1, "1 - z1"));
  CHECK(expr(z3, "z21") == expr(z3, "-z12"));
  CHECK(expr(z1, "z21") == expr(z1, "1 - z12"));
  CHECK(expr(z3, "z~12") == expr(z3, "z1~2 + z1 + z2"));
  CHECK(expr(z3, "z~1~2") == expr(z3, "z12 + z1 - z2"));
  CHECK(expr(z1, "z~12") == expr(z1, "z1~2 + z1 + z2 - 1"));
  CHECK(expr(z3, "z1 z1") == RingElement(z3));
  CHECK(expr(z1, "z1 z1") == expr(z1, "z1"));
}

TEST_CASE("action on the n = 2 ring") {
  const auto z3 = Space::Z3(2);
  const auto s1 = simple_transposition(2, 1), t2 = sign_change(2, 2);
  CHECK(act(s1, expr(z3, "z1")) == expr(z3, "z2"));
  CHECK(act(t2, expr(z3, "z2")) == expr(z3, "-z2"));
  CHECK(act(t2, expr(z3, "z12")) == expr(z3, "z1~2"));
  CHECK(act(s1 * t2, expr(z3, "z1 z12")) == expr(z3, "z1 z1~2"));
  const auto v = expr(z3, "z12 + z1~2 + z1");
  CHECK(act(s1, v) == v * Rational(-1));
}

TEST_CASE("actions are homomorphisms") {
  for (Space s : {Space::Z3(2), Space::Z1(2), Space::Y3(2), Space::Y1(2), Space::Z1(3)}) {
    const int N = s.group_rank();
    const auto a = SignedPermutation::from_one_line(N == 2 ? std::vector<int>{-2, 1} : std::vector<int>{2, -3, 1});
    const auto b = N == 2 ? sign_change(2, 1) : SignedPermutation::from_one_line({-1, 3, 2});
    for (Monomial m : nbc_basis(s.rank)) {
      const auto x = RingElement::from_free(s, FreePolynomial{{m, 1}});
      CHECK(act(a * b, x) == act(a, act(b, x)));
      CHECK(act(SignedPermutation::identity(N), x) == x);
    }
  }
}

TEST_CASE("products are associative and respect degree") {
  const auto z3 = Space::Z3(3);
  const auto a = expr(z3, "z12 + z3"), b = expr(z3, "z2~3 - z1"), c = expr(z3, "z13");
  CHECK((a * b) * c == a * (b * c));
  CHECK((a * b).degree() == 2);
  const auto z1 = Space::Z1(3);
  const auto x = expr(z1, "z12"), y = expr(z1, "1 - z12");
  CHECK((x * y).is_zero());
}

TEST_CASE("ring elements survive JSON") {
  const auto z1 = Space::Z1(3);
  const auto x = expr(z1, "1/2 z1 z23 - z2~3 + 3");
  CHECK(RingElement::from_json(z1, x.to_json()) == x);
  CHECK(x.to_json().dump().find("z23+") != std::string::npos);
}

TEST_CASE("types and loop degree") {
  const auto& g = GeneratorSet::get(2);
  const Monomial z1 = Monomial{1} << g.id_of(Generator{0, 1, false});
  const Monomial z2 = Monomial{1} << g.id_of(Generator{0, 2, false});
  const Monomial z12 = Monomial{1} << g.id_of(Generator{1, 2, false});
  CHECK(type_of(2, Monomial{0}).shape().to_string() == "(1,1|)");
  CHECK(type_of(2, z12).shape().to_string() == "(2|)");
  CHECK(type_of(2, z1).shape().to_string() == "(1|1)");
  CHECK(type_of(2, z1 | z2).shape().to_string() == "(|1,1)");
  CHECK(type_of(2, z1 | z12).shape().to_string() == "(|2)");
  CHECK(loop_degree(2, z1 | z2) == 2);
  CHECK(loop_degree(2, z1 | z12) == 1);
}

TEST_CASE("graded characters sum to the regular character") {
  for (int n = 1; n <= 3; ++n)
    for (Space s : {Space::Z3(n), Space::Z1(n)}) {
      ClassFunction total(n);
      for (const auto& c : graded_character(s)) total += c;
      CHECK(total == regular_character(n));
    }
}
