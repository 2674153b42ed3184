#include <doctest.h>

#include <set>

#include "hyperoct/chambers.hpp"
#include "hyperoct/character_theory.hpp"

using namespace hyperoct;

TEST_CASE("chamber encoding") {
  const Chamber c({1, -2});
  CHECK(c.to_string() == "(0,1,-2,-0,-1,2)");
  CHECK(c.cyclic_word() == std::vector<int>{1, 2, -3, -1, -2, 3});
  CHECK_THROWS_AS(Chamber({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Chamber({1, 3}), std::invalid_argument);
  for (int n = 1; n <= 5; ++n) CHECK(all_chambers(n).size() == hyperoctahedral_order(n));
}

TEST_CASE("Heaviside values on rank-two chambers") {
  // y_{0,-0,1}, y_{0,-0,2}, y_012, y_{01-2}, y_{0-12}, y_{0-1-2}
  const Chamber typical({1, 2}), twisted({-2, -1});
  CHECK(evaluate_y(1, -1, 2, typical) == 0);
  CHECK(evaluate_y(1, 2, 3, typical) == 1);
  CHECK(evaluate_y(1, 2, -3, typical) == 1);
  CHECK(evaluate_y(1, -2, 3, typical) == 0);
  CHECK(evaluate_y(1, -2, -3, typical) == 1);
  CHECK(evaluate_y(1, -1, 2, twisted) == 1);
  CHECK(evaluate_y(1, -1, 3, twisted) == 1);
  CHECK(evaluate_y(1, 2, 3, twisted) == 0);
  CHECK_THROWS(evaluate_y(1, 1, 2, typical));
}

TEST_CASE("exactly one cyclic order holds") {
  for (const auto& ch : all_chambers(2))
    for (int a : {1, -1, 2, -2, 3, -3})
      for (int b : {1, -1, 2, -2, 3, -3})
        for (int c : {1, -1, 2, -2, 3, -3}) {
          if (a == b || b == c || a == c) continue;
          CHECK(evaluate_y(a, b, c, ch) + evaluate_y(a, c, b, ch) == 1);
          CHECK(evaluate_y(a, b, c, ch) == evaluate_y(b, c, a, ch));
        }
}

TEST_CASE("nbc monomials separate chambers") {
  for (int n = 1; n <= 3; ++n) CHECK(evaluation_matrix(n).rank == hyperoctahedral_order(n));
}

TEST_CASE("chamber action") {
  for (int n = 1; n <= 3; ++n) {
    const auto chambers = all_chambers(n);
    const auto c = coxeter_element(n + 1);
    std::vector<int> word;
    for (int i = 1; i <= n; ++i) word.push_back(i);
    CHECK(chamber_action(c, Chamber(word)) == Chamber(word));
    std::set<Chamber> image;
    for (const auto& ch : chambers) image.insert(chamber_action(c * c, ch));
    CHECK(image.size() == chambers.size());
  }
}

TEST_CASE("evaluation of ring elements is multiplicative") {
  const auto z1 = Space::Z1(2);
  const auto a = parse_label_expression(z1, "z12 + z1"), b = parse_label_expression(z1, "1 - z2");
  for (const auto& ch : all_chambers(2)) CHECK(evaluate(a * b, ch) == evaluate(a, ch) * evaluate(b, ch));
}
