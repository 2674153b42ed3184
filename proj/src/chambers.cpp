#include "hyperoct/chambers.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace hyperoct {

Chamber::Chamber(std::vector<int> word) : word_(std::move(word)) {
  SignedPermutation::from_one_line(std::span<const int>(word_));  // validates
}

std::vector<int> Chamber::cyclic_word() const {
  std::vector<int> w{1};
  for (int a : word_) w.push_back(a > 0 ? a + 1 : a - 1);
  const std::size_t half = w.size();
  for (std::size_t i = 0; i < half; ++i) w.push_back(-w[i]);
  return w;
}

std::string Chamber::to_string() const {
  std::string out = "(";
  const auto w = cyclic_word();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += letter_to_string(w[i]);
  }
  return out + ")";
}

std::vector<Chamber> all_chambers(int n) {
  std::vector<Chamber> out;
  for (const auto& s : all_signed_permutations(n)) out.emplace_back(s.one_line());
  return out;
}

int evaluate_y(int a, int b, int c, const Chamber& chamber) {
  const auto w = chamber.cyclic_word();
  const long length = static_cast<long>(w.size());
  auto position = [&](int letter) {
    auto it = std::find(w.begin(), w.end(), letter);
    if (it == w.end()) throw std::invalid_argument("evaluate_y: letter outside the chamber's alphabet");
    return static_cast<long>(it - w.begin());
  };
  const long pa = position(a), pb = position(b), pc = position(c);
  if (pa == pb || pb == pc || pa == pc) throw std::invalid_argument("evaluate_y: letters must be distinct");
  return ((pb - pa + length) % length) < ((pc - pa + length) % length) ? 1 : 0;
}

int evaluate_z(const ZLabel& label, const Chamber& chamber) {
  auto shift = [](int x) { return x > 0 ? x + 1 : x - 1; };
  if (label.is_loop()) return evaluate_y(1, -1, shift(label.a), chamber);
  return evaluate_y(1, shift(label.a), shift(label.b), chamber);
}

Rational evaluate(const RingElement& x, const Chamber& chamber) {
  if (x.space().graded()) throw std::invalid_argument("evaluate: chambers evaluate ungraded elements only");
  if (x.space().rank != chamber.rank()) throw std::invalid_argument("evaluate: rank mismatch");
  const auto& gens = GeneratorSet::get(chamber.rank());
  std::vector<int> values(gens.size());
  for (int id = 0; id < gens.size(); ++id) values[id] = evaluate_z(gens[id].label(), chamber);
  Rational total = 0;
  for (const auto& [m, c] : x.terms()) {
    bool one = true;
    for (Monomial rest = m; rest && one; rest &= rest - 1) one = values[std::countr_zero(rest)] == 1;
    if (one) total += c;
  }
  return total;
}

Chamber chamber_action(const SignedPermutation& sigma, const Chamber& chamber) {
  if (sigma.rank() != chamber.rank() + 1) throw std::invalid_argument("chamber_action: needs an element of B_{n+1}");
  auto w = chamber.cyclic_word();
  for (int& x : w) x = sigma(x);
  auto zero = std::find(w.begin(), w.end(), 1);
  std::rotate(w.begin(), zero, w.end());
  std::vector<int> word;
  for (int i = 1; i <= chamber.rank(); ++i) word.push_back(w[i] > 0 ? w[i] - 1 : w[i] + 1);
  return Chamber(std::move(word));
}

EvaluationMatrix evaluation_matrix(int n) {
  EvaluationMatrix e;
  e.chambers = all_chambers(n);
  e.monomials = nbc_basis(n);
  const auto& gens = GeneratorSet::get(n);
  for (const auto& ch : e.chambers) {
    std::vector<int> values(gens.size());
    for (int id = 0; id < gens.size(); ++id) values[id] = evaluate_z(gens[id].label(), ch);
    std::vector<Rational> row;
    for (Monomial m : e.monomials) {
      int v = 1;
      for (Monomial rest = m; rest; rest &= rest - 1) v &= values[std::countr_zero(rest)];
      row.emplace_back(v);
    }
    e.entries.push_back(std::move(row));
  }
  e.rank = matrix_rank(e.entries);
  return e;
}

}  // namespace hyperoct
