#include "hyperoct/signed_combinatorics.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hyperoct {
namespace {

void partitions_rec(int remaining, int max_part, Partition& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    partitions_rec(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

Partition parse_parts(std::string_view text) {
  Partition p;
  std::string s(text);
  if (s.empty()) return p;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed part list: " + s);
    }
    if (used != item.size() || x <= 0) throw std::invalid_argument("malformed part list: " + s);
    p.push_back(x);
  }
  if (!std::is_sorted(p.begin(), p.end(), std::greater<>())) throw std::invalid_argument("parts must weakly decrease: " + s);
  return p;
}

std::string strip(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  return s;
}

std::uint64_t factorial(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t side_centralizer(const Partition& p) {
  std::map<int, int> mult;
  for (int k : p) ++mult[k];
  std::uint64_t r = 1;
  for (auto [k, m] : mult) {
    for (int i = 0; i < m; ++i) r *= static_cast<std::uint64_t>(2 * k);
    r *= factorial(m);
  }
  return r;
}

}  // namespace

int SignedPartition::size() const {
  return std::accumulate(positive.begin(), positive.end(), 0) + std::accumulate(negative.begin(), negative.end(), 0);
}

std::string partition_to_string(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

std::string SignedPartition::to_string() const {
  return "(" + partition_to_string(positive) + "|" + partition_to_string(negative) + ")";
}

SignedPartition SignedPartition::parse(std::string_view text) {
  std::string s = strip(text);
  if (s.size() < 3 || s.front() != '(' || s.back() != ')') throw std::invalid_argument("malformed signed partition: " + s);
  s = s.substr(1, s.size() - 2);
  auto bar = s.find('|');
  if (bar == std::string::npos || s.find('|', bar + 1) != std::string::npos)
    throw std::invalid_argument("malformed signed partition: " + s);
  return SignedPartition{parse_parts(s.substr(0, bar)), parse_parts(s.substr(bar + 1))};
}

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions: negative size");
  std::vector<Partition> out;
  Partition prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

Partition partition_union(const Partition& a, const Partition& b) {
  Partition r(a);
  r.insert(r.end(), b.begin(), b.end());
  std::sort(r.begin(), r.end(), std::greater<>());
  return r;
}

std::vector<SignedPartition> signed_partitions(int n) {
  if (n < 0) throw std::invalid_argument("signed_partitions: negative size");
  std::vector<SignedPartition> out;
  for (int k = n; k >= 0; --k) {
    auto pos = partitions(k);
    std::reverse(pos.begin(), pos.end());
    auto neg = partitions(n - k);
    for (const auto& a : pos)
      for (const auto& b : neg) out.push_back({a, b});
  }
  return out;
}

int SignedComposition::size() const {
  int s = 0;
  for (int p : parts) s += std::abs(p);
  return s;
}

std::string SignedComposition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

SignedComposition SignedComposition::parse(std::string_view text) {
  std::string s = strip(text);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw std::invalid_argument("malformed signed composition: " + s);
    s = s.substr(1, s.size() - 2);
  }
  SignedComposition c;
  if (s.empty()) return c;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed signed composition: " + s);
    }
    if (used != item.size() || x == 0) throw std::invalid_argument("malformed signed composition: " + s);
    c.parts.push_back(x);
  }
  return c;
}

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) return {{}};
  for (int first = 1; first <= n; ++first)
    for (auto rest : compositions(n - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

std::vector<SignedComposition> signed_compositions(int n) {
  std::vector<SignedComposition> out;
  for (const auto& c : compositions(n)) {
    const int l = static_cast<int>(c.size());
    for (unsigned mask = 0; mask < (1u << l); ++mask) {
      SignedComposition p;
      for (int i = 0; i < l; ++i) p.parts.push_back((mask & (1u << i)) ? -c[i] : c[i]);
      out.push_back(std::move(p));
    }
  }
  return out;
}

CompositionData composition_helpers(const SignedComposition& p) {
  CompositionData d;
  int s = 0;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    int m = std::abs(p.parts[i]);
    d.magnitudes.push_back(m);
    std::vector<int> block(m);
    std::iota(block.begin(), block.end(), s + 1);
    d.blocks.push_back(std::move(block));
    s += m;
    if (i + 1 < p.parts.size()) d.partial_sums.push_back(s);
    (p.parts[i] > 0 ? d.sorted.positive : d.sorted.negative).push_back(m);
  }
  std::sort(d.sorted.positive.begin(), d.sorted.positive.end(), std::greater<>());
  std::sort(d.sorted.negative.begin(), d.sorted.negative.end(), std::greater<>());
  return d;
}

void SignedSetPartition::normalize() {
  for (auto* side : {&positive_blocks, &negative_blocks}) {
    for (auto& b : *side) std::sort(b.begin(), b.end());
    std::sort(side->begin(), side->end());
  }
}

SignedPartition SignedSetPartition::shape() const {
  SignedPartition s;
  for (const auto& b : positive_blocks) s.positive.push_back(static_cast<int>(b.size()));
  for (const auto& b : negative_blocks) s.negative.push_back(static_cast<int>(b.size()));
  std::sort(s.positive.begin(), s.positive.end(), std::greater<>());
  std::sort(s.negative.begin(), s.negative.end(), std::greater<>());
  return s;
}

std::string SignedSetPartition::to_string() const {
  auto side = [](const std::vector<std::vector<int>>& blocks) {
    std::string out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (i) out += ',';
      out += '{' + partition_to_string(blocks[i]) + '}';
    }
    return out;
  };
  return "(" + side(positive_blocks) + "|" + side(negative_blocks) + ")";
}

SignedPartition cycle_type(const SignedPermutation& sigma) {
  const int n = sigma.rank();
  std::vector<bool> seen(n + 1, false);
  SignedPartition t;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    int length = 0, sign = 1, j = i;
    do {
      seen[j] = true;
      int image = sigma(j);
      if (image < 0) sign = -sign;
      j = std::abs(image);
      ++length;
    } while (j != i);
    (sign > 0 ? t.positive : t.negative).push_back(length);
  }
  std::sort(t.positive.begin(), t.positive.end(), std::greater<>());
  std::sort(t.negative.begin(), t.negative.end(), std::greater<>());
  return t;
}

SignedComposition mr_shape(const SignedPermutation& sigma) {
  const auto w = sigma.one_line();
  SignedComposition shape;
  if (w.empty()) return shape;
  int run = 1;
  for (std::size_t i = 0; i + 1 <= w.size(); ++i) {
    bool boundary = i + 1 == w.size();
    if (!boundary) {
      bool same_sign = (w[i] > 0) == (w[i + 1] > 0);
      boundary = !same_sign || std::abs(w[i]) > std::abs(w[i + 1]);
    }
    if (boundary) {
      shape.parts.push_back(w[i] > 0 ? run : -run);
      run = 1;
    } else {
      ++run;
    }
  }
  return shape;
}

std::vector<int> descent_set(const SignedPermutation& w) {
  std::vector<int> d;
  for (int i = 1; i < w.rank(); ++i)
    if (w(i) > w(i + 1)) d.push_back(i);
  return d;
}

std::uint64_t hyperoctahedral_order(int n) { return (std::uint64_t{1} << n) * factorial(n); }

std::uint64_t centralizer_order(const SignedPartition& lambda) {
  return side_centralizer(lambda.positive) * side_centralizer(lambda.negative);
}

std::vector<ConjugacyClass> conjugacy_classes(int n) {
  std::vector<ConjugacyClass> out;
  const auto order = hyperoctahedral_order(n);
  for (auto& lambda : signed_partitions(n))
    out.push_back({lambda, order / centralizer_order(lambda), standard_representative(lambda)});
  return out;
}

std::vector<std::vector<int>> standard_blocks(const SignedPartition& lambda) {
  std::vector<std::vector<int>> blocks;
  int s = 0;
  for (const auto* side : {&lambda.positive, &lambda.negative})
    for (int k : *side) {
      std::vector<int> b(k);
      std::iota(b.begin(), b.end(), s + 1);
      s += k;
      blocks.push_back(std::move(b));
    }
  return blocks;
}

namespace {

// b_1 -> b_2 -> ... -> b_k -> sign * b_1.
void write_cycle(std::vector<int>& images, const std::vector<int>& block, int sign) {
  for (std::size_t i = 0; i + 1 < block.size(); ++i) images[block[i] - 1] = block[i + 1];
  images[block.back() - 1] = sign * block.front();
}

}  // namespace

SignedPermutation standard_representative(const SignedPartition& lambda) {
  const int n = lambda.size();
  auto images = SignedPermutation::identity(n).one_line();
  auto blocks = standard_blocks(lambda);
  const std::size_t npos = lambda.positive.size();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& block = blocks[b];
    if (b < npos) {
      write_cycle(images, block, 1);
    } else if (block.size() % 2 == 1) {
      write_cycle(images, block, 1);
      for (int j : block) images[j - 1] = -images[j - 1];  // c * w0 on the block
    } else {
      write_cycle(images, block, -1);
    }
  }
  return SignedPermutation::from_one_line(std::span<const int>(images));
}

std::vector<CentralizerGenerator> centralizer_generators(const SignedPartition& lambda) {
  const int n = lambda.size();
  auto blocks = standard_blocks(lambda);
  const std::size_t npos = lambda.positive.size();
  std::vector<CentralizerGenerator> gens;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& block = blocks[b];
    const int k = static_cast<int>(block.size());
    auto images = SignedPermutation::identity(n).one_line();
    if (b < npos) {
      write_cycle(images, block, 1);
      gens.push_back({SignedPermutation::from_one_line(std::span<const int>(images)), CentralizerGeneratorKind::kCycle,
                      static_cast<int>(b), k});
      gens.push_back({longest_element_on(n, block), CentralizerGeneratorKind::kBlockLongest, static_cast<int>(b), k});
    } else {
      if (k % 2 == 1) {
        write_cycle(images, block, 1);
        for (int j : block) images[j - 1] = -images[j - 1];
      } else {
        write_cycle(images, block, -1);
      }
      gens.push_back({SignedPermutation::from_one_line(std::span<const int>(images)),
                      CentralizerGeneratorKind::kNegativeCycle, static_cast<int>(b), k});
    }
  }
  for (std::size_t b = 0; b + 1 < blocks.size(); ++b) {
    if (b + 1 == npos) continue;  // different signs
    if (blocks[b].size() != blocks[b + 1].size()) continue;
    auto images = SignedPermutation::identity(n).one_line();
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      images[blocks[b][i] - 1] = blocks[b + 1][i];
      images[blocks[b + 1][i] - 1] = blocks[b][i];
    }
    gens.push_back({SignedPermutation::from_one_line(std::span<const int>(images)), CentralizerGeneratorKind::kBlockSwap,
                    static_cast<int>(b), static_cast<int>(blocks[b].size())});
  }
  return gens;
}

}  // namespace hyperoct
