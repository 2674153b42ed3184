#include "hyperoct/bn_group.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace hyperoct {

const BnGroup& BnGroup::get(int n) {
  if (n < 0 || n > kMaxEnumeratedRank) throw std::out_of_range("BnGroup: rank outside enumerable range");
  static std::array<std::unique_ptr<BnGroup>, kMaxEnumeratedRank + 1> groups;
  static std::array<std::once_flag, kMaxEnumeratedRank + 1> once;
  std::call_once(once[n], [n] { groups[n].reset(new BnGroup(n)); });
  return *groups[n];
}

BnGroup::BnGroup(int n) : n_(n), elements_(all_signed_permutations(n)) {
  for (std::uint32_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].key(), i);
  identity_ = index_of(SignedPermutation::identity(n));
  inverses_.resize(elements_.size());
  for (std::uint32_t i = 0; i < elements_.size(); ++i) inverses_[i] = index_of(elements_[i].inverse());
  classes_ = conjugacy_classes(n);
  std::map<SignedPartition, std::uint32_t> label_index;
  for (std::uint32_t c = 0; c < classes_.size(); ++c) label_index.emplace(classes_[c].label, c);
  class_of_.resize(elements_.size());
  for (std::uint32_t i = 0; i < elements_.size(); ++i) class_of_[i] = label_index.at(cycle_type(elements_[i]));
}

std::uint32_t BnGroup::index_of(const SignedPermutation& sigma) const {
  if (sigma.rank() != n_) throw std::invalid_argument("BnGroup::index_of: rank mismatch");
  return index_.at(sigma.key());
}

std::size_t BnGroup::class_index(const SignedPartition& label) const {
  for (std::size_t c = 0; c < classes_.size(); ++c)
    if (classes_[c].label == label) return c;
  throw std::invalid_argument("not a class label of this group: " + label.to_string());
}

void BnGroup::build_table() const {
  const std::uint32_t m = order();
  table_.resize(static_cast<std::size_t>(m) * m);
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = 0; b < m; ++b)
      table_[static_cast<std::size_t>(a) * m + b] =
          static_cast<std::uint16_t>(index_.at(compose(elements_[a], elements_[b]).key()));
}

std::uint32_t BnGroup::multiply(std::uint32_t a, std::uint32_t b) const {
  if (n_ > kMaxTabulatedRank) return index_.at(compose(elements_[a], elements_[b]).key());
  std::call_once(table_once_, [this] { build_table(); });
  return table_[static_cast<std::size_t>(a) * order() + b];
}

}  // namespace hyperoct
