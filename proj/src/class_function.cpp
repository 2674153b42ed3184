#include "hyperoct/class_function.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hyperoct {
namespace {

const std::vector<SignedPartition>& labels(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<SignedPartition>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, signed_partitions(n)).first;
  return it->second;
}

std::size_t label_index(int n, const SignedPartition& label) {
  const auto& ls = labels(n);
  for (std::size_t c = 0; c < ls.size(); ++c)
    if (ls[c] == label) return c;
  throw std::invalid_argument("not a class label for rank " + std::to_string(n) + ": " + label.to_string());
}

}  // namespace

ClassFunction::ClassFunction(int n) : n_(n), values_(labels(n).size()) {}

ClassFunction::ClassFunction(int n, std::vector<Rational> values) : n_(n), values_(std::move(values)) {
  if (values_.size() != labels(n).size()) throw std::invalid_argument("class function: wrong number of values");
}

const Rational& ClassFunction::at(const SignedPartition& label) const { return values_[label_index(n_, label)]; }

Rational ClassFunction::evaluate(const SignedPermutation& sigma) const {
  if (sigma.rank() != n_) throw std::invalid_argument("class function: rank mismatch");
  return at(cycle_type(sigma));
}

void ClassFunction::check_compatible(const ClassFunction& other) const {
  if (n_ != other.n_) throw std::invalid_argument("class functions of different ranks");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  check_compatible(other);
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] += other.values_[c];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  check_compatible(other);
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] -= other.values_[c];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  a.check_compatible(b);
  ClassFunction r(a);
  for (std::size_t c = 0; c < r.values_.size(); ++c) r.values_[c] *= b.values_[c];
  return r;
}

std::string ClassFunction::to_string() const {
  std::string out = "[";
  for (std::size_t c = 0; c < values_.size(); ++c) {
    if (c) out += ", ";
    out += pretty_rational(values_[c]);
  }
  return out + "]";
}

nlohmann::json ClassFunction::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  const auto& ls = labels(n_);
  for (std::size_t c = 0; c < values_.size(); ++c) j[ls[c].to_string()] = format_rational(values_[c]);
  return j;
}

ClassFunction ClassFunction::from_json(int n, const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("class function JSON must be an object");
  const auto& ls = labels(n);
  if (j.size() != ls.size()) throw std::invalid_argument("class function JSON: wrong number of classes");
  ClassFunction f(n);
  for (std::size_t c = 0; c < ls.size(); ++c) {
    auto it = j.find(ls[c].to_string());
    if (it == j.end() || !it->is_string()) throw std::invalid_argument("class function JSON: missing class " + ls[c].to_string());
    f.values_[c] = parse_rational(it->get<std::string>());
  }
  return f;
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("inner_product: rank mismatch");
  const auto& ls = labels(a.rank());
  Rational s = 0;
  for (std::size_t c = 0; c < ls.size(); ++c)
    s += a[c] * b[c] / Rational(static_cast<unsigned long>(centralizer_order(ls[c])));
  return s;
}

ClassFunction trivial_character(int n) {
  ClassFunction f(n);
  for (std::size_t c = 0; c < f.class_count(); ++c) f[c] = 1;
  return f;
}

ClassFunction regular_character(int n) {
  ClassFunction f(n);
  f[0] = Rational(static_cast<unsigned long>(hyperoctahedral_order(n)));
  return f;
}

}  // namespace hyperoct
