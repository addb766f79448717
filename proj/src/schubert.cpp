#include "scrolls/schubert.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace scrolls {

int SchubertIndex::dimension() const {
  int l = level();
  int sum = std::accumulate(dims.begin(), dims.end(), 0);
  return sum - l * (l + 1) / 2;
}

int SchubertIndex::codimension() const {
  int l = level();
  return (l + 1) * (n - l) - dimension();
}

bool SchubertIndex::ok() const {
  if (dims.empty() || n < 1) return false;
  int prev = -1;
  for (int a : dims) {
    if (a <= prev || a > n) return false;
    prev = a;
  }
  return dimension() >= 0 && codimension() >= 0;
}

std::string SchubertIndex::to_string() const {
  std::ostringstream os;
  os << "w(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) os << ",";
    os << dims[i];
  }
  os << ")";
  return os.str();
}

ClassSum::ClassSum(int n, int l) : n_(n), l_(l) {
  if (l < 0 || l >= n) throw DomainError("ClassSum: need 0 <= l < n");
}

ClassSum ClassSum::fundamental(int n, int l) {
  ClassSum c(n, l);
  std::vector<int> top(l + 1);
  for (int i = 0; i <= l; ++i) top[i] = n - l + i;
  c.terms_[top] = 1;
  return c;
}

int ClassSum::codimension() const {
  if (terms_.empty()) return -1;
  SchubertIndex idx{n_, terms_.begin()->first};
  return idx.codimension();
}

Int ClassSum::coefficient(const std::vector<int>& dims) const {
  auto it = terms_.find(dims);
  return it == terms_.end() ? Int(0) : it->second;
}

void ClassSum::add_term(const std::vector<int>& dims, const Int& coeff) {
  if (coeff == 0) return;
  SchubertIndex idx{n_, dims};
  if (static_cast<int>(dims.size()) != l_ + 1 || !idx.ok())
    throw DomainError("ClassSum: malformed index " + idx.to_string());
  auto it = terms_.find(dims);
  if (it == terms_.end()) {
    terms_.emplace(dims, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string ClassSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [dims, coeff] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (coeff != 1) os << coeff.str() << "*";
    os << SchubertIndex{n_, dims}.to_string();
  }
  return os.str();
}

ClassSum special_class(int h, int n) {
  if (h < 0 || h > n - 1)
    throw DomainError("special_class: need 0 <= h <= n-1, got h=" + std::to_string(h) +
                      " in P^" + std::to_string(n));
  ClassSum c(n, 1);
  c.add_term({h, n}, 1);
  return c;
}

namespace {

// Enumerates the Pieri sequences b for one source index a:
// 0 <= b_0 <= a_0 < b_1 <= a_1 < ... < b_l <= a_l, sum(b) = target.
void for_each_pieri_sequence(const std::vector<int>& a, int target,
                             const std::function<void(const std::vector<int>&)>& emit) {
  int l = static_cast<int>(a.size()) - 1;
  std::vector<int> b(a.size());
  // suffix_min[i] / suffix_max[i]: attainable sum of b_i..b_l.
  std::vector<int> suffix_min(a.size() + 1, 0), suffix_max(a.size() + 1, 0);
  for (int i = l; i >= 0; --i) {
    int lo = i == 0 ? 0 : a[i - 1] + 1;
    suffix_min[i] = suffix_min[i + 1] + lo;
    suffix_max[i] = suffix_max[i + 1] + a[i];
  }
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i > l) {
      if (remaining == 0) emit(b);
      return;
    }
    if (remaining < suffix_min[i] || remaining > suffix_max[i]) return;
    int lo = i == 0 ? 0 : a[i - 1] + 1;
    for (int v = lo; v <= a[i]; ++v) {
      b[i] = v;
      rec(i + 1, remaining - v);
    }
  };
  rec(0, target);
}

}  // namespace

ClassSum pieri_multiply(const ClassSum& c, int h) {
  int n = c.ambient();
  int l = c.level();
  if (h < 0 || h > n - l)
    throw DomainError("pieri_multiply: need 0 <= h <= n-l");
  ClassSum out(n, l);
  for (const auto& term : c.terms()) {
    const std::vector<int>& a = term.first;
    const Int& coeff = term.second;
    int target = std::accumulate(a.begin(), a.end(), 0) - (n - l - h);
    for_each_pieri_sequence(a, target,
                            [&](const std::vector<int>& b) { out.add_term(b, coeff); });
  }
  if (!c.is_zero() && !out.is_zero() &&
      out.codimension() != c.codimension() + (n - l - h))
    throw ConsistencyFault("pieri_multiply produced a non-homogeneous shift");
  return out;
}

ClassSum product_of_specials(std::span<const int> hs, int n) {
  ClassSum acc = ClassSum::fundamental(n, 1);
  for (int h : hs) {
    if (h < 0 || h > n - 1)
      throw DomainError("product_of_specials: condition dimension " +
                        std::to_string(h) + " out of range in P^" + std::to_string(n));
    acc = pieri_multiply(acc, h);
    if (acc.is_zero()) break;
  }
  return acc;
}

Int intersection_number(std::span<const int> hs, int n) {
  long total = 0;
  for (int h : hs) {
    if (h < 0 || h > n - 1)
      throw DomainError("intersection_number: condition dimension out of range");
    total += n - 1 - h;
  }
  if (total != 2L * n - 2) throw DimensionError(2L * n - 2, total);
  ClassSum prod = product_of_specials(hs, n);
  return prod.coefficient({0, 1});
}

Int curve_class_degree(const IncidenceBase& base) {
  if (!base.is_valid()) {
    auto rep = validate_base(base);
    throw InvalidBaseError("base " + base.to_string() + " fails the incidence count (" +
                           std::to_string(rep.lhs) + " != " + std::to_string(rep.target) + ")");
  }
  ClassSum prod = product_of_specials(base.dims(), base.ambient());
  return prod.coefficient({0, 2});
}

}  // namespace scrolls
