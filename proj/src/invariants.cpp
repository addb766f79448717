#include "scrolls/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <utility>

#include "scrolls/schubert.hpp"

namespace scrolls {

namespace {

// Degree/genus of the fundamental scroll, extended down to n = 2 (a pencil of
// lines through a point of the plane) so the recursion can bottom out there.
std::pair<Int, Int> fundamental_pair(int n) {
  if (n < 2) throw ConsistencyFault("fundamental scroll reached below P^2");
  Int d = catalan(n - 1);
  Int g = n < 4 ? Int(0) : Int(n - 4) * d / 2 + 1;
  return {d, g};
}

using MemoKey = std::pair<int, std::vector<int>>;

std::vector<int> stripped(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// Memoized (degree, genus) for normalized keys.
std::pair<Int, Int> recurse(int n, std::vector<int> i);

std::pair<Int, Int> recurse_cached(int n, std::vector<int> i) {
  static std::map<MemoKey, std::pair<Int, Int>> memo;
  static std::mutex lock;
  MemoKey key{n, std::move(i)};
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  auto value = recurse(key.first, key.second);
  std::lock_guard<std::mutex> guard(lock);
  return memo.emplace(std::move(key), std::move(value)).first->second;
}

long free_count_of(int n, const std::vector<int>& i) {
  long free_spaces = 2L * n - 3;
  for (std::size_t j = 1; j <= i.size(); ++j)
    free_spaces -= static_cast<long>(j + 1) * i[j - 1];
  return free_spaces;
}

// Degree of the common-generator key.  Its free count sits one below the
// originating key's, so it can land at -1: the conditions then have total
// codimension 2n-2 and the degree degenerates to a plain point count.
Int kappa_degree(int n, const std::vector<int>& i) {
  long free_spaces = free_count_of(n, i);
  if (free_spaces >= 0) return recurse_cached(n, i).first;
  if (free_spaces == -1) {
    std::vector<int> conds;
    for (std::size_t j = 1; j <= i.size(); ++j) {
      int dim = n - static_cast<int>(j) - 2;
      if (dim < 0) throw ConsistencyFault("common-generator count left the lattice");
      for (int c = 0; c < i[j - 1]; ++c) conds.push_back(dim);
    }
    return intersection_number(conds, n);
  }
  throw ConsistencyFault("common-generator count left the lattice");
}

std::pair<Int, Int> recurse(int n, std::vector<int> i) {
  i = stripped(std::move(i));
  if (i.empty()) return fundamental_pair(n);
  int s = static_cast<int>(i.size());
  if (n - s - 2 < 0) throw ConsistencyFault("standard-family recursion left the lattice");
  if (free_count_of(n, i) < 0)
    throw ConsistencyFault("standard-family recursion left the lattice");

  // Minuend (ambient n) and subtrahend (ambient n-1) of the degeneration step.
  std::vector<int> minuend = i;
  minuend[s - 1] -= 1;
  if (s >= 2) minuend[s - 2] += 1;
  std::vector<int> subtrahend = i;
  subtrahend[s - 1] -= 1;
  if (s >= 3) subtrahend[s - 3] += 1;

  auto [d_min, g_min] = recurse_cached(n, minuend);
  auto [d_sub, g_sub] = recurse_cached(n - 1, subtrahend);
  Int kappa = kappa_degree(n - 1, stripped(minuend));
  Int d = d_min - d_sub;
  Int g = g_min - g_sub - kappa + 1;
  return {d, g};
}

}  // namespace

ScrollInvariants fundamental_invariants(int n) {
  if (n < 3) throw DomainError("fundamental_invariants requires n >= 3");
  auto [d, g] = fundamental_pair(n);
  Int directrix = n == 3 ? Int(1) : Int(3) * factorial(2 * n - 4) / (factorial(n - 3) * factorial(n));
  return ScrollInvariants{d, g, directrix};
}

long StandardFamilyKey::free_count() const {
  long free_spaces = 2L * n - 3;
  for (std::size_t j = 1; j <= i.size(); ++j)
    free_spaces -= static_cast<long>(j + 1) * i[j - 1];
  return free_spaces;
}

StandardFamilyKey StandardFamilyKey::normalized() const {
  StandardFamilyKey out{n, stripped(i)};
  return out;
}

bool StandardFamilyKey::ok() const {
  if (n < 3) return false;
  for (int v : i)
    if (v < 0) return false;
  if (free_count() < 0) return false;
  int s = static_cast<int>(stripped(i).size());
  return n - s - 2 >= 0;
}

IncidenceBase materialize(const StandardFamilyKey& key) {
  if (!key.ok()) throw DomainError("malformed standard-family key");
  std::vector<int> dims;
  auto i = stripped(key.i);
  for (std::size_t j = 1; j <= i.size(); ++j)
    for (int c = 0; c < i[j - 1]; ++c) dims.push_back(key.n - static_cast<int>(j) - 2);
  for (long c = 0; c < key.free_count(); ++c) dims.push_back(key.n - 2);
  return IncidenceBase(key.n, std::move(dims));
}

std::optional<StandardFamilyKey> standard_key_for(const IncidenceBase& base) {
  IncidenceBase core = base.without_hyperplanes();
  if (!core.is_valid()) return std::nullopt;
  int n = core.ambient();
  if (core.dims().empty()) return std::nullopt;
  int min_dim = core.dims().front();
  if (min_dim < 1) return std::nullopt;
  int s = n - 2 - min_dim;
  std::vector<int> i(s, 0);
  for (int d : core.dims()) {
    int j = n - 2 - d;
    if (j > 0) ++i[j - 1];
  }
  StandardFamilyKey key{n, std::move(i)};
  // The P^{n-2} count of an IS-valid base always matches the forced count.
  long observed = static_cast<long>(std::count(core.dims().begin(), core.dims().end(), n - 2));
  if (observed != key.free_count())
    throw ConsistencyFault("IS-valid base disagrees with its standard-family key");
  return key;
}

ScrollInvariants standard_family_unchecked(const StandardFamilyKey& key) {
  if (!key.ok()) throw DomainError("malformed standard-family key");
  auto norm = key.normalized();
  if (!norm.i.empty() && key.n - static_cast<int>(norm.i.size()) - 2 < 1)
    throw DomainError("standard family requires the smallest base space to be at least a line");
  auto [d, g] = recurse_cached(norm.n, norm.i);
  return ScrollInvariants{d, g, std::nullopt};
}

ScrollInvariants standard_family_invariants(const StandardFamilyKey& key) {
  ScrollInvariants inv = standard_family_unchecked(key);
  Int pieri = curve_class_degree(materialize(key));
  if (pieri != inv.degree)
    throw ConsistencyFault("standard-family degree recursion disagrees with the Pieri fold for n=" +
                           std::to_string(key.n) + ": " + inv.degree.str() + " vs " + pieri.str());
  return inv;
}

std::optional<Int> genus_for_base(const IncidenceBase& base) {
  auto key = standard_key_for(base);
  if (!key) return std::nullopt;
  auto norm = key->normalized();
  if (!norm.i.empty() && norm.n - static_cast<int>(norm.i.size()) - 2 < 1) return std::nullopt;
  return standard_family_unchecked(*key).genus;
}

std::vector<StandardFamilyKey> standard_keys(int n) {
  if (n < 3) throw DomainError("standard_keys requires n >= 3");
  std::vector<StandardFamilyKey> out;
  out.push_back(StandardFamilyKey{n, {}});
  int max_s = n - 3;
  std::vector<int> i;
  std::function<void(int, long)> rec = [&](int j, long budget) {
    if (j > max_s) return;
    // i_j ranges over 0..budget/(j+1); a key is emitted whenever the last
    // entry is positive.
    for (int v = 0; static_cast<long>(j + 1) * v <= budget; ++v) {
      i.push_back(v);
      if (v > 0) out.push_back(StandardFamilyKey{n, i});
      rec(j + 1, budget - static_cast<long>(j + 1) * v);
      i.pop_back();
    }
  };
  rec(1, 2L * n - 3);
  return out;
}

}  // namespace scrolls
