#include "scrolls/ints.hpp"

#include <mutex>
#include <vector>

#include "scrolls/errors.hpp"

namespace scrolls {

Int factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative argument");
  Int acc = 1;
  for (long i = 2; i <= n; ++i) acc *= i;
  return acc;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Int acc = 1;
  for (long i = 1; i <= k; ++i) {
    acc *= (n - k + i);
    acc /= i;
  }
  return acc;
}

Int catalan(long k) {
  if (k < 0) throw DomainError("catalan of negative argument");
  return binomial(2 * k, k) / (k + 1);
}

Int partition_count(long k) {
  if (k < 0) return 0;
  static std::vector<Int> table{1};
  static std::mutex lock;
  std::lock_guard<std::mutex> guard(lock);
  // p(k) = sum_{m>=1} (-1)^{m+1} [p(k - m(3m-1)/2) + p(k - m(3m+1)/2)]
  for (long v = static_cast<long>(table.size()); v <= k; ++v) {
    Int acc = 0;
    for (long m = 1;; ++m) {
      long g1 = m * (3 * m - 1) / 2;
      long g2 = m * (3 * m + 1) / 2;
      if (g1 > v && g2 > v) break;
      Int part = 0;
      if (g1 <= v) part += table[v - g1];
      if (g2 <= v) part += table[v - g2];
      if (m % 2 == 1)
        acc += part;
      else
        acc -= part;
    }
    table.push_back(acc);
  }
  return table[k];
}

std::string to_decimal(const Int& v) { return v.str(); }

}  // namespace scrolls
