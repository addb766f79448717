#include "scrolls/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "scrolls/schubert.hpp"

namespace scrolls {

namespace {

// Nested summation; a range whose lower limit exceeds its upper limit
// contributes 0.
template <class Bounds, class Term>
Int nested_sum(int levels, Bounds&& bounds, Term&& term) {
  std::vector<long> k(levels, 0);
  std::function<Int(int)> rec = [&](int depth) -> Int {
    if (depth == levels) return term(k);
    auto [lo, hi] = bounds(depth, k);
    Int acc = 0;
    for (long v = lo; v <= hi; ++v) {
      k[depth] = v;
      acc += rec(depth + 1);
    }
    return acc;
  };
  return rec(0);
}

// ---------------------------------------------------------------------------
// Values for the linearly-trivial family.  These are formal evaluations of
// the printed sums; they are total so the other families' sums can call them
// freely.  The r = 1 member is the quadric (degree 2, genus 0) for any h;
// the printed degree sum breaks down only at the (1,0) pair the recursions
// feed it, where the quadric value is the one that makes them close.
// ---------------------------------------------------------------------------

Int delta_e0_s1(long r, long h) {
  Int acc = 0;
  for (long k = 0; k <= h - 1; ++k) acc += binomial(h - 1, k) * Int(r - 2 * k + 1);
  return acc;
}

Int d_e0_value(long r, long h) {
  if (r == 1) return 2;
  Int acc = 0;
  for (long k = 0; k <= h - 1; ++k) acc += binomial(h - 1, k) * Int(r - 2 * k);
  return 2 * acc;
}

Int g_e0_value(long r, long h) {
  if (r == 1) return 0;
  Int acc = 0;
  for (long k1 = 2; k1 <= h; ++k1)
    for (long k2 = 0; k2 <= h - k1; ++k2)
      acc += binomial(h - k1, k2) * (delta_e0_s1(r - 2 * k2 - 2, k1 - 1) - 1);
  return acc;
}

// Multi-index closed form by the degeneration unroll, with the two-index
// bottom h_1 (r - h_1 + 2), whose derivation needs h_1 >= 1.  Tuples whose
// unroll escapes get no printed value.
std::optional<Int> delta_e0_closed(long r, std::span<const int> h) {
  int s = static_cast<int>(h.size());
  for (int t = 0; t < s; ++t)
    if (h[t] < 1) return std::nullopt;
  if (s == 1) return delta_e0_s1(r, h[0]);
  if (s == 2 && h[1] == 1) return Int(h[0]) * Int(r - h[0] + 2);
  long hs = h[s - 1];
  Int acc = 0;
  if (hs == 1) {
    for (long k = 0; k <= h[s - 2] - 1; ++k) {
      std::vector<int> child;
      for (int t = 0; t + 2 < s; ++t) child.push_back(h[t] - 2 * static_cast<int>(k));
      child.push_back(1);
      auto part = delta_e0_closed(r - 2 * k, child);
      if (!part) return std::nullopt;
      acc += *part;
    }
    return acc;
  }
  for (long k = 0; k <= hs - 1; ++k) {
    std::vector<int> child;
    for (int t = 0; t + 1 < s; ++t) child.push_back(h[t] - static_cast<int>(hs) + 1);
    child.push_back(1);
    auto part = delta_e0_closed(r - 2 * k, child);
    if (!part) return std::nullopt;
    acc += binomial(hs - 1, k) * *part;
  }
  return acc;
}

// Degree by the same unroll with the bottom d(x, y, 1) = 2y(x - y + 1).
std::optional<Int> d_e0_closed(long r, std::span<const int> h) {
  int s = static_cast<int>(h.size());
  for (int t = 0; t < s; ++t)
    if (h[t] < 1) return std::nullopt;
  if (s == 0) return Int(2);  // r = 1, the quadric
  if (s == 1) return d_e0_value(r, h[0]);
  if (s == 2 && h[1] == 1) return Int(2) * Int(h[0]) * Int(r - h[0] + 1);
  long hs = h[s - 1];
  Int acc = 0;
  if (hs == 1) {
    for (long k = 0; k <= h[s - 2] - 1; ++k) {
      std::vector<int> child;
      for (int t = 0; t + 2 < s; ++t) child.push_back(h[t] - h[s - 2] + 1);
      child.push_back(1);
      auto part = d_e0_closed(r - 2 * k, child);
      if (!part) return std::nullopt;
      acc += *part;
    }
    return acc;
  }
  for (long k = 0; k <= hs - 1; ++k) {
    std::vector<int> child;
    for (int t = 0; t + 1 < s; ++t) child.push_back(h[t] - static_cast<int>(hs) + 1);
    child.push_back(1);
    auto part = d_e0_closed(r - 2 * k, child);
    if (!part) return std::nullopt;
    acc += binomial(hs - 1, k) * *part;
  }
  return acc;
}

// Genus by the same unroll.
std::optional<Int> g_e0_closed(long r, std::span<const int> h) {
  int s = static_cast<int>(h.size());
  for (int t = 0; t < s; ++t)
    if (h[t] < 1) return std::nullopt;
  if (s == 0) return Int(0);
  if (s == 1) return g_e0_value(r, h[0]);
  if (s == 2 && h[1] == 1) return Int(r - h[0]) * Int(h[0] - 1);
  long hs = h[s - 1];
  Int acc = 0;
  if (hs == 1) {
    for (long k = 0; k <= h[s - 2] - 1; ++k) {
      std::vector<int> child;
      for (int t = 0; t + 2 < s; ++t) child.push_back(h[t] - h[s - 2] + 1);
      child.push_back(1);
      auto part = g_e0_closed(r - 2 * k, child);
      if (!part) return std::nullopt;
      acc += *part;
      if (k <= h[s - 2] - 2) {
        auto aux = delta_e0_closed(r - 2 * (k + 1), child);
        if (!aux) return std::nullopt;
        acc += *aux - 1;
      }
    }
    return acc;
  }
  for (long k = 0; k <= hs - 1; ++k) {
    std::vector<int> child;
    for (int t = 0; t + 1 < s; ++t) child.push_back(h[t] - static_cast<int>(hs) + 1);
    child.push_back(1);
    auto part = g_e0_closed(r - 2 * k, child);
    if (!part) return std::nullopt;
    acc += binomial(hs - 1, k) * *part;
  }
  for (long k1 = 2; k1 <= hs; ++k1)
    for (long k2 = 0; k2 <= hs - k1; ++k2) {
      std::vector<int> args;
      for (int t = 0; t + 1 < s; ++t)
        args.push_back(h[t] - static_cast<int>(hs) + static_cast<int>(k1) - 1);
      args.push_back(static_cast<int>(k1) - 1);
      auto delta = delta_e0_closed(r - 2 * k2 - 2, args);
      if (!delta) return std::nullopt;
      acc += binomial(hs - k1, k2) * (*delta - 1);
    }
  return acc;
}

// ---------------------------------------------------------------------------
// Values for the degree-zero nontrivial family.
// ---------------------------------------------------------------------------

// The multi-index closed forms of this family unroll, one index at a time,
// down to two-index leaves whose printed value x-y+2 is only derived for
// y >= 1.  Tuples whose unroll escapes that range (possible whenever
// h_2 > h_1; genuine partitions do this) have no printed value: the sigma
// route is then the only one, and these evaluators return empty.
std::optional<Int> delta_enot0_closed(long r, std::span<const int> h) {
  int s = static_cast<int>(h.size());
  for (int t = 0; t < s; ++t)
    if (h[t] < 1) return std::nullopt;
  if (s == 1) {
    long h1 = h[0];
    if (h1 == 1) return d_e0_value(r, r - 1);
    return nested_sum(
        static_cast<int>(h1) - 1,
        [&](int depth, const std::vector<long>& k) -> std::pair<long, long> {
          long lo = h1 - 1 - depth;
          long hi = depth == 0 ? r : k[depth - 1];
          return {lo, hi};
        },
        [&](const std::vector<long>& k) {
          long last = k[h1 - 2];
          return d_e0_value(last, last - 1);
        });
  }
  if (s == 2) {
    Int acc = 0;
    for (long k = 0; k <= h[1] - 1; ++k) {
      long y = h[0] - h[1] + 1 + k;
      if (y < 1) return std::nullopt;
      acc += binomial(h[1] - 1, k) * Int(r - k - y + 2);
    }
    return acc;
  }
  long hs = h[s - 1];
  Int acc = 0;
  if (hs == 1) {
    for (long k = 0; k <= h[s - 2] - 1; ++k) {
      std::vector<int> child;
      child.push_back(h[0] - static_cast<int>(k));
      for (int t = 1; t + 2 < s; ++t) child.push_back(h[t] - 2 * static_cast<int>(k));
      child.push_back(1);
      auto part = delta_enot0_closed(r - k, child);
      if (!part) return std::nullopt;
      acc += *part;
    }
    return acc;
  }
  for (long k = 0; k <= hs - 1; ++k) {
    std::vector<int> child;
    child.push_back(h[0] - static_cast<int>(hs) + 1 + static_cast<int>(k));
    for (int t = 1; t + 1 < s; ++t) child.push_back(h[t] - static_cast<int>(hs) + 1);
    child.push_back(1);
    auto part = delta_enot0_closed(r - k, child);
    if (!part) return std::nullopt;
    acc += binomial(hs - 1, k) * *part;
  }
  return acc;
}

Int d_enot0_s1(long r, long h) {
  return nested_sum(
      static_cast<int>(h),
      [&](int depth, const std::vector<long>& k) -> std::pair<long, long> {
        long lo = h - depth;
        long hi = depth == 0 ? r : k[depth - 1];
        return {lo, hi};
      },
      [&](const std::vector<long>& k) {
        long last = k[h - 1];
        return d_e0_value(last, last - 1);
      });
}

Int g_enot0_s1(long r, long h) {
  Int first = nested_sum(
      static_cast<int>(h),
      [&](int depth, const std::vector<long>& k) -> std::pair<long, long> {
        long lo = h - depth;
        long hi = depth == 0 ? r : k[depth - 1];
        return {lo, hi};
      },
      [&](const std::vector<long>& k) {
        long last = k[h - 1];
        return g_e0_value(last, last - 1);
      });

  Int second = 0;
  for (long alpha = 2; alpha <= h; ++alpha) {
    second += nested_sum(
        static_cast<int>(alpha),
        [&](int depth, const std::vector<long>& k) -> std::pair<long, long> {
          long lo = h - depth;
          long hi = depth == 0 ? r : k[depth - 1];
          if (depth == alpha - 1) hi = k[depth - 1] - 1;
          return {lo, hi};
        },
        [&](const std::vector<long>& k) {
          std::vector<int> arg{static_cast<int>(h - alpha + 1)};
          return *delta_enot0_closed(k[alpha - 1], arg) - 1;
        });
  }

  Int third = 0;
  for (long k = h; k <= r - 1; ++k) {
    std::vector<int> arg{static_cast<int>(h)};
    third += *delta_enot0_closed(k, arg) - 1;
  }
  return first + second + third;
}

// delta(x; y_1, ..., y_t, 1), the auxiliary count of the genus formulas,
// taken straight from its defining cycle list in P^{2x+1}.  (The printed
// display for it has the usual domain edge; the sigma route is exact.)
std::optional<Int> delta_small(long x, std::span<const int> ys) {
  int n = static_cast<int>(2 * x + 1);
  std::vector<int> dims{static_cast<int>(x), static_cast<int>(x),
                        static_cast<int>(x + ys[0])};
  if (ys.size() == 1) {
    dims.push_back(static_cast<int>(x - ys[0]));
  } else {
    dims.push_back(static_cast<int>(x - ys[0] + ys[1] - 1));
    for (std::size_t i = 2; i < ys.size(); ++i)
      dims.push_back(static_cast<int>(2 * x - ys[i - 1] + ys[i]));
    dims.push_back(static_cast<int>(2 * x - ys.back() + 1));
  }
  long total = 0;
  for (int d : dims) {
    if (d < 0 || d > n - 1) return std::nullopt;
    total += n - 1 - d;
  }
  if (total != 2L * n - 2) return std::nullopt;
  return intersection_number(dims, n);
}

// Degree of the s >= 2 members: the degeneration recursion with the
// two-index bottom d(x, y, 1) = 2(x - y + 1), derived for y >= 1.
std::optional<Int> d_enot0_closed(long r, std::span<const int> h) {
  int s = static_cast<int>(h.size());
  for (int t = 0; t < s; ++t)
    if (h[t] < 1) return std::nullopt;
  if (s == 1) return d_enot0_s1(r, h[0]);
  if (s == 2 && h[1] == 1) return Int(2 * (r - h[0] + 1));
  long hs = h[s - 1];
  Int acc = 0;
  if (hs == 1) {
    // Join the second space into the span of the last: every index shifts
    // against h_{s-1}.
    for (long k = 0; k <= h[s - 2] - 1; ++k) {
      std::vector<int> child;
      child.push_back(h[0] - h[s - 2] + 1 + static_cast<int>(k));
      for (int t = 1; t + 2 < s; ++t) child.push_back(h[t] - h[s - 2] + 1);
      child.push_back(1);
      auto part = d_enot0_closed(r - k, child);
      if (!part) return std::nullopt;
      acc += *part;
    }
    return acc;
  }
  for (long k = 0; k <= hs - 1; ++k) {
    std::vector<int> child;
    child.push_back(h[0] - static_cast<int>(hs) + 1 + static_cast<int>(k));
    for (int t = 1; t + 1 < s; ++t) child.push_back(h[t] - static_cast<int>(hs) + 1);
    child.push_back(1);
    auto part = d_enot0_closed(r - k, child);
    if (!part) return std::nullopt;
    acc += binomial(hs - 1, k) * *part;
  }
  return acc;
}

// Genus by the same unroll; the auxiliary counts enter through delta_small
// (total) and the Delta closed forms (domain-tracked).
std::optional<Int> g_enot0_closed(long r, std::span<const int> h) {
  int s = static_cast<int>(h.size());
  for (int t = 0; t < s; ++t)
    if (h[t] < 1) return std::nullopt;
  if (s == 1) return g_enot0_s1(r, h[0]);
  if (s == 2 && h[1] == 1) return Int(0);
  long hs = h[s - 1];
  Int acc = 0;
  if (hs == 1) {
    for (long k = 0; k <= h[s - 2] - 1; ++k) {
      std::vector<int> child;
      child.push_back(h[0] - h[s - 2] + 1 + static_cast<int>(k));
      for (int t = 1; t + 2 < s; ++t) child.push_back(h[t] - h[s - 2] + 1);
      child.push_back(1);
      auto part = g_enot0_closed(r - k, child);
      if (!part) return std::nullopt;
      acc += *part;
      if (k <= h[s - 2] - 2) {
        auto aux = delta_small(r - k - 1, std::span<const int>(child).first(child.size() - 1));
        if (!aux) return std::nullopt;
        acc += *aux - 1;
      }
    }
    return acc;
  }
  for (long k = 0; k <= hs - 1; ++k) {
    std::vector<int> child;
    child.push_back(h[0] - static_cast<int>(hs) + 1 + static_cast<int>(k));
    for (int t = 1; t + 1 < s; ++t) child.push_back(h[t] - static_cast<int>(hs) + 1);
    child.push_back(1);
    auto part = g_enot0_closed(r - k, child);
    if (!part) return std::nullopt;
    acc += binomial(hs - 1, k) * *part;
  }
  for (long k1 = 0; k1 <= hs - 2; ++k1)
    for (long k2 = 0; k2 <= k1; ++k2) {
      std::vector<int> args;
      args.push_back(h[0] - static_cast<int>(k1) + static_cast<int>(k2));
      for (int t = 1; t < s; ++t) args.push_back(h[t] - 1 - static_cast<int>(k1));
      auto delta = delta_enot0_closed(r - k2 - 1, args);
      if (!delta) return std::nullopt;
      acc += binomial(k1, k2) * (*delta - 1);
    }
  return acc;
}

// ---------------------------------------------------------------------------
// Values for the e >= 1 family (parameters e, j fixed per call chain).
// The h = 0 tower d0/g0 descends in j; offset e+j = 1 lands on the
// degree-zero nontrivial family and e+j = 0 on the linearly-trivial one.
// ---------------------------------------------------------------------------

struct EJ {
  long e;
  long j;
};

// Degree/genus tower of the h = 0 members, descending in the offset j.  The
// printed bottom is the degree-zero nontrivial family at offset 1-e; one
// step below that (offset -e, a zero-degree twist against itself) the member
// is a linearly-trivial scroll, which closes the Delta recursion at offset
// j-1.  A member with r = e is a plane pencil.
Int d0_ege1(long r, EJ p) {
  if (r < p.e) throw ConsistencyFault("e>=1 degree tower reached r < e");
  if (r == p.e) return 1;
  if (p.e + p.j == 0) return d_e0_value(r - p.e, r - p.e - 1);
  if (p.e + p.j == 1) return 1 + d_enot0_s1(r - p.e, 1);
  return d0_ege1(r, {p.e, p.j - 1}) + d0_ege1(r - 1, p);
}

Int g0_ege1(long r, EJ p) {
  if (r < p.e) throw ConsistencyFault("e>=1 genus tower reached r < e");
  if (r == p.e) return 0;
  if (p.e + p.j == 0) return g_e0_value(r - p.e, r - p.e - 1);
  if (p.e + p.j == 1) return g_enot0_s1(r - p.e, 1);
  return g0_ege1(r, {p.e, p.j - 1}) + g0_ege1(r - 1, p) +
         d0_ege1(r - 1, {p.e, p.j - 1}) - 1;
}

Int delta_ege1_s1(long r, long h, EJ p) {
  if (h == 0) return d0_ege1(r, {p.e, p.j - 1});
  Int acc = 0;
  for (long k = 0; k <= r - p.e - h + 1; ++k) acc += delta_ege1_s1(r - k, h - 1, p);
  return acc;
}

Int d_ege1_s1(long r, long h, EJ p) {
  if (h == 0) return d0_ege1(r, p);
  Int acc = 0;
  for (long k = 0; k <= r - p.e - h; ++k) acc += d_ege1_s1(r - k, h - 1, p);
  return acc;
}

Int g_ege1_s1(long r, long h, EJ p) {
  if (h == 0) return g0_ege1(r, p);
  Int acc = 0;
  for (long k = 0; k <= r - p.e - h; ++k) acc += g_ege1_s1(r - k, h - 1, p);
  for (long k = 0; k <= r - p.e - h - 1; ++k) acc += delta_ege1_s1(r - k - 1, h, p) - 1;
  return acc;
}

// Degree of the two-parameter member B(r', y, 1): 2(r'-e)+1 when y = 0,
// 2(r'-e-y+1) when y > 0.  No printed value covers y < 0.
std::optional<Int> d21_value(long rp, long y, EJ p) {
  if (y == 0) return Int(2 * (rp - p.e) + 1);
  if (y > 0) return Int(2 * (rp - p.e - y + 1));
  return std::nullopt;
}

// Delta(r', y, 1) leaf: r'-e+1 when y = 0, r'-e-y+2 when y > 0.
std::optional<Int> delta2_ege1(long rp, long y, EJ p) {
  if (y == 0) return Int(rp - p.e + 1);
  if (y > 0) return Int(rp - p.e - y + 2);
  return std::nullopt;
}

std::optional<Int> delta_ege1_closed(long r, EJ p, std::span<const int> h) {
  int s = static_cast<int>(h.size());
  if (h[0] < 0) return std::nullopt;
  for (int t = 1; t < s; ++t)
    if (h[t] < 1) return std::nullopt;
  if (s == 1) return delta_ege1_s1(r, h[0], p);
  if (s == 2) {
    Int acc = 0;
    for (long k = 0; k <= h[1] - 1; ++k) {
      auto leaf = delta2_ege1(r - k, h[0] - h[1] + 1 + k, p);
      if (!leaf) return std::nullopt;
      acc += binomial(h[1] - 1, k) * *leaf;
    }
    return acc;
  }
  long hs = h[s - 1];
  Int acc = 0;
  if (hs == 1) {
    for (long k = 0; k <= h[s - 2] - 1; ++k) {
      std::vector<int> child;
      child.push_back(h[0] - static_cast<int>(k));
      for (int t = 1; t + 2 < s; ++t) child.push_back(h[t] - 2 * static_cast<int>(k));
      child.push_back(1);
      auto part = delta_ege1_closed(r - k, p, child);
      if (!part) return std::nullopt;
      acc += *part;
    }
    return acc;
  }
  for (long k = 0; k <= hs - 1; ++k) {
    std::vector<int> child;
    child.push_back(h[0] - static_cast<int>(hs) + 1 + static_cast<int>(k));
    for (int t = 1; t + 1 < s; ++t) child.push_back(h[t] - static_cast<int>(hs) + 1);
    child.push_back(1);
    auto part = delta_ege1_closed(r - k, p, child);
    if (!part) return std::nullopt;
    acc += binomial(hs - 1, k) * *part;
  }
  return acc;
}

std::optional<Int> d_ege1_closed(long r, EJ p, std::span<const int> h) {
  int s = static_cast<int>(h.size());
  if (h[0] < 0) return std::nullopt;
  for (int t = 1; t < s; ++t)
    if (h[t] < 1) return std::nullopt;
  if (s == 1) return d_ege1_s1(r, h[0], p);
  if (s == 2 && h[1] == 1) return d21_value(r, h[0], p);
  long hs = h[s - 1];
  Int acc = 0;
  if (hs == 1) {
    for (long k = 0; k <= h[s - 2] - 1; ++k) {
      std::vector<int> child;
      child.push_back(h[0] - h[s - 2] + 1 + static_cast<int>(k));
      for (int t = 1; t + 2 < s; ++t) child.push_back(h[t] - h[s - 2] + 1);
      child.push_back(1);
      auto part = d_ege1_closed(r - k, p, child);
      if (!part) return std::nullopt;
      acc += *part;
    }
    return acc;
  }
  for (long k = 0; k <= hs - 1; ++k) {
    std::vector<int> child;
    child.push_back(h[0] - static_cast<int>(hs) + 1 + static_cast<int>(k));
    for (int t = 1; t + 1 < s; ++t) child.push_back(h[t] - static_cast<int>(hs) + 1);
    child.push_back(1);
    auto part = d_ege1_closed(r - k, p, child);
    if (!part) return std::nullopt;
    acc += binomial(hs - 1, k) * *part;
  }
  return acc;
}

// Genus by the same unroll; in this family the auxiliary count is taken at
// x - e.
std::optional<Int> g_ege1_closed(long r, EJ p, std::span<const int> h) {
  int s = static_cast<int>(h.size());
  if (h[0] < 0) return std::nullopt;
  for (int t = 1; t < s; ++t)
    if (h[t] < 1) return std::nullopt;
  if (s == 1) return g_ege1_s1(r, h[0], p);
  if (s == 2 && h[1] == 1) return Int(0);
  long hs = h[s - 1];
  Int acc = 0;
  if (hs == 1) {
    for (long k = 0; k <= h[s - 2] - 1; ++k) {
      std::vector<int> child;
      child.push_back(h[0] - h[s - 2] + 1 + static_cast<int>(k));
      for (int t = 1; t + 2 < s; ++t) child.push_back(h[t] - h[s - 2] + 1);
      child.push_back(1);
      auto part = g_ege1_closed(r - k, p, child);
      if (!part) return std::nullopt;
      acc += *part;
      if (k <= h[s - 2] - 2) {
        auto aux = delta_small(r - k - 1 - p.e,
                               std::span<const int>(child).first(child.size() - 1));
        if (!aux) return std::nullopt;
        acc += *aux - 1;
      }
    }
    return acc;
  }
  for (long k = 0; k <= hs - 1; ++k) {
    std::vector<int> child;
    child.push_back(h[0] - static_cast<int>(hs) + 1 + static_cast<int>(k));
    for (int t = 1; t + 1 < s; ++t) child.push_back(h[t] - static_cast<int>(hs) + 1);
    child.push_back(1);
    auto part = g_ege1_closed(r - k, p, child);
    if (!part) return std::nullopt;
    acc += binomial(hs - 1, k) * *part;
  }
  for (long k1 = 0; k1 <= hs - 2; ++k1)
    for (long k2 = 0; k2 <= k1; ++k2) {
      std::vector<int> args;
      args.push_back(h[0] - static_cast<int>(k1) + static_cast<int>(k2));
      for (int t = 1; t < s; ++t) args.push_back(h[t] - 1 - static_cast<int>(k1));
      auto delta = delta_ege1_closed(r - k2 - 1, p, args);
      if (!delta) return std::nullopt;
      acc += binomial(k1, k2) * (*delta - 1);
    }
  return acc;
}

// ---------------------------------------------------------------------------
// Key validation, materialized bases and cycle lists.
// ---------------------------------------------------------------------------

bool strictly_decreasing_tail(std::span<const int> h, int from) {
  for (std::size_t i = from; i < h.size(); ++i) {
    if (h[i] < 1 || h[i] > h[i - 1] - 1) return false;
  }
  return true;
}

// Weak decrease of the associated parts past the first (callers check the
// leading part separately).
bool parts_weakly_decreasing(const std::vector<int>& parts) {
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] < 1 || parts[i] > parts[i - 1]) return false;
  }
  return true;
}

Check make_check(const std::string& name, const Int& formula, const Int& truth) {
  return Check{name, formula.str(), truth.str(), formula == truth};
}

Check skipped_check(const std::string& name, const Int& truth) {
  return Check{name, "(outside printed domain)", truth.str(), true};
}

FamilyResult assemble(IncidenceBase base, bool partition_shape) {
  Int degree = curve_class_degree(base);
  auto genus = genus_for_base(base);
  if (!genus)
    throw ConsistencyFault("family base " + base.to_string() +
                           " has no genus recursion; this cannot happen for family keys");
  FamilyResult out{ScrollInvariants{degree, *genus, std::nullopt}, std::move(base),
                   partition_shape, {}};
  return out;
}

}  // namespace

bool FamilyResult::consistent() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing");
    sum_ += parts_[i];
  }
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

std::vector<Partition> partitions_of(long k) {
  if (k < 0) throw DomainError("partitions_of requires k >= 0");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(long, long)> rec = [&](long remaining, long max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(static_cast<int>(p));
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(k, k);
  return out;
}

// --- linearly trivial ------------------------------------------------------

IncidenceBase base_from_partition_e0(int r, const Partition& lambda) {
  if (r < 1) throw DomainError("base_from_partition_e0 requires r >= 1");
  if (lambda.sum() != r - 1)
    throw DomainError("base_from_partition_e0: partition must sum to r-1");
  std::vector<int> dims{r, r, r};
  for (int part : lambda.parts()) dims.push_back(2 * r - part);
  return IncidenceBase(2 * r + 1, std::move(dims));
}

Partition partition_from_base_e0(int r, const IncidenceBase& base) {
  if (base.ambient() != 2 * r + 1)
    throw DomainError("partition_from_base_e0: base must live in P^{2r+1}");
  std::vector<int> parts;
  int directrix_spaces = 0;
  for (int d : base.dims()) {
    if (d == r) {
      ++directrix_spaces;
    } else if (d > r) {
      parts.push_back(2 * r - d);
    } else {
      throw DomainError("partition_from_base_e0: unexpected space below P^r");
    }
  }
  if (directrix_spaces != 3)
    throw DomainError("partition_from_base_e0: base must contain exactly three P^r");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  Partition lambda(std::move(parts));
  if (lambda.sum() != r - 1)
    throw DomainError("partition_from_base_e0: parts do not sum to r-1");
  return lambda;
}

std::vector<int> e0_params_from_partition(int r, const Partition& lambda) {
  if (lambda.sum() != r - 1) throw DomainError("partition must sum to r-1");
  if (lambda.empty()) return {};
  int total = static_cast<int>(lambda.size());
  int s = 0;
  for (int part : lambda.parts())
    if (part >= 2) ++s;
  s = std::max(s, 1);
  std::vector<int> h(s);
  h[s - 1] = total - s + 1;
  for (int i = s - 1; i >= 1; --i) h[i - 1] = h[i] + lambda.parts()[i];
  if (h[0] != r - lambda.parts()[0])
    throw ConsistencyFault("partition/parameter encoding mismatch");
  return h;
}

Int count_e0_scrolls(int r) {
  if (r < 1) throw DomainError("count_e0_scrolls requires r >= 1");
  return partition_count(r - 1);
}

bool valid_e0_params(int r, std::span<const int> h) {
  // Strictly decreasing positive h with h_1 <= r.  The associated parts
  // (r-h_1, h_1-h_2, ..., 1^{h_s-1}) then form a partition of r-1 as a
  // multiset; encodings whose parts are out of order (or whose leading part
  // is 0) describe the same bases as their sorted counterparts.
  if (r < 1) return false;
  if (h.empty()) return r == 1;
  if (h[0] < 1 || h[0] > r) return false;
  return strictly_decreasing_tail(h, 1);
}

std::pair<std::vector<int>, int> delta_e0_cycles(int r, std::span<const int> h) {
  std::vector<int> dims{r, r, r, r + h[0] - 1};
  for (std::size_t i = 1; i < h.size(); ++i) dims.push_back(2 * r - h[i - 1] + h[i]);
  for (int c = 0; c < h.back() - 1; ++c) dims.push_back(2 * r - 1);
  return {dims, 2 * r + 1};
}

std::optional<Int> delta_e0_formula(int r, std::span<const int> h) {
  return delta_e0_closed(r, h);
}

Int delta_e0(int r, std::span<const int> h) {
  if (!valid_e0_params(r, h) || h.empty())
    throw DomainError("delta_e0: invalid parameter sequence");
  auto [dims, n] = delta_e0_cycles(r, h);
  Int pieri = intersection_number(dims, n);
  auto formula = delta_e0_closed(r, h);
  if (formula && *formula != pieri)
    throw ConsistencyFault("delta_e0 closed form " + formula->str() +
                           " disagrees with the Pieri number " + pieri.str());
  return pieri;
}

IncidenceBase base_e0(int r, std::span<const int> h) {
  if (!valid_e0_params(r, h)) throw DomainError("base_e0: invalid parameter sequence");
  if (h.empty()) return IncidenceBase(3, {1, 1, 1});
  std::vector<int> dims{r, r, r, r + h[0]};
  for (std::size_t i = 1; i < h.size(); ++i) dims.push_back(2 * r - h[i - 1] + h[i]);
  for (int c = 0; c < h.back() - 1; ++c) dims.push_back(2 * r - 1);
  return IncidenceBase(2 * r + 1, std::move(dims));
}

FamilyResult invariants_e0(int r, std::span<const int> h) {
  bool shape = true;
  if (!h.empty()) {
    std::vector<int> parts{r - h[0]};
    for (std::size_t i = 1; i < h.size(); ++i) parts.push_back(h[i - 1] - h[i]);
    shape = parts[0] >= 1 && parts_weakly_decreasing(parts);
  }
  FamilyResult out = assemble(base_e0(r, h), shape);
  auto d_formula = d_e0_closed(r, h);
  if (d_formula)
    out.checks.push_back(make_check("degree formula", *d_formula, out.invariants.degree));
  else
    out.checks.push_back(skipped_check("degree formula", out.invariants.degree));
  auto g_formula = g_e0_closed(r, h);
  if (g_formula)
    out.checks.push_back(make_check("genus formula", *g_formula, out.invariants.genus));
  else
    out.checks.push_back(skipped_check("genus formula", out.invariants.genus));
  return out;
}

// --- degree zero, not linearly trivial -------------------------------------

IncidenceBase base_from_partition_enot0(int r, const Partition& lambda) {
  if (r < 1) throw DomainError("base_from_partition_enot0 requires r >= 1");
  if (lambda.sum() != 2 * r - 1)
    throw DomainError("base_from_partition_enot0: partition must sum to 2r-1");
  if (!lambda.empty() && lambda.parts()[0] > r - 1)
    throw DomainError("base_from_partition_enot0: largest part must stay below r");
  std::vector<int> dims{r, r};
  for (int part : lambda.parts()) dims.push_back(2 * r - part);
  return IncidenceBase(2 * r + 1, std::move(dims));
}

Partition partition_from_base_enot0(int r, const IncidenceBase& base) {
  if (base.ambient() != 2 * r + 1)
    throw DomainError("partition_from_base_enot0: base must live in P^{2r+1}");
  std::vector<int> parts;
  int directrix_spaces = 0;
  for (int d : base.dims()) {
    if (d == r) {
      ++directrix_spaces;
    } else if (d > r) {
      parts.push_back(2 * r - d);
    } else {
      throw DomainError("partition_from_base_enot0: unexpected space below P^r");
    }
  }
  if (directrix_spaces != 2)
    throw DomainError("partition_from_base_enot0: base must contain exactly two P^r");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  Partition lambda(std::move(parts));
  if (lambda.sum() != 2 * r - 1)
    throw DomainError("partition_from_base_enot0: parts do not sum to 2r-1");
  return lambda;
}

std::vector<int> enot0_params_from_partition(int r, const Partition& lambda) {
  if (lambda.sum() != 2 * r - 1) throw DomainError("partition must sum to 2r-1");
  if (lambda.parts()[0] > r - 1) throw DomainError("largest part must stay below r");
  int total = static_cast<int>(lambda.size());
  int explicit_parts = total;
  while (explicit_parts > 0 && lambda.parts()[explicit_parts - 1] == 1) --explicit_parts;
  if (explicit_parts <= 1) return {r - lambda.parts()[0]};
  int s = explicit_parts;
  std::vector<int> h(s);
  h[s - 1] = total - s + 1;
  for (int i = s - 1; i >= 2; --i) h[i - 1] = h[i] + lambda.parts()[i];
  h[0] = r - lambda.parts()[0];
  if (h[1] != r + h[0] - lambda.parts()[1])
    throw ConsistencyFault("partition/parameter encoding mismatch");
  return h;
}

bool valid_enot0_params(int r, std::span<const int> h) {
  if (r < 1 || h.empty()) return false;
  if (h[0] < 1 || h[0] > r) return false;
  if (h.size() >= 2 && (h[1] < 1 || h[1] > r + h[0])) return false;
  return strictly_decreasing_tail(h, 2);
}

std::pair<std::vector<int>, int> delta_enot0_cycles(int r, std::span<const int> h) {
  std::vector<int> dims{r, r, r + h[0] - 1};
  int tail;
  if (h.size() == 1) {
    tail = r + h[0] - 1;
  } else {
    dims.push_back(r - h[0] + h[1]);
    for (std::size_t i = 2; i < h.size(); ++i) dims.push_back(2 * r - h[i - 1] + h[i]);
    tail = h.back() - 1;
  }
  for (int c = 0; c < tail; ++c) dims.push_back(2 * r - 1);
  return {dims, 2 * r + 1};
}

std::optional<Int> delta_enot0_formula(int r, std::span<const int> h) {
  return delta_enot0_closed(r, h);
}

Int delta_enot0(int r, std::span<const int> h) {
  if (!valid_enot0_params(r, h))
    throw DomainError("delta_enot0: invalid parameter sequence");
  auto [dims, n] = delta_enot0_cycles(r, h);
  Int pieri = intersection_number(dims, n);
  auto formula = delta_enot0_closed(r, h);
  if (formula && *formula != pieri)
    throw ConsistencyFault("delta_enot0 closed form " + formula->str() +
                           " disagrees with the Pieri number " + pieri.str());
  return pieri;
}

IncidenceBase base_enot0(int r, std::span<const int> h) {
  if (!valid_enot0_params(r, h)) throw DomainError("base_enot0: invalid parameter sequence");
  std::vector<int> dims{r, r, r + h[0]};
  int tail;
  if (h.size() == 1) {
    tail = r + h[0] - 1;
  } else {
    dims.push_back(r - h[0] + h[1]);
    for (std::size_t i = 2; i < h.size(); ++i) dims.push_back(2 * r - h[i - 1] + h[i]);
    tail = h.back() - 1;
  }
  for (int c = 0; c < tail; ++c) dims.push_back(2 * r - 1);
  return IncidenceBase(2 * r + 1, std::move(dims));
}

FamilyResult invariants_enot0(int r, std::span<const int> h) {
  // Partition shape requires the associated parts to decrease weakly; the
  // bases exist for the wider parameter range and the flag records which
  // side a tuple falls on.
  bool shape = true;
  if (h.size() >= 2) {
    std::vector<int> parts{r - h[0], r + h[0] - h[1]};
    for (std::size_t i = 2; i < h.size(); ++i) parts.push_back(h[i - 1] - h[i]);
    shape = parts[0] >= 1 && parts_weakly_decreasing(parts);
  } else {
    shape = h[0] <= r - 1;
  }
  FamilyResult out = assemble(base_enot0(r, h), shape);
  auto d_formula = d_enot0_closed(r, h);
  if (d_formula)
    out.checks.push_back(make_check("degree formula", *d_formula, out.invariants.degree));
  else
    out.checks.push_back(skipped_check("degree formula", out.invariants.degree));
  auto g_formula = g_enot0_closed(r, h);
  if (g_formula)
    out.checks.push_back(make_check("genus formula", *g_formula, out.invariants.genus));
  else
    out.checks.push_back(skipped_check("genus formula", out.invariants.genus));
  return out;
}

// --- e >= 1 ----------------------------------------------------------------

IncidenceBase base_from_partition_ege1(int r, int e, int j, const Partition& lambda) {
  if (e < 0 || r - e < 1 || e + j < 1)
    throw DomainError("base_from_partition_ege1 requires e >= 0, r > e and e + j >= 1");
  if (lambda.sum() != 2L * r - e + j - 1)
    throw DomainError("base_from_partition_ege1: partition must sum to 2r-e+j-1");
  if (!lambda.empty() && lambda.parts()[0] > r - e)
    throw DomainError("base_from_partition_ege1: largest part must stay at or below r-e");
  std::vector<int> dims{r - e, r + j};
  for (int part : lambda.parts()) dims.push_back(2 * r - e + j - part);
  return IncidenceBase(2 * r - e + j + 1, std::move(dims));
}

std::vector<int> ege1_params_from_partition(int r, int e, int j, const Partition& lambda) {
  if (lambda.sum() != 2L * r - e + j - 1)
    throw DomainError("partition must sum to 2r-e+j-1");
  if (lambda.parts()[0] > r - e) throw DomainError("largest part must stay at or below r-e");
  int total = static_cast<int>(lambda.size());
  int explicit_parts = total;
  while (explicit_parts > 0 && lambda.parts()[explicit_parts - 1] == 1) --explicit_parts;
  if (explicit_parts <= 1) return {r - e - lambda.parts()[0]};
  int s = explicit_parts;
  std::vector<int> h(s);
  h[s - 1] = total - s + 1;
  for (int i = s - 1; i >= 2; --i) h[i - 1] = h[i] + lambda.parts()[i];
  h[0] = r - e - lambda.parts()[0];
  if (h[1] != r + j + h[0] - lambda.parts()[1])
    throw ConsistencyFault("partition/parameter encoding mismatch");
  return h;
}

bool valid_ege1_params(int r, int e, int j, std::span<const int> h) {
  if (e < 0 || r - e < 1 || e + j < 1) return false;
  if (h.empty()) return false;
  if (h[0] < 0 || h[0] > r - e - 1) return false;
  if (h.size() >= 2 && (h[1] < 1 || h[1] > r + j + h[0])) return false;
  return strictly_decreasing_tail(h, 2);
}

std::pair<std::vector<int>, int> delta_ege1_cycles(int r, int e, int j,
                                                   std::span<const int> h) {
  int n = 2 * r - e + j + 1;
  std::vector<int> dims{r - e, r + j, r + j + h[0] - 1};
  int tail;
  if (h.size() == 1) {
    tail = r + j + h[0] - 1;
  } else {
    dims.push_back(r - e - h[0] + h[1]);
    for (std::size_t i = 2; i < h.size(); ++i) dims.push_back(2 * r - e + j - h[i - 1] + h[i]);
    tail = h.back() - 1;
  }
  for (int c = 0; c < tail; ++c) dims.push_back(2 * r - e + j - 1);
  return {dims, n};
}

std::optional<Int> delta_ege1_formula(int r, int e, int j, std::span<const int> h) {
  return delta_ege1_closed(r, EJ{e, j}, h);
}

Int delta_ege1(int r, int e, int j, std::span<const int> h) {
  if (!valid_ege1_params(r, e, j, h))
    throw DomainError("delta_ege1: invalid parameter tuple");
  auto [dims, n] = delta_ege1_cycles(r, e, j, h);
  Int pieri = intersection_number(dims, n);
  auto formula = delta_ege1_closed(r, EJ{e, j}, h);
  if (formula && *formula != pieri)
    throw ConsistencyFault("delta_ege1 closed form " + formula->str() +
                           " disagrees with the Pieri number " + pieri.str());
  return pieri;
}

IncidenceBase base_ege1(int r, int e, int j, std::span<const int> h) {
  if (!valid_ege1_params(r, e, j, h)) throw DomainError("base_ege1: invalid parameter tuple");
  int n = 2 * r - e + j + 1;
  std::vector<int> dims{r - e, r + j, r + j + h[0]};
  int tail;
  if (h.size() == 1) {
    tail = r + j + h[0] - 1;
  } else {
    dims.push_back(r - e - h[0] + h[1]);
    for (std::size_t i = 2; i < h.size(); ++i) dims.push_back(2 * r - e + j - h[i - 1] + h[i]);
    tail = h.back() - 1;
  }
  for (int c = 0; c < tail; ++c) dims.push_back(2 * r - e + j - 1);
  return IncidenceBase(n, std::move(dims));
}

FamilyResult invariants_ege1(int r, int e, int j, std::span<const int> h) {
  bool shape = true;
  if (h.size() >= 2) {
    std::vector<int> parts{r - e - h[0], r + j + h[0] - h[1]};
    for (std::size_t i = 2; i < h.size(); ++i) parts.push_back(h[i - 1] - h[i]);
    shape = parts[0] >= 1 && parts_weakly_decreasing(parts);
  } else {
    shape = h[0] <= r - e - 1;
  }
  FamilyResult out = assemble(base_ege1(r, e, j, h), shape);
  auto d_formula = d_ege1_closed(r, EJ{e, j}, h);
  if (d_formula)
    out.checks.push_back(make_check("degree formula", *d_formula, out.invariants.degree));
  else
    out.checks.push_back(skipped_check("degree formula", out.invariants.degree));
  auto g_formula = g_ege1_closed(r, EJ{e, j}, h);
  if (g_formula)
    out.checks.push_back(make_check("genus formula", *g_formula, out.invariants.genus));
  else
    out.checks.push_back(skipped_check("genus formula", out.invariants.genus));
  return out;
}

}  // namespace scrolls
