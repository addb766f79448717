#include <doctest.h>

#include <map>
#include <set>

#include "scrolls/crosscheck.hpp"
#include "scrolls/families.hpp"
#include "scrolls/schubert.hpp"

using namespace scrolls;

namespace {

// Independent partition-count oracle: the bounded-part recurrence
// p(k, max) = p(k-max, max) + p(k, max-1), memoized per run.
Int partition_count_dp(long k) {
  if (k < 0) return 0;
  std::map<std::pair<long, long>, Int> memo;
  std::function<Int(long, long)> rec = [&](long rest, long cap) -> Int {
    if (rest == 0) return 1;
    if (rest < 0 || cap == 0) return 0;
    auto it = memo.find({rest, cap});
    if (it != memo.end()) return it->second;
    Int value = rec(rest - cap, cap) + rec(rest, cap - 1);
    return memo.emplace(std::make_pair(rest, cap), value).first->second;
  };
  return rec(k, k);
}

}  // namespace

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(0)[0].empty());

  auto three = partitions_of(3);
  REQUIRE(three.size() == 3);
  CHECK(three[0].parts() == std::vector<int>{3});
  CHECK(three[1].parts() == std::vector<int>{2, 1});
  CHECK(three[2].parts() == std::vector<int>{1, 1, 1});

  CHECK(partitions_of(9).size() == 30);
  for (long k = 0; k <= 25; ++k) {
    CHECK(Int(partitions_of(static_cast<int>(std::min(k, 18L))).size()) ==
          partition_count_dp(std::min(k, 18L)));
    CHECK(partition_count(k) == partition_count_dp(k));
  }

  CHECK_THROWS_AS(Partition({0}), DomainError);
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
}

TEST_CASE("linearly trivial bijection") {
  CHECK(base_from_partition_e0(3, Partition({2})) == IncidenceBase(7, {3, 3, 3, 4}));
  auto two_ones = base_from_partition_e0(3, Partition({1, 1}));
  CHECK(two_ones == IncidenceBase(7, {3, 3, 3, 5, 5}));
  CHECK(two_ones.is_valid());

  CHECK(count_e0_scrolls(1) == 1);
  CHECK(count_e0_scrolls(4) == 3);
  CHECK(count_e0_scrolls(10) == 30);

  for (int r = 1; r <= 10; ++r) {
    std::set<IncidenceBase> distinct;
    for (const auto& lambda : partitions_of(r - 1)) {
      auto base = base_from_partition_e0(r, lambda);
      CHECK(base.is_valid());
      CHECK(partition_from_base_e0(r, base) == lambda);
      distinct.insert(base);
    }
    CHECK(Int(distinct.size()) == count_e0_scrolls(r));
    CHECK(Int(distinct.size()) == partition_count_dp(r - 1));
  }
}

TEST_CASE("degree-zero nontrivial bijection") {
  auto base = base_from_partition_enot0(2, Partition({1, 1, 1}));
  CHECK(base == IncidenceBase(5, {2, 2, 3, 3, 3}));
  CHECK(base.is_valid());
  CHECK(partition_from_base_enot0(2, base) == Partition({1, 1, 1}));

  // Largest part must stay below r.
  CHECK_THROWS_AS(base_from_partition_enot0(2, Partition({2, 1})), DomainError);

  for (int r = 2; r <= 5; ++r) {
    for (const auto& lambda : partitions_of(2 * r - 1)) {
      if (lambda.parts()[0] > r - 1) continue;
      auto from_partition = base_from_partition_enot0(r, lambda);
      CHECK(partition_from_base_enot0(r, from_partition) == lambda);
      auto params = enot0_params_from_partition(r, lambda);
      CHECK(valid_enot0_params(r, params));
      CHECK(base_enot0(r, params).without_hyperplanes() ==
            from_partition.without_hyperplanes());
    }
  }
}

TEST_CASE("e >= 1 bijection") {
  for (int r = 2; r <= 5; ++r) {
    for (int e = 1; e <= 2; ++e) {
      for (int j = 1 - e; j <= 1; ++j) {
        if (r - e < 1) continue;
        for (const auto& lambda : partitions_of(2L * r - e + j - 1)) {
          if (lambda.parts()[0] > r - e) continue;
          auto from_partition = base_from_partition_ege1(r, e, j, lambda);
          CHECK(from_partition.is_valid());
          auto params = ege1_params_from_partition(r, e, j, lambda);
          CHECK(valid_ege1_params(r, e, j, params));
          CHECK(base_ege1(r, e, j, params).without_hyperplanes() ==
                from_partition.without_hyperplanes());
        }
      }
    }
  }
}

TEST_CASE("delta spot values") {
  for (int r = 2; r <= 6; ++r) {
    std::vector<int> one{1};
    CHECK(delta_e0(r, one) == r + 1);
    for (int h1 = 2; h1 <= r - 1; ++h1) {
      std::vector<int> pair{h1, 1};
      CHECK(delta_e0(r, pair) == Int(h1) * (r - h1 + 2));
      CHECK(delta_enot0(r, pair) == r - h1 + 2);
    }
  }
  std::vector<int> two{2};
  CHECK(delta_e0(4, two) == 8);

  std::vector<int> h22{2, 2};
  CHECK(delta_enot0(3, h22) == 6);

  // Delta(r,1) of the degree-zero family is the top linearly-trivial degree.
  for (int r = 2; r <= 6; ++r) {
    std::vector<int> one{1};
    std::vector<int> top{r - 1};
    CHECK(delta_enot0(r, one) == invariants_e0(r, top).invariants.degree);
  }

  for (int r = 3; r <= 6; ++r) {
    for (int e = 1; e <= 2; ++e) {
      if (r - e < 2) continue;
      std::vector<int> h01{0, 1};
      CHECK(delta_ege1(r, e, 1, h01) == r - e + 1);
      std::vector<int> h11{1, 1};
      CHECK(delta_ege1(r, e, 1, h11) == r - e + 1);  // r-e-h_1+2 at h_1 = 1
    }
  }
  std::vector<int> h01{0, 1};
  CHECK(delta_ege1(4, 1, 1, h01) == 4);
}

TEST_CASE("delta parameter guards") {
  std::vector<int> bad{0};
  CHECK_THROWS_AS((void)delta_e0(3, bad), DomainError);
  std::vector<int> too_big{4};
  CHECK_THROWS_AS((void)delta_e0(3, too_big), DomainError);
  std::vector<int> loose{2, 2};
  CHECK_THROWS_AS((void)delta_e0(5, loose), DomainError);  // tail not strictly decreasing
  std::vector<int> h1big{5, 1};
  CHECK_THROWS_AS((void)delta_ege1(4, 1, 1, h1big), DomainError);  // h_1 > r-e-1
}

TEST_CASE("closed forms match the Pieri numbers where defined") {
  for (int r = 1; r <= 5; ++r) {
    for (const auto& h : e0_param_sweep(r)) {
      CAPTURE(r);
      CAPTURE(h);
      (void)delta_e0(r, h);  // throws on any mismatch
    }
    for (const auto& h : enot0_param_sweep(r)) (void)delta_enot0(r, h);
    for (int e = 0; e <= 2; ++e)
      for (int j = 1 - e; j <= 2; ++j)
        for (const auto& h : ege1_param_sweep(r, e, j)) (void)delta_ege1(r, e, j, h);
  }
}

TEST_CASE("printed delta display agrees with its cycle list on the clean domain") {
  // delta(x; y_1,...,y_t, 1) display: nested sums of (x - y_1 + 1).  The
  // library evaluates the cycle list; the display is checked here on
  // strictly decreasing arguments.
  auto display = [](long x, const std::vector<int>& ys) {
    int t = static_cast<int>(ys.size());
    if (t == 1) return Int(x - ys[0] + 1);
    Int acc = 0;
    std::vector<long> k(t - 1, 0);
    std::function<void(int, long)> rec = [&](int depth, long used) {
      if (depth == t - 1) {
        acc += Int(x - ys[0] + 1);
        return;
      }
      long hi = ys[t - 1 - depth] - 1 - 2 * used;
      for (long v = 0; v <= hi; ++v) rec(depth + 1, used + v);
    };
    rec(0, 0);
    return acc;
  };
  auto sigma = [](long x, const std::vector<int>& ys) {
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
    return intersection_number(dims, static_cast<int>(2 * x + 1));
  };
  CHECK(display(4, {3, 2}) == sigma(4, {3, 2}));
  CHECK(display(5, {2, 1}) == sigma(5, {2, 1}));
  CHECK(display(6, {3, 1}) == sigma(6, {3, 1}));
  CHECK(display(6, {4, 2, 1}) == sigma(6, {4, 2, 1}));
  CHECK(display(6, {3}) == sigma(6, {3}));
  // ... and the documented break at equal leading arguments:
  CHECK(display(5, {5, 5, 4}) == 9);
  CHECK(sigma(5, {5, 5, 4}) == 8);
}

TEST_CASE("linearly trivial family values") {
  for (int r = 2; r <= 8; ++r) {
    std::vector<int> one{1};
    auto res = invariants_e0(r, one);
    CHECK(res.invariants.degree == 2 * r);
    CHECK(res.invariants.genus == 0);
    CHECK(res.consistent());
    for (int h = 2; h <= r - 1; ++h) {
      std::vector<int> pair{h, 1};
      auto hr = invariants_e0(r, pair);
      CHECK(hr.invariants.degree == Int(2 * h) * (r - h + 1));
      CHECK(hr.invariants.genus == Int(r - h) * (h - 1));
      CHECK(hr.consistent());
    }
    std::vector<int> two_one{2, 1};
    if (r >= 3) {
      auto special = invariants_e0(r, two_one);
      CHECK(special.invariants.degree == 4 * r - 4);
      CHECK(special.invariants.genus == r - 2);
    }
  }
  // r = 1 is the quadric.
  std::vector<int> empty;
  auto quadric = invariants_e0(1, empty);
  CHECK(quadric.invariants.degree == 2);
  CHECK(quadric.invariants.genus == 0);
}

TEST_CASE("degree-zero nontrivial family values") {
  for (int r = 2; r <= 5; ++r) {
    for (int h1 = 1; h1 <= r - 1; ++h1) {
      std::vector<int> pair{h1, 1};
      auto res = invariants_enot0(r, pair);
      CHECK(res.invariants.degree == 2 * (r - h1 + 1));
      CHECK(res.invariants.genus == 0);
      CHECK(res.consistent());
    }
  }
  // The base of (r, h_1, 1) coincides with a linearly-trivial member.
  std::vector<int> pair{1, 1};
  CHECK(invariants_enot0(2, pair).base.without_hyperplanes() ==
        IncidenceBase(5, {2, 2, 2, 3}));

  // The degree-six elliptic scroll: (2, (1)).
  std::vector<int> one{1};
  auto r61 = invariants_enot0(2, one);
  CHECK(r61.invariants.degree == 6);
  CHECK(r61.invariants.genus == 1);
  CHECK(r61.base == IncidenceBase(5, {2, 2, 3, 3, 3}));
}

TEST_CASE("e >= 1 family values") {
  // B(e+1, 0) at offset j is rational of degree e+j+2.
  for (int e = 1; e <= 3; ++e) {
    for (int j = 1; j <= 2; ++j) {
      std::vector<int> zero{0};
      auto res = invariants_ege1(e + 1, e, j, zero);
      CHECK(res.base.ambient() == e + j + 3);
      CHECK(res.invariants.degree == e + j + 2);
      CHECK(res.invariants.genus == 0);
      CHECK(res.consistent());
    }
  }
  for (int r = 3; r <= 6; ++r) {
    for (int e = 1; e <= 2; ++e) {
      if (r - e < 2) continue;
      std::vector<int> h01{0, 1};
      auto res = invariants_ege1(r, e, 0, h01);
      CHECK(res.invariants.degree == 2 * (r - e) + 1);
      CHECK(res.invariants.genus == 0);
      for (int h1 = 1; h1 <= r - e - 1; ++h1) {
        std::vector<int> pair{h1, 1};
        auto deeper = invariants_ege1(r, e, 0, pair);
        CHECK(deeper.invariants.degree == 2 * (r - e - h1 + 1));
        CHECK(deeper.invariants.genus == 0);
      }
    }
  }
}

TEST_CASE("family formula checks stay green across the sweeps") {
  for (int r = 1; r <= 5; ++r) {
    for (const auto& h : e0_param_sweep(r)) {
      auto res = invariants_e0(r, h);
      CAPTURE(r);
      CAPTURE(h);
      CHECK(res.consistent());
    }
    for (const auto& h : enot0_param_sweep(r)) CHECK(invariants_enot0(r, h).consistent());
    for (int e = 0; e <= 2; ++e)
      for (int j = 1 - e; j <= 2; ++j)
        for (const auto& h : ege1_param_sweep(r, e, j))
          CHECK(invariants_ege1(r, e, j, h).consistent());
  }
}

TEST_CASE("non-partition parameters are flagged but computed") {
  // h_2 up to r + h_1 is accepted; the associated tuple is only a partition
  // when the parts decrease.
  std::vector<int> wide{1, 3};
  auto res = invariants_enot0(3, wide);
  CHECK(res.partition_shape);  // (2, 1, 1, 1) decreases
  std::vector<int> wider{2, 3};
  auto res2 = invariants_enot0(3, wider);
  CHECK(!res2.partition_shape);  // parts (1, 2, ...) do not decrease
  CHECK(res2.invariants.degree == curve_class_degree(res2.base));
}
