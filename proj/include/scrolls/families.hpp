#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scrolls/base.hpp"
#include "scrolls/ints.hpp"
#include "scrolls/invariants.hpp"

namespace scrolls {

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  long sum() const { return sum_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  long sum_ = 0;
};

/// Every partition of k exactly once, largest-part-first order.
std::vector<Partition> partitions_of(long k);

/// One verification record: a value computed two ways.
struct Check {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

/// Family invariants with their materialized base and the printed-formula
/// cross-checks.  `invariants` always holds the authoritative values: degree
/// by the Pieri fold of `base`, genus by the degeneration recursion.  A check
/// records where a closed formula was compared against those routes.
struct FamilyResult {
  ScrollInvariants invariants;
  IncidenceBase base;
  bool partition_shape = true;
  std::vector<Check> checks;

  bool consistent() const;
};

// ---------------------------------------------------------------------------
// Bases with a linearly trivial twisting divisor (three copies of the
// directrix span): scrolls in P^{2r+1} in bijection with partitions of r-1.
// ---------------------------------------------------------------------------

/// Base {3 P^r, P^{2r-l_1}, ..., P^{2r-l_s}} of the scroll attached to a
/// partition of r-1 with parts l_i.
IncidenceBase base_from_partition_e0(int r, const Partition& lambda);
Partition partition_from_base_e0(int r, const IncidenceBase& base);

/// Parameter sequence (h_1 > h_2 > ... > h_s) encoding the same partition,
/// as used by the closed formulas; empty for r = 1.
std::vector<int> e0_params_from_partition(int r, const Partition& lambda);

/// Number of such scrolls in P^{2r+1}: the partition count p(r-1).
Int count_e0_scrolls(int r);

bool valid_e0_params(int r, std::span<const int> h);
/// Cycle list (condition dimensions, ambient) whose intersection number the
/// closed form must reproduce.
std::pair<std::vector<int>, int> delta_e0_cycles(int r, std::span<const int> h);
/// Closed form; empty when the unrolled sums escape their derivation domain.
std::optional<Int> delta_e0_formula(int r, std::span<const int> h);
/// Closed form, verified against the Pieri intersection number of the cycle
/// list; ConsistencyFault on mismatch.
Int delta_e0(int r, std::span<const int> h);

IncidenceBase base_e0(int r, std::span<const int> h);
FamilyResult invariants_e0(int r, std::span<const int> h);

// ---------------------------------------------------------------------------
// Nontrivial twisting divisor of degree zero (two directrix spans):
// scrolls in P^{2r+1} in bijection with partitions of 2r-1, largest part
// at most r-1.
// ---------------------------------------------------------------------------

IncidenceBase base_from_partition_enot0(int r, const Partition& lambda);
Partition partition_from_base_enot0(int r, const IncidenceBase& base);
std::vector<int> enot0_params_from_partition(int r, const Partition& lambda);

bool valid_enot0_params(int r, std::span<const int> h);
std::pair<std::vector<int>, int> delta_enot0_cycles(int r, std::span<const int> h);
/// Closed form; empty when the unrolled sums escape their derivation domain
/// (two-index leaves need h_1 >= h_2 there).  The Pieri number of the cycle
/// list is the value either way.
std::optional<Int> delta_enot0_formula(int r, std::span<const int> h);
Int delta_enot0(int r, std::span<const int> h);

IncidenceBase base_enot0(int r, std::span<const int> h);
FamilyResult invariants_enot0(int r, std::span<const int> h);

// ---------------------------------------------------------------------------
// Twisting divisor of negative degree (e >= 1), directrix spans P^{r-e} and
// P^{r+j}: scrolls in P^{2r-e+j+1} in bijection with partitions of
// 2r-e+j-1, largest part at most r-e.
// ---------------------------------------------------------------------------

/// Base of the scroll attached to a partition of 2r-e+j-1 with largest part
/// at most r-e: {P^{r-e}, P^{r+j}, P^{2r-e+j-l_1}, ..., P^{2r-e+j-l_s}}.
IncidenceBase base_from_partition_ege1(int r, int e, int j, const Partition& lambda);
std::vector<int> ege1_params_from_partition(int r, int e, int j, const Partition& lambda);

bool valid_ege1_params(int r, int e, int j, std::span<const int> h);
std::pair<std::vector<int>, int> delta_ege1_cycles(int r, int e, int j,
                                                   std::span<const int> h);
/// Closed form; empty when a referenced leaf value falls outside the printed
/// domain (the authoritative value is then the Pieri number alone).
std::optional<Int> delta_ege1_formula(int r, int e, int j, std::span<const int> h);
Int delta_ege1(int r, int e, int j, std::span<const int> h);

IncidenceBase base_ege1(int r, int e, int j, std::span<const int> h);
FamilyResult invariants_ege1(int r, int e, int j, std::span<const int> h);

}  // namespace scrolls
