#pragma once

#include <map>
#include <string>
#include <vector>

#include "scrolls/ints.hpp"

namespace scrolls {

enum class CrosscheckScope { Quick, Full };

struct CheckRecord {
  std::string suite;
  std::string tuple;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct CrosscheckReport {
  std::vector<CheckRecord> failures;
  std::map<std::string, long> suite_counts;

  long total() const;
  bool ok() const { return failures.empty(); }
};

/// Runs every agreement suite: oracle pairing over the catalogs, fundamental
/// closed forms against the Pieri fold, the standard-family recursion, the
/// Delta closed forms, the family formulas, the partition bijections, transform
/// bookkeeping and the genus-0/1 classification grid.  Quick scope bounds the
/// sweeps at n <= 5, r <= 4; full at n <= 7, r <= 6.
///
/// inject_fault perturbs one Delta comparison; the report then names the
/// offending tuple.  Test plumbing for the fault path, nothing more.
CrosscheckReport run_crosscheck(CrosscheckScope scope, bool inject_fault = false);

/// Valid parameter sweeps for the three decomposable families.
std::vector<std::vector<int>> e0_param_sweep(int r);
std::vector<std::vector<int>> enot0_param_sweep(int r);
std::vector<std::vector<int>> ege1_param_sweep(int r, int e, int j);

}  // namespace scrolls
