#pragma once

#include <optional>
#include <vector>

#include "scrolls/base.hpp"
#include "scrolls/ints.hpp"

namespace scrolls {

struct ScrollInvariants {
  Int degree;
  Int genus;
  std::optional<Int> min_directrix_degree;
};

/// Invariants of the fundamental incidence scroll of P^n, swept by the lines
/// meeting 2n-3 general P^{n-2}'s:
///   degree     C(2n-2, n) / (n-1), the Catalan number C(n-1);
///   genus      (n-4) * degree / 2 + 1 for n >= 4, 0 for n = 3;
///   directrix  3 (2n-4)! / ((n-3)! n!) for n >= 4, 1 for n = 3.
/// Requires n >= 3.
ScrollInvariants fundamental_invariants(int n);

/// The standard family B(n, i_1, ..., i_s): i_j spaces of dimension n-j-2
/// plus 2n-3 - sum (j+1) i_j spaces of dimension n-2.  Every IS-valid base
/// without points or hyperplanes is of this shape for exactly one key.
struct StandardFamilyKey {
  int n = 0;
  std::vector<int> i;

  /// Count of P^{n-2} spaces forced by the incidence count.
  long free_count() const;
  /// Trailing zeros of i stripped; the canonical form.
  StandardFamilyKey normalized() const;
  bool ok() const;
};

IncidenceBase materialize(const StandardFamilyKey& key);

/// Key for an IS-valid base whose dimensions all lie in [1, n-2], after
/// dropping vacuous hyperplanes.  Empty when the base has a point space or
/// fails the incidence count.
std::optional<StandardFamilyKey> standard_key_for(const IncidenceBase& base);

/// Degree and genus of B(n, i_1, ..., i_s) by the degeneration recursion
///
///   d(n, i)  =  d(n, ..., i_{s-1}+1, i_s-1) - d(n-1, ..., i_{s-2}+1, i_{s-1}, i_s-1)
///   g(n, i)  =  g(n, ..., i_{s-1}+1, i_s-1) - g(n-1, ...) - kappa + 1,
///   kappa    =  d(n-1, ..., i_{s-1}+1, i_s-1),
///
/// bottoming out at the fundamental scroll.  The degree is recomputed through
/// the Pieri fold of the materialized base; a mismatch raises ConsistencyFault.
/// Requires n - s - 2 >= 1 when the key has any entries.
ScrollInvariants standard_family_invariants(const StandardFamilyKey& key);

/// Recursion degree/genus without the Pieri recheck (the recursion is exact;
/// callers wanting the guarantee use standard_family_invariants).
ScrollInvariants standard_family_unchecked(const StandardFamilyKey& key);

/// Genus of the scroll of an IS-valid base, when the base (hyperplanes
/// dropped) has all dimensions in [1, n-2]; empty otherwise (a point in the
/// base makes the surface a cone and no genus recursion applies).
std::optional<Int> genus_for_base(const IncidenceBase& base);

/// All normalized keys with ambient n (smallest space of dimension >= 1).
std::vector<StandardFamilyKey> standard_keys(int n);

}  // namespace scrolls
