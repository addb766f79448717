#pragma once

#include <compare>
#include <string>
#include <vector>

#include "scrolls/errors.hpp"

namespace scrolls {

/// A base configuration: ambient dimension n plus the multiset of subspace
/// dimensions {n_i}, stored sorted ascending.  The family of lines meeting
/// every space is one-dimensional exactly when
///
///     r*n - (n_1 + ... + n_r) - r = 2n - 3,
///
/// the incidence (IS) count.
class IncidenceBase {
 public:
  IncidenceBase(int n, std::vector<int> dims);

  int ambient() const { return n_; }
  const std::vector<int>& dims() const { return dims_; }
  int space_count() const { return static_cast<int>(dims_.size()); }

  /// Left side r*n - sum(n_i) - r of the incidence count.
  long incidence_lhs() const;
  /// Right side 2n - 3.
  long incidence_target() const { return 2L * n_ - 3; }
  bool is_valid() const { return incidence_lhs() == incidence_target(); }

  /// Number of hyperplane entries (n_i = n-1); their condition is vacuous.
  int hyperplane_count() const;
  /// Number of point entries (n_i = 0); every generator passes through them.
  int point_count() const;

  /// Same base with vacuous hyperplane conditions removed.
  IncidenceBase without_hyperplanes() const;

  /// Condition codimensions n-1-n_i for the non-vacuous spaces.
  std::vector<int> condition_dims() const;

  std::string to_string() const;

  friend auto operator<=>(const IncidenceBase&, const IncidenceBase&) = default;

 private:
  int n_;
  std::vector<int> dims_;
};

struct ValidationReport {
  bool valid = false;
  long lhs = 0;
  long target = 0;
  int hyperplanes = 0;
  int points = 0;
};

/// Report-style check of the incidence count; never throws.
ValidationReport validate_base(const IncidenceBase& base);

/// All bases in P^n with 1 <= n_i <= n-2 satisfying the incidence count,
/// without duplicates, sorted.  Dimension-0 spaces are excluded: a point in
/// the base forces every generator through it and the swept surface is a
/// cone, not a scroll.
std::vector<IncidenceBase> catalog(int n);

/// Specialize spaces i and j (indices into dims()) to span a hyperplane they
/// meet in a point: requires n_i + n_j = n - 1.  The scroll sheds a plane and
/// the rest lives in P^{n-1} with base {n_i, n_j kept, all others reduced by
/// one}.  Degree drops by one, genus is unchanged.
IncidenceBase join_reduce(const IncidenceBase& base, int i, int j);

/// Projection of the scroll from a general point of it: keeps the two
/// smallest spaces and reduces every other dimension by one, landing in
/// P^{n-1}.  Degree drops by one, genus is unchanged.  Requires r >= 3,
/// n_3 >= 1 and n_1 + n_2 = n - 1 (the projection joins the two smallest
/// spaces; they span a hyperplane exactly when the scroll is decomposable
/// with those spans as its directrix pair).
IncidenceBase elementary_transform(const IncidenceBase& base);

}  // namespace scrolls
