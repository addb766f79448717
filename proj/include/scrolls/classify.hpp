#pragma once

#include <optional>

#include "scrolls/base.hpp"
#include "scrolls/ints.hpp"

namespace scrolls {

/// Discrete data of an abstract scroll model: base-curve genus g, invariant
/// e = deg(-e-divisor), fiber-degree m of the very ample class, speciality
/// summands i1, i2, and whether the twisting divisor is linearly trivial.
/// Very-ampleness of the class is the caller's responsibility.
struct ScrollModel {
  int g = 0;
  int e = 0;
  int m = 0;
  int i1 = 0;
  int i2 = 0;
  bool e_trivial = false;

  long degree() const { return 2L * m - e; }
  int speciality() const { return i1 + i2; }
  int ambient() const { return 2 * (m - g) - e + 1 + i1 + i2; }
  int offset() const { return i2 - i1; }

  /// Throws DomainError when the fields cannot describe a scroll.
  void validate() const;
};

struct ClassifyVerdict {
  bool incidence = false;
  /// Which of the five classification conditions matched (1..5, 0 for none).
  int condition = 0;
  std::optional<IncidenceBase> base;
};

/// The genus-0/1 classification: a scroll model with g in {0,1} embeds as an
/// incidence scroll exactly when one of five conditions holds.  On a match
/// the base is materialized from the corresponding family and verified:
/// IS-valid, Pieri degree 2m-e.  Models with g >= 2 are out of classified
/// range and raise DomainError.
ClassifyVerdict classify_g01(const ScrollModel& model);

enum class DecomposableVerdict {
  Incidence,
  NotIncidence,
  /// The comparison came out "<": resolving it needs directrix counts the
  /// discrete data cannot supply.
  UndeterminedCase3,
  /// Equality holds but g >= 3, where the section-count side condition is not
  /// derivable from discrete data.
  UndeterminedSideCondition,
};

struct DecomposableResult {
  DecomposableVerdict verdict;
  std::optional<IncidenceBase> base;
  Int lhs;
  Int rhs;
};

/// Incidence test for a decomposable model.  h1_of_minus_e is the caller-
/// supplied cohomology dimension h^1 of the dual twisting divisor.  Compares
/// (e - g + h^1)(m - e - g + i1) against m - g + i2 - 1: equality (with g <= 2)
/// gives an incidence scroll with base {P^{m-e-g+i1}, (e+2-g+h^1) P^{m-g+i2}},
/// ">" excludes incidence, "<" is out of scope of this test.
DecomposableResult decomposable_incidence_test(const ScrollModel& model, int h1_of_minus_e);

}  // namespace scrolls
