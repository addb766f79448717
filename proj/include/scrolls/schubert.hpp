#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "scrolls/base.hpp"
#include "scrolls/ints.hpp"

namespace scrolls {

/// Index of one Schubert cycle in G(l, n): the flag dimensions
/// (a_0 < a_1 < ... < a_l), all in [0, n].
struct SchubertIndex {
  int n = 0;
  std::vector<int> dims;

  int level() const { return static_cast<int>(dims.size()) - 1; }
  int dimension() const;
  int codimension() const;
  bool ok() const;
  std::string to_string() const;

  friend auto operator<=>(const SchubertIndex&, const SchubertIndex&) = default;
};

/// A homogeneous cohomology class of G(l, n): finitely many Schubert terms
/// with exact integer coefficients.  Canonical form is maintained after every
/// operation (map-ordered terms, no zero coefficients).
class ClassSum {
 public:
  ClassSum(int n, int l);

  /// The codimension-0 class.
  static ClassSum fundamental(int n, int l);

  int ambient() const { return n_; }
  int level() const { return l_; }
  bool is_zero() const { return terms_.empty(); }
  /// Common codimension of the stored terms; -1 for the zero class.
  int codimension() const;
  std::size_t term_count() const { return terms_.size(); }

  const std::map<std::vector<int>, Int>& terms() const { return terms_; }
  Int coefficient(const std::vector<int>& dims) const;

  void add_term(const std::vector<int>& dims, const Int& coeff);

  std::string to_string() const;

  friend bool operator==(const ClassSum&, const ClassSum&) = default;

 private:
  int n_;
  int l_;
  std::map<std::vector<int>, Int> terms_;
};

/// The class of lines meeting a fixed P^h, as a single term in G(1, n).
/// h = n-1 gives the fundamental class.
ClassSum special_class(int h, int n);

/// Pieri product c * w(h, n): every term w(a_0,...,a_l) expands over the
/// integer sequences b with 0 <= b_0 <= a_0 < b_1 <= a_1 < ... < b_l <= a_l
/// and sum(b) = sum(a) - (n-l-h).
ClassSum pieri_multiply(const ClassSum& c, int h);

/// Left fold of pieri_multiply over hs, starting from the fundamental class
/// of G(1, n).
ClassSum product_of_specials(std::span<const int> hs, int n);

/// Coefficient of the point class in the product of the special classes
/// w(h_i, n) in G(1, n).  Requires total codimension 2n-2.
Int intersection_number(std::span<const int> hs, int n);

/// Degree of the incidence scroll with the given base: the coefficient of
/// w(0, 2) in the product of the base's special classes.  Requires an
/// IS-valid base.
Int curve_class_degree(const IncidenceBase& base);

}  // namespace scrolls
