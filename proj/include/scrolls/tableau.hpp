#pragma once

#include <vector>

#include "scrolls/base.hpp"
#include "scrolls/ints.hpp"

namespace scrolls {

/// A filling problem for the 2 x (n-1) rectangle: content[i] copies of label
/// i+1, plus one copy of the final label (one past the last content label)
/// fixed in the lower-right cell.  Rows weakly increase left to right,
/// columns strictly increase top to bottom.
struct FillingSpec {
  int n = 0;
  std::vector<int> content;

  /// The rectangle must be exactly filled: sum(content) + 1 = 2(n-1).
  bool ok() const;
};

/// Number of valid fillings.
Int count_fillings(const FillingSpec& spec);

/// Degree of the incidence scroll by the tableau rule: label i gets
/// n-1-n_i copies (the codimension of the i-th condition).  Independent of
/// the Pieri route.
Int count_fillings(const IncidenceBase& base);

}  // namespace scrolls
