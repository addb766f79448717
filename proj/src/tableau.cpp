#include "scrolls/tableau.hpp"

#include <functional>
#include <numeric>

namespace scrolls {

bool FillingSpec::ok() const {
  if (n < 2) return false;
  long total = std::accumulate(content.begin(), content.end(), 0L);
  for (int c : content)
    if (c < 1) return false;
  return total + 1 == 2L * (n - 1);
}

Int count_fillings(const FillingSpec& spec) {
  if (spec.n < 2)
    throw DomainError("count_fillings: rectangle needs n >= 2");
  long total = std::accumulate(spec.content.begin(), spec.content.end(), 0L);
  if (total + 1 != 2L * (spec.n - 1))
    throw DomainError("count_fillings: content fills " + std::to_string(total + 1) +
                      " cells, rectangle has " + std::to_string(2L * (spec.n - 1)));
  for (int c : spec.content)
    if (c < 1) throw DomainError("count_fillings: content counts must be positive");

  int cols = spec.n - 1;
  int labels = static_cast<int>(spec.content.size());
  std::vector<int> remaining = spec.content;

  // Fill column by column.  Column j holds (top[j], bottom[j]) with
  // top[j] < bottom[j], top and bottom rows weakly increasing.  The final
  // label sits in the lower-right cell; being the largest label, its two
  // constraints hold automatically, so that cell is skipped.
  Int count = 0;
  std::function<void(int, int, int)> rec = [&](int col, int prev_top, int prev_bottom) {
    if (col == cols - 1) {
      // Only the top cell of the last column remains.
      for (int t = prev_top; t <= labels; ++t) {
        if (remaining[t - 1] > 0) ++count;
      }
      return;
    }
    for (int t = prev_top; t <= labels; ++t) {
      if (remaining[t - 1] == 0) continue;
      --remaining[t - 1];
      int b_lo = std::max(prev_bottom, t + 1);
      for (int b = b_lo; b <= labels; ++b) {
        if (remaining[b - 1] == 0) continue;
        --remaining[b - 1];
        rec(col + 1, t, b);
        ++remaining[b - 1];
      }
      ++remaining[t - 1];
    }
  };
  rec(0, 1, 1);
  return count;
}

Int count_fillings(const IncidenceBase& base) {
  if (!base.is_valid()) {
    auto rep = validate_base(base);
    throw InvalidBaseError("base " + base.to_string() + " fails the incidence count (" +
                           std::to_string(rep.lhs) + " != " + std::to_string(rep.target) + ")");
  }
  FillingSpec spec;
  spec.n = base.ambient();
  // Hyperplanes contribute no cells; skip their labels entirely.
  for (int d : base.dims()) {
    int c = base.ambient() - 1 - d;
    if (c > 0) spec.content.push_back(c);
  }
  return count_fillings(spec);
}

}  // namespace scrolls
