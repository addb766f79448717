#include "scrolls/base.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace scrolls {

IncidenceBase::IncidenceBase(int n, std::vector<int> dims)
    : n_(n), dims_(std::move(dims)) {
  if (n_ < 2) throw DomainError("ambient dimension must be at least 2");
  for (int d : dims_) {
    if (d < 0 || d > n_ - 1)
      throw DomainError("base space dimension " + std::to_string(d) +
                        " out of range for P^" + std::to_string(n_));
  }
  std::sort(dims_.begin(), dims_.end());
}

long IncidenceBase::incidence_lhs() const {
  long r = static_cast<long>(dims_.size());
  long sum = std::accumulate(dims_.begin(), dims_.end(), 0L);
  return r * n_ - sum - r;
}

int IncidenceBase::hyperplane_count() const {
  return static_cast<int>(std::count(dims_.begin(), dims_.end(), n_ - 1));
}

int IncidenceBase::point_count() const {
  return static_cast<int>(std::count(dims_.begin(), dims_.end(), 0));
}

IncidenceBase IncidenceBase::without_hyperplanes() const {
  std::vector<int> kept;
  kept.reserve(dims_.size());
  for (int d : dims_)
    if (d != n_ - 1) kept.push_back(d);
  return IncidenceBase(n_, std::move(kept));
}

std::vector<int> IncidenceBase::condition_dims() const {
  std::vector<int> out;
  out.reserve(dims_.size());
  for (int d : dims_)
    if (d != n_ - 1) out.push_back(d);
  return out;
}

std::string IncidenceBase::to_string() const {
  std::map<int, int> mult;
  for (int d : dims_) ++mult[d];
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [d, k] : mult) {
    if (!first) os << ", ";
    first = false;
    if (k > 1) os << k << "*";
    os << "P^" << d;
  }
  os << "} in P^" << n_;
  return os.str();
}

ValidationReport validate_base(const IncidenceBase& base) {
  ValidationReport rep;
  rep.lhs = base.incidence_lhs();
  rep.target = base.incidence_target();
  rep.valid = rep.lhs == rep.target;
  rep.hyperplanes = base.hyperplane_count();
  rep.points = base.point_count();
  return rep;
}

std::vector<IncidenceBase> catalog(int n) {
  if (n < 3) throw DomainError("catalog requires n >= 3");
  std::vector<IncidenceBase> out;
  long target = 2L * n - 3;
  // Multisets of dimensions in [1, n-2]; each space costs n-1-dim conditions
  // and the costs must sum to 2n-3.  Enumerate dims descending.
  std::vector<int> dims;
  std::function<void(int, long)> rec = [&](int max_dim, long remaining) {
    if (remaining == 0) {
      std::vector<int> sorted = dims;
      std::sort(sorted.begin(), sorted.end());
      out.emplace_back(n, std::move(sorted));
      return;
    }
    for (int d = max_dim; d >= 1; --d) {
      long cost = n - 1 - d;
      if (cost > remaining) break;
      dims.push_back(d);
      rec(d, remaining - cost);
      dims.pop_back();
    }
  };
  rec(n - 2, target);
  std::sort(out.begin(), out.end());
  return out;
}

IncidenceBase join_reduce(const IncidenceBase& base, int i, int j) {
  const auto& dims = base.dims();
  int r = base.space_count();
  if (i < 0 || j < 0 || i >= r || j >= r || i == j)
    throw DomainError("join_reduce: bad space indices");
  int n = base.ambient();
  if (dims[i] + dims[j] != n - 1)
    throw DomainError("join_reduce: spaces of dimensions " +
                      std::to_string(dims[i]) + " and " + std::to_string(dims[j]) +
                      " do not join in P^" + std::to_string(n));
  std::vector<int> out;
  out.reserve(dims.size());
  for (int k = 0; k < r; ++k) {
    if (k == i || k == j) {
      out.push_back(dims[k]);
    } else {
      if (dims[k] - 1 < 0)
        throw DomainError("join_reduce: reduction would drop a point below dimension 0");
      out.push_back(dims[k] - 1);
    }
  }
  return IncidenceBase(n - 1, std::move(out));
}

IncidenceBase elementary_transform(const IncidenceBase& base) {
  if (!base.is_valid())
    throw InvalidBaseError("elementary_transform requires an IS-valid base");
  const auto& dims = base.dims();
  if (dims.size() < 3)
    throw DomainError("elementary_transform requires at least three base spaces");
  if (dims[0] + dims[1] != base.ambient() - 1)
    throw DomainError("elementary_transform: the two smallest spaces must span a hyperplane "
                      "(projection from a scroll point joins them)");
  if (dims[2] < 1)
    throw DomainError("elementary_transform: reduction would drop a point below dimension 0");
  std::vector<int> out;
  out.reserve(dims.size());
  out.push_back(dims[0]);
  out.push_back(dims[1]);
  for (std::size_t k = 2; k < dims.size(); ++k) out.push_back(dims[k] - 1);
  return IncidenceBase(base.ambient() - 1, std::move(out));
}

}  // namespace scrolls
