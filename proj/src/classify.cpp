#include "scrolls/classify.hpp"

#include <string>
#include <vector>

#include "scrolls/schubert.hpp"

namespace scrolls {

void ScrollModel::validate() const {
  if (g < 0) throw DomainError("scroll model: genus must be nonnegative");
  if (e_trivial && e != 0)
    throw DomainError("scroll model: a linearly trivial twisting divisor has e = 0");
  if (e < -g) throw DomainError("scroll model: e >= -g fails");
  if (degree() < 1) throw DomainError("scroll model: degree 2m-e must be positive");
  if (i1 < 0 || i2 < 0) throw DomainError("scroll model: speciality summands must be >= 0");
  if (ambient() < 3) throw DomainError("scroll model: ambient dimension must be at least 3");
}

namespace {

IncidenceBase repeated(int n, std::initializer_list<std::pair<int, int>> blocks) {
  std::vector<int> dims;
  for (auto [dim, count] : blocks)
    for (int c = 0; c < count; ++c) dims.push_back(dim);
  return IncidenceBase(n, dims);
}

// Base of a decomposable incidence scroll from the directrix-span rule: one
// P^{m-e-g+i1}, then e+2-g+h^1 copies of P^{m-g+i2}, topped up with P^{n-2}
// spaces until the incidence count is met.  h^1(-e-divisor) vanishes in every
// classified case (rational base curve, or an elliptic twist of degree != 0,
// or a nontrivial degree-0 twist).
IncidenceBase directrix_count_base(const ScrollModel& model) {
  int n = model.ambient();
  int small = model.m - model.e - model.g + model.i1;
  int large = model.m - model.g + model.i2;
  int copies = model.e + 2 - model.g;
  std::vector<int> dims{small};
  for (int c = 0; c < copies; ++c) dims.push_back(large);
  long used = (n - 1 - small) + static_cast<long>(copies) * (n - 1 - large);
  long fillers = (2L * n - 3) - used;
  if (fillers < 0)
    throw ConsistencyFault("classify_g01: directrix spans exceed the incidence count");
  for (long c = 0; c < fillers; ++c) dims.push_back(n - 2);
  return IncidenceBase(n, std::move(dims));
}

IncidenceBase materialize_condition(const ScrollModel& model, int condition) {
  switch (condition) {
    case 1:
      if (model.e == 0) {
        // Rational with trivial twist: the quadric for m = 1, otherwise
        // {3 P^m, P^{m+1}} in P^{2m+1}.
        if (model.m == 1) return repeated(3, {{1, 3}});
        return repeated(2 * model.m + 1, {{model.m, 3}, {model.m + 1, 1}});
      }
      return directrix_count_base(model);
    case 2:
      return directrix_count_base(model);
    case 3:
      // The elliptic quintic, the fundamental scroll of P^4.
      return repeated(4, {{2, 5}});
    case 4:
      // Elliptic with trivial twist, m = 4: {3 P^3, 2 P^5} in P^7.
      return repeated(7, {{3, 3}, {5, 2}});
    case 5:
      return directrix_count_base(model);
    default:
      throw ConsistencyFault("classify_g01: no base for condition " + std::to_string(condition));
  }
}

}  // namespace

ClassifyVerdict classify_g01(const ScrollModel& model) {
  model.validate();
  if (model.g > 1)
    throw DomainError("classify_g01 covers genus 0 and 1 only");
  // A very ample class on a genus <= 1 surface has no speciality: both
  // first-cohomology summands vanish.
  if (model.i1 != 0 || model.i2 != 0)
    throw DomainError("classify_g01: speciality vanishes for genus <= 1 models");

  int condition = 0;
  if (model.g == 0 && (model.e == 0 || model.e == 1))
    condition = 1;
  else if (model.g == 0 && model.m == model.e + 1)
    condition = 2;
  else if (model.g == 1 && model.e == -1 && model.m == 2)
    condition = 3;
  else if (model.g == 1 && model.e_trivial && model.m == 4)
    condition = 4;
  else if (model.g == 1 && !model.e_trivial && model.e >= 0 && model.e <= 3 &&
           model.m == model.e + 3)
    condition = 5;

  if (condition == 0) return ClassifyVerdict{false, 0, std::nullopt};

  IncidenceBase base = materialize_condition(model, condition);
  if (!base.is_valid())
    throw ConsistencyFault("classify_g01 materialized a non-incidence base " + base.to_string());
  Int degree = curve_class_degree(base);
  if (degree != model.degree())
    throw ConsistencyFault("classify_g01 base " + base.to_string() + " has degree " +
                           degree.str() + ", expected " + std::to_string(model.degree()));
  if (base.ambient() != model.ambient())
    throw ConsistencyFault("classify_g01 base " + base.to_string() +
                           " lives in the wrong ambient space");
  return ClassifyVerdict{true, condition, std::move(base)};
}

DecomposableResult decomposable_incidence_test(const ScrollModel& model, int h1_of_minus_e) {
  model.validate();
  if (h1_of_minus_e < 0)
    throw DomainError("decomposable_incidence_test: h^1 must be nonnegative");
  if (model.e < 0)
    throw DomainError("decomposable_incidence_test: a decomposable normalized model has e >= 0");

  Int lhs = Int(model.e - model.g + h1_of_minus_e) * Int(model.m - model.e - model.g + model.i1);
  Int rhs = Int(model.m - model.g + model.i2 - 1);

  if (lhs > rhs) return DecomposableResult{DecomposableVerdict::NotIncidence, std::nullopt, lhs, rhs};
  if (lhs < rhs)
    return DecomposableResult{DecomposableVerdict::UndeterminedCase3, std::nullopt, lhs, rhs};
  // Equality: for g <= 2 the section-count side condition holds automatically.
  if (model.g > 2)
    return DecomposableResult{DecomposableVerdict::UndeterminedSideCondition, std::nullopt, lhs, rhs};
  int small = model.m - model.e - model.g + model.i1;
  int large = model.m - model.g + model.i2;
  int copies = model.e + 2 - model.g + h1_of_minus_e;
  std::vector<int> dims{small};
  for (int c = 0; c < copies; ++c) dims.push_back(large);
  IncidenceBase base(model.ambient(), std::move(dims));
  return DecomposableResult{DecomposableVerdict::Incidence, std::move(base), lhs, rhs};
}

}  // namespace scrolls
