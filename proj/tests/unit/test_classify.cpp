#include <doctest.h>

#include "scrolls/classify.hpp"
#include "scrolls/schubert.hpp"

using namespace scrolls;

TEST_CASE("model validation") {
  ScrollModel negative_twist{0, -1, 2};
  CHECK_THROWS_AS(negative_twist.validate(), DomainError);  // rational needs e >= 0
  ScrollModel empty{0, 0, 0};
  CHECK_THROWS_AS(empty.validate(), DomainError);  // degree must be positive
  ScrollModel trivial_flag{1, 1, 4, 0, 0, true};
  CHECK_THROWS_AS(trivial_flag.validate(), DomainError);  // e ~ 0 forces e = 0
}

TEST_CASE("the five classification conditions") {
  // g = 0, e in {0, 1}.
  auto c1 = classify_g01(ScrollModel{0, 1, 3});
  CHECK(c1.incidence);
  CHECK(c1.condition == 1);
  CHECK(c1.base == IncidenceBase(6, {2, 3, 3, 3}));

  // g = 0, m = e + 1.
  auto c2 = classify_g01(ScrollModel{0, 3, 4});
  CHECK(c2.incidence);
  CHECK(c2.condition == 2);
  CHECK(c2.base == IncidenceBase(6, {1, 4, 4, 4, 4, 4}));

  // g = 1, e = -1, m = 2: the elliptic quintic.
  auto c3 = classify_g01(ScrollModel{1, -1, 2});
  CHECK(c3.incidence);
  CHECK(c3.condition == 3);
  CHECK(c3.base == IncidenceBase(4, {2, 2, 2, 2, 2}));

  // g = 1, trivial twist, m = 4.
  auto c4 = classify_g01(ScrollModel{1, 0, 4, 0, 0, true});
  CHECK(c4.incidence);
  CHECK(c4.condition == 4);
  CHECK(c4.base == IncidenceBase(7, {3, 3, 3, 5, 5}));

  // g = 1, nontrivial twist, m = e + 3.
  auto c5 = classify_g01(ScrollModel{1, 0, 3});
  CHECK(c5.incidence);
  CHECK(c5.condition == 5);
  CHECK(c5.base == IncidenceBase(5, {2, 2, 3, 3, 3}));
  auto c5e3 = classify_g01(ScrollModel{1, 3, 6});
  CHECK(c5e3.incidence);
  CHECK(c5e3.base == IncidenceBase(8, {2, 5, 5, 5, 5}));

  // Not an incidence scroll.
  CHECK(!classify_g01(ScrollModel{0, 3, 7}).incidence);
  CHECK(!classify_g01(ScrollModel{1, 0, 5, 0, 0, true}).incidence);
  CHECK(!classify_g01(ScrollModel{1, 4, 7}).incidence);

  CHECK_THROWS_AS((void)classify_g01(ScrollModel{2, 0, 5}), DomainError);
  ScrollModel special{1, 0, 4, 1, 0, true};
  CHECK_THROWS_AS((void)classify_g01(special), DomainError);
}

TEST_CASE("every yes-base carries the model invariants") {
  for (int g = 0; g <= 1; ++g) {
    for (int e = -1; e <= 5; ++e) {
      for (int m = 1; m <= 8; ++m) {
        for (bool e_triv : {false, true}) {
          if (e_triv && e != 0) continue;
          if (g == 0 && !e_triv && e == 0) continue;  // rational degree-0 twist is trivial
          if (g == 0 && (e < 0 || m < e + 1)) continue;
          if (g == 1 && e == -1 && m < 2) continue;
          if (g == 1 && e == 0 && m < 3) continue;
          if (g == 1 && e >= 1 && m < e + 3) continue;
          ScrollModel model{g, e, m, 0, 0, e_triv};
          auto verdict = classify_g01(model);  // internal checks throw on any lapse
          if (verdict.incidence) {
            CHECK(verdict.base->is_valid());
            CHECK(curve_class_degree(*verdict.base) == model.degree());
            CHECK(verdict.base->ambient() == model.ambient());
          }
        }
      }
    }
  }
}

TEST_CASE("decomposable incidence comparison") {
  // Quadric: equality with both directrix spans equal to a line.
  auto quadric = decomposable_incidence_test(ScrollModel{0, 0, 1, 0, 0, true}, 0);
  CHECK(quadric.verdict == DecomposableVerdict::Incidence);
  CHECK(quadric.base == IncidenceBase(3, {1, 1, 1}));

  // Strict ">": not an incidence scroll.
  auto too_big = decomposable_incidence_test(ScrollModel{0, 2, 3}, 1);
  CHECK(too_big.verdict == DecomposableVerdict::NotIncidence);
  CHECK(too_big.lhs > too_big.rhs);
  CHECK(!too_big.base.has_value());

  // Strict "<": out of this test's range.
  auto open_case = decomposable_incidence_test(ScrollModel{0, 0, 3, 0, 0, true}, 0);
  CHECK(open_case.verdict == DecomposableVerdict::UndeterminedCase3);

  // Equality at higher genus: the section-count side condition is not
  // derivable from the discrete data.
  auto high_genus = decomposable_incidence_test(ScrollModel{3, 4, 9, 3, 0}, 0);
  CHECK(high_genus.lhs == high_genus.rhs);
  CHECK(high_genus.verdict == DecomposableVerdict::UndeterminedSideCondition);

  CHECK_THROWS_AS(
      (void)decomposable_incidence_test(ScrollModel{1, -1, 2}, 0), DomainError);
}

TEST_CASE("incidence verdict bases are verified incidence bases") {
  // The cubic scroll by equality: g=0, e=1, m=2, h^1 = 0.
  auto cubic = decomposable_incidence_test(ScrollModel{0, 1, 2}, 0);
  CHECK(cubic.verdict == DecomposableVerdict::Incidence);
  REQUIRE(cubic.base.has_value());
  CHECK(cubic.base->is_valid());
  CHECK(curve_class_degree(*cubic.base) == 3);
}
