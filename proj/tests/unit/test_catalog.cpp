#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "prenichols/catalog.hpp"
#include "prenichols/errors.hpp"
#include "prenichols/hilbert.hpp"
#include "test_support.hpp"

using namespace prenichols;
using testing_support::vec;

namespace {

CycNum qt(const BraidingMatrix& b, int i, int j) { return b.q(i, j) * b.q(j, i); }

// The chain constraints of super type A, checked directly on the matrix (0-based).
void check_super_a_constraints(const BraidingMatrix& b, const std::vector<int>& marked, const CycNum& q) {
  const int theta = b.theta();
  const CycNum one = CycNum::one(b.ctx());
  for (int i = 0; i < theta; ++i)
    for (int j = 0; j < theta; ++j)
      if (std::abs(i - j) > 1) CHECK(qt(b, i, j).is_one());
  for (int i = 0; i < theta; ++i) {
    const bool odd = std::find(marked.begin(), marked.end(), i + 1) != marked.end();
    const CycNum left = i > 0 ? qt(b, i - 1, i) : one;
    const CycNum right = i + 1 < theta ? qt(b, i, i + 1) : one;
    if (odd) {
      CHECK(b.q(i, i) == -one);
      if (i > 0 && i + 1 < theta) CHECK((left * right).is_one());
    } else {
      if (i > 0) CHECK((b.q(i, i) * left).is_one());
      if (i + 1 < theta) CHECK((b.q(i, i) * right).is_one());
    }
  }
  if (theta >= 2) CHECK(pow(b.q(0, 0), 2) * qt(b, 0, 1) == q);
}

}  // namespace

TEST_CASE("super type A entries") {
  const auto e = super_type_A(2, 3, {2});
  const auto& b = e.braiding;
  const CycNum q = CycNum::root_power(b.ctx(), 2);  // order 3 in Q(zeta_6)
  CHECK(b.q(1, 1) == -CycNum::one(b.ctx()));
  CHECK((b.q(0, 0) * qt(b, 0, 1)).is_one());
  CHECK(b.q(0, 0) == q);
  CHECK(e.name == "super-a-2-3-m2");

  for (int theta = 2; theta <= 4; ++theta)
    for (int mask = 0; mask < (1 << theta); ++mask) {
      std::vector<int> marked;
      for (int i = 0; i < theta; ++i)
        if (mask & (1 << i)) marked.push_back(i + 1);
      for (int n : {3, 4, 5}) {
        const auto s = super_type_A(theta, n, marked);
        CAPTURE(s.name);
        const int order = std::lcm(2, n);
        check_super_a_constraints(s.braiding, marked, CycNum::root_power(s.braiding.ctx(), order / n));
        const auto r = check_expected(s);
        CHECK_MESSAGE(r.passed, r.witness.value_or(""));
      }
    }
  // No odd vertices: Cartan type A.
  const auto a = super_type_A(3, 5, {});
  const IntMatrix c = cartan_matrix(a.braiding);
  CHECK(c.at(0, 1) == -1);
  CHECK(c.at(1, 2) == -1);
  CHECK(c.at(0, 2) == 0);
  CHECK(positive_roots(a.braiding).cartan_count() == 6);

  CHECK_THROWS_AS(super_type_A(2, 2, {}), ValidationError);
  CHECK_THROWS_AS(super_type_A(2, 3, {3}), ValidationError);
  CHECK_THROWS_AS(super_type_A(1, 3, {}), ValidationError);
}

TEST_CASE("Cartan type entries") {
  const auto a2 = cartan_type("A2", 3);
  const auto rep = positive_roots(a2.braiding);
  REQUIRE(rep.roots.size() == 3);
  for (const auto& r : rep.roots) CHECK(r.cartan);
  CHECK(positive_roots(cartan_type("A1", 3).braiding).roots.size() == 1);
  const auto b2 = cartan_type("B2", 5);
  CHECK(b2.braiding.q(0, 1) == b2.braiding.q(1, 0));
  CHECK(positive_roots(b2.braiding).roots.size() == 4);
  CHECK_THROWS_AS(cartan_type("G2", 3), ValidationError);
  CHECK_THROWS_AS(cartan_type("E8", 7), ValidationError);
}

TEST_CASE("catalog entries reproduce their data and relations") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const auto e = catalog_lookup(name);
    CHECK(e.name == name);
    const auto r = check_expected(e);
    CHECK_MESSAGE(r.passed, r.witness.value_or(""));
    auto j = QuotientView::nichols(e.braiding);
    for (const auto& g : e.relations.generators) CHECK(j->is_in_ideal(g));
  }
  CHECK_THROWS_AS(catalog_lookup("nope"), ValidationError);
}

TEST_CASE("br(2;5) W third relation scalar") {
  // The paper writes [E_1, E_{3a1+2a2}]_c + r12 E_{2a1+a2}^2 with its own normalizations.
  const auto w = br25('W');
  const auto& b = w.braiding;
  const FreeElem x = commutator_c(b, FreeElem::letter(b.ctx(), 0), w.recipes.at(vec({3, 2})).expand(b));
  const FreeElem y = power(w.recipes.at(vec({2, 1})).expand(b), 2);
  auto j = QuotientView::nichols(b);
  CHECK(j->is_in_ideal(w.relations.generators[2]));
  CHECK_FALSE(j->is_in_ideal(x));
  CHECK_FALSE(j->is_in_ideal(y));

  // The printed four relations leave an extra dimension at (5,3); the
  // appended fifth relation closes it.
  RelationSet printed = w.relations;
  printed.generators.erase(printed.generators.begin() + 4, printed.generators.end());
  auto q4 = QuotientView::prenichols(b, printed);
  CHECK(q4->is_in_ideal(w.relations.generators[3]));
  CHECK(quotient_dim(*q4, vec({5, 3})) == 15);
  CHECK(j->quotient_dim(vec({5, 3})) == 14);
  auto q5 = QuotientView::prenichols(b, w.relations);
  CHECK(quotient_dim(*q5, vec({5, 3})) == 14);
  RelationSet three = printed;
  three.generators.erase(three.generators.begin() + 3, three.generators.end());
  CHECK(QuotientView::prenichols(b, three)->is_in_ideal(w.relations.generators[3]));
}

TEST_CASE("pre-Nichols presentations match the Hilbert product formula") {
  for (const std::string name : {"br25-V", "br25-W", "super-a-2-3-m2", "super-a-2-3-m12", "super-a-2-3", "cartan-A2-3",
                                 "cartan-B2-5", "super-a-3-3-m2"}) {
    CAPTURE(name);
    const auto e = catalog_lookup(name);
    auto q = QuotientView::prenichols(e.braiding, e.relations);
    const int theta = e.braiding.theta();
    const std::int64_t top = theta == 2 ? 8 : 5;
    const auto h = prenichols_hilbert(positive_roots(e.braiding), top);
    for (const auto& delta : multidegrees_up_to(theta, top)) {
      CAPTURE(to_string(delta));
      CHECK(quotient_dim(*q, delta) == coefficient(h, delta));
    }
  }
}
