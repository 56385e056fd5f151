#include <algorithm>
#include <set>

#include "doctest.h"
#include "prenichols/errors.hpp"
#include "prenichols/roots.hpp"
#include "test_support.hpp"

using namespace prenichols;
using testing_support::braiding;
using testing_support::vec;

namespace {

BraidingMatrix br25_v() { return braiding(5, 2, {"z", "z", "z", "-1"}); }
BraidingMatrix br25_w() { return braiding(5, 2, {"-z^3", "-z^4", "-z^4", "-1"}); }

std::vector<IntVector> betas(const RootSystemReport& r) {
  std::vector<IntVector> out;
  for (const auto& d : r.roots) out.push_back(d.beta);
  return out;
}

std::set<IntVector> cartan_set(const RootSystemReport& r) {
  std::set<IntVector> out;
  for (const auto& d : r.roots)
    if (d.cartan) out.insert(d.beta);
  return out;
}

}  // namespace

TEST_CASE("bicharacter") {
  const auto v = br25_v();
  auto ctx = v.ctx();
  const CycNum z = CycNum::root_power(ctx, 1);
  CHECK(chi_eval(v, vec({1, 0}), vec({0, 1})) == v.q(0, 1));
  CHECK(chi_eval(v, vec({0, 0}), vec({3, -2})).is_one());
  CHECK(chi_eval(v, vec({1, 1}), vec({1, 1})) == -pow(z, 3));
  CHECK(qtilde(v, 0, 1) == pow(z, 2));
  CHECK_THROWS_AS(qtilde(v, 1, 1), DomainError);

  // Biadditivity on random-ish vectors.
  const IntVector a{2, -1}, a2{-3, 4}, b{1, 5};
  CHECK(chi_eval(v, a + a2, b) == chi_eval(v, a, b) * chi_eval(v, a2, b));
  CHECK(chi_eval(v, b, a + a2) == chi_eval(v, b, a) * chi_eval(v, b, a2));

  // Non-monomial entries take the generic path.
  const auto g = braiding(5, 2, {"z", "2", "1/2*z", "-1"});
  CHECK(!g.monomial());
  CHECK(chi_eval(g, a + a2, b) == chi_eval(g, a, b) * chi_eval(g, a2, b));
  CHECK(chi_eval(g, vec({1, 1}), vec({1, 0})) == g.q(0, 0) * g.q(1, 0));
}

TEST_CASE("braiding validation") {
  CHECK_THROWS_AS(braiding(5, 2, {"1", "z", "z", "-1"}), ValidationError);
  CHECK_THROWS_AS(braiding(5, 2, {"z", "0", "z", "-1"}), ValidationError);
  CHECK_THROWS_AS(braiding(5, 2, {"z", "z", "z"}), ValidationError);
}

TEST_CASE("pullback and lambda") {
  const auto v = br25_v();
  const IntMatrix id = IntMatrix::identity(2);
  CHECK(pullback(v, id, vec({1, 2}), vec({3, 1})) == chi_eval(v, vec({1, 2}), vec({3, 1})));
  const IntMatrix s2 = simple_reflection(cartan_matrix(v), 1);
  CHECK(pullback(v, s2, vec({0, 1}), vec({0, 1})) == v.q(1, 1));
  const BraidingMatrix r2 = reflect_object(v, 1);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) CHECK(pullback(v, s2, unit_vector(2, j), unit_vector(2, k)) == r2.q(j, k));

  IntMatrix bad(2);
  bad.at(0, 0) = 2;
  bad.at(1, 1) = 1;
  CHECK_THROWS_AS(pullback(v, bad, vec({1, 0}), vec({1, 0})), ValidationError);

  // Composition: (w w')^* = pullback along the composed inverse.
  const IntMatrix s1 = simple_reflection(cartan_matrix(v), 0);
  const IntMatrix w = s2 * s1;
  const BraidingMatrix composed = pullback_matrix(pullback_matrix(v, s1), s2);
  CHECK(composed == pullback_matrix(v, w));

  const auto z = CycNum::root_power(v.ctx(), 1);
  CHECK(lambda_scalar(v, 1, 0, -1).value == pow(z, 2) - CycNum::one(v.ctx()));
  CHECK(!lambda_scalar(v, 1, 0, -1).degenerate);
  const auto l0 = lambda_scalar(v, 1, 0, 0);
  CHECK(l0.value.is_zero());
  CHECK(l0.degenerate);
}

TEST_CASE("br(2;5) root data") {
  const auto v = br25_v();
  const auto w = br25_w();
  CHECK(cartan_matrix(v).at(0, 1) == -3);
  CHECK(cartan_matrix(v).at(1, 0) == -1);
  CHECK(cartan_matrix(w).at(0, 1) == -4);
  CHECK(cartan_matrix(w).at(1, 0) == -1);
  CHECK(reflect_object(v, 0) == v);
  CHECK(reflect_object(w, 0) == w);
  CHECK(reflect_object(v, 1) == w);
  CHECK(reflect_object(w, 1) == v);

  const auto rv = positive_roots(v);
  CHECK(betas(rv) == std::vector<IntVector>{{1, 0}, {3, 1}, {2, 1}, {5, 3}, {3, 2}, {4, 3}, {1, 1}, {0, 1}});
  CHECK(cartan_set(rv) == std::set<IntVector>{{1, 0}, {2, 1}, {3, 2}, {1, 1}});
  CHECK(rv.gk_dims == std::array<std::int64_t, 3>{4, 6, 12});
  CHECK(rv.groupoid_object_count == 2);

  const auto rw = positive_roots(w);
  CHECK(betas(rw) == std::vector<IntVector>{{1, 0}, {4, 1}, {3, 1}, {5, 2}, {2, 1}, {3, 2}, {1, 1}, {0, 1}});
  CHECK(cartan_set(rw) == std::set<IntVector>{{1, 0}, {3, 1}, {2, 1}, {1, 1}});

  // Heights and the lattice of N_beta beta.
  for (const auto& d : rv.roots) CHECK(d.height == mul_order(d.self_braiding));
  CHECK(rv.roots[0].height == 5);
  CHECK(rv.roots[6].height == 10);
  // Independent HNF oracle: span{5a1, 20a1+10a2, 15a1+10a2, 10a1+10a2} = <5a1, 10a2>.
  CHECK(rv.z_lattice_basis == std::vector<IntVector>{{5, 0}, {0, 10}});
  CHECK(rv.z_lattice_index == 50);

  // Cartan roots by atlas and along the word agree.
  const auto atlas = explore_groupoid(v);
  const auto via_atlas = cartan_roots(atlas);
  const auto along = cartan_roots_along_word(v, rv.longest_word);
  CHECK(std::set<IntVector>(via_atlas.begin(), via_atlas.end()) == cartan_set(rv));
  CHECK(std::set<IntVector>(along.begin(), along.end()) == cartan_set(rv));
}

TEST_CASE("Cartan type A2 and rank one") {
  const auto a2 = braiding(3, 2, {"z^2", "z^2", "z^2", "z^2"});  // q^{c_ij}, q = z
  const auto rep = positive_roots(a2);
  CHECK(betas(rep) == std::vector<IntVector>{{1, 0}, {1, 1}, {0, 1}});
  CHECK(rep.cartan_count() == 3);
  CHECK(rep.groupoid_object_count == 1);
  CHECK(rep.groupoid_morphism_count == 6);
  CHECK(reflect_object(a2, 0) == a2);

  const auto r1 = braiding(5, 1, {"z"});
  const auto rr = positive_roots(r1);
  CHECK(betas(rr) == std::vector<IntVector>{{1}});
  CHECK(rr.z_lattice_basis == std::vector<IntVector>{{5}});
  const auto atlas = explore_groupoid(r1);
  CHECK(atlas.objects.size() == 1);
  CHECK(atlas.arrows[0].size() == 1);

  // q~ = 1 gives c = 0.
  const auto split = braiding(5, 2, {"z", "z", "z^4", "-1"});
  CHECK(cartan_entry(split, 0, 1) == 0);
}

TEST_CASE("infinite type detection") {
  const auto inf = braiding(5, 2, {"2", "2", "1", "z"});
  CHECK_THROWS_AS(cartan_entry(inf, 0, 1, 50), InfiniteTypeError);
}

TEST_CASE("GRS axioms on atlases") {
  for (const auto& b : {br25_v(), br25_w(), braiding(3, 2, {"z^2", "z^2", "z^2", "z^2"})}) {
    const auto atlas = explore_groupoid(b);
    REQUIRE(atlas.complete);
    for (std::size_t x = 0; x < atlas.objects.size(); ++x)
      for (int i = 0; i < b.theta(); ++i) {
        const std::size_t y = atlas.arrows[x][i];
        CHECK(atlas.arrows[y][i] == x);
        // Row invariance c^x_{ij} = c^{rho_i x}_{ij}.
        for (int j = 0; j < b.theta(); ++j) CHECK(atlas.cartan[x].at(i, j) == atlas.cartan[y].at(i, j));
      }
    for (const auto& m : atlas.morphisms) CHECK(pullback_matrix(b, m.root_map.inverse()) == atlas.objects[m.target]);
    // s_i(Delta^x) = Delta^{rho_i x}, positivity split, simple-multiple axiom.
    for (std::size_t x = 0; x < atlas.objects.size(); ++x) {
      const auto rx = positive_roots(atlas.objects[x]);
      std::set<IntVector> all;
      for (const auto& d : rx.roots) {
        all.insert(d.beta);
        all.insert(-1 * d.beta);
        CHECK(is_nonnegative(d.beta));
      }
      for (int i = 0; i < b.theta(); ++i) {
        std::size_t mult = 0;
        for (const auto& r : all) {
          IntVector rest = r;
          rest[i] = 0;
          if (std::all_of(rest.begin(), rest.end(), [](auto t) { return t == 0; })) ++mult;
        }
        CHECK(mult == 2);
        const auto ry = positive_roots(atlas.objects[atlas.arrows[x][i]]);
        std::set<IntVector> ally;
        for (const auto& d : ry.roots) {
          ally.insert(d.beta);
          ally.insert(-1 * d.beta);
        }
        const IntMatrix s = simple_reflection(atlas.cartan[x], i);
        std::set<IntVector> img;
        for (const auto& r : all) img.insert(s.apply(r));
        CHECK(img == ally);
      }
      // (rho_i rho_j)^{m_ij} = id on objects.
      for (int i = 0; i < b.theta(); ++i)
        for (int j = 0; j < b.theta(); ++j) {
          if (i == j) continue;
          std::size_t cur = x;
          for (std::int64_t t = 0; t < rx.coxeter_m.at(i, j); ++t) cur = atlas.arrows[atlas.arrows[cur][j]][i];
          CHECK(cur == x);
        }
    }
  }
}
