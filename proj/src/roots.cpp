#include "prenichols/roots.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "prenichols/errors.hpp"

namespace prenichols {

std::int64_t cartan_entry(const BraidingMatrix& b, int i, int j, std::int64_t cap) {
  if (i == j) return 2;
  const CycNum& qii = b.q(i, i);
  const CycNum qt = qtilde(b, i, j);
  const auto ord = mul_order(qii);
  const std::int64_t bound = ord ? *ord - 1 : cap;
  CycNum qn = CycNum::one(b.ctx());
  for (std::int64_t n = 0; n <= bound; ++n) {
    // (n+1)_q = 0 happens exactly when ord(q) divides n+1 (q != 1).
    const bool qnum_zero = ord && ((n + 1) % *ord == 0);
    if (qnum_zero || (qn * qt).is_one()) return -n;
    qn = qn * qii;
  }
  throw InfiniteTypeError("no finite Cartan entry c_" + std::to_string(i + 1) + std::to_string(j + 1) +
                          " within the search bound");
}

IntMatrix cartan_matrix(const BraidingMatrix& b, std::int64_t cap) {
  IntMatrix c(b.theta());
  for (int i = 0; i < b.theta(); ++i)
    for (int j = 0; j < b.theta(); ++j) c.at(i, j) = cartan_entry(b, i, j, cap);
  return c;
}

IntMatrix simple_reflection(const IntMatrix& cartan, int i) {
  const int n = cartan.size();
  IntMatrix s = IntMatrix::identity(n);
  for (int j = 0; j < n; ++j) s.at(i, j) -= cartan.at(i, j);
  return s;
}

namespace {

BraidingMatrix reflect_with(const BraidingMatrix& b, const IntMatrix& s) {
  const int n = b.theta();
  std::vector<CycNum> entries;
  entries.reserve(static_cast<std::size_t>(n * n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) entries.push_back(chi_eval(b, s.column(j), s.column(k)));
  return BraidingMatrix(b.ctx(), n, std::move(entries));
}

}  // namespace

BraidingMatrix reflect_object(const BraidingMatrix& b, int i, std::int64_t cap) {
  IntMatrix c(b.theta());
  for (int j = 0; j < b.theta(); ++j) c.at(i, j) = cartan_entry(b, i, j, cap);
  return reflect_with(b, simple_reflection(c, i));
}

bool is_cartan_vertex(const BraidingMatrix& b, const IntMatrix& cartan, int i) {
  for (int j = 0; j < b.theta(); ++j) {
    if (j == i) continue;
    if (qtilde(b, i, j) != pow(b.q(i, i), cartan.at(i, j))) return false;
  }
  return true;
}

GroupoidAtlas explore_groupoid(const BraidingMatrix& b, const RootCaps& caps) {
  GroupoidAtlas atlas;
  const int n = b.theta();
  std::unordered_map<std::string, std::size_t> object_index;

  auto add_object = [&](const BraidingMatrix& x) -> std::size_t {
    auto it = object_index.find(x.key());
    if (it != object_index.end()) return it->second;
    const std::size_t id = atlas.objects.size();
    object_index.emplace(x.key(), id);
    atlas.objects.push_back(x);
    atlas.cartan.push_back(cartan_matrix(x, caps.cartan_search));
    atlas.arrows.emplace_back();
    return id;
  };
  add_object(b);

  // Objects first: arrows rho_i for every object.
  for (std::size_t x = 0; x < atlas.objects.size(); ++x) {
    for (int i = 0; i < n; ++i) {
      if (atlas.objects.size() > caps.max_objects) return atlas;
      const BraidingMatrix y = reflect_with(atlas.objects[x], simple_reflection(atlas.cartan[x], i));
      const std::size_t yid = add_object(y);
      atlas.arrows[x].push_back(yid);
    }
  }
  if (atlas.objects.size() > caps.max_objects) return atlas;

  // Morphisms into the root object: w s_i^{y} for every stored (w, y).
  std::set<std::pair<std::string, std::size_t>> seen;
  std::deque<std::size_t> queue;
  atlas.morphisms.push_back(Morphism{IntMatrix::identity(n), 0});
  seen.emplace(atlas.morphisms[0].root_map.key(), 0);
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t m = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      const std::size_t y = atlas.morphisms[m].target;
      Morphism next{atlas.morphisms[m].root_map * simple_reflection(atlas.cartan[y], i), atlas.arrows[y][i]};
      if (!seen.emplace(next.root_map.key(), next.target).second) continue;
      if (atlas.morphisms.size() >= caps.max_morphisms) return atlas;
      atlas.morphisms.push_back(std::move(next));
      queue.push_back(atlas.morphisms.size() - 1);
    }
  }
  atlas.complete = true;
  return atlas;
}

std::size_t RootSystemReport::cartan_count() const {
  return static_cast<std::size_t>(std::count_if(roots.begin(), roots.end(), [](const RootDatum& r) { return r.cartan; }));
}

std::optional<std::size_t> RootSystemReport::index_of(const IntVector& beta) const {
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (roots[k].beta == beta) return k;
  return std::nullopt;
}

std::vector<IntVector> cartan_roots(const GroupoidAtlas& atlas) {
  if (!atlas.complete) throw CapExceeded("Weyl groupoid atlas is incomplete; possibly infinite groupoid");
  std::set<IntVector> out;
  const int n = atlas.objects.front().theta();
  for (const auto& m : atlas.morphisms) {
    const BraidingMatrix& y = atlas.objects[m.target];
    for (int i = 0; i < n; ++i) {
      if (!is_cartan_vertex(y, atlas.cartan[m.target], i)) continue;
      IntVector v = m.root_map.column(i);
      if (!is_nonnegative(v)) v = -1 * v;
      out.insert(v);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<IntVector> cartan_roots_along_word(const BraidingMatrix& b, const std::vector<int>& word, std::int64_t cap) {
  std::vector<IntVector> out;
  BraidingMatrix y = b;
  IntMatrix w = IntMatrix::identity(b.theta());
  for (int i : word) {
    const IntMatrix c = cartan_matrix(y, cap);
    if (is_cartan_vertex(y, c, i)) out.push_back(w.column(i));
    const IntMatrix s = simple_reflection(c, i);
    w = w * s;
    y = reflect_with(y, s);
  }
  return out;
}

std::array<std::int64_t, 3> gk_dimensions(const RootSystemReport& report) {
  const auto o = static_cast<std::int64_t>(report.cartan_count());
  return {o, o + report.theta, 2 * o + 2 * report.theta};
}

std::vector<IntVector> hermite_normal_form(std::vector<IntVector> rows) {
  if (rows.empty()) return {};
  const std::size_t ncols = rows.front().size();
  std::vector<IntVector> basis;
  std::size_t r0 = 0;
  for (std::size_t c = 0; c < ncols && r0 < rows.size(); ++c) {
    // Euclid on column c among rows r0..end.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = r0; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (best == rows.size() || std::llabs(rows[r][c]) < std::llabs(rows[best][c]))) best = r;
      if (best == rows.size()) break;
      std::swap(rows[r0], rows[best]);
      bool reduced = true;
      for (std::size_t r = r0 + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        const std::int64_t f = rows[r][c] / rows[r0][c];
        for (std::size_t k = 0; k < ncols; ++k) rows[r][k] -= f * rows[r0][k];
        if (rows[r][c] != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (rows[r0][c] == 0) continue;
    if (rows[r0][c] < 0)
      for (auto& x : rows[r0]) x = -x;
    for (std::size_t r = 0; r < r0; ++r) {
      // Reduce entries above the pivot into [0, pivot).
      std::int64_t f = rows[r][c] / rows[r0][c];
      if (rows[r][c] - f * rows[r0][c] < 0) --f;
      for (std::size_t k = 0; k < ncols; ++k) rows[r][k] -= f * rows[r0][k];
    }
    ++r0;
  }
  for (std::size_t r = 0; r < r0; ++r) basis.push_back(rows[r]);
  return basis;
}

std::vector<IntVector> z_lattice(const RootSystemReport& report) {
  std::vector<IntVector> gens;
  for (const auto& r : report.roots) {
    if (!r.cartan) continue;
    if (!r.height) throw DomainError("Cartan root with infinite height");
    gens.push_back(*r.height * r.beta);
  }
  return hermite_normal_form(std::move(gens));
}

RootSystemReport positive_roots(const BraidingMatrix& b, const RootCaps& caps) {
  const int n = b.theta();
  RootSystemReport rep;
  rep.theta = n;
  rep.cartan_matrix = cartan_matrix(b, caps.cartan_search);

  BraidingMatrix y = b;
  IntMatrix yc = rep.cartan_matrix;
  IntMatrix w = IntMatrix::identity(n);
  std::set<IntVector> produced;
  while (true) {
    int chosen = -1;
    for (int i = 0; i < n; ++i) {
      const IntVector v = w.column(i);
      if (is_nonnegative(v) && !produced.count(v)) {
        chosen = i;
        break;
      }
    }
    if (chosen < 0) break;
    if (rep.longest_word.size() >= caps.max_length)
      throw InfiniteTypeError("root system appears infinite (longest-word cap reached)");
    RootDatum d;
    d.beta = w.column(chosen);
    d.self_braiding = chi_eval(b, d.beta, d.beta);
    d.height = mul_order(d.self_braiding);
    d.cartan = is_cartan_vertex(y, yc, chosen);
    produced.insert(d.beta);
    rep.roots.push_back(std::move(d));
    rep.longest_word.push_back(chosen);
    const IntMatrix s = simple_reflection(yc, chosen);
    w = w * s;
    y = reflect_with(y, s);
    yc = cartan_matrix(y, caps.cartan_search);
  }

  const GroupoidAtlas atlas = explore_groupoid(b, caps);
  if (!atlas.complete) throw CapExceeded("Weyl groupoid exploration hit its cap; possibly infinite groupoid");
  rep.groupoid_object_count = atlas.objects.size();
  rep.groupoid_morphism_count = atlas.morphisms.size();

  rep.coxeter_m = IntMatrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        rep.coxeter_m.at(i, j) = 1;
        continue;
      }
      std::int64_t cnt = 0;
      for (const auto& r : rep.roots) {
        bool inside = true;
        for (int k = 0; k < n; ++k)
          if (k != i && k != j && r.beta[k] != 0) inside = false;
        if (inside) ++cnt;
      }
      rep.coxeter_m.at(i, j) = cnt;
    }

  rep.gk_dims = gk_dimensions(rep);
  rep.z_lattice_basis = z_lattice(rep);
  if (static_cast<int>(rep.z_lattice_basis.size()) == n) {
    std::int64_t idx = 1;
    for (int k = 0; k < n; ++k) idx *= rep.z_lattice_basis[k][k];
    rep.z_lattice_index = idx;
  }
  return rep;
}

}  // namespace prenichols
