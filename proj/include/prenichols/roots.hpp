#ifndef PRENICHOLS_ROOTS_HPP
#define PRENICHOLS_ROOTS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "prenichols/bichar.hpp"

namespace prenichols {

struct RootCaps {
  std::int64_t cartan_search = 1000;   // bound on n when the diagonal entry has infinite order
  std::size_t max_objects = 1000;
  std::size_t max_morphisms = 1000000;
  std::size_t max_length = 10000;      // longest-word length
};

// -c_ij = min{ n >= 0 : (n+1)_{q_ii} (1 - q_ii^n q~_ij) = 0 }, c_ii = 2.
// Throws InfiniteTypeError when no such n exists within the search bound.
std::int64_t cartan_entry(const BraidingMatrix& b, int i, int j, std::int64_t cap = 1000);
IntMatrix cartan_matrix(const BraidingMatrix& b, std::int64_t cap = 1000);

// s_i(alpha_j) = alpha_j - c_ij alpha_i.
IntMatrix simple_reflection(const IntMatrix& cartan, int i);

// rho_i(B): entry (j,k) = chi(s_i alpha_j, s_i alpha_k).
BraidingMatrix reflect_object(const BraidingMatrix& b, int i, std::int64_t cap = 1000);

// i is a Cartan vertex when q~_ij = q_ii^{c_ij} for every j != i.
bool is_cartan_vertex(const BraidingMatrix& b, const IntMatrix& cartan, int i);

struct Morphism {
  // s_{i_1}^{x} s_{i_2} ... s_{i_k}: coordinates of `target` mapped to
  // coordinates of the root object.  The target bicharacter is the
  // pullback of the root bicharacter along root_map^{-1}.
  IntMatrix root_map;
  std::size_t target = 0;
};

struct GroupoidAtlas {
  std::vector<BraidingMatrix> objects;            // objects[0] is the input
  std::vector<IntMatrix> cartan;                  // per object
  std::vector<std::vector<std::size_t>> arrows;   // arrows[x][i] = index of rho_i(x)
  std::vector<Morphism> morphisms;                // all morphisms into the root object
  bool complete = false;
};

// Breadth-first closure of the Weyl groupoid component of b.  Hitting a cap
// leaves complete == false instead of throwing.
GroupoidAtlas explore_groupoid(const BraidingMatrix& b, const RootCaps& caps = {});

struct RootDatum {
  IntVector beta;
  std::optional<std::int64_t> height;   // ord chi(beta, beta); nullopt = infinite
  bool cartan = false;
  CycNum self_braiding;
};

struct RootSystemReport {
  int theta = 0;
  IntMatrix cartan_matrix;
  std::vector<RootDatum> roots;            // beta_1 < ... < beta_M
  std::vector<int> longest_word;           // 0-based vertices i_1 ... i_M
  std::size_t groupoid_object_count = 0;
  std::size_t groupoid_morphism_count = 0;
  IntMatrix coxeter_m;                     // m_ij
  std::array<std::int64_t, 3> gk_dims{};   // (|O|, |O| + theta, 2|O| + 2 theta)
  std::vector<IntVector> z_lattice_basis;  // Hermite normal form rows
  std::optional<std::int64_t> z_lattice_index;

  std::size_t cartan_count() const;
  std::optional<std::size_t> index_of(const IntVector& beta) const;
};

// Greedy reduced longest word (smallest admissible vertex first) and the
// attached root data.  Throws InfiniteTypeError when the word exceeds
// caps.max_length and CapExceeded when the atlas cannot be closed.
RootSystemReport positive_roots(const BraidingMatrix& b, const RootCaps& caps = {});

// Positive representatives of w(alpha_i) over all atlas morphisms w: y -> b
// and Cartan vertices i of y.  Requires a complete atlas.
std::vector<IntVector> cartan_roots(const GroupoidAtlas& atlas);

// Cartan roots read off along the longest word: beta_k with i_k a Cartan
// vertex of rho_{i_{k-1}} ... rho_{i_1}(b).
std::vector<IntVector> cartan_roots_along_word(const BraidingMatrix& b, const std::vector<int>& word,
                                               std::int64_t cap = 1000);

std::array<std::int64_t, 3> gk_dimensions(const RootSystemReport& report);

// Row Hermite normal form of the given integer rows (zero rows dropped).
std::vector<IntVector> hermite_normal_form(std::vector<IntVector> rows);

// HNF basis of the lattice spanned by N_beta * beta over Cartan roots beta.
std::vector<IntVector> z_lattice(const RootSystemReport& report);

}  // namespace prenichols

#endif  // PRENICHOLS_ROOTS_HPP
