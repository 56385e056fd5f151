#ifndef PRENICHOLS_CATALOG_HPP
#define PRENICHOLS_CATALOG_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prenichols/pbw.hpp"
#include "prenichols/quotient.hpp"
#include "prenichols/report.hpp"
#include "prenichols/roots.hpp"

namespace prenichols {

// Data an entry must reproduce; unset fields are not checked.
struct ExpectedData {
  std::optional<IntMatrix> cartan_matrix;
  std::optional<std::vector<IntVector>> roots;         // in longest-word order
  std::optional<std::vector<IntVector>> root_set;      // when only the set is known
  std::optional<std::vector<IntVector>> cartan_roots;  // as a set
  std::map<IntVector, std::int64_t> heights;
  std::optional<std::array<std::int64_t, 3>> gk;
  std::map<int, BraidingMatrix> reflections;           // vertex (0-based) -> rho_i(B)
};

struct CatalogEntry {
  std::string name;
  std::string description;
  BraidingMatrix braiding;
  RelationSet relations;                    // distinguished pre-Nichols presentation
  std::map<IntVector, Recipe> recipes;      // root vectors fixed by the entry
  ExpectedData expected;
};

// Super type A_theta at q of order n; marked holds 1-based vertices.
CatalogEntry super_type_A(int theta, int n, std::vector<int> marked);
// variant 'V' or 'W'.
CatalogEntry br25(char variant);
// q_ij = q^{d_i c_ij}, q = zeta_n.
CatalogEntry cartan_type(const IntMatrix& c, const std::vector<std::int64_t>& d, int n, std::string name = "");
// Finite Cartan types of rank <= 3 by name: A1, A2, A3, B2, B3, C3, G2.
CatalogEntry cartan_type(const std::string& type, int n);

// Built-in names; lookup also accepts any super-a-<theta>-<n>[-m<digits>]
// and cartan-<type>-<n>.
std::vector<std::string> catalog_names();
CatalogEntry catalog_lookup(const std::string& name);

// Compares computed root data with the expected block.
CheckReport check_expected(const CatalogEntry& e);

// Recipes for every root: the entry's own, Lyndon defaults elsewhere.
std::vector<Recipe> entry_recipes(const CatalogEntry& e, const RootSystemReport& report, QuotientView& q);

}  // namespace prenichols

#endif  // PRENICHOLS_CATALOG_HPP
