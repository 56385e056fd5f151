#ifndef PRENICHOLS_PBW_HPP
#define PRENICHOLS_PBW_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prenichols/quotient.hpp"
#include "prenichols/report.hpp"
#include "prenichols/roots.hpp"

namespace prenichols {

/*
 * Bracketing tree producing a root vector.  Text form (s-expressions,
 * letters are 1-based integers, scalars are cyclo literals in brackets):
 *   node := int | (comm node node) | (ad int node) | (mul node+)
 *         | (pow node int) | (add node+) | (scale [cyclo] node)
 * e.g. "(scale [2*z] (comm (ad 1 2) 2))".
 */
class Recipe {
 public:
  enum class Kind { Letter, Comm, Ad, Mul, Pow, Add, Scale };

  static Recipe letter(int i);
  static Recipe comm(Recipe a, Recipe b);
  static Recipe ad(int i, Recipe a);
  static Recipe mul(std::vector<Recipe> factors);
  static Recipe pow(Recipe a, std::int64_t n);
  static Recipe add(std::vector<Recipe> terms);
  static Recipe scale(CycNum c, Recipe a);

  Kind kind() const { return kind_; }
  FreeElem expand(const BraidingMatrix& b) const;
  std::string to_string() const;

 private:
  Kind kind_ = Kind::Letter;
  int letter_ = 0;
  std::int64_t exponent_ = 0;
  std::optional<CycNum> scalar_;
  std::vector<Recipe> kids_;
};

Recipe parse_recipe(std::string_view text, const ContextPtr& ctx, int theta);

bool is_lyndon(const Word& w);
// Standard bracketing: w = uv with v the longest proper Lyndon suffix.
Recipe standard_bracketing(const Word& w);

// For each root (in report order): override if given, the letter for simple
// roots, else the standard bracketing of the lexicographically greatest
// Lyndon word of that degree whose expansion is nonzero in q.  Throws
// ValidationError naming the root when no candidate survives.
std::vector<Recipe> default_recipes(const RootSystemReport& report, QuotientView& q,
                                    const std::map<IntVector, Recipe>& overrides = {});

struct PBWSpec {
  BraidingMatrix braiding;
  std::vector<IntVector> roots;                   // beta_1 < ... < beta_M
  std::vector<std::optional<std::int64_t>> heights;
  std::vector<bool> cartan;
  std::vector<Recipe> recipes;
};

PBWSpec make_pbw_spec(const RootSystemReport& report, const BraidingMatrix& b, std::vector<Recipe> recipes);

// Exponent vector a; the monomial is E_{beta_M}^{a_M} ... E_{beta_1}^{a_1}.
using PBWMonomial = std::vector<std::int64_t>;

// All monomials of multidegree delta with a_k < N_k on non-Cartan roots (on
// every root when cap_cartan, i.e. the Nichols specialization).
std::vector<PBWMonomial> enumerate_restricted(const PBWSpec& spec, const IntVector& delta, bool cap_cartan = false);

std::string monomial_to_string(const PBWSpec& spec, const PBWMonomial& a);

// Normal forms of root vectors and PBW monomials modulo q, memoized.
class PBWExpander {
 public:
  PBWExpander(const PBWSpec& spec, QuotientView& q);
  const FreeElem& root(std::size_t k);
  FreeElem monomial(const PBWMonomial& a);
  const PBWSpec& spec() const { return spec_; }
  QuotientView& quotient() { return q_; }

 private:
  const PBWSpec& spec_;
  QuotientView& q_;
  std::map<std::size_t, FreeElem> roots_;
};

// Rank of the normal forms of the restricted monomials of delta.
std::size_t expansion_rank(PBWExpander& ex, const IntVector& delta);

// Coefficients of normal_form(x) over the restricted monomials of delta.
// Throws DomainError when those monomials are not a basis of the quotient
// in degree delta or x is outside their span.
std::vector<std::pair<PBWMonomial, CycNum>> pbw_coefficients(PBWExpander& ex, const FreeElem& x,
                                                            const IntVector& delta);

// [E_{beta_k}, E_{beta_l}]_c against monomials in the roots strictly between
// (0-based k < l); passes when the linear system is solvable.
CheckReport verify_straightening(PBWExpander& ex, std::size_t k, std::size_t l);

}  // namespace prenichols

#endif  // PRENICHOLS_PBW_HPP
