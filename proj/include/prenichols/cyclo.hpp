#ifndef PRENICHOLS_CYCLO_HPP
#define PRENICHOLS_CYCLO_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prenichols {

/*
 * The cyclotomic field Q(z), z a primitive M-th root of unity.  Elements are
 * stored as residues modulo the cyclotomic polynomial Phi_M, i.e. as rational
 * coefficient vectors of length phi(M) over the power basis 1, z, ..., z^{phi-1}.
 *
 * Contexts are interned: context(M) always returns the same object for the
 * same M, so context identity can be checked by pointer comparison.
 */
class CyclotomicContext {
 public:
  int order() const { return order_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  // Coefficients of Phi_M, constant term first; monic of degree phi(M).
  const std::vector<mpz_class>& phi_poly() const { return phi_; }
  // Residues k mod M with gcd(k, M) = 1, in increasing order.
  const std::vector<int>& units() const { return units_; }
  // Reduced coefficient vector of z^k (k taken mod M).
  const std::vector<mpz_class>& power_of_root(std::int64_t k) const;

  explicit CyclotomicContext(int order);

 private:
  int order_;
  std::vector<mpz_class> phi_;
  std::vector<int> units_;
  std::vector<std::vector<mpz_class>> powers_;
};

using ContextPtr = std::shared_ptr<const CyclotomicContext>;

// Interned context for Q(zeta_M).  Throws ValidationError for M < 1.
ContextPtr context(int order);

// Integer coefficients of Phi_M, computed by exact division of x^M - 1 by
// Phi_d for every proper divisor d of M.
std::vector<mpz_class> cyclotomic_polynomial(int order);

class CycNum {
 public:
  // An unset value; only assignment and destruction are valid on it.
  CycNum() = default;
  CycNum(ContextPtr ctx, const mpq_class& rational);
  CycNum(ContextPtr ctx, std::vector<mpq_class> coeffs);

  static CycNum zero(const ContextPtr& ctx) { return CycNum(ctx, mpq_class(0)); }
  static CycNum one(const ContextPtr& ctx) { return CycNum(ctx, mpq_class(1)); }
  // z^k for any integer k.
  static CycNum root_power(const ContextPtr& ctx, std::int64_t k);

  const ContextPtr& ctx() const { return ctx_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // True when the value lies in Q; the rational is returned through out.
  bool is_rational(mpq_class* out = nullptr) const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& other);
  CycNum& operator-=(const CycNum& other);
  CycNum& operator*=(const CycNum& other);
  CycNum& operator*=(const mpq_class& r);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator*(CycNum a, const mpq_class& r) { return a *= r; }
  friend CycNum operator/(const CycNum& a, const CycNum& b);

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  // Image under the Galois automorphism z -> z^k, gcd(k, M) = 1.
  CycNum conjugate(int k) const;
  // Field norm down to Q.
  mpq_class norm() const;

  // Canonical text in the literal grammar, e.g. "1 + 2*z - 1/3*z^3".
  std::string to_string() const;
  // Stable key used for hashing and ordering (exact, not human oriented).
  std::string key() const;

 private:
  void require_same(const CycNum& other) const;

  ContextPtr ctx_;
  std::vector<mpq_class> coeffs_;
};

CycNum inv(const CycNum& a);
CycNum pow(const CycNum& a, std::int64_t e);

// Least n >= 1 with a^n = 1, or nullopt when a is not a root of unity.
// Roots of unity of Q(zeta_M) have order dividing lcm(2, M); cap bounds the
// search and is only a safety net.
std::optional<std::int64_t> mul_order(const CycNum& a, std::int64_t cap = 100000);

// (n)_q = 1 + q + ... + q^{n-1}.
CycNum q_number(std::int64_t n, const CycNum& q);
// (n)_q! = (1)_q (2)_q ... (n)_q.
CycNum q_factorial(std::int64_t n, const CycNum& q);
// Gaussian binomial by the Pascal rule [n,i] = [n-1,i-1] + q^i [n-1,i]; no
// division, so it is valid at roots of unity.
CycNum q_binomial(std::int64_t n, std::int64_t i, const CycNum& q);

/*
 * Literal grammar (whitespace ignored):
 *   expr := ["-"|"+"] term (("+"|"-") term)*
 *   term := [rat "*"] "z" ["^" int] | rat
 *   rat  := int ["/" posint]
 */
CycNum parse_cyclo(std::string_view text, const ContextPtr& ctx);

std::ostream& operator<<(std::ostream& os, const CycNum& a);

}  // namespace prenichols

#endif  // PRENICHOLS_CYCLO_HPP
