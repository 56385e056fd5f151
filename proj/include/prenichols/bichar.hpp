#ifndef PRENICHOLS_BICHAR_HPP
#define PRENICHOLS_BICHAR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "prenichols/cyclo.hpp"

namespace prenichols {

// Vectors of Z^theta in the basis of simple roots.
using IntVector = std::vector<std::int64_t>;

IntVector unit_vector(int theta, int i);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator*(std::int64_t k, const IntVector& a);
std::int64_t total_degree(const IntVector& a);
bool is_nonnegative(const IntVector& a);
std::string to_string(const IntVector& a);

// Square integer matrix acting on column vectors: column j is the image of
// the j-th basis vector.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n);
  static IntMatrix identity(int n);

  int size() const { return n_; }
  std::int64_t& at(int r, int c) { return a_[static_cast<std::size_t>(r * n_ + c)]; }
  std::int64_t at(int r, int c) const { return a_[static_cast<std::size_t>(r * n_ + c)]; }
  IntVector column(int c) const;

  IntVector apply(const IntVector& v) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::int64_t determinant() const;
  // Exact inverse; throws ValidationError unless the matrix is unimodular.
  IntMatrix inverse() const;
  std::string key() const;

 private:
  int n_ = 0;
  std::vector<std::int64_t> a_;
};

/*
 * A diagonal braiding (q_ij) with entries in Q(zeta_M).  Indices are 0-based
 * in the API; user-facing text uses 1-based vertices.  Construction validates
 * that every entry is nonzero and that no diagonal entry equals 1.
 */
class BraidingMatrix {
 public:
  BraidingMatrix(ContextPtr ctx, int theta, std::vector<CycNum> entries);

  int theta() const { return theta_; }
  const ContextPtr& ctx() const { return ctx_; }
  const CycNum& q(int i, int j) const { return q_[idx(i, j)]; }
  const CycNum& q_inv(int i, int j) const { return q_inv_[idx(i, j)]; }
  const std::vector<CycNum>& entries() const { return q_; }

  // Entrywise exact key; equal keys <=> equal matrices.
  const std::string& key() const { return key_; }
  friend bool operator==(const BraidingMatrix& a, const BraidingMatrix& b) { return a.key_ == b.key_; }
  friend bool operator!=(const BraidingMatrix& a, const BraidingMatrix& b) { return !(a == b); }

  // When every entry is +-z^k, entries are tracked as exponents of the
  // primitive root of order lcm(2, M) and chi reduces to integer sums.
  bool monomial() const { return monomial_; }
  // Only meaningful when monomial(): q_ij = w^{log_entry(i,j)}.
  std::int64_t log_entry(int i, int j) const { return exps_[idx(i, j)]; }
  int root_order() const { return root_order_; }
  // w^e with w the primitive root of order root_order().
  const CycNum& root_of_unity_power(std::int64_t e) const;

 private:
  friend CycNum chi_eval(const BraidingMatrix&, const IntVector&, const IntVector&);
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * theta_ + j); }

  ContextPtr ctx_;
  int theta_;
  std::vector<CycNum> q_;
  std::vector<CycNum> q_inv_;
  std::string key_;
  bool monomial_ = false;
  int root_order_ = 0;                 // lcm(2, M)
  std::vector<std::int64_t> exps_;     // q_ij = w^{exps_ij}, w of order root_order_
  std::vector<CycNum> w_powers_;       // w^k for k < root_order_
};

// chi(alpha, beta) = prod_{i,j} q_ij^{alpha_i beta_j}.
CycNum chi_eval(const BraidingMatrix& b, const IntVector& alpha, const IntVector& beta);

// q_ij q_ji for i != j.
CycNum qtilde(const BraidingMatrix& b, int i, int j);

// (w^* chi)(alpha, beta) = chi(w^{-1} alpha, w^{-1} beta).
CycNum pullback(const BraidingMatrix& b, const IntMatrix& w, const IntVector& alpha, const IntVector& beta);

// The braiding matrix of w^* chi.
BraidingMatrix pullback_matrix(const BraidingMatrix& b, const IntMatrix& w);

struct LambdaScalar {
  CycNum value;
  // c_ij = 0: the value is (0)_q = 0 and cannot be inverted.
  bool degenerate = false;
};

// (-c)_{q_ii} * prod_{s=0}^{-c-1} (q_ii^s q~_ij - 1).
LambdaScalar lambda_scalar(const BraidingMatrix& b, int i, int j, std::int64_t c_ij);

}  // namespace prenichols

#endif  // PRENICHOLS_BICHAR_HPP
