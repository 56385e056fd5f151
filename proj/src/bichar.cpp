#include "prenichols/bichar.hpp"

#include <sstream>

#include "prenichols/errors.hpp"

namespace prenichols {

IntVector unit_vector(int theta, int i) {
  IntVector v(static_cast<std::size_t>(theta), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DomainError("vector length mismatch");
  IntVector r(a);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DomainError("vector length mismatch");
  IntVector r(a);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
  return r;
}

IntVector operator*(std::int64_t k, const IntVector& a) {
  IntVector r(a);
  for (auto& x : r) x *= k;
  return r;
}

std::int64_t total_degree(const IntVector& a) {
  std::int64_t s = 0;
  for (auto x : a) s += x;
  return s;
}

bool is_nonnegative(const IntVector& a) {
  for (auto x : a)
    if (x < 0) return false;
  return true;
}

std::string to_string(const IntVector& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < a.size(); ++k) os << (k ? "," : "") << a[k];
  os << ")";
  return os.str();
}

IntMatrix::IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n), 0) {}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntVector IntMatrix::column(int c) const {
  IntVector v(static_cast<std::size_t>(n_));
  for (int r = 0; r < n_; ++r) v[static_cast<std::size_t>(r)] = at(r, c);
  return v;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  if (static_cast<int>(v.size()) != n_) throw DomainError("matrix/vector size mismatch");
  IntVector out(v.size(), 0);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) out[static_cast<std::size_t>(r)] += at(r, c) * v[static_cast<std::size_t>(c)];
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw DomainError("matrix size mismatch");
  IntMatrix m(a.n_);
  for (int r = 0; r < a.n_; ++r)
    for (int k = 0; k < a.n_; ++k) {
      const auto x = a.at(r, k);
      if (x == 0) continue;
      for (int c = 0; c < a.n_; ++c) m.at(r, c) += x * b.at(k, c);
    }
  return m;
}

namespace {

// Gauss-Jordan over Q; returns the determinant and fills inv when requested.
mpq_class gauss_jordan(const IntMatrix& m, std::vector<std::vector<mpq_class>>* inv) {
  const int n = m.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n, 0));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[r][c] = m.at(r, c);
    a[r][n + r] = 1;
  }
  mpq_class det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    mpq_class piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c];
      for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  if (inv) {
    inv->assign(n, std::vector<mpq_class>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) (*inv)[r][c] = a[r][n + c];
  }
  return det;
}

}  // namespace

std::int64_t IntMatrix::determinant() const {
  if (n_ == 0) return 1;
  mpq_class d = gauss_jordan(*this, nullptr);
  return d.get_num().get_si();
}

IntMatrix IntMatrix::inverse() const {
  std::vector<std::vector<mpq_class>> inv;
  mpq_class det = gauss_jordan(*this, &inv);
  if (det != 1 && det != -1) throw ValidationError("matrix is not unimodular");
  IntMatrix out(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) {
      if (inv[r][c].get_den() != 1) throw ValidationError("matrix inverse is not integral");
      out.at(r, c) = inv[r][c].get_num().get_si();
    }
  return out;
}

std::string IntMatrix::key() const {
  std::ostringstream os;
  for (auto x : a_) os << x << ',';
  return os.str();
}

BraidingMatrix::BraidingMatrix(ContextPtr ctx, int theta, std::vector<CycNum> entries)
    : ctx_(std::move(ctx)), theta_(theta), q_(std::move(entries)) {
  if (theta_ < 1) throw ValidationError("braiding size must be positive");
  if (q_.size() != static_cast<std::size_t>(theta_ * theta_)) throw ValidationError("braiding matrix has wrong shape");
  for (int i = 0; i < theta_; ++i)
    for (int j = 0; j < theta_; ++j) {
      const CycNum& e = q_[idx(i, j)];
      if (e.ctx() != ctx_) throw ValidationError("braiding entry lives in another cyclotomic field");
      if (e.is_zero()) throw ValidationError("braiding entries must be nonzero");
      if (i == j && e.is_one()) throw ValidationError("diagonal braiding entries must differ from 1");
    }
  q_inv_.reserve(q_.size());
  for (const auto& e : q_) q_inv_.push_back(inv(e));
  for (const auto& e : q_) key_ += e.key() + ";";

  const int m = ctx_->order();
  root_order_ = (m % 2 == 0) ? m : 2 * m;
  CycNum w = (m % 2 == 0) ? CycNum::root_power(ctx_, 1) : -CycNum::root_power(ctx_, 1);
  w_powers_.push_back(CycNum::one(ctx_));
  for (int k = 1; k < root_order_; ++k) w_powers_.push_back(w_powers_.back() * w);
  monomial_ = true;
  for (const auto& e : q_) {
    int found = -1;
    for (int k = 0; k < root_order_; ++k)
      if (w_powers_[static_cast<std::size_t>(k)] == e) {
        found = k;
        break;
      }
    if (found < 0) {
      monomial_ = false;
      exps_.clear();
      break;
    }
    exps_.push_back(found);
  }
}

const CycNum& BraidingMatrix::root_of_unity_power(std::int64_t e) const {
  e %= root_order_;
  if (e < 0) e += root_order_;
  return w_powers_[static_cast<std::size_t>(e)];
}

CycNum chi_eval(const BraidingMatrix& b, const IntVector& alpha, const IntVector& beta) {
  const int n = b.theta();
  if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n)
    throw DomainError("chi_eval: vector length differs from theta");
  if (b.monomial_) {
    std::int64_t e = 0;
    for (int i = 0; i < n; ++i) {
      if (alpha[i] == 0) continue;
      for (int j = 0; j < n; ++j) e += alpha[i] * beta[j] * b.exps_[b.idx(i, j)];
    }
    e %= b.root_order_;
    if (e < 0) e += b.root_order_;
    return b.w_powers_[static_cast<std::size_t>(e)];
  }
  CycNum r = CycNum::one(b.ctx());
  for (int i = 0; i < n; ++i) {
    if (alpha[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      const std::int64_t e = alpha[i] * beta[j];
      if (e != 0) r = r * pow(b.q(i, j), e);
    }
  }
  return r;
}

CycNum qtilde(const BraidingMatrix& b, int i, int j) {
  if (i == j) throw DomainError("qtilde needs distinct indices");
  return b.q(i, j) * b.q(j, i);
}

CycNum pullback(const BraidingMatrix& b, const IntMatrix& w, const IntVector& alpha, const IntVector& beta) {
  const IntMatrix wi = w.inverse();
  return chi_eval(b, wi.apply(alpha), wi.apply(beta));
}

BraidingMatrix pullback_matrix(const BraidingMatrix& b, const IntMatrix& w) {
  const IntMatrix wi = w.inverse();
  const int n = b.theta();
  std::vector<CycNum> entries;
  entries.reserve(static_cast<std::size_t>(n * n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) entries.push_back(chi_eval(b, wi.column(j), wi.column(k)));
  return BraidingMatrix(b.ctx(), n, std::move(entries));
}

LambdaScalar lambda_scalar(const BraidingMatrix& b, int i, int j, std::int64_t c_ij) {
  if (i == j) throw DomainError("lambda_scalar needs distinct indices");
  if (c_ij > 0) throw DomainError("lambda_scalar needs c_ij <= 0");
  const CycNum& qii = b.q(i, i);
  const CycNum qt = qtilde(b, i, j);
  CycNum prod = q_number(-c_ij, qii);
  CycNum qs = CycNum::one(b.ctx());
  for (std::int64_t s = 0; s < -c_ij; ++s) {
    prod = prod * (qs * qt - CycNum::one(b.ctx()));
    qs = qs * qii;
  }
  return LambdaScalar{prod, c_ij == 0};
}

}  // namespace prenichols
