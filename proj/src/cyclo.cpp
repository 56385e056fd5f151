#include "prenichols/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "prenichols/errors.hpp"

namespace prenichols {

namespace {

using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw DomainError("cyclotomic division: degree too small");
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    mpz_class c = num[k];
    quot[k - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  for (const auto& r : num)
    if (r != 0) throw DomainError("cyclotomic division left a remainder");
  return quot;
}

// Reduce a coefficient vector of arbitrary length modulo the monic phi.
template <class T>
void reduce_mod_phi(std::vector<T>& v, const IntPoly& phi) {
  const std::size_t d = phi.size() - 1;
  for (std::size_t k = v.size(); k-- > d;) {
    if (v[k] == 0) continue;
    T c = v[k];
    v[k] = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (phi[j] != 0) v[k - d + j] -= c * phi[j];
    }
  }
  v.resize(d);
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int order) {
  if (order < 1) throw ValidationError("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
  }
  IntPoly p(order + 1, 0);
  p[0] = -1;
  p[order] = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  }
  trim(p);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(order, p);
  return p;
}

CyclotomicContext::CyclotomicContext(int order) : order_(order), phi_(cyclotomic_polynomial(order)) {
  for (int k = 0; k < order; ++k)
    if (std::gcd(k, order) == 1) units_.push_back(k);
  if (order == 1) units_ = {0};
  const int d = degree();
  powers_.reserve(order);
  for (int k = 0; k < order; ++k) {
    IntPoly v(std::max(k + 1, d), 0);
    v[k] = 1;
    reduce_mod_phi(v, phi_);
    powers_.push_back(std::move(v));
  }
}

const std::vector<mpz_class>& CyclotomicContext::power_of_root(std::int64_t k) const {
  std::int64_t r = k % order_;
  if (r < 0) r += order_;
  return powers_[static_cast<std::size_t>(r)];
}

ContextPtr context(int order) {
  if (order < 1) throw ValidationError("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, ContextPtr> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(order);
  if (it != registry.end()) return it->second;
  auto ctx = std::make_shared<const CyclotomicContext>(order);
  registry.emplace(order, ctx);
  return ctx;
}

CycNum::CycNum(ContextPtr ctx, const mpq_class& rational) : ctx_(std::move(ctx)) {
  if (!ctx_) throw DomainError("CycNum needs a context");
  coeffs_.assign(ctx_->degree(), mpq_class(0));
  coeffs_[0] = rational;
  coeffs_[0].canonicalize();
}

CycNum::CycNum(ContextPtr ctx, std::vector<mpq_class> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  if (!ctx_) throw DomainError("CycNum needs a context");
  for (auto& c : coeffs_) c.canonicalize();
  if (coeffs_.size() < static_cast<std::size_t>(ctx_->degree())) coeffs_.resize(ctx_->degree(), mpq_class(0));
  if (coeffs_.size() > static_cast<std::size_t>(ctx_->degree())) reduce_mod_phi(coeffs_, ctx_->phi_poly());
}

CycNum CycNum::root_power(const ContextPtr& ctx, std::int64_t k) {
  const auto& p = ctx->power_of_root(k);
  std::vector<mpq_class> c(p.begin(), p.end());
  return CycNum(ctx, std::move(c));
}

void CycNum::require_same(const CycNum& other) const {
  if (!ctx_ || !other.ctx_) throw DomainError("operation on an unset cyclotomic number");
  if (ctx_ != other.ctx_) throw DomainError("cyclotomic context mismatch");
}

bool CycNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycNum::is_rational(mpq_class* out) const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  if (out) *out = coeffs_.empty() ? mpq_class(0) : coeffs_[0];
  return true;
}

bool CycNum::is_one() const {
  mpq_class r;
  return is_rational(&r) && r == 1;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& other) {
  require_same(other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) {
  require_same(other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

CycNum& CycNum::operator*=(const mpq_class& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& other) {
  *this = *this * other;
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  a.require_same(b);
  mpq_class r;
  if (b.is_rational(&r)) return CycNum(a) *= r;
  if (a.is_rational(&r)) return CycNum(b) *= r;
  const std::size_t d = a.coeffs_.size();
  std::vector<mpq_class> prod(2 * d - 1, mpq_class(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  reduce_mod_phi(prod, a.ctx_->phi_poly());
  CycNum out;
  out.ctx_ = a.ctx_;
  out.coeffs_ = std::move(prod);
  return out;
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * inv(b); }

bool operator==(const CycNum& a, const CycNum& b) {
  a.require_same(b);
  return a.coeffs_ == b.coeffs_;
}

CycNum CycNum::conjugate(int k) const {
  if (std::gcd(k, ctx_->order()) != 1 && ctx_->order() != 1)
    throw DomainError("conjugate: exponent not coprime to the order");
  std::vector<mpq_class> out(coeffs_.size(), mpq_class(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& p = ctx_->power_of_root(static_cast<std::int64_t>(j) * k);
    for (std::size_t t = 0; t < p.size(); ++t)
      if (p[t] != 0) out[t] += coeffs_[j] * p[t];
  }
  CycNum r;
  r.ctx_ = ctx_;
  r.coeffs_ = std::move(out);
  return r;
}

mpq_class CycNum::norm() const {
  CycNum prod = one(ctx_);
  for (int k : ctx_->units()) prod = prod * conjugate(k);
  mpq_class r;
  if (!prod.is_rational(&r)) throw DomainError("norm is not rational (internal error)");
  return r;
}

CycNum inv(const CycNum& a) {
  if (a.is_zero()) throw DomainError("division by zero in cyclotomic field");
  mpq_class r;
  if (a.is_rational(&r)) return CycNum(a.ctx(), mpq_class(1) / r);
  // a * prod_{k != 1} sigma_k(a) = N(a) in Q.
  CycNum rest = CycNum::one(a.ctx());
  for (int k : a.ctx()->units())
    if (k != 1) rest = rest * a.conjugate(k);
  CycNum n = a * rest;
  if (!n.is_rational(&r)) throw DomainError("norm is not rational (internal error)");
  return rest * (mpq_class(1) / r);
}

CycNum pow(const CycNum& a, std::int64_t e) {
  CycNum base = e < 0 ? inv(a) : a;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  CycNum result = CycNum::one(a.ctx());
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

std::optional<std::int64_t> mul_order(const CycNum& a, std::int64_t cap) {
  if (a.is_zero()) throw DomainError("mul_order of zero");
  const std::int64_t m = a.ctx()->order();
  const std::int64_t bound = (m % 2 == 0) ? m : 2 * m;
  if (!pow(a, bound).is_one()) return std::nullopt;
  CycNum acc = a;
  for (std::int64_t n = 1; n <= std::min(bound, cap); ++n) {
    if (acc.is_one()) return n;
    acc = acc * a;
  }
  throw DomainError("mul_order: search cap reached");
}

CycNum q_number(std::int64_t n, const CycNum& q) {
  if (n < 0) throw DomainError("q_number: negative index");
  CycNum sum = CycNum::zero(q.ctx());
  CycNum term = CycNum::one(q.ctx());
  for (std::int64_t j = 0; j < n; ++j) {
    sum += term;
    term = term * q;
  }
  return sum;
}

CycNum q_factorial(std::int64_t n, const CycNum& q) {
  if (n < 0) throw DomainError("q_factorial: negative index");
  CycNum prod = CycNum::one(q.ctx());
  for (std::int64_t j = 1; j <= n; ++j) prod = prod * q_number(j, q);
  return prod;
}

CycNum q_binomial(std::int64_t n, std::int64_t i, const CycNum& q) {
  if (n < 0 || i < 0 || i > n) throw DomainError("q_binomial: index out of range");
  std::vector<CycNum> row{CycNum::one(q.ctx())};
  std::vector<CycNum> qpow{CycNum::one(q.ctx())};
  for (std::int64_t k = 1; k <= n; ++k) qpow.push_back(qpow.back() * q);
  for (std::int64_t m = 1; m <= n; ++m) {
    std::vector<CycNum> next(static_cast<std::size_t>(m + 1));
    next[0] = CycNum::one(q.ctx());
    next[m] = CycNum::one(q.ctx());
    for (std::int64_t k = 1; k < m; ++k) next[k] = row[k - 1] + qpow[k] * row[k];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(i)];
}

namespace {

class LiteralParser {
 public:
  LiteralParser(std::string_view text, ContextPtr ctx) : ctx_(std::move(ctx)) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  CycNum parse() {
    if (s_.empty()) fail("empty literal");
    CycNum acc = CycNum::zero(ctx_);
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = (get() == '-');
    CycNum t = term();
    acc += negative ? -t : t;
    while (pos_ < s_.size()) {
      char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      CycNum u = term();
      if (op == '+')
        acc += u;
      else
        acc -= u;
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() {
    if (pos_ >= s_.size()) fail("unexpected end of literal");
    return s_[pos_++];
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cyclotomic literal '" + s_ + "': " + what);
  }

  mpz_class integer(bool allow_sign) {
    std::string digits;
    if (allow_sign && (peek() == '-' || peek() == '+')) digits.push_back(get());
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(get());
    if (digits.empty() || digits == "-" || digits == "+") fail("expected an integer");
    if (digits[0] == '+') digits.erase(0, 1);
    return mpz_class(digits);
  }

  CycNum root_power_part() {
    get();  // 'z'
    std::int64_t e = 1;
    if (peek() == '^') {
      get();
      mpz_class v = integer(true);
      if (!v.fits_slong_p()) fail("exponent too large");
      e = v.get_si();
    }
    return CycNum::root_power(ctx_, e);
  }

  CycNum term() {
    if (peek() == 'z') return root_power_part();
    mpz_class num = integer(false);
    mpz_class den = 1;
    if (peek() == '/') {
      get();
      den = integer(false);
      if (den == 0) fail("zero denominator");
    }
    mpq_class r(num, den);
    r.canonicalize();
    if (peek() == '*') {
      get();
      if (peek() != 'z') fail("expected 'z' after '*'");
      return root_power_part() * r;
    }
    return CycNum(ctx_, r);
  }

  std::string s_;
  std::size_t pos_ = 0;
  ContextPtr ctx_;
};

}  // namespace

CycNum parse_cyclo(std::string_view text, const ContextPtr& ctx) { return LiteralParser(text, ctx).parse(); }

std::string CycNum::to_string() const {
  if (!ctx_) return "<unset>";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpq_class& c = coeffs_[k];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string CycNum::key() const {
  std::string out;
  for (const auto& c : coeffs_) {
    out += c.get_str();
    out.push_back(',');
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const CycNum& a) { return os << a.to_string(); }

}  // namespace prenichols
