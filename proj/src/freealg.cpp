#include "prenichols/freealg.hpp"

#include <cctype>
#include <sstream>

#include "prenichols/errors.hpp"

namespace prenichols {

namespace {

// Running product of braiding entries; integer exponents when the braiding
// is monomial, field multiplications otherwise.
class Phase {
 public:
  explicit Phase(const BraidingMatrix& b) : b_(b), mono_(b.monomial()) {
    if (!mono_) val_ = CycNum::one(b.ctx());
  }
  void mul(int i, int j) {
    if (mono_)
      e_ += b_.log_entry(i, j);
    else
      val_ *= b_.q(i, j);
  }
  void mul_inv(int i, int j) {
    if (mono_)
      e_ -= b_.log_entry(i, j);
    else
      val_ *= b_.q_inv(i, j);
  }
  CycNum value() const { return mono_ ? b_.root_of_unity_power(e_) : val_; }

 private:
  const BraidingMatrix& b_;
  bool mono_;
  std::int64_t e_ = 0;
  CycNum val_;
};

void require_theta(const BraidingMatrix& b, int i) {
  if (i < 0 || i >= b.theta()) throw DomainError("letter index out of range");
}

}  // namespace

Word Word::from_digits(std::string_view digits, int theta) {
  std::string s;
  for (char ch : digits) {
    if (ch < '1' || ch > '9' || ch - '1' >= theta) throw ParseError(std::string("invalid letter '") + ch + "' in word");
    s.push_back(static_cast<char>(ch - '1'));
  }
  return Word(std::move(s));
}

Word Word::without(std::size_t pos) const {
  std::string s = s_;
  s.erase(pos, 1);
  return Word(std::move(s));
}

std::size_t Word::count(int letter) const {
  std::size_t c = 0;
  for (char ch : s_)
    if (static_cast<unsigned char>(ch) == letter) ++c;
  return c;
}

IntVector Word::degree(int theta) const {
  IntVector d(static_cast<std::size_t>(theta), 0);
  for (char ch : s_) ++d[static_cast<unsigned char>(ch)];
  return d;
}

std::string Word::to_string() const {
  if (s_.empty()) return "()";
  std::string out;
  for (char ch : s_) {
    const int l = static_cast<unsigned char>(ch);
    // Letters past 9 never occur in digit syntax; keep them readable anyway.
    out += l < 9 ? std::string(1, static_cast<char>('1' + l)) : "[" + std::to_string(l + 1) + "]";
  }
  return out;
}

std::vector<Word> words_of_degree(const IntVector& delta) {
  std::vector<Word> out;
  IntVector rest = delta;
  for (auto x : rest)
    if (x < 0) return out;
  std::string cur;
  const auto n = static_cast<std::size_t>(total_degree(delta));
  std::function<void()> rec = [&]() {
    if (cur.size() == n) {
      out.emplace_back(cur);
      return;
    }
    for (std::size_t l = 0; l < rest.size(); ++l) {
      if (rest[l] == 0) continue;
      --rest[l];
      cur.push_back(static_cast<char>(l));
      rec();
      cur.pop_back();
      ++rest[l];
    }
  };
  rec();
  return out;
}

std::size_t word_count(const IntVector& delta) {
  // Multinomial via successive binomials; saturates instead of overflowing.
  std::size_t total = 0, result = 1;
  for (auto x : delta) {
    if (x < 0) return 0;
    for (std::int64_t k = 1; k <= x; ++k) {
      ++total;
      const unsigned __int128 r = static_cast<unsigned __int128>(result) * total / static_cast<std::size_t>(k);
      result = r > static_cast<unsigned __int128>(SIZE_MAX) ? SIZE_MAX : static_cast<std::size_t>(r);
    }
  }
  return result;
}

FreeElem::FreeElem(ContextPtr ctx, const Word& w, const CycNum& c) : ctx_(std::move(ctx)) { add_term(w, c); }

CycNum FreeElem::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? CycNum::zero(ctx_) : it->second;
}

void FreeElem::add_term(const Word& w, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FreeElem& FreeElem::operator+=(const FreeElem& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreeElem& FreeElem::operator-=(const FreeElem& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FreeElem FreeElem::operator-() const {
  FreeElem r(ctx_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

FreeElem operator*(const FreeElem& a, const FreeElem& b) {
  FreeElem r(a.ctx_);
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) r.add_term(u + v, cu * cv);
  return r;
}

FreeElem operator*(const CycNum& c, const FreeElem& a) {
  FreeElem r(a.ctx_);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : a.terms_) r.terms_.emplace(w, c * x);
  return r;
}

bool operator==(const FreeElem& a, const FreeElem& b) { return a.terms_ == b.terms_; }

std::optional<IntVector> FreeElem::degree(int theta) const {
  if (terms_.empty()) return std::nullopt;
  IntVector d = terms_.begin()->first.degree(theta);
  for (const auto& [w, c] : terms_)
    if (w.degree(theta) != d) return std::nullopt;
  return d;
}

bool FreeElem::is_homogeneous(int theta) const { return terms_.empty() || degree(theta).has_value(); }

FreeElem FreeElem::component(const IntVector& delta) const {
  FreeElem r(ctx_);
  const int theta = static_cast<int>(delta.size());
  for (const auto& [w, c] : terms_)
    if (w.degree(theta) == delta) r.terms_.emplace(w, c);
  return r;
}

std::vector<IntVector> FreeElem::degrees(int theta) const {
  std::vector<IntVector> out;
  for (const auto& [w, c] : terms_) {
    IntVector d = w.degree(theta);
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
  }
  return out;
}

FreeElem power(const FreeElem& x, std::size_t n) {
  FreeElem r = FreeElem::scalar(CycNum::one(x.ctx()));
  for (std::size_t k = 0; k < n; ++k) r = r * x;
  return r;
}

CycNum counit(const FreeElem& x) { return x.coefficient(Word()); }

TensorElem TensorElem::pure(const FreeElem& x, const FreeElem& y) {
  TensorElem t(x.ctx());
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms()) t.add_term(u, v, cu * cv);
  return t;
}

CycNum TensorElem::coefficient(const Word& a, const Word& b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? CycNum::zero(ctx_) : it->second;
}

void TensorElem::add_term(const Word& a, const Word& b, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TensorElem operator*(const CycNum& c, const TensorElem& a) {
  TensorElem r(a.ctx_);
  if (c.is_zero()) return r;
  for (const auto& [k, x] : a.terms_) r.terms_.emplace(k, c * x);
  return r;
}

bool operator==(const TensorElem& a, const TensorElem& b) { return a.terms_ == b.terms_; }

std::map<Word, FreeElem> TensorElem::by_left() const {
  std::map<Word, FreeElem> out;
  for (const auto& [k, c] : terms_) out.try_emplace(k.first, ctx_).first->second.add_term(k.second, c);
  return out;
}

std::map<Word, FreeElem> TensorElem::by_right() const {
  std::map<Word, FreeElem> out;
  for (const auto& [k, c] : terms_) out.try_emplace(k.second, ctx_).first->second.add_term(k.first, c);
  return out;
}

TensorElem TensorElem::map_legs(const std::function<FreeElem(const FreeElem&)>& f,
                                const std::function<FreeElem(const FreeElem&)>& g) const {
  // Group by left word so f is applied once per distinct left leg.
  TensorElem out(ctx_);
  for (const auto& [left, right] : by_left()) {
    const FreeElem fl = f(FreeElem::word(ctx_, left));
    if (fl.is_zero()) continue;
    const FreeElem gr = g(right);
    if (gr.is_zero()) continue;
    out += pure(fl, gr);
  }
  return out;
}

TensorElem tensor_multiply(const BraidingMatrix& b, const TensorElem& s, const TensorElem& t) {
  const int n = b.theta();
  TensorElem out(s.ctx());
  std::vector<IntVector> tleft;
  tleft.reserve(t.size());
  for (const auto& [k, c] : t.terms()) tleft.push_back(k.first.degree(n));
  for (const auto& [k1, c1] : s.terms()) {
    const IntVector dy = k1.second.degree(n);
    std::size_t idx = 0;
    for (const auto& [k2, c2] : t.terms()) {
      out.add_term(k1.first + k2.first, k1.second + k2.second, chi_eval(b, dy, tleft[idx++]) * c1 * c2);
    }
  }
  return out;
}

TensorElem tensor_power(const BraidingMatrix& b, const TensorElem& t, std::size_t n) {
  TensorElem r(t.ctx());
  r.add_term(Word(), Word(), CycNum::one(t.ctx()));
  for (std::size_t k = 0; k < n; ++k) r = tensor_multiply(b, r, t);
  return r;
}

FreeElem commutator_c(const BraidingMatrix& b, const FreeElem& x, const FreeElem& y) {
  if (x.is_zero() || y.is_zero()) return FreeElem(x.ctx());
  const auto dx = x.degree(b.theta());
  const auto dy = y.degree(b.theta());
  if (!dx || !dy) throw DomainError("commutator_c needs homogeneous arguments");
  return x * y - chi_eval(b, *dx, *dy) * (y * x);
}

FreeElem ad_plus(const BraidingMatrix& b, int i, int j, int m) {
  require_theta(b, i);
  require_theta(b, j);
  if (i == j) throw DomainError("ad_plus needs i != j");
  const FreeElem ei = FreeElem::letter(b.ctx(), i);
  FreeElem e = FreeElem::letter(b.ctx(), j);
  IntVector deg = unit_vector(b.theta(), j);
  const IntVector ai = unit_vector(b.theta(), i);
  for (int s = 0; s < m; ++s) {
    e = ei * e - chi_eval(b, ai, deg) * (e * ei);
    deg = deg + ai;
  }
  return e;
}

FreeElem ad_minus(const BraidingMatrix& b, int i, int j, int m) {
  require_theta(b, i);
  require_theta(b, j);
  if (i == j) throw DomainError("ad_minus needs i != j");
  const FreeElem ei = FreeElem::letter(b.ctx(), i);
  FreeElem e = FreeElem::letter(b.ctx(), j);
  IntVector deg = unit_vector(b.theta(), j);
  const IntVector ai = unit_vector(b.theta(), i);
  for (int s = 0; s < m; ++s) {
    e = ei * e - inv(chi_eval(b, deg, ai)) * (e * ei);
    deg = deg + ai;
  }
  return e;
}

TensorElem coproduct(const BraidingMatrix& b, const FreeElem& x) {
  TensorElem out(x.ctx());
  const int theta = b.theta();
  for (const auto& [w, c] : x.terms()) {
    const std::size_t n = w.size();
    if (n > 30) throw CapExceeded("coproduct: word of length " + std::to_string(n) + " is too long for subset expansion");
    // Depth-first over subsets; `right_count` tracks letters already sent to S^c.
    std::vector<std::int64_t> right_count(static_cast<std::size_t>(theta), 0);
    std::string left, right;
    std::function<void(std::size_t, Phase)> rec = [&](std::size_t pos, Phase ph) {
      if (pos == n) {
        out.add_term(Word(left), Word(right), ph.value() * c);
        return;
      }
      const int l = w[pos];
      // pos in S (left leg): pick up chi(alpha_{j_a}, alpha_l) for earlier a in S^c.
      Phase with = ph;
      for (int t = 0; t < theta; ++t)
        for (std::int64_t r = 0; r < right_count[static_cast<std::size_t>(t)]; ++r) with.mul(t, l);
      left.push_back(static_cast<char>(l));
      rec(pos + 1, with);
      left.pop_back();
      // pos in S^c.
      right.push_back(static_cast<char>(l));
      ++right_count[static_cast<std::size_t>(l)];
      rec(pos + 1, ph);
      --right_count[static_cast<std::size_t>(l)];
      right.pop_back();
    };
    rec(0, Phase(b));
  }
  return out;
}

TensorElem coproduct_iterative(const BraidingMatrix& b, const FreeElem& x) {
  TensorElem out(x.ctx());
  const CycNum one = CycNum::one(x.ctx());
  for (const auto& [w, c] : x.terms()) {
    TensorElem acc(x.ctx());
    acc.add_term(Word(), Word(), c);
    for (std::size_t k = 0; k < w.size(); ++k) {
      TensorElem g(x.ctx());
      g.add_term(Word::letter(w[k]), Word(), one);
      g.add_term(Word(), Word::letter(w[k]), one);
      acc = tensor_multiply(b, acc, g);
    }
    out += acc;
  }
  return out;
}

FreeElem partial_K(const BraidingMatrix& b, const FreeElem& x, int i) {
  require_theta(b, i);
  FreeElem out(x.ctx());
  for (const auto& [w, c] : x.terms()) {
    Phase ph(b);
    for (std::size_t a = w.size(); a-- > 0;) {
      if (w[a] == i) out.add_term(w.without(a), ph.value() * c);
      ph.mul(i, w[a]);
    }
  }
  return out;
}

FreeElem partial_L(const BraidingMatrix& b, const FreeElem& x, int i) {
  require_theta(b, i);
  FreeElem out(x.ctx());
  for (const auto& [w, c] : x.terms()) {
    Phase ph(b);
    for (std::size_t a = 0; a < w.size(); ++a) {
      if (w[a] == i) out.add_term(w.without(a), ph.value() * c);
      ph.mul(w[a], i);
    }
  }
  return out;
}

namespace {

// Enumerates k-subsets of the positions of letter i in w.
void for_each_letter_subset(const Word& w, int i, std::size_t k,
                            const std::function<void(const std::vector<bool>&)>& f) {
  std::vector<std::size_t> pos;
  for (std::size_t a = 0; a < w.size(); ++a)
    if (w[a] == i) pos.push_back(a);
  if (k > pos.size()) return;
  std::vector<bool> chosen(w.size(), false);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t left) {
    if (left == 0) {
      f(chosen);
      return;
    }
    for (std::size_t t = start; t + left <= pos.size(); ++t) {
      chosen[pos[t]] = true;
      rec(t + 1, left - 1);
      chosen[pos[t]] = false;
    }
  };
  rec(0, k);
}

}  // namespace

FreeElem dual_action_right(const BraidingMatrix& b, const FreeElem& x, int i, std::size_t k) {
  require_theta(b, i);
  FreeElem out(x.ctx());
  for (const auto& [w, c] : x.terms()) {
    for_each_letter_subset(w, i, k, [&](const std::vector<bool>& in_s) {
      // S = chosen positions (left leg E_i^k); factor chi(alpha_{j_a}, alpha_i), a in S^c before b in S.
      Phase ph(b);
      std::string rest;
      std::size_t seen_s = 0;
      for (std::size_t a = 0; a < w.size(); ++a) {
        if (in_s[a]) {
          ++seen_s;
          continue;
        }
        rest.push_back(static_cast<char>(w[a]));
        for (std::size_t r = seen_s; r < k; ++r) ph.mul(w[a], i);
      }
      out.add_term(Word(rest), ph.value() * c);
    });
  }
  return out;
}

FreeElem dual_action_left(const BraidingMatrix& b, const FreeElem& x, int i, std::size_t k) {
  require_theta(b, i);
  FreeElem out(x.ctx());
  for (const auto& [w, c] : x.terms()) {
    for_each_letter_subset(w, i, k, [&](const std::vector<bool>& in_sc) {
      // S^c = chosen positions (right leg E_i^k); factor chi(alpha_i, alpha_{j_b}), a in S^c before b in S.
      Phase ph(b);
      std::string rest;
      std::size_t seen_sc = 0;
      for (std::size_t a = 0; a < w.size(); ++a) {
        if (in_sc[a]) {
          ++seen_sc;
          continue;
        }
        rest.push_back(static_cast<char>(w[a]));
        for (std::size_t r = 0; r < seen_sc; ++r) ph.mul(i, w[a]);
      }
      out.add_term(Word(rest), ph.value() * c);
    });
  }
  return out;
}

FreeElem antipode(const BraidingMatrix& b, const FreeElem& x) {
  FreeElem out(x.ctx());
  for (const auto& [w, c] : x.terms()) {
    Phase ph(b);
    for (std::size_t a = 0; a < w.size(); ++a)
      for (std::size_t bb = a + 1; bb < w.size(); ++bb) ph.mul(w[a], w[bb]);
    const CycNum s = (w.size() % 2) ? -ph.value() : ph.value();
    out.add_term(w.reversed(), s * c);
  }
  return out;
}

FreeElem antipode_inv(const BraidingMatrix& b, const FreeElem& x) {
  FreeElem out(x.ctx());
  for (const auto& [w, c] : x.terms()) {
    Phase ph(b);
    for (std::size_t a = 0; a < w.size(); ++a)
      for (std::size_t bb = a + 1; bb < w.size(); ++bb) ph.mul_inv(w[bb], w[a]);
    const CycNum s = (w.size() % 2) ? -ph.value() : ph.value();
    out.add_term(w.reversed(), s * c);
  }
  return out;
}

TensorElem frak_R(const BraidingMatrix& b, int i, const TensorElem& t) {
  require_theta(b, i);
  TensorElem out(t.ctx());
  for (const auto& [key, c] : t.terms()) {
    const FreeElem y = FreeElem::word(t.ctx(), key.second);
    const std::size_t top = key.second.count(i);
    for (std::size_t k = 0; k <= top; ++k) {
      const FreeElem r = dual_action_right(b, y, i, k);
      const Word left = key.first + Word::power(i, k);
      for (const auto& [w, cw] : r.terms()) out.add_term(left, w, c * cw);
    }
  }
  return out;
}

FreeElem multiply_legs(const TensorElem& t) {
  FreeElem out(t.ctx());
  for (const auto& [k, c] : t.terms()) out.add_term(k.first + k.second, c);
  return out;
}

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view text, const ContextPtr& ctx, int theta) : ctx_(ctx), theta_(theta) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  FreeElem parse() {
    FreeElem out(ctx_);
    if (s_ == "0") return out;
    if (s_.empty()) fail("empty element");
    bool first = true;
    while (p_ < s_.size()) {
      CycNum sign = CycNum::one(ctx_);
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -sign;
        ++p_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coef, word] = term();
      out.add_term(word, sign * coef);
    }
    return out;
  }

 private:
  char peek() const { return p_ < s_.size() ? s_[p_] : '\0'; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("element: " + what + " at position " + std::to_string(p_) + " in '" + s_ + "'");
  }

  std::pair<CycNum, Word> term() {
    CycNum coef = CycNum::one(ctx_);
    while (true) {
      // A word ends the term unless it is followed by '*' (then it was a rational).
      if (peek() == '(' && p_ + 1 < s_.size() && s_[p_ + 1] == ')') {
        p_ += 2;
        return {coef, Word()};
      }
      if (peek() == '(') {
        const std::size_t close = matching(p_);
        coef *= parse_cyclo(std::string_view(s_).substr(p_ + 1, close - p_ - 1), ctx_);
        p_ = close + 1;
        expect_star();
        continue;
      }
      if (peek() == 'z') {
        std::size_t q = p_ + 1;
        if (q < s_.size() && s_[q] == '^') {
          ++q;
          if (q < s_.size() && s_[q] == '-') ++q;
          while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) ++q;
        }
        coef *= parse_cyclo(std::string_view(s_).substr(p_, q - p_), ctx_);
        p_ = q;
        expect_star();
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t q = p_;
        while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) ++q;
        if (q < s_.size() && s_[q] == '/') {
          ++q;
          while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) ++q;
          coef *= parse_cyclo(std::string_view(s_).substr(p_, q - p_), ctx_);
          p_ = q;
          expect_star();
          continue;
        }
        if (q < s_.size() && s_[q] == '*') {
          coef *= parse_cyclo(std::string_view(s_).substr(p_, q - p_), ctx_);
          p_ = q + 1;
          continue;
        }
        const Word w = Word::from_digits(std::string_view(s_).substr(p_, q - p_), theta_);
        p_ = q;
        return {coef, w};
      }
      fail("expected a coefficient or a word");
    }
  }

  void expect_star() {
    if (peek() != '*') fail("expected '*' after coefficient");
    ++p_;
  }

  std::size_t matching(std::size_t open) const {
    int depth = 0;
    for (std::size_t q = open; q < s_.size(); ++q) {
      if (s_[q] == '(') ++depth;
      if (s_[q] == ')' && --depth == 0) return q;
    }
    throw ParseError("element: unbalanced parenthesis in '" + s_ + "'");
  }

  ContextPtr ctx_;
  int theta_;
  std::string s_;
  std::size_t p_ = 0;
};

// Coefficient printed so that it can prefix "*word"; returns the sign separately.
std::pair<bool, std::string> coef_text(const CycNum& c) {
  mpq_class r;
  if (c.is_rational(&r)) {
    const bool neg = r < 0;
    if (neg) r = -r;
    return {neg, r == 1 ? "" : r.get_str()};
  }
  return {false, "(" + c.to_string() + ")"};
}

}  // namespace

FreeElem parse_element(std::string_view text, const ContextPtr& ctx, int theta) {
  return ElementParser(text, ctx, theta).parse();
}

std::string to_string(const FreeElem& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    auto [neg, ct] = coef_text(c);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    out += ct.empty() ? w.to_string() : ct + "*" + w.to_string();
  }
  return out;
}

std::string to_string(const TensorElem& t) {
  if (t.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << k.first.to_string() << "|" << k.second.to_string();
  }
  return os.str();
}

}  // namespace prenichols
