#ifndef PRENICHOLS_FREEALG_HPP
#define PRENICHOLS_FREEALG_HPP

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prenichols/bichar.hpp"

namespace prenichols {

// A monomial E_{j_1} ... E_{j_n}; letters are stored 0-based, one char each.
// Ordered by length, then lexicographically, so the leading word of an
// element is its greatest one.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters) : s_(std::move(letters)) {}
  static Word letter(int i) { return Word(std::string(1, static_cast<char>(i))); }
  static Word power(int i, std::size_t n) { return Word(std::string(n, static_cast<char>(i))); }
  // "112" -> E_1 E_1 E_2 (1-based digits).
  static Word from_digits(std::string_view digits, int theta);

  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  int operator[](std::size_t k) const { return static_cast<unsigned char>(s_[k]); }
  const std::string& raw() const { return s_; }

  Word operator+(const Word& o) const { return Word(s_ + o.s_); }
  Word sub(std::size_t pos, std::size_t len = std::string::npos) const { return Word(s_.substr(pos, len)); }
  Word without(std::size_t pos) const;
  Word reversed() const { return Word(std::string(s_.rbegin(), s_.rend())); }
  std::size_t count(int letter) const;

  IntVector degree(int theta) const;
  // 1-based digit string; the empty word prints as "()".
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.s_.size() != b.s_.size()) return a.s_.size() <=> b.s_.size();
    return a.s_ <=> b.s_;
  }

 private:
  std::string s_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return std::hash<std::string>()(w.raw()); }
};

// All words of multidegree delta, in ascending word order.
std::vector<Word> words_of_degree(const IntVector& delta);
// Number of words of multidegree delta (multinomial coefficient).
std::size_t word_count(const IntVector& delta);

// Sparse element of T(V); no zero coefficients are stored.
class FreeElem {
 public:
  using Terms = std::map<Word, CycNum>;

  explicit FreeElem(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  FreeElem(ContextPtr ctx, const Word& w, const CycNum& c);
  static FreeElem word(ContextPtr ctx, const Word& w) { return FreeElem(ctx, w, CycNum::one(ctx)); }
  static FreeElem letter(ContextPtr ctx, int i) { return word(std::move(ctx), Word::letter(i)); }
  static FreeElem scalar(const CycNum& c) { return FreeElem(c.ctx(), Word(), c); }

  const ContextPtr& ctx() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  CycNum coefficient(const Word& w) const;
  // Greatest word; requires a nonzero element.
  const Word& leading_word() const { return terms_.rbegin()->first; }

  void add_term(const Word& w, const CycNum& c);

  FreeElem& operator+=(const FreeElem& o);
  FreeElem& operator-=(const FreeElem& o);
  FreeElem operator-() const;
  friend FreeElem operator+(FreeElem a, const FreeElem& b) { return a += b; }
  friend FreeElem operator-(FreeElem a, const FreeElem& b) { return a -= b; }
  friend FreeElem operator*(const FreeElem& a, const FreeElem& b);
  friend FreeElem operator*(const CycNum& c, const FreeElem& a);
  friend bool operator==(const FreeElem& a, const FreeElem& b);
  friend bool operator!=(const FreeElem& a, const FreeElem& b) { return !(a == b); }

  // The multidegree when homogeneous and nonzero.
  std::optional<IntVector> degree(int theta) const;
  bool is_homogeneous(int theta) const;
  FreeElem component(const IntVector& delta) const;
  // Distinct multidegrees that occur.
  std::vector<IntVector> degrees(int theta) const;

 private:
  ContextPtr ctx_;
  Terms terms_;
};

FreeElem power(const FreeElem& x, std::size_t n);

// Counit: the coefficient of the empty word.
CycNum counit(const FreeElem& x);

// Sparse element of T(V) (x) T(V).
class TensorElem {
 public:
  using Key = std::pair<Word, Word>;
  using Terms = std::map<Key, CycNum>;

  explicit TensorElem(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  static TensorElem pure(const FreeElem& x, const FreeElem& y);

  const ContextPtr& ctx() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  CycNum coefficient(const Word& a, const Word& b) const;

  void add_term(const Word& a, const Word& b, const CycNum& c);
  TensorElem& operator+=(const TensorElem& o);
  TensorElem& operator-=(const TensorElem& o);
  friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
  friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
  friend TensorElem operator*(const CycNum& c, const TensorElem& a);
  friend bool operator==(const TensorElem& a, const TensorElem& b);
  friend bool operator!=(const TensorElem& a, const TensorElem& b) { return !(a == b); }

  // Regrouped as sum_u u (x) y_u over distinct left words u (resp. right words).
  std::map<Word, FreeElem> by_left() const;
  std::map<Word, FreeElem> by_right() const;

  // Apply linear maps to each leg.
  TensorElem map_legs(const std::function<FreeElem(const FreeElem&)>& f,
                      const std::function<FreeElem(const FreeElem&)>& g) const;

 private:
  ContextPtr ctx_;
  Terms terms_;
};

// (x (x) y)(x' (x) y') = chi(|y|, |x'|) xx' (x) yy'.
TensorElem tensor_multiply(const BraidingMatrix& b, const TensorElem& s, const TensorElem& t);
TensorElem tensor_power(const BraidingMatrix& b, const TensorElem& t, std::size_t n);

// [x, y]_c = xy - chi(|x|, |y|) yx; x and y must be homogeneous.
FreeElem commutator_c(const BraidingMatrix& b, const FreeElem& x, const FreeElem& y);

// E^+_{j,m}: E^+_{j,0} = E_j, E^+_{j,m+1} = E_i E^+ - chi(alpha_i, |E^+|) E^+ E_i.
FreeElem ad_plus(const BraidingMatrix& b, int i, int j, int m);
// E^-_{j,m}: E^-_{j,m+1} = E_i E^- - chi(|E^-|, alpha_i)^{-1} E^- E_i.
FreeElem ad_minus(const BraidingMatrix& b, int i, int j, int m);

// Word formula: Delta(w) = sum_S beta(S) w_S (x) w_{S^c},
// beta(S) = prod_{a in S^c, b in S, a < b} chi(alpha_{j_a}, alpha_{j_b}).
TensorElem coproduct(const BraidingMatrix& b, const FreeElem& x);
// Delta as the algebra map determined by primitive generators.
TensorElem coproduct_iterative(const BraidingMatrix& b, const FreeElem& x);

// Delta_{n-1,1}(x) = sum_i d^K_i(x) (x) E_i and Delta_{1,n-1}(x) = sum_i E_i (x) d^L_i(x).
FreeElem partial_K(const BraidingMatrix& b, const FreeElem& x, int i);
FreeElem partial_L(const BraidingMatrix& b, const FreeElem& x, int i);

// x |> E_i^{(k)}: the right leg of the part of Delta(x) whose left leg is E_i^k.
FreeElem dual_action_right(const BraidingMatrix& b, const FreeElem& x, int i, std::size_t k);
// E_i^{(k)} |> x: the left leg of the part of Delta(x) whose right leg is E_i^k.
FreeElem dual_action_left(const BraidingMatrix& b, const FreeElem& x, int i, std::size_t k);

// Braided antipode: S(w) = (-1)^n prod_{a<b} chi(alpha_{j_a}, alpha_{j_b}) rev(w).
FreeElem antipode(const BraidingMatrix& b, const FreeElem& x);
// Compositional inverse: S^{-1}(w) = (-1)^n prod_{a<b} chi(alpha_{j_b}, alpha_{j_a})^{-1} rev(w).
FreeElem antipode_inv(const BraidingMatrix& b, const FreeElem& x);

// frakR_i(x (x) y) = sum_k x E_i^k (x) (y |> E_i^{(k)}), extended linearly.
TensorElem frak_R(const BraidingMatrix& b, int i, const TensorElem& t);

// Multiplication T (x) T -> T.
FreeElem multiply_legs(const TensorElem& t);

/*
 * Element text: terms joined by "+"/"-"; a term is a "*"-separated list of
 * coefficient atoms followed by a word.  Atoms are "(" cyclo ")", a rational
 * or "z[^k]"; words are 1-based digit strings or "()" for the empty word.
 * "0" is the zero element.  Example: "112 - (z^2 + z)*121 + 3/2*()".
 */
FreeElem parse_element(std::string_view text, const ContextPtr& ctx, int theta);
std::string to_string(const FreeElem& x);
std::string to_string(const TensorElem& t);

}  // namespace prenichols

#endif  // PRENICHOLS_FREEALG_HPP
