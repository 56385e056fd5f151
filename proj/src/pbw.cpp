#include "prenichols/pbw.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "prenichols/errors.hpp"
#include "prenichols/linalg.hpp"

namespace prenichols {

Recipe Recipe::letter(int i) {
  Recipe r;
  r.kind_ = Kind::Letter;
  r.letter_ = i;
  return r;
}

Recipe Recipe::comm(Recipe a, Recipe b) {
  Recipe r;
  r.kind_ = Kind::Comm;
  r.kids_ = {std::move(a), std::move(b)};
  return r;
}

Recipe Recipe::ad(int i, Recipe a) {
  Recipe r;
  r.kind_ = Kind::Ad;
  r.letter_ = i;
  r.kids_ = {std::move(a)};
  return r;
}

Recipe Recipe::mul(std::vector<Recipe> factors) {
  if (factors.empty()) throw DomainError("empty product recipe");
  Recipe r;
  r.kind_ = Kind::Mul;
  r.kids_ = std::move(factors);
  return r;
}

Recipe Recipe::pow(Recipe a, std::int64_t n) {
  if (n < 0) throw DomainError("negative power in recipe");
  Recipe r;
  r.kind_ = Kind::Pow;
  r.exponent_ = n;
  r.kids_ = {std::move(a)};
  return r;
}

Recipe Recipe::add(std::vector<Recipe> terms) {
  if (terms.empty()) throw DomainError("empty sum recipe");
  Recipe r;
  r.kind_ = Kind::Add;
  r.kids_ = std::move(terms);
  return r;
}

Recipe Recipe::scale(CycNum c, Recipe a) {
  Recipe r;
  r.kind_ = Kind::Scale;
  r.scalar_ = std::move(c);
  r.kids_ = {std::move(a)};
  return r;
}

FreeElem Recipe::expand(const BraidingMatrix& b) const {
  const ContextPtr& ctx = b.ctx();
  auto bracket = [&](const FreeElem& x, const FreeElem& y) {
    if (x.is_zero() || y.is_zero()) return FreeElem(ctx);
    return commutator_c(b, x, y);
  };
  switch (kind_) {
    case Kind::Letter:
      if (letter_ < 0 || letter_ >= b.theta()) throw ValidationError("recipe letter out of range");
      return FreeElem::letter(ctx, letter_);
    case Kind::Comm:
      return bracket(kids_[0].expand(b), kids_[1].expand(b));
    case Kind::Ad:
      if (letter_ < 0 || letter_ >= b.theta()) throw ValidationError("recipe letter out of range");
      return bracket(FreeElem::letter(ctx, letter_), kids_[0].expand(b));
    case Kind::Mul: {
      FreeElem x = kids_[0].expand(b);
      for (std::size_t k = 1; k < kids_.size(); ++k) x = x * kids_[k].expand(b);
      return x;
    }
    case Kind::Pow:
      return power(kids_[0].expand(b), static_cast<std::size_t>(exponent_));
    case Kind::Add: {
      FreeElem x(ctx);
      for (const auto& k : kids_) x += k.expand(b);
      return x;
    }
    case Kind::Scale:
      if (scalar_->ctx() != ctx) throw DomainError("recipe scalar lives in another cyclotomic field");
      return *scalar_ * kids_[0].expand(b);
  }
  return FreeElem(ctx);
}

std::string Recipe::to_string() const {
  auto join = [&](const char* op) {
    std::string s = std::string("(") + op;
    for (const auto& k : kids_) s += " " + k.to_string();
    return s + ")";
  };
  switch (kind_) {
    case Kind::Letter:
      return std::to_string(letter_ + 1);
    case Kind::Comm:
      return join("comm");
    case Kind::Ad:
      return "(ad " + std::to_string(letter_ + 1) + " " + kids_[0].to_string() + ")";
    case Kind::Mul:
      return join("mul");
    case Kind::Pow:
      return "(pow " + kids_[0].to_string() + " " + std::to_string(exponent_) + ")";
    case Kind::Add:
      return join("add");
    case Kind::Scale:
      return "(scale [" + scalar_->to_string() + "] " + kids_[0].to_string() + ")";
  }
  return "";
}

namespace {

class RecipeParser {
 public:
  RecipeParser(std::string_view text, const ContextPtr& ctx, int theta) : s_(text), ctx_(ctx), theta_(theta) {}

  Recipe parse() {
    Recipe r = node();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("recipe: " + what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::int64_t integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }
  int letter_index() {
    const std::int64_t i = integer();
    if (i < 1 || i > theta_) fail("letter " + std::to_string(i) + " out of range 1.." + std::to_string(theta_));
    return static_cast<int>(i - 1);
  }
  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  std::vector<Recipe> nodes_until_close() {
    std::vector<Recipe> out;
    while (!peek(')')) {
      if (pos_ >= s_.size()) fail("unterminated list");
      out.push_back(node());
    }
    return out;
  }
  Recipe node() {
    if (!peek('(')) return Recipe::letter(letter_index());
    ++pos_;
    const std::string op = word();
    Recipe r = Recipe::letter(0);
    if (op == "comm") {
      Recipe a = node();
      Recipe b = node();
      r = Recipe::comm(std::move(a), std::move(b));
    } else if (op == "ad") {
      const int i = letter_index();
      r = Recipe::ad(i, node());
    } else if (op == "mul") {
      r = Recipe::mul(nodes_until_close());
    } else if (op == "add") {
      r = Recipe::add(nodes_until_close());
    } else if (op == "pow") {
      Recipe a = node();
      r = Recipe::pow(std::move(a), integer());
    } else if (op == "scale") {
      expect('[');
      const std::size_t close = s_.find(']', pos_);
      if (close == std::string_view::npos) fail("unterminated scalar");
      CycNum c = parse_cyclo(s_.substr(pos_, close - pos_), ctx_);
      pos_ = close + 1;
      r = Recipe::scale(std::move(c), node());
    } else {
      fail("unknown operator '" + op + "'");
    }
    expect(')');
    return r;
  }

  std::string_view s_;
  ContextPtr ctx_;
  int theta_;
  std::size_t pos_ = 0;
};

}  // namespace

Recipe parse_recipe(std::string_view text, const ContextPtr& ctx, int theta) {
  return RecipeParser(text, ctx, theta).parse();
}

bool is_lyndon(const Word& w) {
  const std::string& s = w.raw();
  if (s.empty()) return false;
  for (std::size_t k = 1; k < s.size(); ++k)
    if (s.compare(k, std::string::npos, s) <= 0) return false;
  return true;
}

Recipe standard_bracketing(const Word& w) {
  if (w.size() == 1) return Recipe::letter(w[0]);
  for (std::size_t k = 1; k < w.size(); ++k) {
    const Word v = w.sub(k);
    if (is_lyndon(v)) return Recipe::comm(standard_bracketing(w.sub(0, k)), standard_bracketing(v));
  }
  throw DomainError("standard bracketing of a word of length > 1 needs a Lyndon suffix");
}

std::vector<Recipe> default_recipes(const RootSystemReport& report, QuotientView& q,
                                    const std::map<IntVector, Recipe>& overrides) {
  const BraidingMatrix& b = q.braiding();
  std::vector<Recipe> out;
  for (const auto& r : report.roots) {
    if (auto it = overrides.find(r.beta); it != overrides.end()) {
      out.push_back(it->second);
      continue;
    }
    if (total_degree(r.beta) == 1) {
      const auto pos = std::find(r.beta.begin(), r.beta.end(), 1) - r.beta.begin();
      out.push_back(Recipe::letter(static_cast<int>(pos)));
      continue;
    }
    std::vector<Word> lyndon;
    for (const auto& w : words_of_degree(r.beta))
      if (is_lyndon(w)) lyndon.push_back(w);
    std::sort(lyndon.begin(), lyndon.end(), [](const Word& a, const Word& c) { return a.raw() > c.raw(); });
    bool found = false;
    for (const auto& w : lyndon) {
      Recipe cand = standard_bracketing(w);
      if (q.is_in_ideal(cand.expand(b))) continue;
      out.push_back(std::move(cand));
      found = true;
      break;
    }
    if (!found) throw ValidationError("no recipe for root " + to_string(r.beta) + ": every Lyndon candidate vanishes");
  }
  return out;
}

PBWSpec make_pbw_spec(const RootSystemReport& report, const BraidingMatrix& b, std::vector<Recipe> recipes) {
  if (recipes.size() != report.roots.size()) throw ValidationError("one recipe per positive root is required");
  PBWSpec s{b, {}, {}, {}, std::move(recipes)};
  for (std::size_t k = 0; k < report.roots.size(); ++k) {
    const auto& r = report.roots[k];
    s.roots.push_back(r.beta);
    s.heights.push_back(r.height);
    s.cartan.push_back(r.cartan);
    const FreeElem e = s.recipes[k].expand(b);
    if (e.is_zero() || e.degree(b.theta()) != r.beta)
      throw ValidationError("recipe " + s.recipes[k].to_string() + " is not a nonzero element of degree " +
                            to_string(r.beta));
  }
  return s;
}

std::vector<PBWMonomial> enumerate_restricted(const PBWSpec& spec, const IntVector& delta, bool cap_cartan) {
  std::vector<PBWMonomial> out;
  const std::size_t m = spec.roots.size();
  PBWMonomial a(m, 0);
  std::function<void(std::size_t, const IntVector&)> rec = [&](std::size_t k, const IntVector& rest) {
    if (k == m) {
      if (total_degree(rest) == 0) out.push_back(a);
      return;
    }
    std::optional<std::int64_t> limit;
    if ((!spec.cartan[k] || cap_cartan) && spec.heights[k]) limit = *spec.heights[k] - 1;
    IntVector cur = rest;
    for (std::int64_t n = 0; is_nonnegative(cur) && (!limit || n <= *limit); ++n) {
      a[k] = n;
      rec(k + 1, cur);
      cur = cur - spec.roots[k];
    }
    a[k] = 0;
  };
  rec(0, delta);
  return out;
}

std::string monomial_to_string(const PBWSpec& spec, const PBWMonomial& a) {
  std::string s;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] == 0) continue;
    if (!s.empty()) s += " ";
    s += "E" + to_string(spec.roots[k]);
    if (a[k] > 1) s += "^" + std::to_string(a[k]);
  }
  return s.empty() ? "1" : s;
}

PBWExpander::PBWExpander(const PBWSpec& spec, QuotientView& q) : spec_(spec), q_(q) {}

const FreeElem& PBWExpander::root(std::size_t k) {
  auto it = roots_.find(k);
  if (it != roots_.end()) return it->second;
  return roots_.emplace(k, q_.normal_form(spec_.recipes.at(k).expand(spec_.braiding))).first->second;
}

FreeElem PBWExpander::monomial(const PBWMonomial& a) {
  FreeElem acc = FreeElem::scalar(CycNum::one(spec_.braiding.ctx()));
  for (std::size_t k = a.size(); k-- > 0;)
    for (std::int64_t n = 0; n < a[k]; ++n) acc = q_.normal_form(acc * root(k));
  return acc;
}

std::size_t expansion_rank(PBWExpander& ex, const IntVector& delta) {
  std::vector<FreeElem> cols;
  for (const auto& a : enumerate_restricted(ex.spec(), delta)) cols.push_back(ex.monomial(a));
  return span_rank(cols);
}

std::vector<std::pair<PBWMonomial, CycNum>> pbw_coefficients(PBWExpander& ex, const FreeElem& x,
                                                            const IntVector& delta) {
  const auto monos = enumerate_restricted(ex.spec(), delta);
  std::vector<FreeElem> cols;
  for (const auto& a : monos) cols.push_back(ex.monomial(a));
  const std::size_t dim = ex.quotient().quotient_dim(delta);
  if (monos.size() != dim || span_rank(cols) != dim)
    throw DomainError("restricted monomials of degree " + to_string(delta) + " are not a basis of the quotient");
  if (x.component(delta) != x) throw DomainError("element is not homogeneous of degree " + to_string(delta));
  const FreeElem target = ex.quotient().normal_form(x);
  const auto sol = solve_linear(cols, target);
  if (!sol) throw DomainError("element is outside the span of the PBW monomials");
  std::vector<std::pair<PBWMonomial, CycNum>> out;
  for (std::size_t k = 0; k < monos.size(); ++k) out.emplace_back(monos[k], (*sol)[k]);
  return out;
}

CheckReport verify_straightening(PBWExpander& ex, std::size_t k, std::size_t l) {
  CheckReport r;
  ReportTimer timer(r);
  const PBWSpec& spec = ex.spec();
  r.check = "straightening";
  r.params = {{"k", k + 1}, {"l", l + 1}};
  if (k >= l || l >= spec.roots.size()) throw DomainError("straightening needs k < l within the root list");
  const BraidingMatrix& b = spec.braiding;
  QuotientView& q = ex.quotient();
  const IntVector delta = spec.roots[k] + spec.roots[l];
  r.params["beta_k"] = to_string(spec.roots[k]);
  r.params["beta_l"] = to_string(spec.roots[l]);
  const FreeElem& ek = ex.root(k);
  const FreeElem& el = ex.root(l);
  const FreeElem x = q.normal_form(ek * el - chi_eval(b, spec.roots[k], spec.roots[l]) * (el * ek));

  std::vector<PBWMonomial> monos;
  for (const auto& a : enumerate_restricted(spec, delta)) {
    bool inside = true;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[j] != 0 && (j <= k || j >= l)) inside = false;
    if (inside) monos.push_back(a);
  }
  std::vector<FreeElem> cols;
  for (const auto& a : monos) cols.push_back(ex.monomial(a));
  const auto sol = solve_linear(cols, x);
  r.passed = sol.has_value();
  if (!sol) {
    r.fail("normal form of the q-commutator: " + to_string(x));
    return r;
  }
  nlohmann::json coeffs = nlohmann::json::object();
  for (std::size_t j = 0; j < monos.size(); ++j)
    if (!(*sol)[j].is_zero()) coeffs[monomial_to_string(spec, monos[j])] = (*sol)[j].to_string();
  r.data["coefficients"] = coeffs;
  r.data["monomials"] = monos.size();
  return r;
}

}  // namespace prenichols
