#include "prenichols/quotient.hpp"

#include <algorithm>
#include <functional>

#include "prenichols/errors.hpp"
#include "prenichols/linalg.hpp"

namespace prenichols {

void RelationSet::validate(int theta) const {
  for (const auto& g : generators) {
    if (g.is_zero()) throw ValidationError("relation '" + label + "': zero generator");
    const auto d = g.degree(theta);
    if (!d) throw ValidationError("relation '" + label + "': generator " + to_string(g) + " is not homogeneous");
    if (total_degree(*d) == 0) throw ValidationError("relation '" + label + "': generator of degree zero");
  }
}

struct QuotientView::Degree {
  IntVector delta;
  std::vector<Word> standard;                          // ascending
  std::unordered_map<Word, FreeElem, WordHash> nf;     // memoized word normal forms
  std::unique_ptr<WordEchelon> echelon;                // pre-Nichols: relations in candidate space
  std::unique_ptr<WordEchelon> image;                  // Nichols: echelon of derivation images
  std::map<Word, FreeElem> image_expr;                 // Nichols: row p = D(image_expr[p])
};

QuotientView::QuotientView(const BraidingMatrix& b, bool nichols, RelationSet rels, QuotientCaps caps)
    : b_(b), nichols_(nichols), rels_(std::move(rels)), caps_(caps) {}

std::shared_ptr<QuotientView> QuotientView::prenichols(const BraidingMatrix& b, RelationSet rels, QuotientCaps caps) {
  rels.validate(b.theta());
  for (const auto& g : rels.generators)
    if (g.ctx() != b.ctx()) throw ValidationError("relation lives in another cyclotomic field");
  return std::shared_ptr<QuotientView>(new QuotientView(b, false, std::move(rels), caps));
}

std::shared_ptr<QuotientView> QuotientView::nichols(const BraidingMatrix& b, QuotientCaps caps) {
  RelationSet none;
  none.label = "nichols";
  return std::shared_ptr<QuotientView>(new QuotientView(b, true, std::move(none), caps));
}

QuotientView::Degree& QuotientView::degree(const IntVector& delta) {
  auto it = degrees_.find(delta);
  if (it != degrees_.end()) return *it->second;
  if (static_cast<int>(delta.size()) != b_.theta() || !is_nonnegative(delta))
    throw DomainError("invalid multidegree " + to_string(delta));
  const std::size_t count = word_count(delta);
  if (count > caps_.max_words)
    throw CapExceeded("multidegree " + to_string(delta) + " has " + std::to_string(count) +
                      " words, above the cap of " + std::to_string(caps_.max_words));
  auto d = std::make_unique<Degree>();
  d->delta = delta;
  if (total_degree(delta) == 0) {
    d->standard.push_back(Word());
    d->nf.emplace(Word(), FreeElem::word(b_.ctx(), Word()));
  } else if (nichols_) {
    build_nichols(*d);
  } else {
    build_prenichols(*d);
  }
  return *degrees_.emplace(delta, std::move(d)).first->second;
}

void QuotientView::build_prenichols(Degree& d) {
  const int theta = b_.theta();
  const ContextPtr& ctx = b_.ctx();
  // Candidates E_i s, s standard in delta - alpha_i: a basis of T_delta / sum_i E_i I.
  std::vector<Word> candidates;
  for (int i = 0; i < theta; ++i) {
    if (d.delta[i] == 0) continue;
    IntVector lower = d.delta;
    --lower[i];
    for (const auto& s : degree(lower).standard) candidates.push_back(Word::letter(i) + s);
  }
  std::sort(candidates.begin(), candidates.end());

  // phi(E_i w') = E_i NF(w'): the image of a word in the candidate space.
  auto phi = [&](const Word& w) {
    IntVector lower = d.delta;
    --lower[w[0]];
    const FreeElem& tail = word_nf(degree(lower), w.sub(1));
    FreeElem out(ctx);
    const Word head = Word::letter(w[0]);
    for (const auto& [t, c] : tail.terms()) out.add_term(head + t, c);
    return out;
  };

  d.echelon = std::make_unique<WordEchelon>(ctx);
  for (const auto& r : rels_.generators) {
    const IntVector rest = d.delta - *r.degree(theta);
    if (!is_nonnegative(rest)) continue;
    for (const auto& v : words_of_degree(rest)) {
      FreeElem row(ctx);
      for (const auto& [w, c] : r.terms()) row += c * phi(w + v);
      d.echelon->insert(row);
    }
  }
  for (const auto& c : candidates)
    if (!d.echelon->is_pivot(c)) d.standard.push_back(c);
  // Standard words are their own normal form.
  for (const auto& s : d.standard) d.nf.emplace(s, FreeElem::word(ctx, s));
}

FreeElem QuotientView::derivation_image(const IntVector& delta, const Word& w) {
  const ContextPtr& ctx = b_.ctx();
  FreeElem out(ctx);
  const FreeElem x = FreeElem::word(ctx, w);
  for (int i = 0; i < b_.theta(); ++i) {
    if (delta[i] == 0) continue;
    const FreeElem reduced = nf_locked(partial_L(b_, x, i));
    const Word head = Word::letter(i);
    for (const auto& [t, c] : reduced.terms()) out.add_term(head + t, c);
  }
  return out;
}

void QuotientView::build_nichols(Degree& d) {
  const ContextPtr& ctx = b_.ctx();
  d.image = std::make_unique<WordEchelon>(ctx);
  // Column elimination in ascending word order: w is standard iff D(w) is
  // independent of D(smaller standard words); otherwise NF(w) is the
  // combination of standard words with the same image.
  for (const auto& w : words_of_degree(d.delta)) {
    std::map<Word, CycNum> mult;
    FreeElem v = d.image->reduce(derivation_image(d.delta, w), &mult);
    FreeElem combo(ctx);
    for (const auto& [p, c] : mult) combo += c * d.image_expr.at(p);
    if (v.is_zero()) {
      d.nf.emplace(w, std::move(combo));
      continue;
    }
    // v = D(w - combo).
    const Word p = v.leading_word();
    const CycNum s = inv(v.coefficient(p));
    d.image->insert(v);
    d.image_expr.emplace(p, s * (FreeElem::word(ctx, w) - combo));
    d.standard.push_back(w);
    d.nf.emplace(w, FreeElem::word(ctx, w));
  }
}

const FreeElem& QuotientView::word_nf(Degree& d, const Word& w) {
  auto it = d.nf.find(w);
  if (it != d.nf.end()) return it->second;
  if (nichols_) throw DomainError("word " + w.to_string() + " does not have degree " + to_string(d.delta));
  // Pre-Nichols: reduce E_{w_0} NF(rest) against the relation rows.
  IntVector lower = d.delta;
  --lower[w[0]];
  const FreeElem& tail = word_nf(degree(lower), w.sub(1));
  FreeElem x(b_.ctx());
  const Word head = Word::letter(w[0]);
  for (const auto& [t, c] : tail.terms()) x.add_term(head + t, c);
  return d.nf.emplace(w, d.echelon->reduce(std::move(x))).first->second;
}

FreeElem QuotientView::nf_locked(const FreeElem& x) {
  FreeElem out(b_.ctx());
  for (const auto& [w, c] : x.terms()) {
    const FreeElem& n = word_nf(degree(w.degree(b_.theta())), w);
    for (const auto& [t, tc] : n.terms()) out.add_term(t, c * tc);
  }
  return out;
}

FreeElem QuotientView::normal_form(const FreeElem& x) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (x.ctx() != b_.ctx()) throw DomainError("element lives in another cyclotomic field");
  return nf_locked(x);
}

FreeElem QuotientView::normal_form(const Word& w) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return word_nf(degree(w.degree(b_.theta())), w);
}

TensorElem QuotientView::normal_form(const TensorElem& t) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto f = [this](const FreeElem& x) { return nf_locked(x); };
  return t.map_legs(f, f);
}

std::size_t QuotientView::quotient_dim(const IntVector& delta) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return degree(delta).standard.size();
}

std::vector<Word> QuotientView::standard_words(const IntVector& delta) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return degree(delta).standard;
}

IdealSlice QuotientView::slice(const IntVector& delta) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  Degree& d = degree(delta);
  IdealSlice s;
  s.multidegree = delta;
  for (const auto& w : words_of_degree(delta)) {
    const FreeElem& n = word_nf(d, w);
    const FreeElem self = FreeElem::word(b_.ctx(), w);
    if (n == self) continue;
    s.echelon.push_back(self - n);
  }
  s.rank = s.echelon.size();
  return s;
}

IdealSlice ideal_slice(QuotientView& q, const IntVector& delta) { return q.slice(delta); }

IdealSlice nichols_slice(const BraidingMatrix& b, const IntVector& delta) {
  if (total_degree(delta) < 2) {
    IdealSlice s;
    s.multidegree = delta;
    return s;
  }
  return QuotientView::nichols(b)->slice(delta);
}

FreeElem normal_form(const FreeElem& x, QuotientView& q) { return q.normal_form(x); }
bool is_in_ideal(const FreeElem& x, QuotientView& q) { return q.is_in_ideal(x); }
std::size_t quotient_dim(QuotientView& q, const IntVector& delta) { return q.quotient_dim(delta); }

bool is_primitive_mod(const FreeElem& x, QuotientView& q) {
  const FreeElem one = FreeElem::scalar(CycNum::one(x.ctx()));
  TensorElem d = coproduct(q.braiding(), x);
  d -= TensorElem::pure(x, one);
  d -= TensorElem::pure(one, x);
  return q.normal_form(d).is_zero();
}

TensorElem coproduct_power_mod(const FreeElem& x, std::size_t n, QuotientView& q) {
  const TensorElem dx = q.normal_form(coproduct(q.braiding(), x));
  TensorElem acc(x.ctx());
  acc.add_term(Word(), Word(), CycNum::one(x.ctx()));
  for (std::size_t k = 0; k < n; ++k) acc = q.normal_form(tensor_multiply(q.braiding(), acc, dx));
  return acc;
}

std::vector<IntVector> multidegrees_up_to(int theta, std::int64_t d) {
  std::vector<IntVector> out;
  IntVector cur(static_cast<std::size_t>(theta), 0);
  std::function<void(int, std::int64_t)> rec = [&](int pos, std::int64_t left) {
    if (pos == theta) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t k = 0; k <= left; ++k) {
      cur[static_cast<std::size_t>(pos)] = k;
      rec(pos + 1, left - k);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  rec(0, d);
  std::stable_sort(out.begin(), out.end(),
                   [](const IntVector& a, const IntVector& b) { return total_degree(a) < total_degree(b); });
  return out;
}

}  // namespace prenichols
