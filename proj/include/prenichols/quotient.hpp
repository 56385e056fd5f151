#ifndef PRENICHOLS_QUOTIENT_HPP
#define PRENICHOLS_QUOTIENT_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "prenichols/freealg.hpp"

namespace prenichols {

// Generators of a two-sided graded ideal of T(V).
struct RelationSet {
  std::vector<FreeElem> generators;
  std::string label;

  // Throws ValidationError unless every generator is nonzero, homogeneous
  // and of nonzero degree.
  void validate(int theta) const;
};

struct QuotientCaps {
  std::size_t max_words = 200000;  // words in a single multidegree
};

// The ideal in one multidegree: rows w - NF(w) for each non-standard word w.
// Leading words are pairwise distinct.
struct IdealSlice {
  IntVector multidegree;
  std::vector<FreeElem> echelon;
  std::size_t rank = 0;
};

/*
 * Degreewise model of T(V)/I for a two-sided graded ideal I, either given by
 * generators (pre-Nichols side) or the Nichols ideal J(V) (largest ideal
 * killed by all skew derivations).  Every word w gets a normal form NF(w)
 * supported on "standard" words smaller than or equal to w; NF is linear
 * with kernel exactly I in that degree.
 *
 * Multidegrees are computed lazily and memoized; the memo is guarded by a
 * mutex so a view can be shared between threads.
 */
class QuotientView {
 public:
  static std::shared_ptr<QuotientView> prenichols(const BraidingMatrix& b, RelationSet rels, QuotientCaps caps = {});
  static std::shared_ptr<QuotientView> nichols(const BraidingMatrix& b, QuotientCaps caps = {});

  const BraidingMatrix& braiding() const { return b_; }
  bool is_nichols() const { return nichols_; }
  const RelationSet& relations() const { return rels_; }
  const QuotientCaps& caps() const { return caps_; }

  FreeElem normal_form(const FreeElem& x);
  FreeElem normal_form(const Word& w);
  bool is_in_ideal(const FreeElem& x) { return normal_form(x).is_zero(); }

  std::size_t quotient_dim(const IntVector& delta);
  // Standard words of delta in ascending order; their classes form a basis.
  std::vector<Word> standard_words(const IntVector& delta);
  IdealSlice slice(const IntVector& delta);

  // Legwise normal form in (T/I) (x) (T/I).
  TensorElem normal_form(const TensorElem& t);

  QuotientView(const QuotientView&) = delete;
  QuotientView& operator=(const QuotientView&) = delete;

 private:
  struct Degree;
  QuotientView(const BraidingMatrix& b, bool nichols, RelationSet rels, QuotientCaps caps);

  Degree& degree(const IntVector& delta);
  void build_prenichols(Degree& d);
  void build_nichols(Degree& d);
  const FreeElem& word_nf(Degree& d, const Word& w);
  FreeElem nf_locked(const FreeElem& x);
  // Nichols side: (NF(d^L_i w))_i packed into one sparse vector keyed by E_i s.
  FreeElem derivation_image(const IntVector& delta, const Word& w);

  BraidingMatrix b_;
  bool nichols_;
  RelationSet rels_;
  QuotientCaps caps_;
  std::recursive_mutex mu_;
  std::map<IntVector, std::unique_ptr<Degree>> degrees_;
};

// Spec-level entry points.
IdealSlice ideal_slice(QuotientView& q, const IntVector& delta);
IdealSlice nichols_slice(const BraidingMatrix& b, const IntVector& delta);
FreeElem normal_form(const FreeElem& x, QuotientView& q);
bool is_in_ideal(const FreeElem& x, QuotientView& q);
std::size_t quotient_dim(QuotientView& q, const IntVector& delta);

// Delta(x) - x (x) 1 - 1 (x) x vanishes modulo I (x) T + T (x) I.
bool is_primitive_mod(const FreeElem& x, QuotientView& q);

// Delta(x)^n computed in (T/I) (x) (T/I), reducing both legs after every
// multiplication; valid because I is a Hopf ideal.
TensorElem coproduct_power_mod(const FreeElem& x, std::size_t n, QuotientView& q);

// All multidegrees in N_0^theta of total degree <= d (excluding none), in
// order of increasing total degree.
std::vector<IntVector> multidegrees_up_to(int theta, std::int64_t d);

}  // namespace prenichols

#endif  // PRENICHOLS_QUOTIENT_HPP
