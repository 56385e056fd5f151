#ifndef PRENICHOLS_LINALG_HPP
#define PRENICHOLS_LINALG_HPP

#include <map>
#include <vector>

#include "prenichols/freealg.hpp"

namespace prenichols {

/*
 * Row echelon form over Q(zeta) on sparse vectors indexed by words.  Each
 * row is monic at its pivot, the greatest word it contains; pivots are
 * pairwise distinct.  Rows are not back-substituted: reduction sweeps words
 * in descending order, which yields the unique representative supported on
 * non-pivot words.
 */
class WordEchelon {
 public:
  explicit WordEchelon(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  // Reduced representative of x modulo the row space.
  FreeElem reduce(FreeElem x) const;
  // Same, also returning the multipliers: x = reduce(x) + sum_p m[p] * row(p).
  FreeElem reduce(FreeElem x, std::map<Word, CycNum>* multipliers) const;
  // Adds x to the row space; returns false when it was already in it.
  bool insert(const FreeElem& x);

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(const Word& w) const { return rows_.count(w) != 0; }
  const std::map<Word, FreeElem>& rows() const { return rows_; }

 private:
  ContextPtr ctx_;
  std::map<Word, FreeElem> rows_;
};

// Solves sum_k c_k columns[k] = target exactly; nullopt when unsolvable.
// The solution is unique when the columns are independent; otherwise free
// variables are set to zero.
std::optional<std::vector<CycNum>> solve_linear(const std::vector<FreeElem>& columns, const FreeElem& target);

// Rank of the span of the given vectors.
std::size_t span_rank(const std::vector<FreeElem>& vectors);

}  // namespace prenichols

#endif  // PRENICHOLS_LINALG_HPP
