#include "prenichols/linalg.hpp"

namespace prenichols {

FreeElem WordEchelon::reduce(FreeElem x) const { return reduce(std::move(x), nullptr); }

FreeElem WordEchelon::reduce(FreeElem x, std::map<Word, CycNum>* multipliers) const {
  if (rows_.empty()) return x;
  // Descending sweep: subtracting a row only touches words below its pivot.
  const Word* bound = nullptr;
  Word last;
  while (true) {
    const auto& t = x.terms();
    auto it = bound ? t.lower_bound(*bound) : t.end();
    const Word* pivot = nullptr;
    CycNum c;
    while (it != t.begin()) {
      --it;
      if (rows_.count(it->first)) {
        pivot = &it->first;
        c = it->second;
        break;
      }
    }
    if (!pivot) break;
    last = *pivot;
    bound = &last;
    const FreeElem& row = rows_.at(last);
    for (const auto& [w, rc] : row.terms()) x.add_term(w, -(c * rc));
    if (multipliers) {
      auto [mit, ins] = multipliers->try_emplace(last, c);
      if (!ins) mit->second += c;
    }
  }
  return x;
}

bool WordEchelon::insert(const FreeElem& x) {
  FreeElem r = reduce(x);
  if (r.is_zero()) return false;
  const Word p = r.leading_word();
  const CycNum lead = r.coefficient(p);
  if (!lead.is_one()) r = inv(lead) * r;
  rows_.emplace(p, std::move(r));
  return true;
}

std::optional<std::vector<CycNum>> solve_linear(const std::vector<FreeElem>& columns, const FreeElem& target) {
  const ContextPtr& ctx = target.ctx();
  // Basis rows b_p = sum_k expr_p[k] columns[k], monic at pivot p.
  std::map<Word, FreeElem> rows;
  std::map<Word, std::vector<CycNum>> exprs;
  const std::size_t n = columns.size();
  auto zero_vec = [&]() { return std::vector<CycNum>(n, CycNum::zero(ctx)); };

  auto reduce = [&](FreeElem v, std::vector<CycNum>& e) {
    // v - sum e[k] columns[k] is invariant.
    while (!v.is_zero()) {
      const Word* piv = nullptr;
      for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it)
        if (rows.count(it->first)) {
          piv = &it->first;
          break;
        }
      if (!piv) break;
      const Word p = *piv;
      const CycNum c = v.coefficient(p);
      for (const auto& [w, rc] : rows.at(p).terms()) v.add_term(w, -(c * rc));
      const auto& ep = exprs.at(p);
      for (std::size_t k = 0; k < n; ++k)
        if (!ep[k].is_zero()) e[k] += c * ep[k];
    }
    return v;
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::vector<CycNum> e = zero_vec();
    FreeElem v = reduce(columns[k], e);
    if (v.is_zero()) continue;
    // v = columns[k] - sum e[j] columns[j].
    std::vector<CycNum> expr = zero_vec();
    for (std::size_t j = 0; j < n; ++j) expr[j] = -e[j];
    expr[k] += CycNum::one(ctx);
    const Word p = v.leading_word();
    const CycNum s = inv(v.coefficient(p));
    v = s * v;
    for (auto& c : expr) c *= s;
    rows.emplace(p, std::move(v));
    exprs.emplace(p, std::move(expr));
  }
  std::vector<CycNum> sol = zero_vec();
  FreeElem rest = reduce(target, sol);
  if (!rest.is_zero()) return std::nullopt;
  return sol;
}

std::size_t span_rank(const std::vector<FreeElem>& vectors) {
  if (vectors.empty()) return 0;
  WordEchelon e(vectors.front().ctx());
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

}  // namespace prenichols
