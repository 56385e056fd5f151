#ifndef PRENICHOLS_VERIFY_HPP
#define PRENICHOLS_VERIFY_HPP

#include <vector>

#include "prenichols/catalog.hpp"
#include "prenichols/pbw.hpp"
#include "prenichols/quotient.hpp"
#include "prenichols/report.hpp"

namespace prenichols {

// Vertices are 0-based throughout; reports print them 1-based.

// Delta(E_i^n) = sum_s binom(n,s)_{q_ii} E_i^s (x) E_i^{n-s}, exact in T(V).
CheckReport check_power_coproduct(const BraidingMatrix& b, int i, int n);

// Delta(E^+_{j,n}) = E^+_{j,n} (x) 1 + sum_{s=0}^{n} c_s E_i^s (x) E^+_{j,n-s} and
// Delta(E^-_{j,n}) = 1 (x) E^-_{j,n} + sum_{s=0}^{n} d_s E^-_{j,n-s} (x) E_i^s, with
// c_s = binom(n,s)_{q_ii} prod_{r=n-s}^{n-1} (1 - q_ii^r q~_ij) and
// d_s = q_ij^s binom(n,s)_{q_ii} prod_{r=n-s}^{n-1} (1 - q_ii^{-r} q~_ij^{-1}); exact in T(V).
CheckReport check_adjoint_coproducts(const BraidingMatrix& b, int i, int j, int n);

// Delta(E^+_{j,m}) = frakR_i(E^+_{j,m} (x) 1 + 1 (x) E^+_{j,m}), exact in T(V).
CheckReport check_frak_r_generators(const BraidingMatrix& b, int i, int j, int m);

// E_beta^N X = chi(N beta, deg X) X E_beta^N modulo q.
CheckReport check_qcommute_powers(QuotientView& q, const FreeElem& root_vector, std::int64_t n, const FreeElem& probe);

// d^K_j(E_beta^N) = d^L_j(E_beta^N) = 0 modulo q for every j.
CheckReport check_derivations_vanish(QuotientView& q, const FreeElem& root_vector, std::int64_t n);

// chi(N_beta beta, alpha_j) chi(alpha_j, N_beta beta) = 1 for all Cartan roots beta, all j.
CheckReport check_symmetric_character(const BraidingMatrix& b);

// Left legs of Delta(E_{beta_k}^{N}) - trivial part, expanded in the PBW
// basis, only involve prod_{j<k} E_{beta_j}^{n_j N_j} over Cartan roots.
CheckReport check_left_coproduct_structure(PBWExpander& ex, std::size_t k);

// Super type A (1-based j <= k): Delta(E_{j,k}) formula, or with power = true
// the Delta(E_{j,k}^N) formula for a Cartan root, modulo the presentation.
CheckReport check_super_a_coproduct(int theta, int n, const std::vector<int>& marked, int j, int k, bool power,
                                    const QuotientCaps& caps = {});

// br(2;5) data block: basic or extended level (see README).
CheckReport check_br25(char variant, bool extended, const QuotientCaps& caps = {});

// Restricted-PBW counts equal quotient dims equal the product formula up to
// total degree max_total; expansions have full rank up to rank_total.
CheckReport check_pbw_count(PBWExpander& ex, std::int64_t max_total, std::int64_t rank_total);

// Quotient dimensions against the product formula (Nichols or pre-Nichols).
CheckReport check_hilbert(QuotientView& q, std::int64_t max_total);

// Witness text, truncated for reports.
std::string witness_text(const std::string& s);

}  // namespace prenichols

#endif  // PRENICHOLS_VERIFY_HPP
