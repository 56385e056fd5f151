#ifndef PRENICHOLS_HILBERT_HPP
#define PRENICHOLS_HILBERT_HPP

#include <cstdint>
#include <map>

#include "prenichols/roots.hpp"

namespace prenichols {

// Multigraded power series truncated at a total degree; absent keys are 0.
using HilbertSeries = std::map<IntVector, std::uint64_t>;

// prod_{beta in Delta_+} (t^beta)_{N_beta}, with (t)_N = 1 + t + ... + t^{N-1}
// and 1/(1 - t^beta) for roots of infinite height.
HilbertSeries nichols_hilbert(const RootSystemReport& roots, std::int64_t max_total);
// prod_{beta not Cartan} (t^beta)_{N_beta} * prod_{beta Cartan} 1/(1 - t^beta).
HilbertSeries prenichols_hilbert(const RootSystemReport& roots, std::int64_t max_total);

std::uint64_t coefficient(const HilbertSeries& h, const IntVector& delta);

}  // namespace prenichols

#endif  // PRENICHOLS_HILBERT_HPP
