#include "prenichols/hilbert.hpp"

#include <optional>

namespace prenichols {

namespace {

// h * (1 + t^beta + ... + t^{(n-1) beta}); n = nullopt means the full geometric series.
HilbertSeries times_factor(const HilbertSeries& h, const IntVector& beta, std::optional<std::int64_t> n,
                           std::int64_t max_total) {
  HilbertSeries out;
  const std::int64_t step = total_degree(beta);
  for (const auto& [delta, c] : h) {
    IntVector d = delta;
    for (std::int64_t k = 0; !n || k < *n; ++k) {
      if (total_degree(d) > max_total) break;
      out[d] += c;
      d = d + beta;
      if (step == 0) break;
    }
  }
  return out;
}

HilbertSeries product(const RootSystemReport& roots, std::int64_t max_total, bool cartan_free) {
  HilbertSeries h;
  h[IntVector(static_cast<std::size_t>(roots.theta), 0)] = 1;
  for (const auto& r : roots.roots) {
    std::optional<std::int64_t> n = r.height;
    if (cartan_free && r.cartan) n.reset();
    h = times_factor(h, r.beta, n, max_total);
  }
  return h;
}

}  // namespace

HilbertSeries nichols_hilbert(const RootSystemReport& roots, std::int64_t max_total) {
  return product(roots, max_total, false);
}

HilbertSeries prenichols_hilbert(const RootSystemReport& roots, std::int64_t max_total) {
  return product(roots, max_total, true);
}

std::uint64_t coefficient(const HilbertSeries& h, const IntVector& delta) {
  auto it = h.find(delta);
  return it == h.end() ? 0 : it->second;
}

}  // namespace prenichols
