#include "prenichols/report.hpp"

namespace prenichols {

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j{{"check", r.check}, {"label", r.label}, {"params", r.params},
                   {"passed", r.passed}, {"data", r.data}, {"runtime_ms", r.runtime_ms}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

}  // namespace prenichols
