#ifndef PRENICHOLS_REPORT_HPP
#define PRENICHOLS_REPORT_HPP

#include <chrono>
#include <optional>
#include <string>

#include "json.hpp"

namespace prenichols {

// Outcome of one executable check; a failure always carries a witness.
struct CheckReport {
  std::string check;
  std::string label;
  nlohmann::json params = nlohmann::json::object();
  bool passed = false;
  nlohmann::json data = nlohmann::json::object();
  std::optional<std::string> witness;
  double runtime_ms = 0;

  void fail(std::string w) {
    passed = false;
    if (!witness) witness = std::move(w);
  }
};

// Measures wall time into report.runtime_ms on destruction.
class ReportTimer {
 public:
  explicit ReportTimer(CheckReport& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() {
    r_.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  CheckReport& r_;
  std::chrono::steady_clock::time_point start_;
};

nlohmann::json to_json(const CheckReport& r);

}  // namespace prenichols

#endif  // PRENICHOLS_REPORT_HPP
