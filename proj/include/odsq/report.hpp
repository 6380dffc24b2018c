#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace odsq {

// Outcome of one axiom checked over the whole carrier. A failing check
// carries the lexicographically smallest violating variable tuple.
struct AxiomCheck {
  std::string axiom;
  bool passed = false;
  std::vector<int> counterexample;

  friend bool operator==(const AxiomCheck&, const AxiomCheck&) = default;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const AxiomCheck* find(const std::string& axiom) const {
    for (const auto& c : checks)
      if (c.axiom == axiom) return &c;
    return nullptr;
  }

  const AxiomCheck* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }

  std::string summary() const {
    std::string out;
    for (const auto& c : checks) {
      out += c.passed ? "ok   " : "FAIL ";
      out += c.axiom;
      if (!c.passed) {
        out += " at (";
        for (std::size_t i = 0; i < c.counterexample.size(); ++i) {
          if (i) out += ",";
          out += std::to_string(c.counterexample[i]);
        }
        out += ")";
      }
      out += "\n";
    }
    return out;
  }

  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

// Thrown when an operation requires a validated structure but validation
// failed; carries the full report.
class axiom_error : public std::runtime_error {
public:
  axiom_error(const std::string& msg, AxiomReport report)
      : std::runtime_error(msg), report_(std::move(report)) {}

  const AxiomReport& report() const noexcept { return report_; }

private:
  AxiomReport report_;
};

}  // namespace odsq
