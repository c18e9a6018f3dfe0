#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ampalg {

/// Outcome of one exhaustive family of checks.
struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string name) : label(std::move(name)) {}

  std::string label;
  std::size_t passed = 0;
  std::size_t total = 0;
  /// Failing cases, in the order they were enumerated.
  std::vector<std::string> witnesses;

  bool ok() const { return passed == total; }
  void record(bool success, const std::string& witness) {
    ++total;
    if (success) {
      ++passed;
    } else {
      witnesses.push_back(witness);
    }
  }
  /// Like record(), but only builds the witness text on failure.
  template <class MakeWitness>
  void check(bool success, MakeWitness&& make_witness) {
    ++total;
    if (success) {
      ++passed;
    } else {
      witnesses.push_back(make_witness());
    }
  }
  std::string summary() const { return std::to_string(passed) + "/" + std::to_string(total); }
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool ok() const {
    for (const auto& c : checks) {
      if (!c.ok()) return false;
    }
    return true;
  }
  const CheckResult* find(const std::string& label) const {
    for (const auto& c : checks) {
      if (c.label == label) return &c;
    }
    return nullptr;
  }
};

}  // namespace ampalg
