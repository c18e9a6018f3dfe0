#pragma once

// Analysis reports and their text / key=value renderings.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ampalg/ring.hpp"
#include "ampalg/verdicts.hpp"
#include "ampalg/verification.hpp"

namespace ampalg {

enum class InputKind { Groupoid, Graph, Semigroup };
enum class ReportFormat { Text, Machine };

std::string to_string(InputKind k);

struct OracleOutcome {
  enum class Status { Agrees, Disagrees, Skipped };
  Status status = Status::Skipped;
  bool oracle_semisimple = false;
  std::string witness;
  /// Why the oracle was skipped, when it was.
  std::string reason;
};

struct AnalysisReport {
  InputKind kind = InputKind::Groupoid;
  std::string source;
  RingDescriptor ring = RingDescriptor::integers();
  /// Ordered (key, value) facts about the input, e.g. ("objects", "2").
  std::vector<std::pair<std::string, std::string>> summary;
  Verdict verdict;
  /// Empty unless verification ran.
  std::vector<CheckResult> checks;
  /// The headline pair count, e.g. `16/16`.
  std::optional<std::string> verified_pairs;
  std::optional<OracleOutcome> oracle;
  std::vector<std::string> notes;

  /// False when a check failed or the oracle disagreed.
  bool consistent() const;
};

/// Text is for people; machine is `key=value` lines with the keys noetherian,
/// artinian, semisimple, shape, verified_pairs and oracle_agreement always
/// present, followed by prefixed detail keys. Both carry the same facts.
std::string render_report(const AnalysisReport& rep, ReportFormat format);

}  // namespace ampalg
