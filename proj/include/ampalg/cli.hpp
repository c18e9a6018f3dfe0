#pragma once

// Command-line front end:
//
//   ampalg {groupoid|graph|isg} FILE --ring R [--verify] [--format text|machine]
//
// Exit codes: 0 analysis completed, 1 invalid input, 2 internal
// verification failure.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ampalg/report.hpp"

namespace ampalg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitVerification = 2;

AnalysisReport analyze_groupoid(std::string_view text, const std::string& source, const RingDescriptor& r, bool verify);
AnalysisReport analyze_graph(std::string_view text, const std::string& source, const RingDescriptor& r, bool verify);
AnalysisReport analyze_isg(std::string_view text, const std::string& source, const RingDescriptor& r, bool verify);

/// argv excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ampalg
