#pragma once

// Shared tokenizer for the line-based input formats.

#include <cstddef>
#include <string>
#include <vector>

namespace ampalg::detail {

struct Token {
  std::string text;
  std::size_t column;
};

/// Splits on whitespace; `:`, `=` and `->` are separate tokens even without
/// surrounding spaces.
std::vector<Token> tokenize(const std::string& line);

/// The line with any `#` comment removed.
std::string strip_comment(const std::string& line);

inline bool is_separator(const std::string& t) { return t == ":" || t == "=" || t == "->"; }

}  // namespace ampalg::detail
