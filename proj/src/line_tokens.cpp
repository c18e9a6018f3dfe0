#include "line_tokens.hpp"

#include <cctype>

namespace ampalg::detail {

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == ':' || line[i] == '=') {
      out.push_back({std::string(1, line[i]), i});
      ++i;
      continue;
    }
    if (line.compare(i, 2, "->") == 0) {
      out.push_back({"->", i});
      i += 2;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != ':' && line[i] != '=' &&
           line.compare(i, 2, "->") != 0) {
      ++i;
    }
    out.push_back({line.substr(start, i - start), start});
  }
  return out;
}

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace ampalg::detail
