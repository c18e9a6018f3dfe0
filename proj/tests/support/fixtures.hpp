#pragma once

// Fixture files under tests/data and the diagnostics the CLI must give for
// the corrupted ones.

#include <string>
#include <vector>

namespace testsupport {

inline std::string data_path(const std::string& relative) { return std::string(AMPALG_TEST_DATA) + "/" + relative; }

struct CorruptCase {
  std::string subcommand;
  std::string file;
  std::string ring;
  std::string diagnostic;
};

inline std::vector<CorruptCase> corrupt_cases() {
  return {
      {"groupoid", "corrupt/broken_associativity.gpd", "Q", "associativity"},
      {"groupoid", "corrupt/missing_inverse.gpd", "Q", "missing inverse"},
      {"groupoid", "corrupt/unknown_arrow.gpd", "Q", "undeclared arrow 'g'"},
      {"isg", "corrupt/left_zero.isg", "Q", "pseudo-inverses"},
      {"isg", "corrupt/not_associative.isg", "GF(2)", "not associative"},
      {"graph", "corrupt/dangling_edge.quiv", "Z", "undeclared vertex 'w'"},
      {"groupoid", "pair.gpd", "GF(4)", "invalid ring descriptor"},
      {"graph", "a3.quiv", "Product(Q,", "invalid ring descriptor"},
      {"isg", "i2.isg", "Laurent(Laurent(Z))", "invalid ring descriptor"},
  };
}

}  // namespace testsupport
