#include <random>
#include <regex>
#include <sstream>

#include "doctest.h"

#include "ampalg/builders.hpp"
#include "ampalg/errors.hpp"
#include "ampalg/groupoid.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace ampalg;
using namespace testsupport;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace

TEST_CASE("validator agrees with the brute-force checker on the corpus") {
  for (const auto& [name, g] : groupoid_corpus()) {
    CAPTURE(name);
    CHECK(brute_force_is_groupoid(*g));
    CHECK(validate(*g).empty());
  }
}

TEST_CASE("text format round-trips") {
  for (const auto& [name, g] : groupoid_corpus()) {
    CAPTURE(name);
    auto text = groupoid_to_text(*g);
    CHECK(groupoid_to_text(parse_groupoid(text)) == text);
  }
}

TEST_CASE("validator agrees with the brute-force checker on corrupted tables") {
  std::mt19937 rng(99);
  const std::regex compose(R"(^compose (\S+) (\S+) = (\S+)$)");
  std::size_t rejected = 0, trials = 0;
  for (const auto& [name, g] : groupoid_corpus()) {
    if (g->arrow_count() < 2) continue;
    auto lines = lines_of(groupoid_to_text(*g));
    for (int trial = 0; trial < 6; ++trial) {
      auto edited = lines;
      // Redirect one composite to another arrow with the same typing.
      std::vector<std::size_t> candidates;
      for (std::size_t i = 0; i < edited.size(); ++i) {
        if (std::regex_match(edited[i], compose)) candidates.push_back(i);
      }
      auto at = candidates[rng() % candidates.size()];
      std::smatch m;
      std::regex_match(lines[at], m, compose);
      const auto& old = g->arrow(g->arrow_index(m[3].str()));
      std::vector<std::string> same_type;
      for (const auto& a : g->arrows()) {
        if (a.dom == old.dom && a.cod == old.cod && a.name != old.name) same_type.push_back(a.name);
      }
      if (same_type.empty()) continue;
      edited[at] = "compose " + m[1].str() + " " + m[2].str() + " = " + same_type[rng() % same_type.size()];
      auto bad = parse_groupoid(join(edited));
      CAPTURE(name);
      CAPTURE(edited[at]);
      CHECK(validate(bad).empty() == brute_force_is_groupoid(bad));
      rejected += validate(bad).empty() ? 0 : 1;
      ++trials;
    }
  }
  CHECK(trials > 50);
  CHECK(rejected == trials);
}

TEST_CASE("missing inverse and broken associativity are named") {
  auto text = groupoid_to_text(pair_groupoid(2));
  auto lines = lines_of(text);
  std::erase_if(lines, [](const std::string& l) { return l == "inverse f_ab = f_ba"; });
  auto g = parse_groupoid(join(lines));
  auto v = validate(g);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().kind == AxiomKind::MissingInverse);
  CHECK_THROWS_WITH_AS(require_valid(g), doctest::Contains("missing inverse"), InputError);

  auto bad = parse_groupoid(
      "objects: x\narrow e : x -> x\narrow a : x -> x\narrow b : x -> x\nidentity x = e\n"
      "compose e e = e\ncompose e a = a\ncompose a e = a\ncompose e b = b\ncompose b e = b\n"
      "compose a a = b\ncompose a b = b\ncompose b a = a\ncompose b b = a\n"
      "inverse e = e\ninverse a = b\ninverse b = a\n");
  CHECK_FALSE(brute_force_is_groupoid(bad));
  CHECK_THROWS_WITH_AS(require_valid(bad), doctest::Contains("associativity"), InputError);
}

TEST_CASE("parser diagnostics carry line and position") {
  try {
    parse_groupoid("objects: a\narrow f : a -> zz\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("undeclared object 'zz'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_groupoid("arrow f : a -> a\n"), InputError);
  CHECK_THROWS_AS(parse_groupoid("objects: a a\n"), InputError);
}

TEST_CASE("orbits and isotropy match a union-find census") {
  for (const auto& [name, g] : groupoid_corpus()) {
    CAPTURE(name);
    std::vector<std::pair<std::size_t, std::size_t>> got;
    for (const auto& o : orbits(*g)) {
      got.push_back({o.size(), isotropy(*g, o.basepoint).arrows.size()});
      CHECK(conjugation_failures(*g, o).empty());
      // Connecting arrows run from the basepoint to each member.
      for (std::size_t i = 0; i < o.size(); ++i) {
        CHECK(g->arrow(o.connecting[i]).dom == o.basepoint);
        CHECK(g->arrow(o.connecting[i]).cod == o.members[i]);
      }
    }
    std::sort(got.begin(), got.end());
    CHECK(got == orbit_census(*g));
  }
}

TEST_CASE("basepoint is the least-named object of each orbit") {
  auto g = disjoint_union(pair_groupoid(3), group_groupoid(GroupTable::cyclic(2)), "L.", "R.");
  for (const auto& o : orbits(g)) {
    for (auto m : o.members) CHECK(g.object_name(o.basepoint) <= g.object_name(m));
  }
}
