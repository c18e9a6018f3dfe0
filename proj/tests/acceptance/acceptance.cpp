// Acceptance run: one PASS/FAIL line per criterion, with failure details below it.
// Usage: acceptance <path-to-ampalg-binary>

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "ampalg/builders.hpp"
#include "ampalg/cli.hpp"
#include "ampalg/groupoid_algebra.hpp"
#include "ampalg/inverse_semigroup.hpp"
#include "ampalg/leavitt.hpp"
#include "ampalg/verdicts.hpp"
#include "corpus.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ampalg;
using namespace testsupport;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  std::vector<std::string> failures;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

std::string tool_path;
fs::path scratch;

struct ProcessResult {
  int code = -1;
  std::string out, err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

ProcessResult run_tool(const std::vector<std::string>& args) {
  std::string cmd = quote(tool_path);
  for (const auto& a : args) cmd += " " + quote(a);
  const auto out = scratch / "stdout.txt", err = scratch / "stderr.txt";
  cmd += " >" + quote(out.string()) + " 2>" + quote(err.string());
  int status = std::system(cmd.c_str());
  ProcessResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path write_input(const std::string& name, const std::string& text) {
  auto p = scratch / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

std::vector<RingDescriptor> rings(std::initializer_list<const char*> texts) {
  std::vector<RingDescriptor> out;
  for (const char* t : texts) out.push_back(parse_ring_descriptor(t));
  return out;
}

// 1. decomposition correctness
void decomposition_correctness(Criterion& c) {
  auto corpus = groupoid_corpus();
  c.expect(corpus.size() >= 20, "corpus has fewer than 20 groupoids");
  for (const auto& [name, g] : corpus) {
    for (const auto& r : rings({"Q", "Z", "GF(2)", "GF(3)", "Z/6"})) {
      const std::string where = name + " over " + r.to_string();
      auto rep = verify_isomorphism(decompose(g, r));
      for (const char* label : {check_labels::kFrame, check_labels::kCardinality, check_labels::kMultiplicative,
                                check_labels::kUnit, check_labels::kLeftInverse, check_labels::kRightInverse}) {
        const auto* chk = rep.find(label);
        c.expect(chk && chk->ok() && chk->total > 0, where + ": check '" + label + "' " + (chk ? chk->summary() : "missing"));
      }
      const auto* mult = rep.find(check_labels::kMultiplicative);
      c.expect(mult && mult->passed == g->arrow_count() * g->arrow_count(), where + ": not every basis pair was checked");
    }
  }
}

// 2. cardinality identity
void cardinality(Criterion& c) {
  for (const auto& [name, g] : groupoid_corpus()) {
    auto d = decompose(g, RingDescriptor::rationals());
    std::size_t from_shape = 0;
    for (const auto& o : d.shape()) from_shape += o.size * o.size * *o.isotropy.order();
    std::size_t from_census = 0;
    for (auto [size, loops] : orbit_census(*g)) from_census += size * size * loops;
    c.expect(from_shape == g->arrow_count(), name + ": sum n^2|G| = " + std::to_string(from_shape) + " but " +
                                                 std::to_string(g->arrow_count()) + " arrows");
    c.expect(from_census == g->arrow_count(), name + ": union-find census disagrees with the arrow count");
  }
}

// 3. verdict / oracle agreement
void oracle_agreement(Criterion& c) {
  std::size_t compared = 0;
  for (const auto& [name, g] : groupoid_corpus()) {
    if (g->arrow_count() > 12) continue;
    auto sg = structured_from_finite(*g);
    for (const auto& r : rings({"Q", "GF(2)", "GF(3)"})) {
      bool verdict = verdicts(sg, r).semisimple;
      auto oracle = radical_oracle(*g, r);
      c.expect(verdict == oracle.semisimple, name + " over " + r.to_string() + ": verdict " + (verdict ? "semisimple" : "not") +
                                                 ", oracle " + (oracle.semisimple ? "semisimple" : "not"));
      ++compared;
    }
  }
  c.expect(compared >= 30, "too few groupoids within the oracle budget");
  auto c2 = std::make_shared<const FiniteGroupoid>(group_groupoid(GroupTable::cyclic(2)));
  c.expect(radical_oracle(*c2, RingDescriptor::rationals()).semisimple, "Q[C_2] should be semisimple");
  auto gf2 = RingDescriptor::galois_field(2);
  auto res = radical_oracle(*c2, gf2);
  c.expect(!res.semisimple && res.witness_text == "e + g", "GF(2)[C_2] witness was '" + res.witness_text + "'");
  auto w = parse_algebra_element(c2, gf2, "e + g");
  c.expect(convolve(w, w).is_zero() && !w.is_zero(), "(1+g)^2 != 0 in GF(2)[C_2]");
}

// 4. Leavitt pipeline
void leavitt_pipeline(Criterion& c) {
  auto corpus = graph_corpus();
  c.expect(corpus.size() >= 15, "graph corpus has fewer than 15 graphs");
  for (const auto& [name, g] : corpus) {
    auto ne = condition_ne(g);
    auto boundary = boundary_paths(g);
    const bool finite = std::holds_alternative<std::vector<BoundaryPath>>(boundary);
    // (a) both directions, with a prefix count as an independent measure of |boundary|.
    c.expect(finite == ne.holds, name + ": (a) boundary finiteness disagrees with (NE)");
    const std::size_t n = 2 * g.vertex_count() + 1;
    const bool counts_stable = boundary_prefix_count(g, 2 * n) == boundary_prefix_count(g, n);
    c.expect(counts_stable == ne.holds, name + ": (a) prefix counts disagree with (NE)");
    if (!ne.holds) continue;
    auto gg = graph_groupoid(g);
    // (b) Z isotropy exactly on lasso orbits.
    for (std::size_t i = 0; i < gg.orbits.size(); ++i) {
      const auto& o = gg.orbits[i];
      const bool lasso = o.members.front().is_lasso();
      c.expect(gg.structured.orbits[i].isotropy.is_integers() == lasso, name + ": (b) isotropy kind on orbit " + std::to_string(i));
      const std::int64_t step = lasso ? static_cast<std::int64_t>(gg.cycles[o.anchor].length()) : 1;
      c.expect(is_arrow(o.members[0], step, o.members[0]) == lasso, name + ": (b) nontrivial loop at basepoint mismatch");
    }
    // (c) relations over Q and Z.
    for (const auto& r : rings({"Q", "Z"})) {
      auto rep = verify_leavitt_relations(gg, r);
      std::size_t total = 0;
      for (const auto& chk : rep.checks) {
        c.expect(chk.ok(), name + " over " + r.to_string() + ": (c) " + chk.label + " " + chk.summary());
        total += chk.total;
      }
      c.expect(total > 0, name + " over " + r.to_string() + ": (c) no relation was checked");
    }
    // (d) acyclic dimension count.
    if (gg.cycles.empty()) {
      mpz_class expected = 0;
      for (const auto& p : paths_to_sinks(g)) expected += p * p;
      c.expect(mpz_class(generated_subalgebra_dimension(gg)) == expected, name + ": (d) generated dimension");
    }
    // (e) pipeline consistency.
    for (const auto& r : rings({"Z", "Q", "GF(2)", "Z/4", "Laurent(Q)", "Product(Q, GF(3))"})) {
      auto lv = leavitt_verdicts(g, r);
      auto cv = verdicts(gg.structured, r);
      c.expect(lv.noetherian == cv.noetherian && lv.artinian == cv.artinian && lv.semisimple == cv.semisimple &&
                   lv.shape_string() == cv.shape_string(),
               name + " over " + r.to_string() + ": (e) leavitt verdicts differ from the orbit verdicts");
    }
  }
  auto a3 = graph_groupoid(graph_from_text("vertices: u v w\nedge e : u -> v\nedge f : v -> w\n"));
  c.expect(generated_subalgebra_dimension(a3) == 9, "(d) A_3 dimension is not 9");
  // (f) one descriptor per grammar production, plus nesting.
  auto rose = graph_from_text("vertices: v\nedge e : v -> v\nedge f : v -> v\n");
  for (const auto& r : rings({"Z", "Q", "GF(2)", "GF(3)", "GF(7)", "Z/4", "Z/6", "Laurent(Z)", "Laurent(GF(2))",
                              "Product(Q, Z)", "Product(GF(2), GF(3))", "Product(Laurent(Q), Z/9)"})) {
    c.expect(!leavitt_verdicts(rose, r).noetherian, "(f) rose with two petals Noetherian over " + r.to_string());
  }
}

// 5. inverse semigroup pipeline
void semigroup_pipeline(Criterion& c) {
  auto i2 = parse_isg(slurp(data_path("i2.isg")));
  c.expect(i2.size() == 7, "I_2 does not have 7 elements");
  auto q = RingDescriptor::rationals();
  auto v = isg_verdicts(i2, q);
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  std::size_t dim = 0;
  for (const auto& e : v.decomposition_shape) {
    blocks.push_back({e.size, *e.isotropy.order()});
    dim += e.size * e.size * *e.isotropy.order();
  }
  c.expect(blocks == std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}, {1, 2}},
           "I_2 shape is " + v.shape_string());
  c.expect(dim == 7, "I_2 dimension count is " + std::to_string(dim));
  for (const auto& r : rings({"Q", "GF(3)"})) {
    auto iso = semigroup_algebra_iso(i2, r);
    const auto* mult = iso.report.find(isg_labels::kMultiplicative);
    c.expect(mult && mult->passed == 49 && mult->total == 49, "I_2 over " + r.to_string() + ": pairs " + (mult ? mult->summary() : "?"));
    c.expect(iso.report.ok(), "I_2 over " + r.to_string() + ": a check failed");
    c.expect(abs(iso.transition_determinant) == 1, "I_2 transition matrix is not unimodular");
  }
  auto gf2 = RingDescriptor::galois_field(2);
  auto oracle = radical_oracle(basis_algebra(i2), gf2);
  c.expect(!isg_verdicts(i2, gf2).semisimple, "I_2 over GF(2) reported semisimple");
  c.expect(!oracle.semisimple, "radical oracle finds I_2 over GF(2) semisimple");
  std::vector<std::int64_t> witness;
  for (const auto& x : oracle.witness) witness.push_back(std::get<std::int64_t>(x.payload()));
  c.expect(!oracle.semisimple && generates_nilpotent_right_ideal(basis_algebra(i2), witness, 2),
           "I_2 radical witness fails the nilpotence check");

  for (const auto& r : rings({"Q", "Z", "GF(2)"})) {
    auto two = isg_verdicts(chain_semilattice(2), r);
    bool rr = two.decomposition_shape.size() == 2;
    for (const auto& e : two.decomposition_shape) rr = rr && e.size == 1 && e.isotropy.order() == std::optional<std::size_t>{1};
    c.expect(rr, "two-element semilattice over " + r.to_string() + " gives " + two.shape_string());
    c.expect(semigroup_algebra_iso(chain_semilattice(2), r).report.ok(), "semilattice iso check failed");
  }
  auto s3 = GroupTable::symmetric(3);
  auto gs = group_semigroup(s3);
  auto gv = isg_verdicts(gs, q);
  c.expect(gv.decomposition_shape.size() == 1 && gv.decomposition_shape[0].size == 1 &&
               gv.decomposition_shape[0].isotropy == IsotropyDescriptor::finite(s3),
           "group input gives " + gv.shape_string());
  auto giso = semigroup_algebra_iso(gs, q);
  bool unchanged = giso.report.ok();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const auto& img = giso.image[i];
    unchanged = unchanged && img.terms().size() == 1 && img.terms().begin()->second.is_one();
  }
  c.expect(unchanged, "group algebra is not carried basis element to basis element");
}

// 6. corrupted fixtures
void negative_controls(Criterion& c) {
  auto cases = corrupt_cases();
  c.expect(cases.size() >= 5, "fewer than five corrupted fixtures");
  for (const auto& k : cases) {
    auto r = run_tool({k.subcommand, data_path(k.file), "--ring", k.ring, "--verify", "--format", "machine"});
    c.expect(r.code == kExitInput, k.file + " --ring " + k.ring + ": exit " + std::to_string(r.code));
    c.expect(r.err.find(k.diagnostic) != std::string::npos, k.file + ": diagnostic lacks '" + k.diagnostic + "': " + r.err);
    c.expect(r.out.find("semisimple=") == std::string::npos, k.file + ": a verdict was rendered");
  }
}

// 7. determinism across two processes
void determinism(Criterion& c) {
  struct Job {
    std::string sub;
    fs::path file;
    std::string ring;
  };
  std::vector<Job> jobs;
  for (const auto& [name, g] : groupoid_corpus()) {
    auto p = write_input(name + ".gpd", groupoid_to_text(*g));
    for (const char* r : {"Q", "Z", "GF(2)", "GF(3)", "Z/6"}) jobs.push_back({"groupoid", p, r});
  }
  for (const auto& [name, g] : graph_corpus()) {
    auto p = write_input(name + ".quiv", graph_to_text(g));
    for (const char* r : {"Q", "Z", "GF(2)"}) jobs.push_back({"graph", p, r});
  }
  std::vector<std::pair<std::string, InverseSemigroup>> sgs = {
      {"i2", symmetric_inverse_monoid(2)}, {"i3", symmetric_inverse_monoid(3)}, {"chain2", chain_semilattice(2)},
      {"chain3", chain_semilattice(3)},    {"S3", group_semigroup(GroupTable::symmetric(3))}};
  for (const auto& [name, s] : sgs) {
    auto p = write_input(name + ".isg", isg_to_text(s));
    for (const char* r : {"Q", "GF(2)", "GF(3)"}) jobs.push_back({"isg", p, r});
  }
  for (const auto& job : jobs) {
    std::vector<std::string> args{job.sub, job.file.string(), "--ring", job.ring, "--verify", "--format", "machine"};
    auto first = run_tool(args);
    auto second = run_tool(args);
    const std::string where = job.file.filename().string() + " --ring " + job.ring;
    c.expect(first.code == kExitOk, where + ": exit " + std::to_string(first.code) + " " + first.err);
    c.expect(!first.out.empty() && first.out == second.out, where + ": outputs differ between runs");
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <ampalg binary>\n";
    return 2;
  }
  tool_path = argv[1];
  scratch = fs::temp_directory_path() / ("ampalg-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(scratch);

  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"decomposition verified over Q, Z, GF(2), GF(3), Z/6", decomposition_correctness},
      {"sum of n^2|G| equals the arrow count", cardinality},
      {"semisimple verdict agrees with the radical oracle", oracle_agreement},
      {"Leavitt pipeline (a)-(f)", leavitt_pipeline},
      {"inverse semigroup pipeline", semigroup_pipeline},
      {"corrupted fixtures exit 1 with their diagnostic", negative_controls},
      {"machine output byte-identical across runs", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << c.checks
              << " checks, " << ms << " ms)\n";
    for (std::size_t k = 0; k < c.failures.size() && k < 20; ++k) std::cout << "    " << c.failures[k] << '\n';
  }
  fs::remove_all(scratch);
  return failed == 0 ? 0 : 1;
}
