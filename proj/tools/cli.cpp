#include "ampalg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ampalg/errors.hpp"
#include "ampalg/groupoid.hpp"
#include "ampalg/groupoid_algebra.hpp"
#include "ampalg/inverse_semigroup.hpp"
#include "ampalg/leavitt.hpp"
#include "ampalg/verdicts.hpp"

namespace ampalg {

namespace {

OracleOutcome run_oracle(const BasisAlgebra& algebra, const RingDescriptor& r, bool verdict_semisimple) {
  OracleOutcome o;
  if (r.kind() != RingKind::Rationals && r.kind() != RingKind::GaloisField) {
    o.reason = "oracle works over Q and GF(p) only";
    return o;
  }
  try {
    const auto res = radical_oracle(algebra, r);
    o.status = res.semisimple == verdict_semisimple ? OracleOutcome::Status::Agrees : OracleOutcome::Status::Disagrees;
    o.oracle_semisimple = res.semisimple;
    o.witness = res.witness_text;
  } catch (const OracleBudgetError& e) {
    o.reason = e.what();
  }
  return o;
}

std::string pairs_of(const VerificationReport& rep, const std::string& label) {
  const auto* c = rep.find(label);
  return c ? c->summary() : "n/a";
}

}  // namespace

AnalysisReport analyze_groupoid(std::string_view text, const std::string& source, const RingDescriptor& r, bool verify) {
  auto g = std::make_shared<const FiniteGroupoid>(parse_groupoid(text));
  const auto d = decompose(g, r);
  AnalysisReport rep;
  rep.kind = InputKind::Groupoid;
  rep.source = source;
  rep.ring = r;
  rep.summary = {{"objects", std::to_string(g->object_count())},
                 {"arrows", std::to_string(g->arrow_count())},
                 {"orbits", std::to_string(d.frames.size())}};
  rep.verdict = verdicts(d.structured, r);
  if (verify) {
    auto vr = verify_isomorphism(d);
    rep.verified_pairs = pairs_of(vr, check_labels::kMultiplicative);
    rep.checks = std::move(vr.checks);
    rep.oracle = run_oracle(basis_algebra(*g), r, rep.verdict.semisimple);
  }
  return rep;
}

AnalysisReport analyze_graph(std::string_view text, const std::string& source, const RingDescriptor& r, bool verify) {
  const Graph g = parse_graph(text);
  AnalysisReport rep;
  rep.kind = InputKind::Graph;
  rep.source = source;
  rep.ring = r;
  const auto cycles = enumerate_cycles(g);
  const auto ne = condition_ne(g);
  std::size_t sinks = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) sinks += g.is_sink(v) ? 1 : 0;
  const auto boundary = boundary_paths(g);
  rep.summary = {{"vertices", std::to_string(g.vertex_count())},
                 {"edges", std::to_string(g.edge_count())},
                 {"cycles", std::to_string(cycles.size())},
                 {"sinks", std::to_string(sinks)},
                 {"boundary paths", std::holds_alternative<InfiniteBoundary>(boundary)
                                        ? std::string("infinite")
                                        : std::to_string(std::get<std::vector<BoundaryPath>>(boundary).size())}};
  rep.verdict = leavitt_verdicts(g, r);
  if (!ne.holds) {
    const auto& w = *ne.witness;
    rep.notes.push_back("condition (NE) fails (witness: vertex " + g.vertex_name(w.vertex) + ", exit edge " +
                        g.edge(w.exit_edge).name + ")");
    const auto& inf = std::get<InfiniteBoundary>(boundary);
    std::string fam;
    for (const auto& f : inf.family) fam += (fam.empty() ? "" : ", ") + f;
    rep.notes.push_back("disjoint nonempty cylinders Z(" + fam + ", ...)");
    return rep;
  }
  if (verify) {
    const auto gg = graph_groupoid(g);
    auto vr = verify_leavitt_relations(gg, r);
    if (cycles.empty()) {
      CheckResult dim("generated dimension");
      std::size_t expect = 0;
      for (const auto& o : gg.orbits) expect += o.members.size() * o.members.size();
      const auto got = generated_subalgebra_dimension(gg);
      dim.check(got == expect, [&] { return std::to_string(got) + " != " + std::to_string(expect); });
      vr.checks.push_back(dim);
    }
    std::size_t passed = 0, total = 0;
    for (const auto& c : vr.checks) {
      passed += c.passed;
      total += c.total;
    }
    rep.verified_pairs = std::to_string(passed) + "/" + std::to_string(total);
    rep.checks = std::move(vr.checks);
  }
  return rep;
}

AnalysisReport analyze_isg(std::string_view text, const std::string& source, const RingDescriptor& r, bool verify) {
  const auto s = parse_isg(text);
  AnalysisReport rep;
  rep.kind = InputKind::Semigroup;
  rep.source = source;
  rep.ring = r;
  rep.summary = {{"elements", std::to_string(s.size())}, {"idempotents", std::to_string(s.idempotents().size())}};
  rep.verdict = isg_verdicts(s, r);
  if (verify) {
    auto iso = semigroup_algebra_iso(s, r);
    rep.verified_pairs = pairs_of(iso.report, isg_labels::kMultiplicative);
    rep.checks = std::move(iso.report.checks);
    rep.notes.push_back("transition determinant " + iso.transition_determinant.get_str());
    rep.oracle = run_oracle(basis_algebra(s), r, rep.verdict.semisimple);
  }
  return rep;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structure of ample groupoid, Leavitt path and inverse semigroup algebras", "ampalg"};
  app.require_subcommand(1);
  std::string file, ring_text, format = "text";
  bool verify = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "input file")->required();
    sub->add_option("--ring", ring_text, "coefficient ring, e.g. Q, Z, GF(2), Z/6, Laurent(Q), Product(Q,GF(3))")->required();
    sub->add_flag("--verify", verify, "run exhaustive checks and the radical oracle");
    sub->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  };
  auto* groupoid_cmd = app.add_subcommand("groupoid", "finite groupoid given by its composition table");
  auto* graph_cmd = app.add_subcommand("graph", "finite directed graph (Leavitt path algebra)");
  auto* isg_cmd = app.add_subcommand("isg", "finite inverse semigroup");
  for (auto* sub : {groupoid_cmd, graph_cmd, isg_cmd}) add_common(sub);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  std::ifstream in(file, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << file << '\n';
    return kExitInput;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  try {
    RingDescriptor r = RingDescriptor::integers();
    try {
      r = parse_ring_descriptor(ring_text);
    } catch (const InputError& e) {
      err << "error: invalid ring descriptor '" << ring_text << "': " << e.what() << '\n';
      return kExitInput;
    }
    AnalysisReport rep;
    if (groupoid_cmd->parsed()) {
      rep = analyze_groupoid(text, file, r, verify);
    } else if (graph_cmd->parsed()) {
      rep = analyze_graph(text, file, r, verify);
    } else {
      rep = analyze_isg(text, file, r, verify);
    }
    out << render_report(rep, format == "machine" ? ReportFormat::Machine : ReportFormat::Text);
    if (!rep.consistent()) {
      err << "internal verification failure: a check contradicted the structure theorem\n";
      return kExitVerification;
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << file << ": " << e.what() << '\n';
    return kExitInput;
  } catch (const VerificationError& e) {
    err << "internal verification failure: " << e.what() << '\n';
    return kExitVerification;
  }
}

}  // namespace ampalg
