#include "ampalg/report.hpp"

#include <cctype>
#include <sstream>

namespace ampalg {

std::string to_string(InputKind k) {
  switch (k) {
    case InputKind::Groupoid: return "groupoid";
    case InputKind::Graph: return "graph";
    case InputKind::Semigroup: return "isg";
  }
  return "unknown";
}

bool AnalysisReport::consistent() const {
  for (const auto& c : checks) {
    if (!c.ok()) return false;
  }
  return !oracle || oracle->status != OracleOutcome::Status::Disagrees;
}

namespace {

std::string yes_no(bool b, ReportFormat f) {
  if (f == ReportFormat::Machine) return b ? "true" : "false";
  return b ? "yes" : "no";
}

std::string key_of(const std::string& label) {
  std::string k;
  for (char c : label) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      k += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!k.empty() && k.back() != '_') {
      k += '_';
    }
  }
  while (!k.empty() && k.back() == '_') k.pop_back();
  return k;
}

std::string tags(const Verdict& v, Property p) {
  std::string s;
  for (auto c : v.citations(p)) s += (s.empty() ? "" : ",") + citation_tag(c);
  return s;
}

std::string oracle_value(const AnalysisReport& rep) {
  if (!rep.oracle) return "n/a";
  switch (rep.oracle->status) {
    case OracleOutcome::Status::Agrees: return "true";
    case OracleOutcome::Status::Disagrees: return "false";
    case OracleOutcome::Status::Skipped: return "skipped";
  }
  return "n/a";
}

const Property kVerdictProperties[] = {Property::Noetherian, Property::Artinian, Property::Semisimple};

bool verdict_value(const Verdict& v, Property p) {
  return p == Property::Noetherian ? v.noetherian : p == Property::Artinian ? v.artinian : v.semisimple;
}

std::string render_machine(const AnalysisReport& rep) {
  std::ostringstream out;
  const auto& v = rep.verdict;
  out << "noetherian=" << yes_no(v.noetherian, ReportFormat::Machine) << '\n';
  out << "artinian=" << yes_no(v.artinian, ReportFormat::Machine) << '\n';
  out << "semisimple=" << yes_no(v.semisimple, ReportFormat::Machine) << '\n';
  out << "shape=" << v.shape_string() << '\n';
  out << "verified_pairs=" << rep.verified_pairs.value_or("n/a") << '\n';
  out << "oracle_agreement=" << oracle_value(rep) << '\n';
  out << "input.kind=" << to_string(rep.kind) << '\n';
  out << "input.source=" << rep.source << '\n';
  out << "input.ring=" << rep.ring.to_string() << '\n';
  for (const auto& [k, val] : rep.summary) out << "input." << key_of(k) << '=' << val << '\n';
  for (auto p : {Property::Noetherian, Property::Artinian, Property::Semisimple, Property::Shape}) {
    out << "cite." << to_string(p) << '=' << tags(v, p) << '\n';
  }
  for (std::size_t i = 0; i < v.justification.size(); ++i) {
    const auto& j = v.justification[i];
    out << "reason." << i << '=' << to_string(j.property) << ';' << citation_tag(j.rule) << ';' << j.detail << '\n';
  }
  for (const auto& c : rep.checks) {
    out << "check." << key_of(c.label) << '=' << c.summary() << '\n';
    for (const auto& w : c.witnesses) out << "witness." << key_of(c.label) << '=' << w << '\n';
  }
  if (rep.oracle) {
    if (rep.oracle->status != OracleOutcome::Status::Skipped) {
      out << "oracle.semisimple=" << yes_no(rep.oracle->oracle_semisimple, ReportFormat::Machine) << '\n';
      if (!rep.oracle->witness.empty()) out << "oracle.witness=" << rep.oracle->witness << '\n';
    } else {
      out << "oracle.skipped=" << rep.oracle->reason << '\n';
    }
  }
  for (const auto& n : rep.notes) out << "note=" << n << '\n';
  return out.str();
}

std::string render_text(const AnalysisReport& rep) {
  std::ostringstream out;
  const auto& v = rep.verdict;
  out << "input: " << to_string(rep.kind) << ' ' << rep.source;
  if (!rep.summary.empty()) {
    out << " (";
    for (std::size_t i = 0; i < rep.summary.size(); ++i) {
      out << (i ? ", " : "") << rep.summary[i].first << ' ' << rep.summary[i].second;
    }
    out << ')';
  }
  out << '\n';
  out << "ring: " << rep.ring.to_string() << '\n';
  out << "decomposition: " << v.shape_string() << "  [" << tags(v, Property::Shape) << "]\n";
  for (auto p : kVerdictProperties) {
    std::string name = to_string(p);
    name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    out << name << ": " << yes_no(verdict_value(v, p), ReportFormat::Text) << "  [" << tags(v, p) << "]\n";
    for (const auto& j : v.justification) {
      if (j.property == p) out << "    " << citation_tag(j.rule) << ": " << j.detail << '\n';
    }
  }
  for (const auto& n : rep.notes) out << "note: " << n << '\n';
  if (!rep.checks.empty()) {
    out << "verification:\n";
    for (const auto& c : rep.checks) {
      out << "  " << c.label << ": " << c.summary() << (c.ok() ? "" : "  FAILED") << '\n';
      for (const auto& w : c.witnesses) out << "    witness: " << w << '\n';
    }
  }
  out << "verified pairs: " << rep.verified_pairs.value_or("n/a") << '\n';
  out << "radical oracle: ";
  if (!rep.oracle) {
    out << "n/a\n";
  } else if (rep.oracle->status == OracleOutcome::Status::Skipped) {
    out << "skipped (" << rep.oracle->reason << ")\n";
  } else {
    out << (rep.oracle->status == OracleOutcome::Status::Agrees ? "agrees" : "DISAGREES") << " (oracle says "
        << (rep.oracle->oracle_semisimple ? "semisimple" : "not semisimple") << ')';
    if (!rep.oracle->witness.empty()) out << "; radical witness " << rep.oracle->witness;
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string render_report(const AnalysisReport& rep, ReportFormat format) {
  return format == ReportFormat::Machine ? render_machine(rep) : render_text(rep);
}

}  // namespace ampalg
