#include <cmath>
#include <sstream>

#include "json.hpp"

#include "provalign/checks.h"

namespace provalign::checks {

using Json = nlohmann::ordered_json;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "?";
}

namespace {

std::vector<std::string> trace_lines(const reasoner::TraceNode& t, const rdf::PrefixMap& px) {
  std::vector<std::string> out;
  std::istringstream in(reasoner::render(t, px));
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string participants(const reasoner::Clash& c, const rdf::PrefixMap& px) {
  std::string out;
  for (const auto& p : c.participants) {
    if (!out.empty()) out += " and ";
    out += owl::render(p, px);
  }
  return out;
}

Finding clash_finding(const reasoner::Clash& c, const rdf::PrefixMap& px) {
  Finding f;
  f.kind = std::string(reasoner::to_string(c.kind));
  std::string who = owl::render_term(c.individual, px);
  switch (c.kind) {
    case reasoner::Clash::Kind::Disjointness:
      f.message = who + " is a member of disjoint classes " + participants(c, px);
      break;
    case reasoner::Clash::Kind::Complement:
      f.message = who + " is a member of both " + participants(c, px);
      break;
    case reasoner::Clash::Kind::Nothing:
      f.message = who + " is a member of owl:Nothing";
      break;
  }
  f.terms.push_back(c.individual.value());
  f.details["individual"] = who;
  if (!c.axiom.empty()) f.details["axiom"] = c.axiom;
  for (const auto& t : c.traces) {
    auto lines = trace_lines(t, px);
    f.trace.insert(f.trace.end(), lines.begin(), lines.end());
  }
  return f;
}

Json number(double v) {
  if (std::floor(v) == v && std::fabs(v) < 9e15) return Json(static_cast<long long>(v));
  return Json(v);
}

Json to_json_value(const Report& r) {
  Json j;
  j["check"] = r.check;
  j["status"] = std::string(to_string(r.status));
  Json findings = Json::array();
  for (const auto& f : r.findings) {
    Json fj;
    fj["kind"] = f.kind;
    fj["message"] = f.message;
    if (!f.terms.empty()) fj["terms"] = f.terms;
    if (!f.details.empty()) {
      Json d = Json::object();
      for (const auto& [k, v] : f.details) d[k] = v;
      fj["details"] = d;
    }
    if (!f.trace.empty()) fj["trace"] = f.trace;
    findings.push_back(std::move(fj));
  }
  j["findings"] = std::move(findings);
  Json counts = Json::object();
  for (const auto& [k, v] : r.counts) counts[k] = number(v);
  j["counts"] = std::move(counts);
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (!r.reports.empty()) {
    Json parts = Json::array();
    for (const auto& p : r.reports) parts.push_back(to_json_value(p));
    j["reports"] = std::move(parts);
  }
  return j;
}

std::string format_count(double v) {
  if (std::floor(v) == v && std::fabs(v) < 9e15) return std::to_string(static_cast<long long>(v));
  std::ostringstream out;
  out.precision(4);
  out << v;
  return out.str();
}

void append_text(const Report& r, std::string& out, const std::string& indent) {
  out += indent + r.check + ": " + std::string(to_string(r.status)) + "\n";
  for (const auto& f : r.findings) {
    out += indent + "  - [" + f.kind + "] " + f.message + "\n";
    for (const auto& line : f.trace) out += indent + "      " + line + "\n";
  }
  if (!r.counts.empty()) {
    out += indent + "  counts:";
    for (const auto& [k, v] : r.counts) out += " " + k + "=" + format_count(v);
    out += "\n";
  }
  for (const auto& n : r.notes) out += indent + "  note: " + n + "\n";
  for (const auto& p : r.reports) append_text(p, out, indent + "  ");
}

}  // namespace

Report to_report(const TotalityReport& r, const rdf::PrefixMap& px) {
  Report out;
  out.check = "totality";
  for (const auto& u : r.unmapped) {
    Finding f;
    f.kind = "unmapped-term";
    f.message = owl::render_term(u.term, px) + " (" + std::string(to_string(u.category)) + ") is not mapped";
    f.terms.push_back(u.term.value());
    f.details["category"] = std::string(to_string(u.category));
    out.findings.push_back(std::move(f));
  }
  out.status = r.unmapped.empty() ? Status::Pass : Status::Fail;
  out.counts["source_terms"] = static_cast<double>(r.source_terms);
  out.counts["mapped"] = static_cast<double>(r.mapped_count());
  out.counts["unmapped"] = static_cast<double>(r.unmapped.size());
  for (auto how : {Credit::Direct, Credit::ViaChain, Credit::ViaRule, Credit::ViaSuperterm, Credit::ViaInverse})
    out.counts["credited_" + std::string(to_string(how))] = 0;
  for (const auto& c : r.credited) {
    out.counts["credited_" + std::string(to_string(c.how))] += 1;
    if (c.how != Credit::Direct)
      out.notes.push_back(owl::render_term(c.term, px) + " credited " + std::string(to_string(c.how)) +
                          ": " + c.via);
  }
  return out;
}

Report to_report(const CoherenceReport& r, const rdf::PrefixMap& px) {
  Report out;
  out.check = "coherence";
  for (const auto& u : r.unsatisfiable) {
    Finding f;
    f.kind = "unsatisfiable-class";
    f.message = owl::render_term(u.cls, px) + " is unsatisfiable";
    f.terms.push_back(u.cls.value());
    if (!u.clashes.empty()) {
      Finding c = clash_finding(u.clashes.front(), px);
      if (c.details.count("axiom")) f.details["axiom"] = c.details["axiom"];
      f.trace = std::move(c.trace);
    }
    out.findings.push_back(std::move(f));
  }
  for (const auto& [cls, why] : r.undetermined) {
    Finding f;
    f.kind = "undetermined-class";
    f.message = owl::render_term(cls, px) + " could not be decided: " + why;
    f.terms.push_back(cls.value());
    out.findings.push_back(std::move(f));
  }
  out.status = !r.unsatisfiable.empty() ? Status::Fail : !r.undetermined.empty() ? Status::Error : Status::Pass;
  out.counts["classes"] = static_cast<double>(r.probed);
  out.counts["unsatisfiable"] = static_cast<double>(r.unsatisfiable.size());
  out.counts["undetermined"] = static_cast<double>(r.undetermined.size());
  return out;
}

Report to_report(const std::vector<ConsistencyReport>& runs, const rdf::PrefixMap& px) {
  Report out;
  out.check = "consistency";
  std::size_t instances = 0, clashes = 0, inconsistent = 0;
  for (const auto& run : runs) {
    rdf::PrefixMap local = run.prefixes;
    for (const auto& [k, v] : px) local.emplace(k, v);
    instances += run.instance_count;
    clashes += run.clashes.size();
    if (!run.consistent()) ++inconsistent;
    for (const auto& c : run.clashes) {
      Finding f = clash_finding(c, local);
      if (!run.label.empty()) {
        f.details["file"] = run.label;
        f.message = run.label + ": " + f.message;
      }
      out.findings.push_back(std::move(f));
    }
    if (run.skolem_budget_exceeded)
      out.notes.push_back((run.label.empty() ? std::string("instances") : run.label) +
                          ": some existential restrictions were not witnessed within the skolem depth bound");
  }
  out.status = clashes == 0 ? Status::Pass : Status::Fail;
  out.counts["files"] = static_cast<double>(runs.size());
  out.counts["inconsistent_files"] = static_cast<double>(inconsistent);
  out.counts["instances"] = static_cast<double>(instances);
  out.counts["clashes"] = static_cast<double>(clashes);
  return out;
}

Report to_report(const ConservativityReport& r, const rdf::PrefixMap& px) {
  Report out;
  out.check = "conservativity";
  for (const auto& e : r.new_subsumptions) {
    Finding f;
    f.kind = e.property ? "new-subproperty" : "new-subsumption";
    f.message = owl::render_term(e.sub, px) + (e.property ? " SubPropertyOf " : " SubClassOf ") +
                owl::render_term(e.super, px) + " is newly entailed within " + e.signature;
    f.terms = {e.sub.value(), e.super.value()};
    f.details["signature"] = e.signature;
    out.findings.push_back(std::move(f));
  }
  for (const auto& e : r.new_equivalences) {
    Finding f;
    f.kind = e.property ? "new-equivalent-property" : "new-equivalence";
    f.message = owl::render_term(e.sub, px) + " EquivalentTo " + owl::render_term(e.super, px) +
                " is newly entailed within " + e.signature;
    f.terms = {e.sub.value(), e.super.value()};
    f.details["signature"] = e.signature;
    out.findings.push_back(std::move(f));
  }
  out.status = r.violated() ? Status::Fail : Status::Pass;
  out.counts["new_subsumptions"] = static_cast<double>(r.new_subsumptions.size());
  out.counts["new_subsumptions_total"] = static_cast<double>(r.total_new_subsumptions);
  out.counts["new_equivalences"] = static_cast<double>(r.new_equivalences.size());
  out.counts["new_disjointness"] = static_cast<double>(r.new_disjointness);
  if (r.new_disjointness > 0)
    out.notes.push_back(std::to_string(r.new_disjointness) +
                        " newly entailed disjointness pair(s) between terms of one ontology (informational)");
  return out;
}

Report to_report(const AlignmentStats& s) {
  Report out;
  out.check = "stats";
  for (auto p : {alignment::MappingPredicate::EquivalentClass, alignment::MappingPredicate::EquivalentProperty,
                 alignment::MappingPredicate::SubClassOf, alignment::MappingPredicate::SubPropertyOf,
                 alignment::MappingPredicate::PropertyChain, alignment::MappingPredicate::SwrlRule,
                 alignment::MappingPredicate::SkosRelated}) {
    auto it = s.by_predicate.find(p);
    out.counts["mappings_" + std::string(alignment::to_string(p))] =
        it == s.by_predicate.end() ? 0.0 : static_cast<double>(it->second);
  }
  out.counts["mappings_simple"] = static_cast<double>(s.simple);
  out.counts["mappings_complex"] = static_cast<double>(s.complex);
  out.counts["mappings_total"] = static_cast<double>(s.total);
  out.counts["credited_terms"] = static_cast<double>(s.credited);
  out.counts["credited_by_equivalence"] = static_cast<double>(s.credited_by_equivalence);
  out.counts["equivalence_coverage"] = s.equivalence_coverage;
  return out;
}

Report combine(std::string check, std::vector<Report> parts) {
  Report out;
  out.check = std::move(check);
  std::size_t failed = 0;
  bool error = false;
  for (const auto& p : parts) {
    if (p.status == Status::Fail) ++failed;
    if (p.status == Status::Error) error = true;
  }
  out.status = error ? Status::Error : failed ? Status::Fail : Status::Pass;
  out.counts["checks"] = static_cast<double>(parts.size());
  out.counts["failed_checks"] = static_cast<double>(failed);
  out.reports = std::move(parts);
  return out;
}

std::string to_json(const Report& r) { return to_json_value(r).dump(2) + "\n"; }

std::string to_text(const Report& r) {
  std::string out;
  append_text(r, out, "");
  return out;
}

}  // namespace provalign::checks
