// Acceptance run: one PASS/FAIL line per criterion with its time budget.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.h"
#include "provalign/checks.h"
#include "provalign/cli.h"
#include "provalign/matcher.h"
#include "support.h"

using namespace provalign;
using namespace testing_support;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int failures = 0;

void criterion(const std::string& id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = secs < limit_s;
  bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::cout << (pass ? "PASS" : "FAIL") << " " << id << " " << name << " [" << std::fixed << std::setprecision(3)
            << secs << " s, limit " << std::setprecision(0) << limit_s << " s]";
  if (!in_time) o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time budget");
  if (!o.detail.empty()) std::cout << " - " << o.detail;
  std::cout << std::endl;
}

template <class T>
std::string show(const std::set<T>& s) {
  std::string out = "{";
  for (const auto& x : s) out += (out.size() > 1 ? ", " : "") + x;
  return out + "}";
}

bool names_domain_or_range(const reasoner::Clash& c) {
  for (const auto& t : c.traces) {
    auto rules = t.rules();
    if (rules.count(reasoner::rule::domain) || rules.count(reasoner::rule::range)) return true;
  }
  return false;
}

std::set<std::string> inconsistent_files(const reasoner::ModelList& models, Outcome& o) {
  std::set<std::string> out;
  for (const auto& f : instance_files()) {
    std::string name = f.filename().string();
    auto r = checks::check_consistency(models, turtle::parse_turtle_file(f), {}, name);
    if (r.consistent()) continue;
    out.insert(name);
    for (const auto& c : r.clashes) {
      o.require(names_domain_or_range(c), name + " trace names no domain/range rule");
      o.require(c.axiom.find("Disjoint") != std::string::npos, name + " names no disjointness axiom");
    }
  }
  return out;
}

alignment::Alignment no_mappings() {
  alignment::Alignment a;
  a.source_ns = source_ns();
  a.target_ns = target_ns();
  return a;
}

std::vector<std::string> cli_stack(const std::string& command) {
  auto f = [](const char* n) { return fixture(n).string(); };
  return {command, "--source", f("prov-mini.ttl"), "--target", f("bfo-mini.ttl"), "--target", f("cco-mini.ttl"),
          "--target", f("ro-mini.ttl"), "--alignment", f("align-paper.ttl"), "--instances", f("instances"),
          "--source-ns", kProv, "--target-ns", kObo, "--target-ns", kCco, "--format", "json"};
}

std::vector<fs::path> ttl_files(const fs::path& dir) {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".ttl") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

// Full-scale mode: <dir>/source, <dir>/target, <dir>/alignment and
// <dir>/instances, each holding Turtle files.
fs::path vendored_dir() {
  if (const char* env = std::getenv("PROVALIGN_VENDORED_DIR")) return env;
  return fixture("vendored");
}

}  // namespace

int main() {
  const Stack& s = stack();

  criterion("1", "inconsistency regression", 5, [&] {
    Outcome o;
    auto prov_only = inconsistent_files({&s.prov}, o);
    auto full = inconsistent_files(s.full(), o);
    std::set<std::string> added;
    for (const auto& f : full)
      if (!prov_only.count(f)) added.insert(f);
    o.require(prov_only == std::set<std::string>{"example4.ttl", "revision.ttl"}, "prov-only " + show(prov_only));
    o.require(added == std::set<std::string>{"fig11.ttl", "fig9.ttl"}, "alignment-only " + show(added));
    if (o.ok) o.detail = "prov-only " + show(prov_only) + ", with alignment " + show(added);
    return o;
  });

  criterion("2", "corrected data has no clashes", 5, [&] {
    Outcome o;
    for (const char* name : {"fig10.ttl", "fig12.ttl"}) {
      auto r = checks::check_consistency(s.full(), turtle::parse_turtle_file(fixture("instances") / name), {}, name);
      o.require(r.clashes.empty(), std::string(name) + " has " + std::to_string(r.clashes.size()) + " clash(es)");
    }
    return o;
  });

  criterion("3", "conservativity", 5, [&] {
    Outcome o;
    auto bad = checks::check_conservativity(s.prov, {&s.bfo}, load_alignment("align-counterexample.ttl"),
                                            source_ns(), target_ns());
    o.require(bad.new_equivalences.empty(), "counterexample has new equivalences");
    o.require(bad.new_subsumptions.size() == 1 && bad.new_subsumptions[0].sub == prov("Agent") &&
                  bad.new_subsumptions[0].super == prov("Entity"),
              "counterexample violations: " + std::to_string(bad.new_subsumptions.size()));
    auto good = checks::check_conservativity(s.prov, s.targets(), s.paper, source_ns(), target_ns());
    o.require(!good.violated(), "paper alignment adds " + std::to_string(good.new_subsumptions.size()) +
                                    " subsumption(s), " + std::to_string(good.new_equivalences.size()) +
                                    " equivalence(s)");
    return o;
  });

  criterion("4", "coherence", 10, [&] {
    Outcome o;
    auto plan = load_alignment("align-incoherent-plan.ttl").as_model();
    auto bad = checks::check_coherence({&s.prov, &s.bfo, &plan});
    std::set<std::string> unsat;
    for (const auto& u : bad.unsatisfiable) unsat.insert(u.cls.value());
    o.require(unsat == std::set<std::string>{prov("Plan").value()}, "plan fixture " + show(unsat));
    auto good = checks::check_coherence(s.full());
    o.require(good.unsatisfiable.empty() && good.undetermined.empty(),
              "paper stack: " + std::to_string(good.unsatisfiable.size()) + " unsatisfiable");
    return o;
  });

  criterion("5", "totality", 2, [&] {
    Outcome o;
    auto empty = checks::check_totality(s.prov, {}, no_mappings());
    o.require(empty.source_terms > 0 && empty.unmapped.size() == empty.source_terms,
              "empty alignment lists " + std::to_string(empty.unmapped.size()) + "/" +
                  std::to_string(empty.source_terms));
    auto full = checks::check_totality(s.prov, s.targets(), s.paper);
    o.require(full.unmapped.empty(), std::to_string(full.unmapped.size()) + " unmapped");
    const auto* start = full.credit(prov("Start"));
    o.require(start && start->how == checks::Credit::ViaSuperterm, "Start not credited via superterm");
    bool rule = std::any_of(full.credited.begin(), full.credited.end(), [](const checks::CreditRecord& c) {
      return c.category == checks::TermCategory::ObjectProperty && c.how == checks::Credit::ViaRule;
    });
    o.require(rule, "no property credited via rule");
    if (o.ok) o.detail = std::to_string(full.source_terms) + " terms, 0 unmapped";
    return o;
  });

  fs::path vendored = vendored_dir();
  if (fs::is_directory(vendored)) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      std::vector<owl::OntologyModel> models;
      for (const auto& f : ttl_files(vendored / "source")) models.push_back(load_model(f.string()));
      std::size_t sources = models.size();
      for (const auto& f : ttl_files(vendored / "target")) models.push_back(load_model(f.string()));
      std::vector<alignment::Alignment> parts;
      for (const auto& f : ttl_files(vendored / "alignment")) parts.push_back(load_alignment(f.string()));
      auto al = alignment::merge_alignments(parts);
      owl::OntologyModel al_model = al.as_model();
      reasoner::ModelList all;
      std::vector<const owl::OntologyModel*> targets;
      for (std::size_t i = 0; i < models.size(); ++i) {
        all.push_back(&models[i]);
        if (i >= sources) targets.push_back(&models[i]);
      }
      all.push_back(&al_model);
      std::size_t source_terms = 0, unmapped = 0;
      for (std::size_t i = 0; i < sources; ++i) {
        auto t = checks::check_totality(models[i], targets, al);
        source_terms += t.source_terms;
        unmapped += t.unmapped.size();
      }
      o.require(source_terms == 153 && unmapped == 0,
                std::to_string(unmapped) + " unmapped of " + std::to_string(source_terms));
      std::size_t instances = 0;
      for (const auto& f : ttl_files(vendored / "instances"))
        instances += checks::check_consistency(all, turtle::parse_turtle_file(f)).instance_count;
      o.require(instances == 312, std::to_string(instances) + " instances");
    } catch (const std::exception& e) {
      o.require(false, e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 300, "over time budget");
    // Optional: reported, but the fixture-scale criteria decide the verdict.
    std::cout << "note 5 full-scale totality and instance count: " << (o.ok ? "ok" : "not met") << " [" << std::fixed
              << std::setprecision(3) << secs << " s, limit 300 s]" << (o.detail.empty() ? "" : " - " + o.detail)
              << std::endl;
  } else {
    std::cout << "note 5 full-scale totality and instance count: skipped, no vendored ontologies at "
              << vendored.string() << std::endl;
  }

  criterion("6", "property matcher", 2, [&] {
    Outcome o;
    auto out = matcher::suggest_property_mappings(prov("generated"), s.prov, {&s.bfo, &s.cco}, s.paper);
    std::set<std::string> labels;
    for (const auto& c : out.candidates) {
      auto it = s.cco.labels.find(c.property);
      labels.insert(it == s.cco.labels.end() ? c.property.value() : it->second);
    }
    o.require(labels == std::set<std::string>{"affects", "has input", "has output"}, "got " + show(labels));
    if (o.ok) o.detail = show(labels);
    return o;
  });

  // The four property suites share the 60 s budget each.
  criterion("7a", "property suite: taxonomy oracle", 60, [&] {
    Outcome o;
    std::mt19937 rng(20240129);
    std::size_t bad = 0;
    for (int i = 0; i < 200; ++i) bad += oracles::taxonomy_mismatches(oracles::random_tbox(rng, i));
    o.require(bad == 0, std::to_string(bad) + " mismatches");
    if (o.ok) o.detail = "200 TBoxes, 0 mismatches";
    return o;
  });
  criterion("7b", "property suite: parser round trip", 60, [&] {
    Outcome o;
    std::size_t n = 0;
    for (const auto& f : turtle_fixtures()) {
      rdf::Graph g = turtle::parse_turtle_file(f);
      rdf::Graph back = turtle::parse_turtle(turtle::serialize_turtle(g));
      o.require(rdf::graph_isomorphic(g, back), f.filename().string() + " not isomorphic");
      ++n;
    }
    o.require(n > 0, "no fixtures");
    if (o.ok) o.detail = std::to_string(n) + " files";
    return o;
  });
  criterion("7c", "property suite: mapping codec round trip", 60, [&] {
    Outcome o;
    std::size_t n = 0;
    for (const char* name : {"align-paper.ttl", "align-incoherent-plan.ttl", "align-counterexample.ttl"}) {
      for (const auto& m : load_alignment(name).mappings) {
        if (m.predicate == alignment::MappingPredicate::SkosRelated) continue;  // not serializable
        auto back = alignment::extract_mappings(owl::extract_axioms(alignment::serialize_mapping(m)), source_ns(),
                                                target_ns());
        o.require(back.mappings.size() == 1 && back.mappings[0] == m, m.subject_id() + " -> " + m.object_id());
        ++n;
      }
    }
    if (o.ok) o.detail = std::to_string(n) + " mappings";
    return o;
  });
  criterion("7d", "property suite: check-all determinism", 60, [&] {
    Outcome o;
    std::ostringstream a, b, err;
    int ca = cli::run(cli_stack("check-all"), a, err);
    int cb = cli::run(cli_stack("check-all"), b, err);
    o.require(ca == cb && ca != cli::kUsageOrLoad, "exit codes " + std::to_string(ca) + "/" + std::to_string(cb));
    o.require(!a.str().empty() && a.str() == b.str(), "reports differ");
    return o;
  });

  criterion("8", "sssom export", 2, [&] {
    Outcome o;
    std::istringstream in(alignment::export_sssom(s.paper));
    std::string header;
    std::getline(in, header);
    o.require(header == alignment::kSssomHeader, "header mismatch");
    std::size_t rows = 0;
    for (std::string line; std::getline(in, line);) {
      if (line.empty() || line[0] == '#') continue;
      ++rows;
      o.require(line.find(",manual mapping curation,") != std::string::npos, "row without justification");
    }
    o.require(rows == s.paper.simple_count(),
              std::to_string(rows) + " rows for " + std::to_string(s.paper.simple_count()) + " simple mappings");
    if (o.ok) o.detail = std::to_string(rows) + " rows";
    return o;
  });

  return failures == 0 ? 0 : 1;
}
