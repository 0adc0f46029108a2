#include "provalign/cli.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "provalign/checks.h"
#include "provalign/error.h"
#include "provalign/matcher.h"
#include "provalign/turtle.h"

namespace provalign::cli {

namespace fs = std::filesystem;

namespace {

struct Config {
  std::string command;
  std::vector<std::string> sources, targets, alignments, instances;
  std::vector<std::string> source_ns, target_ns, properties;
  int skolem_depth = 3;
  std::optional<std::size_t> fact_cap;
  std::string format = "text";
  std::string out_path;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

class Workspace {
 public:
  Workspace(const Config& cfg, std::ostream& err) : cfg_(cfg), err_(err) {}

  void load() {
    if (!cfg_.sources.empty()) {
      rdf::Graph merged;
      for (const auto& p : cfg_.sources) merged.merge(read(p));
      std::string label = cfg_.sources.size() == 1 ? stem(cfg_.sources[0]) : "source";
      source_ = std::make_unique<owl::OntologyModel>(owl::extract_axioms(merged, label));
      add_prefixes(source_->prefixes);
    }
    for (const auto& p : cfg_.targets) {
      targets_.push_back(std::make_unique<owl::OntologyModel>(owl::extract_axioms(read(p), stem(p))));
      add_prefixes(targets_.back()->prefixes);
    }
    if (!cfg_.alignments.empty()) {
      if (cfg_.source_ns.empty() || cfg_.target_ns.empty())
        throw UsageError("--source-ns and --target-ns are required with --alignment");
      std::vector<alignment::Alignment> parts;
      for (const auto& p : cfg_.alignments) {
        owl::OntologyModel m = owl::extract_axioms(read(p), stem(p));
        parts.push_back(alignment::extract_mappings(m, cfg_.source_ns, cfg_.target_ns));
      }
      alignment_ = alignment::merge_alignments(parts);
      add_prefixes(alignment_.prefixes);
      have_alignment_ = true;
    } else {
      alignment_.source_ns = cfg_.source_ns;
      alignment_.target_ns = cfg_.target_ns;
    }
    alignment_model_ = alignment_.as_model();
    for (const auto& p : cfg_.instances) {
      fs::path path(p);
      if (fs::is_directory(path)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(path))
          if (entry.is_regular_file() && entry.path().extension() == ".ttl") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) instance_files_.push_back(f.string());
      } else {
        instance_files_.push_back(p);
      }
    }
  }

  rdf::Graph read(const std::string& path) {
    std::vector<turtle::ParseDiagnostic> warnings;
    rdf::Graph g = turtle::parse_turtle_file(path, &warnings);
    for (const auto& w : warnings)
      err_ << path << ":" << w.line << ":" << w.column << ": warning: " << w.message << "\n";
    return g;
  }

  void require_source() const {
    if (!source_) throw UsageError(cfg_.command + " needs --source");
  }
  void require_target() const {
    if (targets_.empty()) throw UsageError(cfg_.command + " needs --target");
  }
  void require_alignment() const {
    if (!have_alignment_) throw UsageError(cfg_.command + " needs --alignment");
  }

  reasoner::Options options() const {
    reasoner::Options o;
    o.skolem_depth = cfg_.skolem_depth;
    if (cfg_.fact_cap) {
      o.fact_cap = *cfg_.fact_cap;
    } else if (const char* env = std::getenv("PROVALIGN_FACT_CAP")) {
      try {
        o.fact_cap = std::stoull(env);
      } catch (const std::exception&) {
        throw UsageError(std::string("PROVALIGN_FACT_CAP is not a number: ") + env);
      }
    }
    return o;
  }

  // Source, targets and alignment.
  reasoner::ModelList merged(bool with_alignment = true) const {
    reasoner::ModelList out;
    if (source_) out.push_back(source_.get());
    for (const auto& t : targets_) out.push_back(t.get());
    if (with_alignment && have_alignment_) out.push_back(&alignment_model_);
    return out;
  }
  reasoner::ModelList target_list() const {
    reasoner::ModelList out;
    for (const auto& t : targets_) out.push_back(t.get());
    return out;
  }

  checks::Report totality() const {
    require_source();
    return checks::to_report(checks::check_totality(*source_, target_list(), alignment_), prefixes_);
  }

  checks::Report coherence() const {
    auto models = merged();
    if (models.empty()) throw UsageError(cfg_.command + " needs at least one ontology");
    return checks::to_report(checks::check_coherence(models, options()), prefixes_);
  }

  checks::Report consistency(bool required) {
    if (required && instance_files_.empty()) throw UsageError(cfg_.command + " needs --instances");
    std::vector<checks::ConsistencyReport> runs;
    auto models = merged();
    for (const auto& path : instance_files_)
      runs.push_back(checks::check_consistency(models, read(path), options(), fs::path(path).filename().string()));
    checks::Report r = checks::to_report(runs, prefixes_);
    if (instance_files_.empty()) r.notes.push_back("no instance files given");
    return r;
  }

  checks::Report conservativity() const {
    require_source();
    require_target();
    return checks::to_report(
        checks::check_conservativity(*source_, target_list(), alignment_, cfg_.source_ns, cfg_.target_ns),
        prefixes_);
  }

  checks::Report suggest() const {
    require_source();
    require_target();
    if (cfg_.properties.empty()) throw UsageError("suggest needs --property");
    checks::Report r;
    r.check = "suggest";
    std::size_t candidates = 0, unmapped = 0;
    for (const auto& name : cfg_.properties) {
      rdf::Term p = expand(name);
      matcher::Suggestion s = matcher::suggest_property_mappings(p, *source_, target_list(), alignment_);
      std::string who = owl::render_term(p, prefixes_);
      if (s.unmapped_domain_or_range) {
        ++unmapped;
        checks::Finding f;
        f.kind = "unmapped-domain-or-range";
        f.message = who + ": domain " + owl::render(s.source.domain, prefixes_) + " or range " +
                    owl::render(s.source.range, prefixes_) + " is not mapped to a target class";
        f.terms.push_back(p.value());
        r.findings.push_back(std::move(f));
        continue;
      }
      for (const auto& c : s.candidates) {
        ++candidates;
        checks::Finding f;
        f.kind = "candidate";
        f.message = who + " -> " + owl::render_term(c.property, prefixes_) + " (" +
                    std::string(matcher::to_string(c.kind)) + ")";
        f.terms = {p.value(), c.property.value()};
        for (const auto* m : target_list()) {
          auto it = m->labels.find(c.property);
          if (it == m->labels.end()) continue;
          f.message += " \"" + it->second + "\"";
          f.details["label"] = it->second;
          break;
        }
        f.details["match"] = std::string(matcher::to_string(c.kind));
        f.details["domain"] = owl::render(c.domain.translated, prefixes_) + " SubClassOf " +
                              owl::render(c.domain.candidate, prefixes_);
        f.details["range"] = owl::render(c.range.translated, prefixes_) + " SubClassOf " +
                             owl::render(c.range.candidate, prefixes_);
        r.findings.push_back(std::move(f));
      }
      if (s.candidates.empty()) r.notes.push_back(who + ": no candidates");
    }
    r.notes.push_back("inverse target properties are not considered as candidates");
    r.status = unmapped ? checks::Status::Fail : checks::Status::Pass;
    r.counts["properties"] = static_cast<double>(cfg_.properties.size());
    r.counts["candidates"] = static_cast<double>(candidates);
    r.counts["unmapped_domain_or_range"] = static_cast<double>(unmapped);
    return r;
  }

  checks::Report stats() const {
    require_alignment();
    checks::TotalityReport t;
    if (source_) t = checks::check_totality(*source_, target_list(), alignment_);
    return checks::to_report(checks::alignment_stats(alignment_, t));
  }

  std::string materialize() {
    auto models = merged(false);
    if (models.empty() && !have_alignment_) throw UsageError("materialize needs at least one ontology");
    rdf::Graph out;
    if (have_alignment_) out = alignment::serialize_alignment(checks::entailed_mappings(models, alignment_));
    auto all = merged();
    for (const auto& path : instance_files_) {
      owl::OntologyModel data = owl::extract_axioms(read(path), stem(path));
      reasoner::ModelList with_data = all;
      with_data.push_back(&data);
      reasoner::ClosedKB kb = reasoner::Reasoner(with_data, options()).materialize();
      if (kb.skolem_budget_exceeded())
        err_ << path << ": some existential restrictions were not witnessed within the skolem depth bound\n";
      out.merge(kb.to_graph());
    }
    for (const auto& [k, v] : prefixes_) out.prefixes().emplace(k, v);
    return turtle::serialize_turtle(out);
  }

  std::string export_sssom() const {
    require_alignment();
    return alignment::export_sssom(alignment_);
  }

 private:
  void add_prefixes(const rdf::PrefixMap& px) {
    for (const auto& [k, v] : px) prefixes_.emplace(k, v);
  }

  rdf::Term expand(const std::string& name) const {
    if (name.find("://") != std::string::npos) return rdf::Term::iri(name);
    auto colon = name.find(':');
    if (colon != std::string::npos) {
      auto it = prefixes_.find(name.substr(0, colon));
      if (it != prefixes_.end()) return rdf::Term::iri(it->second + name.substr(colon + 1));
    }
    throw UsageError("cannot expand property name " + name);
  }

  const Config& cfg_;
  std::ostream& err_;
  std::unique_ptr<owl::OntologyModel> source_;
  std::vector<std::unique_ptr<owl::OntologyModel>> targets_;
  alignment::Alignment alignment_;
  owl::OntologyModel alignment_model_;
  bool have_alignment_ = false;
  std::vector<std::string> instance_files_;
  rdf::PrefixMap prefixes_;
};

int exit_code(checks::Status s) {
  switch (s) {
    case checks::Status::Pass: return kPass;
    case checks::Status::Fail: return kFindings;
    case checks::Status::Error: return kUsageOrLoad;
  }
  return kUsageOrLoad;
}

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("--source", cfg.sources, "Source ontology (Turtle); repeatable");
  sub->add_option("--target", cfg.targets, "Target ontology (Turtle); repeatable");
  sub->add_option("--alignment", cfg.alignments, "Alignment file (Turtle); repeatable");
  sub->add_option("--instances", cfg.instances, "Instance file or directory of .ttl files; repeatable");
  sub->add_option("--source-ns", cfg.source_ns, "Source namespace IRI; repeatable");
  sub->add_option("--target-ns", cfg.target_ns, "Target namespace IRI; repeatable");
  sub->add_option("--skolem-depth", cfg.skolem_depth, "Existential witness depth bound")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--fact-cap", cfg.fact_cap, "Derived-fact cap (default PROVALIGN_FACT_CAP or 1000000)");
  sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", cfg.out_path, "Write the report here instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Alignment checks for OWL ontologies"};
  app.name("provalign");
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"check-totality", "List source terms that no mapping covers"},
      {"check-coherence", "Find unsatisfiable named classes"},
      {"check-consistency", "Find contradictions in instance data"},
      {"check-conservativity", "Find new subsumptions within one ontology"},
      {"check-all", "Run the four checks"},
      {"suggest", "Suggest target object properties for source properties"},
      {"materialize", "Write entailed mappings and materialized instances as Turtle"},
      {"export-sssom", "Write simple mappings as SSSOM-style CSV"},
      {"stats", "Count mappings by predicate"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, cfg);
    if (name == "suggest") sub->add_option("--property", cfg.properties, "Source object property; repeatable");
    sub->callback([&cfg, n = name] { cfg.command = n; });
  }

  std::vector<const char*> argv{"provalign"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kPass;
    }
    err << "error: " << e.what() << "\n";
    return kUsageOrLoad;
  }

  try {
    if (!cfg.source_ns.empty() || !cfg.target_ns.empty()) {
      if (cfg.source_ns.empty() || cfg.target_ns.empty())
        throw UsageError("--source-ns and --target-ns must be given together");
      alignment::validate_namespaces(cfg.source_ns, cfg.target_ns);
    }
    Workspace ws(cfg, err);
    ws.load();

    std::string text;
    int code = kPass;
    if (cfg.command == "export-sssom") {
      text = ws.export_sssom();
    } else if (cfg.command == "materialize") {
      text = ws.materialize();
    } else {
      checks::Report report;
      if (cfg.command == "check-totality") report = ws.totality();
      else if (cfg.command == "check-coherence") report = ws.coherence();
      else if (cfg.command == "check-consistency") report = ws.consistency(true);
      else if (cfg.command == "check-conservativity") report = ws.conservativity();
      else if (cfg.command == "suggest") report = ws.suggest();
      else if (cfg.command == "stats") report = ws.stats();
      else if (cfg.command == "check-all") {
        ws.require_source();
        ws.require_target();
        report = checks::combine("all", {ws.totality(), ws.coherence(), ws.consistency(false), ws.conservativity()});
      }
      text = cfg.format == "json" ? checks::to_json(report) : checks::to_text(report);
      code = exit_code(report.status);
    }

    if (cfg.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file) throw Error(ErrorCode::FileNotFound, "cannot write " + cfg.out_path);
      file << text;
      if (!file) throw Error(ErrorCode::FileNotFound, "cannot write " + cfg.out_path);
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageOrLoad;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return kUsageOrLoad;
  }
}

}  // namespace provalign::cli
