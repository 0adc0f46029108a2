#pragma once

#include <algorithm>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "provalign/alignment.h"
#include "provalign/owl.h"
#include "provalign/reasoner.h"
#include "provalign/turtle.h"

namespace testing_support {

namespace fs = std::filesystem;
using namespace provalign;

inline fs::path fixture_dir() { return fs::path(PROVALIGN_FIXTURE_DIR); }
inline fs::path fixture(const std::string& name) { return fixture_dir() / name; }
inline fs::path schema_file() { return fs::path(PROVALIGN_SCHEMA_DIR) / "report.schema.json"; }

inline const std::string kProv = "http://www.w3.org/ns/prov#";
inline const std::string kObo = "http://purl.obolibrary.org/obo/";
inline const std::string kCco = "https://www.commoncoreontologies.org/";

inline rdf::Term prov(const std::string& local) { return rdf::Term::iri(kProv + local); }
inline rdf::Term obo(const std::string& local) { return rdf::Term::iri(kObo + local); }
inline rdf::Term cco(const std::string& local) { return rdf::Term::iri(kCco + local); }
inline rdf::Term ex(const std::string& local) { return rdf::Term::iri("http://example.com/" + local); }
inline owl::ClassExpression named(rdf::Term t) { return owl::ClassExpression::named(t); }

inline std::vector<std::string> source_ns() { return {kProv}; }
inline std::vector<std::string> target_ns() { return {kObo, kCco}; }

inline owl::OntologyModel load_model(const std::string& name) {
  return owl::extract_axioms(turtle::parse_turtle_file(fixture(name)), fs::path(name).stem().string());
}

inline owl::OntologyModel parse_model(const std::string& text, const std::string& label = "inline") {
  return owl::extract_axioms(turtle::parse_turtle(text), label);
}

inline alignment::Alignment load_alignment(const std::string& name) {
  return alignment::extract_mappings(load_model(name), source_ns(), target_ns());
}

// prov-mini, bfo-mini, cco-mini and ro-mini, loaded once per process.
struct Stack {
  owl::OntologyModel prov = load_model("prov-mini.ttl");
  owl::OntologyModel bfo = load_model("bfo-mini.ttl");
  owl::OntologyModel cco = load_model("cco-mini.ttl");
  owl::OntologyModel ro = load_model("ro-mini.ttl");
  alignment::Alignment paper = load_alignment("align-paper.ttl");
  owl::OntologyModel paper_model = paper.as_model();

  reasoner::ModelList targets() const { return {&bfo, &cco, &ro}; }
  reasoner::ModelList full() const { return {&prov, &bfo, &cco, &ro, &paper_model}; }
};

inline const Stack& stack() {
  static const Stack s;
  return s;
}

inline std::vector<fs::path> turtle_fixtures() {
  std::vector<fs::path> out;
  for (const auto& e : fs::recursive_directory_iterator(fixture_dir()))
    if (e.is_regular_file() && e.path().extension() == ".ttl") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<fs::path> instance_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(fixture("instances")))
    if (e.path().extension() == ".ttl") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testing_support
