#include <algorithm>
#include <sstream>

#include "provalign/alignment.h"
#include "provalign/vocab.h"

namespace provalign::alignment {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string predicate_id(MappingPredicate p) {
  switch (p) {
    case MappingPredicate::EquivalentClass: return "owl:equivalentClass";
    case MappingPredicate::EquivalentProperty: return "owl:equivalentProperty";
    case MappingPredicate::SubClassOf: return "rdfs:subClassOf";
    case MappingPredicate::SubPropertyOf: return "rdfs:subPropertyOf";
    default: return std::string(to_string(p));
  }
}

// A named term is written as a CURIE when a prefix applies and as a bare
// IRI otherwise; expressions keep their Manchester rendering.
std::string id_text(std::string rendered) {
  if (rendered.size() > 2 && rendered.front() == '<' && rendered.back() == '>' &&
      rendered.find(' ') == std::string::npos)
    return rendered.substr(1, rendered.size() - 2);
  return rendered;
}

}  // namespace

std::string export_sssom(const Alignment& al) {
  struct Row {
    std::string subject, predicate, object, cells;
  };
  std::vector<Row> rows;
  std::size_t complex = 0, skos = 0;
  for (const auto& m : al.mappings) {
    if (is_complex(m.predicate)) {
      ++complex;
      continue;
    }
    if (!is_simple(m.predicate)) {
      ++skos;
      continue;
    }
    Row r;
    r.subject = id_text(m.subject_id(al.prefixes));
    r.predicate = predicate_id(m.predicate);
    r.object = id_text(m.object_id(al.prefixes));
    auto text = [](rdf::Term t) { return t.valid() ? t.value() : std::string(); };
    r.cells = csv_field(r.subject) + "," + csv_field(r.predicate) + "," + csv_field(r.object) + "," +
              csv_field(text(m.subject_label)) + "," + csv_field(text(m.object_label)) + "," +
              csv_field(m.justification) + "," + csv_field(text(m.comment));
    rows.push_back(std::move(r));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.subject != b.subject) return a.subject < b.subject;
    if (a.object != b.object) return a.object < b.object;
    return a.predicate < b.predicate;
  });

  std::ostringstream out;
  out << kSssomHeader << "\n";
  for (const auto& r : rows) out << r.cells << "\n";
  if (complex > 0)
    out << "# " << complex
        << " complex mapping(s) (property chain or SWRL rule) omitted: no tabular form\n";
  if (skos > 0) out << "# " << skos << " SKOS mapping(s) omitted: not part of the logical alignment\n";
  return out.str();
}

}  // namespace provalign::alignment
