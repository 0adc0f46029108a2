#include <algorithm>
#include <map>
#include <sstream>

#include "provalign/turtle.h"
#include "provalign/vocab.h"

namespace provalign::turtle {

namespace {

struct BlankKey {
  std::string label;
  std::uint32_t scope;
  bool operator<(const BlankKey& o) const {
    return label != o.label ? label < o.label : scope < o.scope;
  }
};

class Writer {
 public:
  explicit Writer(const rdf::Graph& g) : graph_(g) {
    std::map<BlankKey, rdf::Term> blanks;
    auto note = [&](rdf::Term t) {
      if (t.is_blank()) blanks.emplace(BlankKey{t.value(), t.scope()}, t);
    };
    for (const auto& t : g.triples()) {
      note(t.subject);
      note(t.object);
    }
    std::size_t n = 0;
    for (const auto& [key, term] : blanks) labels_[term] = "_:b" + std::to_string(n++);
  }

  std::string render(rdf::Term t) const {
    switch (t.kind()) {
      case rdf::TermKind::Iri:
        return render_iri(t.value());
      case rdf::TermKind::Blank:
        return labels_.at(t);
      case rdf::TermKind::Literal: {
        std::string out = "\"" + rdf::escape_string(t.value()) + "\"";
        if (!t.language().empty()) return out + "@" + t.language();
        if (t.datatype() != vocab::xsd::string) out += "^^" + render_iri(t.datatype());
        return out;
      }
    }
    return {};
  }

  std::string render_iri(const std::string& iri) const {
    std::string curie = rdf::compact_iri(graph_.prefixes(), iri);
    if (!curie.empty()) return curie;
    std::string out = "<";
    for (unsigned char c : iri) {
      if (c <= 0x20 || std::string_view("<>\"{}|^`\\").find(static_cast<char>(c)) != std::string_view::npos) {
        static const char* hex = "0123456789ABCDEF";
        out += "\\u00";
        out.push_back(hex[c >> 4]);
        out.push_back(hex[c & 0xF]);
      } else {
        out.push_back(static_cast<char>(c));
      }
    }
    return out + ">";
  }

  std::string run() const {
    std::ostringstream out;
    for (const auto& [label, ns] : graph_.prefixes())
      out << "@prefix " << label << ": <" << ns << "> .\n";

    struct Row {
      std::string s, p, o;
      bool operator<(const Row& r) const {
        if (s != r.s) return s < r.s;
        if (p != r.p) return p < r.p;
        return o < r.o;
      }
    };
    std::vector<Row> rows;
    rows.reserve(graph_.size());
    for (const auto& t : graph_.triples()) {
      std::string p = t.predicate.value() == vocab::rdf::type ? "a" : render(t.predicate);
      rows.push_back(Row{render(t.subject), std::move(p), render(t.object)});
    }
    std::sort(rows.begin(), rows.end());

    if (!graph_.prefixes().empty() && !rows.empty()) out << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Row& r = rows[i];
      bool new_subject = i == 0 || rows[i - 1].s != r.s;
      bool new_predicate = new_subject || rows[i - 1].p != r.p;
      if (new_subject) {
        if (i != 0) out << " .\n";
        out << r.s << " " << r.p << " " << r.o;
      } else if (new_predicate) {
        out << " ;\n    " << r.p << " " << r.o;
      } else {
        out << " ,\n        " << r.o;
      }
    }
    if (!rows.empty()) out << " .\n";
    return out.str();
  }

 private:
  const rdf::Graph& graph_;
  std::unordered_map<rdf::Term, std::string> labels_;
};

}  // namespace

std::string serialize_turtle(const rdf::Graph& graph) { return Writer(graph).run(); }

}  // namespace provalign::turtle
