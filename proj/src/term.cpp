#include "provalign/term.h"

#include <atomic>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "provalign/error.h"
#include "provalign/vocab.h"

namespace provalign::rdf {

namespace {

struct TermData {
  TermKind kind;
  std::string value;
  std::string datatype;
  std::string language;
  std::uint32_t scope = 0;
};

// Process-wide intern table. Slot 0 is the invalid term. A deque keeps
// element addresses stable while the table grows.
class TermPool {
 public:
  TermPool() { data_.push_back(TermData{TermKind::Iri, "", "", "", 0}); }

  std::uint32_t intern(TermData&& d) {
    std::string key;
    key.reserve(d.value.size() + d.datatype.size() + d.language.size() + 16);
    key.push_back(static_cast<char>('0' + static_cast<int>(d.kind)));
    key.append(std::to_string(d.scope));
    key.push_back('\x1f');
    key.append(d.value);
    key.push_back('\x1f');
    key.append(d.datatype);
    key.push_back('\x1f');
    key.append(d.language);
    {
      std::shared_lock lock(mutex_);
      if (auto it = index_.find(key); it != index_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    auto id = static_cast<std::uint32_t>(data_.size());
    data_.push_back(std::move(d));
    index_.emplace(std::move(key), id);
    return id;
  }

  const TermData& get(std::uint32_t id) const {
    std::shared_lock lock(mutex_);
    return data_[id];
  }

 private:
  mutable std::shared_mutex mutex_;
  std::deque<TermData> data_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

TermPool& pool() {
  static TermPool instance;
  return instance;
}

std::atomic<std::uint32_t> next_scope{1};

}  // namespace

bool is_absolute_iri(std::string_view text) {
  if (text.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  if (!alpha(text[0])) return false;
  for (std::size_t i = 1; i < text.size(); ++i) {
    char c = text[i];
    if (c == ':') return true;
    if (!(alpha(c) || (c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.'))
      return false;
  }
  return false;
}

Term Term::iri(std::string_view iri) {
  if (!is_absolute_iri(iri))
    throw Error(ErrorCode::InvalidTerm, "IRI is not absolute: " + std::string(iri));
  return Term(pool().intern(TermData{TermKind::Iri, std::string(iri), "", "", 0}));
}

Term Term::blank(std::string_view label, std::uint32_t scope) {
  return Term(pool().intern(TermData{TermKind::Blank, std::string(label), "", "", scope}));
}

Term Term::literal(std::string_view lexical, std::string_view datatype,
                   std::string_view language) {
  if (!datatype.empty() && !language.empty() && datatype != vocab::rdf::langString)
    throw Error(ErrorCode::InvalidTerm, "literal has both a datatype and a language tag");
  TermData d{TermKind::Literal, std::string(lexical), "", "", 0};
  if (!language.empty()) {
    d.language.reserve(language.size());
    for (char c : language)
      d.language.push_back(static_cast<char>((c >= 'A' && c <= 'Z') ? c - 'A' + 'a' : c));
    d.datatype = vocab::rdf::langString;
  } else if (datatype.empty()) {
    d.datatype = vocab::xsd::string;
  } else {
    d.datatype = std::string(datatype);
  }
  return Term(pool().intern(std::move(d)));
}

std::uint32_t Term::new_scope() { return next_scope.fetch_add(1); }

TermKind Term::kind() const { return pool().get(id_).kind; }
const std::string& Term::value() const { return pool().get(id_).value; }
const std::string& Term::datatype() const { return pool().get(id_).datatype; }
const std::string& Term::language() const { return pool().get(id_).language; }
std::uint32_t Term::scope() const { return pool().get(id_).scope; }

std::string escape_string(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 2);
  for (unsigned char c : text) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          static const char* hex = "0123456789ABCDEF";
          out += "\\u00";
          out.push_back(hex[c >> 4]);
          out.push_back(hex[c & 0xF]);
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  return out;
}

std::string Term::str() const {
  if (!valid()) return "<invalid>";
  const TermData& d = pool().get(id_);
  switch (d.kind) {
    case TermKind::Iri: return "<" + d.value + ">";
    case TermKind::Blank: return "_:" + d.value;
    case TermKind::Literal: {
      std::string out = "\"" + escape_string(d.value) + "\"";
      if (!d.language.empty()) return out + "@" + d.language;
      if (d.datatype != vocab::xsd::string) out += "^^<" + d.datatype + ">";
      return out;
    }
  }
  return {};
}

bool lexical_less(Term a, Term b) {
  if (a == b) return false;
  std::string sa = a.str(), sb = b.str();
  if (sa != sb) return sa < sb;
  // Same rendering, different scopes: fall back to scope for a total order.
  return a.scope() < b.scope();
}

}  // namespace provalign::rdf
