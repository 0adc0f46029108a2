#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "provalign/turtle.h"
#include "provalign/vocab.h"

namespace provalign::turtle {

namespace {

std::string format_message(const std::vector<ParseDiagnostic>& d) {
  if (d.empty()) return "parse error";
  return "line " + std::to_string(d.front().line) + ", column " +
         std::to_string(d.front().column) + ": " + d.front().message;
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_name_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool is_name_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '-' || c >= 0x80;
}

class Parser {
 public:
  Parser(std::string_view text, std::optional<std::string> base,
         std::vector<ParseDiagnostic>* warnings)
      : text_(text), warnings_(warnings) {
    graph_.set_base(std::move(base));
    if (text_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
  }

  rdf::Graph run() {
    skip_ws();
    while (!at_end()) {
      statement();
      skip_ws();
    }
    return std::move(graph_);
  }

 private:
  // ---- diagnostics -------------------------------------------------------
  [[noreturn]] void fail(const std::string& message, ErrorCode code = ErrorCode::Syntax) {
    fail_at(pos_, message, code);
  }
  [[noreturn]] void fail_at(std::size_t at, const std::string& message,
                            ErrorCode code = ErrorCode::Syntax) {
    auto [line, column] = locate(at);
    throw ParseError(code, {ParseDiagnostic{line, column, message, Severity::Error}});
  }
  void warn_at(std::size_t at, const std::string& message) {
    if (!warnings_) return;
    auto [line, column] = locate(at);
    warnings_->push_back(ParseDiagnostic{line, column, message, Severity::Warning});
  }
  std::pair<std::size_t, std::size_t> locate(std::size_t at) const {
    at = std::min(at, text_.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < at; ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    return {line, column};
  }

  // ---- lexing helpers ----------------------------------------------------
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }
  bool starts_with_keyword(std::string_view kw) const {
    if (text_.size() - pos_ < kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i)
      if (std::toupper(static_cast<unsigned char>(text_[pos_ + i])) != kw[i]) return false;
    return !is_name_char(static_cast<unsigned char>(peek(kw.size())));
  }
  void skip_ws() {
    while (!at_end()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos_;
      } else if (c == '#') {
        while (!at_end() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }
  void expect(char c, const char* what) {
    skip_ws();
    if (peek() != c) {
      if (at_end()) fail(std::string("unexpected end of input, expected ") + what);
      fail(std::string("expected ") + what + ", found '" + peek() + "'");
    }
    ++pos_;
  }

  // ---- grammar -----------------------------------------------------------
  void statement() {
    if (starts_with("@prefix")) {
      pos_ += 7;
      prefix_directive();
      expect('.', "'.' after @prefix");
    } else if (starts_with("@base")) {
      pos_ += 5;
      base_directive();
      expect('.', "'.' after @base");
    } else if (starts_with_keyword("PREFIX")) {
      pos_ += 6;
      prefix_directive();
    } else if (starts_with_keyword("BASE")) {
      pos_ += 4;
      base_directive();
    } else if (starts_with_keyword("GRAPH") || peek() == '{') {
      fail("named graphs (TriG) are not supported", ErrorCode::UnsupportedFeature);
    } else {
      triples();
      expect('.', "'.' at end of statement");
    }
  }

  void prefix_directive() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && peek() != ':' && !std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() != ':') fail("expected prefix label followed by ':'");
    std::string label(text_.substr(start, pos_ - start));
    ++pos_;
    skip_ws();
    rdf::Term ns = iriref();
    if (auto it = graph_.prefixes().find(label);
        it != graph_.prefixes().end() && it->second != ns.value())
      warn_at(start, "prefix '" + label + ":' redefined");
    graph_.prefixes()[label] = ns.value();
  }

  void base_directive() {
    skip_ws();
    graph_.set_base(iriref().value());
  }

  void triples() {
    skip_ws();
    rdf::Term subject;
    if (peek() == '[') {
      subject = blank_node_property_list();
      skip_ws();
      if (peek() == '.') return;
    } else {
      subject = subject_term();
    }
    skip_ws();
    if (peek() == '{') fail("named graphs (TriG) are not supported", ErrorCode::UnsupportedFeature);
    predicate_object_list(subject);
  }

  rdf::Term subject_term() {
    skip_ws();
    char c = peek();
    if (c == '<') {
      if (peek(1) == '<') fail("quoted triples are not supported", ErrorCode::UnsupportedFeature);
      return iriref();
    }
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '(') return collection();
    if (c == '"' || c == '\'' || std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-')
      fail("literal cannot be a subject");
    return prefixed_name();
  }

  void predicate_object_list(rdf::Term subject) {
    for (;;) {
      skip_ws();
      rdf::Term predicate = verb();
      object_list(subject, predicate);
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        ++pos_;
        skip_ws();
      }
      char c = peek();
      if (c == '.' || c == ']' || at_end()) return;
    }
  }

  rdf::Term verb() {
    skip_ws();
    if (peek() == 'a' && !is_name_char(static_cast<unsigned char>(peek(1))) && peek(1) != ':')
    {
      ++pos_;
      return rdf::Term::iri(vocab::rdf::type);
    }
    if (peek() == '<') return iriref();
    if (peek() == '_' || peek() == '[' || peek() == '"')
      fail("predicate must be an IRI");
    return prefixed_name();
  }

  void object_list(rdf::Term subject, rdf::Term predicate) {
    for (;;) {
      rdf::Term o = object();
      graph_.insert(subject, predicate, o);
      skip_ws();
      if (peek() != ',') return;
      ++pos_;
    }
  }

  rdf::Term object() {
    skip_ws();
    char c = peek();
    if (at_end()) fail("unexpected end of input, expected an object");
    if (c == '<') {
      if (peek(1) == '<') fail("quoted triples are not supported", ErrorCode::UnsupportedFeature);
      return iriref();
    }
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '[') return blank_node_property_list();
    if (c == '(') return collection();
    if (c == '"' || c == '\'') return literal();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))))
      return numeric();
    if (starts_with("true") && !is_name_char(static_cast<unsigned char>(peek(4))) && peek(4) != ':') {
      pos_ += 4;
      return rdf::Term::literal("true", vocab::xsd::boolean);
    }
    if (starts_with("false") && !is_name_char(static_cast<unsigned char>(peek(5))) && peek(5) != ':') {
      pos_ += 5;
      return rdf::Term::literal("false", vocab::xsd::boolean);
    }
    return prefixed_name();
  }

  rdf::Term blank_node_property_list() {
    expect('[', "'['");
    rdf::Term node = graph_.fresh_blank();
    skip_ws();
    if (peek() == ']') {
      ++pos_;
      return node;
    }
    predicate_object_list(node);
    expect(']', "']'");
    return node;
  }

  rdf::Term collection() {
    expect('(', "'('");
    std::vector<rdf::Term> items;
    for (;;) {
      skip_ws();
      if (at_end()) fail("unterminated collection");
      if (peek() == ')') {
        ++pos_;
        break;
      }
      items.push_back(object());
    }
    rdf::Term nil = rdf::Term::iri(vocab::rdf::nil);
    if (items.empty()) return nil;
    rdf::Term first = rdf::Term::iri(vocab::rdf::first);
    rdf::Term rest = rdf::Term::iri(vocab::rdf::rest);
    rdf::Term head = graph_.fresh_blank();
    rdf::Term cell = head;
    for (std::size_t i = 0; i < items.size(); ++i) {
      graph_.insert(cell, first, items[i]);
      rdf::Term next = i + 1 < items.size() ? graph_.fresh_blank() : nil;
      graph_.insert(cell, rest, next);
      cell = next;
    }
    return head;
  }

  rdf::Term blank_label() {
    std::size_t start = pos_;
    pos_ += 2;
    std::size_t label_start = pos_;
    unsigned char c = static_cast<unsigned char>(peek());
    if (!(is_name_start(c) || std::isdigit(c))) fail_at(start, "empty blank node label");
    while (!at_end()) {
      c = static_cast<unsigned char>(peek());
      if (is_name_char(c)) {
        ++pos_;
      } else if (c == '.' && is_name_char(static_cast<unsigned char>(peek(1)))) {
        ++pos_;
      } else {
        break;
      }
    }
    return graph_.blank(text_.substr(label_start, pos_ - label_start));
  }

  rdf::Term iriref() {
    skip_ws();
    std::size_t start = pos_;
    if (peek() != '<') fail("expected '<'");
    ++pos_;
    std::string iri;
    for (;;) {
      if (at_end()) fail_at(start, "unterminated IRI");
      char c = text_[pos_++];
      if (c == '>') break;
      if (c == '\\') {
        char e = peek();
        if (e == 'u' || e == 'U') {
          ++pos_;
          append_utf8(iri, hex_escape(e == 'u' ? 4 : 8));
          continue;
        }
        fail("invalid escape in IRI");
      }
      if (c == ' ' || c == '\n' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
          c == '`')
        fail_at(pos_ - 1, std::string("invalid character '") + c + "' in IRI");
      iri.push_back(c);
    }
    try {
      return rdf::iri_resolve({}, "<" + iri + ">", graph_.base());
    } catch (const Error& e) {
      fail_at(start, e.what(), e.code());
    }
  }

  rdf::Term prefixed_name() {
    std::size_t start = pos_;
    std::string label;
    while (!at_end() && peek() != ':') {
      unsigned char c = static_cast<unsigned char>(peek());
      if (!(is_name_char(c) || (c == '.' && !label.empty()))) break;
      label.push_back(static_cast<char>(c));
      ++pos_;
    }
    if (peek() != ':') {
      pos_ = start;
      if (at_end()) fail("unexpected end of input");
      fail(std::string("unexpected character '") + peek() + "'");
    }
    ++pos_;
    std::string local;
    for (;;) {
      if (at_end()) break;
      unsigned char c = static_cast<unsigned char>(peek());
      if (is_name_char(c) || c == ':') {
        local.push_back(static_cast<char>(c));
        ++pos_;
      } else if (c == '.') {
        unsigned char n = static_cast<unsigned char>(peek(1));
        if (is_name_char(n) || n == ':' || n == '%' || n == '\\') {
          local.push_back('.');
          ++pos_;
        } else {
          break;
        }
      } else if (c == '%') {
        if (!std::isxdigit(static_cast<unsigned char>(peek(1))) ||
            !std::isxdigit(static_cast<unsigned char>(peek(2))))
          fail("invalid percent escape in local name");
        local.append(text_.substr(pos_, 3));
        pos_ += 3;
      } else if (c == '\\') {
        char e = peek(1);
        if (e == '\0' || std::string_view("_~.-!$&'()*+,;=/?#@%").find(e) == std::string_view::npos)
          fail("invalid escape in local name");
        local.push_back(e);
        pos_ += 2;
      } else {
        break;
      }
    }
    auto it = graph_.prefixes().find(label);
    if (it == graph_.prefixes().end())
      fail_at(start, "unknown prefix '" + label + ":'", ErrorCode::UnknownPrefix);
    return rdf::Term::iri(it->second + local);
  }

  std::uint32_t hex_escape(int digits) {
    std::uint32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      char h = peek();
      if (!std::isxdigit(static_cast<unsigned char>(h))) fail("invalid unicode escape");
      cp = cp * 16 + static_cast<std::uint32_t>(std::isdigit(static_cast<unsigned char>(h))
                                                    ? h - '0'
                                                    : std::tolower(h) - 'a' + 10);
      ++pos_;
    }
    return cp;
  }

  rdf::Term literal() {
    std::size_t start = pos_;
    char quote = peek();
    bool long_form = peek(1) == quote && peek(2) == quote;
    pos_ += long_form ? 3 : 1;
    std::string lexical;
    for (;;) {
      if (at_end())
        fail_at(start, "unterminated string literal", ErrorCode::UnterminatedLiteral);
      char c = text_[pos_];
      if (long_form) {
        if (c == quote && peek(1) == quote && peek(2) == quote) {
          pos_ += 3;
          // A long string may end with extra quotes: """a""""
          while (peek() == quote) {
            lexical.push_back(quote);
            ++pos_;
          }
          break;
        }
      } else if (c == quote) {
        ++pos_;
        break;
      } else if (c == '\n' || c == '\r') {
        warn_at(pos_, "line break inside a short string literal");
      }
      ++pos_;
      if (c != '\\') {
        lexical.push_back(c);
        continue;
      }
      char e = peek();
      ++pos_;
      switch (e) {
        case 't': lexical.push_back('\t'); break;
        case 'b': lexical.push_back('\b'); break;
        case 'n': lexical.push_back('\n'); break;
        case 'r': lexical.push_back('\r'); break;
        case 'f': lexical.push_back('\f'); break;
        case '"': lexical.push_back('"'); break;
        case '\'': lexical.push_back('\''); break;
        case '\\': lexical.push_back('\\'); break;
        case 'u': append_utf8(lexical, hex_escape(4)); break;
        case 'U': append_utf8(lexical, hex_escape(8)); break;
        default:
          if (e == '\0') fail_at(start, "unterminated string literal", ErrorCode::UnterminatedLiteral);
          fail_at(pos_ - 2, std::string("invalid escape '\\") + e + "'");
      }
    }
    if (peek() == '@') {
      ++pos_;
      std::size_t tag_start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-') ++pos_;
      if (pos_ == tag_start) fail("empty language tag");
      return rdf::Term::literal(lexical, {}, text_.substr(tag_start, pos_ - tag_start));
    }
    if (peek() == '^' && peek(1) == '^') {
      pos_ += 2;
      rdf::Term dt = peek() == '<' ? iriref() : prefixed_name();
      return rdf::Term::literal(lexical, dt.value());
    }
    return rdf::Term::literal(lexical);
  }

  rdf::Term numeric() {
    std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    bool digits = false, dot = false, exponent = false;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
      digits = true;
    }
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      dot = true;
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      digits = true;
    }
    if (digits && (peek() == 'e' || peek() == 'E')) {
      exponent = true;
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed exponent");
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (!digits) fail_at(start, "malformed number");
    std::string_view lexical = text_.substr(start, pos_ - start);
    if (exponent) return rdf::Term::literal(lexical, vocab::xsd::double_);
    if (dot) return rdf::Term::literal(lexical, vocab::xsd::decimal);
    return rdf::Term::literal(lexical, vocab::xsd::integer);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  rdf::Graph graph_;
  std::vector<ParseDiagnostic>* warnings_;
};

}  // namespace

ParseError::ParseError(ErrorCode code, std::vector<ParseDiagnostic> diagnostics)
    : Error(code, format_message(diagnostics)), diagnostics_(std::move(diagnostics)) {}

rdf::Graph parse_turtle(std::string_view input, std::optional<std::string> base,
                        std::vector<ParseDiagnostic>* warnings) {
  return Parser(input, std::move(base), warnings).run();
}

rdf::Graph parse_turtle_file(const std::filesystem::path& path,
                             std::vector<ParseDiagnostic>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileNotFound, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::error_code ec;
  auto absolute = std::filesystem::absolute(path, ec);
  std::string base = "file://" + (ec ? path.string() : absolute.generic_string());
  try {
    return parse_turtle(buffer.str(), base, warnings);
  } catch (const ParseError& e) {
    throw ParseError(e.code(), [&] {
      auto d = e.diagnostics();
      for (auto& item : d) item.message = path.string() + ": " + item.message;
      return d;
    }());
  }
}

}  // namespace provalign::turtle
