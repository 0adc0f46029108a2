#include <cctype>
#include <string>

#include "provalign/error.h"
#include "provalign/graph.h"

namespace provalign::rdf {

namespace {

struct IriParts {
  std::string scheme;
  std::optional<std::string> authority;
  std::string path;
  std::optional<std::string> query;
  std::optional<std::string> fragment;
};

IriParts split(std::string_view s) {
  IriParts p;
  if (auto hash = s.find('#'); hash != std::string_view::npos) {
    p.fragment = std::string(s.substr(hash + 1));
    s = s.substr(0, hash);
  }
  if (auto q = s.find('?'); q != std::string_view::npos) {
    p.query = std::string(s.substr(q + 1));
    s = s.substr(0, q);
  }
  if (auto colon = s.find(':'); colon != std::string_view::npos && is_absolute_iri(s)) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos || colon < slash) {
      p.scheme = std::string(s.substr(0, colon));
      s = s.substr(colon + 1);
    }
  }
  if (s.substr(0, 2) == "//") {
    s = s.substr(2);
    auto end = s.find('/');
    p.authority = std::string(s.substr(0, end));
    s = end == std::string_view::npos ? std::string_view{} : s.substr(end);
  }
  p.path = std::string(s);
  return p;
}

std::string remove_dot_segments(std::string in) {
  std::string out;
  while (!in.empty()) {
    if (in.rfind("../", 0) == 0) {
      in.erase(0, 3);
    } else if (in.rfind("./", 0) == 0) {
      in.erase(0, 2);
    } else if (in.rfind("/./", 0) == 0) {
      in.replace(0, 3, "/");
    } else if (in == "/.") {
      in = "/";
    } else if (in.rfind("/../", 0) == 0 || in == "/..") {
      in = in.size() == 3 ? std::string("/") : in.substr(3);
      auto last = out.rfind('/');
      out.erase(last == std::string::npos ? 0 : last);
    } else if (in == "." || in == "..") {
      in.clear();
    } else {
      std::size_t start = in[0] == '/' ? 1 : 0;
      auto next = in.find('/', start);
      out += in.substr(0, next);
      in.erase(0, next == std::string::npos ? in.size() : next);
    }
  }
  return out;
}

std::string merge_paths(const IriParts& base, const std::string& ref_path) {
  if (base.authority && base.path.empty()) return "/" + ref_path;
  auto last = base.path.rfind('/');
  if (last == std::string::npos) return ref_path;
  return base.path.substr(0, last + 1) + ref_path;
}

bool is_pn_prefix(std::string_view s) {
  if (s.empty()) return true;
  auto ok = [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-' || c == '.' || c >= 0x80;
  };
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || static_cast<unsigned char>(s[0]) >= 0x80))
    return false;
  for (char c : s)
    if (!ok(static_cast<unsigned char>(c))) return false;
  return s.back() != '.';
}

bool is_plain_local(std::string_view s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    bool ok = std::isalnum(c) || c == '_' || c == '-' || (c == '.' && i > 0 && i + 1 < s.size());
    if (!ok) return false;
  }
  return s.empty() || s[0] != '-';
}

}  // namespace

std::string resolve_reference(std::string_view base, std::string_view reference) {
  IriParts r = split(reference);
  IriParts b = split(base);
  IriParts t;
  if (!r.scheme.empty()) {
    t = r;
    t.path = remove_dot_segments(r.path);
  } else {
    if (r.authority) {
      t.authority = r.authority;
      t.path = remove_dot_segments(r.path);
      t.query = r.query;
    } else {
      if (r.path.empty()) {
        t.path = b.path;
        t.query = r.query ? r.query : b.query;
      } else {
        if (r.path[0] == '/')
          t.path = remove_dot_segments(r.path);
        else
          t.path = remove_dot_segments(merge_paths(b, r.path));
        t.query = r.query;
      }
      t.authority = b.authority;
    }
    t.scheme = b.scheme;
  }
  t.fragment = r.fragment;

  std::string out = t.scheme + ":";
  if (t.authority) out += "//" + *t.authority;
  out += t.path;
  if (t.query) out += "?" + *t.query;
  if (t.fragment) out += "#" + *t.fragment;
  return out;
}

Term iri_resolve(const PrefixMap& prefixes, std::string_view name,
                 const std::optional<std::string>& base) {
  auto relative = [&](std::string_view ref) {
    if (is_absolute_iri(ref)) return Term::iri(ref);
    if (!base)
      throw Error(ErrorCode::MissingBase,
                  "relative IRI '" + std::string(ref) + "' with no base");
    return Term::iri(resolve_reference(*base, ref));
  };
  if (name.size() >= 2 && name.front() == '<' && name.back() == '>')
    return relative(name.substr(1, name.size() - 2));
  if (auto colon = name.find(':'); colon != std::string_view::npos &&
                                   is_pn_prefix(name.substr(0, colon))) {
    auto label = name.substr(0, colon);
    auto it = prefixes.find(label);
    if (it == prefixes.end())
      throw Error(ErrorCode::UnknownPrefix, "unknown prefix '" + std::string(label) + ":'");
    return Term::iri(it->second + std::string(name.substr(colon + 1)));
  }
  return relative(name);
}

std::string compact_iri(const PrefixMap& prefixes, std::string_view iri) {
  const std::string* best_label = nullptr;
  std::size_t best_len = 0;
  for (const auto& [label, ns] : prefixes) {
    if (ns.empty() || ns.size() < best_len || iri.substr(0, ns.size()) != ns) continue;
    if (!is_plain_local(iri.substr(ns.size()))) continue;
    if (ns.size() > best_len) {
      best_len = ns.size();
      best_label = &label;
    }
  }
  if (!best_label) return {};
  return *best_label + ":" + std::string(iri.substr(best_len));
}

}  // namespace provalign::rdf
