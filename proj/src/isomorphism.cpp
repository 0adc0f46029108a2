#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "provalign/error.h"
#include "provalign/graph.h"

namespace provalign::rdf {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finaliser over the running hash.
  std::uint64_t z = h ^ (v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kSelf = 0x5E1F5E1F5E1F5E1Full;
constexpr std::uint64_t kBlankTag = 0xB1A4CB1A4CB1A4CBull;

// Blank-bearing triples of one graph, with blank nodes numbered densely.
struct BlankView {
  std::vector<Term> nodes;
  std::unordered_map<Term, std::size_t> index;
  std::vector<Triple> triples;
  // For each node: (triple index, role bit mask of the node in that triple).
  std::vector<std::vector<std::pair<std::size_t, int>>> incident;

  explicit BlankView(const Graph& g) {
    for (const auto& t : g.triples()) {
      if (!t.subject.is_blank() && !t.object.is_blank()) continue;
      std::size_t ti = triples.size();
      triples.push_back(t);
      int roles_s = 1, roles_o = 2;
      if (t.subject == t.object) roles_s = roles_o = 3;
      if (t.subject.is_blank()) touch(t.subject, ti, roles_s);
      if (t.object.is_blank() && t.object != t.subject) touch(t.object, ti, roles_o);
    }
  }

  void touch(Term b, std::size_t ti, int roles) {
    auto [it, fresh] = index.emplace(b, nodes.size());
    if (fresh) {
      nodes.push_back(b);
      incident.emplace_back();
    }
    incident[it->second].emplace_back(ti, roles);
  }

  std::uint64_t position(Term t, std::size_t self, const std::vector<std::uint64_t>& colour) const {
    if (!t.is_blank()) return t.id();
    std::size_t i = index.at(t);
    return i == self ? kSelf : mix(kBlankTag, colour[i]);
  }

  std::vector<std::uint64_t> refine_once(const std::vector<std::uint64_t>& colour) const {
    std::vector<std::uint64_t> next(nodes.size());
    std::vector<std::uint64_t> sig;
    for (std::size_t n = 0; n < nodes.size(); ++n) {
      sig.clear();
      for (auto [ti, roles] : incident[n]) {
        const Triple& t = triples[ti];
        std::uint64_t h = mix(static_cast<std::uint64_t>(roles), position(t.subject, n, colour));
        h = mix(h, t.predicate.id());
        h = mix(h, position(t.object, n, colour));
        sig.push_back(h);
      }
      std::sort(sig.begin(), sig.end());
      std::uint64_t h = mix(0xC0104Bull, colour[n]);
      for (auto s : sig) h = mix(h, s);
      next[n] = h;
    }
    return next;
  }
};

std::size_t distinct(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

// Refines until the partition stops splitting.
std::vector<std::uint64_t> refine(const BlankView& view, std::vector<std::uint64_t> colour) {
  std::size_t classes = distinct(colour);
  for (std::size_t round = 0; round <= view.nodes.size() + 1; ++round) {
    auto next = view.refine_once(colour);
    std::size_t next_classes = distinct(next);
    colour = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return colour;
}

bool same_multiset(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b, std::size_t bound)
      : a_(a), b_(b), va_(a), vb_(b), bound_(bound) {}

  bool run() {
    if (va_.nodes.size() != vb_.nodes.size() || va_.triples.size() != vb_.triples.size())
      return false;
    std::vector<std::uint64_t> ca(va_.nodes.size(), 1), cb(vb_.nodes.size(), 1);
    return search(refine(va_, ca), refine(vb_, cb), 0);
  }

 private:
  bool search(const std::vector<std::uint64_t>& ca, const std::vector<std::uint64_t>& cb,
              std::uint64_t depth) {
    if (!same_multiset(ca, cb)) return false;
    // Pick the smallest non-singleton colour class.
    std::unordered_map<std::uint64_t, std::size_t> counts;
    for (auto c : ca) ++counts[c];
    std::uint64_t pick = 0;
    std::size_t pick_size = 0;
    for (auto [c, n] : counts)
      if (n > 1 && (pick_size == 0 || n < pick_size || (n == pick_size && c < pick))) {
        pick = c;
        pick_size = n;
      }
    if (pick_size == 0) return verify(ca, cb);
    if (va_.nodes.size() > bound_)
      throw Error(ErrorCode::ResourceLimit,
                  "graph isomorphism: " + std::to_string(va_.nodes.size()) +
                      " blank nodes exceed the bound of " + std::to_string(bound_) +
                      " and refinement left ties");
    std::size_t v = std::find(ca.begin(), ca.end(), pick) - ca.begin();
    std::uint64_t marker = mix(0x1D1D1D1Dull, depth + 1);
    for (std::size_t w = 0; w < cb.size(); ++w) {
      if (cb[w] != pick) continue;
      auto na = ca, nb = cb;
      na[v] = mix(na[v], marker);
      nb[w] = mix(nb[w], marker);
      if (search(refine(va_, na), refine(vb_, nb), depth + 1)) return true;
    }
    return false;
  }

  bool verify(const std::vector<std::uint64_t>& ca, const std::vector<std::uint64_t>& cb) {
    std::unordered_map<std::uint64_t, std::size_t> in_b;
    for (std::size_t i = 0; i < cb.size(); ++i) in_b[cb[i]] = i;
    auto map = [&](Term t) {
      if (!t.is_blank()) return t;
      return vb_.nodes[in_b.at(ca[va_.index.at(t)])];
    };
    for (const auto& t : va_.triples)
      if (!b_.contains(Triple{map(t.subject), t.predicate, map(t.object)})) return false;
    return true;
  }

  const Graph& a_;
  const Graph& b_;
  BlankView va_, vb_;
  std::size_t bound_;
};

}  // namespace

bool graph_isomorphic(const Graph& a, const Graph& b, std::size_t blank_bound) {
  if (a.size() != b.size()) return false;
  for (const auto& t : a.triples())
    if (!t.subject.is_blank() && !t.object.is_blank() && !b.contains(t)) return false;
  return Matcher(a, b, blank_bound).run();
}

}  // namespace provalign::rdf
