#include "unicyclic/canonical.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace unicyclic {

std::string CanonicalKey::hex() const {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

namespace {

// Canonical form = lexicographic minimum, over a label-invariant set of vertex
// orderings, of the upper-triangle adjacency bit string. The orderings are the
// discrete colorings reachable by iterated degree-signature refinement plus
// individualization of one vertex from the first non-singleton color class
// (branching over every choice). The reachable set depends only on the
// structure of the graph, so equal strings <=> isomorphic graphs.
struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<unsigned> adj_mask;
  std::string best;  // packed bits, empty until first leaf

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.n), adj_mask(graph.n, 0) {
    for (auto [u, v] : g.edges) {
      adj_mask[u] |= 1u << v;
      adj_mask[v] |= 1u << u;
    }
  }

  // Twins (equal neighborhoods outside {u, v}) are swapped by an
  // automorphism, so individualizing either one explores the same subtree.
  bool twins(int u, int v) const {
    unsigned clear = ~((1u << u) | (1u << v));
    return (adj_mask[u] & clear) == (adj_mask[v] & clear);
  }

  // Stable refinement: new color ranks ordered by (old color, neighbor-color
  // multiset), iterated to a fixed point.
  void refine(std::vector<int>& color) const {
    while (true) {
      std::vector<std::pair<std::vector<int>, int>> sig(n);
      for (int v = 0; v < n; ++v) {
        std::vector<int> s;
        s.reserve(g.adj[v].size() + 1);
        s.push_back(color[v]);
        for (int w : g.adj[v]) s.push_back(color[w]);
        std::sort(s.begin() + 1, s.end());
        sig[v] = {std::move(s), v};
      }
      std::map<std::vector<int>, std::vector<int>> groups;
      for (int v = 0; v < n; ++v) groups[sig[v].first].push_back(v);
      int next = 0;
      std::vector<int> fresh(n);
      for (auto& [key, members] : groups) {
        for (int v : members) fresh[v] = next;
        ++next;
      }
      if (fresh == color) return;
      color = std::move(fresh);
    }
  }

  std::string pack(const std::vector<int>& color) const {
    // color is discrete: vertex with color c goes to position c.
    std::vector<int> pos_to_vertex(n);
    for (int v = 0; v < n; ++v) pos_to_vertex[color[v]] = v;
    std::string bits((n * (n - 1) / 2 + 7) / 8, '\0');
    int idx = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++idx)
        if (g.has_edge(pos_to_vertex[i], pos_to_vertex[j]))
          bits[idx / 8] |= static_cast<char>(1 << (idx % 8));
    return bits;
  }

  void search(std::vector<int> color) {
    refine(color);
    int target = -1;
    std::vector<int> cls;
    for (int c = 0; c < n && target < 0; ++c) {
      cls.clear();
      for (int v = 0; v < n; ++v)
        if (color[v] == c) cls.push_back(v);
      if (cls.size() >= 2) target = c;
    }
    if (target < 0) {
      std::string leaf = pack(color);
      if (best.empty() || leaf < best) best = std::move(leaf);
      return;
    }
    std::vector<int> tried;
    for (int v : cls) {
      bool redundant = false;
      for (int u : tried)
        if (twins(u, v)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      tried.push_back(v);
      std::vector<int> next = color;
      for (int w = 0; w < n; ++w)
        if (w != v && next[w] >= target) ++next[w];
      search(std::move(next));
    }
  }
};

}  // namespace

CanonicalKey canonical_key(const Graph& g) {
  if (g.n > kCanonicalMaxVertices)
    throw error(errc::too_large, "canonical_key supports at most " +
                                     std::to_string(kCanonicalMaxVertices) + " vertices");
  CanonicalKey key;
  key.bytes.push_back(static_cast<char>(g.n));
  if (g.n == 0) return key;
  CanonSearch search(g);
  search.search(std::vector<int>(g.n, 0));
  key.bytes += search.best;
  return key;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  return canonical_key(a) == canonical_key(b);
}

}  // namespace unicyclic
