#include "unicyclic/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "unicyclic/canonical.hpp"

namespace unicyclic {

BigInt SubtreeProfile::total() const {
  BigInt t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

namespace {

using Poly = std::vector<BigInt>;  // coefficient of x^k = count of k-vertex subtrees

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Rooted polynomials on a tree: f_v[k] = #k-vertex subtrees of v's rooted
// subtree that contain v; with weights, v stands in for weight[v] original
// vertices. f_v = x^{w_v} * prod_children (1 + f_c).
std::vector<Poly> tree_rooted_polys(const Graph& t, int root,
                                    const std::vector<int>& weight) {
  std::vector<int> order, parent(t.n, -1);
  order.reserve(t.n);
  order.push_back(root);
  parent[root] = root;
  for (size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int w : t.adj[v])
      if (parent[w] < 0) {
        parent[w] = v;
        order.push_back(w);
      }
  }
  std::vector<Poly> f(t.n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    Poly acc{1};
    for (int w : t.adj[v]) {
      if (w == root || parent[w] != v) continue;
      Poly opt = f[w];   // constant term is 0 (every piece contains w)
      opt[0] = 1;        // child subtree absent
      acc = poly_mul(acc, opt);
    }
    Poly shifted(weight[v], BigInt(0));
    shifted.push_back(1);
    f[v] = poly_mul(shifted, acc);
  }
  return f;
}

// Minimal subtree of a tree spanning S (vertex indices), as a sorted list.
std::vector<int> steiner_vertices(const Graph& t, const std::vector<int>& s) {
  std::vector<bool> required(t.n, false);
  for (int v : s) required[v] = true;
  std::vector<int> deg(t.n);
  for (int v = 0; v < t.n; ++v) deg[v] = t.degree(v);
  std::vector<bool> gone(t.n, false);
  std::vector<int> queue;
  for (int v = 0; v < t.n; ++v)
    if (deg[v] <= 1 && !required[v]) queue.push_back(v);
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (gone[v]) continue;
    gone[v] = true;
    for (int w : t.adj[v])
      if (!gone[w] && --deg[w] == 1 && !required[w]) queue.push_back(w);
  }
  std::vector<int> out;
  for (int v = 0; v < t.n; ++v)
    if (!gone[v]) out.push_back(v);
  return out;
}

// Poly of subtrees of tree t containing every vertex in s (nonempty).
// Contracts the Steiner subtree of s into one weighted node and runs the DP.
Poly subtrees_containing(const Graph& t, const std::vector<int>& s) {
  std::vector<int> core = steiner_vertices(t, s);
  std::vector<int> to_new(t.n, -1);
  for (int v : core) to_new[v] = 0;
  int next = 1;
  for (int v = 0; v < t.n; ++v)
    if (to_new[v] < 0) to_new[v] = next++;
  std::vector<Edge> es;
  for (auto [u, v] : t.edges) {
    int a = to_new[u], b = to_new[v];
    if (a != b) es.emplace_back(a, b);
  }
  Graph contracted = build_graph(next, es);
  std::vector<int> weight(next, 1);
  weight[0] = static_cast<int>(core.size());
  auto f = tree_rooted_polys(contracted, 0, weight);
  return f[0];
}

SubtreeProfile tree_profile(const Graph& t) {
  SubtreeProfile p;
  p.counts.assign(t.n + 1, BigInt(0));
  p.counts[0] = 1;
  if (t.n == 0) return p;
  auto f = tree_rooted_polys(t, 0, std::vector<int>(t.n, 1));
  for (int v = 0; v < t.n; ++v)
    for (size_t k = 0; k < f[v].size(); ++k) p.counts[k] += f[v][k];
  return p;
}

struct CycleDecomposition {
  CycleInfo info;
  std::vector<int> cycle_pos;        // vertex -> position on cycle, else -1
  std::vector<Graph> pendant_trees;  // one per cycle position
  std::vector<int> pendant_root;     // index of the cycle vertex inside its tree
  std::vector<std::vector<int>> pendant_old;  // tree index -> original vertices
};

CycleDecomposition decompose_cycle(const Graph& g) {
  CycleDecomposition d;
  d.info = cycle_info(g);
  int girth = d.info.girth;
  d.cycle_pos.assign(g.n, -1);
  for (int i = 0; i < girth; ++i) d.cycle_pos[d.info.cycle_vertices[i]] = i;

  std::vector<Edge> forest_edges;
  for (auto [u, v] : g.edges) {
    bool cycle_edge = false;
    if (d.cycle_pos[u] >= 0 && d.cycle_pos[v] >= 0) {
      int a = d.cycle_pos[u], b = d.cycle_pos[v];
      int diff = (a - b + girth) % girth;
      cycle_edge = diff == 1 || diff == girth - 1;
    }
    if (!cycle_edge) forest_edges.emplace_back(u, v);
  }
  Graph forest = build_graph(g.n, forest_edges);
  d.pendant_trees.resize(girth);
  d.pendant_root.resize(girth);
  d.pendant_old.resize(girth);
  for (auto& comp : connected_components(forest)) {
    int pos = -1;
    for (int v : comp)
      if (d.cycle_pos[v] >= 0) pos = d.cycle_pos[v];
    d.pendant_trees[pos] = induced_subgraph(forest, comp);
    d.pendant_old[pos] = comp;
    int cv = d.info.cycle_vertices[pos];
    d.pendant_root[pos] =
        static_cast<int>(std::lower_bound(comp.begin(), comp.end(), cv) - comp.begin());
  }
  return d;
}

SubtreeProfile unicyclic_profile(const Graph& g) {
  CycleDecomposition d = decompose_cycle(g);
  int girth = d.info.girth;

  // Subtrees avoiding one chosen cycle edge e = (c_0, c_1) live in the tree G-e.
  int c0 = d.info.cycle_vertices[0], c1 = d.info.cycle_vertices[1];
  Graph without = delete_edge(g, {std::min(c0, c1), std::max(c0, c1)});
  SubtreeProfile p = tree_profile(without);
  p.counts.resize(g.n + 1, BigInt(0));

  // Subtrees through e use a contiguous arc of cycle edges containing e;
  // each arc vertex contributes an independently chosen rooted pendant piece.
  std::vector<Poly> rooted(girth);
  for (int i = 0; i < girth; ++i)
    rooted[i] = subtrees_containing(d.pendant_trees[i], {d.pendant_root[i]});
  for (int len = 1; len <= girth - 1; ++len) {
    for (int start = -len + 1; start <= 0; ++start) {
      Poly prod = rooted[(start + girth) % girth];
      for (int k = 1; k <= len; ++k)
        prod = poly_mul(prod, rooted[(start + k + girth) % girth]);
      for (size_t k = 0; k < prod.size(); ++k) p.counts[k] += prod[k];
    }
  }
  return p;
}

int popcount64(unsigned long long x) { return __builtin_popcountll(x); }

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int v) {
    while (up[v] != v) v = up[v] = up[up[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    up[a] = b;
    return true;
  }
};

constexpr int kOracleMaxEdges = 22;
constexpr int kOracleMaxVertices = 22;

void check_anchors(const Graph& g, const Anchors& a) {
  if (a.empty()) throw error(errc::anchor_not_in_graph, "empty anchor set");
  for (int v : a.vertices)
    if (v < 0 || v >= g.n) throw error(errc::anchor_not_in_graph, "vertex " + std::to_string(v));
  for (auto [u, v] : a.edges)
    if (!g.has_edge(u, v))
      throw error(errc::anchor_not_in_graph,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
}

}  // namespace

SubtreeProfile subtree_count_oracle(const Graph& g) {
  if (g.edge_count() > kOracleMaxEdges)
    throw error(errc::too_large, "subtree_count_oracle: more than 22 edges");
  SubtreeProfile p;
  p.counts.assign(g.n + 1, BigInt(0));
  p.counts[0] = 1;
  if (g.n >= 1) p.counts[1] = g.n;
  int m = g.edge_count();
  for (unsigned long long mask = 1; mask < (1ULL << m); ++mask) {
    UnionFind uf(g.n);
    bool acyclic = true;
    int spanned = 0;
    std::vector<bool> seen(g.n, false);
    for (int i = 0; i < m && acyclic; ++i) {
      if (!(mask >> i & 1)) continue;
      auto [u, v] = g.edges[i];
      if (!seen[u]) { seen[u] = true; ++spanned; }
      if (!seen[v]) { seen[v] = true; ++spanned; }
      acyclic = uf.unite(u, v);
    }
    if (acyclic && spanned == popcount64(mask) + 1) ++p.counts[spanned];
  }
  return p;
}

SubtreeProfile rooted_subtree_oracle(const Graph& g, const Anchors& a) {
  check_anchors(g, a);
  if (g.edge_count() > kOracleMaxEdges)
    throw error(errc::too_large, "rooted_subtree_oracle: more than 22 edges");
  SubtreeProfile p;
  p.counts.assign(g.n + 1, BigInt(0));
  if (g.n == 0) return p;
  if (a.edges.empty()) {
    for (int v = 0; v < g.n; ++v) {
      bool ok = true;
      for (int req : a.vertices) ok = ok && req == v;
      if (ok) ++p.counts[1];
    }
  }
  int m = g.edge_count();
  for (unsigned long long mask = 1; mask < (1ULL << m); ++mask) {
    bool has_required = true;
    for (auto [u, v] : a.edges) {
      int idx = static_cast<int>(
          std::lower_bound(g.edges.begin(), g.edges.end(), Edge{u, v}) - g.edges.begin());
      has_required = has_required && (mask >> idx & 1);
    }
    if (!has_required) continue;
    UnionFind uf(g.n);
    bool acyclic = true;
    int spanned = 0;
    std::vector<bool> seen(g.n, false);
    for (int i = 0; i < m && acyclic; ++i) {
      if (!(mask >> i & 1)) continue;
      auto [u, v] = g.edges[i];
      if (!seen[u]) { seen[u] = true; ++spanned; }
      if (!seen[v]) { seen[v] = true; ++spanned; }
      acyclic = uf.unite(u, v);
    }
    if (!acyclic || spanned != popcount64(mask) + 1) continue;
    bool covers = true;
    for (int v : a.vertices) covers = covers && seen[v];
    if (covers) ++p.counts[spanned];
  }
  return p;
}

SubtreeProfile subtree_profile(const Graph& g) {
  if (!is_connected(g)) throw error(errc::disconnected, "subtree_profile");
  if (is_tree(g)) return tree_profile(g);
  if (is_unicyclic(g)) return unicyclic_profile(g);
  return subtree_count_oracle(g);
}

BigInt subtree_count(const Graph& g) { return subtree_profile(g).total(); }

SubtreeProfile rooted_subtree_profile(const Graph& g, const Anchors& anchors) {
  check_anchors(g, anchors);
  if (!is_connected(g)) throw error(errc::disconnected, "rooted_subtree_profile");

  if (is_tree(g)) {
    std::vector<int> s = anchors.vertices;
    for (auto [u, v] : anchors.edges) {
      s.push_back(u);
      s.push_back(v);
    }
    Poly f = subtrees_containing(g, s);
    SubtreeProfile p;
    p.counts.assign(g.n + 1, BigInt(0));
    for (size_t k = 0; k < f.size(); ++k) p.counts[k] += f[k];
    return p;
  }

  if (!is_unicyclic(g)) return rooted_subtree_oracle(g, anchors);

  CycleDecomposition d = decompose_cycle(g);
  int girth = d.info.girth;
  auto edge_pos = [&](Edge e) {  // cycle-edge position, else -1
    int a = d.cycle_pos[e.first], b = d.cycle_pos[e.second];
    if (a < 0 || b < 0) return -1;
    if ((a + 1) % girth == b) return a;
    if ((b + 1) % girth == a) return b;
    return -1;
  };

  // Sort the anchors into per-pendant-tree sets and arc requirements.
  std::vector<std::vector<int>> tree_anchor(girth);
  std::vector<int> required_vertex_pos, required_edge_pos;
  std::vector<int> tree_of_vertex(g.n, -1);
  for (int i = 0; i < girth; ++i)
    for (int v : d.pendant_old[i]) tree_of_vertex[v] = i;
  for (int v : anchors.vertices) {
    int i = tree_of_vertex[v];
    required_vertex_pos.push_back(i);
    tree_anchor[i].push_back(v);
  }
  for (auto e : anchors.edges) {
    int pos = edge_pos(e);
    if (pos >= 0) {
      required_edge_pos.push_back(pos);
    } else {
      int i = tree_of_vertex[e.first];
      required_vertex_pos.push_back(i);
      tree_anchor[i].push_back(e.first);
      tree_anchor[i].push_back(e.second);
    }
  }

  // Decomposition edge: a required cycle edge if any (then no subtree avoids
  // it), otherwise edge (c_0, c_1).
  int e_pos = required_edge_pos.empty() ? 0 : required_edge_pos[0];

  SubtreeProfile p;
  p.counts.assign(g.n + 1, BigInt(0));
  if (required_edge_pos.empty()) {
    int cu = d.info.cycle_vertices[e_pos];
    int cv = d.info.cycle_vertices[(e_pos + 1) % girth];
    Graph without = delete_edge(g, {std::min(cu, cv), std::max(cu, cv)});
    SubtreeProfile tree_part = rooted_subtree_profile(without, anchors);
    p.counts = tree_part.counts;
    p.counts.resize(g.n + 1, BigInt(0));
  }

  std::vector<Poly> rooted(girth);
  for (int i = 0; i < girth; ++i) {
    const auto& old = d.pendant_old[i];
    std::vector<int> local;  // anchors translated to T_i-local ids, plus the root
    for (int v : tree_anchor[i])
      local.push_back(
          static_cast<int>(std::lower_bound(old.begin(), old.end(), v) - old.begin()));
    local.push_back(d.pendant_root[i]);
    rooted[i] = subtrees_containing(d.pendant_trees[i], local);
  }

  for (int len = 1; len <= girth - 1; ++len) {
    for (int start = e_pos - len + 1; start <= e_pos; ++start) {
      auto in_arc_vertex = [&](int pos) {
        int rel = (pos - start + girth) % girth;
        return rel <= len;
      };
      auto in_arc_edge = [&](int pos) {
        int rel = (pos - start + girth) % girth;
        return rel < len;
      };
      bool ok = true;
      for (int pos : required_vertex_pos) ok = ok && in_arc_vertex(pos);
      for (int pos : required_edge_pos) ok = ok && in_arc_edge(pos);
      if (!ok) continue;
      Poly prod = rooted[(start + girth) % girth];
      for (int k = 1; k <= len; ++k)
        prod = poly_mul(prod, rooted[(start + k + girth) % girth]);
      for (size_t k = 0; k < prod.size(); ++k) p.counts[k] += prod[k];
    }
  }
  p.counts[0] = 0;
  return p;
}

BigInt rooted_subtree_count(const Graph& g, const Anchors& anchors) {
  return rooted_subtree_profile(g, anchors).total();
}

BigInt wiener(const Graph& g) {
  BigInt total = 0;
  for (int v = 0; v < g.n; ++v) {
    auto dist = bfs_distances(g, v);
    for (int w = v + 1; w < g.n; ++w) {
      if (dist[w] < 0) throw error(errc::disconnected, "wiener");
      total += dist[w];
    }
  }
  return total;
}

namespace {

// Shared shell for the two deletion recursions: split into components,
// multiply, memoize small components on their canonical key.
struct DeletionRecursion {
  std::function<BigInt(const Graph&, DeletionRecursion&)> step;
  std::map<std::string, BigInt> memo;

  BigInt recurse(const Graph& g) {
    BigInt product = 1;
    for (auto& comp : connected_components(g)) product *= component(induced_subgraph(g, comp));
    return product;
  }

  BigInt component(const Graph& c) {
    std::string key;
    bool memoizable = c.n <= kCanonicalMaxVertices;
    if (memoizable) {
      key = canonical_key(c).bytes;
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
    }
    BigInt value = step(c, *this);
    if (memoizable) memo.emplace(std::move(key), value);
    return value;
  }
};

}  // namespace

BigInt merrifield_simmons(const Graph& g) {
  DeletionRecursion rec{[](const Graph& c, DeletionRecursion& self) -> BigInt {
                          if (c.edge_count() == 0) return BigInt(1) << c.n;
                          int pivot = 0;
                          for (int v = 1; v < c.n; ++v)
                            if (c.degree(v) > c.degree(pivot)) pivot = v;
                          return self.recurse(delete_vertices(c, {pivot}).graph) +
                                 self.recurse(
                                     delete_vertices(c, closed_neighborhood(c, pivot)).graph);
                        },
                        {}};
  return rec.recurse(g);
}

BigInt hosoya(const Graph& g) {
  DeletionRecursion rec{[](const Graph& c, DeletionRecursion& self) -> BigInt {
                          if (c.edge_count() == 0) return 1;
                          Edge e = c.edges[0];
                          return self.recurse(delete_edge(c, e)) +
                                 self.recurse(delete_vertices(c, {e.first, e.second}).graph);
                        },
                        {}};
  return rec.recurse(g);
}

BigInt sigma_oracle(const Graph& g) {
  if (g.n > kOracleMaxVertices)
    throw error(errc::too_large, "sigma_oracle: more than 22 vertices");
  std::vector<unsigned long long> adj_mask(g.n, 0);
  for (auto [u, v] : g.edges) {
    adj_mask[u] |= 1ULL << v;
    adj_mask[v] |= 1ULL << u;
  }
  unsigned long long count = 0;
  for (unsigned long long mask = 0; mask < (1ULL << g.n); ++mask) {
    bool ok = true;
    for (unsigned long long rest = mask; rest && ok;) {
      int v = __builtin_ctzll(rest);
      rest &= rest - 1;
      ok = (adj_mask[v] & mask) == 0;
    }
    count += ok;
  }
  return BigInt(count);
}

BigInt hosoya_oracle(const Graph& g) {
  int m = g.edge_count();
  if (m > kOracleMaxEdges)
    throw error(errc::too_large, "hosoya_oracle: more than 22 edges");
  // compact endpoint ids so the used-vertex set fits one word
  std::map<int, int> compact;
  for (auto [u, v] : g.edges) {
    compact.emplace(u, static_cast<int>(compact.size()));
    compact.emplace(v, static_cast<int>(compact.size()));
  }
  unsigned long long count = 0;
  for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
    unsigned long long used = 0;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      unsigned long long bits =
          (1ULL << compact[g.edges[i].first]) | (1ULL << compact[g.edges[i].second]);
      ok = (used & bits) == 0;
      used |= bits;
    }
    count += ok;
  }
  return BigInt(count);
}

InvariantBundle invariant_bundle(const Graph& g) {
  InvariantBundle b;
  b.subtree_total = subtree_count(g);
  b.wiener = wiener(g);
  b.merrifield_simmons = merrifield_simmons(g);
  b.hosoya = hosoya(g);
  return b;
}

}  // namespace unicyclic
