#include "unicyclic/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

namespace unicyclic {

const char* errc_name(errc c) {
  switch (c) {
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::self_loop: return "SelfLoop";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::not_unicyclic: return "NotUnicyclic";
    case errc::not_tree_or_unicyclic: return "NotTreeOrUnicyclic";
    case errc::no_such_edge: return "NoSuchEdge";
    case errc::too_large: return "TooLarge";
    case errc::disconnected: return "Disconnected";
    case errc::anchor_not_in_graph: return "AnchorNotInGraph";
    case errc::out_of_range: return "OutOfRange";
    case errc::not_simple: return "NotSimple";
    case errc::cycle_too_short: return "CycleTooShort";
    case errc::unknown_family: return "UnknownFamily";
    case errc::infeasible_filter: return "InfeasibleFilter";
    case errc::hypothesis_violated: return "HypothesisViolated";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), Edge{u, v});
}

Graph build_graph(int vertex_count, const std::vector<Edge>& raw_edges) {
  if (vertex_count < 0)
    throw error(errc::index_out_of_range, "negative vertex count");
  Graph g;
  g.n = vertex_count;
  g.edges.reserve(raw_edges.size());
  for (auto [u, v] : raw_edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw error(errc::index_out_of_range,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
      throw error(errc::self_loop, "vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    g.edges.emplace_back(u, v);
  }
  std::sort(g.edges.begin(), g.edges.end());
  auto dup = std::adjacent_find(g.edges.begin(), g.edges.end());
  if (dup != g.edges.end())
    throw error(errc::duplicate_edge, "edge (" + std::to_string(dup->first) + "," +
                                          std::to_string(dup->second) + ")");
  g.adj.assign(vertex_count, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  return g;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.n, -1);
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::find(d.begin(), d.end(), -1) == d.end();
}

bool is_tree(const Graph& g) {
  return g.n >= 1 && g.edge_count() == g.n - 1 && is_connected(g);
}

bool is_unicyclic(const Graph& g) {
  return g.n >= 3 && g.edge_count() == g.n && is_connected(g);
}

CycleInfo cycle_info(const Graph& g) {
  if (!is_unicyclic(g)) throw error(errc::not_unicyclic, "cycle_info");
  // Strip leaves until only the cycle remains.
  std::vector<int> deg(g.n);
  for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
  std::deque<int> q;
  for (int v = 0; v < g.n; ++v)
    if (deg[v] == 1) q.push_back(v);
  std::vector<bool> removed(g.n, false);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    removed[v] = true;
    for (int w : g.adj[v])
      if (!removed[w] && --deg[w] == 1) q.push_back(w);
  }
  int start = -1;
  for (int v = 0; v < g.n && start < 0; ++v)
    if (!removed[v]) start = v;

  auto walk = [&](int second) {
    std::vector<int> seq{start, second};
    int prev = start, cur = second;
    while (true) {
      int nxt = -1;
      for (int w : g.adj[cur])
        if (!removed[w] && w != prev) {
          nxt = w;
          break;
        }
      if (nxt == start) break;
      seq.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    return seq;
  };

  // The two cycle neighbors of `start`; pick the lexicographically smaller walk.
  std::vector<int> nbrs;
  for (int w : g.adj[start])
    if (!removed[w]) nbrs.push_back(w);
  std::vector<int> a = walk(nbrs[0]);
  std::vector<int> b = walk(nbrs[1]);

  CycleInfo info;
  info.cycle_vertices = std::min(a, b);
  info.girth = static_cast<int>(info.cycle_vertices.size());
  for (int v : info.cycle_vertices)
    if (g.degree(v) >= 3) info.branch_vertices.push_back(v);
  std::sort(info.branch_vertices.begin(), info.branch_vertices.end());
  return info;
}

std::vector<int> closed_neighborhood(const Graph& g, int v) {
  if (v < 0 || v >= g.n) throw error(errc::index_out_of_range, "closed_neighborhood");
  std::vector<int> out = g.adj[v];
  out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

DeletionResult delete_vertices(const Graph& g, const std::vector<int>& victims) {
  std::vector<bool> gone(g.n, false);
  for (int v : victims) {
    if (v < 0 || v >= g.n) throw error(errc::index_out_of_range, "delete_vertices");
    gone[v] = true;
  }
  DeletionResult res;
  res.old_to_new.assign(g.n, -1);
  for (int v = 0; v < g.n; ++v)
    if (!gone[v]) {
      res.old_to_new[v] = static_cast<int>(res.new_to_old.size());
      res.new_to_old.push_back(v);
    }
  std::vector<Edge> kept;
  for (auto [u, v] : g.edges)
    if (!gone[u] && !gone[v]) kept.emplace_back(res.old_to_new[u], res.old_to_new[v]);
  res.graph = build_graph(static_cast<int>(res.new_to_old.size()), kept);
  return res;
}

Graph delete_edge(const Graph& g, Edge e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  if (!g.has_edge(e.first, e.second))
    throw error(errc::no_such_edge, "(" + std::to_string(e.first) + "," +
                                        std::to_string(e.second) + ")");
  std::vector<Edge> kept;
  kept.reserve(g.edges.size() - 1);
  for (auto& f : g.edges)
    if (f != e) kept.push_back(f);
  return build_graph(g.n, kept);
}

Graph merge_vertices(const Graph& a, int u, const Graph& b, int v) {
  if (u < 0 || u >= a.n) throw error(errc::index_out_of_range, "merge_vertices: u");
  if (v < 0 || v >= b.n) throw error(errc::index_out_of_range, "merge_vertices: v");
  auto map_b = [&](int w) {
    if (w == v) return u;
    return a.n + (w > v ? w - 1 : w);
  };
  std::vector<Edge> es = a.edges;
  for (auto [x, y] : b.edges) es.emplace_back(map_b(x), map_b(y));
  return build_graph(a.n + b.n - 1, es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges;
  for (auto [x, y] : b.edges) es.emplace_back(a.n + x, a.n + y);
  return build_graph(a.n + b.n, es);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(g.n, false);
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> q{s};
    seen[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      comp.push_back(v);
      for (int w : g.adj[v])
        if (!seen[w]) {
          seen[w] = true;
          q.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> old_to_new(g.n, -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.n) throw error(errc::index_out_of_range, "induced_subgraph");
    old_to_new[v] = static_cast<int>(i);
  }
  std::vector<Edge> es;
  for (auto [u, v] : g.edges)
    if (old_to_new[u] >= 0 && old_to_new[v] >= 0)
      es.emplace_back(old_to_new[u], old_to_new[v]);
  return build_graph(static_cast<int>(vertices.size()), es);
}

Graph read_edge_list(std::istream& in) {
  auto next_line = [&](std::string& line) {
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
  };
  std::string line;
  if (!next_line(line)) throw error(errc::parse_error, "missing header line");
  std::istringstream hdr(line);
  long long n = -1, m = -1;
  if (!(hdr >> n >> m) || n < 0 || m < 0)
    throw error(errc::parse_error, "bad header: " + line);
  std::vector<Edge> es;
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line))
      throw error(errc::parse_error, "expected " + std::to_string(m) + " edges");
    std::istringstream es_in(line);
    long long u, v;
    if (!(es_in >> u >> v)) throw error(errc::parse_error, "bad edge line: " + line);
    es.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  try {
    return build_graph(static_cast<int>(n), es);
  } catch (const error& e) {
    throw error(errc::parse_error, e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace unicyclic
