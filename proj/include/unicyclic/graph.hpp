#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace unicyclic {

enum class errc {
  index_out_of_range,
  self_loop,
  duplicate_edge,
  not_unicyclic,
  not_tree_or_unicyclic,
  no_such_edge,
  too_large,
  disconnected,
  anchor_not_in_graph,
  out_of_range,
  not_simple,
  cycle_too_short,
  unknown_family,
  infeasible_filter,
  hypothesis_violated,
  parse_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

// Edges are stored normalized (u < v) and sorted.
using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1, immutable by convention:
// surgery functions return new graphs.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;

  bool operator==(const Graph& other) const {
    return n == other.n && edges == other.edges;
  }
};

Graph build_graph(int vertex_count, const std::vector<Edge>& edges);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_unicyclic(const Graph& g);

// The unique cycle of a unicyclic graph, canonicalized: starts at the smallest
// cycle vertex and follows the lexicographically smaller direction.
struct CycleInfo {
  int girth = 0;
  std::vector<int> cycle_vertices;   // cyclic order, length == girth
  std::vector<int> branch_vertices;  // cycle vertices with degree >= 3, sorted
};

CycleInfo cycle_info(const Graph& g);

std::vector<int> closed_neighborhood(const Graph& g, int v);

// Induced subgraph on V \ victims, re-indexed contiguously preserving order.
struct DeletionResult {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for deleted vertices
  std::vector<int> new_to_old;
};

DeletionResult delete_vertices(const Graph& g, const std::vector<int>& victims);
Graph delete_edge(const Graph& g, Edge e);

// Disjoint union with u (of a) and v (of b) identified.
Graph merge_vertices(const Graph& a, int u, const Graph& b, int v);
// Vertex-disjoint union; b's indices shifted by a.n.
Graph disjoint_union(const Graph& a, const Graph& b);

std::vector<std::vector<int>> connected_components(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// BFS distances from src; -1 for unreachable.
std::vector<int> bfs_distances(const Graph& g, int src);

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
// '#' starts a comment; the writer emits edges sorted lexicographically.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

}  // namespace unicyclic
