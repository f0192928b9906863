#include "unicyclic/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "unicyclic/canonical.hpp"

namespace unicyclic {

void ClassFilter::validate() const {
  if (order < 1) throw error(errc::infeasible_filter, "order >= 1");
  if (order > kMaxUnicyclicOrder)
    throw error(errc::too_large,
                "enumeration supports order <= " + std::to_string(kMaxUnicyclicOrder));
  if (segment_sequence && segment_count)
    throw error(errc::infeasible_filter, "segment_sequence and segment_count both set");
  if (girth && (*girth < 3 || *girth > order))
    throw error(errc::infeasible_filter, "girth must be in [3, order]");
  if (segment_sequence) {
    for (int l : segment_sequence->lengths)
      if (l < 1) throw error(errc::infeasible_filter, "segment lengths >= 1");
    if (segment_sequence->sum() != order)
      throw error(errc::infeasible_filter, "segment lengths must sum to order");
  }
  if (segment_count && (*segment_count < 1 || *segment_count > order))
    throw error(errc::infeasible_filter, "segment_count must be in [1, order]");
}

bool ClassFilter::matches(const Graph& g) const {
  if (g.n != order) return false;
  if (girth && cycle_info(g).girth != *girth) return false;
  if (segment_sequence || segment_count) {
    SegmentSequence seq = unicyclic::segment_sequence(g);
    if (segment_sequence && !(seq == *segment_sequence)) return false;
    if (segment_count && seq.count() != *segment_count) return false;
  }
  return true;
}

namespace {

// Keyed pools are cached: enumeration is pure and the verification sweeps
// revisit the same orders with many different filters.
std::mutex cache_mutex;

const std::vector<Graph>& tree_pool(int n) {
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  for (int k = 1; k <= n; ++k) {
    if (cache.count(k)) continue;
    std::vector<Graph> result;
    if (k == 1) {
      result.push_back(build_graph(1, {}));
    } else {
      // Every k-vertex tree is a (k-1)-vertex tree plus one leaf.
      std::map<CanonicalKey, Graph> classes;
      for (const Graph& t : cache.at(k - 1)) {
        for (int v = 0; v < t.n; ++v) {
          std::vector<Edge> es = t.edges;
          es.emplace_back(v, t.n);
          Graph bigger = build_graph(t.n + 1, es);
          classes.emplace(canonical_key(bigger), bigger);
        }
      }
      for (auto& [key, g] : classes) result.push_back(std::move(g));
    }
    cache.emplace(k, std::move(result));
  }
  return cache.at(n);
}

const std::vector<Graph>& unicyclic_pool(int n) {
  static std::map<int, std::vector<Graph>> cache;
  const std::vector<Graph>& base = tree_pool(n);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Every unicyclic graph is a spanning tree plus its one extra edge.
  std::map<CanonicalKey, Graph> classes;
  for (const Graph& t : base) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (t.has_edge(u, v)) continue;
        std::vector<Edge> es = t.edges;
        es.emplace_back(u, v);
        Graph g = build_graph(n, es);
        classes.emplace(canonical_key(g), g);
      }
  }
  std::vector<Graph> result;
  result.reserve(classes.size());
  for (auto& [key, g] : classes) result.push_back(std::move(g));
  return cache.emplace(n, std::move(result)).first->second;
}

}  // namespace

std::vector<Graph> trees(int n) {
  if (n < 1) throw error(errc::out_of_range, "trees: n >= 1");
  if (n > kMaxTreeOrder)
    throw error(errc::too_large, "trees: n <= " + std::to_string(kMaxTreeOrder));
  return tree_pool(n);
}

std::vector<Graph> unicyclic_graphs(const ClassFilter& filter) {
  filter.validate();
  if (filter.order < 3) return {};
  std::vector<Graph> out;
  for (const Graph& g : unicyclic_pool(filter.order))
    if (filter.matches(g)) out.push_back(g);
  return out;
}

long long class_count(const ClassFilter& filter) {
  filter.validate();
  if (filter.order < 3) return 0;
  long long count = 0;
  for (const Graph& g : unicyclic_pool(filter.order))
    if (filter.matches(g)) ++count;
  return count;
}

}  // namespace unicyclic
