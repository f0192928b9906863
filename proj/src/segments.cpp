#include "unicyclic/segments.hpp"

#include <algorithm>
#include <set>

namespace unicyclic {

SegmentSequence make_segment_sequence(std::vector<int> lengths) {
  for (int l : lengths)
    if (l < 1) throw error(errc::out_of_range, "segment lengths must be positive");
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return SegmentSequence{std::move(lengths)};
}

SegmentSequence segment_sequence(const Graph& g) {
  if (!is_tree(g) && !is_unicyclic(g))
    throw error(errc::not_tree_or_unicyclic, "segment_sequence");

  std::vector<int> terminals;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) != 2) terminals.push_back(v);
  if (terminals.empty())  // C_n: single closed segment by convention
    return SegmentSequence{{g.n}};

  std::set<Edge> used;
  std::vector<int> lengths;
  for (int t : terminals) {
    for (int first : g.adj[t]) {
      Edge e{std::min(t, first), std::max(t, first)};
      if (used.count(e)) continue;
      used.insert(e);
      int len = 1;
      int prev = t, cur = first;
      while (g.degree(cur) == 2) {
        int nxt = g.adj[cur][0] == prev ? g.adj[cur][1] : g.adj[cur][0];
        prev = cur;
        cur = nxt;
        used.insert({std::min(prev, cur), std::max(prev, cur)});
        ++len;
      }
      lengths.push_back(len);
    }
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return SegmentSequence{std::move(lengths)};
}

}  // namespace unicyclic
