#include "unicyclic/families.hpp"

#include <algorithm>
#include <string>

namespace unicyclic {
namespace families {

namespace {

// Append a pendant path of `length` edges at vertex `at`; returns nothing,
// extends `edges` and bumps `next` past the new vertices.
void grow_path(std::vector<Edge>& edges, int at, int length, int& next) {
  int prev = at;
  for (int i = 0; i < length; ++i) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
}

}  // namespace

Graph path(int n) {
  if (n < 1) throw error(errc::out_of_range, "path: n >= 1");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return build_graph(n, es);
}

Graph cycle(int n) {
  if (n < 3) throw error(errc::out_of_range, "cycle: n >= 3");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return build_graph(n, es);
}

Graph star(int n) {
  if (n < 1) throw error(errc::out_of_range, "star: n >= 1");
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.emplace_back(0, i);
  return build_graph(n, es);
}

Graph us(int n, int girth) {
  if (girth < 3 || n < girth) throw error(errc::out_of_range, "us: n >= girth >= 3");
  std::vector<Edge> es;
  for (int i = 0; i < girth; ++i) es.emplace_back(i, (i + 1) % girth);
  for (int i = girth; i < n; ++i) es.emplace_back(0, i);
  return build_graph(n, es);
}

Graph up(int n, int girth) {
  if (girth < 3 || n < girth) throw error(errc::out_of_range, "up: n >= girth >= 3");
  std::vector<Edge> es;
  for (int i = 0; i < girth; ++i) es.emplace_back(i, (i + 1) % girth);
  int next = girth;
  grow_path(es, 0, n - girth, next);
  return build_graph(n, es);
}

Graph u_cycle_seg(const std::vector<int>& lengths, int cycle_index) {
  if (cycle_index < 1 || cycle_index > static_cast<int>(lengths.size()))
    throw error(errc::out_of_range, "u_cycle_seg: bad cycle index");
  for (int l : lengths)
    if (l < 1) throw error(errc::out_of_range, "u_cycle_seg: lengths >= 1");
  int li = lengths[cycle_index - 1];
  if (li <= 2)
    throw error(errc::cycle_too_short,
                "u_cycle_seg: cycle segment " + std::to_string(li) + " <= 2");
  std::vector<Edge> es;
  for (int i = 0; i < li; ++i) es.emplace_back(i, (i + 1) % li);
  int next = li;
  for (size_t j = 0; j < lengths.size(); ++j)
    if (static_cast<int>(j) != cycle_index - 1) grow_path(es, 0, lengths[j], next);
  return build_graph(next, es);
}

Graph u_two_branch(int li, int lj, const std::vector<int>& left,
                   const std::vector<int>& right) {
  if (li < 1 || lj < 1) throw error(errc::out_of_range, "u_two_branch: arcs >= 1");
  if (li + lj < 3)
    throw error(errc::not_simple, "u_two_branch: cycle of length " + std::to_string(li + lj));
  if (left.empty() || right.empty())
    throw error(errc::out_of_range, "u_two_branch: both branch vertices need pendants");
  for (int l : left)
    if (l < 1) throw error(errc::out_of_range, "u_two_branch: lengths >= 1");
  for (int l : right)
    if (l < 1) throw error(errc::out_of_range, "u_two_branch: lengths >= 1");
  int g = li + lj;
  std::vector<Edge> es;
  for (int i = 0; i < g; ++i) es.emplace_back(i, (i + 1) % g);
  int next = g;
  for (int l : left) grow_path(es, 0, l, next);
  for (int l : right) grow_path(es, li, l, next);
  return build_graph(next, es);
}

Graph u1n(int n) {
  if (n < 6) throw error(errc::out_of_range, "u1n: n >= 6");
  std::vector<Edge> es{{0, 1}, {1, 2}, {0, 2}};
  int next = 3;
  grow_path(es, 0, 1, next);
  grow_path(es, 1, 1, next);
  for (int i = 0; i < n - 5; ++i) grow_path(es, 2, 1, next);
  return build_graph(n, es);
}

Graph starlike(const std::vector<int>& lengths) {
  for (int l : lengths)
    if (l < 1) throw error(errc::out_of_range, "starlike: lengths >= 1");
  std::vector<Edge> es;
  int next = 1;
  for (int l : lengths) grow_path(es, 0, l, next);
  return build_graph(next, es);
}

Graph cycle_with_pendants(int girth,
                          const std::vector<std::pair<int, std::vector<int>>>& attachments) {
  if (girth < 3) throw error(errc::out_of_range, "cycle_with_pendants: girth >= 3");
  std::vector<Edge> es;
  for (int i = 0; i < girth; ++i) es.emplace_back(i, (i + 1) % girth);
  int next = girth;
  for (const auto& [pos, lengths] : attachments) {
    if (pos < 0 || pos >= girth)
      throw error(errc::out_of_range, "cycle_with_pendants: position " + std::to_string(pos));
    for (int l : lengths) {
      if (l < 1) throw error(errc::out_of_range, "cycle_with_pendants: lengths >= 1");
      grow_path(es, pos, l, next);
    }
  }
  return build_graph(next, es);
}

Graph slide(int n, int k, const Graph& g, int v) {
  if (n < 1 || k < 1 || k > n) throw error(errc::out_of_range, "slide: 1 <= k <= n");
  if (v < 0 || v >= g.n) throw error(errc::index_out_of_range, "slide: v");
  return merge_vertices(path(n), k - 1, g, v);
}

}  // namespace families
}  // namespace unicyclic
