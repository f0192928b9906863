#pragma once

// Independent generators shared by the enumeration tests and the acceptance
// suite. Both are definition-level and deliberately avoid the library's own
// tree/unicyclic generation path.

#include <functional>
#include <set>

#include "unicyclic/canonical.hpp"
#include "unicyclic/graph.hpp"

namespace test_helpers {

// All labeled graphs with n vertices and n edges that are connected,
// deduplicated by canonical key.
inline std::set<unicyclic::CanonicalKey> brute_force_unicyclic(int n) {
  using namespace unicyclic;
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::set<CanonicalKey> keys;
  std::vector<Edge> cur;
  std::function<void(size_t, int)> rec = [&](size_t from, int left) {
    if (left == 0) {
      Graph g = build_graph(n, cur);
      if (is_unicyclic(g)) keys.insert(canonical_key(g));
      return;
    }
    if (pairs.size() - from < static_cast<size_t>(left)) return;
    for (size_t i = from; i < pairs.size(); ++i) {
      cur.push_back(pairs[i]);
      rec(i + 1, left - 1);
      cur.pop_back();
    }
  };
  rec(0, n);
  return keys;
}

// All labeled trees on n vertices via the bijective sequence encoding,
// deduplicated by canonical key.
inline std::set<unicyclic::CanonicalKey> prufer_trees(int n) {
  using namespace unicyclic;
  std::set<CanonicalKey> keys;
  if (n <= 2) {
    keys.insert(canonical_key(n == 1 ? build_graph(1, {}) : build_graph(2, {{0, 1}})));
    return keys;
  }
  std::vector<int> seq(n - 2, 0);
  for (;;) {
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) leaves.insert(v);
    std::vector<Edge> es;
    for (int x : seq) {
      int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      es.emplace_back(std::min(leaf, x), std::max(leaf, x));
      if (--degree[x] == 1) leaves.insert(x);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    es.emplace_back(std::min(a, b), std::max(a, b));
    keys.insert(canonical_key(build_graph(n, es)));
    int pos = n - 3;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  return keys;
}

// Non-increasing positive sequences of length m summing to total.
inline std::vector<std::vector<int>> partitions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int, int)> rec = [&](int remaining, int left, int max_part) {
    if (left == 0) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int first = std::min(remaining - left + 1, max_part); first >= 1; --first) {
      cur.push_back(first);
      rec(remaining - first, left - 1, first);
      cur.pop_back();
    }
  };
  rec(total, parts, total);
  return out;
}

}  // namespace test_helpers
