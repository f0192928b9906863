#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "unicyclic/graph.hpp"

namespace unicyclic {

// Counts grow like 2^n; everything stays exact.
using BigInt = boost::multiprecision::cpp_int;

// counts[k] = number of k-vertex subtrees; counts[0] = 1 (the empty subtree).
struct SubtreeProfile {
  std::vector<BigInt> counts;

  BigInt total() const;
  bool operator==(const SubtreeProfile&) const = default;
};

// Anchors for rooted counts: every counted subtree must contain all of them.
struct Anchors {
  std::vector<int> vertices;
  std::vector<Edge> edges;

  bool empty() const { return vertices.empty() && edges.empty(); }
};

// Exact n_k for trees (rooted DP over subtree-size polynomials) and unicyclic
// graphs (tree part plus cycle-arc decomposition). Other connected graphs are
// routed to the enumeration oracle.
SubtreeProfile subtree_profile(const Graph& g);
SubtreeProfile rooted_subtree_profile(const Graph& g, const Anchors& anchors);
BigInt subtree_count(const Graph& g);
BigInt rooted_subtree_count(const Graph& g, const Anchors& anchors);

// Definition-level oracles: enumerate every edge subset / vertex subset and
// test it. Independent of the DP code paths above.
SubtreeProfile subtree_count_oracle(const Graph& g);                      // |E| <= 22
SubtreeProfile rooted_subtree_oracle(const Graph& g, const Anchors& a);   // |E| <= 22
BigInt sigma_oracle(const Graph& g);                                      // |V| <= 22
BigInt hosoya_oracle(const Graph& g);                                     // |E| <= 22

BigInt wiener(const Graph& g);

// sigma(G) = sigma(G-v) + sigma(G-[v]) on a maximum-degree vertex;
// Z(G) = Z(G-e) + Z(G-u-v) on the first edge. Both split into components and
// memoize per invocation on canonical keys of small components.
BigInt merrifield_simmons(const Graph& g);
BigInt hosoya(const Graph& g);

struct InvariantBundle {
  BigInt subtree_total;
  BigInt wiener;
  BigInt merrifield_simmons;
  BigInt hosoya;
};

InvariantBundle invariant_bundle(const Graph& g);

}  // namespace unicyclic
