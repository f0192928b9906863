#pragma once

#include <compare>
#include <string>

#include "unicyclic/graph.hpp"

namespace unicyclic {

// Isomorphism-class identifier: vertex count followed by the packed
// upper-triangle adjacency bits of the minimal labeling.
struct CanonicalKey {
  std::string bytes;

  auto operator<=>(const CanonicalKey&) const = default;
  std::string hex() const;
};

// Largest vertex count canonical_key accepts. Brute-force search with
// partition refinement stays fast for trees/unicyclic graphs at this size.
inline constexpr int kCanonicalMaxVertices = 16;

CanonicalKey canonical_key(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace unicyclic
