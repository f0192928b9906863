#pragma once

#include <optional>
#include <vector>

#include "unicyclic/graph.hpp"
#include "unicyclic/segments.hpp"

namespace unicyclic {

inline constexpr int kMaxTreeOrder = 12;
inline constexpr int kMaxUnicyclicOrder = 11;

// Selects an isomorphism class family such as U(l_1..l_m) or U_{n,m}.
// At most one of segment_sequence / segment_count may be set.
struct ClassFilter {
  int order = 0;
  std::optional<int> girth;
  std::optional<SegmentSequence> segment_sequence;
  std::optional<int> segment_count;

  void validate() const;
  bool matches(const Graph& g) const;  // g must be unicyclic
};

// One representative per isomorphism class, ascending canonical key.
std::vector<Graph> trees(int n);
std::vector<Graph> unicyclic_graphs(const ClassFilter& filter);
long long class_count(const ClassFilter& filter);

}  // namespace unicyclic
