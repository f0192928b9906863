#pragma once

#include <numeric>
#include <vector>

#include "unicyclic/graph.hpp"

namespace unicyclic {

// Non-increasing sequence of segment lengths. A segment is a maximal path
// whose endpoints have degree 1 or >= 3 and whose internal vertices have
// degree 2; the cycle through a single branch vertex is one closed segment,
// and a pure cycle C_n counts as the single segment (n).
struct SegmentSequence {
  std::vector<int> lengths;

  int count() const { return static_cast<int>(lengths.size()); }
  int sum() const { return std::accumulate(lengths.begin(), lengths.end(), 0); }
  bool operator==(const SegmentSequence&) const = default;
};

SegmentSequence make_segment_sequence(std::vector<int> lengths);
SegmentSequence segment_sequence(const Graph& g);

}  // namespace unicyclic
