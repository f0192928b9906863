#pragma once

#include <vector>

#include "unicyclic/graph.hpp"
#include "unicyclic/segments.hpp"

namespace unicyclic {
namespace families {

Graph path(int n);   // n >= 1 vertices
Graph cycle(int n);  // n >= 3
Graph star(int n);   // n >= 1, center 0

// US_n^l: n-l pendant vertices on one vertex of C_l.
// UP_n^l: pendant path of length n-l on one vertex of C_l. Girth defaults to 3.
Graph us(int n, int girth = 3);
Graph up(int n, int girth = 3);

// U_i(l_1..l_m): cycle C_{l_i}, all other segments attached as a starlike
// tree at cycle vertex 0. cycle_index is 1-based.
Graph u_cycle_seg(const std::vector<int>& lengths, int cycle_index);

// U_{li,lj}(left; right): cycle C_{li+lj} with branch vertices at positions 0
// and li; pendant paths `left` at 0 and `right` at li. Both lists nonempty so
// the two branch vertices really branch.
Graph u_two_branch(int li, int lj, const std::vector<int>& left,
                   const std::vector<int>& right);

// U^1_n: C_3 with a pendant vertex on two cycle vertices and n-5 on the third.
Graph u1n(int n);

// Starlike tree: pendant paths of the given lengths at a common center 0.
Graph starlike(const std::vector<int>& lengths);

// C_girth(l...) with explicit attachment positions: position -> path lengths.
Graph cycle_with_pendants(int girth,
                          const std::vector<std::pair<int, std::vector<int>>>& attachments);

// P(n, k, G, v): merge vertex v of g with the k-th vertex (1-based) of P_n.
Graph slide(int n, int k, const Graph& g, int v);

}  // namespace families
}  // namespace unicyclic
