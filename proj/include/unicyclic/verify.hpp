#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "unicyclic/canonical.hpp"
#include "unicyclic/enumerate.hpp"
#include "unicyclic/invariants.hpp"

namespace unicyclic {

// Theorem checkers sweep an exhaustively enumerated class; lemma checkers run
// property suites over deterministic instance sets.
enum class TheoremId {
  T1_uni,
  T2_girth,
  T3_subtree_segseq,
  T4_short_subtree,
  T5_segnum_subtree,
  T6_sigma_segseq,
  T7_short_sigma,
  T8_segnum_sigma,
  L2_3,
  L3_1,
  L3_2,
  L3_3,
  merge_identity,
  L3_5,
  L3_6,
  L3_7,
  R3_8,
  L4_1,
  L4_2,
  L4_3,
  L4_4,
  L4_5,
  L4_6,
};

const char* to_string(TheoremId id);
std::optional<TheoremId> theorem_id_from(const std::string& name);
bool is_lemma(TheoremId id);

inline constexpr std::uint64_t kDefaultSeed = 20250811;

struct CheckParams {
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> girth;
  std::optional<std::vector<int>> segments;  // non-increasing
  std::uint64_t seed = kDefaultSeed;
  int workers = 1;
};

struct Counterexample {
  Graph graph;
  std::string expected;
  std::string actual;
};

struct Verdict {
  bool holds = false;
  long long class_size = 0;  // class members, or lemma instances checked
  BigInt extremal_value = 0;
  CanonicalKey claimed_graph_key;
  std::vector<CanonicalKey> achieved_by;
  std::optional<Counterexample> counterexample;
  std::vector<std::string> findings;
};

Verdict check_theorem(TheoremId id, const CheckParams& params);
Verdict check_lemma(TheoremId id, const CheckParams& params);
Verdict check(TheoremId id, const CheckParams& params);

// The two negative-correlation counterexamples, reproduced exactly:
// W(U_{4,4}(1;1)) = 118 < 120 = W(U_1(4,4,1,1)) although U_1 maximizes n(G),
// and Z(U_1(6,4)) = 114 < 115 = Z(U_2(6,4)) although U_2 maximizes sigma.
struct CounterexampleReport {
  bool holds = false;
  std::vector<std::string> lines;
};
CounterexampleReport reproduce_counterexamples();

// The inline closed form n(UP_n) = (n^2+7n-16)/2 disagrees with enumeration;
// reports the discrepancy and re-confirms n(UP_n) <= n(C_n) <= n(US_n) from
// oracle values alone.
struct FormulaReport {
  bool discrepancy_found = false;
  bool chain_holds = false;
  std::vector<std::string> findings;
};
FormulaReport up_formula_report();

// Inline counts from the short-segment proofs, each checked against the
// engine: n(U_{2,2}(l,1)), n(U_{2,1}(l,2)), their rooted versions 16(l+1)
// and 14(l+1), and the girth-4 all-ones count 12*2^(n-5)+2^(n-7)+n+19.
// Mismatches become findings; the inequalities they support are the gate.
FormulaReport short_segment_formula_report();

// Instance pool for lemma suites: every connected graph on <= 5 vertices plus
// 50 seeded random trees on <= 8 vertices.
std::vector<Graph> lemma_corpus(std::uint64_t seed);
Graph random_tree(int n, std::mt19937_64& rng);
Graph random_unicyclic(int n, std::mt19937_64& rng);

std::string verdict_json(TheoremId id, const CheckParams& params, const Verdict& verdict);

}  // namespace unicyclic
