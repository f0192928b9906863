// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Run directly or through ctest.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "unicyclic/closed_forms.hpp"
#include "unicyclic/enumerate.hpp"
#include "unicyclic/families.hpp"
#include "unicyclic/invariants.hpp"
#include "unicyclic/segments.hpp"
#include "unicyclic/verify.hpp"

using namespace unicyclic;

namespace {

struct Criterion {
  int number;
  const char* title;
  std::function<bool(std::vector<std::string>&)> run;
};

bool expect(std::vector<std::string>& notes, bool ok, const std::string& what) {
  if (!ok) notes.push_back("FAILED: " + what);
  return ok;
}

// 1. Lemma 2.1 closed forms for P_n, C_n, S_n: totals and per-k entries.
bool crit_closed_forms(std::vector<std::string>& notes) {
  bool ok = true;
  for (int n = 1; n <= 15; ++n) {
    SubtreeProfile p = subtree_profile(families::path(n));
    ok &= expect(notes, p.total() == closed_form::value("n_path", {n}),
                 "n(P_" + std::to_string(n) + ")");
    for (int k = 1; k <= n; ++k)
      ok &= expect(notes, p.counts[k] == n - k + 1, "n_k(P_n) at n=" + std::to_string(n));

    SubtreeProfile s = subtree_profile(families::star(n));
    ok &= expect(notes, s.total() == closed_form::value("n_star", {n}),
                 "n(S_" + std::to_string(n) + ")");
    for (int k = 2; k <= n; ++k)
      ok &= expect(notes, s.counts[k] == closed_form::binomial(n - 1, k - 1),
                   "n_k(S_n) at n=" + std::to_string(n));

    if (n >= 3) {
      SubtreeProfile c = subtree_profile(families::cycle(n));
      ok &= expect(notes, c.total() == closed_form::value("n_cycle", {n}),
                   "n(C_" + std::to_string(n) + ")");
      for (int k = 1; k <= n; ++k)
        ok &= expect(notes, c.counts[k] == n, "n_k(C_n) at n=" + std::to_string(n));
    }
  }
  return ok;
}

// 2. n(US_n) = 2^{n-1} + 2^{n-2} + n + 1 and n(US_4) = n(C_4) = 17.
bool crit_us_formula(std::vector<std::string>& notes) {
  bool ok = true;
  for (int n = 4; n <= 14; ++n)
    ok &= expect(notes, subtree_count(families::us(n)) == closed_form::value("n_us", {n}),
                 "n(US_" + std::to_string(n) + ")");
  ok &= expect(notes, subtree_count(families::us(4)) == 17, "n(US_4) = 17");
  ok &= expect(notes, subtree_count(families::cycle(4)) == 17, "n(C_4) = 17");
  return ok;
}

// 3. The two negative-correlation counterexamples, bit-exact.
bool crit_counterexamples(std::vector<std::string>& notes) {
  CounterexampleReport rep = reproduce_counterexamples();
  for (const auto& line : rep.lines) notes.push_back(line);
  return rep.holds;
}

// 4. Rooted and total anchor values used by the short-segment analysis.
bool crit_rooted_anchors(std::vector<std::string>& notes) {
  bool ok = true;
  Graph u21 = families::u_two_branch(2, 1, {1}, {1});
  ok &= expect(notes, subtree_count(u21) == 28, "n(U_{2,1}(1;1)) = 28");
  ok &= expect(notes, subtree_count(families::cycle(5)) == 26, "n(C_5) = 26");
  int v2 = -1;
  for (int v = 0; v < 3; ++v)
    if (u21.degree(v) == 2) v2 = v;
  ok &= expect(notes, rooted_subtree_count(u21, {{v2}, {}}) == 17, "n(v,U_{2,1}(1;1)) = 17");
  ok &= expect(notes, rooted_subtree_count(families::cycle(5), {{0}, {}}) == 15,
               "n(u,C_5) = 15");
  return ok;
}

// 5. n(UP_n) inline-formula discrepancy flagged; ordering chain re-confirmed
// from oracle values.
bool crit_up_formula(std::vector<std::string>& notes) {
  FormulaReport rep = up_formula_report();
  for (const auto& line : rep.findings) notes.push_back(line);
  bool at5 = subtree_count_oracle(families::up(5)).total() == 25 &&
             closed_form::value("n_up_inline", {5}) == 22;
  return rep.discrepancy_found && rep.chain_holds && at5;
}

// 6. DP = oracle for all three invariants: exhaustive n <= 8 plus 500 seeded
// random instances with n <= 12.
bool crit_oracle_equivalence(std::vector<std::string>& notes) {
  bool ok = true;
  long long graphs_checked = 0;
  for (int n = 3; n <= 8; ++n) {
    ClassFilter f;
    f.order = n;
    for (const Graph& g : unicyclic_graphs(f)) {
      ++graphs_checked;
      ok &= expect(notes, subtree_profile(g) == subtree_count_oracle(g),
                   "profile oracle mismatch at n=" + std::to_string(n));
      ok &= expect(notes, merrifield_simmons(g) == sigma_oracle(g),
                   "sigma oracle mismatch at n=" + std::to_string(n));
      ok &= expect(notes, hosoya(g) == hosoya_oracle(g),
                   "hosoya oracle mismatch at n=" + std::to_string(n));
    }
  }
  std::mt19937_64 rng(kDefaultSeed);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 4 + static_cast<int>(rng() % 9);  // 4..12
    Graph g = trial % 2 == 0 ? random_tree(n, rng) : random_unicyclic(n, rng);
    ++graphs_checked;
    ok &= expect(notes, subtree_profile(g) == subtree_count_oracle(g),
                 "profile oracle mismatch on random instance");
    ok &= expect(notes, merrifield_simmons(g) == sigma_oracle(g),
                 "sigma oracle mismatch on random instance");
    ok &= expect(notes, hosoya(g) == hosoya_oracle(g),
                 "hosoya oracle mismatch on random instance");
  }
  notes.push_back(std::to_string(graphs_checked) + " graphs checked against all three oracles");
  return ok;
}

// 7. T1 and the per-k girth bound T2, exhaustively for n <= 9.
bool crit_t1_t2(std::vector<std::string>& notes) {
  bool ok = true;
  for (int n = 3; n <= 9; ++n) {
    CheckParams p;
    p.n = n;
    Verdict v1 = check_theorem(TheoremId::T1_uni, p);
    ok &= expect(notes, v1.holds, "T1 at n=" + std::to_string(n));
    for (int l = 3; l <= n; ++l) {
      CheckParams pg;
      pg.n = n;
      pg.girth = l;
      Verdict v2 = check_theorem(TheoremId::T2_girth, pg);
      ok &= expect(notes, v2.holds,
                   "T2 at n=" + std::to_string(n) + " girth=" + std::to_string(l));
    }
  }
  notes.push_back("T1 for 3 <= n <= 9; T2 per-k for every girth");
  return ok;
}

// 8. T3 through T8 over every admissible instance at desk scale.
bool crit_segment_theorems(std::vector<std::string>& notes) {
  bool ok = true;
  int checked = 0;
  auto run = [&](TheoremId id, const CheckParams& p, const std::string& label) {
    Verdict v = check(id, p);
    ++checked;
    if (!v.holds) {
      ok = false;
      std::string line = std::string("FAILED: ") + to_string(id) + " " + label +
                         " (class " + std::to_string(v.class_size) + ")";
      if (v.counterexample)
        line += ": expected " + v.counterexample->expected + "; actual " +
                v.counterexample->actual;
      notes.push_back(line);
    }
  };
  auto seq_str = [](const std::vector<int>& L) {
    std::string s = "(";
    for (size_t i = 0; i < L.size(); ++i) s += (i ? "," : "") + std::to_string(L[i]);
    return s + ")";
  };

  for (int total = 3; total <= 9; ++total) {
    for (int m = 1; m <= total; ++m) {
      for (const auto& L : test_helpers::partitions(total, m)) {
        CheckParams p;
        p.segments = L;
        if (L[0] >= 3) {
          run(TheoremId::T3_subtree_segseq, p, seq_str(L));
          run(TheoremId::T6_sigma_segseq, p, seq_str(L));
        } else if (L[0] == 2 && m >= 4) {
          run(TheoremId::T4_short_subtree, p, seq_str(L));
          run(TheoremId::T7_short_sigma, p, seq_str(L));
        } else if (L[0] == 1 && m >= 6) {
          run(TheoremId::T4_short_subtree, p, seq_str(L));
          run(TheoremId::T7_short_sigma, p, seq_str(L));
        }
      }
    }
  }

  int skipped = 0;
  for (int n = 3; n <= 9; ++n) {
    for (int m = 1; m <= n; ++m) {
      CheckParams p;
      p.n = n;
      p.m = m;
      run(TheoremId::T5_segnum_subtree, p, "(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")");
      try {
        run(TheoremId::T8_segnum_sigma, p, "(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")");
      } catch (const error&) {
        ++skipped;  // T8(ii)/(iii) claimed construction undefined for m < 4
      }
    }
  }
  notes.push_back(std::to_string(checked) + " theorem instances checked, " +
                  std::to_string(skipped) + " T8 instances inadmissible (m < 4 construction)");
  if (!ok)
    notes.push_back("T8 fails as stated for n-m-2 >= 2 (case i, m >= 3) and for case (ii): "
                    "sigma(U_1(n-m+1,1,..,1)) exceeds the claimed construction");
  FormulaReport inline_rep = short_segment_formula_report();
  for (const auto& line : inline_rep.findings) notes.push_back(line);
  ok &= inline_rep.chain_holds;  // the comparison inequalities gate, not the inline counts
  return ok;
}

// 9. sigma(U_2(6,4)) = 131 > 129 = sigma(U_1(6,4)), oracle-confirmed.
bool crit_sigma_anchor(std::vector<std::string>& notes) {
  Graph u2 = families::u_cycle_seg({6, 4}, 2);
  Graph u1 = families::u_cycle_seg({6, 4}, 1);
  bool ok = true;
  ok &= expect(notes, merrifield_simmons(u2) == 131, "sigma(U_2(6,4)) = 131");
  ok &= expect(notes, merrifield_simmons(u1) == 129, "sigma(U_1(6,4)) = 129");
  ok &= expect(notes, sigma_oracle(u2) == 131, "sigma_oracle(U_2(6,4)) = 131");
  ok &= expect(notes, sigma_oracle(u1) == 129, "sigma_oracle(U_1(6,4)) = 129");
  return ok;
}

// 10. All lemma property suites.
bool crit_lemmas(std::vector<std::string>& notes) {
  bool ok = true;
  const std::vector<TheoremId> suite = {
      TheoremId::L2_3, TheoremId::L3_1, TheoremId::L3_2, TheoremId::L3_3,
      TheoremId::merge_identity, TheoremId::L3_5, TheoremId::L3_6, TheoremId::L3_7,
      TheoremId::R3_8, TheoremId::L4_1, TheoremId::L4_2, TheoremId::L4_3,
      TheoremId::L4_4, TheoremId::L4_5, TheoremId::L4_6};
  CheckParams p;
  for (TheoremId id : suite) {
    Verdict v = check_lemma(id, p);
    std::string line = std::string(to_string(id)) + ": " +
                       std::to_string(v.class_size) + " instances";
    if (!v.holds && v.counterexample)
      line += " FAILED: expected " + v.counterexample->expected + "; actual " +
              v.counterexample->actual;
    notes.push_back(line);
    ok &= v.holds;
  }
  // Fibonacci identity across the full stated range.
  auto path0 = [](int n) { return n == 0 ? build_graph(0, {}) : families::path(n); };
  for (int i = 0; i <= 15 && ok; ++i)
    for (int j = 0; j <= 15 && ok; ++j) {
      BigInt product = closed_form::fibonacci(i + 2) * closed_form::fibonacci(j + 2);
      ok &= expect(notes,
                   merrifield_simmons(disjoint_union(path0(i), path0(j))) == product &&
                       hosoya(disjoint_union(path0(i + 1), path0(j + 1))) == product,
                   "Fibonacci identity at i=" + std::to_string(i) + " j=" + std::to_string(j));
    }
  if (ok) notes.push_back("sigma(P_i u P_j) = F_{i+2}F_{j+2} = Z(P_{i+1} u P_{j+1}) for i,j <= 15");
  return ok;
}

// 11. Enumeration completeness and deterministic reports across worker counts.
bool crit_enumeration(std::vector<std::string>& notes) {
  bool ok = true;
  ClassFilter f3;
  f3.order = 3;
  ok &= expect(notes, class_count(f3) == 1, "one unicyclic class at n=3");
  ClassFilter f4;
  f4.order = 4;
  ok &= expect(notes, class_count(f4) == 2, "two unicyclic classes at n=4");

  for (int n = 3; n <= 7; ++n) {
    ClassFilter f;
    f.order = n;
    std::set<CanonicalKey> mine;
    for (const Graph& g : unicyclic_graphs(f)) mine.insert(canonical_key(g));
    ok &= expect(notes, mine == test_helpers::brute_force_unicyclic(n),
                 "generation completeness at n=" + std::to_string(n));
  }
  notes.push_back("generation matches the labeled brute-force generator for n <= 7");

  // byte-identical verification reports at worker counts 1 and 4
  for (auto [id, make] : std::vector<std::pair<TheoremId, std::function<CheckParams()>>>{
           {TheoremId::T1_uni,
            [] {
              CheckParams p;
              p.n = 9;
              return p;
            }},
           {TheoremId::T6_sigma_segseq,
            [] {
              CheckParams p;
              p.segments = std::vector<int>{4, 4, 1};
              return p;
            }}}) {
    CheckParams p1 = make();
    p1.workers = 1;
    CheckParams p4 = make();
    p4.workers = 4;
    Verdict v1 = check_theorem(id, p1);
    Verdict v4 = check_theorem(id, p4);
    ok &= expect(notes,
                 verdict_json(id, p1, v1) == verdict_json(id, p1, v4),
                 std::string("worker-count independence for ") + to_string(id));
  }
  notes.push_back("reports byte-identical at worker counts 1 and 4");
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "closed-form agreement for P_n, C_n, S_n (n <= 15)", crit_closed_forms},
      {2, "n(US_n) formula for 4 <= n <= 14 and n(US_4) = n(C_4) = 17", crit_us_formula},
      {3, "counterexample reproduction (Wiener 118/120, Hosoya 114/115)", crit_counterexamples},
      {4, "inline anchors n(U_{2,1}(1;1)) = 28, n(C_5) = 26, rooted 17/15", crit_rooted_anchors},
      {5, "n(UP_n) formula discrepancy flagged; oracle chain confirmed", crit_up_formula},
      {6, "oracle equivalence (exhaustive n <= 8, 500 random n <= 12)", crit_oracle_equivalence},
      {7, "T1 extrema and T2 per-k girth bounds for n <= 9", crit_t1_t2},
      {8, "T3-T8 over all admissible instances at desk scale", crit_segment_theorems},
      {9, "sigma anchor 131 vs 129 on U(6,4), oracle-confirmed", crit_sigma_anchor},
      {10, "lemma property suites", crit_lemmas},
      {11, "enumeration completeness and deterministic reports", crit_enumeration},
  };

  int failures = 0;
  for (auto& criterion : criteria) {
    std::vector<std::string> notes;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = criterion.run(notes);
    } catch (const std::exception& e) {
      notes.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %2d. %s (%.2fs)\n", ok ? "PASS" : "FAIL", criterion.number,
                criterion.title, secs);
    for (const auto& note : notes) std::printf("        %s\n", note.c_str());
    if (!ok) ++failures;
  }
  if (failures)
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  else
    std::printf("all %zu criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
