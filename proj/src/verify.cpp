#include "unicyclic/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "unicyclic/closed_forms.hpp"
#include "unicyclic/families.hpp"

namespace unicyclic {

namespace {

struct IdName {
  TheoremId id;
  const char* name;
};

constexpr IdName kIdNames[] = {
    {TheoremId::T1_uni, "T1"},
    {TheoremId::T2_girth, "T2"},
    {TheoremId::T3_subtree_segseq, "T3"},
    {TheoremId::T4_short_subtree, "T4"},
    {TheoremId::T5_segnum_subtree, "T5"},
    {TheoremId::T6_sigma_segseq, "T6"},
    {TheoremId::T7_short_sigma, "T7"},
    {TheoremId::T8_segnum_sigma, "T8"},
    {TheoremId::L2_3, "L2_3"},
    {TheoremId::L3_1, "L3_1"},
    {TheoremId::L3_2, "L3_2"},
    {TheoremId::L3_3, "L3_3"},
    {TheoremId::merge_identity, "merge_identity"},
    {TheoremId::L3_5, "L3_5"},
    {TheoremId::L3_6, "L3_6"},
    {TheoremId::L3_7, "L3_7"},
    {TheoremId::R3_8, "R3_8"},
    {TheoremId::L4_1, "L4_1"},
    {TheoremId::L4_2, "L4_2"},
    {TheoremId::L4_3, "L4_3"},
    {TheoremId::L4_4, "L4_4"},
    {TheoremId::L4_5, "L4_5"},
    {TheoremId::L4_6, "L4_6"},
};

std::string big_str(const BigInt& v) { return v.str(); }

std::vector<int> ones(int k) { return std::vector<int>(k, 1); }

// Non-increasing positive integer sequences of length m summing to total.
void partitions_rec(int remaining, int parts, int max_part,
                    std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int first = std::min(remaining - parts + 1, max_part); first >= 1; --first) {
    cur.push_back(first);
    partitions_rec(remaining - first, parts - 1, first, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(total, parts, total, cur, out);
  return out;
}

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

std::string seq_str(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::vector<Graph> dedupe_by_key(const std::vector<Graph>& graphs) {
  std::map<CanonicalKey, Graph> classes;
  for (const Graph& g : graphs) classes.emplace(canonical_key(g), g);
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [key, g] : classes) out.push_back(std::move(g));
  return out;
}

std::vector<BigInt> evaluate_all(const std::vector<Graph>& graphs,
                                 const std::function<BigInt(const Graph&)>& value,
                                 int workers) {
  std::vector<BigInt> vals(graphs.size());
  if (workers <= 1 || graphs.size() < 2) {
    for (size_t i = 0; i < graphs.size(); ++i) vals[i] = value(graphs[i]);
    return vals;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  int count = std::min<int>(workers, static_cast<int>(graphs.size()));
  pool.reserve(count);
  for (int w = 0; w < count; ++w)
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= graphs.size()) break;
        vals[i] = value(graphs[i]);
      }
    });
  for (auto& t : pool) t.join();
  return vals;
}

// Shared sweep for the extremal theorems: evaluate the class, locate the
// extremum, and compare against the claimed construction (ties allowed; the
// claim only needs to attain the extremum).
Verdict extremal_verdict(const std::vector<Graph>& members,
                         const std::function<BigInt(const Graph&)>& value,
                         bool maximize, const std::optional<Graph>& claimed, int workers) {
  Verdict v;
  v.class_size = static_cast<long long>(members.size());
  if (claimed) v.claimed_graph_key = canonical_key(*claimed);
  if (members.empty()) {
    v.holds = true;
    v.findings.push_back("class is empty; claim is vacuous");
    return v;
  }
  std::vector<BigInt> vals = evaluate_all(members, value, workers);
  BigInt best = vals[0];
  for (const auto& x : vals)
    if (maximize ? x > best : x < best) best = x;
  v.extremal_value = best;
  std::vector<size_t> arg;
  for (size_t i = 0; i < vals.size(); ++i)
    if (vals[i] == best) arg.push_back(i);
  for (size_t i : arg) v.achieved_by.push_back(canonical_key(members[i]));
  if (!claimed) {
    v.holds = true;
    return v;
  }
  BigInt claimed_value = value(*claimed);
  bool attained =
      claimed_value == best && std::find(v.achieved_by.begin(), v.achieved_by.end(),
                                         v.claimed_graph_key) != v.achieved_by.end();
  v.holds = attained;
  if (!attained) {
    v.counterexample =
        Counterexample{members[arg[0]],
                       "claimed construction extremal with value " + big_str(claimed_value),
                       "class extremum is " + big_str(best)};
  }
  if (v.achieved_by.size() > 1)
    v.findings.push_back("extremum shared by " + std::to_string(v.achieved_by.size()) +
                         " isomorphism classes");
  return v;
}

std::vector<Graph> class_members(int order, std::optional<SegmentSequence> seq,
                                 std::optional<int> segment_count,
                                 std::optional<int> girth = std::nullopt) {
  ClassFilter filter;
  filter.order = order;
  filter.girth = girth;
  filter.segment_sequence = std::move(seq);
  filter.segment_count = segment_count;
  return unicyclic_graphs(filter);
}

int require_n(const CheckParams& p) {
  if (!p.n) throw error(errc::hypothesis_violated, "parameter n required");
  return *p.n;
}

std::vector<int> require_segments(const CheckParams& p) {
  if (!p.segments || p.segments->empty())
    throw error(errc::hypothesis_violated, "parameter segments required");
  return sorted_desc(*p.segments);
}

BigInt subtree_value(const Graph& g) { return subtree_count(g); }
BigInt sigma_value(const Graph& g) { return merrifield_simmons(g); }

// ---------------------------------------------------------------------------
// Theorems
// ---------------------------------------------------------------------------

Verdict check_t1(const CheckParams& p) {
  int n = require_n(p);
  if (n < 3) throw error(errc::hypothesis_violated, "T1 needs n >= 3");
  auto members = class_members(n, std::nullopt, std::nullopt);
  Verdict vmax =
      extremal_verdict(members, subtree_value, true, families::us(n), p.workers);
  Verdict vmin =
      extremal_verdict(members, subtree_value, false, families::up(n), p.workers);
  Verdict v = vmax;
  v.holds = vmax.holds && vmin.holds;
  v.findings.push_back("minimum n(G) = " + big_str(vmin.extremal_value) +
                       ", attained by UP_n: " + (vmin.holds ? "yes" : "NO"));
  if (!vmin.holds && !v.counterexample) v.counterexample = vmin.counterexample;
  return v;
}

Verdict check_t2(const CheckParams& p) {
  int n = require_n(p);
  if (!p.girth) throw error(errc::hypothesis_violated, "T2 needs girth");
  int l = *p.girth;
  if (!(n >= l && l >= 3)) throw error(errc::hypothesis_violated, "T2 needs n >= girth >= 3");
  auto members = class_members(n, std::nullopt, std::nullopt, l);
  SubtreeProfile hi = subtree_profile(families::us(n, l));
  SubtreeProfile lo = subtree_profile(families::up(n, l));
  Verdict v;
  v.class_size = static_cast<long long>(members.size());
  v.extremal_value = hi.total();
  v.claimed_graph_key = canonical_key(families::us(n, l));
  v.holds = true;
  std::vector<BigInt> totals(members.size());
  for (size_t i = 0; i < members.size(); ++i) {
    SubtreeProfile prof = subtree_profile(members[i]);
    totals[i] = prof.total();
    for (int k = 0; k <= n && v.holds; ++k) {
      if (prof.counts[k] > hi.counts[k]) {
        v.holds = false;
        v.counterexample = Counterexample{
            members[i], "n_" + std::to_string(k) + " <= " + big_str(hi.counts[k]),
            big_str(prof.counts[k])};
      } else if (prof.counts[k] < lo.counts[k]) {
        v.holds = false;
        v.counterexample = Counterexample{
            members[i], "n_" + std::to_string(k) + " >= " + big_str(lo.counts[k]),
            big_str(prof.counts[k])};
      }
    }
    if (!v.holds) break;
  }
  if (v.holds) {
    BigInt best = v.extremal_value;
    for (size_t i = 0; i < members.size(); ++i)
      if (totals[i] == best) v.achieved_by.push_back(canonical_key(members[i]));
    v.findings.push_back("per-k dominance n_k(US) >= n_k(G) >= n_k(UP) verified for all " +
                         std::to_string(members.size()) + " classes");
    v.findings.push_back("minimum n(G) = " + big_str(lo.total()) + " (UP_n^l)");
  }
  return v;
}

Verdict check_t3(const CheckParams& p) {
  std::vector<int> L = require_segments(p);
  if (L[0] < 3) throw error(errc::hypothesis_violated, "T3 needs l_1 >= 3");
  int order = std::accumulate(L.begin(), L.end(), 0);
  auto members = class_members(order, make_segment_sequence(L), std::nullopt);
  return extremal_verdict(members, subtree_value, true, families::u_cycle_seg(L, 1),
                          p.workers);
}

Verdict check_t4(const CheckParams& p) {
  std::vector<int> L = require_segments(p);
  int m = static_cast<int>(L.size());
  int order = std::accumulate(L.begin(), L.end(), 0);
  std::optional<Graph> claimed;
  if (L[0] == 2) {
    if (m < 4) throw error(errc::hypothesis_violated, "T4(i) needs m >= 4");
    std::vector<int> left(L.begin() + 2, L.end() - 1);
    claimed = families::u_two_branch(L[0], L[1], left, {L[m - 1]});
  } else if (L[0] == 1) {
    if (m < 6) throw error(errc::hypothesis_violated, "T4(ii) needs m >= 6");
    claimed = families::u1n(m);
  } else {
    throw error(errc::hypothesis_violated, "T4 needs l_1 <= 2");
  }
  auto members = class_members(order, make_segment_sequence(L), std::nullopt);
  return extremal_verdict(members, subtree_value, true, claimed, p.workers);
}

Verdict check_t5(const CheckParams& p) {
  int n = require_n(p);
  if (!p.m) throw error(errc::hypothesis_violated, "T5 needs m");
  int m = *p.m;
  if (n < 3 || m < 1 || n < m) throw error(errc::hypothesis_violated, "T5 needs n >= 3, n >= m >= 1");
  auto members = class_members(n, std::nullopt, m);

  if (n >= m + 2) {
    // Claimed: U_1 of a balanced sequence (2 l_i + 1 <= l_1 <= 2 l_i + 3).
    std::vector<std::vector<int>> balanced;
    for (auto& L : partitions(n, m)) {
      if (L[0] < 3) continue;
      bool ok = true;
      for (size_t i = 1; i < L.size(); ++i)
        ok = ok && 2 * L[i] + 1 <= L[0] && L[0] <= 2 * L[i] + 3;
      if (ok) balanced.push_back(L);
    }
    Verdict v;
    v.class_size = static_cast<long long>(members.size());
    if (balanced.empty()) {
      v.holds = false;
      v.findings.push_back("no balanced sequence exists for this (n, m)");
      return v;
    }
    std::vector<Graph> cands;
    cands.reserve(balanced.size());
    for (auto& L : balanced) cands.push_back(families::u_cycle_seg(L, 1));
    std::vector<BigInt> cand_vals = evaluate_all(cands, subtree_value, 1);
    BigInt best_cand = *std::max_element(cand_vals.begin(), cand_vals.end());
    if (members.empty()) {
      v.holds = true;
      v.findings.push_back("class is empty; claim is vacuous");
      return v;
    }
    std::vector<BigInt> vals = evaluate_all(members, subtree_value, p.workers);
    BigInt best = *std::max_element(vals.begin(), vals.end());
    v.extremal_value = best;
    for (size_t i = 0; i < vals.size(); ++i)
      if (vals[i] == best) v.achieved_by.push_back(canonical_key(members[i]));
    bool attained = false;
    for (size_t c = 0; c < cands.size(); ++c) {
      bool hits = cand_vals[c] == best &&
                  std::find(v.achieved_by.begin(), v.achieved_by.end(),
                            canonical_key(cands[c])) != v.achieved_by.end();
      v.findings.push_back("balanced sequence " + seq_str(balanced[c]) + ": n(U_1) = " +
                           big_str(cand_vals[c]) + (hits ? " (attains maximum)" : ""));
      if (hits && !attained) {
        attained = true;
        v.claimed_graph_key = canonical_key(cands[c]);
      }
    }
    v.holds = attained && best_cand == best;
    if (!v.holds)
      v.counterexample = Counterexample{
          members[static_cast<size_t>(
              std::max_element(vals.begin(), vals.end()) - vals.begin())],
          "maximum attained by a balanced U_1 construction, value " + big_str(best_cand),
          "class maximum is " + big_str(best)};
    return v;
  }
  if (n == m + 1) {
    std::optional<Graph> claimed;
    if (m >= 4) claimed = families::u_two_branch(2, 1, ones(m - 3), {1});
    Verdict v = extremal_verdict(members, subtree_value, true, claimed, p.workers);
    if (!claimed && !members.empty()) {
      v.holds = false;
      v.findings.push_back("claimed construction U_{2,1}(1,..,1;1) undefined for m < 4");
    }
    return v;
  }
  // n == m
  std::optional<Graph> claimed;
  if (n >= 6) claimed = families::u1n(n);
  Verdict v = extremal_verdict(members, subtree_value, true, claimed, p.workers);
  if (!claimed && !members.empty()) {
    v.holds = false;
    v.findings.push_back("claimed construction U^1_n undefined for n < 6");
  }
  return v;
}

Verdict check_t6(const CheckParams& p) {
  std::vector<int> L = require_segments(p);
  if (L[0] < 3) throw error(errc::hypothesis_violated, "T6 needs l_1 >= 3");
  int order = std::accumulate(L.begin(), L.end(), 0);
  // i_0: position of the smallest even entry >= 3 if one exists, else 1.
  int i0 = 1;
  int smallest_even = 0;
  for (size_t i = 0; i < L.size(); ++i)
    if (L[i] >= 3 && L[i] % 2 == 0 && (smallest_even == 0 || L[i] < smallest_even)) {
      smallest_even = L[i];
      i0 = static_cast<int>(i) + 1;
    }
  // ties: any position with the same value gives an isomorphic U_i; use the
  // first occurrence of the chosen value.
  if (smallest_even != 0)
    i0 = static_cast<int>(std::find(L.begin(), L.end(), smallest_even) - L.begin()) + 1;
  auto members = class_members(order, make_segment_sequence(L), std::nullopt);
  Verdict v = extremal_verdict(members, sigma_value, true, families::u_cycle_seg(L, i0),
                               p.workers);
  v.findings.push_back(smallest_even != 0
                           ? "even case: cycle segment is l_" + std::to_string(i0) + " = " +
                                 std::to_string(smallest_even)
                           : "odd case: cycle segment is l_1");
  return v;
}

Verdict check_t7(const CheckParams& p) {
  std::vector<int> L = require_segments(p);
  int m = static_cast<int>(L.size());
  int order = std::accumulate(L.begin(), L.end(), 0);
  std::optional<Graph> claimed;
  if (L[0] == 2) {
    if (m < 4) throw error(errc::hypothesis_violated, "T7(i) needs m >= 4");
    std::vector<int> left(L.begin() + 3, L.end());  // l_4..l_m; l_3 goes alone
    claimed = families::u_two_branch(L[0], L[1], left, {L[2]});
  } else if (L[0] == 1) {
    if (m < 6) throw error(errc::hypothesis_violated, "T7(ii) needs m >= 6");
    claimed = families::u1n(m);
  } else {
    throw error(errc::hypothesis_violated, "T7 needs l_1 <= 2");
  }
  auto members = class_members(order, make_segment_sequence(L), std::nullopt);
  return extremal_verdict(members, sigma_value, true, claimed, p.workers);
}

Verdict check_t8(const CheckParams& p) {
  int n = require_n(p);
  if (!p.m) throw error(errc::hypothesis_violated, "T8 needs m");
  int m = *p.m;
  if (n < 3 || m < 1 || n < m) throw error(errc::hypothesis_violated, "T8 needs n >= 3, n >= m >= 1");
  auto members = class_members(n, std::nullopt, m);

  if (n >= m + 3) {
    if (m == 1) {
      Verdict v = extremal_verdict(members, sigma_value, true, std::nullopt, p.workers);
      v.findings.push_back(
          "claimed sequence (n-m-2, 4, 1, ..) needs m >= 2; the class is {C_n} only");
      return v;
    }
    std::vector<int> seq{n - m - 2, 4};
    for (int i = 0; i < m - 2; ++i) seq.push_back(1);
    Verdict v = extremal_verdict(members, sigma_value, true,
                                 families::u_cycle_seg(seq, 2), p.workers);
    v.findings.push_back("claimed sequence " + seq_str(seq) + " with the 4-cycle");
    return v;
  }
  if (n == m + 2) {
    if (m < 4)
      throw error(errc::hypothesis_violated,
                  "T8(ii) claimed construction U_{2,2}(1,..,1;1) needs m >= 4");
    return extremal_verdict(members, sigma_value, true,
                            families::u_two_branch(2, 2, ones(m - 3), {1}), p.workers);
  }
  if (n == m + 1) {
    if (m < 4)
      throw error(errc::hypothesis_violated,
                  "T8(iii) claimed construction U_{2,1}(1,..,1;1) needs m >= 4");
    return extremal_verdict(members, sigma_value, true,
                            families::u_two_branch(2, 1, ones(m - 3), {1}), p.workers);
  }
  // n == m
  std::optional<Graph> claimed;
  if (n >= 6) claimed = families::u1n(n);
  Verdict v = extremal_verdict(members, sigma_value, true, claimed, p.workers);
  if (!claimed && !members.empty()) {
    v.holds = false;
    v.findings.push_back("claimed construction U^1_n undefined for n < 6");
  }
  return v;
}

// ---------------------------------------------------------------------------
// Lemma suites
// ---------------------------------------------------------------------------

void fail_instance(Verdict& v, const Graph& g, const std::string& expected,
                   const std::string& actual) {
  v.holds = false;
  if (!v.counterexample) v.counterexample = Counterexample{g, expected, actual};
}

// Sliding-lemma position chain for P(n, k, G, v): sigma strictly decreasing,
// Z strictly increasing along it.
std::vector<int> sliding_chain(int n) {
  int m = (n - 1) / 4;
  int h = n - 4 * m;  // 1..4
  int l = (h - 1) / 2;
  std::vector<int> ks;
  for (int k = 2; k <= 2 * m + 2 * l; k += 2) ks.push_back(k);
  for (int k = 2 * m + 1; k >= 1; k -= 2) ks.push_back(k);
  return ks;
}

Verdict check_l2_3(const CheckParams& p) {
  int max_n = p.n.value_or(9);
  Verdict v;
  v.holds = true;
  for (int n = 2; n <= max_n; ++n) {
    SubtreeProfile star_c = rooted_subtree_profile(families::star(n), Anchors{{0}, {}});
    SubtreeProfile path_end = rooted_subtree_profile(families::path(n), Anchors{{0}, {}});
    for (const Graph& t : trees(n)) {
      for (int vtx = 0; vtx < n; ++vtx) {
        SubtreeProfile mid = rooted_subtree_profile(t, Anchors{{vtx}, {}});
        ++v.class_size;
        for (int k = 0; k <= n; ++k) {
          if (!(star_c.counts[k] >= mid.counts[k] && mid.counts[k] >= path_end.counts[k])) {
            fail_instance(v, t,
                          "n_k(c,S_n) >= n_k(v,T) >= n_k(nu,P_n) at n=" + std::to_string(n) +
                              " k=" + std::to_string(k) + " v=" + std::to_string(vtx),
                          big_str(mid.counts[k]));
          }
        }
      }
    }
  }
  return v;
}

Verdict check_l3_1(const CheckParams&) {
  using Attach = std::vector<std::pair<int, std::vector<int>>>;
  const std::vector<std::pair<int, Attach>> instances = {
      {3, {{0, {1}}, {1, {1}}}},
      {3, {{0, {2}}, {2, {1}}}},
      {4, {{0, {1}}, {1, {1}}, {2, {1}}}},
      {4, {{0, {2, 1}}, {1, {3}}}},
      {5, {{0, {1}}, {2, {2}}}},
      {5, {{0, {2, 1}}, {1, {3}}, {3, {1}}}},
      {6, {{0, {1}}, {3, {2}}, {4, {1, 1}}}},
      {11, {{0, {2, 1}}, {3, {3}}, {6, {1}}}},  // the Fig. 4 shape
  };
  Verdict v;
  v.holds = true;
  for (const auto& [girth, attach] : instances) {
    Graph c = families::cycle_with_pendants(girth, attach);
    std::vector<int> all;
    for (const auto& [pos, lens] : attach)
      for (int len : lens) all.push_back(len);
    Graph sc = families::cycle_with_pendants(girth, {{0, all}});
    ++v.class_size;
    SubtreeProfile pc = subtree_profile(c);
    SubtreeProfile psc = subtree_profile(sc);
    for (int k = 0; k <= c.n; ++k)
      if (pc.counts[k] > psc.counts[k])
        fail_instance(v, c, "n_k(C) <= n_k(SC) at k=" + std::to_string(k),
                      big_str(pc.counts[k]) + " > " + big_str(psc.counts[k]));
    SubtreeProfile rsc = rooted_subtree_profile(sc, Anchors{{0}, {}});
    for (int cv = 0; cv < girth; ++cv) {
      SubtreeProfile rc = rooted_subtree_profile(c, Anchors{{cv}, {}});
      for (int k = 0; k <= c.n; ++k)
        if (rc.counts[k] > rsc.counts[k])
          fail_instance(v, c,
                        "n_k(v,C) <= n_k(c,SC) at k=" + std::to_string(k) +
                            " v=" + std::to_string(cv),
                        big_str(rc.counts[k]) + " > " + big_str(rsc.counts[k]));
    }
  }
  return v;
}

// H(p, G, K): path on p edges; G glued at path vertex 0, K at path vertex p.
// transformed = move K's edges from the far end to vertex 0 (the H' of the
// tree-transformation lemma).
Graph lemma32_graph(int p, const Graph& g, const Graph& k, bool transformed) {
  std::vector<Edge> es;
  for (int i = 0; i < p; ++i) es.emplace_back(i, i + 1);
  int base_g = p + 1;
  auto map_g = [&](int w) { return w == 0 ? 0 : base_g + w - 1; };
  for (auto [x, y] : g.edges) es.emplace_back(map_g(x), map_g(y));
  int base_k = base_g + g.n - 1;
  auto map_k = [&](int w) { return w == 0 ? p : base_k + w - 1; };
  for (auto [x, y] : k.edges) {
    int a = map_k(x), b = map_k(y);
    if (transformed) {
      if (a == p) a = 0;
      if (b == p) b = 0;
    }
    es.emplace_back(a, b);
  }
  return build_graph(base_k + k.n - 1, es);
}

Verdict check_l3_2(const CheckParams& p) {
  std::vector<Graph> pool;
  for (const Graph& g : lemma_corpus(p.seed))
    if (g.n <= 4) pool.push_back(g);
  pool.push_back(families::path(5));
  pool.push_back(families::star(5));
  pool = dedupe_by_key(pool);
  Verdict v;
  v.holds = true;
  bool spanning_note = false;
  for (int path_len : {1, 2, 3}) {
    for (const Graph& g : pool) {
      for (const Graph& k : pool) {
        if (path_len + g.edge_count() + k.edge_count() > 20) continue;
        Graph h = lemma32_graph(path_len, g, k, false);
        Graph hp = lemma32_graph(path_len, g, k, true);
        ++v.class_size;
        SubtreeProfile ph = subtree_profile(h);
        SubtreeProfile php = subtree_profile(hp);
        bool nontrivial = g.n >= 2 && k.n >= 2;
        for (int kk = 0; kk <= h.n; ++kk) {
          if (php.counts[kk] < ph.counts[kk])
            fail_instance(v, h, "n_k(H') >= n_k(H) at k=" + std::to_string(kk),
                          big_str(php.counts[kk]) + " < " + big_str(ph.counts[kk]));
          if (nontrivial && kk >= 3 && kk < h.n && php.counts[kk] <= ph.counts[kk])
            fail_instance(v, h, "strict n_k(H') > n_k(H) at 3 <= k < n, k=" + std::to_string(kk),
                          big_str(php.counts[kk]));
          if (nontrivial && kk == h.n && php.counts[kk] == ph.counts[kk] && !spanning_note) {
            spanning_note = true;
            v.findings.push_back(
                "equality also holds at k = n (spanning counts agree); the stated "
                "equality condition covers only k in {0,1,2}");
          }
        }
      }
    }
  }
  return v;
}

Verdict check_l3_3(const CheckParams& p) {
  const std::vector<std::tuple<Graph, int, int>> rs = {
      {families::path(3), 0, 2},  {families::path(4), 0, 3}, {families::path(4), 0, 1},
      {families::star(4), 0, 1},  {families::cycle(4), 0, 2}, {families::cycle(3), 0, 1},
      {families::star(5), 0, 2},  {families::path(2), 0, 1},
  };
  std::vector<Graph> pool;
  for (const Graph& g : lemma_corpus(p.seed))
    if (g.n <= 4) pool.push_back(g);
  pool = dedupe_by_key(pool);
  Verdict v;
  v.holds = true;
  bool formula_note = false;
  for (const auto& [r, u0, v0] : rs) {
    BigInt at_u = rooted_subtree_count(r, Anchors{{u0}, {}});
    BigInt at_v = rooted_subtree_count(r, Anchors{{v0}, {}});
    int u = u0, vv = v0;
    if (at_u < at_v) {
      std::swap(u, vv);
      std::swap(at_u, at_v);
    }
    BigInt both = rooted_subtree_count(r, Anchors{{u, vv}, {}});
    for (const Graph& g : pool) {
      for (const Graph& k : pool) {
        if (r.edge_count() + g.edge_count() + k.edge_count() > 16) continue;
        Graph h = merge_vertices(merge_vertices(r, u, g, 0), vv, k, 0);
        Graph hp = merge_vertices(merge_vertices(r, u, g, 0), u, k, 0);
        ++v.class_size;
        BigInt nh = subtree_count(h);
        BigInt nhp = subtree_count(hp);
        if (nhp < nh)
          fail_instance(v, h, "n(H') >= n(H) given n(u,R) >= n(v,R)",
                        big_str(nhp) + " < " + big_str(nh));
        // Exact decomposition at the two cut vertices; the simplified one-line
        // difference expression often quoted for this transform is not exact.
        BigInt gg = rooted_subtree_count(g, Anchors{{0}, {}});
        BigInt kk = rooted_subtree_count(k, Anchors{{0}, {}});
        BigInt expected = (kk - 1) * ((at_u - both) * gg - (at_v - both));
        if (nhp - nh != expected)
          fail_instance(v, h, "cut-vertex decomposition value " + big_str(expected),
                        big_str(nhp - nh));
        if (!formula_note) {
          formula_note = true;
          v.findings.push_back(
              "n(H')-n(H) = (n(v',K)-1)((n(u,R)-n(uv,R))n(u',G) - (n(v,R)-n(uv,R)));"
              " the simplified expression (n(u,R)-n(v,R))n(v',K) +"
              " (n(u',G)-1)(n(v',K)-1) does not match exact counts");
        }
      }
    }
  }
  return v;
}

Verdict check_merge_identity(const CheckParams& p) {
  std::vector<Graph> pool = lemma_corpus(p.seed);
  std::mt19937_64 rng(p.seed ^ 0x6d657267ULL);
  Verdict v;
  v.holds = true;
  int instances = 0;
  while (instances < 200) {
    const Graph& h = pool[rng() % pool.size()];
    const Graph& k = pool[rng() % pool.size()];
    if (h.edge_count() + k.edge_count() > 20) continue;
    int w = static_cast<int>(rng() % h.n);
    int u = static_cast<int>(rng() % k.n);
    ++instances;
    ++v.class_size;
    Graph merged = merge_vertices(h, w, k, u);
    BigInt lhs = subtree_count(merged);
    BigInt rhs = subtree_count(h) + subtree_count(k) - 2 +
                 (rooted_subtree_count(h, Anchors{{w}, {}}) - 1) *
                     (rooted_subtree_count(k, Anchors{{u}, {}}) - 1);
    if (lhs != rhs)
      fail_instance(v, merged, "merge identity value " + big_str(rhs), big_str(lhs));
  }
  return v;
}

Verdict check_l3_5(const CheckParams&) {
  Verdict v;
  v.holds = true;
  for (int l1 = 3; l1 <= 7; ++l1) {
    for (int l2 = 1; l2 <= l1; ++l2) {
      Graph u1 = families::u_cycle_seg({l1, l2}, 1);
      BigInt n1 = subtree_count(u1);
      BigInt r1 = rooted_subtree_count(u1, Anchors{{0}, {}});
      // closed forms (3.1) and (3.3)
      ++v.class_size;
      if (n1 != closed_form::value("n_u1_pair", {l1, l2}))
        fail_instance(v, u1, "n(U_1) matches (3.1)", big_str(n1));
      if (r1 != closed_form::value("rooted_u1_pair", {l1, l2}))
        fail_instance(v, u1, "n(u,U_1) matches (3.3)", big_str(r1));
      if (l2 < 3) continue;
      Graph u2 = families::u_cycle_seg({l1, l2}, 2);
      BigInt n2 = subtree_count(u2);
      BigInt r2 = rooted_subtree_count(u2, Anchors{{0}, {}});
      bool equal_expected = l1 == l2;
      if (!(n1 >= n2) || (equal_expected ? n1 != n2 : n1 <= n2))
        fail_instance(v, u2,
                      "n(U_1(l1,l2)) vs n(U_2(l1,l2)) with equality iff l1 = l2, l1=" +
                          std::to_string(l1) + " l2=" + std::to_string(l2),
                      big_str(n1) + " vs " + big_str(n2));
      if (!(r1 >= r2) || (equal_expected ? r1 != r2 : r1 <= r2))
        fail_instance(v, u2, "rooted comparison with equality iff l1 = l2",
                      big_str(r1) + " vs " + big_str(r2));
    }
  }
  return v;
}

Verdict check_l3_6(const CheckParams&) {
  Verdict v;
  v.holds = true;
  v.class_size = 2;
  Graph a = families::u_cycle_seg({4, 3}, 1);
  Graph b = families::u_cycle_seg({3, 2, 2}, 1);
  BigInt na = subtree_count(a), nb = subtree_count(b);
  BigInt ra = rooted_subtree_count(a, Anchors{{0}, {}});
  BigInt rb = rooted_subtree_count(b, Anchors{{0}, {}});
  if (!(na == 53 && nb == 64 && na < nb))
    fail_instance(v, a, "n(U_1(4,3)) = 53 < 64 = n(U_1(3,2,2))",
                  big_str(na) + " vs " + big_str(nb));
  if (!(ra == 40 && rb == 54 && ra < rb))
    fail_instance(v, a, "n(c,U_1(4,3)) = 40 < 54 = n(b,U_1(3,2,2))",
                  big_str(ra) + " vs " + big_str(rb));
  v.extremal_value = nb;
  return v;
}

Verdict check_l3_7(const CheckParams&) {
  const std::vector<Graph> gs = {families::path(2), families::path(3), families::path(4),
                                 families::star(4), families::cycle(3)};
  Verdict v;
  v.holds = true;
  for (int l1 = 3; l1 <= 5; ++l1) {
    for (int l2 = 1; l2 <= l1; ++l2) {
      for (const Graph& g : gs) {
        int n = l1 + l2;
        Graph c = merge_vertices(families::cycle(n), 0, g, 0);
        Graph u = merge_vertices(families::u_cycle_seg({l1, l2}, 1), 0, g, 0);
        BigInt nc = subtree_count(c), nu = subtree_count(u);
        BigInt nvg = rooted_subtree_count(g, Anchors{{0}, {}});
        ++v.class_size;
        bool boundary = l1 == 3 && l2 == 3 && nvg == 2;
        if (boundary) {
          if (nc != nu)
            fail_instance(v, c, "boundary case l1=l2=3, n(v,G)=2 gives equality",
                          big_str(nc) + " vs " + big_str(nu));
          v.findings.push_back(
              "equality n(C) = n(U) = " + big_str(nc) +
              " at l1=l2=3 with n(v,G)=2; the lemma's strict inequality needs n(v,G) >= 3");
        } else if (!(nc < nu)) {
          fail_instance(v, c, "n(C_n(v,G)) < n(U_1(l1,l2,v,G))",
                        big_str(nc) + " vs " + big_str(nu));
        }
      }
    }
  }
  return v;
}

Verdict check_r3_8(const CheckParams&) {
  auto expr = [](long long d, long long l1, long long l2) {
    return l2 * (l1 * (l1 - d - 2) + d * d - l2);
  };
  Verdict v;
  v.holds = true;
  for (long long l1 = 3; l1 <= 40; ++l1) {
    for (long long l2 = 1; l2 <= l1; ++l2) {
      ++v.class_size;
      if (expr(0, l1, l2) < 0)
        fail_instance(v, families::cycle(3), "(3.4) >= 0 for d=0",
                      std::to_string(expr(0, l1, l2)));
      if (l2 == 1 && expr(1, l1, l2) < 0)
        fail_instance(v, families::cycle(3), "(3.4) >= 0 for d=1, l2=1",
                      std::to_string(expr(1, l1, l2)));
      if (l2 <= 2 && l1 >= 4 && expr(2, l1, l2) < 0)
        fail_instance(v, families::cycle(3), "(3.4) >= 0 for d=2, l2<=2",
                      std::to_string(expr(2, l1, l2)));
    }
  }
  // Graph-level spot checks away from the branching vertex (d = 1, 2).
  const std::vector<Graph> gs = {families::path(2), families::path(3), families::star(4)};
  for (const auto& [d, l1max] : std::vector<std::pair<int, int>>{{1, 6}, {2, 6}}) {
    for (int l1 = 2 * d; l1 <= l1max; ++l1) {
      if (l1 < 3) continue;
      for (int l2 = 1; l2 <= (d == 1 ? 1 : 2); ++l2) {
        for (const Graph& g : gs) {
          Graph c = merge_vertices(families::cycle(l1 + l2), 0, g, 0);
          Graph u = merge_vertices(families::u_cycle_seg({l1, l2}, 1), d, g, 0);
          ++v.class_size;
          if (subtree_count(u) < subtree_count(c))
            fail_instance(v, u,
                          "n(U) >= n(C) for d=" + std::to_string(d) + " l1=" +
                              std::to_string(l1) + " l2=" + std::to_string(l2),
                          big_str(subtree_count(u)) + " < " + big_str(subtree_count(c)));
        }
      }
    }
  }
  return v;
}

Verdict check_l4_1(const CheckParams& p) {
  int max_n = p.n.value_or(12);
  std::vector<Graph> pool;
  for (const Graph& g : lemma_corpus(p.seed))
    if (g.n >= 2) pool.push_back(g);  // a single vertex makes every position equal
  pool = dedupe_by_key(pool);
  Verdict v;
  v.holds = true;
  for (int n = 2; n <= max_n; ++n) {
    std::vector<int> ks = sliding_chain(n);
    for (const Graph& g : pool) {
      ++v.class_size;
      BigInt prev_sigma, prev_z;
      for (size_t i = 0; i < ks.size(); ++i) {
        Graph slid = families::slide(n, ks[i], g, 0);
        BigInt s = merrifield_simmons(slid);
        BigInt z = hosoya(slid);
        if (i > 0) {
          if (!(prev_sigma > s))
            fail_instance(v, slid,
                          "sigma chain strictly decreasing at n=" + std::to_string(n) +
                              " k=" + std::to_string(ks[i]),
                          big_str(prev_sigma) + " then " + big_str(s));
          if (!(prev_z < z))
            fail_instance(v, slid,
                          "Z chain strictly increasing at n=" + std::to_string(n) +
                              " k=" + std::to_string(ks[i]),
                          big_str(prev_z) + " then " + big_str(z));
        }
        prev_sigma = s;
        prev_z = z;
      }
    }
  }
  return v;
}

Verdict check_l4_2(const CheckParams& p) {
  std::vector<Graph> pool;
  for (const Graph& g : lemma_corpus(p.seed))
    if (g.n >= 2 && g.n <= 4 && g.edge_count() >= 1) pool.push_back(g);
  pool = dedupe_by_key(pool);
  const std::vector<Graph> ks = {families::path(2), families::path(3), families::path(4),
                                 families::cycle(3), families::cycle(4), families::star(4)};
  Verdict v;
  v.holds = true;
  for (const Graph& k : ks) {
    for (auto [u, vv] : {std::pair{0, k.n - 1}, std::pair{0, 1}}) {
      if (u == vv) continue;
      for (const Graph& h1 : pool) {
        for (const Graph& h2 : pool) {
          Graph g = merge_vertices(merge_vertices(k, vv, h1, 0), u, h2, 0);
          Graph g1 = merge_vertices(merge_vertices(k, vv, h1, 0), vv, h2, 0);
          Graph g2 = merge_vertices(merge_vertices(k, u, h1, 0), u, h2, 0);
          ++v.class_size;
          BigInt s = merrifield_simmons(g);
          BigInt s1 = merrifield_simmons(g1);
          BigInt s2 = merrifield_simmons(g2);
          if (!(s < std::max(s1, s2)))
            fail_instance(v, g, "sigma(G) < max(sigma(G_1), sigma(G_2))",
                          big_str(s) + " vs " + big_str(std::max(s1, s2)));
        }
      }
    }
  }
  return v;
}

Verdict check_l4_3(const CheckParams&) {
  const std::vector<std::vector<int>> seqs = {{4, 1},    {5, 2},    {4, 2, 1}, {6, 1},
                                              {5, 1, 1}, {4, 4},    {7, 2},    {6, 3, 1}};
  Verdict v;
  v.holds = true;
  for (const auto& L : seqs) {
    for (size_t i = 0; i < L.size(); ++i) {
      if (L[i] <= 3) continue;
      for (int li1 = 3; li1 < L[i]; ++li1) {
        int li2 = L[i] - li1;
        std::vector<int> split;
        for (size_t j = 0; j < L.size(); ++j) {
          if (j == i) {
            split.push_back(li1);
            split.push_back(li2);
          } else {
            split.push_back(L[j]);
          }
        }
        Graph before = families::u_cycle_seg(L, static_cast<int>(i) + 1);
        Graph after = families::u_cycle_seg(split, static_cast<int>(i) + 1);
        ++v.class_size;
        BigInt sb = merrifield_simmons(before);
        BigInt sa = merrifield_simmons(after);
        if (!(sb < sa))
          fail_instance(v, before,
                        "sigma increases when splitting l_i=" + std::to_string(L[i]) +
                            " into (" + std::to_string(li1) + "," + std::to_string(li2) + ")",
                        big_str(sb) + " vs " + big_str(sa));
      }
    }
  }
  return v;
}

Verdict check_l4_4(const CheckParams&) {
  const std::vector<Graph> gs = {families::path(2), families::path(3), families::path(4),
                                 families::star(4), families::cycle(3)};
  Verdict v;
  v.holds = true;
  for (int l = 3; l <= 6; ++l) {
    for (const Graph& g : gs) {
      auto merged = [&](const std::vector<int>& seq, int idx) {
        return merge_vertices(families::u_cycle_seg(seq, idx), 0, g, 0);
      };
      ++v.class_size;
      BigInt a = merrifield_simmons(merged({l, 4}, 2));
      BigInt b = merrifield_simmons(merged({l, 2, 2}, 1));
      if (!(a < b))
        fail_instance(v, merged({l, 4}, 2), "sigma(U_2(l,4,v,G)) < sigma(U_1(l,2,2,v,G))",
                      big_str(a) + " vs " + big_str(b));
      BigInt c = merrifield_simmons(merged({l, 3}, 2));
      BigInt d = merrifield_simmons(merged({l, 2, 1}, 1));
      BigInt e = merrifield_simmons(merged({l, 1, 1, 1}, 1));
      if (!(c < d))
        fail_instance(v, merged({l, 3}, 2), "sigma(U_2(l,3,v,G)) < sigma(U_1(l,2,1,v,G))",
                      big_str(c) + " vs " + big_str(d));
      if (!(c < e))
        fail_instance(v, merged({l, 3}, 2), "sigma(U_2(l,3,v,G)) < sigma(U_1(l,1,1,1,v,G))",
                      big_str(c) + " vs " + big_str(e));
    }
  }
  return v;
}

Graph path_or_empty(int n) {
  return n == 0 ? build_graph(0, {}) : families::path(n);
}

Verdict check_l4_5(const CheckParams& p) {
  int max_n = p.n.value_or(15);
  Verdict v;
  v.holds = true;
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 1; m <= n; ++m) {
      BigInt lhs = merrifield_simmons(disjoint_union(path_or_empty(n), path_or_empty(m - 1)));
      BigInt rhs = merrifield_simmons(disjoint_union(path_or_empty(n - 1), path_or_empty(m)));
      ++v.class_size;
      bool ok = m % 2 == 1 ? lhs <= rhs : lhs >= rhs;
      if (!ok)
        fail_instance(v, path_or_empty(n),
                      "parity inequality at n=" + std::to_string(n) + " m=" + std::to_string(m),
                      big_str(lhs) + " vs " + big_str(rhs));
    }
  }
  return v;
}

Verdict check_l4_6(const CheckParams& p) {
  int max_n = p.n.value_or(16);
  Verdict v;
  v.holds = true;
  bool duplicate_note = false;
  for (int n = 4; n <= max_n; ++n) {
    // The missing-edge chain increases along the L4_1 order; walk it reversed
    // so the values should strictly decrease.
    std::vector<int> ks = sliding_chain(n);
    std::reverse(ks.begin(), ks.end());
    ++v.class_size;
    BigInt prev;
    int prev_k = -1;
    for (int k : ks) {
      BigInt s = merrifield_simmons(disjoint_union(path_or_empty(n - k), path_or_empty(k)));
      if (prev_k >= 0) {
        // For odd n the even/odd handoff lists the same unordered pair twice
        // (P_{n-k} u P_k with k and n-k swapped); that link is an equality.
        bool same_pair = std::minmax(prev_k, n - prev_k) == std::minmax(k, n - k);
        if (same_pair) {
          if (prev != s)
            fail_instance(v, path_or_empty(n),
                          "identical pair at n=" + std::to_string(n) + " k=" + std::to_string(k),
                          big_str(prev) + " vs " + big_str(s));
          if (!duplicate_note) {
            duplicate_note = true;
            v.findings.push_back(
                "for odd n the chain's even/odd handoff repeats the pair {P_k, P_{n-k}}; "
                "that link holds with equality, strict elsewhere");
          }
        } else if (!(prev > s)) {
          fail_instance(v, path_or_empty(n),
                        "sigma(P_{n-k} u P_k) chain at n=" + std::to_string(n) +
                            " k=" + std::to_string(k),
                        big_str(prev) + " then " + big_str(s));
        }
      }
      prev = s;
      prev_k = k;
    }
  }
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------

const char* to_string(TheoremId id) {
  for (const auto& [tid, name] : kIdNames)
    if (tid == id) return name;
  return "?";
}

std::optional<TheoremId> theorem_id_from(const std::string& name) {
  for (const auto& [tid, n] : kIdNames)
    if (name == n) return tid;
  return std::nullopt;
}

bool is_lemma(TheoremId id) {
  switch (id) {
    case TheoremId::T1_uni:
    case TheoremId::T2_girth:
    case TheoremId::T3_subtree_segseq:
    case TheoremId::T4_short_subtree:
    case TheoremId::T5_segnum_subtree:
    case TheoremId::T6_sigma_segseq:
    case TheoremId::T7_short_sigma:
    case TheoremId::T8_segnum_sigma:
      return false;
    default:
      return true;
  }
}

Verdict check_theorem(TheoremId id, const CheckParams& params) {
  switch (id) {
    case TheoremId::T1_uni: return check_t1(params);
    case TheoremId::T2_girth: return check_t2(params);
    case TheoremId::T3_subtree_segseq: return check_t3(params);
    case TheoremId::T4_short_subtree: return check_t4(params);
    case TheoremId::T5_segnum_subtree: return check_t5(params);
    case TheoremId::T6_sigma_segseq: return check_t6(params);
    case TheoremId::T7_short_sigma: return check_t7(params);
    case TheoremId::T8_segnum_sigma: return check_t8(params);
    default:
      throw error(errc::hypothesis_violated, "not a theorem id; use check_lemma");
  }
}

Verdict check_lemma(TheoremId id, const CheckParams& params) {
  switch (id) {
    case TheoremId::L2_3: return check_l2_3(params);
    case TheoremId::L3_1: return check_l3_1(params);
    case TheoremId::L3_2: return check_l3_2(params);
    case TheoremId::L3_3: return check_l3_3(params);
    case TheoremId::merge_identity: return check_merge_identity(params);
    case TheoremId::L3_5: return check_l3_5(params);
    case TheoremId::L3_6: return check_l3_6(params);
    case TheoremId::L3_7: return check_l3_7(params);
    case TheoremId::R3_8: return check_r3_8(params);
    case TheoremId::L4_1: return check_l4_1(params);
    case TheoremId::L4_2: return check_l4_2(params);
    case TheoremId::L4_3: return check_l4_3(params);
    case TheoremId::L4_4: return check_l4_4(params);
    case TheoremId::L4_5: return check_l4_5(params);
    case TheoremId::L4_6: return check_l4_6(params);
    default:
      throw error(errc::hypothesis_violated, "not a lemma id; use check_theorem");
  }
}

Verdict check(TheoremId id, const CheckParams& params) {
  return is_lemma(id) ? check_lemma(id, params) : check_theorem(id, params);
}

CounterexampleReport reproduce_counterexamples() {
  CounterexampleReport rep;
  rep.holds = true;
  auto expect = [&](bool ok, const std::string& line) {
    rep.lines.push_back((ok ? "ok: " : "FAIL: ") + line);
    rep.holds = rep.holds && ok;
  };

  Graph h1 = families::u_two_branch(4, 4, {1}, {1});
  Graph h2 = families::u_cycle_seg({4, 4, 1, 1}, 1);
  BigInt w1 = wiener(h1), w2 = wiener(h2);
  expect(w1 == 118, "W(U_{4,4}(1;1)) = " + big_str(w1) + " (expected 118)");
  expect(w2 == 120, "W(U_1(4,4,1,1)) = " + big_str(w2) + " (expected 120)");

  Graph u1 = families::u_cycle_seg({6, 4}, 1);
  Graph u2 = families::u_cycle_seg({6, 4}, 2);
  BigInt z1 = hosoya(u1), z2 = hosoya(u2);
  expect(z1 == 114, "Z(U_1(6,4)) = " + big_str(z1) + " (expected 114)");
  expect(z2 == 115, "Z(U_2(6,4)) = " + big_str(z2) + " (expected 115)");

  auto members4411 = class_members(10, make_segment_sequence({4, 4, 1, 1}), std::nullopt);
  Verdict nmax = extremal_verdict(members4411, subtree_value, true, h2, 1);
  expect(nmax.holds, "subtree maximizer of U(4,4,1,1) is U_1(4,4,1,1), n = " +
                         big_str(nmax.extremal_value));
  Verdict wmin = extremal_verdict(
      members4411, [](const Graph& g) { return wiener(g); }, false, h2, 1);
  expect(!wmin.holds, "Wiener minimizer of U(4,4,1,1) is NOT U_1(4,4,1,1), min W = " +
                          big_str(wmin.extremal_value));

  auto members64 = class_members(10, make_segment_sequence({6, 4}), std::nullopt);
  Verdict smax = extremal_verdict(members64, sigma_value, true, u2, 1);
  expect(smax.holds,
         "sigma maximizer of U(6,4) is U_2(6,4), sigma = " + big_str(smax.extremal_value));
  Verdict zmin = extremal_verdict(
      members64, [](const Graph& g) { return hosoya(g); }, false, u2, 1);
  expect(!zmin.holds,
         "Z minimizer of U(6,4) is NOT U_2(6,4), min Z = " + big_str(zmin.extremal_value));
  return rep;
}

FormulaReport up_formula_report() {
  FormulaReport rep;
  rep.chain_holds = true;
  for (int n = 4; n <= 12; ++n) {
    BigInt oracle_up = subtree_count_oracle(families::up(n)).total();
    BigInt quoted = closed_form::value("n_up_inline", {n});
    if (oracle_up != quoted) {
      rep.discrepancy_found = true;
      rep.findings.push_back("n(UP_" + std::to_string(n) + "): oracle " + oracle_up.str() +
                             " != inline (n^2+7n-16)/2 = " + quoted.str());
    }
    BigInt oracle_cn = subtree_count_oracle(families::cycle(n)).total();
    BigInt oracle_us = subtree_count_oracle(families::us(n)).total();
    bool chain = oracle_up <= oracle_cn && oracle_cn <= oracle_us;
    rep.chain_holds = rep.chain_holds && chain;
    if (!chain)
      rep.findings.push_back("chain n(UP) <= n(C) <= n(US) FAILS at n = " + std::to_string(n));
  }
  if (rep.discrepancy_found)
    rep.findings.push_back(
        "discrepancy is an off-by-one per attachment edge: oracle matches n(P_n) + 3(n-2)");
  if (rep.chain_holds)
    rep.findings.push_back("n(UP_n) <= n(C_n) <= n(US_n) confirmed for 4 <= n <= 12 "
                           "with oracle values");
  return rep;
}

FormulaReport short_segment_formula_report() {
  FormulaReport rep;
  rep.chain_holds = true;
  for (int l = 1; l <= 5; ++l) {
    Graph u22 = families::u_two_branch(2, 2, {l}, {1});
    Graph u21 = families::u_two_branch(2, 1, {l}, {2});
    BigInt n22 = subtree_count(u22), n21 = subtree_count(u21);
    BigInt inline22 = BigInt(l) * l + 33 * l + 54;
    inline22 /= 2;
    BigInt inline21 = BigInt(l) * l + 29 * l + 50;
    inline21 /= 2;
    if (n22 != inline22) {
      rep.discrepancy_found = true;
      rep.findings.push_back("n(U_{2,2}(" + std::to_string(l) + ",1)): engine " + n22.str() +
                             " != inline (l^2+33l+54)/2 = " + inline22.str());
    }
    if (n21 != inline21) {
      rep.discrepancy_found = true;
      rep.findings.push_back("n(U_{2,1}(" + std::to_string(l) + ",2)): engine " + n21.str() +
                             " != inline (l^2+29l+50)/2 = " + inline21.str());
    }
    // rooted at the branch vertex carrying the length-l path (vertex 0)
    BigInt r22 = rooted_subtree_count(u22, Anchors{{0}, {}});
    BigInt r21 = rooted_subtree_count(u21, Anchors{{0}, {}});
    if (r22 != 16 * (l + 1)) {
      rep.discrepancy_found = true;
      rep.findings.push_back("n(u,U_{2,2}(" + std::to_string(l) + ",1)) != 16(l+1)");
    }
    if (r21 != 14 * (l + 1)) {
      rep.discrepancy_found = true;
      rep.findings.push_back("n(v,U_{2,1}(" + std::to_string(l) + ",2)) != 14(l+1)");
    }
    // the comparisons the proof actually needs
    rep.chain_holds = rep.chain_holds && n22 > n21 && r22 > r21;
  }
  for (int n = 8; n <= 11; ++n) {
    // girth 4, all segments length 1, three branch vertices of degree 3
    Graph g = families::cycle_with_pendants(
        4, {{0, {1}}, {1, {1}}, {2, {1}}, {3, ones(n - 7)}});
    BigInt engine = subtree_count(g);
    BigInt inline_count = (BigInt(12) << (n - 5)) + (BigInt(1) << (n - 7)) + n + 19;
    if (engine != inline_count) {
      rep.discrepancy_found = true;
      rep.findings.push_back("girth-4 inline count differs at n = " + std::to_string(n));
    }
    BigInt u1m = subtree_count(families::u1n(n));
    rep.chain_holds = rep.chain_holds && engine < u1m;
  }
  if (rep.discrepancy_found)
    rep.findings.push_back(
        "inline (l^2+33l+54)/2 undercounts n(U_{2,2}(l,1)) by 1; the inequality "
        "n(U_{2,2}(l,1)) > n(U_{2,1}(l,2)) is unaffected");
  if (rep.chain_holds)
    rep.findings.push_back(
        "all short-segment comparison inequalities confirmed by the engine");
  return rep;
}

std::vector<Graph> lemma_corpus(std::uint64_t seed) {
  std::vector<Graph> out;
  // every connected graph on <= 5 vertices, one per isomorphism class
  for (int n = 1; n <= 5; ++n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::map<CanonicalKey, Graph> classes;
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<Edge> es;
      for (size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) es.push_back(pairs[i]);
      Graph g = build_graph(n, es);
      if (!is_connected(g)) continue;
      classes.emplace(canonical_key(g), g);
    }
    for (auto& [key, g] : classes) out.push_back(std::move(g));
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 50; ++i) {
    int n = 2 + static_cast<int>(rng() % 7);  // 2..8
    out.push_back(random_tree(n, rng));
  }
  return out;
}

Graph random_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw error(errc::out_of_range, "random_tree: n >= 1");
  if (n == 1) return build_graph(1, {});
  if (n == 2) return build_graph(2, {{0, 1}});
  std::vector<int> prufer(n - 2);
  for (int& x : prufer) x = static_cast<int>(rng() % n);
  std::vector<int> degree(n, 1);
  for (int x : prufer) ++degree[x];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<Edge> es;
  for (int x : prufer) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    es.emplace_back(std::min(leaf, x), std::max(leaf, x));
    if (--degree[x] == 1) leaves.insert(x);
  }
  int a = *leaves.begin(), b = *std::next(leaves.begin());
  es.emplace_back(std::min(a, b), std::max(a, b));
  return build_graph(n, es);
}

Graph random_unicyclic(int n, std::mt19937_64& rng) {
  if (n < 3) throw error(errc::out_of_range, "random_unicyclic: n >= 3");
  Graph t = random_tree(n, rng);
  for (;;) {
    int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % n);
    if (u == v || t.has_edge(u, v)) continue;
    std::vector<Edge> es = t.edges;
    es.emplace_back(std::min(u, v), std::max(u, v));
    return build_graph(n, es);
  }
}

std::string verdict_json(TheoremId id, const CheckParams& params, const Verdict& verdict) {
  nlohmann::ordered_json j;
  j["theorem"] = to_string(id);
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  if (params.n) p["n"] = *params.n;
  if (params.m) p["m"] = *params.m;
  if (params.girth) p["girth"] = *params.girth;
  if (params.segments) p["segments"] = *params.segments;
  p["seed"] = params.seed;
  p["workers"] = params.workers;
  j["params"] = p;
  j["class_size"] = verdict.class_size;
  j["extremal_value"] = verdict.extremal_value.str();
  j["claimed"] = verdict.claimed_graph_key.hex();
  nlohmann::ordered_json achieved = nlohmann::ordered_json::array();
  for (const auto& key : verdict.achieved_by) achieved.push_back(key.hex());
  j["achieved_by"] = achieved;
  if (verdict.counterexample) {
    j["counterexample"] = {{"graph", format_edge_list(verdict.counterexample->graph)},
                           {"expected", verdict.counterexample->expected},
                           {"actual", verdict.counterexample->actual}};
  }
  j["findings"] = verdict.findings;
  j["holds"] = verdict.holds;
  return j.dump(2) + "\n";
}

}  // namespace unicyclic
