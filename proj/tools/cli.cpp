#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "unicyclic/canonical.hpp"
#include "unicyclic/closed_forms.hpp"
#include "unicyclic/enumerate.hpp"
#include "unicyclic/families.hpp"
#include "unicyclic/invariants.hpp"
#include "unicyclic/segments.hpp"
#include "unicyclic/verify.hpp"

namespace {

using namespace unicyclic;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;

struct FamilyOptions {
  std::string kind;
  int n = 0;
  int girth = 3;
  int index = 1;
  int k = 0;
  int at = 0;
  std::vector<int> segments;
  std::vector<int> arcs;
  std::vector<int> left;
  std::vector<int> right;
  std::vector<int> lengths;
  std::vector<std::string> attach;  // "pos:l1,l2,..."
  std::string attach_file;
};

void add_family_options(CLI::App* app, FamilyOptions& opt) {
  app->add_option("--n", opt.n, "vertex count");
  app->add_option("--girth", opt.girth, "cycle length (default 3)");
  app->add_option("--segments", opt.segments, "segment lengths l_1,l_2,...")->delimiter(',');
  app->add_option("--index", opt.index, "which segment forms the cycle (1-based)");
  app->add_option("--arcs", opt.arcs, "the two cycle arc lengths li,lj")->delimiter(',');
  app->add_option("--left", opt.left, "pendant path lengths at the first branch vertex")
      ->delimiter(',');
  app->add_option("--right", opt.right, "pendant path lengths at the second branch vertex")
      ->delimiter(',');
  app->add_option("--lengths", opt.lengths, "starlike leg lengths")->delimiter(',');
  app->add_option("--attach-at", opt.attach,
                  "cycle attachment spec pos:l1,l2 (repeatable)");
  app->add_option("--k", opt.k, "path position to merge at (1-based)");
  app->add_option("--attach", opt.attach_file, "edge-list file of the attached graph");
  app->add_option("--at", opt.at, "vertex of the attached graph to merge");
}

Graph read_graph_file(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot open " + path);
  return read_edge_list(in);
}

Graph build_family(const FamilyOptions& opt) {
  if (opt.kind == "path") return families::path(opt.n);
  if (opt.kind == "cycle") return families::cycle(opt.n);
  if (opt.kind == "star") return families::star(opt.n);
  if (opt.kind == "us") return families::us(opt.n, opt.girth);
  if (opt.kind == "up") return families::up(opt.n, opt.girth);
  if (opt.kind == "u1") return families::u_cycle_seg(opt.segments, opt.index);
  if (opt.kind == "utwo") {
    if (opt.arcs.size() != 2)
      throw error(errc::out_of_range, "utwo needs --arcs li,lj");
    return families::u_two_branch(opt.arcs[0], opt.arcs[1], opt.left, opt.right);
  }
  if (opt.kind == "u1n") return families::u1n(opt.n);
  if (opt.kind == "starlike") return families::starlike(opt.lengths);
  if (opt.kind == "cyclepend") {
    std::vector<std::pair<int, std::vector<int>>> attachments;
    for (const std::string& spec : opt.attach) {
      auto colon = spec.find(':');
      if (colon == std::string::npos)
        throw error(errc::parse_error, "--attach-at expects pos:l1,l2");
      std::vector<int> lens;
      std::stringstream ss(spec.substr(colon + 1));
      for (std::string tok; std::getline(ss, tok, ',');) lens.push_back(std::stoi(tok));
      attachments.emplace_back(std::stoi(spec.substr(0, colon)), lens);
    }
    return families::cycle_with_pendants(opt.girth, attachments);
  }
  if (opt.kind == "slide") {
    Graph g = opt.attach_file.empty() ? build_graph(1, {}) : read_graph_file(opt.attach_file);
    return families::slide(opt.n, opt.k, g, opt.at);
  }
  throw error(errc::unknown_family, opt.kind);
}

ClassFilter make_filter(int order, std::optional<int> girth,
                        const std::vector<int>& segments, std::optional<int> segment_count) {
  ClassFilter f;
  f.order = order;
  f.girth = girth;
  if (!segments.empty()) {
    f.segment_sequence = make_segment_sequence(segments);
    if (order == 0) f.order = f.segment_sequence->sum();
  }
  f.segment_count = segment_count;
  return f;
}

int run_compute(const Graph& g, std::vector<std::string> indices) {
  if (indices.empty()) indices = {"all"};
  bool all = std::find(indices.begin(), indices.end(), "all") != indices.end();
  auto wanted = [&](const std::string& name) {
    return all || std::find(indices.begin(), indices.end(), name) != indices.end();
  };
  for (const auto& idx : indices)
    if (idx != "all" && idx != "subtrees" && idx != "profile" && idx != "wiener" &&
        idx != "sigma" && idx != "hosoya" && idx != "segments" && idx != "girth")
      throw error(errc::parse_error, "unknown index: " + idx);

  nlohmann::ordered_json out;
  if (wanted("subtrees") || wanted("profile")) {
    SubtreeProfile prof = subtree_profile(g);
    out["n"] = prof.total().str();
    if (wanted("profile")) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& c : prof.counts) arr.push_back(c.str());
      out["profile"] = arr;
    }
  }
  if (wanted("wiener")) out["wiener"] = wiener(g).str();
  if (wanted("sigma")) out["sigma"] = merrifield_simmons(g).str();
  if (wanted("hosoya")) out["hosoya"] = hosoya(g).str();
  // under "all", structural fields appear only where they are defined
  if (wanted("segments") && (!all || is_tree(g) || is_unicyclic(g)))
    out["segments"] = segment_sequence(g).lengths;
  if (wanted("girth") && (!all || is_unicyclic(g))) out["girth"] = cycle_info(g).girth;
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

// Kendall tau_b over exact values; "nan" when a column is constant.
std::string kendall_tau(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
  size_t n = xs.size();
  long long concordant = 0, discordant = 0, ties_x = 0, ties_y = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      int sx = xs[i] < xs[j] ? -1 : xs[i] > xs[j] ? 1 : 0;
      int sy = ys[i] < ys[j] ? -1 : ys[i] > ys[j] ? 1 : 0;
      if (sx == 0) ++ties_x;
      if (sy == 0) ++ties_y;
      if (sx * sy > 0) ++concordant;
      if (sx * sy < 0) ++discordant;
    }
  double n0 = static_cast<double>(n) * (n - 1) / 2.0;
  double denom = std::sqrt((n0 - ties_x) * (n0 - ties_y));
  char buf[32];
  if (denom == 0.0) return "nan";
  std::snprintf(buf, sizeof buf, "%.6f", (concordant - discordant) / denom);
  return buf;
}

int run_correlate(const ClassFilter& filter, int workers) {
  std::vector<Graph> members = unicyclic_graphs(filter);
  std::vector<InvariantBundle> bundles(members.size());
  if (workers <= 1 || members.size() < 2) {
    for (size_t i = 0; i < members.size(); ++i) bundles[i] = invariant_bundle(members[i]);
  } else {
    // results land in per-index slots, so output is identical for any count
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < std::min<int>(workers, static_cast<int>(members.size())); ++w)
      pool.emplace_back([&] {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= members.size()) break;
          bundles[i] = invariant_bundle(members[i]);
        }
      });
    for (auto& t : pool) t.join();
  }
  std::cout << "key,n,wiener,sigma,hosoya\n";
  std::vector<BigInt> ns, ws, ss, zs;
  for (size_t i = 0; i < members.size(); ++i) {
    std::cout << canonical_key(members[i]).hex() << ',' << bundles[i].subtree_total.str()
              << ',' << bundles[i].wiener.str() << ',' << bundles[i].merrifield_simmons.str()
              << ',' << bundles[i].hosoya.str() << "\n";
    ns.push_back(bundles[i].subtree_total);
    ws.push_back(bundles[i].wiener);
    ss.push_back(bundles[i].merrifield_simmons);
    zs.push_back(bundles[i].hosoya);
  }
  std::cout << "# kendall,n,wiener," << kendall_tau(ns, ws) << "\n";
  std::cout << "# kendall,n,sigma," << kendall_tau(ns, ss) << "\n";
  std::cout << "# kendall,n,hosoya," << kendall_tau(ns, zs) << "\n";
  std::cout << "# kendall,wiener,sigma," << kendall_tau(ws, ss) << "\n";
  std::cout << "# kendall,wiener,hosoya," << kendall_tau(ws, zs) << "\n";
  std::cout << "# kendall,sigma,hosoya," << kendall_tau(ss, zs) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact subtree / Wiener / Merrifield-Simmons / Hosoya engine for trees "
               "and unicyclic graphs"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "compute invariants of a graph");
  std::string input_file;
  FamilyOptions compute_family;
  std::vector<std::string> indices;
  compute->add_option("--input", input_file, "edge-list file, or - for stdin");
  compute->add_option("--family", compute_family.kind, "family kind instead of --input");
  add_family_options(compute, compute_family);
  compute->add_option("--indices", indices,
                      "subset of subtrees,profile,wiener,sigma,hosoya,segments,girth (or all)")
      ->delimiter(',');

  // family
  auto* family = app.add_subcommand("family", "emit a named family as an edge list");
  FamilyOptions family_opt;
  family->add_option("kind", family_opt.kind,
                     "path|cycle|star|us|up|u1|utwo|u1n|starlike|cyclepend|slide")
      ->required();
  add_family_options(family, family_opt);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "list unicyclic isomorphism classes");
  int order = 0, workers = 1;
  std::optional<int> girth_opt, segcount_opt;
  std::vector<int> segments_opt;
  std::string emit = "edgelist";
  enumerate->add_option("--order", order, "vertex count");
  enumerate->add_option("--girth", girth_opt, "restrict girth");
  enumerate->add_option("--segments", segments_opt, "restrict segment sequence")->delimiter(',');
  enumerate->add_option("--segment-count", segcount_opt, "restrict segment count");
  enumerate->add_option("--emit", emit, "edgelist|count");
  enumerate->add_option("--workers", workers, "worker threads");

  // verify
  auto* verify = app.add_subcommand("verify", "check a theorem or lemma");
  std::string theorem_name, report = "json";
  CheckParams check_params;
  std::optional<int> vn, vm, vgirth;
  std::vector<int> vsegments;
  bool counterexamples = false, up_formula = false;
  verify->add_option("--theorem", theorem_name,
                     "T1..T8, L2_3, L3_1..L3_7, R3_8, L4_1..L4_6, merge_identity");
  verify->add_option("--n", vn, "order parameter");
  verify->add_option("--m", vm, "segment count parameter");
  verify->add_option("--girth", vgirth, "girth parameter");
  verify->add_option("--segments", vsegments, "segment sequence parameter")->delimiter(',');
  verify->add_option("--seed", check_params.seed, "corpus seed");
  verify->add_option("--workers", check_params.workers, "worker threads");
  verify->add_option("--report", report, "json|text");
  verify->add_flag("--counterexamples", counterexamples,
                   "reproduce the two negative-correlation counterexamples");
  verify->add_flag("--up-formula", up_formula,
                   "report the n(UP_n) inline-formula discrepancy");
  bool short_formulas = false;
  verify->add_flag("--short-formulas", short_formulas,
                   "check the short-segment proof inline counts");

  // correlate
  auto* correlate = app.add_subcommand("correlate", "CSV of invariants over a class");
  int c_order = 0, c_workers = 1;
  std::optional<int> c_girth, c_segcount;
  std::vector<int> c_segments;
  correlate->add_option("--order", c_order, "vertex count");
  correlate->add_option("--girth", c_girth, "restrict girth");
  correlate->add_option("--segments", c_segments, "restrict segment sequence")->delimiter(',');
  correlate->add_option("--segment-count", c_segcount, "restrict segment count");
  correlate->add_option("--workers", c_workers, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) {
      if (input_file.empty() == compute_family.kind.empty())
        throw error(errc::parse_error, "compute needs exactly one of --input / --family");
      Graph g = input_file.empty() ? build_family(compute_family) : read_graph_file(input_file);
      return run_compute(g, indices);
    }
    if (family->parsed()) {
      write_edge_list(std::cout, build_family(family_opt));
      return kExitOk;
    }
    if (enumerate->parsed()) {
      ClassFilter filter = make_filter(order, girth_opt, segments_opt, segcount_opt);
      if (emit == "count") {
        std::cout << class_count(filter) << "\n";
      } else if (emit == "edgelist") {
        bool first = true;
        for (const Graph& g : unicyclic_graphs(filter)) {
          if (!first) std::cout << "\n";
          first = false;
          write_edge_list(std::cout, g);
        }
      } else {
        throw error(errc::parse_error, "--emit must be edgelist or count");
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      if (counterexamples) {
        CounterexampleReport rep = reproduce_counterexamples();
        for (const auto& line : rep.lines) std::cout << line << "\n";
        return rep.holds ? kExitOk : kExitCounterexample;
      }
      if (up_formula) {
        FormulaReport rep = up_formula_report();
        for (const auto& line : rep.findings) std::cout << line << "\n";
        return rep.chain_holds ? kExitOk : kExitCounterexample;
      }
      if (short_formulas) {
        FormulaReport rep = short_segment_formula_report();
        for (const auto& line : rep.findings) std::cout << line << "\n";
        return rep.chain_holds ? kExitOk : kExitCounterexample;
      }
      auto id = theorem_id_from(theorem_name);
      if (!id) throw error(errc::parse_error, "unknown theorem id: " + theorem_name);
      check_params.n = vn;
      check_params.m = vm;
      check_params.girth = vgirth;
      if (!vsegments.empty()) check_params.segments = vsegments;
      Verdict v = check(*id, check_params);
      if (report == "json") {
        std::cout << verdict_json(*id, check_params, v);
      } else {
        std::cout << to_string(*id) << ": " << (v.holds ? "holds" : "COUNTEREXAMPLE")
                  << " (class size " << v.class_size << ", extremal "
                  << v.extremal_value.str() << ")\n";
        for (const auto& f : v.findings) std::cout << "  - " << f << "\n";
        if (v.counterexample) {
          std::cout << "  expected: " << v.counterexample->expected << "\n";
          std::cout << "  actual:   " << v.counterexample->actual << "\n";
          std::cout << format_edge_list(v.counterexample->graph);
        }
      }
      return v.holds ? kExitOk : kExitCounterexample;
    }
    if (correlate->parsed()) {
      ClassFilter filter = make_filter(c_order, c_girth, c_segments, c_segcount);
      return run_correlate(filter, c_workers);
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
