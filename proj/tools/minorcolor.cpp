// minorcolor command-line front end.
//
// Exit codes: 0 ok, 1 usage or invalid input, 2 inconclusive, 3 budget,
// 4 verification failure. JSON goes to stdout, a one-line summary to stderr.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "minorcolor/constructions.hpp"
#include "minorcolor/errors.hpp"
#include "minorcolor/exact_coloring.hpp"
#include "minorcolor/fractional.hpp"
#include "minorcolor/graph_io.hpp"
#include "minorcolor/json_io.hpp"
#include "minorcolor/oracles.hpp"
#include "minorcolor/random_hm.hpp"
#include "minorcolor/restricted.hpp"
#include "minorcolor/structured.hpp"
#include "minorcolor/verify.hpp"

#ifndef MINORCOLOR_VERSION
#define MINORCOLOR_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using namespace minorcolor;

namespace {

constexpr int kOk = 0, kUsage = 1, kInconclusive = 2, kBudget = 3, kFailed = 4;

const char* kSchemas = R"(File formats
  graph (.col)     DIMACS: "c" comments, "p edge <n> <m>", "e <u> <v>" (1-based).
  graph (.json)    {"n": n, "edges": [[u, v], ...]} (0-based); an ordered
                   graph adds "order": [u_1, ..., u_k].
  coloring         JSON array, entry v is the colour of vertex v.
  tree product     {"n", "k", "h_order", "nodes": [{"id", "parent", "depth"}],
                   "vertices": [{"id", "node", "base", "level", "progenitors"}],
                   "graph"}.
  decomposition    {"nodes": [{"id", "bag": [...], "parent"}], "root"}.
  structured       decomposition plus per node "apex", "inner_apex",
                   "embedding", "vortices": [{"boundary", "path_bags", "face",
                   "edges"?}], and global "t", "a_H".
  embedding        {"n"?, "rotation": {"v": [w, ...]}, "signature": {"u-v": 1|-1}}.
  removal fixture  {"embedding", "vortices": [...], "a"}; vortex private
                   vertices use ids >= n.
  manifest         <out>.manifest.json: subcommand, inputs, parameters, seed,
                   threads, version, outputs, wall_clock_seconds.
Exit codes: 0 ok, 1 usage, 2 inconclusive, 3 budget, 4 verification failure.)";

struct Common {
  std::uint64_t seed = 1;
  int threads = 1;
  std::string out;
  std::uint64_t budget = 50'000'000;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "random seed")->capture_default_str();
  app->add_option("--threads", c.threads, "worker threads (work is sequential; recorded in the manifest)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app->add_option("--out", c.out, "output file; a manifest is written next to it");
  app->add_option("--budget", c.budget, "search node budget")->capture_default_str();
}

class Run {
 public:
  Run(std::string subcommand, const Common& common)
      : subcommand_(std::move(subcommand)), common_(common), start_(std::chrono::steady_clock::now()) {}

  void input(const std::string& path) {
    if (!path.empty()) inputs_.push_back(path);
  }
  json& params() { return params_; }

  void write_text(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << text;
    outputs_.push_back(path.string());
  }
  void write_json(const fs::path& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

  void write_graph(const fs::path& path, const Graph& g) {
    if (path.extension() == ".json")
      write_json(path, graph_to_json(g));
    else
      write_text(path, to_dimacs(g));
  }

  void finish(const json& result, const std::string& summary) {
    if (!common_.out.empty()) {
      const double seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      json manifest{{"subcommand", subcommand_},
                    {"inputs", inputs_},
                    {"parameters", params_},
                    {"seed", common_.seed},
                    {"threads", common_.threads},
                    {"version", MINORCOLOR_VERSION},
                    {"outputs", outputs_},
                    {"wall_clock_seconds", seconds}};
      std::ofstream f(common_.out + ".manifest.json");
      f << manifest.dump(2) << "\n";
    }
    std::cout << result.dump(2) << std::endl;
    std::cerr << summary << std::endl;
  }

 private:
  std::string subcommand_;
  Common common_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::string> inputs_;
  std::vector<std::string> outputs_;
  json params_ = json::object();
};

Graph need_graph(const std::string& path, const char* flag) {
  if (path.empty()) throw PreconditionError(std::string("missing ") + flag);
  return read_graph_file(path);
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::string kind, g, h, in;
  int k = 1, p = 1, t = 1;
  std::uint64_t size_limit = 1'000'000;
};

int run_construct(const ConstructArgs& a, const Common& c) {
  Run run("construct", c);
  run.params() = {{"kind", a.kind}};
  Graph out;
  std::optional<TreeProduct> tp;
  if (a.kind == "tree-product") {
    run.input(a.g);
    run.input(a.h);
    const Graph g = need_graph(a.g, "--g");
    if (a.h.empty()) throw PreconditionError("missing --h");
    const OrderedGraph h = read_ordered_graph_file(a.h);
    run.params()["size_limit"] = a.size_limit;
    tp = tree_product(g, h, a.size_limit);
    out = tp->product;
  } else if (a.kind == "blowup" || a.kind == "strong-blowup") {
    run.input(a.in);
    const Graph h0 = need_graph(a.in, "--in");
    run.params()["p"] = a.p;
    if (a.p < 1) throw PreconditionError("--p must be >= 1");
    out = a.kind == "blowup" ? p_blowup(h0, a.p).graph : strong_p_blowup(h0, a.p);
  } else if (a.kind == "multipartite") {
    run.params()["k"] = a.k;
    run.params()["p"] = a.p;
    if (a.k < 1 || a.p < 1) throw PreconditionError("--k and --p must be >= 1");
    out = complete_multipartite(a.k, a.p).graph;
  } else if (a.kind == "universal") {
    run.input(a.in);
    run.params()["t"] = a.t;
    if (a.t < 0) throw PreconditionError("--t must be >= 0");
    out = add_universal(need_graph(a.in, "--in"), a.t);
  } else if (a.kind == "grotzsch") {
    out = grotzsch_graph();
  } else if (a.kind == "gadget") {
    run.input(a.in);
    out = gadget_expand(need_graph(a.in, "--in")).graph;
  } else {
    throw PreconditionError("unknown construct kind " + a.kind);
  }

  json result{{"kind", a.kind}, {"vertices", out.order()}, {"edges", out.size()}};
  if (!c.out.empty()) {
    run.write_graph(c.out, out);
    result["graph_file"] = c.out;
    if (tp) {
      const std::string tp_path = c.out + ".product.json";
      run.write_json(tp_path, tree_product_to_json(*tp));
      result["tree_product_file"] = tp_path;
    }
  } else {
    result["graph"] = graph_to_json(out);
  }
  run.finish(result, "construct " + a.kind + ": " + std::to_string(out.order()) + " vertices, " +
                         std::to_string(out.size()) + " edges");
  return kOk;
}

// ------------------------------------------------------------------- oracle

struct OracleArgs {
  std::string kind, in;
  int k = 3, a = 0, b = 1;
};

int run_oracle(const OracleArgs& a, const Common& c) {
  Run run("oracle", c);
  run.input(a.in);
  run.params() = {{"kind", a.kind}, {"budget", c.budget}};
  const Graph g = need_graph(a.in, "--in");
  const SearchBudget budget = SearchBudget::nodes(c.budget);
  json result{{"kind", a.kind}, {"vertices", g.order()}, {"edges", g.size()}};
  json witness;
  int code = kOk;
  std::string value;

  if (a.kind == "chi") {
    const auto r = chromatic_number(g, budget);
    result["status"] = to_string(r.status);
    result["lower"] = r.lower;
    result["upper"] = r.upper;
    result["nodes"] = r.nodes;
    if (r.exact()) result["value"] = r.value();
    witness = {{"coloring", coloring_to_json(r.coloring)}, {"clique", r.clique}};
    value = r.exact() ? std::to_string(r.value()) : std::to_string(r.lower) + ".." + std::to_string(r.upper);
    if (!r.exact()) code = kInconclusive;
  } else if (a.kind == "chif") {
    const auto r = fractional_chromatic(g, SearchBudget::nodes(std::min<std::uint64_t>(c.budget, 200'000)));
    result.update(fractional_to_json(r));
    witness = {{"fractional_coloring", result.value("coloring", json())}, {"fractional_clique", result.value("clique", json())}};
    value = r.status == Verdict::yes ? to_string(r.value) : to_string(r.lower) + ".." + to_string(r.upper);
    if (r.status != Verdict::yes) code = kInconclusive;
  } else if (a.kind == "omega") {
    const auto w = max_clique(g);
    result["value"] = w.size;
    witness = {{"clique", w.vertices}};
    value = std::to_string(w.size);
  } else if (a.kind == "alpha") {
    const auto w = max_independent_set(g);
    result["value"] = w.size;
    witness = {{"independent_set", w.vertices}};
    value = std::to_string(w.size);
  } else if (a.kind == "kcol") {
    run.params()["k"] = a.k;
    const auto r = try_k_colorable(g, a.k, budget);
    result["k"] = a.k;
    result["value"] = to_string(r.verdict);
    result["nodes"] = r.nodes;
    if (r.coloring) witness = {{"coloring", coloring_to_json(*r.coloring)}};
    value = to_string(r.verdict);
    if (r.verdict == Verdict::inconclusive) code = kInconclusive;
  } else if (a.kind == "ab") {
    run.params()["a"] = a.a;
    run.params()["b"] = a.b;
    result["a"] = a.a;
    result["b"] = a.b;
    try {
      const auto s = ab_coloring(g, a.a, a.b, budget);
      result["value"] = s ? "yes" : "no";
      if (s) witness = {{"sets", s->sets}};
      value = s ? "yes" : "no";
    } catch (const BudgetExceeded&) {
      result["value"] = "inconclusive";
      value = "inconclusive";
      code = kInconclusive;
    }
  } else {
    throw PreconditionError("unknown oracle kind " + a.kind);
  }

  if (!c.out.empty() && !witness.is_null()) {
    run.write_json(c.out, witness);
    result["witness_file"] = c.out;
  } else {
    result["witness"] = witness;
  }
  run.finish(result, "oracle " + a.kind + " = " + value);
  return code;
}

// ------------------------------------------------------------------- verify

int run_verify_cmd(const std::string& suite, VerifyOptions o, const Common& c) {
  Run run("verify", c);
  o.seed = c.seed;
  o.node_budget = c.budget;
  run.input(o.g0.string());
  run.input(o.fixture.string());
  run.input(o.input.string());
  run.params() = {{"suite", suite}, {"trials", o.trials}, {"gmax", o.gmax}, {"hmax", o.hmax}, {"k0", o.k0},
                  {"size_limit", o.size_limit}, {"budget", o.node_budget}};
  const json report = run_verify(suite, o);
  if (!c.out.empty()) run.write_json(c.out, report);
  const bool pass = report.at("pass").get<bool>();
  const int failures = report.at("failures").get<int>();
  std::string summary = "verify " + suite + ": " + (pass ? "pass" : failures ? "FAIL" : "inconclusive") + " (" +
                        std::to_string(report.at("checks").get<int>()) + " checks)";
  if (report.contains("chi")) summary += ", chi=" + std::to_string(report.at("chi").get<int>());
  run.finish(report, summary);
  if (pass) return kOk;
  return failures ? kFailed : kInconclusive;
}

// ---------------------------------------------------------------- random-hm

int run_random_hm(HmParams params, bool audit, const Common& c) {
  Run run("random-hm", c);
  params.seed = c.seed;
  validate(params);
  run.params() = {{"m", params.m}, {"n", params.n}, {"p", params.p}, {"intra_first", params.intra_first}, {"audit", audit}};
  const HmResult r = build_hm(params);
  const auto& rep = r.report;
  json report{{"base_edges", rep.base_edges},
              {"triangles_packed", rep.triangles_packed},
              {"triangle_edges_removed", rep.triangle_edges_removed},
              {"intra_edges_removed", rep.intra_edges_removed},
              {"final_edges", rep.final_edges},
              {"base_isolated_triangles", rep.base_isolated_triangles},
              {"triangle_free", rep.triangle_free},
              {"parts_independent", rep.parts_independent}};
  if (audit) {
    const auto au = audit_hm(r.graph, r.parts, SearchBudget::nodes(std::min<std::uint64_t>(c.budget, 200'000)));
    report["audit"] = {{"triangle_free", au.triangle_free},
                       {"parts_independent", au.parts_independent},
                       {"alpha", au.alpha},
                       {"alpha_witness", au.alpha_witness},
                       {"fractional_status", to_string(au.fractional_status)},
                       {"note", au.note}};
    if (au.other_large_independent) report["audit"]["other_large_independent"] = *au.other_large_independent;
    if (au.fractional) report["audit"]["fractional"] = to_string(*au.fractional);
  }
  json result{{"graph", graph_to_json(r.graph)}, {"parts", r.parts}, {"report", report}};
  if (!c.out.empty()) {
    run.write_json(c.out, result);
    result = {{"graph_file", c.out}, {"report", report}};
  }
  run.finish(result, "random-hm: " + std::to_string(r.graph.order()) + " vertices, " +
                         std::to_string(r.graph.size()) + " edges, triangle-free=" +
                         (rep.triangle_free ? "yes" : "no"));
  return rep.triangle_free && rep.parts_independent ? kOk : kFailed;
}

// -------------------------------------------------------------------- color

int run_color(const std::string& in, const std::string& td_path, int t, int a, const std::string& mode_name,
              const Common& c) {
  Run run("color", c);
  run.input(in);
  run.input(td_path);
  run.params() = {{"t", t}, {"a", a}, {"mode", mode_name}};
  const Graph g = need_graph(in, "--in");
  if (td_path.empty()) throw PreconditionError("missing --td");
  const auto td = td_from_json(read_json_file(td_path));
  const auto rc = restricted_color(g, td, t, a, parse_color_mode(mode_name));
  json result{{"mode", to_string(rc.mode)},
              {"palette", rc.palette},
              {"colors_used", rc.colors_used},
              {"proper", is_proper(g, rc.coloring)}};
  if (rc.mode == ColorMode::trianglefree) {
    result["worst_margin"] = rc.worst_margin;
    result["star_audits"] = rc.star_audits;
  }
  if (!c.out.empty()) {
    run.write_json(c.out, coloring_to_json(rc.coloring));
    result["witness_file"] = c.out;
  } else {
    result["coloring"] = coloring_to_json(rc.coloring);
  }
  run.finish(result, "color " + mode_name + ": " + std::to_string(rc.colors_used) + " of " +
                         std::to_string(rc.palette) + " colours");
  return kOk;
}

// ----------------------------------------------------------------- decompose

int run_decompose(const std::string& in, const std::string& sd_path, int ka, int kb, const Common& c) {
  Run run("decompose", c);
  run.input(in);
  run.input(sd_path);
  run.params() = {{"kab", ka > 0 ? json{ka, kb} : json()}};
  const Graph g = need_graph(in, "--in");
  if (sd_path.empty()) throw PreconditionError("missing --sd");
  const auto sd = structured_from_json(read_json_file(sd_path));
  const auto problems = structured_violations(g, sd);
  if (!problems.empty()) {
    json result{{"valid", false}, {"violations", problems}};
    run.finish(result, "decompose: " + std::to_string(problems.size()) + " violations");
    return kUsage;
  }
  std::optional<std::pair<int, int>> kab;
  if (ka > 0) kab = std::make_pair(ka, kb);
  const auto s = split_low_high(g, sd, kab);
  json nodes = json::array();
  for (const auto& n : s.nodes)
    nodes.push_back({{"node", n.node},
                     {"genus", n.genus},
                     {"vortices", n.vortex_count},
                     {"removed", n.removed},
                     {"bound", n.bound},
                     {"lemma_treewidth", n.lemma_treewidth},
                     {"lemma_within_bound", n.lemma_within_bound}});
  std::vector<std::string> restr;
  for (const auto& v : s.restricted.violations) restr.push_back("node " + std::to_string(v.node) + ": " + v.reason);
  json result{{"valid", true},
              {"low", s.low},
              {"core", s.core},
              {"core_td", td_to_json(s.core_td)},
              {"core_restricted", s.restricted.is_restricted},
              {"restricted_violations", restr},
              {"restricted_t", sd.t},
              {"restricted_a", s.restricted_a},
              {"root_fallbacks", s.normalized.root_fallbacks},
              {"nodes", nodes},
              {"low_treewidth", s.low_treewidth},
              {"low_treewidth_exact", s.low_treewidth_exact},
              {"low_bound", s.low_bound},
              {"low_within_bound", s.low_within_bound}};
  if (!c.out.empty()) run.write_json(c.out, result);
  run.finish(result, "decompose: |L|=" + std::to_string(s.low.size()) + ", |C|=" + std::to_string(s.core.size()) +
                         ", core restricted=" + (s.restricted.is_restricted ? "yes" : "no"));
  return s.restricted.is_restricted && s.low_within_bound ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph constructions, exact colouring oracles and lemma-level verification suites"};
  app.set_help_flag("--help", "print this help and exit");
  app.footer(kSchemas);
  app.require_subcommand(1);
  app.set_version_flag("--version", MINORCOLOR_VERSION);

  Common common;

  ConstructArgs cons;
  auto* construct = app.add_subcommand("construct", "build a graph family");
  construct->add_option("kind", cons.kind, "tree-product|blowup|strong-blowup|multipartite|universal|grotzsch|gadget")
      ->required()
      ->check(CLI::IsMember({"tree-product", "blowup", "strong-blowup", "multipartite", "universal", "grotzsch", "gadget"}));
  construct->add_option("--g", cons.g, "tree-product: base graph G");
  construct->add_option("--h", cons.h, "tree-product: ordered graph H (.json with order, or .col)");
  construct->add_option("--in", cons.in, "input graph for blowup, strong-blowup, universal, gadget");
  construct->add_option("--k", cons.k, "multipartite: number of parts")->capture_default_str();
  construct->add_option("--p", cons.p, "blowup or part size")->capture_default_str();
  construct->add_option("--t", cons.t, "universal: vertices to add")->capture_default_str();
  construct->add_option("--size-limit", cons.size_limit, "tree-product vertex budget")->capture_default_str();
  add_common(construct, common);

  OracleArgs orc;
  auto* oracle = app.add_subcommand("oracle", "exact graph parameters with witnesses");
  oracle->add_option("kind", orc.kind, "chi|chif|omega|alpha|kcol|ab")
      ->required()
      ->check(CLI::IsMember({"chi", "chif", "omega", "alpha", "kcol", "ab"}));
  oracle->add_option("--in", orc.in, "input graph")->required();
  oracle->add_option("--k", orc.k, "kcol: number of colours")->capture_default_str();
  oracle->add_option("--a", orc.a, "ab: palette size");
  oracle->add_option("--b", orc.b, "ab: colours per vertex")->capture_default_str();
  add_common(oracle, common);

  std::string suite;
  VerifyOptions vo;
  std::string g0, fixture, vin;
  auto* verify = app.add_subcommand("verify", "run a property suite; exit 4 on any failure");
  verify->add_option("suite", suite, "propgen|propcolor|gap|gadget|td|lemma-color|lemma-remove|hm")
      ->required()
      ->check(CLI::IsMember(verify_suites()));
  verify->add_option("--trials", vo.trials, "random trials (0: suite default)");
  verify->add_option("--gmax", vo.gmax, "propgen: max |V(G)|")->capture_default_str();
  verify->add_option("--hmax", vo.hmax, "propgen: max |V(H)|")->capture_default_str();
  verify->add_option("--g0", g0, "gap: planar input graph");
  verify->add_option("--k0", vo.k0, "gap: multipartite parts")->capture_default_str();
  verify->add_option("--fixture", fixture, "lemma-remove: removal fixture");
  verify->add_option("--in", vin, "gadget: single input graph instead of random ones");
  verify->add_option("--size-limit", vo.size_limit, "product vertex budget")->capture_default_str();
  add_common(verify, common);

  HmParams hm;
  bool hm_audit = false;
  auto* random_hm = app.add_subcommand("random-hm", "random triangle-free m-partite graph");
  random_hm->add_option("--m", hm.m, "number of parts")->required();
  random_hm->add_option("--n", hm.n, "part size")->required();
  random_hm->add_option("--p", hm.p, "edge probability (default 1/sqrt(6(nm-2)))");
  random_hm->add_flag("--intra-first", hm.intra_first, "delete intra-part edges before packing triangles");
  random_hm->add_flag("--audit", hm_audit, "measure alpha and the fractional chromatic number");
  add_common(random_hm, common);

  std::string col_in, col_td, col_mode = "apex";
  int col_t = 1, col_a = 1;
  auto* color = app.add_subcommand("color", "colour along a (t,a)-restricted decomposition");
  color->add_option("--in", col_in, "input graph")->required();
  color->add_option("--td", col_td, "decomposition JSON")->required();
  color->add_option("--t", col_t, "adhesion bound t")->required();
  color->add_option("--a", col_a, "adhesion-degree bound a")->required();
  color->add_option("--mode", col_mode, "apex|degree|trianglefree")
      ->check(CLI::IsMember({"apex", "degree", "trianglefree"}))
      ->capture_default_str();
  add_common(color, common);

  std::string dec_in, dec_sd;
  std::vector<int> dec_kab;
  auto* decompose = app.add_subcommand("decompose", "split a structured decomposition into low and core parts");
  decompose->add_option("--in", dec_in, "input graph")->required();
  decompose->add_option("--sd", dec_sd, "structured decomposition JSON")->required();
  decompose->add_option("--kab", dec_kab, "a b: use the K_{a,b} apex-neighbour split")->expected(2);
  add_common(decompose, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*construct) return run_construct(cons, common);
    if (*oracle) return run_oracle(orc, common);
    if (*verify) {
      vo.g0 = g0;
      vo.fixture = fixture;
      vo.input = vin;
      return run_verify_cmd(suite, vo, common);
    }
    if (*random_hm) {
      if (random_hm->count("--p") == 0) hm.p = default_probability(hm.m, static_cast<std::uint64_t>(hm.n));
      return run_random_hm(hm, hm_audit, common);
    }
    if (*color) return run_color(col_in, col_td, col_t, col_a, col_mode, common);
    if (*decompose) {
      const int ka = dec_kab.empty() ? 0 : dec_kab[0];
      const int kb = dec_kab.empty() ? 0 : dec_kab[1];
      return run_decompose(dec_in, dec_sd, ka, kb, common);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << " (predicted " << e.predicted() << ", limit " << e.limit()
              << ")" << std::endl;
    return kBudget;
  } catch (const LemmaViolation& e) {
    std::cerr << "verification failure: " << e.what() << std::endl;
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kUsage;
  }
  return kUsage;
}
