#include "minorcolor/verify.hpp"

#include <functional>
#include <map>

#include "minorcolor/constructions.hpp"
#include "minorcolor/errors.hpp"
#include "minorcolor/exact_coloring.hpp"
#include "minorcolor/fractional.hpp"
#include "minorcolor/generators.hpp"
#include "minorcolor/oracles.hpp"
#include "minorcolor/product_coloring.hpp"
#include "minorcolor/random_hm.hpp"
#include "minorcolor/restricted.hpp"

namespace minorcolor {

namespace {

class Tally {
 public:
  explicit Tally(std::string suite) : suite_(std::move(suite)) {}

  void check(bool ok, const std::function<json()>& counterexample) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (first_.is_null()) first_ = counterexample();
  }
  void inconclusive(const json& where) {
    ++checks_;
    ++inconclusive_;
    if (first_inconclusive_.is_null()) first_inconclusive_ = where;
  }

  json report(json details = json::object()) const {
    json r = std::move(details);
    r["suite"] = suite_;
    r["pass"] = failures_ == 0 && inconclusive_ == 0;
    r["checks"] = checks_;
    r["failures"] = failures_;
    r["inconclusive"] = inconclusive_;
    r["counterexample"] = first_;
    if (!first_inconclusive_.is_null()) r["first_inconclusive"] = first_inconclusive_;
    return r;
  }

 private:
  std::string suite_;
  int checks_ = 0;
  int failures_ = 0;
  int inconclusive_ = 0;
  json first_;
  json first_inconclusive_;
};

std::uint64_t closed_form_size(int n, int k) {
  if (n == 1) return static_cast<std::uint64_t>(k);
  std::uint64_t power = 1;
  for (int i = 0; i < k; ++i) power *= static_cast<std::uint64_t>(n);
  return static_cast<std::uint64_t>(n) * (power - 1) / static_cast<std::uint64_t>(n - 1);
}

// Plain backtracking in id order, no heuristics.
bool brute_color(const Graph& g, int c, Vertex v, std::vector<int>& colors) {
  if (v == g.order()) return true;
  for (int col = 0; col < c; ++col) {
    bool ok = true;
    for (Vertex w : g.neighbors(v))
      if (w < v && colors[w] == col) {
        ok = false;
        break;
      }
    if (!ok) continue;
    colors[v] = col;
    if (brute_color(g, c, v + 1, colors)) return true;
  }
  return false;
}

int brute_chromatic(const Graph& g) {
  std::vector<int> colors(g.order(), -1);
  for (int c = 0;; ++c)
    if (brute_color(g, c, 0, colors)) return c;
}

json verify_propgen(const VerifyOptions& o) {
  Tally tally("propgen");
  gen::Rng rng(o.seed);
  const int trials = o.trials > 0 ? o.trials : 200;
  std::uint64_t largest = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const int n = gen::uniform(rng, 1, o.gmax);
    const int k = gen::uniform(rng, 1, o.hmax);
    const Graph g = gen::random_graph(rng, n, 0.5);
    const Graph h = gen::random_graph(rng, k, 0.5);
    const OrderedGraph oh(h, gen::random_permutation(rng, k));
    const auto size = tree_product_size(n, k);
    if (size > 10'000) continue;
    const TreeProduct tp = tree_product(g, oh, o.size_limit);
    largest = std::max<std::uint64_t>(largest, tp.product.order());
    const auto instance = [&] {
      return json{{"g", graph_to_json(g)}, {"h", ordered_graph_to_json(oh)}};
    };
    const int omega = clique_number(tp.product);
    const int expected = clique_number(g) + clique_number(h) - 1;
    tally.check(omega == expected, [&] {
      auto j = instance();
      j["omega_product"] = omega;
      j["expected"] = expected;
      return j;
    });
    const auto order = static_cast<std::uint64_t>(tp.product.order());
    tally.check(order == closed_form_size(n, k) && order == size, [&] {
      auto j = instance();
      j["vertices"] = order;
      j["closed_form"] = closed_form_size(n, k);
      return j;
    });
    if (n >= 2) {
      std::uint64_t bound = 2;
      for (int i = 0; i < k; ++i) bound *= static_cast<std::uint64_t>(n);
      tally.check(order <= bound, [&] {
        auto j = instance();
        j["vertices"] = order;
        j["bound"] = bound;
        return j;
      });
    }
  }
  return tally.report({{"trials", trials}, {"largest_product", largest}});
}

json verify_propcolor(const VerifyOptions& o) {
  Tally tally("propcolor");
  gen::Rng rng(o.seed);
  const int trials = o.trials > 0 ? o.trials : 50;
  int upper_checks = 0, witness_checks = 0, exact_colorings = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const int p = gen::uniform(rng, 1, 2);
    const Graph h0 = gen::random_graph(rng, gen::uniform(rng, 1, 3), 0.6);
    const int n = gen::uniform(rng, std::max(p, 1), 4);
    Graph g = gen::random_graph(rng, n, 0.6);
    if (p == 2 && g.size() == 0) g = Graph(n, {{0, 1}});
    const int chi_g = chromatic_number(g).value();
    const int c = chromatic_number(h0).value();
    const Rational chif_h0 = fractional_chromatic(h0).value;
    const TreeProduct tp = tree_product(g, p_blowup(h0, p), o.size_limit);
    const Graph strong = strong_p_blowup(h0, p);
    const auto instance = [&] {
      return json{{"g", graph_to_json(g)}, {"h0", graph_to_json(h0)}, {"p", p}};
    };

    const Coloring upper = product_color_upper(tp, h0, p, c);
    ++upper_checks;
    tally.check(is_proper(tp.product, upper) && upper.distinct_colors() <= c * chi_g, [&] {
      auto j = instance();
      j["colors"] = upper.distinct_colors();
      j["budget"] = c * chi_g;
      j["proper"] = is_proper(tp.product, upper);
      return j;
    });

    std::vector<std::pair<std::string, Coloring>> phis{{"upper", upper}, {"dsatur", dsatur_coloring(tp.product)}};
    if (tp.product.order() <= 400) {
      const auto exact = chromatic_number(tp.product, SearchBudget::nodes(1'000'000));
      if (exact.exact()) {
        phis.emplace_back("exact", exact.coloring);
        ++exact_colorings;
      }
    }
    for (const auto& [kind, phi] : phis) {
      ++witness_checks;
      Coloring psi;
      try {
        psi = extract_blowup_witness(tp, phi, h0, p);
      } catch (const ExtractionStuck& e) {
        tally.check(false, [&] {
          auto j = instance();
          j["phi"] = kind;
          j["error"] = e.what();
          return j;
        });
        continue;
      }
      const bool proper = is_proper(strong, psi);
      const bool enough = Rational(psi.distinct_colors()) >= Rational(p) * chif_h0;
      tally.check(proper && enough, [&] {
        auto j = instance();
        j["phi"] = kind;
        j["psi"] = coloring_to_json(psi);
        j["proper"] = proper;
        j["needed"] = rational_to_json(Rational(p) * chif_h0);
        return j;
      });
    }
  }
  return tally.report({{"trials", trials},
                       {"upper_checks", upper_checks},
                       {"witness_checks", witness_checks},
                       {"exact_colorings", exact_colorings}});
}

json verify_gap(const VerifyOptions& o) {
  if (o.g0.empty()) throw PreconditionError("verify gap needs --g0");
  Tally tally("gap");
  const Graph g0 = read_graph_file(o.g0);
  const GapReport r = reduction_gap_check(g0, o.k0, o.size_limit, SearchBudget::nodes(o.node_budget));
  json details{{"k0", r.k0},
               {"chi_g0", r.chi_g0},
               {"product_vertices", r.product_vertices},
               {"upper_colors", r.upper_colors},
               {"chi_lower", r.chi_lower},
               {"chi_upper", r.chi_upper},
               {"exact", r.exact_status == Verdict::yes},
               {"low_threshold", r.low_threshold},
               {"high_threshold", r.high_threshold},
               {"dichotomy", to_string(r.dichotomy)}};
  if (r.exact_status == Verdict::yes) details["chi"] = r.chi_lower;
  if (r.dichotomy == Verdict::inconclusive)
    tally.inconclusive(details);
  else
    tally.check(r.dichotomy == Verdict::yes, [&] { return details; });
  return tally.report(details);
}

json verify_gadget(const VerifyOptions& o) {
  Tally tally("gadget");
  const Graph r0 = grotzsch_graph();
  std::vector<Edge> edges;
  for (const Edge& e : r0.edges())
    if (e != kGadgetEdge) edges.push_back(e);
  const Graph r(r0.order(), edges);
  const auto colorings = all_colorings(r, 3);
  bool equal = !colorings.empty();
  for (const auto& c : colorings) equal = equal && c.colors[kGadgetEdge.u] == c.colors[kGadgetEdge.v];
  tally.check(equal, [&] { return json{{"gadget_colorings", colorings.size()}}; });

  std::vector<Graph> inputs;
  if (!o.input.empty()) {
    inputs.push_back(read_graph_file(o.input));
  } else {
    gen::Rng rng(o.seed);
    const int trials = o.trials > 0 ? o.trials : 20;
    for (int i = 0; i < trials; ++i) inputs.push_back(gen::random_planar(rng, gen::uniform(rng, 1, 8), 0.85));
  }
  int three_colorable = 0;
  for (const Graph& g1 : inputs) {
    const auto ex = gadget_expand(g1);
    const auto& g2 = ex.graph;
    const auto instance = [&] { return json{{"g1", graph_to_json(g1)}}; };
    tally.check(g2.order() == g1.order() + 10 * static_cast<int>(g1.size()), [&] {
      auto j = instance();
      j["g2_vertices"] = g2.order();
      return j;
    });
    tally.check(is_triangle_free(g2), [&] {
      auto j = instance();
      j["triangle"] = *find_triangle(g2);
      return j;
    });
    const auto d1 = try_k_colorable(g1, 3, SearchBudget::nodes(o.node_budget));
    const auto d2 = try_k_colorable(g2, 3, SearchBudget::nodes(o.node_budget));
    if (d1.verdict == Verdict::inconclusive || d2.verdict == Verdict::inconclusive) {
      tally.inconclusive(instance());
      continue;
    }
    if (d1.verdict == Verdict::yes) ++three_colorable;
    tally.check(d1.verdict == d2.verdict, [&] {
      auto j = instance();
      j["g1_3colorable"] = to_string(d1.verdict);
      j["g2_3colorable"] = to_string(d2.verdict);
      return j;
    });
  }
  return tally.report({{"gadget_colorings", colorings.size()},
                       {"inputs", inputs.size()},
                       {"three_colorable_inputs", three_colorable}});
}

json verify_td(const VerifyOptions& o) {
  Tally tally("td");
  gen::Rng rng(o.seed);
  const int trials = o.trials > 0 ? o.trials : 100;
  int max_width = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const int n = gen::uniform(rng, 1, 10);
    const int k = gen::uniform(rng, 1, 4);
    const auto [g, td] = gen::random_partial_ktree(rng, n, k, 0.75);
    const auto instance = [&, &g = g, &td = td] { return json{{"graph", graph_to_json(g)}, {"td", td_to_json(td)}}; };
    tally.check(is_valid_td(g, td) && td.width() <= k, instance);
    max_width = std::max(max_width, td.width());
    const auto dp = chromatic_td(g, td);
    const int brute = brute_chromatic(g);
    tally.check(dp.chromatic_number == brute && is_proper(g, dp.coloring) &&
                    dp.coloring.distinct_colors() == dp.chromatic_number,
                [&] {
                  auto j = instance();
                  j["dp"] = dp.chromatic_number;
                  j["brute_force"] = brute;
                  return j;
                });
  }
  return tally.report({{"trials", trials}, {"max_width", max_width}});
}

json verify_lemma_color(const VerifyOptions& o) {
  Tally tally("lemma-color");
  gen::Rng rng(o.seed);
  const int trials = o.trials > 0 ? o.trials : 50;
  std::map<std::string, int> colors_max;
  int worst_margin = -1;
  int max_bag = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const int t = gen::uniform(rng, 1, 4);
    const int a = gen::uniform(rng, 1, 3);
    const bool tf = trial % 2 == 0;
    const auto [g, td] = gen::random_restricted(rng, t, a, gen::uniform(rng, 1, 6), 6, 12, tf);
    max_bag = std::max(max_bag, td.width() + 1);
    std::vector<ColorMode> modes{ColorMode::apex, ColorMode::degree};
    if (tf) modes.push_back(ColorMode::trianglefree);
    for (ColorMode mode : modes) {
      const auto instance = [&, &g = g, &td = td] {
        return json{{"graph", graph_to_json(g)}, {"td", td_to_json(td)}, {"t", t}, {"a", a}, {"mode", to_string(mode)}};
      };
      try {
        const auto rc = restricted_color(g, td, t, a, mode);
        const int budget = mode == ColorMode::apex ? t + 3 : mode == ColorMode::degree ? a + 4 : trianglefree_palette(t);
        const bool ok = is_proper(g, rc.coloring) && rc.palette == budget &&
                        (g.order() == 0 || rc.coloring.max_color() < budget) && rc.worst_margin >= 0;
        tally.check(ok, [&] {
          auto j = instance();
          j["coloring"] = coloring_to_json(rc.coloring);
          j["palette"] = rc.palette;
          return j;
        });
        auto& m = colors_max[to_string(mode)];
        m = std::max(m, rc.colors_used);
        if (mode == ColorMode::trianglefree)
          worst_margin = worst_margin < 0 ? rc.worst_margin : std::min(worst_margin, rc.worst_margin);
      } catch (const LemmaViolation& e) {
        tally.check(false, [&] {
          auto j = instance();
          j["error"] = e.what();
          return j;
        });
      }
    }
  }
  return tally.report({{"trials", trials},
                       {"max_colors_used", colors_max},
                       {"max_bag", max_bag},
                       {"trianglefree_worst_margin", worst_margin}});
}

json verify_lemma_remove(const VerifyOptions& o) {
  if (o.fixture.empty()) throw PreconditionError("verify lemma-remove needs --fixture");
  Tally tally("lemma-remove");
  const auto inst = removal_instance_from_json(read_json_file(o.fixture));
  const RemovalAudit audit = lemma_remove(inst.g0, inst.vortices, inst.a);
  json details = removal_audit_to_json(audit);
  tally.check(audit.residual_planar, [&] { return details; });
  tally.check(audit.within_bound, [&] { return details; });
  if (audit.genus == 0 && inst.vortices.empty()) tally.check(audit.removed.empty(), [&] { return details; });
  if (audit.genus > 0) {
    const auto f = one_face_subgraph(inst.g0);
    const auto faces = trace_faces(f.embedding).size();
    details["one_face"] = {{"vertices", f.vertices.size()}, {"edges", f.edges.size()}, {"genus", f.genus}, {"faces", faces}};
    tally.check(faces == 1 && f.edges.size() + 1 == f.vertices.size() + static_cast<std::size_t>(audit.genus),
                [&] { return details["one_face"]; });
  }
  return tally.report(details);
}

json verify_hm(const VerifyOptions& o) {
  Tally tally("hm");
  gen::Rng rng(o.seed);
  const int trials = o.trials > 0 ? o.trials : 100;
  std::size_t edges = 0;
  for (int trial = 0; trial < trials; ++trial) {
    HmParams params;
    params.m = gen::uniform(rng, 1, 4);
    params.n = gen::uniform(rng, 1, 8);
    params.p = std::uniform_real_distribution<double>(0.3, 0.95)(rng);
    params.seed = o.seed + static_cast<std::uint64_t>(trial);
    params.intra_first = trial % 2 == 1;
    const auto instance = [&] {
      return json{{"m", params.m}, {"n", params.n}, {"p", params.p}, {"seed", params.seed}, {"intra_first", params.intra_first}};
    };
    const HmResult r = build_hm(params);
    edges += r.graph.size();
    tally.check(!find_triangle(r.graph).has_value(), instance);
    bool parts_ok = true;
    for (const Edge& e : r.graph.edges()) parts_ok = parts_ok && r.parts[e.u] != r.parts[e.v];
    tally.check(parts_ok && is_proper(r.graph, r.part_coloring) && r.part_coloring.max_color() < params.m, instance);
    const HmResult replay = build_hm(params);
    tally.check(replay.graph == r.graph && replay.parts == r.parts, instance);
  }
  return tally.report({{"trials", trials}, {"total_edges", edges}});
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"propgen", "propcolor", "gap", "gadget", "td", "lemma-color", "lemma-remove", "hm"};
  return names;
}

json run_verify(const std::string& suite, const VerifyOptions& options) {
  if (suite == "propgen") return verify_propgen(options);
  if (suite == "propcolor") return verify_propcolor(options);
  if (suite == "gap") return verify_gap(options);
  if (suite == "gadget") return verify_gadget(options);
  if (suite == "td") return verify_td(options);
  if (suite == "lemma-color") return verify_lemma_color(options);
  if (suite == "lemma-remove") return verify_lemma_remove(options);
  if (suite == "hm") return verify_hm(options);
  throw PreconditionError("unknown suite " + suite);
}

}  // namespace minorcolor
