// knotwork — build, transform, analyze and check diagrams of knots and
// theta-like spatial graphs.
//
// Exit codes: 0 when everything passed, 1 when a verification verdict is
// "fail", 2 on usage errors or invalid inputs.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knotwork/constructors.hpp"
#include "knotwork/gamma.hpp"
#include "knotwork/gauss.hpp"
#include "knotwork/invariants.hpp"
#include "knotwork/moves.hpp"
#include "knotwork/sgd_io.hpp"
#include "knotwork/svg.hpp"
#include "knotwork/verify.hpp"

using namespace knotwork;

namespace {

// --k1/--k2 accept knot table names or .sgd paths. Build inputs must be
// knot diagrams; analysis inputs may be any diagram.
SpatialDiagram load_any(const std::string& text) {
  if (const TableEntry* e = KnotTable::instance().find(text)) {
    return e->diagram;
  }
  if (std::filesystem::exists(text)) return load_sgd(text);
  throw Error("unknown input '" + text +
              "' (expected a table name or an .sgd path)");
}

void emit(const SpatialDiagram& d, const std::string& out) {
  if (out.empty()) {
    std::cout << to_sgd(d);
  } else {
    save_sgd(d, out);
    std::cout << "wrote " << out << ": crossings " << d.crossings.size()
              << " nodes " << d.nodes.size() << " arcs " << d.arcs.size()
              << "\n";
  }
}

int run_verify(const std::vector<InequalityReport>& reports) {
  std::cout << render_reports(reports);
  return all_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "diagrams of knots and 2n-theta-curves: constructions, moves and "
      "crossing-count checks"};
  app.require_subcommand(1);

  std::string k1, k2, out, input;
  int n = 2, k = 1, i = 1;
  long long budget = 20000;
  int depth = 2;
  std::uint64_t seed = 1;

  const auto add_pair = [&](CLI::App* cmd, bool need_k2 = true) {
    cmd->add_option("--k1", k1, "first knot: table name or .sgd path")
        ->required();
    auto* opt = cmd->add_option("--k2", k2, "second knot");
    if (need_k2) opt->required();
  };

  // ---- build ----------------------------------------------------------
  auto* build = app.add_subcommand("build", "construct a diagram");
  build->require_subcommand(1);
  auto* b_sum = build->add_subcommand("sum", "connected sum k1 # k2");
  auto* b_theta = build->add_subcommand("theta", "theta-curve of (k1, k2)");
  auto* b_thetan =
      build->add_subcommand("theta-n", "2n-theta-curve of (k1, k2)");
  auto* b_double = build->add_subcommand(
      "double", "n parallel copies of k1 # k2 (or of k1 alone) joined at two "
                "nodes");
  auto* b_oplus = build->add_subcommand("oplus", "ladder of (k1, k2)");
  auto* b_grid =
      build->add_subcommand("G", "ladder with the i-th wall deleted");
  for (CLI::App* cmd : {b_sum, b_theta, b_thetan, b_double, b_oplus, b_grid}) {
    add_pair(cmd, cmd != b_double);
    cmd->add_option("-o", out, "output .sgd path (stdout when omitted)");
  }
  for (CLI::App* cmd : {b_thetan, b_double, b_oplus, b_grid}) {
    cmd->add_option("--n", n, "number of strand copies")->required();
  }
  for (CLI::App* cmd : {b_oplus, b_grid}) {
    cmd->add_option("--k", k, "number of vertical walls")->required();
  }
  b_grid->add_option("--i", i, "wall to delete (1-based)")->required();

  // ---- analyze --------------------------------------------------------
  auto* analyze = app.add_subcommand("analyze", "inspect a diagram");
  analyze->require_subcommand(1);
  auto* a_matrix =
      analyze->add_subcommand("matrix", "pairwise crossing counts by edge");
  auto* a_gamma =
      analyze->add_subcommand("gamma", "non-crossing graph of the edges");
  auto* a_faces = analyze->add_subcommand("faces", "face boundaries");
  auto* a_gauss = analyze->add_subcommand("gauss", "Gauss code of a knot");
  for (CLI::App* cmd : {a_matrix, a_gamma, a_faces, a_gauss}) {
    cmd->add_option("--k1", input, "diagram: table name or .sgd path")
        ->required();
  }

  // ---- verify ---------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "check crossing-count bounds");
  verify->require_subcommand(1);
  auto* v_eq1 = verify->add_subcommand(
      "eq1", "x/z crossings of a theta bound c(k1 # k2)");
  auto* v_ineq = verify->add_subcommand(
      "ineq", "twice the theta crossings bound the constituent sum");
  auto* v_thetan =
      verify->add_subcommand("theta-n", "2n-theta crossing bounds");
  auto* v_square =
      verify->add_subcommand("square", "doubled-diagram count and membership");
  auto* v_oplus =
      verify->add_subcommand("oplus", "ladder deletion and cut additivity");
  auto* v_all = verify->add_subcommand("all", "the whole suite");
  for (CLI::App* cmd : {v_eq1, v_ineq, v_thetan, v_square, v_oplus, v_all}) {
    add_pair(cmd);
  }
  for (CLI::App* cmd : {v_eq1, v_ineq, v_thetan}) {
    cmd->add_option("input", input,
                    "check this .sgd diagram instead of the built one");
  }
  for (CLI::App* cmd : {v_thetan, v_square, v_oplus, v_all}) {
    cmd->add_option("--n", n, "number of strand copies");
  }
  for (CLI::App* cmd : {v_oplus, v_all}) {
    cmd->add_option("--k", k, "number of vertical walls");
    cmd->add_option("--i", i, "wall to delete (1-based)");
  }

  // ---- transforms and reports ----------------------------------------
  auto* simplify_cmd =
      app.add_subcommand("simplify", "search for a low-crossing equivalent");
  simplify_cmd->add_option("--k1", input, "diagram: table name or .sgd path")
      ->required();
  simplify_cmd->add_option("--budget", budget, "states to explore");
  simplify_cmd->add_option("--depth", depth,
                           "crossings above the start allowed");
  simplify_cmd->add_option("-o", out, "write the best diagram here");

  auto* resolve_cmd = app.add_subcommand(
      "resolve", "smooth the two nodes into a single knot strand");
  resolve_cmd->add_option("--k1", input, "diagram: table name or .sgd path")
      ->required();
  resolve_cmd->add_option("-o", out, "output .sgd path (stdout when omitted)");

  auto* identify_cmd =
      app.add_subcommand("identify", "name a knot from the built-in table");
  identify_cmd->add_option("--k1", input, "diagram: table name or .sgd path")
      ->required();

  auto* extremal_cmd = app.add_subcommand(
      "extremal", "max edges of a triangle-free two-colour graph");
  extremal_cmd->add_option("--n", n, "vertices per colour")->required();

  auto* svg_cmd = app.add_subcommand("export-svg", "draw a diagram");
  svg_cmd->add_option("--k1", input, "diagram: table name or .sgd path")
      ->required();
  svg_cmd->add_option("-o", out, "output .svg path (stdout when omitted)");

  auto* scramble_cmd = app.add_subcommand(
      "scramble", "apply random crossing-preserving-or-growing moves");
  scramble_cmd->add_option("--k1", input, "diagram: table name or .sgd path")
      ->required();
  scramble_cmd->add_option("--n", n, "number of moves");
  scramble_cmd->add_option("--seed", seed, "random seed");
  scramble_cmd->add_option("-o", out, "output .sgd path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    // build
    if (b_sum->parsed()) {
      emit(connected_sum(resolve_knot_spec({k1}), resolve_knot_spec({k2})),
           out);
    } else if (b_theta->parsed()) {
      emit(build_theta(resolve_knot_spec({k1}), resolve_knot_spec({k2})), out);
    } else if (b_thetan->parsed()) {
      emit(build_theta_n(n, resolve_knot_spec({k1}), resolve_knot_spec({k2})),
           out);
    } else if (b_double->parsed()) {
      SpatialDiagram base = resolve_knot_spec({k1});
      if (!k2.empty()) base = connected_sum(base, resolve_knot_spec({k2}));
      emit(double_diagram(base, n), out);
    } else if (b_oplus->parsed()) {
      emit(build_oplus(n, k, resolve_knot_spec({k1}), resolve_knot_spec({k2})),
           out);
    } else if (b_grid->parsed()) {
      emit(build_grid(n, k, i, resolve_knot_spec({k1}),
                      resolve_knot_spec({k2})),
           out);
    }

    // analyze
    if (a_matrix->parsed()) {
      const SpatialDiagram d = load_any(input);
      const auto matrix = crossing_matrix(d);
      const auto labels = edge_labels(d);
      for (std::size_t p = 0; p < labels.size(); ++p) {
        for (std::size_t q = p; q < labels.size(); ++q) {
          std::cout << labels[p].str() << " " << labels[q].str() << " "
                    << matrix.at(labels[p]).at(labels[q]) << "\n";
        }
      }
    } else if (a_gamma->parsed()) {
      const GammaGraph g = gamma(load_any(input));
      std::cout << "vertices";
      for (const EdgeLabel& v : g.vertices) std::cout << " " << v.str();
      std::cout << "\n";
      for (const auto& [a, b] : g.edges) {
        std::cout << "edge " << a.str() << " " << b.str() << "\n";
      }
      if (const auto tri = find_bicoloured_triangle(g)) {
        std::cout << "bicoloured-triangle " << (*tri)[0].str() << " "
                  << (*tri)[1].str() << " " << (*tri)[2].str() << "\n";
      } else {
        std::cout << "bicoloured-triangle none\n";
      }
    } else if (a_faces->parsed()) {
      const SpatialDiagram d = load_any(input);
      for (const auto& face : faces(d)) {
        std::cout << "face";
        for (HalfEdge h : face) std::cout << " " << h;
        std::cout << "\n";
      }
    } else if (a_gauss->parsed()) {
      std::cout << gauss_code(load_any(input)).str() << "\n";
    }

    // verify
    if (v_eq1->parsed()) {
      const SpatialDiagram d =
          input.empty()
              ? build_theta(resolve_knot_spec({k1}), resolve_knot_spec({k2}))
              : load_any(input);
      return run_verify(verify_eq1(d, k1, k2));
    }
    if (v_ineq->parsed()) {
      const SpatialDiagram d =
          input.empty()
              ? build_theta(resolve_knot_spec({k1}), resolve_knot_spec({k2}))
              : load_any(input);
      return run_verify(verify_ineq(d, k1, k2));
    }
    if (v_thetan->parsed()) {
      const SpatialDiagram d =
          input.empty() ? build_theta_n(n, resolve_knot_spec({k1}),
                                        resolve_knot_spec({k2}))
                        : load_any(input);
      return run_verify(verify_theta_n(d, k1, k2, n, input.empty()));
    }
    if (v_square->parsed()) return run_verify(verify_square(k1, k2, n));
    if (v_oplus->parsed()) return run_verify(verify_oplus(n, k, i, k1, k2));
    if (v_all->parsed()) return run_verify(verify_all(k1, k2, n, k, i));

    // transforms and reports
    if (simplify_cmd->parsed()) {
      const SpatialDiagram d = load_any(input);
      const SearchResult res = simplify(d, budget, depth);
      std::cout << "crossings " << d.crossings.size() << " -> "
                << res.best_crossings << "\n";
      std::cout << "explored " << res.explored << " exhausted "
                << (res.exhausted ? "yes" : "no") << "\n";
      for (const Move& m : res.trace) std::cout << "move " << m.str() << "\n";
      if (!out.empty()) save_sgd(res.best, out);
    } else if (resolve_cmd->parsed()) {
      emit(resolve_nodes(load_any(input)), out);
    } else if (identify_cmd->parsed()) {
      std::cout << identify(load_any(input)) << "\n";
    } else if (extremal_cmd->parsed()) {
      const ExtremalResult r = extremal_enumeration(n);
      std::cout << "max=" << r.max_edges << "\n" << extremal_report({r});
    } else if (svg_cmd->parsed()) {
      const SpatialDiagram d = load_any(input);
      if (out.empty()) {
        std::cout << to_svg(d);
      } else {
        save_svg(d, out);
        std::cout << "wrote " << out << "\n";
      }
    } else if (scramble_cmd->parsed()) {
      emit(scramble(load_any(input), n, seed), out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
