// Command line front end: analysis pipeline, decomposition exports, counts,
// rank/nullspace queries, driver classification and the bundled corpus.
//
// Exit codes: 0 success, 1 user/input error, 2 internal cross-check failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "assur/corpus.hpp"
#include "assur/error.hpp"
#include "assur/report.hpp"

namespace {

using assur::Errc;
using nlohmann::json;

struct GlobalFlags {
  uint64_t seed = 0;
  int trials = 3;
  double tol = 1e-9;
  // decisions default to exact arithmetic, emitted motions to float
  std::string mode;
  bool drop_pin_pin = false;
  int dimension = 0;  // 0 = take from file

  assur::ScalarMode motion_mode() const {
    return assur::scalar_mode_from_name(mode.empty() ? "float" : mode);
  }
};

assur::GraphFile load_input(const std::string& path, const GlobalFlags& flags) {
  assur::GraphFile gf = assur::load_graph_file(path, flags.drop_pin_pin);
  for (const auto& e : gf.dropped_pin_pin)
    std::cerr << "warning: dropped pin-pin edge " << e.id << " (" << e.u << "," << e.v
              << ")\n";
  if (flags.dimension != 0 && flags.dimension != gf.graph.dimension())
    assur::raise(Errc::wrong_dimension,
                 "--dimension does not match the input file");
  auto violations = assur::validate(gf.graph);
  if (!violations.empty()) {
    json j = assur::violations_to_json(violations);
    throw assur::Error(Errc::validation_failed, j.dump());
  }
  return gf;
}

assur::Configuration pick_configuration(const assur::PinnedGraph& g,
                                        const assur::GraphFile& gf,
                                        const GlobalFlags& flags,
                                        assur::ScalarMode mode) {
  if (!gf.coordinates.empty())
    return assur::configuration_from_doubles(g, gf.coordinates, mode);
  return assur::sample_generic_configuration(g, flags.seed, mode);
}

void emit(const json& j, const std::string& out_path) {
  std::string text = assur::canonical_dump(j);
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) assur::raise(Errc::parse_error, "cannot write " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Assur decomposition toolkit for pinned isostatic frameworks"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--seed", flags.seed, "random seed for configurations and primes");
  app.add_option("--trials", flags.trials, "independent generic configurations per decision");
  app.add_option("--tol", flags.tol, "relative tolerance of the float path");
  app.add_option("--mode", flags.mode, "scalar mode: exact (prime-field), rational, float");
  app.add_option("--dimension", flags.dimension, "assert the input dimension");
  app.add_flag("--drop-pin-pin", flags.drop_pin_pin,
               "drop pin-pin edges with a warning instead of rejecting them");

  std::string input, out_path, dump_matrix;
  bool no_drivers = false, no_strong = false, full_dot = false, rational_cert = false;
  std::string edge_id, vertex_id;
  double rate = 1.0;
  bool check_assur = false, check_strong = false;
  std::string corpus_action, corpus_name, corpus_dir = ".";

  auto* analyze = app.add_subcommand("analyze", "full pipeline report");
  analyze->add_option("input", input)->required();
  analyze->add_option("--out", out_path);
  analyze->add_option("--dump-matrix", dump_matrix, "write the rigidity matrix as CSV");
  analyze->add_flag("--no-drivers", no_drivers);
  analyze->add_flag("--no-strong", no_strong);

  auto* dot = app.add_subcommand("export-dot", "condensation DAG as DOT");
  dot->add_option("input", input)->required();
  dot->add_option("--out", out_path);
  dot->add_flag("--full", full_dot, "also emit the directed graph with clusters");

  auto* counts = app.add_subcommand("check-counts", "necessary pinned d-counts");
  counts->add_option("input", input)->required();
  counts->add_option("--out", out_path);

  auto* rank = app.add_subcommand("rank", "generic rank and isostatic certificate");
  rank->add_option("input", input)->required();
  rank->add_option("--out", out_path);
  rank->add_option("--dump-matrix", dump_matrix);
  rank->add_flag("--rational", rational_cert, "rational determinant certificate");

  auto* nullspace = app.add_subcommand("nullspace", "kernel of the rigidity matrix");
  nullspace->add_option("input", input)->required();
  nullspace->add_option("--out", out_path);

  auto* check = app.add_subcommand("check", "Assur classification of the whole graph");
  check->add_option("input", input)->required();
  check->add_option("--out", out_path);
  check->add_flag("--assur", check_assur);
  check->add_flag("--strong", check_strong);

  auto* drivers = app.add_subcommand("drivers", "driver classification per edge");
  drivers->add_option("input", input)->required();
  drivers->add_option("--out", out_path);

  auto* drive = app.add_subcommand("drive", "drive a bottom-component edge");
  drive->add_option("input", input)->required();
  drive->add_option("--edge", edge_id)->required();
  drive->add_option("--rate", rate);
  drive->add_option("--out", out_path);

  auto* corpus = app.add_subcommand("corpus", "bundled instance files");
  corpus->add_option("action", corpus_action, "list | emit")->required();
  corpus->add_option("name", corpus_name);
  corpus->add_option("--dir", corpus_dir);

  CLI11_PARSE(app, argc, argv);

  try {
    if (corpus->parsed()) {
      if (corpus_action == "list") {
        json j = json::array();
        for (const auto& n : assur::corpus_names()) {
          auto inst = assur::corpus_instance(n);
          j.push_back({{"name", inst.name}, {"description", inst.description}});
        }
        emit(j, out_path);
        return 0;
      }
      if (corpus_action == "emit") {
        if (corpus_name.empty()) assur::raise(Errc::unknown_instance, "(missing name)");
        auto inst = assur::corpus_instance(corpus_name);
        std::ofstream gf(corpus_dir + "/" + inst.name + ".json");
        gf << assur::canonical_dump(assur::graph_to_json(inst.graph));
        json side = inst.expected;
        side["name"] = inst.name;
        side["description"] = inst.description;
        std::ofstream sf(corpus_dir + "/" + inst.name + ".expected.json");
        sf << assur::canonical_dump(side);
        std::cout << corpus_dir + "/" + inst.name + ".json" << "\n";
        return 0;
      }
      assur::raise(Errc::parse_error, "corpus action must be list or emit");
    }

    assur::GraphFile gf = load_input(input, flags);
    const assur::PinnedGraph& g = gf.graph;

    if (analyze->parsed()) {
      assur::AnalyzeOptions opt;
      opt.seed = flags.seed;
      opt.trials = flags.trials;
      opt.tol = flags.tol;
      opt.with_drivers = !no_drivers;
      opt.with_strong = !no_strong;
      assur::AnalyzeResult res = assur::analyze(g, opt);
      if (!dump_matrix.empty()) {
        // permuted into the block-triangular order whenever a decomposition
        // exists, otherwise the raw assembly order
        auto cfg = pick_configuration(g, gf, flags, assur::ScalarMode::exact_rational);
        std::ofstream m(dump_matrix);
        auto orr = assur::find_d_orientation(g);
        if (orr.ok()) {
          auto decomp = assur::scc_decompose(g, *orr.orientation);
          auto view = assur::block_triangular_verify(g, cfg, decomp);
          m << assur::matrix_to_csv(view, g.dimension());
        } else {
          m << assur::matrix_to_csv(assur::build_matrix(g, cfg));
        }
      }
      emit(res.report, out_path);
      return res.route_disagreement ? 2 : 0;
    }

    if (dot->parsed()) {
      auto orr = assur::find_d_orientation(g);
      if (!orr.ok()) assur::raise(Errc::not_d_directed, "graph has no d-directed orientation");
      auto decomp = assur::scc_decompose(g, *orr.orientation);
      std::string text =
          assur::decomposition_to_dot(g, decomp, full_dot ? &*orr.orientation : nullptr);
      if (out_path.empty())
        std::cout << text;
      else {
        std::ofstream out(out_path);
        out << text;
      }
      return 0;
    }

    if (counts->parsed()) {
      json j;
      j["format"] = assur::kFormatTag;
      j["top_count"] = assur::top_count(g);
      auto vs = assur::subgraph_counts_bruteforce(g);
      j["subgraph_violations"] = assur::count_violations_to_json(vs);
      if (g.dimension() == 2) j["pinned_laman"] = assur::pinned_laman_check_2d(g);
      j["pass"] = assur::top_count(g) && vs.empty();
      emit(j, out_path);
      return 0;
    }

    if (rank->parsed()) {
      json j;
      j["format"] = assur::kFormatTag;
      auto cert = assur::is_pinned_isostatic(g, flags.seed, rational_cert);
      j["rows"] = g.edge_count();
      j["cols"] = g.dimension() * g.inner_count();
      j["generic_rank"] =
          cert.isostatic ? cert.rank : assur::generic_rank(g, flags.trials, flags.seed);
      j["isostatic"] = cert.isostatic;
      if (cert.isostatic) {
        j["certificate"] = {{"witness_seed", cert.witness_seed},
                            {"prime", cert.prime},
                            {"det_mod_p", cert.det_mod_p}};
        if (cert.det_rational)
          j["certificate"]["det_rational"] = assur::rat_to_string(*cert.det_rational);
      }
      if (!dump_matrix.empty()) {
        auto cfg = pick_configuration(g, gf, flags, assur::ScalarMode::prime_field);
        std::ofstream m(dump_matrix);
        m << assur::matrix_to_csv(assur::build_matrix(g, cfg));
      }
      emit(j, out_path);
      return 0;
    }

    if (nullspace->parsed()) {
      auto mode = flags.motion_mode();
      auto cfg = pick_configuration(g, gf, flags, mode);
      json j;
      j["format"] = assur::kFormatTag;
      if (mode == assur::ScalarMode::float64) {
        json basis = json::array();
        for (const auto& m : assur::nullspace_float(g, cfg, flags.tol))
          basis.push_back(assur::motion_to_json(m));
        j["basis"] = basis;
      } else {
        json basis = json::array();
        for (const auto& m : assur::nullspace_exact(g, cfg))
          basis.push_back(assur::motion_to_json(m));
        j["basis"] = basis;
      }
      j["dimension"] = j["basis"].size();
      emit(j, out_path);
      return 0;
    }

    if (check->parsed()) {
      const bool with_strong = check_strong || !check_assur;
      auto v = assur::classify_assur(g, flags.seed, with_strong);
      json j = assur::verdict_to_json(v);
      j["format"] = assur::kFormatTag;
      emit(j, out_path);
      return v.is_isostatic && !v.routes.agree() ? 2 : 0;
    }

    if (drivers->parsed()) {
      auto rep = assur::classify_drivers(g, flags.seed, flags.trials);
      if (rep.trials_disagree)
        std::cerr << "warning: kernel trials disagreed; moving sets are unions\n";
      json j = assur::drivers_to_json(rep);
      j["format"] = assur::kFormatTag;
      emit(j, out_path);
      return 0;
    }

    if (drive->parsed()) {
      auto orr = assur::find_d_orientation(g);
      if (!orr.ok()) assur::raise(Errc::not_isostatic, "graph has no d-directed orientation");
      auto decomp = assur::scc_decompose(g, *orr.orientation);
      auto mode = flags.motion_mode();
      auto cfg = pick_configuration(
          g, gf, flags,
          mode == assur::ScalarMode::float64 ? assur::ScalarMode::float64
                                             : assur::ScalarMode::exact_rational);
      assur::Rat rrate(rate);
      auto motion = assur::drive_propagate(g, decomp, cfg, edge_id, rrate);
      json j;
      j["format"] = assur::kFormatTag;
      j["edge"] = edge_id;
      j["rate"] = rate;
      if (mode == assur::ScalarMode::float64) {
        assur::MotionF mf;
        for (const auto& [v, vel] : motion) {
          std::vector<double> w(vel.size());
          for (size_t c = 0; c < vel.size(); ++c) w[c] = assur::rat_to_double(vel[c]);
          mf[v] = std::move(w);
        }
        j["motion"] = assur::motion_to_json(mf);
      } else {
        j["motion"] = assur::motion_to_json(motion);
      }
      emit(j, out_path);
      return 0;
    }
  } catch (const assur::Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return ex.code() == Errc::internal_check_failed ? 2 : 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
