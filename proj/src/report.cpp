#include "assur/report.hpp"

#include "assur/error.hpp"

namespace assur {

using nlohmann::json;

AnalyzeResult analyze(const PinnedGraph& g, const AnalyzeOptions& opt) {
  AnalyzeResult res;
  json& rep = res.report;
  rep["format"] = kFormatTag;
  rep["graph"] = {{"dimension", g.dimension()},
                  {"inner_count", g.inner_count()},
                  {"pin_count", static_cast<int>(g.pinned().size())},
                  {"edge_count", g.edge_count()}};

  res.violations = validate(g);
  rep["violations"] = violations_to_json(res.violations);
  if (!res.violations.empty()) return res;
  res.valid = true;

  // counts
  json counts;
  counts["top_count"] = top_count(g);
  bool counts_pass = top_count(g);
  if (g.inner_count() <= opt.counts_cap) {
    auto vs = subgraph_counts_bruteforce(g, opt.counts_cap);
    counts["subgraph_violations"] = count_violations_to_json(vs);
    counts["subgraph_scan_skipped"] = false;
    counts_pass = counts_pass && vs.empty();
  } else {
    counts["subgraph_scan_skipped"] = true;
  }
  if (g.dimension() == 2) {
    counts["pinned_laman"] = pinned_laman_check_2d(g);
    counts_pass = counts["pinned_laman"].get<bool>();
  }
  counts["pass"] = counts_pass;
  rep["counts"] = counts;

  // orientation and decomposition
  OrientationResult orr = find_d_orientation(g);
  std::optional<Decomposition> decomp;
  if (orr.ok()) {
    rep["orientation"] = orientation_to_json(*orr.orientation);
    decomp = scc_decompose(g, *orr.orientation);
    rep["decomposition"] = decomposition_to_json(g, *decomp);
  } else {
    rep["orientation"] = {{"infeasible_witness", orr.infeasible_witness}};
  }

  // rank
  IsostaticCertificate cert = is_pinned_isostatic(g, opt.seed);
  json rank;
  rank["generic_rank"] = cert.isostatic ? cert.expected_rank
                                        : generic_rank(g, opt.trials, opt.seed);
  rank["expected"] = cert.expected_rank;
  rank["isostatic"] = cert.isostatic;
  if (cert.isostatic) {
    rank["certificate"] = {{"witness_seed", cert.witness_seed},
                           {"prime", cert.prime},
                           {"det_mod_p", cert.det_mod_p}};
  } else {
    rank["deficit"] = cert.expected_rank - rank["generic_rank"].get<int>();
  }
  rep["rank"] = rank;

  // three-route cross-check on isostatic graphs
  if (cert.isostatic && decomp) {
    Configuration cfg =
        sample_generic_configuration(g, mix_seed(opt.seed, 0xb7f), ScalarMode::prime_field);
    BlockTriangularView btv = block_triangular_verify(g, cfg, *decomp);
    rep["block_triangular"] = {{"ok", btv.ok},
                               {"upper_blocks_zero", btv.upper_blocks_zero},
                               {"blocks_square", btv.blocks_square},
                               {"det_matches_product", btv.det_matches_product},
                               {"diagonal_blocks", static_cast<int>(btv.block_row_counts.size())}};
    json routes;
    const int scc_count = static_cast<int>(decomp->components.size());
    routes["scc_components"] = scc_count;
    auto btf = btf_block_count(g, cfg);
    routes["btf_blocks"] = btf ? json(*btf) : json();
    bool agree = btf && *btf == scc_count && btv.ok;
    if (g.inner_count() <= opt.route1_cap) {
      int minimal = static_cast<int>(assur_decompose_minimal(g, opt.seed, opt.route1_cap).size());
      routes["minimal_components"] = minimal;
      agree = agree && minimal == scc_count;
    }
    routes["agree"] = agree;
    rep["routes"] = routes;
    if (!agree) res.route_disagreement = true;
  }

  // per-component verdicts
  if (decomp) {
    json comps = json::array();
    for (size_t c = 0; c < decomp->components.size(); ++c) {
      PinnedGraph sub = component_subgraph(g, *decomp, static_cast<int>(c));
      json jc;
      jc["inner"] = decomp->components[c].inner_vertices;
      jc["edges"] = decomp->components[c].edges;
      IsostaticCertificate sub_cert = is_pinned_isostatic(sub, opt.seed);
      jc["isostatic"] = sub_cert.isostatic;
      if (sub.inner_count() <= opt.counts_cap)
        jc["counts_pass"] = top_count(sub) && subgraph_counts_bruteforce(sub, opt.counts_cap).empty();
      if (sub_cert.isostatic) {
        AssurVerdict v = classify_assur(sub, opt.seed, opt.with_strong, opt.route1_cap);
        jc["assur"] = v.is_assur;
        if (v.is_strongly_assur) jc["strongly_assur"] = *v.is_strongly_assur;
        if (!v.routes.agree()) res.route_disagreement = true;
        // every extended component of an isostatic graph is d-Assur
        if (cert.isostatic && !v.is_assur) res.route_disagreement = true;
      }
      comps.push_back(jc);
    }
    rep["components"] = comps;
  }

  if (opt.with_drivers && cert.isostatic)
    rep["drivers"] = drivers_to_json(classify_drivers(g, opt.seed, opt.trials));

  rep["consistent"] = !res.route_disagreement;
  return res;
}

}  // namespace assur
