#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "assur/corpus.hpp"
#include "assur/error.hpp"
#include "assur/report.hpp"

using namespace assur;
using nlohmann::json;

TEST_CASE("graph JSON round trip is byte identical") {
  for (const auto& inst : corpus_all()) {
    json j = graph_to_json(inst.graph);
    std::string first = canonical_dump(j);
    GraphFile back = graph_from_json(json::parse(first));
    std::string second = canonical_dump(graph_to_json(back.graph));
    CHECK(first == second);
  }
}

TEST_CASE("coordinates survive the round trip") {
  PinnedGraph g = corpus_instance("dyad2").graph;
  std::map<VertexId, std::vector<double>> coords{
      {"V", {0.5, 1.25}}, {"P1", {1, 0}}, {"P2", {0, 1}}};
  json j = graph_to_json(g, &coords);
  GraphFile back = graph_from_json(j);
  CHECK(back.coordinates == coords);
  // exact dyadic conversion
  Configuration cfg = configuration_from_doubles(g, back.coordinates,
                                                 ScalarMode::exact_rational);
  CHECK(cfg.at("V")[0] == Rat(1, 2));
  CHECK(cfg.at("V")[1] == Rat(5, 4));
}

TEST_CASE("partial coordinates are rejected") {
  PinnedGraph g = corpus_instance("dyad2").graph;
  std::map<VertexId, std::vector<double>> partial{{"V", {0, 0}}};
  CHECK_THROWS_AS(configuration_from_doubles(g, partial, ScalarMode::exact_rational),
                  Error);
}

TEST_CASE("format tag is checked") {
  json j = graph_to_json(corpus_instance("dyad2").graph);
  j["format"] = "assur-kit/999";
  CHECK_THROWS_AS(graph_from_json(j), Error);
}

TEST_CASE("missing fields are parse errors") {
  CHECK_THROWS_AS(graph_from_json(json{{"dimension", 2}}), Error);
}

TEST_CASE("pin-pin edges can be dropped on request") {
  json j = graph_to_json(PinnedGraph(
      2, {"v"}, {"p1", "p2"}, {{"e1", "v", "p1"}, {"e2", "v", "p2"}, {"pp", "p1", "p2"}}));
  GraphFile strict = graph_from_json(j, false);
  CHECK(validate(strict.graph).size() == 1);
  GraphFile lenient = graph_from_json(j, true);
  CHECK(validate(lenient.graph).empty());
  REQUIRE(lenient.dropped_pin_pin.size() == 1);
  CHECK(lenient.dropped_pin_pin[0].id == "pp");
}

TEST_CASE("orientation serialization round trips") {
  PinnedGraph g = corpus_instance("triad2").graph;
  auto r = find_d_orientation(g);
  REQUIRE(r.ok());
  json j = orientation_to_json(*r.orientation);
  CHECK(orientation_from_json(j).tails() == r.orientation->tails());
}

TEST_CASE("corpus names cover the documented families") {
  const auto& names = corpus_names();
  CHECK(names.size() >= 9);
  for (const char* needed : {"dyad2", "triad2", "double_banana_pinned", "octahedron3d",
                             "weak3assur", "banana_decomposable", "vertex_removal_3d"})
    CHECK(std::find(names.begin(), names.end(), needed) != names.end());
  CHECK_THROWS_AS(corpus_instance("no_such_instance"), Error);
}

TEST_CASE("analyze reproduces every corpus sidecar") {
  for (const auto& inst : corpus_all()) {
    CAPTURE(inst.name);
    AnalyzeOptions opt;
    opt.seed = 0;
    AnalyzeResult res = analyze(inst.graph, opt);
    REQUIRE(res.valid);
    CHECK(!res.route_disagreement);
    const json& rep = res.report;
    const json& exp = inst.expected;

    CHECK(rep["rank"]["isostatic"].get<bool>() == exp["isostatic"].get<bool>());
    CHECK(rep["counts"]["pass"].get<bool>() == exp["counts_pass"].get<bool>());
    if (exp.contains("components"))
      CHECK(rep["decomposition"]["components"].size() == exp["components"].get<size_t>());
    if (exp.contains("rank_deficit")) {
      int deficit = rep["rank"]["expected"].get<int>() -
                    rep["rank"]["generic_rank"].get<int>();
      CHECK(deficit == exp["rank_deficit"].get<int>());
    }
    if (exp.contains("count_violations"))
      CHECK(rep["counts"]["subgraph_violations"].size() ==
            exp["count_violations"].get<size_t>());
    if (exp["isostatic"].get<bool>()) {
      // whole-graph Assur verdict equals "single component"
      bool assur = rep["decomposition"]["components"].size() == 1;
      if (exp.contains("assur")) CHECK(assur == exp["assur"].get<bool>());
      if (exp.contains("strongly_assur") && assur) {
        const json& comp = rep["components"][0];
        CHECK(comp["strongly_assur"].get<bool>() == exp["strongly_assur"].get<bool>());
      }
    }
    if (exp.contains("bad_component_inner")) {
      bool found = false;
      for (const auto& comp : rep["components"])
        if (comp["inner"] == exp["bad_component_inner"] &&
            !comp["isostatic"].get<bool>())
          found = true;
      CHECK(found);
    }
    if (exp.contains("weak_driver")) {
      bool found = false;
      for (const auto& drv : rep["drivers"]["drivers"])
        if (drv["edge"] == exp["weak_driver"] && !drv["regular"].get<bool>() &&
            drv["moving_set"] == exp["weak_moving_set"])
          found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("analyze flags invalid graphs instead of running") {
  PinnedGraph bad(2, {"v"}, {"p1", "p2"},
                  {{"e1", "v", "p1"}, {"e2", "v", "p2"}, {"pp", "p1", "p2"}});
  AnalyzeResult res = analyze(bad, {});
  CHECK(!res.valid);
  CHECK(res.report["violations"].size() == 1);
}
