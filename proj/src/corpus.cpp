#include "assur/corpus.hpp"

#include <array>

#include "assur/error.hpp"

namespace assur {

using nlohmann::json;

namespace {

PinnedGraph make_graph(int d, std::vector<VertexId> inner, std::vector<VertexId> pinned,
                       std::vector<std::array<std::string, 3>> edges) {
  std::vector<Edge> es;
  for (auto& e : edges) es.push_back({e[0], e[1], e[2]});
  return PinnedGraph(d, std::move(inner), std::move(pinned), std::move(es));
}

CorpusInstance build(const std::string& name) {
  if (name == "dyad2") {
    return {name,
            "Minimal 2D pinned isostatic graph: one inner vertex on two pins.",
            make_graph(2, {"V"}, {"P1", "P2"}, {{"e1", "V", "P1"}, {"e2", "V", "P2"}}),
            json{{"isostatic", true},
                 {"counts_pass", true},
                 {"components", 1},
                 {"assur", true},
                 {"strongly_assur", true},
                 {"rank_deficit", 0}}};
  }
  if (name == "triad2") {
    return {name,
            "2D triad: inner triangle, one ground edge per vertex.",
            make_graph(2, {"A", "B", "C"}, {"P1", "P2", "P3"},
                       {{"e1", "A", "B"},
                        {"e2", "B", "C"},
                        {"e3", "C", "A"},
                        {"e4", "A", "P1"},
                        {"e5", "B", "P2"},
                        {"e6", "C", "P3"}}),
            json{{"isostatic", true},
                 {"counts_pass", true},
                 {"components", 1},
                 {"assur", true},
                 {"strongly_assur", true},
                 {"rank_deficit", 0}}};
  }
  if (name == "stacked_dyads") {
    return {name,
            "Two dyads in a chain; decomposes into two components.",
            make_graph(2, {"V1", "V2"}, {"P1", "P2", "P3"},
                       {{"e1", "V1", "P1"},
                        {"e2", "V1", "P2"},
                        {"e3", "V2", "V1"},
                        {"e4", "V2", "P3"}}),
            json{{"isostatic", true},
                 {"counts_pass", true},
                 {"components", 2},
                 {"assur", false},
                 {"rank_deficit", 0}}};
  }
  if (name == "multi_component_linkage") {
    return {name,
            "2D multi-component linkage: a chain of three components plus an "
            "incomparable four-vertex component attached only to ground.",
            make_graph(2, {"A", "B", "C", "D", "E", "G", "H", "I", "J"},
                       {"P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9"},
                       {{"a1", "A", "P1"},
                        {"a2", "A", "P2"},
                        {"b1", "B", "A"},
                        {"b2", "B", "P3"},
                        {"c1", "C", "D"},
                        {"c2", "D", "E"},
                        {"c3", "E", "C"},
                        {"c4", "C", "B"},
                        {"c5", "D", "P4"},
                        {"c6", "E", "P5"},
                        {"q1", "G", "H"},
                        {"q2", "H", "I"},
                        {"q3", "I", "J"},
                        {"q4", "J", "G"},
                        {"q5", "G", "P6"},
                        {"q6", "H", "P7"},
                        {"q7", "I", "P8"},
                        {"q8", "J", "P9"}}),
            json{{"isostatic", true},
                 {"counts_pass", true},
                 {"components", 4},
                 {"assur", false},
                 {"linear_extension_count", 4},
                 {"rank_deficit", 0}}};
  }
  if (name == "overcounted_2d") {
    return {name,
            "2-directed and indecomposable but not 2-isostatic: a K4 on inner "
            "vertices is overcounted.",
            make_graph(2, {"U", "V", "W", "X"}, {"P1", "P2"},
                       {{"k1", "U", "V"},
                        {"k2", "U", "W"},
                        {"k3", "U", "X"},
                        {"k4", "V", "W"},
                        {"k5", "V", "X"},
                        {"k6", "W", "X"},
                        {"g1", "U", "P1"},
                        {"g2", "V", "P2"}}),
            json{{"isostatic", false},
                 {"counts_pass", false},
                 {"count_violations", 1},
                 {"orientable", true},
                 {"components", 1},
                 {"rank_deficit", 1}}};
  }
  if (name == "triplet3d") {
    return {name,
            "Minimal 3D pinned isostatic graph: one inner vertex on three pins.",
            make_graph(3, {"V"}, {"P1", "P2", "P3"},
                       {{"e1", "V", "P1"}, {"e2", "V", "P2"}, {"e3", "V", "P3"}}),
            json{{"isostatic", true},
                 {"counts_pass", true},
                 {"components", 1},
                 {"assur", true},
                 {"strongly_assur", true},
                 {"rank_deficit", 0}}};
  }
  if (name == "octahedron3d") {
    return {name,
            "Octahedron with one face pinned: strongly 3-Assur, removal of any "
            "edge moves all inner vertices.",
            make_graph(3, {"U", "V", "W"}, {"P1", "P2", "P3"},
                       {{"t1", "U", "V"},
                        {"t2", "V", "W"},
                        {"t3", "W", "U"},
                        {"g1", "U", "P1"},
                        {"g2", "U", "P2"},
                        {"g3", "V", "P2"},
                        {"g4", "V", "P3"},
                        {"g5", "W", "P3"},
                        {"g6", "W", "P1"}}),
            json{{"isostatic", true},
                 {"counts_pass", true},
                 {"components", 1},
                 {"assur", true},
                 {"strongly_assur", true},
                 {"rank_deficit", 0}}};
  }
  if (name == "weak3assur") {
    return {name,
            "3-Assur but not strongly 3-Assur: a banana between A and the pin Q "
            "holds A through an implied edge, so removing a payload ground edge "
            "leaves A at rest.",
            make_graph(3, {"A", "B", "C", "D", "E"}, {"P1", "P2", "P3", "P4", "Q"},
                       {{"b1", "A", "B"},
                        {"b2", "A", "C"},
                        {"b3", "A", "D"},
                        {"b4", "B", "Q"},
                        {"b5", "C", "Q"},
                        {"b6", "D", "Q"},
                        {"b7", "B", "C"},
                        {"b8", "C", "D"},
                        {"b9", "B", "D"},
                        {"a1", "A", "P1"},
                        {"a2", "A", "P2"},
                        {"e1", "E", "B"},
                        {"e2", "E", "C"},
                        {"e3", "E", "P3"},
                        {"e4", "E", "P4"}}),
            json{{"isostatic", true},
                 {"counts_pass", true},
                 {"components", 1},
                 {"assur", true},
                 {"strongly_assur", false},
                 {"weak_driver", "e3"},
                 {"weak_moving_set", {"B", "C", "D", "E"}},
                 {"rank_deficit", 0}}};
  }
  if (name == "vertex_removal_3d") {
    return {name,
            "3-Assur graph where removing vertex E sets B, C, D in motion while "
            "A stays pinned to the ground through the banana.",
            make_graph(3, {"A", "B", "C", "D", "E"}, {"P1", "P2", "P3", "P4", "Q"},
                       {{"b1", "A", "B"},
                        {"b2", "A", "C"},
                        {"b3", "A", "D"},
                        {"b4", "B", "Q"},
                        {"b5", "C", "Q"},
                        {"b6", "D", "Q"},
                        {"b7", "B", "C"},
                        {"b8", "C", "D"},
                        {"b9", "B", "D"},
                        {"a1", "A", "P1"},
                        {"a2", "A", "P2"},
                        {"e1", "E", "B"},
                        {"e2", "E", "D"},
                        {"e3", "E", "P3"},
                        {"e4", "E", "P4"}}),
            json{{"isostatic", true},
                 {"counts_pass", true},
                 {"components", 1},
                 {"assur", true},
                 {"removed_vertex", "E"},
                 {"vertex_removal_moving_set", {"B", "C", "D"}},
                 {"rank_deficit", 0}}};
  }
  if (name == "banana_decomposable") {
    return {name,
            "3-directed and decomposable, but the top extended component (a "
            "banana interior over two grounded apexes) fails the pinned "
            "3-counts and is not isostatic.",
            make_graph(3, {"A", "B", "X1", "Y1", "Z1"}, {"X2", "Y2", "Z2"},
                       {{"k1", "A", "X1"},
                        {"k2", "A", "Y1"},
                        {"k3", "A", "Z1"},
                        {"k4", "B", "X1"},
                        {"k5", "B", "Y1"},
                        {"k6", "B", "Z1"},
                        {"k7", "X1", "Y1"},
                        {"k8", "Y1", "Z1"},
                        {"k9", "Z1", "X1"},
                        {"t1", "A", "X2"},
                        {"t2", "A", "Y2"},
                        {"t3", "A", "Z2"},
                        {"t4", "B", "X2"},
                        {"t5", "B", "Y2"},
                        {"t6", "B", "Z2"}}),
            json{{"isostatic", false},
                 {"counts_pass", true},
                 {"orientable", true},
                 {"components", 3},
                 {"bad_component_inner", {"X1", "Y1", "Z1"}},
                 {"rank_deficit", 1}}};
  }
  if (name == "double_banana_pinned") {
    return {name,
            "Pinned double banana: satisfies every necessary pinned 3-count and "
            "is indecomposable, yet the rigidity matrix drops rank.",
            make_graph(3, {"A", "B", "X1", "X2", "Y1", "Y2", "Z1", "Z2"},
                       {"P1", "P2", "P3"},
                       {{"b11", "A", "X1"},
                        {"b12", "A", "Y1"},
                        {"b13", "A", "Z1"},
                        {"b14", "B", "X1"},
                        {"b15", "B", "Y1"},
                        {"b16", "B", "Z1"},
                        {"b17", "X1", "Y1"},
                        {"b18", "Y1", "Z1"},
                        {"b19", "Z1", "X1"},
                        {"b21", "A", "X2"},
                        {"b22", "A", "Y2"},
                        {"b23", "A", "Z2"},
                        {"b24", "B", "X2"},
                        {"b25", "B", "Y2"},
                        {"b26", "B", "Z2"},
                        {"b27", "X2", "Y2"},
                        {"b28", "Y2", "Z2"},
                        {"b29", "Z2", "X2"},
                        {"g1", "X1", "P1"},
                        {"g2", "Y1", "P2"},
                        {"g3", "Z1", "P3"},
                        {"g4", "X2", "P1"},
                        {"g5", "Y2", "P2"},
                        {"g6", "Z2", "P3"}}),
            json{{"isostatic", false},
                 {"counts_pass", true},
                 {"orientable", true},
                 {"components", 1},
                 {"rank_deficit", 1}}};
  }
  raise(Errc::unknown_instance, name);
}

}  // namespace

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{
      "dyad2",        "triad2",           "stacked_dyads",     "multi_component_linkage",
      "overcounted_2d", "triplet3d",      "octahedron3d",      "weak3assur",
      "vertex_removal_3d", "banana_decomposable", "double_banana_pinned"};
  return names;
}

CorpusInstance corpus_instance(const std::string& name) { return build(name); }

std::vector<CorpusInstance> corpus_all() {
  std::vector<CorpusInstance> out;
  for (const auto& n : corpus_names()) out.push_back(build(n));
  return out;
}

}  // namespace assur
