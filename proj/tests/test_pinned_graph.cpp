#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "assur/corpus.hpp"
#include "assur/error.hpp"
#include "assur/orientation.hpp"
#include "assur/pinned_graph.hpp"
#include "support/generators.hpp"

using namespace assur;

namespace {

PinnedGraph dyad2() { return corpus_instance("dyad2").graph; }
PinnedGraph stacked() { return corpus_instance("stacked_dyads").graph; }

}  // namespace

TEST_CASE("validate accepts the minimal legal graph") {
  CHECK(validate(dyad2()).empty());
}

TEST_CASE("validate reports pin-pin edges") {
  PinnedGraph g(2, {"v"}, {"p1", "p2"},
                {{"e1", "v", "p1"}, {"e2", "v", "p2"}, {"bad", "p1", "p2"}});
  auto vs = validate(g);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].kind == Violation::Kind::pin_pin_edge);
  CHECK(vs[0].edge == "bad");
}

TEST_CASE("validate reports self-loops and unknown endpoints") {
  PinnedGraph g(2, {"v"}, {"p1"}, {{"e1", "v", "v"}, {"e2", "v", "zz"}});
  auto vs = validate(g);
  REQUIRE(vs.size() == 2);
  CHECK(vs[0].kind == Violation::Kind::self_loop);
  CHECK(vs[1].kind == Violation::Kind::unknown_endpoint);
}

TEST_CASE("validate reports duplicate edge ids") {
  PinnedGraph g(2, {"v"}, {"p1", "p2"}, {{"e", "v", "p1"}, {"e", "v", "p2"}});
  auto vs = validate(g);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].kind == Violation::Kind::duplicate_edge_id);
}

TEST_CASE("validate scan matches the stated implications") {
  SplitMix64 rng(11);
  for (int i = 0; i < 50; ++i) {
    PinnedGraph g = testing::random_top_count_graph(rng, 2, 1 + rng.below(6));
    if (!validate(g).empty()) continue;
    for (const Edge& e : g.edges()) {
      CHECK((g.is_inner(e.u) || g.is_inner(e.v)));
      CHECK(g.has_vertex(e.u));
      CHECK(g.has_vertex(e.v));
    }
    std::set<EdgeId> ids;
    for (const Edge& e : g.edges()) CHECK(ids.insert(e.id).second);
  }
}

TEST_CASE("condense_to_ground on the dyad") {
  PinnedGraph g = dyad2();
  Orientation o(std::map<EdgeId, VertexId>{{"e1", "V"}, {"e2", "V"}});
  CondensedDigraph cd = condense_to_ground(g, o);
  REQUIRE(cd.nodes.size() == 2);
  CHECK(cd.nodes[0] == "V");
  CHECK(cd.nodes[1] == "ground");
  REQUIRE(cd.arcs.size() == 2);
  for (const auto& a : cd.arcs) {
    CHECK(a.from == 0);
    CHECK(a.to == cd.ground);
  }
}

TEST_CASE("condense_to_ground hand-check on stacked dyads") {
  PinnedGraph g = stacked();
  Orientation o(std::map<EdgeId, VertexId>{
      {"e1", "V1"}, {"e2", "V1"}, {"e3", "V2"}, {"e4", "V2"}});
  CondensedDigraph cd = condense_to_ground(g, o);
  REQUIRE(cd.nodes.size() == 3);  // V1, V2, ground
  int to_ground = 0, inter = 0;
  for (const auto& a : cd.arcs) {
    if (a.to == cd.ground) ++to_ground;
    if (a.to != cd.ground && a.from != a.to) ++inter;
  }
  CHECK(to_ground == 3);
  CHECK(inter == 1);  // V2 -> V1
}

TEST_CASE("condense_to_ground with no pins leaves an isolated ground") {
  PinnedGraph g(2, {"a", "b"}, {}, {{"e1", "a", "b"}});
  Orientation o(std::map<EdgeId, VertexId>{{"e1", "a"}});
  CondensedDigraph cd = condense_to_ground(g, o);
  CHECK(cd.nodes.size() == 3);
  for (const auto& a : cd.arcs) CHECK(a.to != cd.ground);
}

TEST_CASE("condense preserves edge count and inner out-degrees") {
  SplitMix64 rng(23);
  for (int i = 0; i < 30; ++i) {
    PinnedGraph g = testing::random_pinned_isostatic_2d(rng, 2 + rng.below(6));
    auto orr = find_d_orientation(g);
    REQUIRE(orr.ok());
    CondensedDigraph cd = condense_to_ground(g, *orr.orientation);
    CHECK(cd.arcs.size() == g.edges().size());
    std::map<std::string, int> out;
    for (const auto& a : cd.arcs) ++out[cd.nodes[a.from]];
    auto deg = out_degrees(g, *orr.orientation);
    for (const auto& v : g.inner()) CHECK(out[v] == deg[v]);
  }
}

TEST_CASE("condense rejects orientations over other graphs") {
  Orientation o(std::map<EdgeId, VertexId>{{"zz", "V"}});
  CHECK_THROWS_AS(condense_to_ground(dyad2(), o), Error);
}

TEST_CASE("release_pin bookkeeping on the dyad") {
  PinnedGraph g = release_pin(dyad2(), "P1", {"Q1", "Q2"});
  CHECK(g.inner_count() == 2);
  CHECK(g.edge_count() == 4);  // |E| = 2|I|
  CHECK(g.is_inner("P1"));
  CHECK(g.is_pinned("Q1"));
  CHECK(validate(g).empty());
}

TEST_CASE("release_pin on the triad keeps the top count") {
  PinnedGraph g = release_pin(corpus_instance("triad2").graph, "P1", {"Q1", "Q2"});
  CHECK(g.edge_count() == 2 * g.inner_count());
}

TEST_CASE("release_pin error cases") {
  CHECK_THROWS_AS(release_pin(dyad2(), "V", {"Q1", "Q2"}), Error);
  CHECK_THROWS_AS(release_pin(dyad2(), "P1", {"Q1"}), Error);
}

TEST_CASE("repin_vertex grounds everything on the dyad") {
  RepinResult r = repin_vertex(dyad2(), "V");
  CHECK(r.graph.inner_count() == 0);
  CHECK(r.graph.edge_count() == 0);
  CHECK(r.removed_edges.size() == 2);
}

TEST_CASE("repin_vertex turns the upper stacked dyad into a dyad") {
  RepinResult r = repin_vertex(stacked(), "V1");
  CHECK(r.graph.inner() == std::vector<VertexId>{"V2"});
  CHECK(r.graph.edge_count() == 2);  // V2-V1 and V2-P3 survive
  CHECK(r.removed_edges.size() == 2);
}

TEST_CASE("repin_vertex rejects pinned vertices") {
  CHECK_THROWS_AS(repin_vertex(dyad2(), "P1"), Error);
}

TEST_CASE("release then repin restores the partition") {
  PinnedGraph g = corpus_instance("triad2").graph;
  PinnedGraph released = release_pin(g, "P2", {"Q1", "Q2"});
  RepinResult back = repin_vertex(released, "P2");
  CHECK(back.graph.inner() == g.inner());
  for (const auto& p : g.pinned()) CHECK(back.graph.is_pinned(p));
  CHECK(back.graph.is_pinned("Q1"));
  CHECK(back.graph.is_pinned("Q2"));
}
