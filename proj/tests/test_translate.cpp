#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "reconfig/explorer.hpp"
#include "reconfig/reduction.hpp"
#include "reconfig/translate.hpp"
#include "test_util.hpp"

using namespace reconfig;
using test_util::complete_graph;
using test_util::k4_plus_isolated;
using test_util::random_graph;

namespace {

Instance k4iso_instance() {
  return Instance{k4_plus_isolated(), CliqueSpec{3}, MoveRule::TJ, {0, 1, 2}, {1, 2, 3}};
}

/// Edge-vertex ids of E(K) in the derived graph, via the certificate origin.
Config edge_part(const ReductionCert& cert, const Config& k) {
  const Graph& g = cert.source.graph;
  Config out;
  for (std::size_t i = 0; i < cert.origin.size(); ++i) {
    const auto& o = cert.origin[i];
    if (o.kind != VertexOrigin::Kind::Edge) continue;
    if (detail::config_contains(k, o.edge.first) && detail::config_contains(k, o.edge.second) &&
        g.has_edge(o.edge.first, o.edge.second))
      out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace

TEST_CASE("verify_sequence accepts valid sequences and locates violations", "[translate]") {
  const Graph tri = complete_graph(3);
  const Instance same{tri, CliqueSpec{2}, MoveRule::TJ, {0, 1}, {0, 1}};
  REQUIRE_FALSE(verify_sequence(same, Sequence{{{0, 1}}}).has_value());

  const Instance inst{tri, CliqueSpec{2}, MoveRule::TJ, {0, 1}, {1, 2}};
  REQUIRE_FALSE(verify_sequence(inst, Sequence{{{0, 1}, {1, 2}}}).has_value());

  const Instance inst02{tri, CliqueSpec{2}, MoveRule::TJ, {0, 1}, {0, 2}};
  const auto rep = verify_sequence(inst02, Sequence{{{0, 1}, {0, 2}, {0, 2}}});
  REQUIRE(rep.has_value());
  REQUIRE(rep->index == 2);  // repeated set is not a tj move

  REQUIRE(verify_sequence(inst, Sequence{}).has_value());
  REQUIRE(verify_sequence(inst, Sequence{{{0, 2}, {1, 2}}})->index == 0);     // wrong start
  REQUIRE(verify_sequence(inst, Sequence{{{0, 1}, {0, 2}}})->index == 1);     // wrong end
  REQUIRE(verify_sequence(inst, Sequence{{{0, 1}, {0, 9}}})->index == 1);     // out of range
  const Instance p3{test_util::path_graph(3), CliqueSpec{2}, MoveRule::TJ, {0, 1}, {1, 2}};
  REQUIRE(verify_sequence(p3, Sequence{{{0, 1}, {0, 2}, {1, 2}}})->index == 1);  // non-clique
}

TEST_CASE("lift of a single clique move", "[translate]") {
  const ReductionCert cert = reduce_clr_to_bbr(k4iso_instance());
  const Sequence clique_seq{{{0, 1, 2}, {1, 2, 3}}};
  const auto [lifted, trace] = lift_clique_sequence(cert, clique_seq);
  // w_0 = 3 coincides with the entering vertex and w_1 = 0 with the leaving
  // one, so both V-side touch-ups are skipped and only the two edge swaps
  // remain: (0,1)->(1,3) then (0,2)->(2,3).
  REQUIRE(lifted.steps == std::vector<Config>{{4, 5, 6, 7, 8, 10},
                                              {4, 5, 6, 8, 10, 11},
                                              {4, 5, 6, 10, 11, 12}});
  REQUIRE(trace.steps.size() == 1);
  REQUIRE(trace.steps[0].leave == 0);
  REQUIRE(trace.steps[0].enter == 3);
  REQUIRE(trace.steps[0].unlock_before == 3);
  REQUIRE(trace.steps[0].unlock_after == 0);
  REQUIRE(trace.steps[0].micro_moves == 2);
  REQUIRE_FALSE(verify_sequence(cert.produced, lifted).has_value());
}

TEST_CASE("lift of a single-config sequence", "[translate]") {
  const Instance same{k4_plus_isolated(), CliqueSpec{3}, MoveRule::TJ, {0, 1, 2}, {0, 1, 2}};
  const ReductionCert cert = reduce_clr_to_bbr(same);
  const auto [lifted, trace] = lift_clique_sequence(cert, Sequence{{{0, 1, 2}}});
  REQUIRE(lifted.steps == std::vector<Config>{cert.produced.start});
  REQUIRE(trace.steps.empty());
}

TEST_CASE("lift rejects invalid input sequences", "[translate]") {
  const ReductionCert cert = reduce_clr_to_bbr(k4iso_instance());
  try {
    lift_clique_sequence(cert, Sequence{{{0, 1, 2}, {0, 1, 2}, {1, 2, 3}}});
    FAIL("expected InvalidSourceSequence");
  } catch (const InvalidSourceSequence& e) {
    REQUIRE(e.index == 1);  // repeated set
  }
  REQUIRE_THROWS_AS(lift_clique_sequence(cert, Sequence{{{1, 2, 3}, {0, 1, 2}}}),
                    InvalidSourceSequence);  // wrong endpoints
}

TEST_CASE("project collapses e-side moves and recovers clique sequences", "[translate]") {
  const ReductionCert cert = reduce_clr_to_bbr(k4iso_instance());
  // pure E-side walk from the produced start to the produced target:
  // swap edge (0,1)->(1,3), then (0,2)->(2,3)
  const Sequence bic{{{4, 5, 6, 7, 8, 10}, {4, 5, 6, 8, 10, 11}, {4, 5, 6, 10, 11, 12}}};
  REQUIRE_FALSE(verify_sequence(cert.produced, bic).has_value());
  const Sequence proj = project_biclique_sequence(cert, bic);
  REQUIRE(proj.steps == std::vector<Config>{{0, 1, 2}, {1, 2, 3}});
}

TEST_CASE("project of a single-config sequence", "[translate]") {
  const Instance same{k4_plus_isolated(), CliqueSpec{3}, MoveRule::TJ, {0, 1, 2}, {0, 1, 2}};
  const ReductionCert cert = reduce_clr_to_bbr(same);
  const Sequence proj = project_biclique_sequence(cert, Sequence{{cert.produced.start}});
  REQUIRE(proj.steps == std::vector<Config>{{0, 1, 2}});
}

TEST_CASE("project rejects invalid input sequences", "[translate]") {
  const ReductionCert cert = reduce_clr_to_bbr(k4iso_instance());
  try {
    project_biclique_sequence(cert, Sequence{{cert.produced.start, cert.produced.start}});
    FAIL("expected InvalidSourceSequence");
  } catch (const InvalidSourceSequence& e) {
    REQUIRE(e.index == 1);
  }
}

TEST_CASE("lift and project round-trip on randomized instances", "[translate]") {
  std::mt19937 rng(606);
  int lifted_count = 0;
  while (lifted_count < 25) {
    const Graph g = random_graph(rng, 7, 0.55);
    const auto cliques = enumerate_configs(g, CliqueSpec{3});
    if (cliques.size() < 2) continue;
    std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
    const Instance inst{g, CliqueSpec{3}, MoveRule::TJ, cliques[pick(rng)], cliques[pick(rng)]};
    const auto src = reachable(inst);
    if (!src.decision) continue;
    ++lifted_count;
    const ReductionCert cert = reduce_clr_to_bbr(inst);
    const int ell = static_cast<int>(src.witness->steps.size()) - 1;

    const auto [lifted, trace] = lift_clique_sequence(cert, *src.witness);
    REQUIRE_FALSE(verify_sequence(cert.produced, lifted).has_value());
    REQUIRE(lifted.steps.front() == cert.produced.start);
    REQUIRE(lifted.steps.back() == cert.produced.target);
    REQUIRE(static_cast<int>(lifted.steps.size()) <= 1 + ell * 4);  // 1 + l*(k+1), k=3

    // per-step structure: after the V-side touch-up the config is exactly
    // (V minus both cliques) plus E(K_i); during the edge swaps the V-side
    // stays put and the E-side stays inside E(K_i) + E(K_{i+1})
    const Config all = g.all_vertices();
    std::size_t base = 0;
    for (const auto& st : trace.steps) {
      const Config& ki = src.witness->steps[st.index];
      const Config& kn = src.witness->steps[st.index + 1];
      const Config vrest = detail::config_difference(all, detail::config_union(ki, kn));
      const Config ei = edge_part(cert, ki);
      const Config en = edge_part(cert, kn);
      const Config eboth = detail::config_union(ei, en);
      const bool step1 = st.unlock_before != st.enter;
      const bool step3 = st.unlock_after != st.leave;
      const std::size_t after_step1 = base + (step1 ? 1 : 0);
      Config expect = detail::config_union(vrest, ei);
      REQUIRE(lifted.steps.at(after_step1) == expect);
      const int swaps = st.micro_moves - (step1 ? 1 : 0) - (step3 ? 1 : 0);
      REQUIRE(swaps == static_cast<int>(ki.size()) - 1);
      for (int sw = 1; sw <= swaps; ++sw) {
        const Config& mid = lifted.steps.at(after_step1 + sw);
        Config vpart, epart;
        for (int v : mid) (v < g.vertex_count() ? vpart : epart).push_back(v);
        REQUIRE(vpart == vrest);
        REQUIRE(detail::config_difference(epart, eboth).empty());
      }
      base += st.micro_moves;
    }
    REQUIRE(base + 1 == lifted.steps.size());

    // projecting the lift gives a valid clique sequence with the endpoints
    const Sequence back = project_biclique_sequence(cert, lifted);
    REQUIRE_FALSE(verify_sequence(inst, back).has_value());

    // projecting the biclique oracle's own witness also verifies
    const auto bic = reachable(cert.produced);
    REQUIRE(bic.decision);
    const Sequence proj = project_biclique_sequence(cert, *bic.witness);
    REQUIRE_FALSE(verify_sequence(inst, proj).has_value());
  }
}

TEST_CASE("oracle agreement between source and produced instances", "[translate]") {
  std::mt19937 rng(707);
  int checked = 0, no_cases = 0;
  while (checked < 20) {
    const Graph g = random_graph(rng, 7, 0.45);
    const auto cliques = enumerate_configs(g, CliqueSpec{3});
    if (cliques.size() < 2) continue;
    ++checked;
    std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
    const Instance inst{g, CliqueSpec{3}, MoveRule::TJ, cliques[pick(rng)], cliques[pick(rng)]};
    const ReductionCert cert = reduce_clr_to_bbr(inst);
    const auto src = reachable(inst);
    const auto dst = reachable(cert.produced);
    REQUIRE(src.decision == dst.decision);
    no_cases += !src.decision;
  }
  REQUIRE(no_cases > 0);
}
