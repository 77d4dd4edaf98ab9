// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its scale, tolerance and (where stated) its
// runtime budget in code.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "reconfig/explorer.hpp"
#include "reconfig/io.hpp"
#include "reconfig/reduction.hpp"
#include "reconfig/selftest.hpp"
#include "reconfig/translate.hpp"

using namespace reconfig;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int number, const std::string& name, bool passed, const std::string& detail) {
  if (!passed) ++g_failures;
  std::cout << (passed ? "PASS" : "FAIL") << " criterion " << number << " (" << name << "): "
            << detail << "\n"
            << std::flush;
}

// Shared state between criteria 2, 3 and 6.
struct GeneratedInstance {
  Instance source;
  ReductionCert cert;
  bool source_decision = false;
  std::optional<Sequence> source_witness;
};

std::vector<GeneratedInstance> g_instances;

// -----------------------------------------------------------------------
// Criterion 1: on the derived non-incidence graph, (V \ U) + F spans a
// complete bipartite pair with the given sides exactly when F lies inside
// E(U). Exhaustive over all graphs with 4 <= n <= 6; F subsets exhaustive
// per (g,U) while 2^m <= 128 and deterministically sampled above, with at
// least 10^4 triples overall and a 60 s budget.

void criterion1() {
  const auto t0 = Clock::now();
  BicliqueEdgeSubsetParams prm;
  prm.min_n = 4;
  prm.max_n = 6;
  prm.exhaustive_edge_bits = 7;
  prm.samples_per_u = 12;
  const SuiteResult res = explicit_biclique_equivalence_suite(prm);
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << res.scale << ", " << std::fixed << std::setprecision(1) << secs << "s";
  if (res.failed) d << "; counterexample: " << res.detail;
  report(1, "explicit-biclique/edge-subset equivalence",
         !res.failed && res.checked >= 10000 && secs < 60.0, d.str());
}

// -----------------------------------------------------------------------
// Criterion 2: 200 randomized clique instances with n = 7, k = 3 (so
// n-k-1 = C(3,2) holds); the oracle decision on the source must equal the
// oracle decision on the reduced balanced-biclique instance, within 10 min.

void criterion2() {
  const auto t0 = Clock::now();
  std::mt19937 rng(0xACCE97);
  int yes = 0, no = 0, mismatches = 0;
  while (g_instances.size() < 200) {
    std::vector<std::pair<int, int>> es;
    if (g_instances.size() % 3 == 2) {
      // two dense clusters with sparse cross edges: a good source of
      // unreachable clique pairs
      std::bernoulli_distribution intra(0.9), cross(0.15);
      for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
          if (intra(rng)) es.emplace_back(u, v);
      for (int u = 4; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v)
          if (intra(rng)) es.emplace_back(u, v);
      for (int u = 0; u < 4; ++u)
        for (int v = 4; v < 7; ++v)
          if (cross(rng)) es.emplace_back(u, v);
    } else {
      std::bernoulli_distribution edge(g_instances.size() % 3 == 0 ? 0.35 : 0.5);
      for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v)
          if (edge(rng)) es.emplace_back(u, v);
    }
    const Graph g(7, es);
    const auto cliques = enumerate_configs(g, CliqueSpec{3});
    if (cliques.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
    Config from = cliques[pick(rng)];
    Config to = cliques[pick(rng)];
    for (int guard = 0; to == from && guard < 20; ++guard) to = cliques[pick(rng)];
    GeneratedInstance gi;
    gi.source = Instance{g, CliqueSpec{3}, MoveRule::TJ, std::move(from), std::move(to)};
    gi.cert = reduce_clr_to_bbr(gi.source);
    const auto src = reachable(gi.source);
    const auto dst = reachable(gi.cert.produced);
    gi.source_decision = src.decision;
    gi.source_witness = src.witness;
    if (src.decision != dst.decision) ++mismatches;
    (src.decision ? yes : no) += 1;
    g_instances.push_back(std::move(gi));
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << g_instances.size() << " instances (" << yes << " yes / " << no << " no), "
    << mismatches << " decision mismatches, " << std::fixed << std::setprecision(1) << secs
    << "s";
  report(2, "reduction preserves the oracle decision",
         mismatches == 0 && g_instances.size() >= 200 && secs < 600.0, d.str());
}

// -----------------------------------------------------------------------
// Criterion 3: for every YES instance of criterion 2, the lifted clique
// witness verifies on the biclique instance with the right endpoints and
// at most 1 + l*(k+1) configs, and the biclique oracle's witness projects
// to a verifying clique sequence.

void criterion3() {
  std::uint64_t lifted_ok = 0, projected_ok = 0, yes_count = 0, violations = 0;
  for (const auto& gi : g_instances) {
    if (!gi.source_decision) continue;
    ++yes_count;
    const int ell = static_cast<int>(gi.source_witness->steps.size()) - 1;
    try {
      const auto [lifted, trace] = lift_clique_sequence(gi.cert, *gi.source_witness);
      const bool ends_ok = lifted.steps.front() == gi.cert.produced.start &&
                           lifted.steps.back() == gi.cert.produced.target;
      const bool len_ok = static_cast<int>(lifted.steps.size()) <= 1 + ell * 4;
      if (!verify_sequence(gi.cert.produced, lifted) && ends_ok && len_ok)
        ++lifted_ok;
      else
        ++violations;
    } catch (const Error&) {
      ++violations;
    }
    try {
      const auto bic = reachable(gi.cert.produced);
      if (!bic.decision) {
        ++violations;
        continue;
      }
      const Sequence proj = project_biclique_sequence(gi.cert, *bic.witness);
      if (!verify_sequence(gi.source, proj))
        ++projected_ok;
      else
        ++violations;
    } catch (const Error&) {
      ++violations;
    }
  }
  std::ostringstream d;
  d << yes_count << " yes instances, " << lifted_ok << " lifts and " << projected_ok
    << " projections verified, " << violations << " violations";
  report(3, "witness round-trip",
         violations == 0 && lifted_ok == yes_count && projected_ok == yes_count && yes_count > 0,
         d.str());
}

// -----------------------------------------------------------------------
// Criteria 4 and 5: the exhaustive bipartite family (all splits with
// |A|,|B| <= 4, |A|+|B| <= 8; all edge subsets while |A||B| <= 12, sampled
// above) and its complements.

BipartiteFamilyParams family_params() {
  BipartiteFamilyParams prm;
  prm.max_side = 4;
  prm.max_total = 8;
  prm.exhaustive_bits = 12;
  prm.samples_above = 600;
  return prm;
}

void criterion4() {
  const auto t0 = Clock::now();
  const auto sets = complement_set_equivalence_suite(family_params());
  const auto moves = complement_move_equivalence_suite(family_params());
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << "set level: " << sets.scale << "; move level: " << moves.scale << "; " << std::fixed
    << std::setprecision(1) << secs << "s";
  if (sets.failed) d << "; set counterexample: " << sets.detail;
  if (moves.failed) d << "; move counterexample: " << moves.detail;
  report(4, "biclique/component complement equivalences",
         !sets.failed && !moves.failed && !sets.skipped && !moves.skipped, d.str());
}

void criterion5() {
  const auto t0 = Clock::now();
  const auto cjcs = cj_implies_cs_suite(family_params());
  const auto css = cs_cs1_reachability_suite(family_params());
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << "cj->cs: " << cjcs.scale << "; cs=cs1: " << css.scale << "; " << std::fixed
    << std::setprecision(1) << secs << "s";
  if (cjcs.failed) d << "; cj->cs counterexample: " << cjcs.detail;
  if (css.failed) d << "; cs/cs1 counterexample: " << css.detail;
  report(5, "component-rule closure on co-bipartite graphs",
         !cjcs.failed && !css.failed && !cjcs.skipped && !css.skipped, d.str());
}

// -----------------------------------------------------------------------
// Criterion 6: in every criterion-2 source graph, the full covering
// biclique of each 3-clique admits no moves that keep the side sizes at
// (V:4, E:3) — with |4-3| = 1, cross-shape swaps to (3,4) are possible and
// are filtered out — while its unlocked version moves whenever the source
// clique has a neighbor.

void criterion6() {
  std::uint64_t locked_ok = 0, unlocked_ok = 0, unlocked_expected = 0, violations = 0;
  for (const auto& gi : g_instances) {
    const Graph& g = gi.source.graph;
    const auto hc = build_nonincidence_graph(g);
    const Graph& h = hc.graph.graph();
    const auto vside_size = [&](const Config& c) {
      return detail::config_intersection(c, g.all_vertices()).size();
    };
    for (const Config& u : enumerate_configs(g, CliqueSpec{3})) {
      Config s_hat = detail::config_difference(g.all_vertices(), u);
      for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
          s_hat.push_back(hc.edge_vertex_id(u[i], u[j]));
      std::sort(s_hat.begin(), s_hat.end());
      bool locked = true;
      for (const Config& t : enumerate_moves(h, MoveRule::TJ, BicliqueSpec{4, 3}, s_hat))
        if (vside_size(t) == 4) locked = false;
      if (locked)
        ++locked_ok;
      else
        ++violations;
      if (!enumerate_moves(g, MoveRule::TJ, CliqueSpec{3}, u).empty()) {
        ++unlocked_expected;
        const Config s = detail::config_difference(s_hat, {s_hat.front()});
        if (!enumerate_moves(h, MoveRule::TJ, BicliqueSpec{3, 3}, s).empty())
          ++unlocked_ok;
        else
          ++violations;
      }
    }
  }
  std::ostringstream d;
  d << locked_ok << " covering bicliques locked, " << unlocked_ok << "/" << unlocked_expected
    << " unlocked ones mobile, " << violations << " violations";
  report(6, "locked/unlocked covering bicliques",
         violations == 0 && locked_ok > 0 && unlocked_ok == unlocked_expected, d.str());
}

// -----------------------------------------------------------------------
// Criterion 7: padding preserves the oracle decision, exhaustively over all
// graphs with n <= 6 and k in {2,3} that satisfy the padding precondition.
// One reachability sweep per (graph, k) answers every clique pair.

void criterion7() {
  const auto t0 = Clock::now();
  std::uint64_t pairs = 0, graphs = 0, mismatches = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int k = 2; k <= 3; ++k) {
      if (k > n) continue;
      if (n - k - 1 > k * (k - 1) / 2) continue;  // unpaddable
      for_each_graph(n, [&](const Graph& g) {
        const auto cliques = enumerate_configs(g, CliqueSpec{k});
        if (cliques.empty()) return;
        ++graphs;
        const Instance probe{g, CliqueSpec{k}, MoveRule::TJ, cliques.front(), cliques.front()};
        const Instance padded = pad_clr(probe);
        const auto src_classes = reachability_classes(g, CliqueSpec{k}, MoveRule::TJ);
        const auto pad_classes =
            reachability_classes(padded.graph, CliqueSpec{k}, MoveRule::TJ);
        std::map<Config, int> src_label, pad_label;
        for (std::size_t c = 0; c < src_classes.size(); ++c)
          for (const Config& s : src_classes[c]) src_label[s] = static_cast<int>(c);
        for (std::size_t c = 0; c < pad_classes.size(); ++c)
          for (const Config& s : pad_classes[c]) pad_label[s] = static_cast<int>(c);
        if (pad_label.size() != src_label.size()) {
          ++mismatches;  // padding must not create or destroy cliques for k >= 2
          return;
        }
        for (std::size_t i = 0; i < cliques.size(); ++i)
          for (std::size_t j = i; j < cliques.size(); ++j) {
            ++pairs;
            const bool src = src_label.at(cliques[i]) == src_label.at(cliques[j]);
            const bool pad = pad_label.at(cliques[i]) == pad_label.at(cliques[j]);
            if (src != pad) ++mismatches;
          }
      });
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << graphs << " (graph,k) families, " << pairs << " instance pairs, " << mismatches
    << " mismatches, " << std::fixed << std::setprecision(1) << secs << "s";
  report(7, "padding preserves the oracle decision", mismatches == 0 && pairs > 0, d.str());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  if (g_failures) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
