#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "reconfig/explorer.hpp"
#include "reconfig/reduction.hpp"

namespace reconfig {

struct SuiteResult {
  std::string name;
  std::uint64_t checked = 0;  // number of verified facts (triples, pairs, instances)
  bool failed = false;
  bool skipped = false;
  std::string detail;  // counterexample or skip reason
  std::string scale;   // human-readable family size
};

namespace detail {

inline std::string edges_to_string(const Graph& g) {
  std::string s = "n=" + std::to_string(g.vertex_count()) + " edges=[";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(g.edges()[i].first) + "-" + std::to_string(g.edges()[i].second);
  }
  return s + "]";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Exhaustive small-graph families

/// All graphs on n labeled vertices, generated as edge subsets of K_n.
template <class F>
void for_each_graph(int n, F&& f) {
  std::vector<std::pair<int, int>> full;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) full.emplace_back(u, v);
  const int m = static_cast<int>(full.size());
  for (std::uint32_t gm = 0; gm < (std::uint32_t{1} << m); ++gm) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < m; ++j)
      if (gm >> j & 1) edges.push_back(full[j]);
    f(Graph(n, edges));
  }
}

/// Bipartite graphs generated as edge subsets of A x B with A = {0..a-1},
/// B = {a..a+b-1}, over all splits 1 <= a <= b <= max_side, a + b <=
/// max_total. Exhaustive while a*b <= exhaustive_bits, deterministic random
/// samples above that.
struct BipartiteFamilyParams {
  int max_side = 4;
  int max_total = 8;
  int exhaustive_bits = 12;
  int samples_above = 600;
  std::uint32_t seed = 0x1c0de;
};

template <class F>
void for_each_bipartite_graph(const BipartiteFamilyParams& prm, F&& f) {
  for (int a = 1; a <= prm.max_side; ++a) {
    for (int b = a; b <= prm.max_side; ++b) {
      if (a + b > prm.max_total) continue;
      const int bits = a * b;
      const auto emit = [&](std::uint32_t em) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < bits; ++i)
          if (em >> i & 1) edges.emplace_back(i / b, a + i % b);
        Config side_a(a), side_b(b);
        std::iota(side_a.begin(), side_a.end(), 0);
        std::iota(side_b.begin(), side_b.end(), a);
        f(BipGraph(Graph(a + b, edges), std::move(side_a), std::move(side_b)));
      };
      if (bits <= prm.exhaustive_bits) {
        for (std::uint32_t em = 0; em < (std::uint32_t{1} << bits); ++em) emit(em);
      } else {
        std::mt19937 rng(prm.seed ^ (static_cast<std::uint32_t>(a) * 1315423911u + b));
        const std::uint32_t mask = (std::uint32_t{1} << bits) - 1;
        for (int s = 0; s < prm.samples_above; ++s) emit(rng() & mask);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Suite 1: on the derived non-incidence graph of g, the vertex sets
// (V \ U) + F with given sides form a complete bipartite pair exactly when
// every edge of F lies inside U.

struct BicliqueEdgeSubsetParams {
  int min_n = 4;
  int max_n = 6;
  int exhaustive_edge_bits = 7;  // all F while 2^m <= 2^this
  int samples_per_u = 12;        // random F per U above that, plus boundary cases
  std::uint32_t seed = 0x2c0de;
};

inline SuiteResult explicit_biclique_equivalence_suite(const BicliqueEdgeSubsetParams& prm = {}) {
  SuiteResult res{"explicit-biclique vs edge-subset equivalence"};
  std::uint64_t graphs = 0;
  for (int n = prm.min_n; n <= prm.max_n && !res.failed; ++n) {
    std::mt19937 rng(prm.seed + static_cast<std::uint32_t>(n));
    for_each_graph(n, [&](const Graph& g) {
      if (res.failed) return;
      ++graphs;
      const auto hc = build_nonincidence_graph(g);
      const int m = g.edge_count();
      const Config all = g.all_vertices();
      const std::uint32_t full_f = m == 0 ? 0 : (std::uint32_t{1} << m) - 1;
      for (std::uint32_t um = 0; um < (std::uint32_t{1} << n) && !res.failed; ++um) {
        const Config u = detail::config_of_mask(um);
        const Config vside = detail::config_difference(all, u);
        std::uint32_t inside = 0;  // edges with both endpoints in U
        for (int j = 0; j < m; ++j) {
          const auto [eu, ev] = g.edges()[j];
          if ((um >> eu & 1) && (um >> ev & 1)) inside |= std::uint32_t{1} << j;
        }
        const auto check_f = [&](std::uint32_t fm) {
          Config eside;
          for (int j = 0; j < m; ++j)
            if (fm >> j & 1) eside.push_back(n + j);
          const bool expected = (fm & ~inside) == 0;
          const bool actual = explicit_biclique(hc.graph, vside, eside);
          if (actual != expected) {
            res.failed = true;
            res.detail = detail::edges_to_string(g) + " U=" + detail::config_to_string(u) +
                         " F(edge-vertex ids)=" + detail::config_to_string(eside) +
                         " expected " + (expected ? "biclique" : "non-biclique");
          }
          ++res.checked;
        };
        if (m <= prm.exhaustive_edge_bits) {
          for (std::uint32_t fm = 0; fm <= full_f && !res.failed; ++fm) {
            check_f(fm);
            if (full_f == 0) break;
          }
        } else {
          check_f(0);
          check_f(inside);
          check_f(full_f);
          const std::uint32_t outside = full_f & ~inside;
          if (outside) check_f(inside | (outside & (~outside + 1)));
          if (inside) check_f(inside & (inside - 1));
          for (int s = 0; s < prm.samples_per_u && !res.failed; ++s) check_f(rng() & full_f);
        }
      }
    });
  }
  res.scale = std::to_string(graphs) + " graphs (n=" + std::to_string(prm.min_n) + ".." +
              std::to_string(prm.max_n) + "), " + std::to_string(res.checked) + " (g,U,F) triples";
  return res;
}

// ---------------------------------------------------------------------------
// Suite 2 (set level): s induces a complete bipartite graph with side sizes
// {p,q} in a bipartite g exactly when the components of s in the complement
// of g have size multiset {p,q}.

inline SuiteResult complement_set_equivalence_suite(const BipartiteFamilyParams& prm = {}) {
  SuiteResult res{"biclique vs complement component-multiset (set level)"};
  std::uint64_t graphs = 0;
  for_each_bipartite_graph(prm, [&](const BipGraph& bg) {
    if (res.failed) return;
    ++graphs;
    const Graph& g = bg.graph();
    const Graph gbar = complement(g);
    const int n = g.vertex_count();
    for (std::uint32_t sm = 0; sm < (std::uint32_t{1} << n) && !res.failed; ++sm) {
      const Config s = detail::config_of_mask(sm);
      const int sz = static_cast<int>(s.size());
      for (int p = 1; 2 * p <= sz; ++p) {
        const int q = sz - p;
        const bool lhs = satisfies(g, BicliqueSpec{p, q}, s);
        const bool rhs = satisfies(gbar, MSetSpec{{p, q}}, s);
        if (lhs != rhs) {
          res.failed = true;
          res.detail = detail::edges_to_string(g) + " s=" + detail::config_to_string(s) +
                       " (p,q)=(" + std::to_string(p) + "," + std::to_string(q) +
                       ") biclique=" + (lhs ? "yes" : "no") +
                       " complement-mset=" + (rhs ? "yes" : "no");
          break;
        }
        ++res.checked;
      }
    }
  });
  res.scale = std::to_string(graphs) + " bipartite graphs, " + std::to_string(res.checked) +
              " (g,s,{p,q}) checks";
  return res;
}

// ---------------------------------------------------------------------------
// Suite 3 (move level): between two balanced bicliques of a bipartite g, a
// one-vertex exchange in g is legal exactly when the same exchange is a
// single-vertex component slide in the complement.

inline SuiteResult complement_move_equivalence_suite(const BipartiteFamilyParams& prm = {},
                                                     std::uint64_t cap = kDefaultCap) {
  SuiteResult res{"tj vs complement cs1 move equivalence"};
  std::uint64_t graphs = 0;
  try {
    for_each_bipartite_graph(prm, [&](const BipGraph& bg) {
      if (res.failed) return;
      ++graphs;
      const Graph& g = bg.graph();
      const Graph gbar = complement(g);
      const int n = g.vertex_count();
      for (int p = 1; 2 * p <= n && !res.failed; ++p) {
        const PropertySpec bic = BicliqueSpec{p, p};
        const PropertySpec mset = MSetSpec{{p, p}};
        const auto configs = enumerate_configs(g, bic, cap);
        for (std::size_t i = 0; i < configs.size() && !res.failed; ++i) {
          for (std::size_t j = i + 1; j < configs.size(); ++j) {
            const bool lhs = is_move(g, MoveRule::TJ, bic, configs[i], configs[j]);
            const bool rhs = is_move(gbar, MoveRule::CS1, mset, configs[i], configs[j]);
            if (lhs != rhs) {
              res.failed = true;
              res.detail = detail::edges_to_string(g) + " p=" + std::to_string(p) + " s=" +
                           detail::config_to_string(configs[i]) + " t=" +
                           detail::config_to_string(configs[j]) + " tj=" + (lhs ? "yes" : "no") +
                           " cs1=" + (rhs ? "yes" : "no");
              break;
            }
            ++res.checked;
          }
        }
      }
    });
  } catch (const CapExceeded& e) {
    res.skipped = true;
    res.detail = e.what();
  }
  res.scale = std::to_string(graphs) + " bipartite graphs, " + std::to_string(res.checked) +
              " biclique pairs";
  return res;
}

// ---------------------------------------------------------------------------
// Suite 4: on complements of bipartite graphs, every component jump between
// {p,p}-sets is already a component slide.

inline SuiteResult cj_implies_cs_suite(const BipartiteFamilyParams& prm = {},
                                       std::uint64_t cap = kDefaultCap) {
  SuiteResult res{"cj implies cs on co-bipartite {p,p}-sets"};
  std::uint64_t graphs = 0;
  try {
    for_each_bipartite_graph(prm, [&](const BipGraph& bg) {
      if (res.failed) return;
      ++graphs;
      const Graph gbar = complement(bg.graph());
      const int n = gbar.vertex_count();
      for (int p = 1; 2 * p <= n && !res.failed; ++p) {
        const PropertySpec mset = MSetSpec{{p, p}};
        for (const Config& s : enumerate_configs(gbar, mset, cap)) {
          for (const Config& t : enumerate_moves(gbar, MoveRule::CJ, mset, s)) {
            if (!is_move(gbar, MoveRule::CS, mset, s, t)) {
              res.failed = true;
              res.detail = detail::edges_to_string(gbar) + " p=" + std::to_string(p) + " s=" +
                           detail::config_to_string(s) + " t=" + detail::config_to_string(t) +
                           " is a cj move but not a cs move";
              break;
            }
            ++res.checked;
          }
          if (res.failed) break;
        }
      }
    });
  } catch (const CapExceeded& e) {
    res.skipped = true;
    res.detail = e.what();
  }
  res.scale = std::to_string(graphs) + " co-bipartite graphs, " + std::to_string(res.checked) +
              " cj moves";
  return res;
}

// ---------------------------------------------------------------------------
// Suite 5: component-slide reachability coincides with its one-vertex
// refinement on complements of bipartite graphs, for component-size
// multisets with at most two entries.

inline SuiteResult cs_cs1_reachability_suite(const BipartiteFamilyParams& prm = {},
                                             std::uint64_t cap = kDefaultCap) {
  SuiteResult res{"cs vs cs1 reachability"};
  std::uint64_t graphs = 0;
  try {
    for_each_bipartite_graph(prm, [&](const BipGraph& bg) {
      if (res.failed) return;
      ++graphs;
      const Graph gbar = complement(bg.graph());
      const int n = gbar.vertex_count();
      std::vector<std::vector<int>> multisets;
      for (int m1 = 1; m1 <= n; ++m1) {
        multisets.push_back({m1});
        for (int m2 = m1; m1 + m2 <= n; ++m2) multisets.push_back({m1, m2});
      }
      for (const auto& sizes : multisets) {
        if (res.failed) break;
        const PropertySpec mset = MSetSpec{sizes};
        const auto cs = reachability_classes(gbar, mset, MoveRule::CS, cap);
        const auto cs1 = reachability_classes(gbar, mset, MoveRule::CS1, cap);
        if (cs != cs1) {
          res.failed = true;
          res.detail = detail::edges_to_string(gbar) + " M=" +
                       detail::config_to_string(Config(sizes.begin(), sizes.end())) +
                       " cs classes=" + std::to_string(cs.size()) +
                       " cs1 classes=" + std::to_string(cs1.size());
          break;
        }
        std::uint64_t total = 0;
        for (const auto& cls : cs) total += cls.size();
        res.checked += total * (total - 1) / 2;  // decided instance pairs
      }
    });
  } catch (const CapExceeded& e) {
    res.skipped = true;
    res.detail = e.what();
  }
  res.scale = std::to_string(graphs) + " co-bipartite graphs, " + std::to_string(res.checked) +
              " instance pairs";
  return res;
}

// ---------------------------------------------------------------------------

struct SelftestParams {
  BicliqueEdgeSubsetParams biclique_edges{.min_n = 4, .max_n = 5, .exhaustive_edge_bits = 10};
  BipartiteFamilyParams bipartite{.max_side = 3, .max_total = 6, .exhaustive_bits = 9,
                                  .samples_above = 200};
  std::uint64_t cap = kDefaultCap;
};

/// Runs the five lemma-level suites at desk scale.
inline std::vector<SuiteResult> run_selftest(const SelftestParams& prm = {}) {
  return {
      explicit_biclique_equivalence_suite(prm.biclique_edges),
      complement_set_equivalence_suite(prm.bipartite),
      complement_move_equivalence_suite(prm.bipartite, prm.cap),
      cj_implies_cs_suite(prm.bipartite, prm.cap),
      cs_cs1_reachability_suite(prm.bipartite, prm.cap),
  };
}

}  // namespace reconfig
