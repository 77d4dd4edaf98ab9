#pragma once

#include <string>
#include <utility>
#include <vector>

#include "reconfig/explorer.hpp"

namespace reconfig {

/// True iff every vside vertex is adjacent to every eside vertex, i.e. the
/// two sets span a complete bipartite subgraph with the given sides
/// (vacuously true when either set is empty).
inline bool explicit_biclique(const BipGraph& h, const Config& vside, const Config& eside) {
  detail::check_config(h.graph(), vside);
  detail::check_config(h.graph(), eside);
  for (int v : vside)
    if (!h.in_side_a(v))
      throw SideViolation("vertex " + std::to_string(v) + " is not on side A");
  for (int e : eside)
    if (h.in_side_a(e))
      throw SideViolation("vertex " + std::to_string(e) + " is not on side B");
  if (h.graph().has_masks()) {
    const std::uint64_t vm = detail::mask_of(vside);
    for (int e : eside)
      if ((vm & ~h.graph().neighbor_mask(e)) != 0) return false;
    return true;
  }
  for (int e : eside)
    for (int v : vside)
      if (!h.graph().has_edge(v, e)) return false;
  return true;
}

namespace detail {

inline long long choose2(long long k) { return k * (k - 1) / 2; }

inline const CliqueSpec& require_clique_tj(const Instance& inst, const char* op) {
  const auto* c = std::get_if<CliqueSpec>(&inst.spec);
  if (!c) throw PreconditionViolated(std::string(op) + " requires a clique instance");
  if (inst.rule != MoveRule::TJ)
    throw PreconditionViolated(std::string(op) + " requires the tj rule");
  return *c;
}

}  // namespace detail

/// Appends isolated vertices (fresh highest ids) until n' - k - 1 = C(k,2),
/// i.e. n' = C(k,2) + k + 1. The endpoints are untouched and, for k >= 2,
/// isolated vertices can never enter a k-clique, so reachability is
/// preserved. Rejects instances that are already past that size.
inline Instance pad_clr(const Instance& inst) {
  const auto& c = detail::require_clique_tj(inst, "pad_clr");
  inst.validate();
  const long long n = inst.graph.vertex_count();
  const long long k = c.k;
  const long long missing = detail::choose2(k) - (n - k - 1);
  if (missing < 0)
    throw Unpaddable("cannot pad: n-k-1 = " + std::to_string(n - k - 1) + " exceeds C(k,2) = " +
                     std::to_string(detail::choose2(k)));
  Instance out = inst;
  out.graph = Graph(static_cast<int>(n + missing), inst.graph.edges());
  return out;
}

/// Certificate tying a produced instance back to its source: the vertex
/// origin map of the derived graph and the two unlock vertices removed from
/// the full start/target bicliques.
struct ReductionCert {
  Instance source;
  Instance produced;
  std::vector<VertexOrigin> origin;
  int removed_start = -1;
  int removed_target = -1;
};

namespace detail {

/// (V \ K) plus the edge vertices of E(K), as a config of derived-graph ids.
inline Config covering_biclique(const NonincidenceGraph& hc, const Graph& g, const Config& k) {
  Config s = config_difference(g.all_vertices(), k);
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i + 1; j < k.size(); ++j)
      if (g.has_edge(k[i], k[j])) s.push_back(hc.edge_vertex_id(k[i], k[j]));
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace detail

/// Clique reconfiguration -> balanced-biclique reconfiguration.
///
/// The derived graph is the bipartite complement of the incidence graph; a
/// k-clique K maps to the biclique (V \ K) + E(K), unlocked by dropping its
/// lowest-id V-side vertex. Requires n - k - 1 = C(k,2) so that both sides
/// end up with p = n - k - 1 vertices.
inline ReductionCert reduce_clr_to_bbr(const Instance& inst) {
  const auto& c = detail::require_clique_tj(inst, "reduce_clr_to_bbr");
  inst.validate();
  const long long n = inst.graph.vertex_count();
  const long long k = c.k;
  if (n - k - 1 != detail::choose2(k))
    throw PreconditionViolated(
        "n-k-1 != C(k,2) (n-k-1 = " + std::to_string(n - k - 1) +
        ", C(k,2) = " + std::to_string(detail::choose2(k)) + "); pad the instance first");
  const int p = static_cast<int>(n - k - 1);
  if (p < 1) throw PreconditionViolated("derived side size would be zero (k < 2)");
  auto hc = build_nonincidence_graph(inst.graph);

  auto unlock = [&](const Config& clique, int* removed) {
    Config full = detail::covering_biclique(hc, inst.graph, clique);
    *removed = full.front();  // lowest id overall is the lowest V-side id
    return detail::config_difference(full, {full.front()});
  };
  ReductionCert cert;
  cert.source = inst;
  cert.origin = hc.origin;
  Instance prod;
  prod.spec = BicliqueSpec{p, p};
  prod.rule = MoveRule::TJ;
  prod.start = unlock(inst.start, &cert.removed_start);
  prod.target = unlock(inst.target, &cert.removed_target);
  prod.graph = hc.graph.graph();
  prod.validate();
  cert.produced = std::move(prod);
  return cert;
}

/// Balanced-biclique reconfiguration on a bipartite graph -> connected
/// components reconfiguration on its complement: the (p,p)-bicliques of g
/// are exactly the vertex sets whose components in the complement have size
/// multiset {p,p}, so the configs carry over unchanged.
inline Instance reduce_bbr_to_ccr(const Instance& inst, MoveRule rule) {
  const auto* b = std::get_if<BicliqueSpec>(&inst.spec);
  if (!b) throw PreconditionViolated("reduce_bbr_to_ccr requires a biclique instance");
  if (b->p != b->q)
    throw PreconditionViolated("reduce_bbr_to_ccr requires balanced side sizes (p = q)");
  if (inst.rule != MoveRule::TJ)
    throw PreconditionViolated("reduce_bbr_to_ccr requires the tj rule");
  if (rule != MoveRule::CJ && rule != MoveRule::CS)
    throw PreconditionViolated("produced rule must be cj or cs");
  inst.validate();
  if (!find_bipartition(inst.graph)) throw NotBipartite("input graph is not bipartite");
  Instance out;
  out.graph = complement(inst.graph);
  out.spec = MSetSpec{{b->p, b->p}};
  out.rule = rule;
  out.start = inst.start;
  out.target = inst.target;
  out.validate();
  return out;
}

}  // namespace reconfig
