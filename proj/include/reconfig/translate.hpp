#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reconfig/reduction.hpp"

namespace reconfig {

struct SequenceViolation {
  int index = 0;
  std::string reason;
};

/// Checks a sequence against an instance: starts at `start`, ends at
/// `target`, every entry satisfies the property, every consecutive pair is a
/// legal move. Returns the first violation, or nothing when the sequence is
/// valid.
inline std::optional<SequenceViolation> verify_sequence(const Instance& inst,
                                                        const Sequence& seq) {
  inst.validate();
  if (seq.steps.empty()) return SequenceViolation{0, "sequence is empty"};
  if (seq.steps.front() != inst.start)
    return SequenceViolation{0, "sequence does not begin at the start config"};
  for (int i = 0; i < static_cast<int>(seq.steps.size()); ++i) {
    try {
      if (!satisfies(inst.graph, inst.spec, seq.steps[i]))
        return SequenceViolation{i, "config does not satisfy the property"};
    } catch (const Error& e) {
      return SequenceViolation{i, e.what()};
    }
    if (i > 0 && !is_move(inst.graph, inst.rule, inst.spec, seq.steps[i - 1], seq.steps[i]))
      return SequenceViolation{i, "not a legal " + rule_name(inst.rule) +
                                      " move from the previous config"};
  }
  if (seq.steps.back() != inst.target)
    return SequenceViolation{static_cast<int>(seq.steps.size()) - 1,
                             "sequence does not end at the target config"};
  return std::nullopt;
}

/// Per-step record of the choices a lift makes: which vertex leaves/enters
/// the clique, the unlock vertices on either side, and how many micro-moves
/// the step expanded into.
struct TranslationStep {
  int index = 0;
  int leave = -1;          // u_i: leaves the clique
  int enter = -1;          // v_{i+1}: enters the clique
  int unlock_before = -1;  // w_i: V-side vertex missing from S_i
  int unlock_after = -1;   // w_{i+1}: V-side vertex missing from S_{i+1}
  int micro_moves = 0;
};

struct TranslationTrace {
  std::vector<TranslationStep> steps;
};

namespace detail {

inline int single_element(const Config& diff, const char* what) {
  if (diff.size() != 1) throw Error(std::string("expected exactly one ") + what);
  return diff.front();
}

inline std::map<std::pair<int, int>, int> edge_vertex_index(
    const std::vector<VertexOrigin>& origin) {
  std::map<std::pair<int, int>, int> idx;
  for (std::size_t i = 0; i < origin.size(); ++i)
    if (origin[i].kind == VertexOrigin::Kind::Edge)
      idx.emplace(origin[i].edge, static_cast<int>(i));
  return idx;
}

}  // namespace detail

/// Expands a clique sequence K_0..K_l into a biclique sequence on the
/// derived graph. Each clique move u -> v becomes at most k+1 micro-moves:
/// park the incoming vertex's V-side slot (skipped when the unlock vertex
/// already equals v), swap the k-1 edge vertices {u,x} -> {v,x} in
/// increasing x, then restore the V-side (skipped when the unlock vertex
/// equals u). Intermediate unlock vertices follow the lowest-id rule.
inline std::pair<Sequence, TranslationTrace> lift_clique_sequence(const ReductionCert& cert,
                                                                  const Sequence& clique_seq) {
  if (auto v = verify_sequence(cert.source, clique_seq))
    throw InvalidSourceSequence(
        "clique sequence invalid at index " + std::to_string(v->index) + ": " + v->reason,
        v->index);
  const Graph& g = cert.source.graph;
  const auto edge_id = detail::edge_vertex_index(cert.origin);
  const Config all = g.all_vertices();
  const auto eid = [&](int a, int b) {
    auto it = edge_id.find({std::min(a, b), std::max(a, b)});
    if (it == edge_id.end())
      throw PreconditionViolated("certificate origin map lacks edge {" + std::to_string(a) +
                                 "," + std::to_string(b) + "}");
    return it->second;
  };
  const auto unlocked = [&](const Config& k, int w) {
    Config s = detail::config_difference(all, k);
    s = detail::config_difference(s, {w});
    for (std::size_t i = 0; i < k.size(); ++i)
      for (std::size_t j = i + 1; j < k.size(); ++j)
        if (g.has_edge(k[i], k[j])) s.push_back(eid(k[i], k[j]));
    std::sort(s.begin(), s.end());
    return s;
  };
  const int moves = static_cast<int>(clique_seq.steps.size()) - 1;
  const auto unlock_of = [&](int i, const Config& k) {
    if (i == 0) return cert.removed_start;
    if (i == moves) return cert.removed_target;
    return detail::config_difference(all, k).front();
  };
  if (unlocked(clique_seq.steps.front(), cert.removed_start) != cert.produced.start)
    throw PreconditionViolated("certificate start does not match the produced instance");
  if (unlocked(clique_seq.steps.back(), cert.removed_target) != cert.produced.target)
    throw PreconditionViolated("certificate target does not match the produced instance");

  Sequence out;
  out.steps.push_back(cert.produced.start);
  TranslationTrace trace;
  Config cur = cert.produced.start;
  for (int i = 0; i < moves; ++i) {
    const Config& ki = clique_seq.steps[i];
    const Config& kn = clique_seq.steps[i + 1];
    const int u = detail::single_element(detail::config_difference(ki, kn), "leaving vertex");
    const int v = detail::single_element(detail::config_difference(kn, ki), "entering vertex");
    const int wi = unlock_of(i, ki);
    const int wn = unlock_of(i + 1, kn);
    int micro = 0;
    const auto emit = [&](int out_v, int in_v) {
      cur = detail::config_remove_add(cur, out_v, in_v);
      out.steps.push_back(cur);
      ++micro;
    };
    if (wi != v) emit(v, wi);
    for (int x : detail::config_difference(detail::config_union(ki, kn), {std::min(u, v), std::max(u, v)}))
      emit(eid(u, x), eid(v, x));
    if (wn != u) emit(wn, u);
    trace.steps.push_back({i, u, v, wi, wn, micro});
  }
  if (cur != cert.produced.target)
    throw PreconditionViolated("lifted sequence does not land on the produced target");
  return {std::move(out), std::move(trace)};
}

/// Collapses a biclique sequence on the derived graph back to a clique
/// sequence on the source. With V_i = V minus the V-side of S_i, an E-side
/// move leaves V_i unchanged and contributes nothing; a V-side move makes
/// V_i cap V_{i+1} the next clique. Runs of equal cliques are collapsed so
/// the output is a strict one-in/one-out sequence from start to target.
inline Sequence project_biclique_sequence(const ReductionCert& cert, const Sequence& bic_seq) {
  if (auto v = verify_sequence(cert.produced, bic_seq))
    throw InvalidSourceSequence(
        "biclique sequence invalid at index " + std::to_string(v->index) + ": " + v->reason,
        v->index);
  const Graph& g = cert.source.graph;
  const int n = g.vertex_count();
  const Config all = g.all_vertices();
  const auto missing_vside = [&](const Config& s) {
    Config vside;
    for (int x : s) {
      if (x >= n) break;
      vside.push_back(x);
    }
    return detail::config_difference(all, vside);
  };
  std::vector<Config> cliques;
  cliques.push_back(cert.source.start);
  Config prev = missing_vside(bic_seq.steps.front());
  for (std::size_t i = 1; i < bic_seq.steps.size(); ++i) {
    Config cur = missing_vside(bic_seq.steps[i]);
    if (cur == prev)
      cliques.push_back(cliques.back());
    else
      cliques.push_back(detail::config_intersection(prev, cur));
    prev = std::move(cur);
  }
  cliques.push_back(cert.source.target);
  Sequence out;
  for (Config& k : cliques)
    if (out.steps.empty() || k != out.steps.back()) out.steps.push_back(std::move(k));
  if (auto v = verify_sequence(cert.source, out))
    throw PreconditionViolated("projected sequence failed verification at index " +
                               std::to_string(v->index) + ": " + v->reason +
                               " (inconsistent certificate)");
  return out;
}

}  // namespace reconfig
