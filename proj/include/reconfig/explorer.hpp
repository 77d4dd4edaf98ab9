#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reconfig/property.hpp"

namespace reconfig {

/// One reconfiguration question: a graph, a property, a move rule and the
/// two endpoint configs.
struct Instance {
  Graph graph;
  PropertySpec spec;
  MoveRule rule = MoveRule::TJ;
  Config start;
  Config target;

  void validate() const {
    validate_spec(spec);
    detail::check_config(graph, start);
    detail::check_config(graph, target);
    if (!satisfies(graph, spec, start))
      throw PropertyViolated("start config " + detail::config_to_string(start) +
                             " does not satisfy the property");
    if (!satisfies(graph, spec, target))
      throw PropertyViolated("target config " + detail::config_to_string(target) +
                             " does not satisfy the property");
  }
};

/// A reconfiguration sequence; valid ones are non-empty, satisfy the
/// property everywhere and step only along legal moves.
struct Sequence {
  std::vector<Config> steps;
  bool operator==(const Sequence&) const = default;
};

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 22;

/// Upper estimate for the number of candidate states the enumerator visits.
inline std::uint64_t candidate_estimate(const Graph& g, const PropertySpec& spec) {
  return detail::binomial_saturating(g.vertex_count(), config_size(spec));
}

namespace detail {

inline void check_cap(const Graph& g, const PropertySpec& spec, std::uint64_t cap) {
  const std::uint64_t est = candidate_estimate(g, spec);
  if (est > cap)
    throw CapExceeded("candidate estimate " + std::to_string(est) + " exceeds cap " +
                      std::to_string(cap), est);
}

}  // namespace detail

/// All configs satisfying the property, sorted lexicographically.
/// Cliques are grown by backtracking; the other properties filter size-|s|
/// subsets. Fails loudly once the candidate estimate passes `cap`.
inline std::vector<Config> enumerate_configs(const Graph& g, const PropertySpec& spec,
                                             std::uint64_t cap = kDefaultCap) {
  validate_spec(spec);
  detail::check_cap(g, spec, cap);
  const int n = g.vertex_count();
  std::vector<Config> out;
  if (const auto* c = std::get_if<CliqueSpec>(&spec)) {
    const int k = c->k;
    Config cur;
    auto extend = [&](auto&& self, int from) -> void {
      if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
      }
      const int missing = k - static_cast<int>(cur.size());
      for (int v = from; v <= n - missing; ++v) {
        bool ok = true;
        for (int u : cur)
          if (!g.has_edge(u, v)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        cur.push_back(v);
        self(self, v + 1);
        cur.pop_back();
      }
    };
    extend(extend, 0);
    return out;
  }
  const int size = config_size(spec);
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  detail::for_each_combination(pool, size, [&](const Config& s) {
    if (satisfies(g, spec, s)) out.push_back(s);
  });
  return out;
}

struct ReachabilityResult {
  bool decision = false;
  std::optional<Sequence> witness;  // shortest; present iff decision holds
};

/// Breadth-first search over the reconfiguration graph, expanding neighbor
/// configs on demand. Deterministic: configs are identified by their sorted
/// vertex list and neighbors are expanded in sorted order, so the witness is
/// a reproducible shortest sequence.
inline ReachabilityResult reachable(const Instance& inst, std::uint64_t cap = kDefaultCap) {
  inst.validate();
  detail::check_cap(inst.graph, inst.spec, cap);
  if (inst.start == inst.target) return {true, Sequence{{inst.start}}};
  std::map<Config, Config> parent;
  parent.emplace(inst.start, Config{});
  std::deque<Config> queue{inst.start};
  while (!queue.empty()) {
    Config cur = std::move(queue.front());
    queue.pop_front();
    for (Config& nxt : enumerate_moves(inst.graph, inst.rule, inst.spec, cur)) {
      if (parent.count(nxt)) continue;
      const bool hit = nxt == inst.target;
      parent.emplace(nxt, cur);
      if (hit) {
        Sequence seq;
        for (Config at = inst.target; !at.empty(); at = parent.at(at))
          seq.steps.push_back(at);
        std::reverse(seq.steps.begin(), seq.steps.end());
        return {true, std::move(seq)};
      }
      queue.push_back(std::move(nxt));
    }
  }
  return {false, std::nullopt};
}

/// Partition of all satisfying configs into mutual-reachability classes.
/// Classes are listed by their lexicographically smallest member; one BFS
/// sweep answers every pairwise instance on this (graph, spec, rule).
inline std::vector<std::vector<Config>> reachability_classes(const Graph& g,
                                                             const PropertySpec& spec,
                                                             MoveRule rule,
                                                             std::uint64_t cap = kDefaultCap) {
  const auto configs = enumerate_configs(g, spec, cap);
  std::map<Config, int> label;
  int next_label = 0;
  for (const Config& seed : configs) {
    if (label.count(seed)) continue;
    const int cls = next_label++;
    label.emplace(seed, cls);
    std::deque<Config> queue{seed};
    while (!queue.empty()) {
      Config cur = std::move(queue.front());
      queue.pop_front();
      for (Config& nxt : enumerate_moves(g, rule, spec, cur)) {
        if (label.count(nxt)) continue;
        label.emplace(nxt, cls);
        queue.push_back(std::move(nxt));
      }
    }
  }
  std::vector<std::vector<Config>> classes(next_label);
  for (const Config& c : configs) classes[label.at(c)].push_back(c);
  return classes;
}

}  // namespace reconfig
