#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "reconfig/graph.hpp"

namespace reconfig {

// ---------------------------------------------------------------------------
// Property specs and move rules

struct CliqueSpec {
  int k = 1;
  bool operator==(const CliqueSpec&) const = default;
};

/// Biclique side sizes; the pair is unordered for matching purposes.
struct BicliqueSpec {
  int p = 1, q = 1;
  bool operator==(const BicliqueSpec&) const = default;
};

/// Required multiset of connected-component sizes, stored ascending.
struct MSetSpec {
  std::vector<int> sizes;
  bool operator==(const MSetSpec&) const = default;
};

using PropertySpec = std::variant<CliqueSpec, BicliqueSpec, MSetSpec>;

enum class MoveRule { TJ, CJ, CS, CS1 };

inline void validate_spec(const PropertySpec& spec) {
  if (const auto* c = std::get_if<CliqueSpec>(&spec)) {
    if (c->k < 1) throw Error("clique size must be >= 1");
  } else if (const auto* b = std::get_if<BicliqueSpec>(&spec)) {
    if (b->p < 1 || b->q < 1) throw Error("biclique side sizes must be >= 1");
  } else {
    const auto& m = std::get<MSetSpec>(spec);
    if (m.sizes.empty()) throw Error("component multiset must be non-empty");
    if (!std::is_sorted(m.sizes.begin(), m.sizes.end()))
      throw Error("component multiset must be sorted ascending");
    for (int s : m.sizes)
      if (s < 1) throw Error("component sizes must be >= 1");
  }
}

/// Number of vertices any satisfying config must have (saturating; any
/// value past the vertex count means "no config" anyway).
inline int config_size(const PropertySpec& spec) {
  long long total = 0;
  if (const auto* c = std::get_if<CliqueSpec>(&spec)) {
    total = c->k;
  } else if (const auto* b = std::get_if<BicliqueSpec>(&spec)) {
    total = static_cast<long long>(b->p) + b->q;
  } else {
    for (int s : std::get<MSetSpec>(spec).sizes) total += s;
  }
  return static_cast<int>(std::min<long long>(total, std::numeric_limits<int>::max()));
}

inline std::string rule_name(MoveRule r) {
  switch (r) {
    case MoveRule::TJ: return "tj";
    case MoveRule::CJ: return "cj";
    case MoveRule::CS: return "cs";
    case MoveRule::CS1: return "cs1";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Predicates

/// True iff all pairs in s are adjacent (vacuously true for |s| <= 1).
inline bool is_clique(const Graph& g, const Config& s) {
  detail::check_config(g, s);
  if (s.size() <= 1) return true;
  if (g.has_masks()) {
    const std::uint64_t sm = detail::mask_of(s);
    for (int v : s) {
      const std::uint64_t others = sm & ~(std::uint64_t{1} << v);
      if ((others & ~g.neighbor_mask(v)) != 0) return false;
    }
    return true;
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return false;
  return true;
}

/// If g[s] is a complete bipartite graph with both sides non-empty, returns
/// the side sizes as (larger, smaller). Returns nothing for |s| < 2 and for
/// edgeless induced subgraphs, whose split into sides is ambiguous.
inline std::optional<std::pair<int, int>> biclique_shape(const Graph& g, const Config& s) {
  detail::check_config(g, s);
  if (s.size() < 2) return std::nullopt;
  // Candidate split: the side of s[0] is exactly the non-neighbors of s[0]
  // within s. Each vertex must then see precisely the opposite side.
  if (g.has_masks()) {
    const std::uint64_t sm = detail::mask_of(s);
    const std::uint64_t y = g.neighbor_mask(s.front()) & sm;
    const std::uint64_t x = sm & ~y;
    if (y == 0) return std::nullopt;
    for (std::uint64_t f = x; f;) {
      int v = std::countr_zero(f);
      f &= f - 1;
      if ((g.neighbor_mask(v) & sm) != y) return std::nullopt;
    }
    for (std::uint64_t f = y; f;) {
      int v = std::countr_zero(f);
      f &= f - 1;
      if ((g.neighbor_mask(v) & sm) != x) return std::nullopt;
    }
    const int p = std::popcount(x), q = std::popcount(y);
    return std::make_pair(std::max(p, q), std::min(p, q));
  }
  std::vector<char> in_s(g.vertex_count(), 0);
  for (int v : s) in_s[v] = 1;
  auto side_within = [&](int v) {
    Config nb;
    for (int w : g.neighbors(v))
      if (in_s[w]) nb.push_back(w);
    return nb;  // sorted: neighbor lists are sorted
  };
  const Config y = side_within(s.front());
  if (y.empty()) return std::nullopt;
  const Config x = detail::config_difference(s, y);
  for (int v : x)
    if (side_within(v) != y) return std::nullopt;
  for (int v : y)
    if (side_within(v) != x) return std::nullopt;
  const int p = static_cast<int>(x.size()), q = static_cast<int>(y.size());
  return std::make_pair(std::max(p, q), std::min(p, q));
}

/// Multiset of the orders of connected components of g[s], ascending.
inline std::vector<int> component_multiset(const Graph& g, const Config& s) {
  detail::check_config(g, s);
  std::vector<int> sizes;
  if (g.has_masks()) {
    for (std::uint64_t m : detail::components_of_mask(g, detail::mask_of(s)))
      sizes.push_back(std::popcount(m));
  } else {
    for (const auto& comp : detail::components_general(g, s))
      sizes.push_back(static_cast<int>(comp.size()));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

inline bool satisfies(const Graph& g, const PropertySpec& spec, const Config& s) {
  detail::check_config(g, s);
  if (const auto* c = std::get_if<CliqueSpec>(&spec))
    return static_cast<int>(s.size()) == c->k && is_clique(g, s);
  if (const auto* b = std::get_if<BicliqueSpec>(&spec)) {
    if (static_cast<int>(s.size()) != b->p + b->q) return false;
    const auto shape = biclique_shape(g, s);
    return shape && shape->first == std::max(b->p, b->q) &&
           shape->second == std::min(b->p, b->q);
  }
  const auto& m = std::get<MSetSpec>(spec);
  if (static_cast<int>(s.size()) != config_size(spec)) return false;
  return component_multiset(g, s) == m.sizes;
}

// ---------------------------------------------------------------------------
// Move rules

namespace detail {

/// Rule check with property checks already done; cc_s is cc(g, s).
inline bool rule_move_ok(const Graph& g, MoveRule rule, const std::vector<Config>& cc_s,
                         const Config& s, const Config& t) {
  if (rule == MoveRule::TJ)
    return difference_size(s, t) == 1 && difference_size(t, s) == 1;
  const auto cc_t = connected_components(g, t);
  std::vector<Config> outs, ins;
  std::set_difference(cc_s.begin(), cc_s.end(), cc_t.begin(), cc_t.end(),
                      std::back_inserter(outs));
  std::set_difference(cc_t.begin(), cc_t.end(), cc_s.begin(), cc_s.end(),
                      std::back_inserter(ins));
  if (outs.size() != 1 || ins.size() != 1) return false;
  if (rule == MoveRule::CJ) return true;
  const Config& xs = outs.front();
  const Config& xt = ins.front();
  const Config uni = config_union(xs, xt);
  if (g.has_masks()) {
    if (!mask_connected(g, mask_of(uni))) return false;
  } else {
    if (components_general(g, uni).size() != 1) return false;
  }
  if (rule == MoveRule::CS) return true;
  return difference_size(xs, xt) == 1 && difference_size(xt, xs) == 1;  // CS1
}

}  // namespace detail

/// Decides whether s -> t is one legal move under the rule. Both configs
/// must satisfy the property; that is a precondition, not a `false`.
inline bool is_move(const Graph& g, MoveRule rule, const PropertySpec& spec, const Config& s,
                    const Config& t) {
  if (!satisfies(g, spec, s))
    throw PropertyViolated("move origin " + detail::config_to_string(s) +
                           " does not satisfy the property");
  if (!satisfies(g, spec, t))
    throw PropertyViolated("move destination " + detail::config_to_string(t) +
                           " does not satisfy the property");
  const auto cc_s = rule == MoveRule::TJ ? std::vector<Config>{} : connected_components(g, s);
  return detail::rule_move_ok(g, rule, cc_s, s, t);
}

/// All configs reachable from s in one legal move, sorted lexicographically.
///
/// TJ candidates are the one-out/one-in swaps. For the component rules every
/// component X of g[s] is tentatively replaced by each same-sized vertex set
/// drawn from outside s \ X, then filtered by the rule; any legal move has
/// this form, since the untouched components and the total size are fixed.
inline std::vector<Config> enumerate_moves(const Graph& g, MoveRule rule,
                                           const PropertySpec& spec, const Config& s) {
  if (!satisfies(g, spec, s))
    throw PropertyViolated("config " + detail::config_to_string(s) +
                           " does not satisfy the property");
  std::vector<Config> result;
  const int n = g.vertex_count();
  if (rule == MoveRule::TJ) {
    std::vector<char> in_s(n, 0);
    for (int v : s) in_s[v] = 1;
    for (int out : s) {
      for (int in = 0; in < n; ++in) {
        if (in_s[in]) continue;
        Config t = detail::config_remove_add(s, out, in);
        if (satisfies(g, spec, t)) result.push_back(std::move(t));
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }
  const auto cc_s = connected_components(g, s);
  std::set<Config> seen;
  for (const Config& x : cc_s) {
    const Config rest = detail::config_difference(s, x);
    std::vector<char> blocked(n, 0);
    for (int v : rest) blocked[v] = 1;
    std::vector<int> pool;
    for (int v = 0; v < n; ++v)
      if (!blocked[v]) pool.push_back(v);
    detail::for_each_combination(pool, static_cast<int>(x.size()), [&](const Config& r) {
      Config t = detail::config_union(rest, r);
      if (t == s) return;
      if (!satisfies(g, spec, t)) return;
      if (detail::rule_move_ok(g, rule, cc_s, s, t)) seen.insert(std::move(t));
    });
  }
  result.assign(seen.begin(), seen.end());
  return result;
}

}  // namespace reconfig
