#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "reconfig/error.hpp"

namespace reconfig {

using Vertex = int;

/// A configuration: a set of vertex ids, stored sorted and duplicate-free.
using Config = std::vector<Vertex>;

namespace detail {

/// C(n, k) with saturation at UINT64_MAX.
inline std::uint64_t binomial_saturating(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

inline bool is_canonical(const Config& c) {
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i - 1] >= c[i]) return false;
  return true;
}

inline Config canonical_config(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline std::uint64_t mask_of(const Config& c) {
  std::uint64_t m = 0;
  for (int v : c) m |= std::uint64_t{1} << v;
  return m;
}

inline Config config_of_mask(std::uint64_t m) {
  Config c;
  while (m) {
    int v = std::countr_zero(m);
    c.push_back(v);
    m &= m - 1;
  }
  return c;
}

inline bool config_contains(const Config& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

/// s with `out` removed and `in` inserted; both must apply cleanly.
inline Config config_remove_add(const Config& s, int out, int in) {
  Config t;
  t.reserve(s.size());
  for (int v : s)
    if (v != out) t.push_back(v);
  t.insert(std::upper_bound(t.begin(), t.end(), in), in);
  return t;
}

inline Config config_union(const Config& a, const Config& b) {
  Config r;
  r.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline Config config_difference(const Config& a, const Config& b) {
  Config r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline Config config_intersection(const Config& a, const Config& b) {
  Config r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

/// |a \ b| without materializing the difference.
inline std::size_t difference_size(const Config& a, const Config& b) {
  std::size_t n = 0;
  auto ib = b.begin();
  for (int v : a) {
    while (ib != b.end() && *ib < v) ++ib;
    if (ib == b.end() || *ib != v) ++n;
  }
  return n;
}

inline std::string config_to_string(const Config& c) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << '}';
  return os.str();
}

/// Calls f(pick) for every size-r subset of `pool`, in lexicographic order
/// of positions. `pool` itself need not be sorted; picks follow pool order.
template <class F>
void for_each_combination(const std::vector<int>& pool, int r, F&& f) {
  const int n = static_cast<int>(pool.size());
  if (r < 0 || r > n) return;
  if (r == 0) {
    Config empty;
    f(empty);
    return;
  }
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  Config pick(r);
  while (true) {
    for (int i = 0; i < r; ++i) pick[i] = pool[idx[i]];
    f(const_cast<const Config&>(pick));
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail
}  // namespace reconfig
