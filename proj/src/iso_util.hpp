/*
 * Copyright (c) 2026, The giacheck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GIACHECK_SRC_ISO_UTIL_HPP_
#define GIACHECK_SRC_ISO_UTIL_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace giacheck::detail {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  std::uint64_t x = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

inline std::uint64_t hash_string(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Edge list entry: (edge colour, neighbour).
using ColouredAdj = std::vector<std::vector<std::pair<std::uint64_t, std::size_t>>>;

/**
 * Colour refinement. Colours are canonical across graphs, so the resulting
 * multisets can be compared between two inputs.
 */
inline std::vector<std::uint64_t> refine(std::vector<std::uint64_t> colours,
                                         const ColouredAdj& out, const ColouredAdj& in) {
  auto distinct = [](std::vector<std::uint64_t> c) {
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  };
  std::size_t classes = distinct(colours);
  for (std::size_t round = 0; round < colours.size(); ++round) {
    std::vector<std::uint64_t> next(colours.size());
    for (std::size_t v = 0; v < colours.size(); ++v) {
      std::vector<std::uint64_t> o, i;
      for (auto [c, w] : out[v]) o.push_back(mix(c, colours[w]));
      for (auto [c, w] : in[v]) i.push_back(mix(c, colours[w]));
      std::sort(o.begin(), o.end());
      std::sort(i.begin(), i.end());
      std::uint64_t h = mix(colours[v], 0x51);
      for (auto x : o) h = mix(h, x);
      h = mix(h, 0x77);
      for (auto x : i) h = mix(h, x);
      next[v] = h;
    }
    colours = std::move(next);
    std::size_t now = distinct(colours);
    if (now == classes) break;
    classes = now;
  }
  return colours;
}

/**
 * Backtracking search for a colour-preserving bijection.
 *
 * `consistent(a, b, map)` checks a new assignment a -> b against the partial
 * map (entries equal to npos are unassigned).
 */
inline bool find_bijection(
    const std::vector<std::uint64_t>& ca, const std::vector<std::uint64_t>& cb,
    const std::function<bool(std::size_t, std::size_t, const std::vector<std::size_t>&)>&
        consistent) {
  const std::size_t n = ca.size();
  if (cb.size() != n) return false;
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  // Rare colours first.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  auto freq = [&](std::uint64_t c) { return std::count(ca.begin(), ca.end(), c); };
  std::vector<long> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = static_cast<long>(freq(ca[i]));
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return f[x] < f[y]; });
  std::vector<std::size_t> map(n, npos);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> go = [&](std::size_t k) {
    if (k == n) return true;
    std::size_t a = order[k];
    for (std::size_t b = 0; b < n; ++b) {
      if (used[b] || cb[b] != ca[a]) continue;
      if (!consistent(a, b, map)) continue;
      map[a] = b;
      used[b] = true;
      if (go(k + 1)) return true;
      map[a] = npos;
      used[b] = false;
    }
    return false;
  };
  return go(0);
}

}  // namespace giacheck::detail

#endif  // GIACHECK_SRC_ISO_UTIL_HPP_
