#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "osw/octagraph.hpp"
#include "osw/oswmodel.hpp"
#include "osw/vertex.hpp"

namespace oracle {

// All lattice points with L1 norm n, by scanning the bounding cube.
inline std::vector<osw::Vertex> surface_points(int n) {
  std::vector<osw::Vertex> points;
  for (int a = -n; a <= n; ++a) {
    for (int b = -n; b <= n; ++b) {
      for (int c = -n; c <= n; ++c) {
        if (std::abs(a) + std::abs(b) + std::abs(c) == n) {
          points.push_back({a, b, c});
        }
      }
    }
  }
  std::sort(points.begin(), points.end());
  return points;
}

// The adjacency predicate straight from the definition: distinct points
// differing by at most 1 in every coordinate.
inline bool definition_adjacent(osw::Vertex v, osw::Vertex w) {
  return v != w && std::abs(v.u1 - w.u1) <= 1 && std::abs(v.u2 - w.u2) <= 1 &&
         std::abs(v.u3 - w.u3) <= 1;
}

// All-pairs adjacency lists for small n.
inline std::vector<std::vector<std::int32_t>> all_pairs_adjacency(
    const std::vector<osw::Vertex>& points) {
  const auto nv = static_cast<std::int32_t>(points.size());
  std::vector<std::vector<std::int32_t>> adjacency(nv);
  for (std::int32_t i = 0; i < nv; ++i) {
    for (std::int32_t j = 0; j < nv; ++j) {
      if (definition_adjacent(points[i], points[j])) {
        adjacency[i].push_back(j);
      }
    }
  }
  return adjacency;
}

// Directed 3-cycle counts per edge-type mask, enumerated over all vertex
// triples with a plain edge predicate. Mask bit 2/1/0 = first/second/third
// edge long-range-only, cycles rooted at their smallest vertex.
struct CycleCounts {
  std::array<std::int64_t, 8> counts{};
  std::vector<std::uint8_t> through;  // vertex lies on some mixed cycle

  std::int64_t mixed_total() const {
    return std::accumulate(counts.begin() + 1, counts.end(), std::int64_t{0});
  }
};

inline CycleCounts brute_force_cycles(const osw::OswGraph& g) {
  const osw::OctahedralGraph& base = *g.base;
  const std::int32_t nv = base.vertex_count();
  const auto edge = [&](std::int32_t x, std::int32_t y) {
    return oracle::definition_adjacent(base.vertex(x), base.vertex(y)) ||
           g.long_range[x] == y;
  };
  const auto is_w = [&](std::int32_t x, std::int32_t y) {
    return !oracle::definition_adjacent(base.vertex(x), base.vertex(y));
  };
  CycleCounts result;
  result.through.assign(nv, 0);
  for (std::int32_t i = 0; i < nv; ++i) {
    for (std::int32_t j = i + 1; j < nv; ++j) {
      if (!edge(i, j)) continue;
      for (std::int32_t k = i + 1; k < nv; ++k) {
        if (k == j || !edge(j, k) || !edge(k, i)) continue;
        const int mask = (is_w(i, j) ? 4 : 0) | (is_w(j, k) ? 2 : 0) |
                         (is_w(k, i) ? 1 : 0);
        ++result.counts[mask];
        if (mask != 0) {
          result.through[i] = result.through[j] = result.through[k] = 1;
        }
      }
    }
  }
  return result;
}

// Exact rational sum of d(u,w)^-2 over targets, as numerator/denominator of
// 128-bit integers with denominator lcm(1..max_d)^2. Wide enough for
// n <= 32.
struct ExactSum {
  __int128 num = 0;
  __int128 den = 1;
};

inline ExactSum exact_inverse_square_sum(const std::vector<std::int32_t>& dist,
                                         std::int32_t source) {
  std::int64_t lcm = 1;
  std::int32_t max_d = 0;
  for (const std::int32_t d : dist) max_d = std::max(max_d, d);
  for (std::int32_t d = 1; d <= max_d; ++d) lcm = std::lcm<std::int64_t>(lcm, d);
  ExactSum sum;
  sum.den = static_cast<__int128>(lcm) * lcm;
  for (std::size_t w = 0; w < dist.size(); ++w) {
    if (static_cast<std::int32_t>(w) == source) continue;
    const std::int64_t d = dist[w];
    const __int128 term = sum.den / (static_cast<__int128>(d) * d);
    sum.num += term;
  }
  return sum;
}

inline double to_double(__int128 v) {
  const bool negative = v < 0;
  if (negative) v = -v;
  const auto high = static_cast<std::uint64_t>(v >> 64);
  const auto low = static_cast<std::uint64_t>(v);
  const double value =
      static_cast<double>(high) * 18446744073709551616.0 +
      static_cast<double>(low);
  return negative ? -value : value;
}

// Z_u as a double from the exact rational sum.
inline double exact_normalizing_factor(const std::vector<std::int32_t>& dist,
                                       std::int32_t source) {
  const ExactSum sum = exact_inverse_square_sum(dist, source);
  return to_double(sum.den) / to_double(sum.num);
}

}  // namespace oracle
