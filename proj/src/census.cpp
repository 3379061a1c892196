#include "osw/census.hpp"

#include <algorithm>
#include <stdexcept>

namespace osw {

namespace {

// Rotates the 3-bit edge-type mask one edge forward: (e1,e2,e3) read from
// the next cycle vertex becomes (e2,e3,e1).
constexpr int rotate_class(int mask) {
  return ((mask << 1) & 0b110) | ((mask >> 2) & 0b001);
}

}  // namespace

std::int64_t base_triangle_count(const OctahedralGraph& g) {
  std::int64_t total = 0;
  for (std::int32_t u = 0; u < g.vertex_count(); ++u) {
    const auto nu = g.neighbors(u);
    for (const std::int32_t v : nu) {
      if (v <= u) continue;
      for (const std::int32_t w : g.neighbors(v)) {
        if (w > v && std::binary_search(nu.begin(), nu.end(), w)) ++total;
      }
    }
  }
  return total;
}

CensusWithEvents c3_census_with_events(const OswGraph& g) {
  const OctahedralGraph& base = *g.base;
  const std::int32_t nv = base.vertex_count();
  CensusWithEvents out;
  out.event_mask.assign(nv, 0);

  std::array<std::int32_t, 7> out_u{};
  std::array<std::int32_t, 7> out_a{};
  std::int64_t rooted_mixed = 0;
  for (std::int32_t u = 0; u < nv; ++u) {
    const std::int32_t cu = g.out_neighbors(u, out_u);
    for (std::int32_t i = 0; i < cu; ++i) {
      const std::int32_t a = out_u[i];
      if (a <= u) continue;  // canonical root is the smallest vertex
      const std::int32_t ca = g.out_neighbors(a, out_a);
      for (std::int32_t k = 0; k < ca; ++k) {
        const std::int32_t b = out_a[k];
        if (b <= u || b == a || !g.has_edge(b, u)) continue;
        const int mask = (g.long_range_only(u, a) ? 0b100 : 0) |
                         (g.long_range_only(a, b) ? 0b010 : 0) |
                         (g.long_range_only(b, u) ? 0b001 : 0);
        ++out.report.counts[mask];
        if (mask != 0) {
          // Mark all three rotation roots with their rotated sequences.
          out.event_mask[u] |= 1 << (mask - 1);
          const int at_a = rotate_class(mask);
          out.event_mask[a] |= 1 << (at_a - 1);
          out.event_mask[b] |= 1 << (rotate_class(at_a) - 1);
        }
      }
    }
  }
  for (std::int32_t u = 0; u < nv; ++u) {
    if (out.event_mask[u] != 0) ++rooted_mixed;
  }
  out.report.base_undirected = base_triangle_count(base);
  out.report.nonbase_total = std::accumulate(out.report.counts.begin() + 1,
                                             out.report.counts.end(),
                                             std::int64_t{0});
  out.report.rooted_indicator_fraction =
      static_cast<double>(rooted_mixed) / nv;
  return out;
}

CensusReport c3_census(const OswGraph& g) {
  return c3_census_with_events(g).report;
}

std::array<bool, 7> rooted_events(const OswGraph& g, std::int32_t u) {
  std::array<bool, 7> events{};
  std::array<std::int32_t, 7> out_u{};
  std::array<std::int32_t, 7> out_a{};
  const std::int32_t cu = g.out_neighbors(u, out_u);
  for (std::int32_t i = 0; i < cu; ++i) {
    const std::int32_t a = out_u[i];
    if (a == u) continue;
    const std::int32_t ca = g.out_neighbors(a, out_a);
    for (std::int32_t k = 0; k < ca; ++k) {
      const std::int32_t b = out_a[k];
      if (b == u || b == a || !g.has_edge(b, u)) continue;
      const int mask = (g.long_range_only(u, a) ? 0b100 : 0) |
                       (g.long_range_only(a, b) ? 0b010 : 0) |
                       (g.long_range_only(b, u) ? 0b001 : 0);
      if (mask != 0) events[mask - 1] = true;
    }
  }
  return events;
}

std::array<bool, 7> rooted_events(const OswGraph& g, Vertex u) {
  return rooted_events(g, g.base->index_of(u));
}

Rational Rational::reduced(std::int64_t num, std::int64_t den) {
  const std::int64_t g = std::gcd(num, den);
  if (g != 0) {
    num /= g;
    den /= g;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

std::string Rational::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

ExactN1Report exact_c3_expectation_n1() {
  const OctahedralGraph g(1);
  const std::int32_t nv = g.vertex_count();  // 6

  // Per-vertex targets in index order; probability 4/17 at distance 1 and
  // 1/17 at distance 2 (the antipode). Joint outcome probabilities are
  // 4^k / 17^6 with k the number of vertices that picked a neighbor.
  std::vector<std::vector<std::int32_t>> targets(nv);
  std::vector<std::vector<bool>> target_is_neighbor(nv);
  for (std::int32_t u = 0; u < nv; ++u) {
    for (std::int32_t w = 0; w < nv; ++w) {
      if (w == u) continue;
      targets[u].push_back(w);
      target_is_neighbor[u].push_back(g.adjacent(u, w));
    }
  }

  std::int64_t den = 1;  // 17^6
  for (int i = 0; i < 6; ++i) den *= 17;

  // Brute-force count of mixed directed 3-cycles for one outcome, written
  // against the Definition-1 adjacency directly rather than the census
  // enumerator.
  const auto count_outcome = [&](const std::array<std::int32_t, 6>& choice,
                                 std::int64_t& mixed,
                                 std::uint8_t& through_mask) {
    mixed = 0;
    through_mask = 0;
    const auto edge = [&](std::int32_t x, std::int32_t y) {
      return g.adjacent(x, y) || choice[x] == y;
    };
    const auto is_w = [&](std::int32_t x, std::int32_t y) {
      return !g.adjacent(x, y);
    };
    for (std::int32_t i = 0; i < nv; ++i) {
      for (std::int32_t j = i + 1; j < nv; ++j) {
        for (std::int32_t k = i + 1; k < nv; ++k) {
          if (k == j) continue;
          if (edge(i, j) && edge(j, k) && edge(k, i) &&
              (is_w(i, j) || is_w(j, k) || is_w(k, i))) {
            ++mixed;
            through_mask |= (1 << i) | (1 << j) | (1 << k);
          }
        }
      }
    }
  };

  std::int64_t weight_total = 0;
  std::int64_t ex_num = 0;
  std::array<std::int64_t, 6> eu_num{};

  std::array<std::int32_t, 6> choice{};
  std::array<std::int32_t, 6> pick{};
  for (;;) {
    std::int64_t weight = 1;
    for (std::int32_t u = 0; u < nv; ++u) {
      choice[u] = targets[u][pick[u]];
      if (target_is_neighbor[u][pick[u]]) weight *= 4;
    }
    std::int64_t mixed = 0;
    std::uint8_t through = 0;
    count_outcome(choice, mixed, through);
    weight_total += weight;
    ex_num += weight * mixed;
    for (std::int32_t u = 0; u < nv; ++u) {
      if (through & (1 << u)) eu_num[u] += weight;
    }

    // Advance the mixed-radix counter over the 5^6 outcomes.
    std::int32_t pos = 0;
    while (pos < nv && ++pick[pos] == 5) pick[pos++] = 0;
    if (pos == nv) break;
  }

  ExactN1Report report;
  report.total_probability = Rational::reduced(weight_total, den);
  report.expected_nonbase_c3s = Rational::reduced(ex_num, den);
  report.pr_eu = Rational::reduced(eu_num[0], den);
  for (std::int32_t u = 1; u < nv; ++u) {
    // Octahedral symmetry: every vertex sees the same probability.
    if (Rational::reduced(eu_num[u], den) != report.pr_eu) {
      throw std::logic_error("n=1 oracle: Pr(E_u) differs across vertices");
    }
  }
  return report;
}

}  // namespace osw
