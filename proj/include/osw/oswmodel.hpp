#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "osw/octagraph.hpp"
#include "osw/vertex.hpp"

namespace osw {

// The inverse-square long-range law of one source vertex: a categorical
// distribution over every other vertex with Pr(target) = z / d(source,
// target)^2. Targets are listed in ascending index order.
struct LongRangeDistribution {
  std::int32_t source = 0;
  std::vector<std::int32_t> targets;
  std::vector<double> probability;
  std::vector<double> cumulative;  // prefix sums; back() is exactly 1.0
  double z = 0.0;                  // normalizing factor Z_u

  // Inverse-CDF lookup for a uniform draw in [0, 1).
  std::int32_t sample(double unit) const;
};

// Z_u = (sum over w != u of d(u,w)^-2)^-1, from one BFS.
double normalizing_factor(const OctahedralGraph& g, std::int32_t u);
double normalizing_factor(const OctahedralGraph& g, Vertex u);

LongRangeDistribution long_range_distribution(const OctahedralGraph& g,
                                              std::int32_t u);
LongRangeDistribution long_range_distribution(const OctahedralGraph& g,
                                              Vertex u);

// A sampled octahedral small-world graph: both orientations of every base
// edge plus one sampled long-range target per vertex. When the sampled
// target is already a base neighbor the trial adds no edge and the dedup
// flag is set, so the directed edge set never contains parallel edges.
// Holds a pointer to the base graph; the base must outlive the sample.
struct OswGraph {
  const OctahedralGraph* base = nullptr;
  std::uint64_t seed = 0;
  std::vector<std::int32_t> long_range;  // sampled target per vertex
  std::vector<std::uint8_t> deduped;     // 1 if the target is a base neighbor

  std::int32_t vertex_count() const { return base->vertex_count(); }

  // True if u's trial contributed a long-range edge (target not a base
  // neighbor).
  bool has_long_range_edge(std::int32_t u) const { return deduped[u] == 0; }

  // Out-neighbors of u: base neighbors plus the long-range target when it
  // adds an edge. At most 7 entries, written in ascending index order.
  std::int32_t out_neighbors(std::int32_t u,
                             std::array<std::int32_t, 7>& buffer) const;

  // Directed edge test on E = base edges (both directions) + long-range.
  bool has_edge(std::int32_t from, std::int32_t to) const;

  // True if (from, to) is an edge of the sample but not a base edge.
  bool long_range_only(std::int32_t from, std::int32_t to) const;
};

// Draws one long-range target for vertex u from its distribution, using the
// substream keyed by (seed, u). The same (seed, u) always yields the same
// target, independent of any other vertex.
std::int32_t sample_target(const LongRangeDistribution& dist,
                           std::uint64_t seed);

// Samples the full OSW graph: one independent trial per vertex. Identical
// (g, seed) gives identical results regardless of evaluation order.
OswGraph sample_osw(const OctahedralGraph& g, std::uint64_t seed);

// Samples one OSW graph per seed, sharing the per-vertex distribution work
// across all seeds (one BFS per vertex total instead of per sample).
// Equivalent to calling sample_osw once per seed.
std::vector<OswGraph> sample_osw_batch(const OctahedralGraph& g,
                                       std::span<const std::uint64_t> seeds);

// Degenerate sample with no long-range edges: every vertex's target is its
// first base neighbor, flagged as deduped. Useful as the base-graph view.
OswGraph base_only_osw(const OctahedralGraph& g);

}  // namespace osw
