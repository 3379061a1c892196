#include "osw/oswmodel.hpp"

#include <algorithm>
#include <stdexcept>

#include "osw/rng.hpp"

namespace osw {

std::int32_t LongRangeDistribution::sample(double unit) const {
  const auto it =
      std::upper_bound(cumulative.begin(), cumulative.end(), unit);
  const auto pos = std::min<std::size_t>(
      static_cast<std::size_t>(it - cumulative.begin()), targets.size() - 1);
  return targets[pos];
}

double normalizing_factor(const OctahedralGraph& g, std::int32_t u) {
  const DistanceField field = g.bfs_distances(u);
  double sum = 0.0;
  for (std::int32_t w = 0; w < g.vertex_count(); ++w) {
    if (w == u) continue;
    const double d = static_cast<double>(field.dist[w]);
    sum += 1.0 / (d * d);
  }
  return 1.0 / sum;
}

double normalizing_factor(const OctahedralGraph& g, Vertex u) {
  return normalizing_factor(g, g.index_of(u));
}

LongRangeDistribution long_range_distribution(const OctahedralGraph& g,
                                              std::int32_t u) {
  const DistanceField field = g.bfs_distances(u);
  LongRangeDistribution dist;
  dist.source = u;
  const std::int32_t nv = g.vertex_count();
  dist.targets.reserve(nv - 1);
  dist.probability.reserve(nv - 1);
  dist.cumulative.reserve(nv - 1);

  double sum = 0.0;
  for (std::int32_t w = 0; w < nv; ++w) {
    if (w == u) continue;
    const double d = static_cast<double>(field.dist[w]);
    sum += 1.0 / (d * d);
  }
  dist.z = 1.0 / sum;

  double acc = 0.0;
  for (std::int32_t w = 0; w < nv; ++w) {
    if (w == u) continue;
    const double d = static_cast<double>(field.dist[w]);
    const double p = dist.z / (d * d);
    acc += p;
    dist.targets.push_back(w);
    dist.probability.push_back(p);
    dist.cumulative.push_back(acc);
  }
  dist.cumulative.back() = 1.0;
  return dist;
}

LongRangeDistribution long_range_distribution(const OctahedralGraph& g,
                                              Vertex u) {
  return long_range_distribution(g, g.index_of(u));
}

std::int32_t OswGraph::out_neighbors(std::int32_t u,
                                     std::array<std::int32_t, 7>& buffer) const {
  const auto nb = base->neighbors(u);
  std::int32_t count = 0;
  const std::int32_t extra = has_long_range_edge(u) ? long_range[u] : -1;
  bool inserted = extra < 0;
  for (const std::int32_t w : nb) {
    if (!inserted && extra < w) {
      buffer[count++] = extra;
      inserted = true;
    }
    buffer[count++] = w;
  }
  if (!inserted) buffer[count++] = extra;
  return count;
}

bool OswGraph::has_edge(std::int32_t from, std::int32_t to) const {
  return base->adjacent(from, to) || long_range[from] == to;
}

bool OswGraph::long_range_only(std::int32_t from, std::int32_t to) const {
  return long_range[from] == to && !base->adjacent(from, to);
}

std::int32_t sample_target(const LongRangeDistribution& dist,
                           std::uint64_t seed) {
  SplitMix64 stream = substream(seed, static_cast<std::uint64_t>(dist.source));
  return dist.sample(stream.next_unit());
}

OswGraph sample_osw(const OctahedralGraph& g, std::uint64_t seed) {
  OswGraph sample;
  sample.base = &g;
  sample.seed = seed;
  const std::int32_t nv = g.vertex_count();
  sample.long_range.resize(nv);
  sample.deduped.resize(nv);
  for (std::int32_t u = 0; u < nv; ++u) {
    const LongRangeDistribution dist = long_range_distribution(g, u);
    const std::int32_t target = sample_target(dist, seed);
    sample.long_range[u] = target;
    sample.deduped[u] = g.adjacent(u, target) ? 1 : 0;
  }
  return sample;
}

std::vector<OswGraph> sample_osw_batch(const OctahedralGraph& g,
                                       std::span<const std::uint64_t> seeds) {
  const std::int32_t nv = g.vertex_count();
  std::vector<OswGraph> samples(seeds.size());
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    samples[k].base = &g;
    samples[k].seed = seeds[k];
    samples[k].long_range.resize(nv);
    samples[k].deduped.resize(nv);
  }
  // Vertex-major order: the distribution (one BFS) is built once per vertex
  // and reused across all seeds. The per-(seed, vertex) substreams make this
  // produce exactly what per-seed sampling would.
  for (std::int32_t u = 0; u < nv; ++u) {
    const LongRangeDistribution dist = long_range_distribution(g, u);
    for (std::size_t k = 0; k < seeds.size(); ++k) {
      const std::int32_t target = sample_target(dist, seeds[k]);
      samples[k].long_range[u] = target;
      samples[k].deduped[u] = g.adjacent(u, target) ? 1 : 0;
    }
  }
  return samples;
}

OswGraph base_only_osw(const OctahedralGraph& g) {
  OswGraph sample;
  sample.base = &g;
  sample.seed = 0;
  const std::int32_t nv = g.vertex_count();
  sample.long_range.resize(nv);
  sample.deduped.assign(nv, 1);
  for (std::int32_t u = 0; u < nv; ++u) {
    sample.long_range[u] = g.neighbors(u).front();
  }
  return sample;
}

}  // namespace osw
