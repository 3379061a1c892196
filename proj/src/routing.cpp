#include "osw/routing.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "osw/parallel.hpp"
#include "osw/rng.hpp"

namespace osw {

namespace {

using int128 = __int128;

// Phase of a departing vertex at hop distance d from the target.
int phase_of(std::int32_t d) {
  if (d <= 2) return 0;
  return std::bit_width(static_cast<std::uint32_t>(d) - 1) - 1;
}

}  // namespace

const char* to_string(RouteOutcome outcome) {
  switch (outcome) {
    case RouteOutcome::delivered: return "delivered";
    case RouteOutcome::loop_detected: return "loop_detected";
    case RouteOutcome::hop_limit: return "hop_limit";
  }
  return "unknown";
}

std::int64_t PhaseBreakdown::total() const {
  return std::accumulate(forwards_per_phase.begin(), forwards_per_phase.end(),
                         std::int64_t{0});
}

bool cosine_greater(Vertex a, Vertex b, Vertex t) {
  const std::int64_t da = dot(a, t);
  const std::int64_t db = dot(b, t);
  if ((da > 0) != (db > 0) || (da < 0) != (db < 0)) return da > db;
  // Same sign: compare da/sqrt(|a|^2) with db/sqrt(|b|^2) by squaring.
  const int128 lhs = int128(da) * da * norm2_squared(b);
  const int128 rhs = int128(db) * db * norm2_squared(a);
  return da >= 0 ? lhs > rhs : lhs < rhs;
}

RoutePath greedy_route(const OswGraph& g, std::int32_t s, std::int32_t t) {
  const OctahedralGraph& base = *g.base;
  RoutePath path;
  path.vertices.push_back(s);
  if (s == t) return path;

  const Vertex target = base.vertex(t);
  const std::int64_t hop_limit =
      static_cast<std::int64_t>(4) * base.vertex_count();
  std::vector<std::uint8_t> visited(base.vertex_count(), 0);
  visited[s] = 1;

  std::array<std::int32_t, 7> out{};
  std::int32_t current = s;
  while (current != t) {
    if (path.forwards >= hop_limit) {
      path.outcome = RouteOutcome::hop_limit;
      return path;
    }
    const std::int32_t count = g.out_neighbors(current, out);
    // out is in ascending index order (= lexicographic order), so keeping
    // only strictly better candidates implements the tie-break.
    std::int32_t best = out[0];
    for (std::int32_t k = 1; k < count; ++k) {
      if (cosine_greater(base.vertex(out[k]), base.vertex(best), target)) {
        best = out[k];
      }
    }
    if (visited[best]) {
      path.outcome = RouteOutcome::loop_detected;
      return path;
    }
    visited[best] = 1;
    path.vertices.push_back(best);
    ++path.forwards;
    current = best;
  }
  return path;
}

RoutePath greedy_route(const OswGraph& g, Vertex s, Vertex t) {
  return greedy_route(g, g.base->index_of(s), g.base->index_of(t));
}

PhaseBreakdown phase_decomposition(const OswGraph& g, const RoutePath& path,
                                   std::int32_t t) {
  if (path.vertices.empty() ||
      (path.outcome == RouteOutcome::delivered && path.vertices.back() != t)) {
    throw std::invalid_argument(
        "phase decomposition: path does not terminate at the given target");
  }
  const DistanceField to_target = g.base->bfs_distances(t);
  PhaseBreakdown breakdown;
  for (std::size_t k = 0; k + 1 < path.vertices.size(); ++k) {
    const int phase = phase_of(to_target.dist[path.vertices[k]]);
    if (static_cast<std::size_t>(phase) >= breakdown.forwards_per_phase.size()) {
      breakdown.forwards_per_phase.resize(phase + 1, 0);
    }
    ++breakdown.forwards_per_phase[phase];
  }
  return breakdown;
}

PhaseBreakdown phase_decomposition(const OswGraph& g, const RoutePath& path,
                                   Vertex t) {
  return phase_decomposition(g, path, g.base->index_of(t));
}

RoutingExperiment routing_experiment(int n, std::int32_t trials,
                                     std::uint64_t seed, int threads) {
  if (trials < 1) {
    throw std::invalid_argument("trials must be >= 1");
  }
  const OctahedralGraph base(n);
  const std::int32_t nv = base.vertex_count();

  std::vector<std::uint64_t> graph_seeds(trials);
  const std::uint64_t graph_root = derive_seed(seed, kGraphDomain);
  const std::uint64_t pair_root = derive_seed(seed, kPairDomain);
  for (std::int32_t k = 0; k < trials; ++k) {
    graph_seeds[k] = derive_seed(graph_root, static_cast<std::uint64_t>(k));
  }
  const std::vector<OswGraph> samples = sample_osw_batch(base, graph_seeds);

  RoutingExperiment experiment;
  experiment.rows.resize(trials);

  const auto run_trial = [&](std::int32_t k) {
    SplitMix64 pairs =
        substream(pair_root, static_cast<std::uint64_t>(k));
    const auto s = static_cast<std::int32_t>(pairs.next_below(nv));
    auto t = static_cast<std::int32_t>(pairs.next_below(nv - 1));
    if (t >= s) ++t;

    const RoutePath path = greedy_route(samples[k], s, t);
    const PhaseBreakdown phases = phase_decomposition(samples[k], path, t);

    RoutingTrial& row = experiment.rows[k];
    row.trial = k;
    row.src = s;
    row.dst = t;
    row.forwards = path.forwards;
    row.outcome = path.outcome;
    row.phase_forwards = phases.forwards_per_phase;
  };

  parallel_for_index(trials, threads,
                     [&](std::int64_t k) { run_trial(static_cast<std::int32_t>(k)); });

  RoutingStats& stats = experiment.stats;
  stats.n = n;
  stats.trials = trials;
  stats.seed = seed;
  std::vector<std::int64_t> forwards;
  forwards.reserve(trials);
  std::vector<std::int64_t> phase_totals;
  for (const RoutingTrial& row : experiment.rows) {
    switch (row.outcome) {
      case RouteOutcome::delivered: ++stats.delivered; break;
      case RouteOutcome::loop_detected: ++stats.loops; break;
      case RouteOutcome::hop_limit: ++stats.hop_limited; break;
    }
    forwards.push_back(row.forwards);
    stats.max_forwards = std::max(stats.max_forwards, row.forwards);
    if (row.phase_forwards.size() > phase_totals.size()) {
      phase_totals.resize(row.phase_forwards.size(), 0);
    }
    for (std::size_t j = 0; j < row.phase_forwards.size(); ++j) {
      phase_totals[j] += row.phase_forwards[j];
    }
  }
  stats.delivery_rate = static_cast<double>(stats.delivered) / trials;
  stats.mean_forwards =
      static_cast<double>(std::accumulate(forwards.begin(), forwards.end(),
                                          std::int64_t{0})) /
      trials;
  std::sort(forwards.begin(), forwards.end());
  stats.median_forwards =
      trials % 2 == 1
          ? static_cast<double>(forwards[trials / 2])
          : (static_cast<double>(forwards[trials / 2 - 1] +
                                 forwards[trials / 2]) /
             2.0);
  stats.mean_phase_forwards.resize(phase_totals.size());
  for (std::size_t j = 0; j < phase_totals.size(); ++j) {
    stats.mean_phase_forwards[j] =
        static_cast<double>(phase_totals[j]) / trials;
  }
  return experiment;
}

}  // namespace osw
