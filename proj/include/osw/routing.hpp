#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "osw/oswmodel.hpp"
#include "osw/vertex.hpp"

namespace osw {

enum class RouteOutcome { delivered, loop_detected, hop_limit };

const char* to_string(RouteOutcome outcome);

// A greedy route from s to t. Vertices are indices into the base graph.
struct RoutePath {
  std::vector<std::int32_t> vertices;
  std::int64_t forwards = 0;  // |vertices| - 1
  RouteOutcome outcome = RouteOutcome::delivered;
};

// Forwards spent per routing phase. Phase 0 covers hop-distance <= 2 to the
// target; phase j >= 1 covers 2^j < d <= 2^(j+1).
struct PhaseBreakdown {
  std::vector<std::int64_t> forwards_per_phase;

  std::int64_t total() const;
};

// True when the cosine of a towards t beats the cosine of b, i.e.
// (a.t)/|a| > (b.t)/|b|. Evaluated exactly in integer arithmetic so that
// ties are genuine ties and the lexicographic tie-break is reproducible.
bool cosine_greater(Vertex a, Vertex b, Vertex t);

// Greedy angle routing: from s, repeatedly forward to the out-neighbor with
// the largest cosine towards t, breaking ties by smallest vertex. Stops at
// t (delivered), on revisiting a vertex (loop_detected), or after 4|V|
// forwards (hop_limit).
RoutePath greedy_route(const OswGraph& g, std::int32_t s, std::int32_t t);
RoutePath greedy_route(const OswGraph& g, Vertex s, Vertex t);

// Labels each forward of the path by the phase of its departing vertex,
// using base-graph hop distances to t. Throws if the path was not routed to
// t.
PhaseBreakdown phase_decomposition(const OswGraph& g, const RoutePath& path,
                                   std::int32_t t);
PhaseBreakdown phase_decomposition(const OswGraph& g, const RoutePath& path,
                                   Vertex t);

// One routing trial: a fresh OSW sample and a uniform ordered (s, t) pair.
struct RoutingTrial {
  std::int32_t trial = 0;
  std::int32_t src = 0;
  std::int32_t dst = 0;
  std::int64_t forwards = 0;
  RouteOutcome outcome = RouteOutcome::delivered;
  std::vector<std::int64_t> phase_forwards;
};

struct RoutingStats {
  int n = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t delivered = 0;
  std::int64_t loops = 0;
  std::int64_t hop_limited = 0;
  double delivery_rate = 0.0;
  double mean_forwards = 0.0;
  double median_forwards = 0.0;
  std::int64_t max_forwards = 0;
  std::vector<double> mean_phase_forwards;
};

struct RoutingExperiment {
  RoutingStats stats;
  std::vector<RoutingTrial> rows;  // in trial order
};

// Runs `trials` independent routing trials on fresh OSW samples of G'_n.
// Trial k uses graph seed derive(derive(seed, kGraphDomain), k) and pair
// seed derive(derive(seed, kPairDomain), k), so results are identical for
// any `threads` and any execution order.
RoutingExperiment routing_experiment(int n, std::int32_t trials,
                                     std::uint64_t seed, int threads = 1);

// Substream domain tags for experiment seeding.
inline constexpr std::uint64_t kGraphDomain = 1;
inline constexpr std::uint64_t kPairDomain = 2;

}  // namespace osw
