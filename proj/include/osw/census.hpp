#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "osw/oswmodel.hpp"

namespace osw {

// Edge composition of a directed 3-cycle read from its root: bit 2 is the
// first edge, bit 1 the second, bit 0 the third; a set bit means the edge
// is long-range-only (w), clear means base (s). The nonzero values coincide
// with the event numbering E1..E7.
enum class TriangleClass : int {
  sss = 0,
  ssw = 1,
  sws = 2,
  sww = 3,
  wss = 4,
  wsw = 5,
  wws = 6,
  www = 7,
};

inline constexpr std::array<const char*, 8> kTriangleClassNames = {
    "sss", "ssw", "sws", "sww", "wss", "wsw", "wws", "www"};

// Directed 3-cycle counts of one OSW sample, each cycle counted once at its
// canonical root (the smallest vertex of the cycle).
struct CensusReport {
  std::array<std::int64_t, 8> counts{};  // indexed by TriangleClass
  std::int64_t base_undirected = 0;      // undirected triangles of G'_n
  std::int64_t nonbase_total = 0;        // sum of the seven mixed classes
  double rooted_indicator_fraction = 0.0;  // vertices rooting a mixed cycle

  std::int64_t total_directed() const {
    return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
  }
};

// Undirected triangle count of the base graph, by node iteration over the
// base adjacency only.
std::int64_t base_triangle_count(const OctahedralGraph& g);

// Enumerates every directed 3-cycle of the sample once and classifies its
// edges. Cycles rooted at each vertex are derived from the canonical
// enumeration by rotating the edge labels.
CensusReport c3_census(const OswGraph& g);

// Per-vertex event flags: bit i-1 of mask[u] is set iff at least one cycle
// rooted at u has the edge sequence of event E_iu. Same enumeration work as
// c3_census; returned alongside the report.
struct CensusWithEvents {
  CensusReport report;
  std::vector<std::uint8_t> event_mask;  // 7 bits per vertex
};
CensusWithEvents c3_census_with_events(const OswGraph& g);

// Event flags E1..E7 for a single vertex, enumerated directly from u.
std::array<bool, 7> rooted_events(const OswGraph& g, std::int32_t u);
std::array<bool, 7> rooted_events(const OswGraph& g, Vertex u);

// Exact rational with reduction; wide enough for the n=1 oracle.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational reduced(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / den; }
  friend bool operator==(const Rational&, const Rational&) = default;
  std::string to_string() const;
};

// Exhaustive verification oracle at n = 1: enumerates all 5^6 joint
// long-range outcomes with their exact probabilities and counts mixed
// 3-cycles by brute force, independent of c3_census.
struct ExactN1Report {
  Rational total_probability;     // must be exactly 1
  Rational expected_nonbase_c3s;  // E[X]
  Rational pr_eu;                 // Pr(E_u), identical for all six vertices
};
ExactN1Report exact_c3_expectation_n1();

}  // namespace osw
