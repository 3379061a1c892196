#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "osw/bounds.hpp"
#include "osw/census.hpp"
#include "osw/geometry.hpp"
#include "osw/octagraph.hpp"
#include "osw/oswmodel.hpp"
#include "osw/routing.hpp"

namespace osw {

// "u1,u2,u3"
std::string format_vertex(Vertex v);
std::optional<Vertex> parse_vertex(const std::string& text);

// Deterministic shortest-ish decimal for CSV/summary doubles.
std::string format_double(double value);

// {"n":, "vertices":[[u1,u2,u3],...], "edges":[[i,j],...]} with i<j in
// canonical order; stable across runs for equal n.
nlohmann::json graph_json(const OctahedralGraph& g);

// Base-graph JSON plus "long_range": [[u, v, deduped], ...].
nlohmann::json osw_json(const OswGraph& g);

nlohmann::json sphere_report_json(int n, const SphericalEdgeReport& report);
nlohmann::json bounds_json(const BoundsReport& report);
nlohmann::json route_json(const OswGraph& g, const RoutePath& path,
                          std::int32_t src, std::int32_t dst);
nlohmann::json census_json(int n, std::uint64_t seed,
                           const CensusReport& report);
nlohmann::json exact_n1_json(const ExactN1Report& report);

// CSV row formats. Census rows:
//   n,seed,sss_undirected,ssw,sws,sww,wss,wsw,wws,www,nonbase_total,rooted_fraction
// Routing experiment rows (src/dst are quoted coordinate triples):
//   n,seed,trial,src,dst,forwards,outcome,phase0,...,phaseK
std::string census_csv_header();
std::string census_csv_row(int n, std::uint64_t seed,
                           const CensusReport& report);
std::string census_trials_csv_header();
std::string census_trials_csv_row(int n, std::uint64_t seed,
                                  std::int32_t trial,
                                  const CensusReport& report);
std::string routing_csv_header(int phase_count);
std::string routing_csv_row(int n, std::uint64_t seed,
                            const OctahedralGraph& g, const RoutingTrial& row,
                            int phase_count);

}  // namespace osw
