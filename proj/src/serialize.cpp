#include "osw/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace osw {

std::string format_vertex(Vertex v) {
  return std::to_string(v.u1) + "," + std::to_string(v.u2) + "," +
         std::to_string(v.u3);
}

std::optional<Vertex> parse_vertex(const std::string& text) {
  Vertex v;
  char trailing = 0;
  const int fields = std::sscanf(text.c_str(), "%d,%d,%d%c", &v.u1, &v.u2,
                                 &v.u3, &trailing);
  if (fields != 3) return std::nullopt;
  return v;
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

nlohmann::json graph_json(const OctahedralGraph& g) {
  nlohmann::json j;
  j["n"] = g.n();
  auto& vertices = j["vertices"] = nlohmann::json::array();
  for (const Vertex& v : g.vertices()) {
    vertices.push_back({v.u1, v.u2, v.u3});
  }
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const auto& [i, k] : g.edges()) {
    edges.push_back({i, k});
  }
  return j;
}

nlohmann::json osw_json(const OswGraph& g) {
  nlohmann::json j = graph_json(*g.base);
  auto& lr = j["long_range"] = nlohmann::json::array();
  for (std::int32_t u = 0; u < g.vertex_count(); ++u) {
    lr.push_back({u, g.long_range[u], g.deduped[u] != 0});
  }
  return j;
}

nlohmann::json sphere_report_json(int n, const SphericalEdgeReport& report) {
  return {
      {"n", n},
      {"r", report.r},
      {"lambda", report.lambda},
      {"max_angle", report.max_angle},
      {"max_distance", report.max_distance},
      {"radius_bound", report.radius_bound},
  };
}

nlohmann::json bounds_json(const BoundsReport& report) {
  return {
      {"n", report.n},
      {"zu_upper", report.zu_upper},
      {"zu_lower", report.zu_lower},
      {"routing_upper", report.routing_upper},
      {"e1", report.e1},
      {"e2", report.e2},
      {"e3", report.e3},
      {"e4", report.e4},
      {"e5", report.e5},
      {"e6", report.e6},
      {"e7", report.e7},
      {"eu_bound", report.eu_bound},
      {"zeta3", report.zeta3},
  };
}

nlohmann::json route_json(const OswGraph& g, const RoutePath& path,
                          std::int32_t src, std::int32_t dst) {
  nlohmann::json j;
  j["n"] = g.base->n();
  j["seed"] = g.seed;
  const Vertex s = g.base->vertex(src);
  const Vertex t = g.base->vertex(dst);
  j["src"] = {s.u1, s.u2, s.u3};
  j["dst"] = {t.u1, t.u2, t.u3};
  auto& vertices = j["path"] = nlohmann::json::array();
  for (const std::int32_t idx : path.vertices) {
    const Vertex v = g.base->vertex(idx);
    vertices.push_back({v.u1, v.u2, v.u3});
  }
  j["forwards"] = path.forwards;
  j["outcome"] = to_string(path.outcome);
  return j;
}

nlohmann::json census_json(int n, std::uint64_t seed,
                           const CensusReport& report) {
  nlohmann::json j;
  j["n"] = n;
  j["seed"] = seed;
  j["sss_undirected"] = report.base_undirected;
  for (int c = 1; c < 8; ++c) {
    j[kTriangleClassNames[c]] = report.counts[c];
  }
  j["sss_directed"] = report.counts[0];
  j["nonbase_total"] = report.nonbase_total;
  j["rooted_fraction"] = report.rooted_indicator_fraction;
  return j;
}

nlohmann::json exact_n1_json(const ExactN1Report& report) {
  return {
      {"total_probability", report.total_probability.to_string()},
      {"expected_nonbase_c3s", report.expected_nonbase_c3s.to_string()},
      {"expected_nonbase_c3s_value", report.expected_nonbase_c3s.value()},
      {"pr_eu", report.pr_eu.to_string()},
      {"pr_eu_value", report.pr_eu.value()},
  };
}

std::string census_csv_header() {
  return "n,seed,sss_undirected,ssw,sws,sww,wss,wsw,wws,www,nonbase_total,"
         "rooted_fraction";
}

namespace {

std::string census_fields(const CensusReport& report) {
  std::ostringstream out;
  out << report.base_undirected;
  for (int c = 1; c < 8; ++c) out << ',' << report.counts[c];
  out << ',' << report.nonbase_total << ','
      << format_double(report.rooted_indicator_fraction);
  return out.str();
}

}  // namespace

std::string census_csv_row(int n, std::uint64_t seed,
                           const CensusReport& report) {
  std::ostringstream out;
  out << n << ',' << seed << ',' << census_fields(report);
  return out.str();
}

std::string census_trials_csv_header() {
  return "n,seed,trial,sss_undirected,ssw,sws,sww,wss,wsw,wws,www,"
         "nonbase_total,rooted_fraction";
}

std::string census_trials_csv_row(int n, std::uint64_t seed,
                                  std::int32_t trial,
                                  const CensusReport& report) {
  std::ostringstream out;
  out << n << ',' << seed << ',' << trial << ',' << census_fields(report);
  return out.str();
}

std::string routing_csv_header(int phase_count) {
  std::string header = "n,seed,trial,src,dst,forwards,outcome";
  for (int j = 0; j < phase_count; ++j) {
    header += ",phase" + std::to_string(j);
  }
  return header;
}

std::string routing_csv_row(int n, std::uint64_t seed,
                            const OctahedralGraph& g, const RoutingTrial& row,
                            int phase_count) {
  std::ostringstream out;
  out << n << ',' << seed << ',' << row.trial << ",\""
      << format_vertex(g.vertex(row.src)) << "\",\""
      << format_vertex(g.vertex(row.dst)) << "\"," << row.forwards << ','
      << to_string(row.outcome);
  for (int j = 0; j < phase_count; ++j) {
    const std::int64_t value =
        static_cast<std::size_t>(j) < row.phase_forwards.size()
            ? row.phase_forwards[j]
            : 0;
    out << ',' << value;
  }
  return out.str();
}

}  // namespace osw
