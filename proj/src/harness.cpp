#include "osw/harness.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "osw/bounds.hpp"
#include "osw/census.hpp"
#include "osw/geometry.hpp"
#include "osw/octagraph.hpp"
#include "osw/oswmodel.hpp"
#include "osw/parallel.hpp"
#include "osw/rng.hpp"
#include "osw/routing.hpp"
#include "osw/serialize.hpp"

namespace osw {

namespace {

constexpr int kJsonIndent = 2;

int ceil_log2(int n) {
  int j = 0;
  while ((1 << j) < n) ++j;
  return j;
}

// Opens the CSV for appending, writing header first when the file is new or
// empty.
std::ofstream open_csv(const std::string& path, const std::string& header) {
  const bool need_header =
      !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream file(path, std::ios::app);
  if (!file) {
    throw std::runtime_error("cannot open CSV file: " + path);
  }
  if (need_header) file << header << '\n';
  return file;
}

int single_n(const ExperimentConfig& config) {
  if (config.n_list.size() != 1) {
    throw std::invalid_argument("this command takes exactly one --n value");
  }
  return config.n_list.front();
}

int run_generate(const ExperimentConfig& config, std::ostream& out) {
  const OctahedralGraph g(single_n(config));
  if (config.osw_sample) {
    const OswGraph sample = sample_osw(g, config.seed);
    out << osw_json(sample).dump(kJsonIndent) << '\n';
  } else {
    out << graph_json(g).dump(kJsonIndent) << '\n';
  }
  return kExitOk;
}

int run_route(const ExperimentConfig& config, std::ostream& out) {
  if (!config.src || !config.dst) {
    throw std::invalid_argument("route requires --src and --dst");
  }
  const OctahedralGraph g(single_n(config));
  const OswGraph sample = sample_osw(g, config.seed);
  const std::int32_t s = g.index_of(*config.src);
  const std::int32_t t = g.index_of(*config.dst);
  const RoutePath path = greedy_route(sample, s, t);
  out << route_json(sample, path, s, t).dump(kJsonIndent) << '\n';
  if (config.strict && path.outcome != RouteOutcome::delivered) {
    return kExitRuntime;
  }
  return kExitOk;
}

int run_census(const ExperimentConfig& config, std::ostream& out) {
  if (config.exact_n1) {
    out << exact_n1_json(exact_c3_expectation_n1()).dump(kJsonIndent) << '\n';
    return kExitOk;
  }
  const int n = single_n(config);
  const OctahedralGraph g(n);
  const OswGraph sample = sample_osw(g, config.seed);
  const CensusReport report = c3_census(sample);
  if (!config.csv_path.empty()) {
    auto csv = open_csv(config.csv_path, census_csv_header());
    csv << census_csv_row(n, config.seed, report) << '\n';
  }
  if (config.json_output || config.csv_path.empty()) {
    out << census_json(n, config.seed, report).dump(kJsonIndent) << '\n';
  }
  return kExitOk;
}

int run_sphere_check(const ExperimentConfig& config, std::ostream& out) {
  const int n = single_n(config);
  const OctahedralGraph g(n);
  const double r = config.r.value_or(radius_bound(n, config.lambda));
  const SphericalEdgeReport report =
      max_edge_sphere_report(g, r, config.lambda);
  out << sphere_report_json(n, report).dump(kJsonIndent) << '\n';
  return kExitOk;
}

int run_bounds(const ExperimentConfig& config, std::ostream& out) {
  out << bounds_json(bounds_report(single_n(config))).dump(kJsonIndent)
      << '\n';
  return kExitOk;
}

int run_experiment_routing(const ExperimentConfig& config, std::ostream& out) {
  int max_n = 1;
  for (const int n : config.n_list) max_n = std::max(max_n, n);
  const int phase_count = ceil_log2(max_n) + 2;  // phases 0..ceil(log2 n)+1

  nlohmann::json summaries = nlohmann::json::array();
  bool any_failure = false;
  for (const int n : config.n_list) {
    const OctahedralGraph g(n);
    const RoutingExperiment experiment =
        routing_experiment(n, config.trials, config.seed, config.threads);
    if (!config.csv_path.empty()) {
      auto csv = open_csv(config.csv_path, routing_csv_header(phase_count));
      for (const RoutingTrial& row : experiment.rows) {
        csv << routing_csv_row(n, config.seed, g, row, phase_count) << '\n';
      }
    }
    const RoutingStats& stats = experiment.stats;
    const BoundsReport bounds = bounds_report(n);
    const double log_n = std::log(static_cast<double>(n));
    const double ratio =
        n > 1 ? stats.mean_forwards / (log_n * log_n) : stats.mean_forwards;
    const bool bound_ok = stats.mean_forwards <= bounds.routing_upper;
    any_failure |= stats.delivered != stats.trials;

    if (config.json_output) {
      nlohmann::json j;
      j["n"] = n;
      j["trials"] = stats.trials;
      j["seed"] = stats.seed;
      j["delivery_rate"] = stats.delivery_rate;
      j["mean_forwards"] = stats.mean_forwards;
      j["median_forwards"] = stats.median_forwards;
      j["max_forwards"] = stats.max_forwards;
      j["routing_upper"] = bounds.routing_upper;
      j["mean_over_log2"] = ratio;
      j["mean_phase_forwards"] = stats.mean_phase_forwards;
      summaries.push_back(j);
    } else {
      out << "routing n=" << n << " trials=" << stats.trials
          << " seed=" << stats.seed << '\n';
      out << "  delivery_rate=" << format_double(stats.delivery_rate)
          << " mean_forwards=" << format_double(stats.mean_forwards)
          << " median=" << format_double(stats.median_forwards)
          << " max=" << stats.max_forwards << '\n';
      out << "  mean <= (ceil(log2 n)+1)*192*ln(2en)+2 = "
          << format_double(bounds.routing_upper) << "  "
          << (bound_ok ? "ok" : "VIOLATED") << '\n';
      out << "  mean/ln^2(n) = " << format_double(ratio) << '\n';
      out << "  phase means:";
      for (const double m : stats.mean_phase_forwards) {
        out << ' ' << format_double(m);
      }
      out << '\n';
    }
  }
  if (config.json_output) out << summaries.dump(kJsonIndent) << '\n';
  return (config.strict && any_failure) ? kExitRuntime : kExitOk;
}

int run_experiment_census(const ExperimentConfig& config, std::ostream& out) {
  nlohmann::json summaries = nlohmann::json::array();
  for (const int n : config.n_list) {
    const OctahedralGraph g(n);
    const std::uint64_t graph_root = derive_seed(config.seed, kGraphDomain);
    std::vector<std::uint64_t> seeds(config.trials);
    for (std::int32_t k = 0; k < config.trials; ++k) {
      seeds[k] = derive_seed(graph_root, static_cast<std::uint64_t>(k));
    }
    const std::vector<OswGraph> samples = sample_osw_batch(g, seeds);

    std::vector<CensusWithEvents> results(config.trials);
    parallel_for_index(config.trials, config.threads, [&](std::int64_t k) {
      results[k] = c3_census_with_events(samples[k]);
    });

    if (!config.csv_path.empty()) {
      auto csv = open_csv(config.csv_path, census_trials_csv_header());
      for (std::int32_t k = 0; k < config.trials; ++k) {
        csv << census_trials_csv_row(n, config.seed, k, results[k].report)
            << '\n';
      }
    }

    // Aggregate: mean counts, mean Pr(E_iu) over vertices and samples, and
    // the fraction of vertices rooting at least one mixed cycle.
    double mean_nonbase = 0.0;
    double mean_total = 0.0;
    double mean_rooted = 0.0;
    std::array<double, 7> mean_event{};
    for (const CensusWithEvents& result : results) {
      mean_nonbase += static_cast<double>(result.report.nonbase_total);
      mean_total += static_cast<double>(result.report.total_directed());
      mean_rooted += result.report.rooted_indicator_fraction;
      for (const std::uint8_t mask : result.event_mask) {
        for (int i = 0; i < 7; ++i) {
          if (mask & (1 << i)) mean_event[i] += 1.0;
        }
      }
    }
    const double samples_count = static_cast<double>(config.trials);
    const double nv = static_cast<double>(g.vertex_count());
    mean_nonbase /= samples_count;
    mean_total /= samples_count;
    mean_rooted /= samples_count;
    for (double& e : mean_event) e /= samples_count * nv;

    const BoundsReport bounds = bounds_report(n);
    const std::array<double, 7> event_bounds = {
        bounds.e1, bounds.e2, bounds.e3, bounds.e4,
        bounds.e5, bounds.e6, bounds.e7};
    bool bounds_ok = mean_rooted <= bounds.eu_bound;
    for (int i = 0; i < 7; ++i) {
      bounds_ok = bounds_ok && mean_event[i] <= event_bounds[i];
    }

    if (config.json_output) {
      nlohmann::json j;
      j["n"] = n;
      j["trials"] = config.trials;
      j["seed"] = config.seed;
      j["mean_nonbase_c3s"] = mean_nonbase;
      j["mean_total_directed_c3s"] = mean_total;
      j["mean_rooted_fraction"] = mean_rooted;
      j["eu_bound"] = bounds.eu_bound;
      j["mean_pr_event"] = mean_event;
      j["event_bounds"] = event_bounds;
      j["bounds_ok"] = bounds_ok;
      summaries.push_back(j);
    } else {
      out << "census n=" << n << " trials=" << config.trials
          << " seed=" << config.seed << '\n';
      out << "  mean_nonbase=" << format_double(mean_nonbase)
          << " mean_total_directed=" << format_double(mean_total)
          << " nonbase/n^2=" << format_double(mean_nonbase / (n * n)) << '\n';
      out << "  mean_rooted_fraction=" << format_double(mean_rooted)
          << " <= eu_bound=" << format_double(bounds.eu_bound) << "  "
          << (mean_rooted <= bounds.eu_bound ? "ok" : "VIOLATED") << '\n';
      out << "  mean Pr(E_iu):";
      for (int i = 0; i < 7; ++i) {
        out << ' ' << format_double(mean_event[i]);
      }
      out << '\n';
      out << "  lemma bounds:  ";
      for (int i = 0; i < 7; ++i) {
        out << ' ' << format_double(event_bounds[i]);
      }
      out << (bounds_ok ? "  ok" : "  VIOLATED") << '\n';
    }
  }
  if (config.json_output) out << summaries.dump(kJsonIndent) << '\n';
  return kExitOk;
}

int dispatch(const ExperimentConfig& config, std::ostream& out) {
  if (config.command == "generate") return run_generate(config, out);
  if (config.command == "route") return run_route(config, out);
  if (config.command == "census") return run_census(config, out);
  if (config.command == "sphere-check") return run_sphere_check(config, out);
  if (config.command == "bounds") return run_bounds(config, out);
  if (config.command == "experiment") {
    if (config.trials < 1) {
      throw std::invalid_argument("trials must be >= 1");
    }
    if (config.n_list.empty()) {
      throw std::invalid_argument("experiment requires --n");
    }
    if (config.experiment_kind == "routing") {
      return run_experiment_routing(config, out);
    }
    if (config.experiment_kind == "census") {
      return run_experiment_census(config, out);
    }
    throw std::invalid_argument("unknown experiment kind: " +
                                config.experiment_kind);
  }
  throw std::invalid_argument("unknown command: " + config.command);
}

}  // namespace

int run(const ExperimentConfig& config, std::ostream& out) {
  try {
    return dispatch(config, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace osw
