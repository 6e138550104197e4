// Command line front end: ingest regions, build the initial circles, displace
// them with the chosen algorithm, and write the cartogram plus its metrics.

#include <chrono>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dorling/adjacency.hpp"
#include "dorling/circles.hpp"
#include "dorling/engine.hpp"
#include "dorling/errors.hpp"
#include "dorling/format.hpp"
#include "dorling/geojson.hpp"
#include "dorling/metrics.hpp"
#include "dorling/sosp.hpp"
#include "dorling/svg.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitDataset = 3;
constexpr int kExitSolver = 4;

struct Options {
  std::string input;
  std::string value_field;
  std::string algorithm = "beam";
  std::string graph = "algorithm2";
  double tr_mm = 2.0;
  std::string tl = "none";
  double page_width_mm = 200.0;
  double epsilon = 1e-3;
  double sosp_damping = 0.5;
  std::string out_svg;
  std::string out_features;
  std::string out_metrics;
  std::string out_graph;
  bool verbose = false;
};

std::string trace_json(const std::vector<dorling::IterationTrace>& trace) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i > 0) out << ",";
    out << "{\"step\":" << trace[i].step << ",\"max_force\":" << dorling::fmt_double(trace[i].max_force)
        << ",\"max_displacement\":" << dorling::fmt_double(trace[i].max_displacement)
        << ",\"attract\":" << (trace[i].attract_active ? "true" : "false") << "}";
  }
  out << "]";
  return out.str();
}

std::string manifest_json(const Options& opt) {
  std::ostringstream out;
  out << "{\"input\":\"" << opt.input << "\",\"value_field\":\"" << opt.value_field
      << "\",\"algorithm\":\"" << opt.algorithm << "\",\"graph\":\"" << opt.graph
      << "\",\"tr_mm\":" << dorling::fmt_double(opt.tr_mm) << ",\"tl_mm\":"
      << (opt.tl == "none" ? "null" : dorling::fmt_double(std::stod(opt.tl)))
      << ",\"page_width_mm\":" << dorling::fmt_double(opt.page_width_mm)
      << ",\"epsilon\":" << dorling::fmt_double(opt.epsilon) << "}";
  return out.str();
}

void write_metrics_outputs(const Options& opt, const std::string& json_body) {
  if (!opt.out_metrics.empty()) dorling::write_text_file(opt.out_metrics, json_body);
}

int run_pipeline(const Options& opt) {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();

  const auto regions = dorling::load_regions(opt.input, opt.value_field);
  if (regions.size() < 2) {
    throw dorling::DatasetError("need at least 2 regions, got " + std::to_string(regions.size()));
  }
  const auto scale = dorling::derive_scale(regions, opt.page_width_mm);
  const auto adjacency = dorling::adjacency_pairs(regions, dorling::default_snap_tol(regions));

  dorling::RadiusSearchConfig init_cfg;
  init_cfg.t_r_mm = opt.tr_mm;
  const auto init = dorling::generate_initial_circles(regions, init_cfg, scale);
  if (opt.verbose) {
    for (const std::string& w : init.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
    std::fprintf(stderr, "initial circles: r_max = %.4f mm (%s)\n", init.r_max_mm,
                 init.converged ? "converged" : "not converged");
  }

  const auto strategy =
      opt.graph == "mst" ? dorling::GraphStrategy::mst : dorling::GraphStrategy::standard;
  const auto graph_before = dorling::build(strategy, init.circles, adjacency);

  dorling::EngineConfig engine_cfg;
  engine_cfg.epsilon = opt.epsilon;
  engine_cfg.strategy = strategy;
  engine_cfg.scale = scale;
  if (opt.tl != "none") engine_cfg.t_l_mm = std::stod(opt.tl);
  if (opt.verbose) {
    engine_cfg.progress = [](const dorling::IterationTrace& t) {
      std::fprintf(stderr, "step %3d  max_force %.6f  max_disp %.6f  attract %d\n", t.step,
                   t.max_force, t.max_displacement, t.attract_active ? 1 : 0);
    };
  }

  std::vector<dorling::Circle> final_circles;
  std::vector<dorling::IterationTrace> trace;
  int iterations_attract = 0;
  int iterations_total = 0;

  if (opt.algorithm == "beam") {
    dorling::RunResult result;
    try {
      result = dorling::run(init.circles, adjacency, engine_cfg);
    } catch (const dorling::EngineFailure& e) {
      // Keep the partial trace for inspection before propagating.
      std::ostringstream body;
      body << "{\"manifest\":" << manifest_json(opt) << ",\"error\":\"" << e.what()
           << "\",\"trace\":" << trace_json(e.trace) << "}";
      write_metrics_outputs(opt, body.str());
      throw;
    }
    final_circles = result.circles;
    trace = result.trace;
    for (const auto& t : trace) {
      ++iterations_total;
      if (t.attract_active) ++iterations_attract;
    }
  } else {
    dorling::SospConfig sosp_cfg;
    sosp_cfg.damping = opt.sosp_damping;
    sosp_cfg.epsilon = opt.epsilon;
    sosp_cfg.scale = scale;
    const auto result = dorling::run_sosp(init.circles, adjacency, sosp_cfg);
    final_circles = result.circles;
    iterations_total = result.sweeps;
  }

  dorling::MetricsReport report;
  // Overlaps are counted at sub-visible graphic resolution (0.01 mm), in line
  // with the solver's stop rule; anything deeper is a real conflict.
  report.num_overlaps = dorling::num_overlaps(final_circles, scale.to_units(0.01));
  const auto [maintained, total] = dorling::rt(final_circles, adjacency, 0.1, scale);
  report.rt_maintained = maintained;
  report.rt_total = total;
  report.rms_degrees = dorling::rms_direction(init.circles, final_circles, graph_before);
  report.tdd = dorling::tdd(init.circles, final_circles);
  report.circle_count = static_cast<int>(final_circles.size());
  report.edge_count = static_cast<int>(graph_before.edges.size());
  report.iterations_attract = iterations_attract;
  report.iterations_total = iterations_total;
  report.wall_time_seconds = std::chrono::duration<double>(Clock::now() - t0).count();

  if (!opt.out_svg.empty()) {
    dorling::write_text_file(opt.out_svg,
                             dorling::render_svg(final_circles, regions, dorling::SvgStyle{}));
  }
  if (!opt.out_features.empty()) {
    dorling::write_text_file(opt.out_features,
                             dorling::circles_to_geojson(final_circles, regions));
  }
  if (!opt.out_graph.empty()) {
    dorling::write_text_file(opt.out_graph, dorling::graph_to_geojson(graph_before));
  }
  if (!opt.out_metrics.empty()) {
    std::ostringstream body;
    body << "{\"manifest\":" << manifest_json(opt) << ",\"metrics\":" << report.to_json()
         << ",\"trace\":" << trace_json(trace) << "}";
    write_metrics_outputs(opt, body.str());
  }

  std::fputs(report.to_key_value_text().c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circular cartogram generator"};
  Options opt;

  app.add_option("--input", opt.input, "Input feature collection (GeoJSON)")->required();
  app.add_option("--value", opt.value_field, "Numeric property holding the statistical value")
      ->required();
  app.add_option("--algorithm", opt.algorithm, "Displacement algorithm")
      ->check(CLI::IsMember({"beam", "sosp"}))
      ->capture_default_str();
  app.add_option("--graph", opt.graph, "Proximity graph strategy")
      ->check(CLI::IsMember({"algorithm2", "mst"}))
      ->capture_default_str();
  app.add_option("--tr", opt.tr_mm, "Target gap for the closest circle pairs (mm)")
      ->capture_default_str();
  app.add_option("--tl", opt.tl, "Long-edge cutoff for attraction (mm) or 'none'")
      ->capture_default_str();
  app.add_option("--page-width", opt.page_width_mm, "Page width used for the graphic scale (mm)")
      ->capture_default_str();
  app.add_option("--epsilon", opt.epsilon, "Stop threshold for the largest combined force (mm)")
      ->capture_default_str();
  app.add_option("--sosp-damping", opt.sosp_damping, "Damping factor of the sosp baseline")
      ->capture_default_str();
  app.add_option("--out-svg", opt.out_svg, "Write the cartogram as SVG");
  app.add_option("--out-features", opt.out_features, "Write the circles as a point collection");
  app.add_option("--out-metrics", opt.out_metrics, "Write the metrics report (JSON)");
  app.add_option("--out-graph", opt.out_graph, "Write the initial proximity graph (debug)");
  app.add_flag("--verbose", opt.verbose, "Per-iteration progress on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  if (opt.tl != "none") {
    try {
      if (std::stod(opt.tl) < 0.0) throw std::invalid_argument("negative");
    } catch (const std::exception&) {
      std::fprintf(stderr, "error: --tl must be a non-negative number or 'none'\n");
      return kExitConfig;
    }
  }

  try {
    return run_pipeline(opt);
  } catch (const dorling::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const dorling::SolverError& e) {
    std::fprintf(stderr, "solver error: %s\n", e.what());
    return kExitSolver;
  } catch (const dorling::DatasetError& e) {
    std::fprintf(stderr, "dataset error: %s\n", e.what());
    return kExitDataset;
  }
}
