// Acceptance suite: runs the full pipeline on the two bundled datasets plus
// the randomized property checks, and prints one PASS/FAIL line per
// criterion. Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "dorling/adjacency.hpp"
#include "dorling/beam.hpp"
#include "dorling/circles.hpp"
#include "dorling/engine.hpp"
#include "dorling/forces.hpp"
#include "dorling/geojson.hpp"
#include "dorling/metrics.hpp"
#include "dorling/sosp.hpp"
#include "oracles.hpp"

using namespace dorling;

namespace {

int failures = 0;

void report(int criterion, bool ok, const char* what, const std::string& detail) {
  std::printf("%s criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion, what,
              detail.c_str());
  if (!ok) ++failures;
}

std::string data_path(const char* name) {
  return std::string(DORLING_DATA_DIR) + "/" + name;
}

struct Pipeline {
  std::vector<Region> regions;
  MapScale scale;
  AdjacencySet adjacency;
  InitResult init;
  ProximityGraph graph_before;
};

Pipeline prepare(const char* file, const char* field) {
  Pipeline p;
  p.regions = load_regions(data_path(file), field);
  p.scale = derive_scale(p.regions, 200.0);
  p.adjacency = adjacency_pairs(p.regions, default_snap_tol(p.regions));
  RadiusSearchConfig icfg;  // T_r = 2 mm
  p.init = generate_initial_circles(p.regions, icfg, p.scale);
  p.graph_before = build(GraphStrategy::standard, p.init.circles, p.adjacency);
  return p;
}

int visible_overlaps(const std::vector<Circle>& circles, const MapScale& scale) {
  return num_overlaps(circles, scale.to_units(0.01));
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

// Condition-1 audits collected across all engine runs in this suite.
struct StopAudit {
  double residual;
  double epsilon;
};
std::vector<StopAudit> stop_audits;

RunResult audited_run(const Pipeline& p, const EngineConfig& cfg) {
  const RunResult result = run(p.init.circles, p.adjacency, cfg);
  if (result.stopped_by_epsilon) {
    stop_audits.push_back(
        {max_combined_force(result.circles, p.adjacency, cfg, result.final_attract_weight),
         cfg.epsilon});
  }
  return result;
}

}  // namespace

int main() {
  // ---- dataset pipelines -------------------------------------------------
  Pipeline a = prepare("us48_2015.geojson", "POP2015");
  Pipeline b = prepare("americas_2021.geojson", "POP2021");

  using Clock = std::chrono::steady_clock;

  const auto t_a0 = Clock::now();
  EngineConfig beam_cfg_a;
  beam_cfg_a.scale = a.scale;
  const RunResult beam_a = audited_run(a, beam_cfg_a);
  const double secs_a = std::chrono::duration<double>(Clock::now() - t_a0).count();

  const auto t_b0 = Clock::now();
  EngineConfig beam_cfg_b;
  beam_cfg_b.scale = b.scale;
  const RunResult beam_b = audited_run(b, beam_cfg_b);
  const double secs_b = std::chrono::duration<double>(Clock::now() - t_b0).count();

  SospConfig sosp_cfg;
  sosp_cfg.scale = a.scale;
  const SospResult sosp_a = run_sosp(a.init.circles, a.adjacency, sosp_cfg);

  // 1. Overlap-free termination on both datasets within the time budget.
  {
    const int overlaps_a = visible_overlaps(beam_a.circles, a.scale);
    const int overlaps_b = visible_overlaps(beam_b.circles, b.scale);
    const bool ok = overlaps_a == 0 && overlaps_b == 0 && secs_a <= 120.0 && secs_b <= 120.0;
    report(1, ok, "overlap-free termination on datasets A and B",
           "NumO_A=" + std::to_string(overlaps_a) + " NumO_B=" + std::to_string(overlaps_b) +
               " time_A=" + fmt(secs_a) + "s time_B=" + fmt(secs_b) + "s");
  }

  // 2. Adjacency maintenance band and ordering vs the sequential baseline.
  double rt_beam = 0.0, rt_sosp = 0.0;
  {
    const auto [mb, tb] = rt(beam_a.circles, a.adjacency, 0.1, a.scale);
    const auto [ms, ts] = rt(sosp_a.circles, a.adjacency, 0.1, a.scale);
    rt_beam = static_cast<double>(mb) / tb;
    rt_sosp = static_cast<double>(ms) / ts;
    const bool ok = rt_beam >= 0.55 && rt_beam <= 0.85 && rt_beam > rt_sosp;
    report(2, ok, "adjacency maintenance in [55%,85%] and above baseline",
           "beam=" + std::to_string(mb) + "/" + std::to_string(tb) + "=" + fmt(100 * rt_beam) +
               "% sosp=" + fmt(100 * rt_sosp) + "%");
  }

  // 3. Direction RMS band and ordering.
  {
    const double rms_beam = rms_direction(a.init.circles, beam_a.circles, a.graph_before);
    const double rms_sosp = rms_direction(a.init.circles, sosp_a.circles, a.graph_before);
    const bool ok = rms_beam >= 15.0 && rms_beam <= 35.0 && rms_beam <= rms_sosp;
    report(3, ok, "direction RMS in [15,35] degrees and not above baseline",
           "beam=" + fmt(rms_beam) + " sosp=" + fmt(rms_sosp));
  }

  // 4. Long-edge threshold monotonicity.
  {
    EngineConfig cfg0 = beam_cfg_a;
    cfg0.t_l_mm = 0.0;
    const RunResult run0 = audited_run(a, cfg0);
    EngineConfig cfg2 = beam_cfg_a;
    cfg2.t_l_mm = 20.0;  // 2 cm
    const RunResult run2 = audited_run(a, cfg2);

    const double tdd0 = tdd(a.init.circles, run0.circles);
    const double tdd2 = tdd(a.init.circles, run2.circles);
    const auto [m0, t0] = rt(run0.circles, a.adjacency, 0.1, a.scale);
    const auto [m2, t2] = rt(run2.circles, a.adjacency, 0.1, a.scale);
    const int overlaps0 = visible_overlaps(run0.circles, a.scale);
    const int overlaps2 = visible_overlaps(run2.circles, a.scale);
    const bool ok = tdd0 < tdd2 && m0 < m2 && overlaps0 == 0 && overlaps2 == 0;
    report(4, ok, "t_l=0 run has smaller TDD and RT than t_l=2cm, both overlap free",
           "TDD " + fmt(tdd0) + "<" + fmt(tdd2) + ", RT " + std::to_string(m0) + "<" +
               std::to_string(m2) + ", NumO " + std::to_string(overlaps0) + "/" +
               std::to_string(overlaps2));
  }

  // 5. Sparse solve equals an independent dense solve on random graphs.
  {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> pos(0.0, 40.0);
    std::uniform_real_distribution<double> load(-5.0, 5.0);
    int checked = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 2 + trial % 5;
      std::vector<Circle> circles;
      for (int k = 0; k < n; ++k) {
        circles.push_back({"n" + std::to_string(k), {pos(rng), pos(rng)}, 1.0, {0, 0}});
      }
      ProximityGraph g;
      g.nodes = circles;
      for (int k = 1; k < n; ++k) g.edges.push_back({k - 1, k, EdgeType::type1, 0.0});
      if (n > 3) g.edges.push_back({0, n - 1, EdgeType::type2, 0.0});

      const auto system = assemble_global(g, BeamParams{});
      std::vector<NodeLoad> loads(n);
      for (auto& f : loads) f = {load(rng), load(rng), 0.0};
      const auto disp = solve_displacements(system, loads);

      oracles::Matrix dense(3 * n, std::vector<double>(3 * n, 0.0));
      for (int k = 0; k < system.matrix.outerSize(); ++k) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(system.matrix, k); it; ++it) {
          dense[it.row()][it.col()] = it.value();
        }
      }
      std::vector<double> rhs(3 * n, 0.0);
      for (int k = 0; k < n; ++k) {
        rhs[3 * k] = loads[k].fx;
        rhs[3 * k + 1] = loads[k].fy;
      }
      const auto expected = oracles::dense_solve(dense, rhs);
      double ref = 0.0, err = 0.0;
      for (double v : expected) ref = std::max(ref, std::abs(v));
      for (int k = 0; k < n; ++k) {
        err = std::max(err, std::abs(disp[k].dx - expected[3 * k]));
        err = std::max(err, std::abs(disp[k].dy - expected[3 * k + 1]));
        err = std::max(err, std::abs(disp[k].theta - expected[3 * k + 2]));
      }
      worst = std::max(worst, err / ref);
      ++checked;
    }
    report(5, checked >= 50 && worst <= 1e-8, "sparse solve matches dense oracle",
           std::to_string(checked) + " graphs, worst relative error " + fmt(worst));
  }

  // 6. Element matrix properties on random (l, alpha).
  {
    std::mt19937 rng(103);
    std::uniform_real_distribution<double> len(0.1, 50.0);
    std::uniform_real_distribution<double> ang(-3.14159, 3.14159);
    BeamParams params;
    bool ok = true;
    for (int trial = 0; trial < 100; ++trial) {
      const double l = len(rng);
      const double alpha = ang(rng);
      const Mat6 k = element_stiffness(l, alpha, params);
      double scale_entry = 0.0;
      for (int r = 0; r < 6; ++r) {
        for (int c = 0; c < 6; ++c) scale_entry = std::max(scale_entry, std::abs(k[r][c]));
      }
      for (int r = 0; r < 6; ++r) {
        for (int c = 0; c < 6; ++c) {
          ok = ok && std::abs(k[r][c] - k[c][r]) <= 1e-12 * scale_entry;
        }
      }
      oracles::Matrix m(6, std::vector<double>(6));
      for (int r = 0; r < 6; ++r) {
        for (int c = 0; c < 6; ++c) m[r][c] = k[r][c];
      }
      const auto eig = oracles::symmetric_eigenvalues(m);
      ok = ok && eig[0] >= -1e-9 * scale_entry;  // PSD
      ok = ok && std::abs(eig[2]) <= 1e-9 * scale_entry && eig[3] > 1e-9 * scale_entry;

      // conjugation identity against the alpha = 0 matrix
      const Mat6 k0 = element_stiffness(l, 0.0, params);
      const double c = std::cos(alpha), s = std::sin(alpha);
      double t[6][6] = {};
      t[0][0] = c; t[0][1] = s; t[1][0] = -s; t[1][1] = c; t[2][2] = 1;
      t[3][3] = c; t[3][4] = s; t[4][3] = -s; t[4][4] = c; t[5][5] = 1;
      for (int r = 0; r < 6 && ok; ++r) {
        for (int cc = 0; cc < 6; ++cc) {
          double v = 0.0;
          for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) v += t[i][r] * k0[i][j] * t[j][cc];
          }
          if (std::abs(v - k[r][cc]) > 1e-9 * scale_entry) {
            ok = false;
            break;
          }
        }
      }
    }
    report(6, ok, "element matrix symmetric, PSD, 3 rigid modes, rotation equivariant",
           "100 random (l, alpha)");
  }

  // 7. Force-law exactness.
  {
    std::mt19937 rng(107);
    std::uniform_real_distribution<double> rad(0.1, 9.0);
    std::uniform_real_distribution<double> pos(-20.0, 20.0);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
      const Circle x{"x", {pos(rng), pos(rng)}, rad(rng), {0, 0}};
      const Circle y{"y", {pos(rng), pos(rng)}, rad(rng), {0, 0}};
      const double gap = pairwise_gap(x, y);
      if (std::abs(gap) < 1e-9 || distance(x.center, y.center) < 1e-9) continue;
      const double share_x = y.radius / (x.radius + y.radius);
      if (gap < 0.0) {
        const auto [fx, fy] = repulsive_pair(x, y, gap);
        ok = ok && std::abs(norm(fx) + norm(fy) + gap) <= 1e-12 * std::abs(gap);
        ok = ok && std::abs(norm(fx) + gap * share_x) <= 1e-12 * std::abs(gap);
      } else {
        const auto [fx, fy] = attractive_pair(x, y, gap);
        ok = ok && std::abs(norm(fx) + norm(fy) - gap) <= 1e-12 * gap;
        ok = ok && std::abs(norm(fx) - gap * share_x) <= 1e-12 * gap;
      }
      const Vec2 f{pos(rng), pos(rng)};
      const std::vector<Vec2> twice{f, f};
      const Vec2 combined = combine(twice);
      ok = ok && std::abs(combined.x - f.x) <= 1e-12 && std::abs(combined.y - f.y) <= 1e-12;
    }
    report(7, ok, "force magnitudes split exactly and duplicates do not accumulate",
           "200 random pairs");
  }

  // 8. Two-body convergence.
  {
    std::vector<Circle> pair{{"a", {-1.5, 0.0}, 2.0, {-1.5, 0.0}},
                             {"b", {1.5, 0.0}, 2.0, {1.5, 0.0}}};
    EngineConfig cfg;  // unit scale: map units are millimeters
    const RunResult result = run(pair, {}, cfg);
    if (result.stopped_by_epsilon) {
      stop_audits.push_back(
          {max_combined_force(result.circles, {}, cfg, result.final_attract_weight),
           cfg.epsilon});
    }
    const double gap = pairwise_gap(result.circles[0], result.circles[1]);
    const double mid_x = result.circles[0].center.x + result.circles[1].center.x;
    const auto [t_s, t_sp] = default_steps(2);
    const bool ok = std::abs(gap) <= 1e-3 && std::abs(mid_x) <= 1e-9 &&
                    static_cast<int>(result.trace.size()) <= t_s;
    report(8, ok, "two equal overlapping circles separate symmetrically to tangency",
           "gap=" + fmt(gap) + " midpoint=" + fmt(mid_x) + " steps=" +
               std::to_string(result.trace.size()));
  }

  // 9. Initialization contract.
  {
    bool ok = true;
    std::string detail;
    for (const Pipeline* p : {&a, &b}) {
      std::vector<Circle> mm = p->init.circles;
      for (Circle& c : mm) {
        c.center = {p->scale.to_mm(c.center.x), p->scale.to_mm(c.center.y)};
        c.radius = p->scale.to_mm(c.radius);
      }
      const double err = std::abs(ave_min_d_20(mm) - 2.0);
      ok = ok && (p->init.converged ? err <= 0.01 : !p->init.warnings.empty());
      detail += " err=" + fmt(err);
    }

    std::mt19937 rng(109);
    std::uniform_real_distribution<double> pos(0.0, 300.0);
    std::uniform_real_distribution<double> val(1.0, 500.0);
    for (int instance = 0; instance < 20; ++instance) {
      std::vector<Region> regions;
      for (int k = 0; k < 6 + instance % 8; ++k) {
        const double cx = pos(rng), cy = pos(rng);
        Ring ring{{cx, cy}, {cx + 1, cy}, {cx + 1, cy + 1}, {cx, cy + 1}, {cx, cy}};
        Region reg;
        reg.id = "r" + std::to_string(k);
        reg.geometry.polygons.push_back(Polygon{{ring}});
        reg.value = val(rng);
        regions.push_back(reg);
      }
      RadiusSearchConfig cfg;
      cfg.t_r_mm = 1.0 + instance % 3;
      const auto init = generate_initial_circles(regions, cfg, MapScale{1.0});
      if (init.converged) {
        ok = ok && std::abs(ave_min_d_20(init.circles) - cfg.t_r_mm) <= cfg.stop_tol_mm;
      } else {
        ok = ok && !init.warnings.empty();
      }
    }

    // two-region analytic case: r_max = 79.9 mm
    std::vector<Region> two;
    for (int k = 0; k < 2; ++k) {
      const double cx = 100.0 * k;
      Ring ring{{cx, 0}, {cx + 1, 0}, {cx + 1, 1}, {cx, 1}, {cx, 0}};
      two.push_back({"t" + std::to_string(k), MultiPolygon{{Polygon{{ring}}}}, 5.0});
    }
    RadiusSearchConfig two_cfg;
    two_cfg.t_r_mm = 20.0;
    // centroids are at x = 0.5 and 100.5, still 100 mm apart
    const auto two_init = generate_initial_circles(two, two_cfg, MapScale{1.0});
    ok = ok && two_init.converged && std::abs(two_init.r_max_mm - 79.9) <= 0.011;
    detail += " r_max=" + fmt(two_init.r_max_mm);

    report(9, ok, "initial sizing meets the gap target within 0.01 mm", detail);
  }

  // 10. Condition-1 residual audit over every epsilon-terminated run above.
  {
    bool ok = true;
    double worst = 0.0;
    for (const StopAudit& audit : stop_audits) {
      worst = std::max(worst, audit.residual);
      ok = ok && audit.residual <= audit.epsilon;
    }
    report(10, ok, "epsilon stops leave max combined force at or below epsilon",
           std::to_string(stop_audits.size()) + " audited stops, worst " + fmt(worst));
  }

  // TDD cross-algorithm ordering (reported with the acceptance criteria).
  {
    const double tdd_beam = tdd(a.init.circles, beam_a.circles);
    const double tdd_sosp = tdd(a.init.circles, sosp_a.circles);
    report(11, tdd_beam < tdd_sosp, "beam TDD below baseline TDD on dataset A",
           fmt(tdd_beam) + " < " + fmt(tdd_sosp));
  }

  std::printf("%s (%d failure%s)\n", failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              failures, failures == 1 ? "" : "s");
  return failures;
}
