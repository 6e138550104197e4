#include "dorling/circles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dorling/errors.hpp"

namespace dorling {

double pairwise_gap(const Circle& a, const Circle& b) {
  return distance(a.center, b.center) - (a.radius + b.radius);
}

double radius_for_value(double v, double v_min, double v_max, double r_min, double r_max) {
  if (v_max == v_min) return 0.5 * (r_min + r_max);
  const double ratio = (v - v_min) / (v_max - v_min);
  return std::sqrt(ratio) * (r_max - r_min) + r_min;
}

double ave_min_d_20(const std::vector<Circle>& circles, ClosestPairsMode mode) {
  const std::size_t n = circles.size();
  if (n < 2) throw ConfigError("ave_min_d_20: need at least 2 circles");

  std::vector<double> gaps;
  if (mode == ClosestPairsMode::all_pairs) {
    gaps.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        gaps.push_back(pairwise_gap(circles[i], circles[j]));
      }
    }
  } else {
    gaps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) best = std::min(best, pairwise_gap(circles[i], circles[j]));
      }
      gaps.push_back(best);
    }
  }

  const std::size_t take =
      static_cast<std::size_t>(std::ceil(0.2 * static_cast<double>(gaps.size())));
  std::partial_sort(gaps.begin(), gaps.begin() + take, gaps.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < take; ++i) sum += gaps[i];
  return sum / static_cast<double>(take);
}

namespace {

// Circles in graphic-mm coordinates for a candidate maximum radius.
std::vector<Circle> circles_for_r_max(const std::vector<Region>& regions,
                                      const std::vector<Point>& centers_mm,
                                      double v_min, double v_max,
                                      double r_min_mm, double r_max_mm) {
  std::vector<Circle> out;
  out.reserve(regions.size());
  for (std::size_t i = 0; i < regions.size(); ++i) {
    Circle c;
    c.region_id = regions[i].id;
    c.center = centers_mm[i];
    c.original_center = centers_mm[i];
    c.radius = radius_for_value(regions[i].value, v_min, v_max, r_min_mm, r_max_mm);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

InitResult generate_initial_circles(const std::vector<Region>& regions,
                                    const RadiusSearchConfig& cfg,
                                    const MapScale& scale) {
  if (regions.size() < 2) throw ConfigError("generate_initial_circles: need at least 2 regions");
  if (!(cfg.r_min_mm > 0.0) || !(cfg.r_min_mm < cfg.r_max_init_mm) || !(cfg.stop_tol_mm > 0.0) ||
      cfg.max_iters < 1 || scale.units_per_mm <= 0.0) {
    throw ConfigError("generate_initial_circles: invalid configuration");
  }

  InitResult result;

  double v_min = regions.front().value, v_max = regions.front().value;
  for (const Region& reg : regions) {
    v_min = std::min(v_min, reg.value);
    v_max = std::max(v_max, reg.value);
  }
  if (v_max == v_min) {
    result.warnings.push_back(
        "all region values are equal; every circle gets the mid radius (r_min + r_max)/2");
  }

  std::vector<Point> centers_units;
  std::vector<Point> centers_mm;
  centers_mm.reserve(regions.size());
  for (const Region& reg : regions) {
    const Point c = region_centroid(reg, &result.warnings);
    centers_units.push_back(c);
    centers_mm.push_back({scale.to_mm(c.x), scale.to_mm(c.y)});
  }

  const auto gap_error = [&](double r_max_mm) {
    return ave_min_d_20(circles_for_r_max(regions, centers_mm, v_min, v_max,
                                          cfg.r_min_mm, r_max_mm),
                        cfg.pairs_mode) -
           cfg.t_r_mm;
  };

  // The average closest gap shrinks as r_max grows, so bisection applies:
  // err > 0 means the circles are still too small.
  double lo = cfg.r_min_mm;
  double hi = cfg.r_max_init_mm;
  double best_r = hi;
  double best_abs = std::numeric_limits<double>::infinity();
  const auto consider = [&](double r, double err) {
    if (std::abs(err) < best_abs) {
      best_abs = std::abs(err);
      best_r = r;
    }
    return std::abs(err) <= cfg.stop_tol_mm;
  };

  const double err_lo = gap_error(lo);
  double err_hi = gap_error(hi);
  bool done = consider(lo, err_lo) || consider(hi, err_hi);

  if (!done && err_lo < 0.0) {
    // Even minimum-size circles sit closer than the target; nothing to search.
    result.warnings.push_back("radius search: target gap unreachable, even r_max = r_min is too tight");
  } else if (!done) {
    while (err_hi > 0.0 && hi < 10.0 * cfg.r_max_init_mm) {
      hi = std::min(2.0 * hi, 10.0 * cfg.r_max_init_mm);
      err_hi = gap_error(hi);
      if ((done = consider(hi, err_hi))) break;
    }
    if (!done && err_hi > 0.0) {
      result.warnings.push_back("radius search: upper bound exhausted without bracketing the target");
    } else if (!done) {
      for (int iter = 0; iter < cfg.max_iters; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double err = gap_error(mid);
        if ((done = consider(mid, err))) break;
        if (err > 0.0) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      if (!done) {
        result.warnings.push_back("radius search: iteration budget reached, returning best candidate");
      }
    }
  }

  result.converged = done;
  result.r_max_mm = best_r;

  // Final circles in map units, centered exactly on the region centroids.
  result.circles = circles_for_r_max(regions, centers_mm, v_min, v_max, cfg.r_min_mm, best_r);
  for (std::size_t i = 0; i < result.circles.size(); ++i) {
    Circle& c = result.circles[i];
    c.center = centers_units[i];
    c.original_center = centers_units[i];
    c.radius = scale.to_units(c.radius);
  }
  return result;
}

}  // namespace dorling
