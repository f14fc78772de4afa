#include "rfun/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "rfun/errors.hpp"
#include "rfun/rfunc.hpp"

namespace rfun {
namespace {

double g_minus_f(Dimension m, double lambda) {
  const RPoint p(m, lambda);
  return g_value(p) - f_value(p);
}

// Natural-log tangency residual T(Λ) = R'(Λ)(m - Λ) - (R(m) - R(Λ)).
double tangency_residual(Dimension m, double lambda) {
  const RPoint p(m, lambda);
  const double r_m = std::log(m.real());
  return r_first(p, LogBase::natural) * (m.real() - lambda) -
         (r_m - r_value(p, LogBase::natural));
}

struct Bisection {
  double lo;
  double hi;
  int iterations;
};

// Shrinks [lo, hi] around the sign change of `fn` until the width drops below
// `tol` and, if `residual > 0`, |fn(mid)| drops below `residual`.
template <typename Fn>
Bisection bisect(Fn&& fn, double lo, double hi, double tol, double residual = 0.0) {
  const bool lo_negative = fn(lo) < 0.0;
  int it = 0;
  for (; it < tol::max_bisection_steps; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double value = fn(mid);
    const bool width_ok = (hi - lo) < tol;
    const bool residual_ok = residual <= 0.0 || std::abs(value) < residual;
    if ((width_ok && residual_ok) || mid <= lo || mid >= hi) break;
    if ((value < 0.0) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi, it};
}

std::vector<double> uniform_grid(double a, double b, int n) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    xs[static_cast<std::size_t>(i)] = a + (b - a) * static_cast<double>(i) / (n - 1);
  }
  xs.back() = b;
  return xs;
}

std::vector<double> r_second_scan_grid(Dimension m, int grid_size) {
  return uniform_grid(1.0 + tol::scan_left_offset, m.real() - tol::scan_right_offset, grid_size);
}

void require_grid(int grid_size, int minimum) {
  if (grid_size < minimum) {
    throw ArgumentError("grid size " + std::to_string(grid_size) + " below minimum " +
                        std::to_string(minimum));
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

CheckEntry not_applicable(std::string name, std::string claim, double measured = 0.0) {
  return {std::move(name), "not applicable: " + std::move(claim), measured, 0.0, true};
}

CheckEntry at_most(std::string name, std::string claim, double measured, double threshold) {
  return {std::move(name), std::move(claim), measured, threshold, measured <= threshold};
}

CheckEntry above(std::string name, std::string claim, double measured, double threshold) {
  return {std::move(name), std::move(claim), measured, threshold, measured > threshold};
}

}  // namespace

// ---------------------------------------------------------------------------
// Inflection

int count_r_second_sign_changes(Dimension m, int grid_size) {
  require_grid(grid_size, 2);
  int changes = 0;
  int previous = 0;
  for (double x : r_second_scan_grid(m, grid_size)) {
    const double v = r_second(RPoint(m, x));
    const int sign = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
    if (sign == 0) continue;
    if (previous != 0 && sign != previous) ++changes;
    previous = sign;
  }
  return changes;
}

InflectionResult find_inflection(Dimension m, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");

  double lo = 0.0;
  double hi = 0.0;
  if (m.value() >= 5) {
    lo = 1.0 + tol::inflection_left_edge;
    hi = m.real() - 1.0;
    if (!(g_minus_f(m, lo) < 0.0 && g_minus_f(m, hi) > 0.0)) {
      throw InternalError("g - f does not change sign on [1, m-1] for m=" +
                          std::to_string(m.value()));
    }
  } else {
    const auto grid = r_second_scan_grid(m, tol::default_scan_points);
    bool found = false;
    double prev = r_second(RPoint(m, grid.front()));
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const double v = r_second(RPoint(m, grid[i]));
      if ((prev > 0.0 && v < 0.0) || (prev < 0.0 && v > 0.0)) {
        lo = grid[i - 1];
        hi = grid[i];
        found = true;
        break;
      }
      prev = v;
    }
    if (!found) {
      if (m.value() == 2) return {};
      throw InternalError("R'' shows no sign change for m=" + std::to_string(m.value()));
    }
  }

  // R'' = γ''(g - f) with γ'' < 0, so g - f carries the sign change in both
  // branches.
  const auto b = bisect([&](double x) { return g_minus_f(m, x); }, lo, hi, tol,
                        tol::inflection_residual);
  InflectionResult out;
  out.lambda0 = 0.5 * (b.lo + b.hi);
  out.bracket = {b.lo, b.hi};
  out.iterations = b.iterations;
  return out;
}

// ---------------------------------------------------------------------------
// Envelope

HullDescription find_tangent(Dimension m, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");
  const double md = m.real();
  const double log2_m = std::log2(md);

  HullDescription degenerate;
  degenerate.lambda_star = md;
  degenerate.value_at_star = log2_m;
  degenerate.slope = r_first(RPoint(m, md - 1e-9));
  degenerate.degenerate = true;

  const auto inflection = find_inflection(m);
  if (!inflection.lambda0) return degenerate;

  const double left = 1.0 + tol::inflection_left_edge;
  double lo = left;
  double hi = *inflection.lambda0;
  auto residual = [&](double x) { return tangency_residual(m, x); };
  if (!(residual(lo) < 0.0 && residual(hi) >= 0.0)) {
    // Fall back to a scan of the whole open interval.
    const auto grid = uniform_grid(left, md - 1e-9, 1000);
    bool found = false;
    for (std::size_t i = 1; i < grid.size(); ++i) {
      if (residual(grid[i - 1]) < 0.0 && residual(grid[i]) >= 0.0) {
        lo = grid[i - 1];
        hi = grid[i];
        found = true;
        break;
      }
    }
    if (!found) return degenerate;
  }

  const auto b = bisect(residual, lo, hi, tol);
  HullDescription hull;
  hull.lambda_star = 0.5 * (b.lo + b.hi);
  hull.value_at_star = r_value(RPoint(m, hull.lambda_star));
  hull.slope = (log2_m - hull.value_at_star) / (md - hull.lambda_star);
  hull.degenerate = false;
  return hull;
}

ConvexEnvelope::ConvexEnvelope(Dimension m, double tol) : dim_(m), hull_(find_tangent(m, tol)) {}

double ConvexEnvelope::value(double lambda, LogBase base) const {
  const RPoint p(dim_, lambda);
  if (hull_.degenerate || p.lambda() <= hull_.lambda_star) return r_value(p, base);
  const double ebits = hull_.value_at_star + hull_.slope * (p.lambda() - hull_.lambda_star);
  return base == LogBase::two ? ebits : ebits * std::numbers::ln2;
}

double hull_value(Dimension m, double lambda, LogBase base) {
  return ConvexEnvelope(m).value(lambda, base);
}

PiecewiseLinear::PiecewiseLinear(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() != ys_.size() || xs_.empty()) {
    throw ArgumentError("piecewise-linear function needs matching, non-empty vertex lists");
  }
}

double PiecewiseLinear::operator()(double x) const {
  if (x <= xs_.front()) return ys_.front();
  if (x >= xs_.back()) return ys_.back();
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const auto i = static_cast<std::size_t>(it - xs_.begin());
  const double t = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
  return ys_[i - 1] + t * (ys_[i] - ys_[i - 1]);
}

PiecewiseLinear lower_convex_hull(const std::vector<std::pair<double, double>>& points) {
  std::vector<std::pair<double, double>> chain;
  chain.reserve(points.size());
  auto cross = [](const auto& o, const auto& a, const auto& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
  };
  for (const auto& pt : points) {
    while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), pt) <= 0.0) {
      chain.pop_back();
    }
    chain.push_back(pt);
  }
  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(chain.size());
  ys.reserve(chain.size());
  for (const auto& [x, y] : chain) {
    xs.push_back(x);
    ys.push_back(y);
  }
  return {std::move(xs), std::move(ys)};
}

PiecewiseLinear hull_oracle(Dimension m, int samples, LogBase base) {
  require_grid(samples, 1000);
  std::vector<std::pair<double, double>> pts;
  pts.reserve(static_cast<std::size_t>(samples));
  for (double x : uniform_grid(1.0, m.real(), samples)) {
    pts.emplace_back(x, r_value(RPoint(m, x), base));
  }
  return lower_convex_hull(pts);
}

// ---------------------------------------------------------------------------
// Certification

void CertificateReport::add(CheckEntry entry) {
  checks.push_back(std::move(entry));
  overall = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

CheckEntry certify_unique_inflection(Dimension m, int grid_size) {
  require_grid(grid_size, 1000);
  const int expected = m.value() >= 3 ? 1 : 0;
  const int count = count_r_second_sign_changes(m, grid_size);
  return {"unique_inflection",
          "R'' changes sign exactly " + std::to_string(expected) + " time(s) on a " +
              std::to_string(grid_size) + "-point grid over (1+1e-6, m-1e-4)",
          static_cast<double>(count), static_cast<double>(expected), count == expected};
}

std::vector<CheckEntry> no_root_right_checks(Dimension m, int grid_size) {
  if (m.value() < 5) {
    throw ArgumentError("the right-interval argument requires m >= 5");
  }
  require_grid(grid_size, 10);
  const double md = m.real();
  const double f0 = big_f_value(Delta(m, 0.0));
  const double f0_closed = std::log((md - 2.0) / (2.0 * (md - 1.0)));
  const double log_3_8 = std::log(3.0 / 8.0);

  double min_f = f0;
  double min_da = INFINITY;
  double min_db = INFINITY;
  double prev_a = 0.0;
  double prev_b = 0.0;
  const auto grid = uniform_grid(0.0, 1.0 - tol::right_interval_gap, grid_size);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Delta d(m, grid[i]);
    const double a = a_value(d);
    const double b = b_value(d);
    min_f = std::min(min_f, 0.5 * b * std::log(a));
    if (i > 0) {
      min_da = std::min(min_da, a - prev_a);
      min_db = std::min(min_db, b - prev_b);
    }
    prev_a = a;
    prev_b = b;
  }

  return {
      at_most("no_root_right.F0_closed_form", "F(0) = log((m-2)/(2(m-1)))",
              std::abs(f0 - f0_closed), tol::identity_abs),
      {"no_root_right.F0_lower_bound", "F(0) >= log(3/8) > -1", f0,
       log_3_8 - tol::identity_abs, f0 >= log_3_8 - tol::identity_abs && f0 > -1.0},
      above("no_root_right.F_above_minus_one",
            "min of F(delta) over a grid on [0, 1-1e-6] exceeds -1", min_f, -1.0),
      above("no_root_right.A_increasing", "A(delta) strictly increasing on the delta grid",
            min_da, 0.0),
      above("no_root_right.B_increasing", "B(delta) strictly increasing on the delta grid",
            min_db, 0.0),
  };
}

CheckEntry certify_no_root_right(Dimension m, int grid_size) {
  const auto parts = no_root_right_checks(m, grid_size);
  const bool pass = std::all_of(parts.begin(), parts.end(), [](const auto& c) { return c.pass; });
  return {"no_root_right", "R''(lambda) != 0 for lambda in (m-1, m)", parts[2].measured, -1.0,
          pass};
}

CertificateReport certify_proof(Dimension m, int grid_size) {
  require_grid(grid_size, 1000);
  const int mv = m.value();
  const double md = m.real();
  CertificateReport report(m);

  const RPoint left(m, 1.0);
  const RPoint right(m, md);
  report.add(at_most("gamma_endpoints", "gamma(1) = 1 and gamma(m) = 1/m",
                     std::max(std::abs(gamma_value(left) - 1.0),
                              std::abs(gamma_value(right) - 1.0 / md)),
                     tol::identity_abs));
  report.add(at_most("r_endpoints", "R(1) = 0 and R(m) = log2 m",
                     std::max(std::abs(r_value(left)), std::abs(r_value(right) - std::log2(md))),
                     tol::identity_abs));

  if (mv >= 3) {
    const RPoint p(m, md - 1.0);
    const double ratio = (md - 2.0) / (2.0 * (md - 1.0));
    const double r2 = r_second(p);
    const double r2_closed = -(std::log(ratio) + 1.0) / (md - 1.0);
    report.add(at_most("r_second_closed_form_at_m_minus_1",
                       "R''(m-1) = -(log((m-2)/(2(m-1))) + 1)/(m-1)", std::abs(r2 - r2_closed),
                       tol::identity_abs));
    const double g = g_value(p);
    report.add(at_most("g_closed_form_at_m_minus_1", "g(m-1) = 2 log((m-2)/(2(m-1)))",
                       std::abs(g - 2.0 * std::log(ratio)), tol::identity_abs));
    if (mv >= 5) {
      report.add({"r_second_negative_at_m_minus_1", "R''(m-1) < 0 for m >= 5", r2, 0.0,
                  r2 < 0.0});
      report.add(above("g_above_minus_two_at_m_minus_1", "g(m-1) > -2 for m >= 5", g, -2.0));
    } else {
      report.add(not_applicable("r_second_negative_at_m_minus_1",
                                "R''(m-1) < 0 only holds for m >= 5 (measured value is R''(m-1))",
                                r2));
      report.add(not_applicable("g_above_minus_two_at_m_minus_1",
                                "g(m-1) > -2 only holds for m >= 5 (measured value is g(m-1))", g));
    }
  } else {
    report.add(not_applicable("r_second_closed_form_at_m_minus_1", "m-1 = 1 is an endpoint"));
    report.add(not_applicable("g_closed_form_at_m_minus_1", "m-1 = 1 is an endpoint"));
    report.add(not_applicable("r_second_negative_at_m_minus_1", "m-1 = 1 is an endpoint"));
    report.add(not_applicable("g_above_minus_two_at_m_minus_1", "m-1 = 1 is an endpoint"));
  }

  report.add(at_most("f_endpoints", "f(1) = f(m-1) = -2",
                     std::max(std::abs(f_value(left) + 2.0),
                              std::abs(f_value(RPoint(m, md - 1.0)) + 2.0)),
                     tol::identity_abs));

  // Grid checks over [1, m].
  {
    const auto grid = uniform_grid(1.0, md, grid_size);
    double min_f2 = INFINITY;
    double min_gamma_drop = INFINITY;
    double min_r_rise = INFINITY;
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const RPoint a(m, grid[i - 1]);
      const RPoint b(m, grid[i]);
      min_gamma_drop = std::min(min_gamma_drop, gamma_value(a) - gamma_value(b));
      min_r_rise = std::min(min_r_rise, r_value(b) - r_value(a));
      if (i + 1 < grid.size()) {
        const RPoint c(m, grid[i + 1]);
        min_f2 = std::min(min_f2, f_value(a) - 2.0 * f_value(b) + f_value(c));
      }
    }
    report.add({"f_convex", "second differences of f on a uniform grid are >= -1e-10", min_f2,
                tol::convexity_floor, min_f2 >= tol::convexity_floor});
    report.add({"gamma_nonincreasing", "gamma is nonincreasing on a uniform grid over [1, m]",
                min_gamma_drop, 0.0, min_gamma_drop >= 0.0});
    report.add({"r_nondecreasing", "R is nondecreasing on a uniform grid over [1, m]",
                min_r_rise, 0.0, min_r_rise >= 0.0});
  }

  {
    const double hi = mv >= 3 ? md - 1.0 : md - tol::scan_right_offset;
    const auto grid = uniform_grid(1.0 + tol::scan_left_offset, hi, grid_size);
    double min_rise = INFINITY;
    double prev = g_value(RPoint(m, grid.front()));
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const double v = g_value(RPoint(m, grid[i]));
      min_rise = std::min(min_rise, v - prev);
      prev = v;
    }
    report.add(above("g_increasing", "g is strictly increasing on a grid over (1, m-1]",
                     min_rise, 0.0));
  }

  {
    // Divergence at 1+ is only logarithmic; check positivity and growth.
    const double r6 = r_second(RPoint(m, 1.0 + 1e-6));
    const double r4 = r_second(RPoint(m, 1.0 + 1e-4));
    const double r2 = r_second(RPoint(m, 1.0 + 1e-2));
    report.add({"r_second_diverges_at_one",
                "R''(1+1e-6) > R''(1+1e-4) > R''(1+1e-2) > 0 (R'' -> +inf as lambda -> 1+)", r6,
                0.0, r6 > r4 && r4 > r2 && r2 > 0.0});
  }

  report.add(certify_unique_inflection(m, grid_size));

  try {
    const auto inflection = find_inflection(m);
    if (!inflection.lambda0) {
      report.add({"inflection_point", "no inflection point: R'' keeps one sign on (1, m)", 0.0,
                  0.0, mv == 2});
    } else {
      const double l0 = *inflection.lambda0;
      const double resid = std::abs(g_minus_f(m, l0));
      const double upper = mv >= 5 ? md - 1.0 : md;
      const bool located = l0 > 1.0 && l0 < upper;
      report.add({"inflection_point",
                  std::string("|g(L0) - f(L0)| < 1e-10 with L0 = ") + fmt(l0) + " in (1, " +
                      (mv >= 5 ? "m-1" : "m") + ")",
                  resid, tol::inflection_residual, resid < tol::inflection_residual && located});
    }
  } catch (const std::exception& e) {
    report.add({"inflection_point", std::string("root finding failed: ") + e.what(), 0.0, 0.0,
                false});
  }

  if (mv >= 5) {
    for (auto& entry : no_root_right_checks(m, grid_size)) report.add(std::move(entry));
    report.add(certify_no_root_right(m, grid_size));

    // R''(Λ) Λ(m-Λ) = -(1 + F(δ)) on Λ = m - 1 + δ.
    double worst = 0.0;
    for (int i = 1; i <= 1000; ++i) {
      const Delta d(m, static_cast<double>(i) / 1001.0);
      const double l = d.lambda();
      const double lhs = r_second(RPoint(m, l)) * l * (md - l);
      const double rhs = -(1.0 + big_f_value(d));
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
    report.add(at_most("right_interval_identity",
                       "R''(m-1+delta)(m-1+delta)(1-delta) = -(1 + F(delta)) to relative 1e-9",
                       worst, tol::proof_identity_rel));
  } else {
    report.add(not_applicable("no_root_right", "the F(delta) argument requires m >= 5"));
  }

  return report;
}

}  // namespace rfun
