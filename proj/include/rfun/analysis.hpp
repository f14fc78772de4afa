#pragma once

// Inflection point, convex envelope co(R) and the numerical certificate for
// the single-inflection property of R.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rfun/tolerances.hpp"
#include "rfun/types.hpp"

namespace rfun {

struct InflectionResult {
  std::optional<double> lambda0;              // absent when R'' keeps one sign
  std::pair<double, double> bracket{0.0, 0.0};
  int iterations = 0;
};

/// Locates the zero of R'' on (1, m).
///
/// For m >= 5 the root is bracketed by the sign of g - f on [1 + 1e-9, m - 1]
/// (g -> -∞ at the left edge, g(m-1) > -2 = f(m-1) at the right one). For m in
/// {3, 4} the zero sits above m - 1, so R'' is scanned on a grid over the whole
/// interval first. For m = 2 there is no zero and the result is empty.
///
/// Throws ArgumentError if `tol <= 0` and InternalError if m >= 3 shows no
/// sign change.
InflectionResult find_inflection(Dimension m, double tol = 1e-12);

/// Number of sign changes of R'' on a uniform grid over (1 + 1e-6, m - 1e-4).
int count_r_second_sign_changes(Dimension m, int grid_size);

/// The linear piece of co(R) on [Λ*, m]. Values are in ebits.
struct HullDescription {
  double lambda_star = 0.0;
  double slope = 0.0;
  double value_at_star = 0.0;
  bool degenerate = false;  // Λ* = m and co(R) = R everywhere
};

/// Solves R'(Λ)(m - Λ) = R(m) - R(Λ) for the tangent abscissa Λ* by bisection.
HullDescription find_tangent(Dimension m, double tol = 1e-13);

/// co(R) for a fixed dimension. R on [1, Λ*], the tangent line afterwards.
class ConvexEnvelope {
 public:
  explicit ConvexEnvelope(Dimension m, double tol = 1e-13);

  Dimension dim() const { return dim_; }
  const HullDescription& description() const { return hull_; }
  double value(double lambda, LogBase base = LogBase::two) const;

 private:
  Dimension dim_;
  HullDescription hull_;
};

/// One-shot evaluation; builds a ConvexEnvelope per call.
double hull_value(Dimension m, double lambda, LogBase base = LogBase::two);

/// Piecewise-linear interpolant through a set of vertices sorted by x.
class PiecewiseLinear {
 public:
  PiecewiseLinear(std::vector<double> xs, std::vector<double> ys);

  double operator()(double x) const;
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
};

/// Lower convex hull of `points` (sorted by x) by a monotone-chain sweep.
PiecewiseLinear lower_convex_hull(const std::vector<std::pair<double, double>>& points);

/// Brute-force co(R): lower hull of R sampled at `samples` uniform points.
PiecewiseLinear hull_oracle(Dimension m, int samples, LogBase base = LogBase::two);

// ---------------------------------------------------------------------------
// Certification

struct CheckEntry {
  std::string name;
  std::string claim;
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct CertificateReport {
  Dimension m;
  std::vector<CheckEntry> checks;
  bool overall = false;

  explicit CertificateReport(Dimension dim) : m(dim) {}
  void add(CheckEntry entry);
};

/// Exactly one sign change of R'' on the grid for m >= 3, none for m = 2.
CheckEntry certify_unique_inflection(Dimension m, int grid_size = tol::default_scan_points);

/// The individual checks behind the absence of roots of R'' on (m-1, m).
std::vector<CheckEntry> no_root_right_checks(Dimension m, int grid_size);
/// Aggregate of no_root_right_checks. Throws ArgumentError for m < 5.
CheckEntry certify_no_root_right(Dimension m, int grid_size = tol::default_scan_points);

/// Runs every endpoint identity, monotonicity/convexity check and the
/// inflection certificates. Failures are recorded, never thrown.
CertificateReport certify_proof(Dimension m, int grid_size = tol::default_scan_points);

}  // namespace rfun
