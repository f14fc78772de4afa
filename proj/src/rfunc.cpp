#include "rfun/rfunc.hpp"

#include <cmath>
#include <string>

#include "rfun/errors.hpp"
#include "rfun/tolerances.hpp"

namespace rfun {
namespace {

bool at_left(RPoint p) { return std::abs(p.lambda() - 1.0) < tol::endpoint_snap; }
bool at_right(RPoint p) { return std::abs(p.lambda() - p.m()) < tol::endpoint_snap; }

// √Λ + √((m-1)(m-Λ))
double root_sum(RPoint p) {
  const double m = p.m();
  const double l = p.lambda();
  return std::sqrt(l) + std::sqrt((m - 1.0) * (m - l));
}

void require_open(RPoint p, const char* what) {
  if (at_left(p) || at_right(p)) {
    throw DomainError(std::string(what) + " is singular at the endpoints of [1, m] (lambda=" +
                      std::to_string(p.lambda()) + ")");
  }
}

void require_below_m(RPoint p, const char* what) {
  if (at_right(p)) {
    throw DomainError(std::string(what) + " diverges at lambda = m");
  }
}

}  // namespace

double binary_entropy(double x, LogBase base) {
  if (!(x >= -tol::domain_slack && x <= 1.0 + tol::domain_slack)) {
    throw DomainError("binary entropy argument outside [0, 1] (x=" + std::to_string(x) + ")");
  }
  if (x <= 0.0 || x >= 1.0) return 0.0;
  // H(x) = H(1-x); evaluate with the smaller of the two so that the
  // log1p branch carries the term close to zero.
  const double small = x <= 0.5 ? x : 1.0 - x;
  const double large = 1.0 - small;
  const double h = -small * std::log(small) - large * std::log1p(-small);
  return in_base(h, base);
}

double gamma_value(RPoint p) {
  if (at_left(p)) return 1.0;
  if (at_right(p)) return 1.0 / p.m();
  const double s = root_sum(p);
  return s * s / (p.m() * p.m());
}

double gamma_complement(RPoint p) {
  const double m = p.m();
  if (at_left(p)) return 0.0;
  if (at_right(p)) return (m - 1.0) / m;
  const double l = p.lambda();
  const double d = l - 1.0;
  // m - s written as a ratio of positive terms; the direct difference loses
  // every digit as Λ -> 1.
  const double den = (std::sqrt(m - 1.0) + std::sqrt(m - l)) * (1.0 + std::sqrt(l)) *
                     (std::sqrt((m - 1.0) * l) + std::sqrt(m - l));
  const double gap = m * d * d / den;
  const double s = root_sum(p);
  return gap * (m + s) / (m * m);
}

double gamma_first(RPoint p) {
  require_below_m(p, "gamma'");
  if (at_left(p)) return 0.0;
  const double m = p.m();
  const double l = p.lambda();
  const double s = root_sum(p);
  const double den =
      m * (std::sqrt(m - l) + std::sqrt((m - 1.0) * l)) * std::sqrt(l * (m - l));
  return -s * (l - 1.0) / den;
}

double gamma_second(RPoint p) {
  require_below_m(p, "gamma''");
  const double m = p.m();
  const double l = p.lambda();
  const double w = l * (m - l);
  return -0.5 * std::sqrt(m - 1.0) / (w * std::sqrt(w));
}

double r_value(RPoint p, LogBase base) {
  const double gam = gamma_value(p);
  const double q = gamma_complement(p);
  const double m = p.m();
  if (q == 0.0) return 0.0;
  const double entropy = -gam * std::log(gam) - q * std::log(q);
  return in_base(entropy + q * std::log(m - 1.0), base);
}

double g_value(RPoint p) {
  if (at_left(p)) {
    throw DomainError("g diverges to -infinity at lambda = 1");
  }
  const double q = gamma_complement(p);
  const double gam = gamma_value(p);
  return std::log(q) - std::log(p.m() - 1.0) - std::log(gam);
}

double r_first(RPoint p, LogBase base) {
  require_open(p, "R'");
  return in_base(gamma_first(p) * g_value(p), base);
}

double r_second(RPoint p) {
  require_open(p, "R''");
  const double l = p.lambda();
  return gamma_second(p) * g_value(p) - 1.0 / (l * (p.m() - l));
}

double f_value(RPoint p) {
  const double m = p.m();
  const double l = p.lambda();
  return -2.0 * std::sqrt(l * (m - l) / (m - 1.0));
}

double c_value(Delta d) {
  const double m = d.m();
  const double x = d.value();
  return 1.0 / (std::sqrt(m - 1.0 + x) + std::sqrt((m - 1.0) * (1.0 - x)));
}

double a_value(Delta d) {
  const double m = d.m();
  const double mc = m * c_value(d);
  const double a = (mc * mc - 1.0) / (m - 1.0);
  if (!(a > 0.0)) {
    throw InternalError("A(delta) <= 0 (m=" + std::to_string(d.dim().value()) +
                        ", delta=" + std::to_string(d.value()) + ")");
  }
  return a;
}

double b_value(Delta d) {
  const double m = d.m();
  const double x = d.value();
  return std::sqrt((m - 1.0) / ((m - 1.0 + x) * (1.0 - x)));
}

double big_f_value(Delta d) {
  return 0.5 * b_value(d) * std::log(a_value(d));
}

}  // namespace rfun
