#pragma once

// Scalar evaluation of R(Λ) = H2(γ(Λ)) + (1 - γ(Λ)) log(m - 1) and of every
// auxiliary function used to analyse its convexity.
//
// Everything is computed internally with natural logarithms. Functions that
// take a LogBase convert on the way out; the remaining ones (R'', g, f and the
// right-interval functions) are natural-log only.

#include "rfun/types.hpp"

namespace rfun {

/// -x log x - (1-x) log(1-x), with 0 log 0 = 0. Throws DomainError outside [0, 1].
double binary_entropy(double x, LogBase base = LogBase::two);

/// γ(Λ) = (√Λ + √((m-1)(m-Λ)))² / m².
double gamma_value(RPoint p);
/// 1 - γ(Λ), evaluated without cancellation near Λ = 1.
double gamma_complement(RPoint p);
/// dγ/dΛ. Throws DomainError at Λ = m.
double gamma_first(RPoint p);
/// d²γ/dΛ² = -(√(m-1)/2)(Λ(m-Λ))^(-3/2). Throws DomainError at Λ = m.
double gamma_second(RPoint p);

double r_value(RPoint p, LogBase base = LogBase::two);
/// R'(Λ) = γ'(Λ) g(Λ). Open interval (1, m).
double r_first(RPoint p, LogBase base = LogBase::two);
/// R''(Λ) = γ''(Λ) g(Λ) - 1/(Λ(m-Λ)), natural log. Open interval (1, m).
double r_second(RPoint p);

/// g(Λ) = log((1-γ)/((m-1)γ)). Diverges to -∞ at Λ = 1, so Λ must exceed 1.
double g_value(RPoint p);
/// f(Λ) = -2 √(Λ(m-Λ)/(m-1)).
double f_value(RPoint p);

// Right interval Λ = m - 1 + δ.
double c_value(Delta d);
double a_value(Delta d);
double b_value(Delta d);
/// F(δ) = B(δ) log A(δ) / 2. Satisfies R''(Λ) Λ(m-Λ) = -(1 + F(δ)).
double big_f_value(Delta d);

}  // namespace rfun
