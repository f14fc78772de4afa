#pragma once

// Every numerical threshold used by the library and the certifier lives here so
// that a report can be audited against a single table.

namespace rfun::tol {

// Slack accepted when validating Λ ∈ [1, m] and x ∈ [0, 1].
inline constexpr double domain_slack = 1e-12;
// |Λ - endpoint| below which γ(Λ) is replaced by its exact endpoint value.
inline constexpr double endpoint_snap = 1e-12;

// Grid offsets for sign scans of R'' over (1, m).
inline constexpr double scan_left_offset = 1e-6;
inline constexpr double scan_right_offset = 1e-4;
// Left edge of the g - f bracket for m >= 5.
inline constexpr double inflection_left_edge = 1e-9;
// Residual required of |g(Λ0) - f(Λ0)| at the returned inflection point.
inline constexpr double inflection_residual = 1e-10;
inline constexpr int default_scan_points = 10'000;
inline constexpr int max_bisection_steps = 200;

// Certifier thresholds.
inline constexpr double identity_abs = 1e-12;
inline constexpr double convexity_floor = -1e-10;
inline constexpr double tangency_residual = 1e-9;
inline constexpr double right_interval_gap = 1e-6;  // δ grid ends at 1 - gap
inline constexpr double proof_identity_rel = 1e-9;

// Quantum state validation.
inline constexpr double hermitian = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double positivity = -1e-10;

}  // namespace rfun::tol
