#pragma once

// Bipartite density matrices and the two consumers of co(R): the EOF of
// isotropic states and the lower bound E(ρ) >= co(R(Λ)) for arbitrary states.

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

#include "rfun/types.hpp"

namespace rfun {

using ComplexMatrix = Eigen::MatrixXcd;

/// Validation failure for a candidate density matrix. `kind()` names the first
/// violated condition.
class ValidationError : public std::runtime_error {
 public:
  enum class Kind { dimension_mismatch, not_hermitian, bad_trace, not_positive };

  ValidationError(Kind kind, const std::string& detail);

  Kind kind() const { return kind_; }
  static const char* name(Kind kind);

 private:
  Kind kind_;
};

/// Hermitian, unit-trace, positive semidefinite matrix on C^m ⊗ C^n with m <= n.
class DensityMatrix {
 public:
  int m() const { return m_; }
  int n() const { return n_; }
  const ComplexMatrix& matrix() const { return rho_; }

 private:
  friend DensityMatrix validate_state(const ComplexMatrix& raw, int dim_a, int dim_b);
  DensityMatrix(ComplexMatrix rho, int m, int n) : m_(m), n_(n), rho_(std::move(rho)) {}

  int m_;
  int n_;
  ComplexMatrix rho_;
};

/// Checks size, Hermiticity, trace and positivity. When dim_a > dim_b the
/// subsystems are swapped so that the result always has m <= n.
DensityMatrix validate_state(const ComplexMatrix& raw, int dim_a, int dim_b);

/// Swaps the tensor factors: ρ on A⊗B becomes the same operator on B⊗A.
ComplexMatrix swap_subsystems(const ComplexMatrix& rho, int dim_a, int dim_b);

/// Entry ((i,j),(k,l)) -> ((i,l),(k,j)).
ComplexMatrix partial_transpose(const ComplexMatrix& rho, int dim_a, int dim_b);
ComplexMatrix partial_transpose(const DensityMatrix& rho);

/// Entry ((i,j),(k,l)) -> row (i,k), column (j,l); the result is m² × n².
ComplexMatrix realign(const ComplexMatrix& rho, int dim_a, int dim_b);
ComplexMatrix realign(const DensityMatrix& rho);

/// Sum of singular values. Throws ArgumentError on non-finite entries.
double trace_norm(const ComplexMatrix& matrix);

struct LambdaEstimate {
  double ppt_norm = 0.0;   // ||ρ^{T_B}||_1
  double ccnr_norm = 0.0;  // ||realign(ρ)||_1
  double lambda = 1.0;     // max of the two, clamped to [1, m]
};

LambdaEstimate lambda_of_state(const DensityMatrix& rho);

/// EOF of the d⊗d isotropic state with fidelity F: 0 for F <= 1/d, co(R)(dF) otherwise.
double isotropic_eof(int d, double fidelity, LogBase base = LogBase::two);

/// co(R)(Λ(ρ)) with m = min(dims).
double eof_lower_bound(const DensityMatrix& rho, LogBase base = LogBase::two);

// Reference states.

/// |Φ⟩⟨Φ| with |Φ⟩ = Σ_i |ii⟩ / √d.
ComplexMatrix maximally_entangled_state(int d);
/// F |Φ⟩⟨Φ| + (1-F)/(d²-1) (1 - |Φ⟩⟨Φ|).
ComplexMatrix isotropic_state(int d, double fidelity);

}  // namespace rfun
