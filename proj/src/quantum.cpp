#include "rfun/quantum.hpp"

#include <algorithm>
#include <cmath>

#include "rfun/analysis.hpp"
#include "rfun/errors.hpp"
#include "rfun/tolerances.hpp"

namespace rfun {

ValidationError::ValidationError(Kind kind, const std::string& detail)
    : std::runtime_error(std::string(name(kind)) + ": " + detail), kind_(kind) {}

const char* ValidationError::name(Kind kind) {
  switch (kind) {
    case Kind::dimension_mismatch: return "dimension mismatch";
    case Kind::not_hermitian: return "not Hermitian";
    case Kind::bad_trace: return "trace not 1";
    case Kind::not_positive: return "not positive semidefinite";
  }
  return "invalid state";
}

DensityMatrix validate_state(const ComplexMatrix& raw, int dim_a, int dim_b) {
  using Kind = ValidationError::Kind;
  if (dim_a < 2 || dim_b < 2) {
    throw ValidationError(Kind::dimension_mismatch, "local dimensions must be >= 2, got (" +
                                                        std::to_string(dim_a) + ", " +
                                                        std::to_string(dim_b) + ")");
  }
  const Eigen::Index size = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (raw.rows() != size || raw.cols() != size) {
    throw ValidationError(Kind::dimension_mismatch,
                          "expected " + std::to_string(size) + "x" + std::to_string(size) +
                              " matrix, got " + std::to_string(raw.rows()) + "x" +
                              std::to_string(raw.cols()));
  }
  if (!raw.allFinite()) {
    throw ValidationError(Kind::not_hermitian, "matrix has non-finite entries");
  }
  const double asym = (raw - raw.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol::hermitian) {
    throw ValidationError(Kind::not_hermitian,
                          "max |rho - rho^dagger| = " + std::to_string(asym));
  }
  const std::complex<double> tr = raw.trace();
  if (std::abs(tr - 1.0) > tol::trace) {
    throw ValidationError(Kind::bad_trace, "trace = " + std::to_string(tr.real()) +
                                               (tr.imag() != 0.0
                                                    ? " + " + std::to_string(tr.imag()) + "i"
                                                    : std::string()));
  }
  ComplexMatrix herm = 0.5 * (raw + raw.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(herm, Eigen::EigenvaluesOnly);
  const double min_eig = eig.eigenvalues().minCoeff();
  if (min_eig < tol::positivity) {
    throw ValidationError(Kind::not_positive,
                          "minimum eigenvalue = " + std::to_string(min_eig));
  }
  if (dim_a > dim_b) {
    return DensityMatrix(swap_subsystems(herm, dim_a, dim_b), dim_b, dim_a);
  }
  return DensityMatrix(std::move(herm), dim_a, dim_b);
}

ComplexMatrix swap_subsystems(const ComplexMatrix& rho, int a, int b) {
  ComplexMatrix out(rho.rows(), rho.cols());
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      for (int k = 0; k < a; ++k)
        for (int l = 0; l < b; ++l) out(j * a + i, l * a + k) = rho(i * b + j, k * b + l);
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, int m, int n) {
  ComplexMatrix out(rho.rows(), rho.cols());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < n; ++l) out(i * n + l, k * n + j) = rho(i * n + j, k * n + l);
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho) {
  return partial_transpose(rho.matrix(), rho.m(), rho.n());
}

ComplexMatrix realign(const ComplexMatrix& rho, int m, int n) {
  ComplexMatrix out(static_cast<Eigen::Index>(m) * m, static_cast<Eigen::Index>(n) * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < n; ++l) out(i * m + k, j * n + l) = rho(i * n + j, k * n + l);
  return out;
}

ComplexMatrix realign(const DensityMatrix& rho) {
  return realign(rho.matrix(), rho.m(), rho.n());
}

double trace_norm(const ComplexMatrix& matrix) {
  if (!matrix.allFinite()) throw ArgumentError("trace norm of a matrix with non-finite entries");
  if (matrix.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(matrix);
  return svd.singularValues().sum();
}

LambdaEstimate lambda_of_state(const DensityMatrix& rho) {
  LambdaEstimate est;
  est.ppt_norm = trace_norm(partial_transpose(rho));
  est.ccnr_norm = trace_norm(realign(rho));
  est.lambda = std::clamp(std::max(est.ppt_norm, est.ccnr_norm), 1.0,
                          static_cast<double>(rho.m()));
  return est;
}

double isotropic_eof(int d, double fidelity, LogBase base) {
  const Dimension dim(d);
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
    throw DomainError("fidelity outside [0, 1] (F=" + std::to_string(fidelity) + ")");
  }
  if (fidelity * d <= 1.0) return 0.0;
  return ConvexEnvelope(dim).value(std::min(dim.real(), fidelity * d), base);
}

double eof_lower_bound(const DensityMatrix& rho, LogBase base) {
  const auto est = lambda_of_state(rho);
  if (est.lambda <= 1.0) return 0.0;
  return ConvexEnvelope(Dimension(rho.m())).value(est.lambda, base);
}

ComplexMatrix maximally_entangled_state(int d) {
  (void)Dimension(d);
  Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(d) * d);
  for (int i = 0; i < d; ++i) phi(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return phi * phi.adjoint();
}

ComplexMatrix isotropic_state(int d, double fidelity) {
  const ComplexMatrix proj = maximally_entangled_state(d);
  const auto size = proj.rows();
  const double rest = (1.0 - fidelity) / static_cast<double>(size - 1);
  return fidelity * proj + rest * (ComplexMatrix::Identity(size, size) - proj);
}

}  // namespace rfun
