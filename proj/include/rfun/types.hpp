#pragma once

#include <numbers>
#include <string_view>

namespace rfun {

enum class LogBase { two, natural };

/// Converts a natural-log quantity into `base`.
constexpr double in_base(double natural_value, LogBase base) {
  return base == LogBase::two ? natural_value * std::numbers::log2e : natural_value;
}

LogBase parse_log_base(std::string_view text);
std::string_view to_string(LogBase base);

/// Smaller local dimension m of a bipartite system, m >= 2.
class Dimension {
 public:
  explicit Dimension(int m);

  int value() const { return m_; }
  double real() const { return static_cast<double>(m_); }

  friend bool operator==(Dimension, Dimension) = default;

 private:
  int m_;
};

/// A point Λ ∈ [1, m]. Values within tol::domain_slack of an endpoint are
/// snapped onto it.
class RPoint {
 public:
  RPoint(Dimension dim, double lambda);

  double lambda() const { return lambda_; }
  Dimension dim() const { return dim_; }
  double m() const { return dim_.real(); }

 private:
  Dimension dim_;
  double lambda_;
};

/// Offset δ ∈ [0, 1) to the right of m - 1, i.e. Λ = m - 1 + δ.
class Delta {
 public:
  Delta(Dimension dim, double delta);

  double value() const { return delta_; }
  Dimension dim() const { return dim_; }
  double m() const { return dim_.real(); }
  double lambda() const { return m() - 1.0 + delta_; }

 private:
  Dimension dim_;
  double delta_;
};

}  // namespace rfun
