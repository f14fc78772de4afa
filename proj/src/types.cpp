#include "rfun/types.hpp"

#include <string>

#include "rfun/errors.hpp"
#include "rfun/tolerances.hpp"

namespace rfun {

LogBase parse_log_base(std::string_view text) {
  if (text == "two" || text == "2" || text == "base2") return LogBase::two;
  if (text == "natural" || text == "e" || text == "ln") return LogBase::natural;
  throw ArgumentError("unknown log base '" + std::string(text) + "' (expected two|natural)");
}

std::string_view to_string(LogBase base) {
  return base == LogBase::two ? "two" : "natural";
}

Dimension::Dimension(int m) : m_(m) {
  if (m < 2) {
    throw DomainError("invalid dimension m=" + std::to_string(m) + " (need m >= 2)");
  }
}

RPoint::RPoint(Dimension dim, double lambda) : dim_(dim), lambda_(lambda) {
  const double m = dim.real();
  if (!(lambda >= 1.0 - tol::domain_slack)) {
    throw DomainError("lambda below domain [1, m] (lambda=" + std::to_string(lambda) +
                      ", m=" + std::to_string(dim.value()) + ")");
  }
  if (!(lambda <= m + tol::domain_slack)) {
    throw DomainError("lambda above domain [1, m] (lambda=" + std::to_string(lambda) +
                      ", m=" + std::to_string(dim.value()) + ")");
  }
  if (lambda < 1.0) lambda_ = 1.0;
  if (lambda > m) lambda_ = m;
}

Delta::Delta(Dimension dim, double delta) : dim_(dim), delta_(delta) {
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw DomainError("delta outside [0, 1) (delta=" + std::to_string(delta) + ")");
  }
}

}  // namespace rfun
