#pragma once

#include <cstddef>
#include <span>

#include "vindex/error.hpp"

namespace vindex {

/// Raised when a correlation input has zero variance.
class DegenerateVarianceError : public DomainError {
 public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "degenerate variance"; }
};

struct CorrelationResult {
  double rho = 0.0;
  std::size_t n = 0;
  /// Two-sided p-value of H0: rho = 0. Exactly 0 when |rho| = 1.
  double p_value = 1.0;
};

/// Pearson's r, cov(x, y) / (sigma_x * sigma_y), with its two-sided p-value
/// from Student's t on n - 2 degrees of freedom.
///
/// Requires equal lengths and n >= 3 (DomainError otherwise); a constant input
/// raises DegenerateVarianceError.
CorrelationResult pearson(std::span<const double> x, std::span<const double> y);

struct BatchStats {
  double mean = 0.0;
  double median = 0.0;
  double std_dev = 0.0;  // sample (n - 1); 0 for a single value
  double min = 0.0;
  double max = 0.0;
};

/// Throws DomainError on empty input.
BatchStats batch_stats(std::span<const double> values);

}  // namespace vindex
