#include "vindex/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <boost/math/special_functions/beta.hpp>

namespace vindex {
namespace {

double mean_of(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

bool is_constant(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

}  // namespace

CorrelationResult pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw DomainError("pearson: length mismatch (" + std::to_string(x.size()) + " vs " +
                      std::to_string(y.size()) + ")");
  }
  const std::size_t n = x.size();
  if (n < 3) throw DomainError("pearson: need at least 3 pairs, got " + std::to_string(n));
  if (is_constant(x) || is_constant(y)) {
    throw DegenerateVarianceError("pearson: input has zero variance");
  }

  const double mx = mean_of(x);
  const double my = mean_of(y);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }

  CorrelationResult out;
  out.n = n;
  out.rho = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  if (std::abs(out.rho) == 1.0) {
    out.p_value = 0.0;
    return out;
  }
  // With t = rho * sqrt(df / (1 - rho^2)), the two-sided tail of Student's t
  // is I_{df / (df + t^2)}(df / 2, 1 / 2), and df / (df + t^2) = 1 - rho^2.
  const double df = static_cast<double>(n - 2);
  const double one_minus_r2 = (1.0 - out.rho) * (1.0 + out.rho);
  out.p_value = boost::math::ibeta(df / 2.0, 0.5, one_minus_r2);
  return out;
}

BatchStats batch_stats(std::span<const double> values) {
  if (values.empty()) throw DomainError("batch_stats: empty input");
  const std::size_t n = values.size();
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  BatchStats s;
  s.mean = mean_of(values);
  s.median = n % 2 == 1 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
  s.min = sorted.front();
  s.max = sorted.back();
  if (n > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.std_dev = std::sqrt(ss / static_cast<double>(n - 1));
  }
  return s;
}

}  // namespace vindex
