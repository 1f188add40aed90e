#pragma once

#include <string>
#include <string_view>

namespace vindex {

/// A member of the generalized V-index family: a weight f on [0, 1] with
/// f non-decreasing and f(1) = 1. The index is f(V_rate) * h.
///
/// The family is closed. Power kinds take an integer exponent n >= 2;
/// n = 1 is the `linear` kind.
class WeightFunction {
 public:
  enum class Kind { canonical_sqrt, power_concave, power_convex, linear, unity };

  static WeightFunction canonical_sqrt() { return WeightFunction(Kind::canonical_sqrt, 2); }
  static WeightFunction linear() { return WeightFunction(Kind::linear, 1); }
  static WeightFunction unity() { return WeightFunction(Kind::unity, 0); }
  /// f(x) = x^(1/n). Throws DomainError for n < 2.
  static WeightFunction power_concave(int n);
  /// f(x) = x^n. Throws DomainError for n < 2.
  static WeightFunction power_convex(int n);

  /// Parses "sqrt" | "unity" | "linear" | "x^N" | "x^(1/N)" with integer N >= 2.
  /// Throws ParseError on anything else.
  static WeightFunction parse(std::string_view spec);

  Kind kind() const noexcept { return kind_; }
  int exponent() const noexcept { return exponent_; }

  /// Evaluates f(x). Throws DomainError when x is outside [0, 1] or NaN.
  double operator()(double x) const;

  /// Canonical spec string; parse(to_string()) reproduces the function.
  std::string to_string() const;

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  WeightFunction(Kind kind, int exponent) : kind_(kind), exponent_(exponent) {}

  Kind kind_;
  int exponent_;
};

}  // namespace vindex
