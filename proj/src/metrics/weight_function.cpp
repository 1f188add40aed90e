#include "vindex/weight_function.hpp"

#include <charconv>
#include <cmath>

#include "vindex/error.hpp"

namespace vindex {
namespace {

int parse_exponent(std::string_view digits, std::string_view spec) {
  int n = 0;
  const auto* first = digits.data();
  const auto* last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (digits.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("invalid weight exponent in '" + std::string(spec) + "'");
  }
  if (n < 2) {
    throw ParseError("weight exponent must be >= 2 in '" + std::string(spec) +
                     "' (use 'linear' or 'unity')");
  }
  return n;
}

}  // namespace

WeightFunction WeightFunction::power_concave(int n) {
  if (n < 2) throw DomainError("power_concave exponent must be >= 2");
  return WeightFunction(Kind::power_concave, n);
}

WeightFunction WeightFunction::power_convex(int n) {
  if (n < 2) throw DomainError("power_convex exponent must be >= 2");
  return WeightFunction(Kind::power_convex, n);
}

WeightFunction WeightFunction::parse(std::string_view spec) {
  if (spec == "sqrt") return canonical_sqrt();
  if (spec == "unity") return unity();
  if (spec == "linear") return linear();
  if (spec.starts_with("x^(1/") && spec.ends_with(")")) {
    return power_concave(parse_exponent(spec.substr(5, spec.size() - 6), spec));
  }
  if (spec.starts_with("x^")) {
    return power_convex(parse_exponent(spec.substr(2), spec));
  }
  throw ParseError("unknown weight function '" + std::string(spec) +
                   "' (expected sqrt, unity, linear, x^N or x^(1/N))");
}

double WeightFunction::operator()(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("weight function argument " + std::to_string(x) + " outside [0, 1]");
  }
  switch (kind_) {
    case Kind::canonical_sqrt:
      return std::sqrt(x);
    case Kind::power_concave:
      return std::pow(x, 1.0 / exponent_);
    case Kind::power_convex: {
      double r = 1.0;
      for (int i = 0; i < exponent_; ++i) r *= x;
      return r;
    }
    case Kind::linear:
      return x;
    case Kind::unity:
      return 1.0;
  }
  return 1.0;
}

std::string WeightFunction::to_string() const {
  switch (kind_) {
    case Kind::canonical_sqrt:
      return "sqrt";
    case Kind::power_concave:
      return "x^(1/" + std::to_string(exponent_) + ")";
    case Kind::power_convex:
      return "x^" + std::to_string(exponent_);
    case Kind::linear:
      return "linear";
    case Kind::unity:
      return "unity";
  }
  return "unity";
}

}  // namespace vindex
