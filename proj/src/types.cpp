#include "bestek/types.hpp"

#include "bestek/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

namespace bestek {

Dimension::Dimension(double n) : n_(n) {
  if (std::isnan(n) || !(n > 1.0)) {
    throw Error(ErrorCode::InvalidDimensionParam,
                "dimension must satisfy n > 1 or n = inf, got " + format_double(n));
  }
}

Dimension Dimension::infinite() { return Dimension(std::numeric_limits<double>::infinity()); }

Dimension Dimension::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Inf" || text == "+inf") return infinite();
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::InvalidDimensionParam, "cannot parse dimension '" + std::string(text) + "'");
  }
  return Dimension(value);
}

bool Dimension::is_infinite() const noexcept { return std::isinf(n_); }

double Dimension::inverse() const noexcept { return is_infinite() ? 0.0 : 1.0 / n_; }

std::string Dimension::to_string() const { return format_double(n_); }

double lichnerowicz_bound(double K, Dimension n) {
  if (n.is_infinite()) return K;
  return n.value() * K / (n.value() - 1.0);
}

bool nearly_equal(double a, double b, double tol) {
  if (a == b) return true;
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace bestek
