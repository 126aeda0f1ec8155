#pragma once

#include <Eigen/Core>

#include <string>
#include <string_view>

namespace bestek {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Dimension parameter of the curvature-dimension condition: a real n > 1,
/// or infinity, in which case the (Δf)²/n term drops out.
class Dimension {
 public:
  /// Throws InvalidDimensionParam unless n > 1 (infinity allowed).
  explicit Dimension(double n);

  static Dimension infinite();
  /// Accepts decimal numbers and the literals "inf" / "infinity".
  static Dimension parse(std::string_view text);

  bool is_infinite() const noexcept;
  double value() const noexcept { return n_; }
  /// 1/n, exactly zero for n = ∞.
  double inverse() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Dimension&, const Dimension&) = default;

 private:
  double n_;
};

/// nK/(n-1), reading K when n = ∞.
double lichnerowicz_bound(double K, Dimension n);

/// Relative closeness |a-b| <= tol * max(|a|, |b|).
bool nearly_equal(double a, double b, double tol);

/// Shortest decimal form with 17 significant digits, "inf"/"-inf" for infinities.
std::string format_double(double value);

}  // namespace bestek
