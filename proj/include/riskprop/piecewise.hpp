#pragma once

#include "riskprop/rational.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace riskprop {

/// Piecewise-linear function through breakpoints (x_k, y_k) with strictly
/// increasing x, extended affinely beyond both ends using the end slopes. A
/// single breakpoint gives a constant function.
class PiecewiseLinearFn {
 public:
  struct Point {
    Rational x;
    Rational y;
  };

  explicit PiecewiseLinearFn(std::vector<Point> points);
  static PiecewiseLinearFn identity();

  std::span<const Point> points() const noexcept { return points_; }
  Rational operator()(const Rational& x) const;

  /// Segment slopes, left to right (empty for a single breakpoint).
  std::vector<Rational> slopes() const;
  bool is_concave() const;
  bool is_convex() const;
  bool is_strictly_increasing() const;
  bool is_non_decreasing() const;

  /// The unique x with f(x) = y, for strictly increasing functions.
  std::optional<Rational> inverse(const Rational& y) const;

 private:
  std::vector<Point> points_;
};

}  // namespace riskprop
