#include "riskprop/piecewise.hpp"

#include "riskprop/errors.hpp"

namespace riskprop {

PiecewiseLinearFn::PiecewiseLinearFn(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw PreconditionError("piecewise-linear function needs a breakpoint");
  for (std::size_t k = 1; k < points_.size(); ++k)
    if (points_[k].x <= points_[k - 1].x) throw PreconditionError("breakpoint x values must strictly increase");
}

PiecewiseLinearFn PiecewiseLinearFn::identity() { return PiecewiseLinearFn({{0, 0}, {1, 1}}); }

Rational PiecewiseLinearFn::operator()(const Rational& x) const {
  if (points_.size() == 1) return points_.front().y;
  std::size_t k = 1;
  while (k + 1 < points_.size() && x > points_[k].x) ++k;
  const Point& a = points_[k - 1];
  const Point& b = points_[k];
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

std::vector<Rational> PiecewiseLinearFn::slopes() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < points_.size(); ++k)
    out.push_back((points_[k].y - points_[k - 1].y) / (points_[k].x - points_[k - 1].x));
  return out;
}

bool PiecewiseLinearFn::is_concave() const {
  const auto s = slopes();
  for (std::size_t k = 1; k < s.size(); ++k)
    if (s[k] > s[k - 1]) return false;
  return true;
}

bool PiecewiseLinearFn::is_convex() const {
  const auto s = slopes();
  for (std::size_t k = 1; k < s.size(); ++k)
    if (s[k] < s[k - 1]) return false;
  return true;
}

bool PiecewiseLinearFn::is_strictly_increasing() const {
  const auto s = slopes();
  if (s.empty()) return false;
  for (const auto& v : s)
    if (v <= 0) return false;
  return true;
}

bool PiecewiseLinearFn::is_non_decreasing() const {
  for (const auto& v : slopes())
    if (v < 0) return false;
  return true;
}

std::optional<Rational> PiecewiseLinearFn::inverse(const Rational& y) const {
  if (!is_strictly_increasing()) return std::nullopt;
  std::size_t k = 1;
  while (k + 1 < points_.size() && y > points_[k].y) ++k;
  const Point& a = points_[k - 1];
  const Point& b = points_[k];
  return Rational(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
}

}  // namespace riskprop
