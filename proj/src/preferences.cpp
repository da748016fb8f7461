#include "riskprop/preferences.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

namespace riskprop {

double Number::approx() const {
  if (is_exact()) return to_double(exact());
  return std::get<double>(value_);
}

std::string Number::str() const {
  if (is_exact()) return to_string(exact());
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, std::get<double>(value_));
  return std::string(buf, res.ptr);
}

int compare(const Number& a, const Number& b, double tolerance) {
  if (a.is_exact() && b.is_exact()) return cmp(a.exact(), b.exact()) < 0 ? -1 : (cmp(a.exact(), b.exact()) > 0 ? 1 : 0);
  const double d = a.approx() - b.approx();
  if (std::fabs(d) <= tolerance) return 0;
  return d < 0 ? -1 : 1;
}

Distortion::Distortion(PiecewiseLinearFn fn) : form_(std::move(fn)) {
  const auto& g = std::get<PiecewiseLinearFn>(form_);
  if (g(Rational(0)) != 0 || g(Rational(1)) != 1) throw PreconditionError("distortion needs g(0) = 0 and g(1) = 1");
  if (!g.is_non_decreasing()) throw PreconditionError("distortion must be increasing");
}

Distortion Distortion::power(unsigned exponent) {
  if (exponent == 0) throw PreconditionError("distortion power must be >= 1");
  return Distortion(exponent);
}

Rational Distortion::operator()(const Rational& p) const {
  if (const auto* fn = piecewise()) return (*fn)(p);
  const unsigned k = std::get<unsigned>(form_);
  Rational out = 1;
  for (unsigned i = 0; i < k; ++i) out *= p;
  return out;
}

bool Distortion::is_convex() const {
  if (const auto* fn = piecewise()) return fn->is_convex();
  return true;
}

bool Distortion::dominated_by_identity() const {
  if (const auto* fn = piecewise()) {
    for (const auto& pt : fn->points())
      if (pt.x >= 0 && pt.x <= 1 && pt.y > pt.x) return false;
    return true;
  }
  return true;
}

std::optional<unsigned> Distortion::power_exponent() const {
  if (const auto* k = std::get_if<unsigned>(&form_)) return *k;
  return std::nullopt;
}

std::string_view tag(ModelKind kind) {
  switch (kind) {
    case ModelKind::ExpectedUtility: return "eu";
    case ModelKind::Dual: return "dual";
    case ModelKind::MeanVariance: return "mv";
    case ModelKind::ExpectedValue: return "ev";
    case ModelKind::Custom: return "custom";
  }
  return "?";
}

PreferenceModel PreferenceModel::expected_value(std::string name) {
  return PreferenceModel(ModelKind::ExpectedValue, std::move(name));
}

PreferenceModel PreferenceModel::expected_utility(PiecewiseLinearFn u, std::string name) {
  PreferenceModel m(ModelKind::ExpectedUtility, std::move(name));
  // Strictly increasing piecewise-linear u has positive end slopes, so
  // V(f - rho) sweeps the whole real line: monotone and secular together.
  m.monotone_ = u.is_strictly_increasing();
  m.secular_ = m.monotone_;
  m.utility_ = std::make_shared<const PiecewiseLinearFn>(std::move(u));
  return m;
}

PreferenceModel PreferenceModel::dual(Distortion g, std::string name) {
  PreferenceModel m(ModelKind::Dual, std::move(name));
  m.distortion_ = std::make_shared<const Distortion>(std::move(g));
  return m;
}

PreferenceModel PreferenceModel::mean_variance(std::string name) {
  PreferenceModel m(ModelKind::MeanVariance, std::move(name));
  m.secular_ = false;
  return m;
}

PreferenceModel PreferenceModel::custom(std::string name, Evaluator v, bool monotone, bool secular) {
  PreferenceModel m(ModelKind::Custom, std::move(name));
  m.evaluator_ = std::move(v);
  m.monotone_ = monotone;
  m.secular_ = secular;
  return m;
}

Rational eu_value(const PiecewiseLinearFn& u, const Payoff& f) {
  Rational sum = 0;
  for (const auto& x : f.values()) sum += u(x);
  return sum / static_cast<unsigned long>(f.size());
}

Rational dual_value(const Distortion& g, const Payoff& f) {
  auto x = f.sorted();
  const unsigned long n = f.size();
  Rational total = 0;
  Rational prev_weight = 0;  // g(0)
  for (unsigned long k = 1; k <= n; ++k) {
    Rational p(k, n);
    p.canonicalize();
    Rational gk = g(p);
    total += x[n - k] * (gk - prev_weight);
    prev_weight = gk;
  }
  return total;
}

MvOrdering mv_compare(const Payoff& f, const Payoff& g) {
  require_same_length(f, g, "mv_compare");
  const int mean = cmp(expectation(f), expectation(g));
  const int var = cmp(variance(f), variance(g));
  if (mean == 0 && var == 0) return MvOrdering::Indifferent;
  if (mean >= 0 && var <= 0) return MvOrdering::Better;
  if (mean <= 0 && var >= 0) return MvOrdering::Worse;
  return MvOrdering::Incomparable;
}

Number value(const PreferenceModel& m, const Payoff& f) {
  switch (m.kind()) {
    case ModelKind::ExpectedValue: return expectation(f);
    case ModelKind::ExpectedUtility: return eu_value(*m.utility(), f);
    case ModelKind::Dual: return dual_value(*m.distortion(), f);
    case ModelKind::Custom: return m.evaluator()(f);
    case ModelKind::MeanVariance: break;
  }
  throw UnsupportedModel("model '" + m.name() + "' has no total evaluator");
}

bool weakly_prefers(const PreferenceModel& m, const Payoff& f, const Payoff& g) {
  if (m.kind() == ModelKind::MeanVariance) {
    const auto o = mv_compare(f, g);
    return o == MvOrdering::Better || o == MvOrdering::Indifferent;
  }
  return compare(value(m, f), value(m, g)) >= 0;
}

namespace {

void require_secular(const PreferenceModel& m, const char* op) {
  if (!m.complete() || !m.secular() || !m.monotone())
    throw UnsupportedModel(std::string(op) + " needs a monotone, secular model with a total evaluator; '" + m.name() +
                           "' is not");
}

// Solves phi(x) = target for phi strictly monotone and affine between
// consecutive `knots` (and beyond the outermost ones).
Rational solve_piecewise_affine(const std::function<Rational(const Rational&)>& phi, std::set<Rational> knots,
                                const Rational& target) {
  if (knots.empty()) knots.insert(Rational(0));
  if (knots.size() == 1) knots.insert(Rational(*knots.begin() + 1));
  std::vector<Rational> xs(knots.begin(), knots.end());
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const auto& x : xs) ys.push_back(phi(x));
  const bool increasing = ys.back() > ys.front();

  auto between = [&](const Rational& y, const Rational& a, const Rational& b) {
    return increasing ? (a <= y && y <= b) : (b <= y && y <= a);
  };
  auto interpolate = [](const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1,
                        const Rational& y) { return Rational(x0 + (y - y0) * (x1 - x0) / (y1 - y0)); };

  for (std::size_t k = 0; k + 1 < xs.size(); ++k)
    if (between(target, ys[k], ys[k + 1])) return interpolate(xs[k], ys[k], xs[k + 1], ys[k + 1], target);

  const bool left = increasing ? target < ys.front() : target > ys.front();
  if (left) {
    Rational x0 = xs.front() - 1;
    return interpolate(x0, phi(x0), xs.front(), ys.front(), target);
  }
  Rational x1 = xs.back() + 1;
  return interpolate(xs.back(), ys.back(), x1, phi(x1), target);
}

double bisect(const std::function<double(double)>& increasing_fn, double lo, double hi, double target) {
  if (increasing_fn(lo) > target || increasing_fn(hi) < target)
    throw std::runtime_error("bisection bracket does not contain the root; is the evaluator monotone?");
  while (hi - lo > 1e-12) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (increasing_fn(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return lo + (hi - lo) / 2;
}

}  // namespace

Number certainty_equivalent(const PreferenceModel& m, const Payoff& f) {
  require_secular(m, "certainty_equivalent");
  switch (m.kind()) {
    case ModelKind::ExpectedValue: return expectation(f);
    case ModelKind::Dual: return dual_value(*m.distortion(), f);
    case ModelKind::ExpectedUtility: return *m.utility()->inverse(eu_value(*m.utility(), f));
    case ModelKind::Custom: {
      const std::size_t n = f.size();
      const double target = m.evaluator()(f);
      auto v = [&](double c) { return m.evaluator()(Payoff::constant(n, Rational(c))); };
      return bisect(v, to_double(f.min()), to_double(f.max()), target);
    }
    case ModelKind::MeanVariance: break;
  }
  throw UnsupportedModel("certainty_equivalent: unsupported model");
}

Number rho(const PreferenceModel& m, const Payoff& g, const Payoff& f) {
  require_secular(m, "rho");
  require_same_length(f, g, "rho");
  switch (m.kind()) {
    case ModelKind::ExpectedValue: return Rational(expectation(f) - expectation(g));
    case ModelKind::Dual: return Rational(dual_value(*m.distortion(), f) - dual_value(*m.distortion(), g));
    case ModelKind::ExpectedUtility: {
      const auto& u = *m.utility();
      std::set<Rational> knots;
      for (const auto& x : f.values())
        for (const auto& pt : u.points()) knots.insert(x - pt.x);
      auto phi = [&](const Rational& r) { return eu_value(u, f - r); };
      return solve_piecewise_affine(phi, std::move(knots), eu_value(u, g));
    }
    case ModelKind::Custom: {
      const double target = m.evaluator()(g);
      const double spread = std::max(std::fabs(to_double(f.max() - g.min())), std::fabs(to_double(g.max() - f.min())));
      const double bound = spread + 1;
      // V(f - r) decreases in r; bisect on -r so the function increases.
      auto v = [&](double neg_r) { return m.evaluator()(f + Rational(neg_r)); };
      return -bisect(v, -bound, bound, target);
    }
    case ModelKind::MeanVariance: break;
  }
  throw UnsupportedModel("rho: unsupported model");
}

}  // namespace riskprop
