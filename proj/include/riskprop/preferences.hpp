#pragma once

// Law-invariant preference models over payoffs: expected utility, the dual
// (rank-dependent) model, mean-variance, expected value, and a float-valued
// escape hatch for user-supplied evaluators.

#include "riskprop/piecewise.hpp"
#include "riskprop/space.hpp"

#include <functional>
#include <memory>
#include <string>
#include <variant>

namespace riskprop {

/// Either an exact rational or a double from a float evaluator.
class Number {
 public:
  Number(Rational r) : value_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Number(double d) : value_(d) {}               // NOLINT(google-explicit-constructor)

  bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }
  const Rational& exact() const { return std::get<Rational>(value_); }
  double approx() const;
  /// "p/q" for exact values, shortest round-trip decimal otherwise.
  std::string str() const;

 private:
  std::variant<Rational, double> value_;
};

/// Exact comparison when both sides are exact; otherwise differences within
/// `tolerance` compare equal.
int compare(const Number& a, const Number& b, double tolerance = 1e-9);

/// Probability distortion g on [0,1] with g(0) = 0, g(1) = 1, increasing:
/// piecewise linear, or the power p^k.
class Distortion {
 public:
  explicit Distortion(PiecewiseLinearFn fn);
  static Distortion power(unsigned exponent);
  static Distortion identity() { return Distortion(PiecewiseLinearFn::identity()); }

  Rational operator()(const Rational& p) const;
  bool is_convex() const;
  /// g(p) <= p at every breakpoint (sufficient for piecewise-linear g).
  bool dominated_by_identity() const;

  const PiecewiseLinearFn* piecewise() const { return std::get_if<PiecewiseLinearFn>(&form_); }
  std::optional<unsigned> power_exponent() const;

 private:
  explicit Distortion(unsigned exponent) : form_(exponent) {}
  std::variant<PiecewiseLinearFn, unsigned> form_;
};

enum class ModelKind { ExpectedUtility, Dual, MeanVariance, ExpectedValue, Custom };

std::string_view tag(ModelKind kind);

enum class MvOrdering { Better, Worse, Indifferent, Incomparable };

class PreferenceModel {
 public:
  using Evaluator = std::function<double(const Payoff&)>;

  static PreferenceModel expected_value(std::string name = "ev");
  static PreferenceModel expected_utility(PiecewiseLinearFn u, std::string name = "eu");
  static PreferenceModel dual(Distortion g, std::string name = "dual");
  static PreferenceModel mean_variance(std::string name = "mv");
  /// Float-valued evaluator V. The caller vouches for law invariance and the
  /// monotone/secular flags.
  static PreferenceModel custom(std::string name, Evaluator v, bool monotone, bool secular);

  ModelKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  bool law_invariant() const noexcept { return true; }
  bool monotone() const noexcept { return monotone_; }
  bool secular() const noexcept { return secular_; }
  /// Total evaluator available (everything except mean-variance).
  bool complete() const noexcept { return kind_ != ModelKind::MeanVariance; }
  bool exact() const noexcept { return kind_ != ModelKind::Custom; }

  const PiecewiseLinearFn* utility() const { return utility_.get(); }
  const Distortion* distortion() const { return distortion_.get(); }
  const Evaluator& evaluator() const { return evaluator_; }

 private:
  PreferenceModel(ModelKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  ModelKind kind_;
  std::string name_;
  bool monotone_ = true;
  bool secular_ = true;
  std::shared_ptr<const PiecewiseLinearFn> utility_;
  std::shared_ptr<const Distortion> distortion_;
  Evaluator evaluator_;
};

Rational eu_value(const PiecewiseLinearFn& u, const Payoff& f);
/// Choquet integral: values sorted descending x_(1) >= ... >= x_(n) get
/// weights g(k/n) - g((k-1)/n).
Rational dual_value(const Distortion& g, const Payoff& f);
MvOrdering mv_compare(const Payoff& f, const Payoff& g);

/// V(f) for models with a total evaluator; UnsupportedModel for mean-variance.
Number value(const PreferenceModel& m, const Payoff& f);

/// f is weakly preferred to g. Works for every model kind, including the
/// partial mean-variance order. Float evaluators compare within 1e-9.
bool weakly_prefers(const PreferenceModel& m, const Payoff& f, const Payoff& g);

/// The constant c with V(c) = V(f). Exact for the built-in models, bisection
/// to 1e-12 on [min f, max f] for float evaluators.
Number certainty_equivalent(const PreferenceModel& m, const Payoff& f);

/// The unique rho with g ~ f - rho: the most the agent pays to swap g for f.
Number rho(const PreferenceModel& m, const Payoff& g, const Payoff& f);

}  // namespace riskprop
