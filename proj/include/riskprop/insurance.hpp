#pragma once

// Insurance contracts for a risk w (the agent's random wealth change, so -w
// is the loss) and the five-class taxonomy:
//
//   fi  full              f = -w - premium
//   pr  proportional      f = -(1 - excess) w - premium,        excess in [0,1)
//   dl  deductible-limit  f = min{(-w - deductible)^+, limit} - premium,  limit >= 0
//   is  indemnity schedule  f = I(-w) for an increasing I
//   cs  contingency schedule  f comonotone with -w

#include "riskprop/piecewise.hpp"
#include "riskprop/space.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace riskprop {

enum class InsuranceKind { Full, Proportional, DeductibleLimit, IndemnitySchedule, ContingencySchedule };

inline constexpr InsuranceKind kAllInsuranceKinds[] = {
    InsuranceKind::Full, InsuranceKind::Proportional, InsuranceKind::DeductibleLimit,
    InsuranceKind::IndemnitySchedule, InsuranceKind::ContingencySchedule};

std::string_view tag(InsuranceKind kind);
/// Inverse of tag(); throws ParseError on an unknown tag.
InsuranceKind parse_insurance_kind(std::string_view tag);

struct ContractParams {
  Rational premium;
  Rational excess;
  Rational deductible;
  Rational limit;
  /// Indemnity schedule I as a function of the loss -w.
  std::optional<PiecewiseLinearFn> schedule;
  /// Contingency schedules are given by their payoff.
  std::optional<Payoff> payoff;
};

struct InsuranceContract {
  Payoff payoff;
  InsuranceKind kind;
  ContractParams params;
};

/// Builds the contract payoff for risk w. Throws PreconditionError on
/// parameter range violations, a decreasing schedule, or a contingency payoff
/// that is not comonotone with -w.
InsuranceContract make_contract(const Payoff& w, InsuranceKind kind, const ContractParams& params);

/// Fitted witnesses for each class a payoff belongs to.
struct Classification {
  struct FullFit {
    Rational premium;
  };
  struct ProportionalFit {
    Rational excess;
    Rational premium;
  };
  struct DeductibleFit {
    Rational deductible;
    Rational limit;
    Rational premium;
  };
  /// Increasing map I on the distinct loss values, as (loss, payment) pairs.
  struct ScheduleFit {
    std::vector<std::pair<Rational, Rational>> schedule;
  };

  std::optional<FullFit> full;
  std::optional<ProportionalFit> proportional;
  std::optional<DeductibleFit> deductible_limit;
  std::optional<ScheduleFit> indemnity_schedule;
  bool contingency_schedule = false;

  bool contains(InsuranceKind kind) const;
  std::vector<InsuranceKind> kinds() const;
};

Classification classify(const Payoff& f, const Payoff& w);

/// Premium calculation principle: Pi(h + gamma) = Pi(h) + theta * gamma.
class PremiumPrinciple {
 public:
  PremiumPrinciple(std::string name, std::function<Rational(const Payoff&)> base, Rational theta);

  /// Fair principle: Pi(h) = E[h], theta = 1.
  static PremiumPrinciple fair();
  /// Expected value with loading: Pi(h) = (1 + load) E[h], theta = 1 + load.
  static PremiumPrinciple expected_value_loading(const Rational& load);

  const std::string& name() const noexcept { return name_; }
  const Rational& theta() const noexcept { return theta_; }
  Rational operator()(const Payoff& h) const { return base_(h); }

 private:
  std::string name_;
  std::function<Rational(const Payoff&)> base_;
  Rational theta_;
};

/// Price of the indemnity payoff h. Full insurance for w at this price is
/// the contract -w - premium(pp, -w).
Rational premium(const PremiumPrinciple& pp, const Payoff& h);

}  // namespace riskprop
