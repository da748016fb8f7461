#pragma once

// Stochastic orders and dependence relations between payoffs on the same
// equiprobable space.

#include "riskprop/space.hpp"

#include <optional>

namespace riskprop {

/// Mean-preserving spread: move `delta` from state `donor` to state
/// `recipient`, where the donor does not hold the larger value.
struct MpsStep {
  std::size_t donor = 0;
  std::size_t recipient = 0;
  Rational delta;

  friend bool operator==(const MpsStep&, const MpsStep&) = default;
};

/// f - delta*1_donor + delta*1_recipient. Throws PreconditionError when the
/// step is malformed for f (same state twice, negative delta, or
/// f(donor) > f(recipient)).
Payoff apply(const Payoff& f, const MpsStep& step);

/// f >=_cv g: f is less risky than g. Decided by comparing prefix sums of the
/// ascending-sorted values, with equality of the totals.
bool concave_order(const Payoff& f, const Payoff& g);

/// Concave order between quantile tables: the integrated quantile of f
/// dominates that of g on [0,1] with equal endpoints at 1. Both integrated
/// quantiles are piecewise linear, so checking the union of breakpoints is
/// exact.
bool concave_order(const QuantileTable& f, const QuantileTable& g);

/// First-order stochastic dominance.
bool fsd(const Payoff& f, const Payoff& g);

/// The single MPS step turning f into g, if one exists. With several
/// candidates (only possible for delta = 0) the lexicographically smallest
/// (donor, recipient) pair is returned.
std::optional<MpsStep> recognize_mps(const Payoff& f, const Payoff& g);

bool comonotone(const Payoff& f, const Payoff& w);
/// [f(s)-f(t)][w(s)-w(t)] <= 0 for every pair of states.
bool counter_monotone(const Payoff& f, const Payoff& w);

/// f is a better hedge for w than g: f and g are equally distributed and
/// P(f <= tau | w <= lambda) <= P(g <= tau | w <= lambda) for every tau and
/// lambda. Both conditional CDFs are right-continuous step functions, so the
/// observed values of w and of f, g are an exact grid.
bool better_hedge(const Payoff& f, const Payoff& g, const Payoff& w);

}  // namespace riskprop
