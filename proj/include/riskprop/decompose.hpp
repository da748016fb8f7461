#pragma once

// Constructive decompositions: the equidistributed split of a zero-mean
// payoff, chains of mean-preserving spreads witnessing the concave order, and
// the insurance triples that turn a single spread into a proportional or
// deductible-limit insurance choice.

#include "riskprop/orders.hpp"

#include <variant>

namespace riskprop {

/// h and h_prime are equally distributed and h - h_prime equals the split
/// payoff statewise.
struct ZeroMeanSplit {
  Payoff h;
  Payoff h_prime;
};

/// Requires E[f] = 0 exactly (PreconditionError otherwise). Builds the
/// cumulative-sum rearrangement f(j_1), f(j_2), ... whose partial sums stay in
/// [min f, max f], then sets h(j_k) = partial sum to k and h'(j_k) = partial
/// sum to k-1. Choices: a zero-valued state first if one remains; otherwise
/// the smallest index of the sign opposite to the running sum (any index when
/// the running sum is zero).
ZeroMeanSplit split_zero_mean(const Payoff& f);

/// g[s] = h[perm[s]]
struct StatePermutation {
  std::vector<std::size_t> perm;

  bool is_identity() const;
  friend bool operator==(const StatePermutation&, const StatePermutation&) = default;
};

struct MpsChain {
  using Element = std::variant<MpsStep, StatePermutation>;
  std::vector<Element> steps;

  std::size_t spread_count() const;
  /// Applies every element in order; MPS elements are validated as they are
  /// applied.
  Payoff replay(const Payoff& f) const;
};

/// Chain of at most n-1 spreads, then one state permutation, mapping f to g.
/// Requires concave_order(f, g); throws PreconditionError otherwise. Empty
/// when f == g.
MpsChain mps_chain(const Payoff& f, const Payoff& g);

enum class TripleKind { Proportional, DeductibleLimit };

struct InsuranceTriple {
  TripleKind kind;
  Payoff w_tilde;
  Payoff f_tilde;
  Payoff g_tilde;

  // Proportional: f_tilde = -(1 - excess) * w_tilde, premium 0, and
  // w_tilde = scale * f_tilde.
  Rational scale;
  Rational excess;

  // Deductible-limit: f_tilde = min{(-w_tilde - deductible)^+, limit} - premium.
  Rational deductible;
  Rational limit;
  Rational premium;

  /// w_tilde + g_tilde.
  Payoff spread() const { return w_tilde + g_tilde; }
};

/// Splits the spread g = apply(f, step) into w_tilde + f_tilde versus
/// w_tilde + g_tilde with f_tilde proportional insurance for w_tilde. Requires
/// delta > 0 and f(donor) < f(recipient).
InsuranceTriple proportional_triple(const Payoff& f, const MpsStep& step);

/// Same with f_tilde a deductible-limit insurance for w_tilde. The half-spread
/// delta/2 is the insurance's premium; the limit is step.delta and the
/// deductible is -f(recipient) - delta/2.
InsuranceTriple deductible_triple(const Payoff& f, const MpsStep& step);

}  // namespace riskprop
