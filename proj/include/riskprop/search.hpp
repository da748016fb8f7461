#pragma once

// Seeded search machinery shared by the certification checks: budgets,
// per-trial random streams, payoff/contract generators, and the trial runner
// (OpenMP-parallel, with a serial reference path).

#include "riskprop/decompose.hpp"
#include "riskprop/insurance.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>

namespace riskprop {

struct SearchBudget {
  std::size_t min_n = 2;
  std::size_t max_n = 5;
  /// Exhaustive permutation search up to this many states; random
  /// permutations above it.
  std::size_t exhaustive_n = 5;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  std::vector<Rational> value_grid = {-2, -1, 0, 1, 2};
  /// Random permutations tried per instance above exhaustive_n.
  std::size_t sampled_permutations = 24;

  /// Throws PreconditionError on an inconsistent budget.
  void validate() const;
};

struct Execution {
  bool parallel = true;
  /// 0 keeps the OpenMP default.
  int threads = 0;

  static Execution serial() { return {false, 0}; }
};

using Rng = std::mt19937_64;

/// Independent stream for (seed, trial): results never depend on which
/// thread runs a trial.
Rng trial_rng(std::uint64_t seed, std::size_t trial);

/// A violating instance. Payoffs that do not apply to a property stay empty;
/// lhs/rhs are the two compared quantities (values or rho), lhs < rhs.
struct Witness {
  std::optional<Payoff> w;
  std::optional<Payoff> f;
  std::optional<Payoff> g;
  std::string lhs;
  std::string rhs;
  std::size_t trial = 0;
};

/// Re-evaluates a candidate exactly: returns it, with lhs/rhs filled in, iff
/// it satisfies the property's premise and strictly violates its conclusion.
using Verifier = std::function<std::optional<Witness>(const Witness&)>;

/// One trial: searches instances drawn from `rng` and returns the first
/// verified violation.
using TrialFn = std::function<std::optional<Witness>(std::size_t trial, Rng& rng)>;

struct SearchOutcome {
  std::optional<Witness> witness;
  /// Trials up to and including the first violating one (all of them when
  /// nothing is found).
  std::size_t trials_run = 0;
};

/// Runs trials 0..trials-1 and reports the violation from the lowest trial
/// index, so parallel and serial execution agree exactly.
SearchOutcome run_trials(std::size_t trials, std::uint64_t seed, const TrialFn& fn, const Execution& exec);

/// Shrinks a verified witness: drops states while the violation persists,
/// then halves all magnitudes while the values stay on the grid.
Witness shrink(Witness witness, const Verifier& verify, const std::vector<Rational>& grid);

// Generators. Each consumes the stream in a fixed order, which keeps checks
// that share a generator aligned trial by trial.
std::size_t draw_size(Rng& rng, const SearchBudget& budget);
Payoff draw_payoff(Rng& rng, std::size_t n, const std::vector<Rational>& grid);
Rational draw_from(Rng& rng, const std::vector<Rational>& values);
std::vector<std::size_t> draw_permutation(Rng& rng, std::size_t n);

/// One link of a random chain of spreads: after = apply(before, step).
struct ChainLink {
  Payoff before;
  MpsStep step;
  Payoff after;
};

struct DrawnChain {
  std::vector<ChainLink> links;
  /// The end of the chain with its states permuted at random.
  Payoff end;
};

/// 1 to 3 random spreads of f with transfers drawn from the grid magnitudes
/// (and 1/2), then a random permutation.
DrawnChain draw_chain(Rng& rng, const Payoff& f, const std::vector<Rational>& grid);

/// Random contract of the given kind for w, parameters drawn from the grid.
Payoff draw_contract(Rng& rng, InsuranceKind kind, const Payoff& w, const std::vector<Rational>& grid);

/// Every distinct rearrangement of f (n!/multiplicities of them) when
/// n <= exhaustive_n, otherwise `sampled_permutations` random ones.
std::vector<Payoff> rearrangements(Rng& rng, const Payoff& f, const SearchBudget& budget);
std::vector<Payoff> all_rearrangements(const Payoff& f);

}  // namespace riskprop
