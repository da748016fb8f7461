#pragma once

// Finite equiprobable state spaces. A Payoff on n states gives each state
// probability 1/n; states are indexed 0..n-1 in the C++ API.

#include "riskprop/errors.hpp"
#include "riskprop/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace riskprop {

class Payoff {
 public:
  explicit Payoff(std::vector<Rational> values);
  Payoff(std::initializer_list<Rational> values);

  static Payoff constant(std::size_t n, const Rational& c);
  /// Convenience for tests and fixtures: integer state values.
  static Payoff of(std::initializer_list<long> values);

  std::size_t size() const noexcept { return values_.size(); }
  const Rational& operator[](std::size_t s) const { return values_[s]; }
  std::span<const Rational> values() const noexcept { return values_; }

  Rational min() const;
  Rational max() const;
  bool is_constant() const;

  /// Values sorted ascending.
  std::vector<Rational> sorted() const;
  /// result[s] = (*this)[perm[s]]
  Payoff permuted(std::span<const std::size_t> perm) const;
  Payoff without_state(std::size_t s) const;

  Payoff operator+(const Payoff& other) const;
  Payoff operator-(const Payoff& other) const;
  Payoff operator-() const;
  Payoff operator+(const Rational& c) const;
  Payoff operator-(const Rational& c) const;
  Payoff operator*(const Rational& c) const;
  Payoff operator/(const Rational& c) const;

  friend bool operator==(const Payoff& a, const Payoff& b) { return a.values_ == b.values_; }

 private:
  std::vector<Rational> values_;
};

void require_same_length(const Payoff& a, const Payoff& b, const char* op);

Rational expectation(const Payoff& f);
Rational variance(const Payoff& f);

/// On an equiprobable space f and g are equally distributed iff one is a
/// permutation of the other, i.e. the value multisets coincide.
bool equal_in_distribution(const Payoff& f, const Payoff& g);

/// Stable ascending sort order: f[order[0]] <= f[order[1]] <= ..., ties kept
/// in state-index order.
std::vector<std::size_t> sort_order(const Payoff& f);

/// Distribution of a payoff: strictly increasing values with their
/// probabilities, which sum to exactly one.
struct Lottery {
  struct Atom {
    Rational value;
    Rational probability;
  };
  std::vector<Atom> atoms;
};

Lottery lottery(const Payoff& f);

/// Left-continuous increasing step function on (0,1): the quantile function
/// of a distribution. Piece k takes value `value` on (upper_{k-1}, upper_k],
/// with upper_{-1} = 0 and the last upper equal to 1.
class QuantileTable {
 public:
  struct Piece {
    Rational upper;
    Rational value;
  };

  explicit QuantileTable(std::vector<Piece> pieces);
  static QuantileTable constant(const Rational& c);
  static QuantileTable from_payoff(const Payoff& f);

  std::span<const Piece> pieces() const noexcept { return pieces_; }
  /// Quantile at t in (0,1].
  Rational at(const Rational& t) const;
  /// Exact integral of the quantile over (0, p], p in [0,1].
  Rational integral_to(const Rational& p) const;
  Rational integral() const { return integral_to(Rational(1)); }

 private:
  std::vector<Piece> pieces_;
};

/// The 2^level-state equiprobable payoff whose k-th value is the average of
/// q over the k-th dyadic cell ((k-1)/2^level, k/2^level].
Payoff dyadic_condition(const QuantileTable& q, unsigned level);

}  // namespace riskprop
