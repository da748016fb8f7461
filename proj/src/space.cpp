#include "riskprop/space.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace riskprop {

Payoff::Payoff(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw PreconditionError("payoff needs at least one state");
}

Payoff::Payoff(std::initializer_list<Rational> values) : Payoff(std::vector<Rational>(values)) {}

Payoff Payoff::constant(std::size_t n, const Rational& c) { return Payoff(std::vector<Rational>(n, c)); }

Payoff Payoff::of(std::initializer_list<long> values) {
  std::vector<Rational> v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return Payoff(std::move(v));
}

Rational Payoff::min() const { return *std::min_element(values_.begin(), values_.end()); }
Rational Payoff::max() const { return *std::max_element(values_.begin(), values_.end()); }

bool Payoff::is_constant() const {
  return std::all_of(values_.begin(), values_.end(), [&](const Rational& v) { return v == values_.front(); });
}

std::vector<Rational> Payoff::sorted() const {
  std::vector<Rational> v = values_;
  std::sort(v.begin(), v.end());
  return v;
}

Payoff Payoff::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != size()) throw LengthMismatch("permutation length differs from payoff length");
  std::vector<Rational> v;
  v.reserve(size());
  for (std::size_t s : perm) v.push_back(values_.at(s));
  return Payoff(std::move(v));
}

Payoff Payoff::without_state(std::size_t s) const {
  std::vector<Rational> v = values_;
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(s));
  return Payoff(std::move(v));
}

void require_same_length(const Payoff& a, const Payoff& b, const char* op) {
  if (a.size() != b.size())
    throw LengthMismatch(std::string(op) + ": payoffs have " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()) + " states");
}

Payoff Payoff::operator+(const Payoff& other) const {
  require_same_length(*this, other, "operator+");
  std::vector<Rational> v(size());
  for (std::size_t s = 0; s < size(); ++s) v[s] = values_[s] + other.values_[s];
  return Payoff(std::move(v));
}

Payoff Payoff::operator-(const Payoff& other) const {
  require_same_length(*this, other, "operator-");
  std::vector<Rational> v(size());
  for (std::size_t s = 0; s < size(); ++s) v[s] = values_[s] - other.values_[s];
  return Payoff(std::move(v));
}

Payoff Payoff::operator-() const {
  std::vector<Rational> v(size());
  for (std::size_t s = 0; s < size(); ++s) v[s] = -values_[s];
  return Payoff(std::move(v));
}

Payoff Payoff::operator+(const Rational& c) const {
  std::vector<Rational> v(size());
  for (std::size_t s = 0; s < size(); ++s) v[s] = values_[s] + c;
  return Payoff(std::move(v));
}

Payoff Payoff::operator-(const Rational& c) const { return *this + Rational(-c); }

Payoff Payoff::operator*(const Rational& c) const {
  std::vector<Rational> v(size());
  for (std::size_t s = 0; s < size(); ++s) v[s] = values_[s] * c;
  return Payoff(std::move(v));
}

Payoff Payoff::operator/(const Rational& c) const {
  if (c == 0) throw PreconditionError("division of a payoff by zero");
  std::vector<Rational> v(size());
  for (std::size_t s = 0; s < size(); ++s) v[s] = values_[s] / c;
  return Payoff(std::move(v));
}

Rational expectation(const Payoff& f) {
  Rational sum = 0;
  for (const auto& v : f.values()) sum += v;
  return sum / static_cast<unsigned long>(f.size());
}

Rational variance(const Payoff& f) {
  Rational mean = expectation(f);
  Rational sum = 0;
  for (const auto& v : f.values()) {
    Rational d = v - mean;
    sum += d * d;
  }
  return sum / static_cast<unsigned long>(f.size());
}

bool equal_in_distribution(const Payoff& f, const Payoff& g) {
  require_same_length(f, g, "equal_in_distribution");
  return f.sorted() == g.sorted();
}

std::vector<std::size_t> sort_order(const Payoff& f) {
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
  return order;
}

Lottery lottery(const Payoff& f) {
  Lottery out;
  const Rational unit(1, static_cast<unsigned long>(f.size()));
  for (const auto& v : f.sorted()) {
    if (!out.atoms.empty() && out.atoms.back().value == v)
      out.atoms.back().probability += unit;
    else
      out.atoms.push_back({v, unit});
  }
  return out;
}

QuantileTable::QuantileTable(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw PreconditionError("quantile table needs at least one piece");
  Rational prev_upper = 0;
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    if (pieces_[k].upper <= prev_upper) throw PreconditionError("quantile table breakpoints must increase");
    if (k > 0 && pieces_[k].value < pieces_[k - 1].value)
      throw PreconditionError("quantile table values must be non-decreasing");
    prev_upper = pieces_[k].upper;
  }
  if (pieces_.back().upper != 1) throw PreconditionError("quantile table must end at 1");
}

QuantileTable QuantileTable::constant(const Rational& c) { return QuantileTable({{Rational(1), c}}); }

QuantileTable QuantileTable::from_payoff(const Payoff& f) {
  std::vector<Piece> pieces;
  Rational cumulative = 0;
  for (const auto& atom : lottery(f).atoms) {
    cumulative += atom.probability;
    pieces.push_back({cumulative, atom.value});
  }
  return QuantileTable(std::move(pieces));
}

Rational QuantileTable::at(const Rational& t) const {
  for (const auto& piece : pieces_)
    if (t <= piece.upper) return piece.value;
  return pieces_.back().value;
}

Rational QuantileTable::integral_to(const Rational& p) const {
  Rational total = 0;
  Rational lower = 0;
  for (const auto& piece : pieces_) {
    if (p <= lower) break;
    Rational upper = piece.upper < p ? piece.upper : p;
    total += (upper - lower) * piece.value;
    lower = piece.upper;
  }
  return total;
}

Payoff dyadic_condition(const QuantileTable& q, unsigned level) {
  if (level > 24) throw PreconditionError("dyadic level too large");
  const unsigned long cells = 1UL << level;
  std::vector<Rational> values;
  values.reserve(cells);
  Rational prev = 0;
  for (unsigned long k = 1; k <= cells; ++k) {
    Rational upper(k, cells);
    upper.canonicalize();
    Rational next = q.integral_to(upper);
    values.push_back((next - prev) * cells);
    prev = next;
  }
  return Payoff(std::move(values));
}

}  // namespace riskprop
