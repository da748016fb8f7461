#include "riskprop/orders.hpp"

#include <algorithm>
#include <set>

namespace riskprop {

Payoff apply(const Payoff& f, const MpsStep& step) {
  if (step.donor >= f.size() || step.recipient >= f.size())
    throw PreconditionError("MPS step refers to a state outside the payoff");
  if (step.donor == step.recipient) throw PreconditionError("MPS step needs two distinct states");
  if (step.delta < 0) throw PreconditionError("MPS step needs delta >= 0");
  if (f[step.donor] > f[step.recipient])
    throw PreconditionError("MPS step needs f(donor) <= f(recipient)");
  std::vector<Rational> v(f.values().begin(), f.values().end());
  v[step.donor] -= step.delta;
  v[step.recipient] += step.delta;
  return Payoff(std::move(v));
}

bool concave_order(const Payoff& f, const Payoff& g) {
  require_same_length(f, g, "concave_order");
  const auto a = f.sorted();
  const auto b = g.sorted();
  Rational sa = 0;
  Rational sb = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    sa += a[k];
    sb += b[k];
    if (sa < sb) return false;
  }
  return sa == sb;
}

bool concave_order(const QuantileTable& f, const QuantileTable& g) {
  std::set<Rational> grid;
  for (const auto& p : f.pieces()) grid.insert(p.upper);
  for (const auto& p : g.pieces()) grid.insert(p.upper);
  for (const auto& t : grid)
    if (f.integral_to(t) < g.integral_to(t)) return false;
  return f.integral() == g.integral();
}

bool fsd(const Payoff& f, const Payoff& g) {
  require_same_length(f, g, "fsd");
  const auto a = f.sorted();
  const auto b = g.sorted();
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] < b[k]) return false;
  return true;
}

std::optional<MpsStep> recognize_mps(const Payoff& f, const Payoff& g) {
  require_same_length(f, g, "recognize_mps");
  const std::size_t n = f.size();
  std::vector<std::size_t> changed;
  for (std::size_t s = 0; s < n; ++s)
    if (f[s] != g[s]) changed.push_back(s);

  if (changed.empty()) {
    for (std::size_t s1 = 0; s1 < n; ++s1)
      for (std::size_t s2 = 0; s2 < n; ++s2)
        if (s1 != s2 && f[s1] <= f[s2]) return MpsStep{s1, s2, Rational(0)};
    return std::nullopt;
  }
  if (changed.size() != 2) return std::nullopt;

  const std::size_t a = changed[0];
  const std::size_t b = changed[1];
  const Rational da = g[a] - f[a];
  const Rational db = g[b] - f[b];
  if (da + db != 0) return std::nullopt;
  const std::size_t donor = da < 0 ? a : b;
  const std::size_t recipient = da < 0 ? b : a;
  if (f[donor] > f[recipient]) return std::nullopt;
  return MpsStep{donor, recipient, da < 0 ? Rational(-da) : da};
}

bool comonotone(const Payoff& f, const Payoff& w) {
  require_same_length(f, w, "comonotone");
  for (std::size_t s = 0; s < f.size(); ++s)
    for (std::size_t t = s + 1; t < f.size(); ++t)
      if ((f[s] - f[t]) * (w[s] - w[t]) < 0) return false;
  return true;
}

bool counter_monotone(const Payoff& f, const Payoff& w) {
  require_same_length(f, w, "counter_monotone");
  for (std::size_t s = 0; s < f.size(); ++s)
    for (std::size_t t = s + 1; t < f.size(); ++t)
      if ((f[s] - f[t]) * (w[s] - w[t]) > 0) return false;
  return true;
}

bool better_hedge(const Payoff& f, const Payoff& g, const Payoff& w) {
  require_same_length(f, g, "better_hedge");
  require_same_length(f, w, "better_hedge");
  if (!equal_in_distribution(f, g)) return false;

  // Payment levels: the values of f (g shares them).
  std::vector<Rational> taus = f.sorted();
  taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
  std::vector<Rational> lambdas = w.sorted();
  lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());

  // Both conditional probabilities share the denominator #{w <= lambda} > 0,
  // so comparing counts is exact.
  for (const auto& lambda : lambdas) {
    for (const auto& tau : taus) {
      std::size_t count_f = 0;
      std::size_t count_g = 0;
      for (std::size_t s = 0; s < f.size(); ++s) {
        if (w[s] > lambda) continue;
        if (f[s] <= tau) ++count_f;
        if (g[s] <= tau) ++count_g;
      }
      if (count_f > count_g) return false;
    }
  }
  return true;
}

}  // namespace riskprop
