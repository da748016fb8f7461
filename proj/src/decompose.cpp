#include "riskprop/decompose.hpp"

#include <algorithm>
#include <numeric>

namespace riskprop {

ZeroMeanSplit split_zero_mean(const Payoff& f) {
  if (expectation(f) != 0) throw PreconditionError("split_zero_mean needs a zero-mean payoff");
  const std::size_t n = f.size();
  if (std::all_of(f.values().begin(), f.values().end(), [](const Rational& v) { return v == 0; }))
    return {f, f};

  std::vector<bool> used(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  Rational running = 0;

  auto first_where = [&](auto pred) -> std::size_t {
    for (std::size_t j = 0; j < n; ++j)
      if (!used[j] && pred(f[j])) return j;
    return n;
  };

  // Start from a positive value.
  std::size_t j = first_where([](const Rational& x) { return x > 0; });
  used[j] = true;
  order.push_back(j);
  running = f[j];

  while (order.size() < n) {
    j = first_where([](const Rational& x) { return x == 0; });
    if (j == n) {
      if (running == 0)
        j = first_where([](const Rational&) { return true; });
      else if (running > 0)
        j = first_where([](const Rational& x) { return x < 0; });
      else
        j = first_where([](const Rational& x) { return x > 0; });
    }
    // The zero total guarantees a state of the required sign remains.
    used[j] = true;
    order.push_back(j);
    running += f[j];
  }

  std::vector<Rational> h(n);
  std::vector<Rational> h_prime(n);
  Rational partial = 0;
  for (std::size_t k = 0; k < n; ++k) {
    h_prime[order[k]] = partial;
    partial += f[order[k]];
    h[order[k]] = partial;
  }
  return {Payoff(std::move(h)), Payoff(std::move(h_prime))};
}

bool StatePermutation::is_identity() const {
  for (std::size_t s = 0; s < perm.size(); ++s)
    if (perm[s] != s) return false;
  return true;
}

std::size_t MpsChain::spread_count() const {
  return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const Element& e) {
    return std::holds_alternative<MpsStep>(e);
  }));
}

Payoff MpsChain::replay(const Payoff& f) const {
  Payoff h = f;
  for (const auto& element : steps) {
    if (const auto* step = std::get_if<MpsStep>(&element))
      h = apply(h, *step);
    else
      h = h.permuted(std::get<StatePermutation>(element).perm);
  }
  return h;
}

MpsChain mps_chain(const Payoff& f, const Payoff& g) {
  if (!concave_order(f, g)) throw PreconditionError("mps_chain needs f >=_cv g");
  MpsChain chain;
  if (f == g) return chain;

  const std::size_t n = f.size();
  const auto order_f = sort_order(f);
  const auto order_g = sort_order(g);
  const auto target = f.sorted();
  std::vector<Rational> current = g.sorted();

  // Pinch the sorted spread payoff back toward the sorted f. Each pinch
  // settles at least one coordinate and keeps `current` sorted, so reading
  // the pinches backwards yields spreads whose donor holds the lower value.
  struct Pinch {
    std::size_t low;
    std::size_t high;
    Rational delta;
  };
  std::vector<Pinch> pinches;
  while (current != target) {
    std::size_t low = n;
    for (std::size_t k = n; k-- > 0;)
      if (current[k] < target[k]) {
        low = k;
        break;
      }
    std::size_t high = low + 1;
    while (high < n && current[high] <= target[high]) ++high;
    Rational delta = std::min(Rational(target[low] - current[low]), Rational(current[high] - target[high]));
    current[low] += delta;
    current[high] -= delta;
    pinches.push_back({low, high, delta});
  }

  for (auto it = pinches.rbegin(); it != pinches.rend(); ++it)
    chain.steps.emplace_back(MpsStep{order_f[it->low], order_f[it->high], it->delta});

  // After the spreads, state order_f[k] holds the k-th smallest value of g;
  // move it to order_g[k].
  StatePermutation closing{std::vector<std::size_t>(n)};
  for (std::size_t k = 0; k < n; ++k) closing.perm[order_g[k]] = order_f[k];
  chain.steps.emplace_back(std::move(closing));
  return chain;
}

InsuranceTriple proportional_triple(const Payoff& f, const MpsStep& step) {
  if (step.delta <= 0) throw PreconditionError("proportional_triple needs delta > 0");
  if (step.donor >= f.size() || step.recipient >= f.size() || step.donor == step.recipient)
    throw PreconditionError("proportional_triple: malformed step");
  const Rational& m1 = f[step.donor];
  const Rational& m2 = f[step.recipient];
  if (!(m1 < m2))
    throw PreconditionError("proportional_triple needs f(donor) < f(recipient); perturb the step first");

  const Rational a = (m1 - m2) / step.delta - 1;  // < -1
  const Payoff f_tilde = f / Rational(a + 1);
  std::vector<Rational> g(f_tilde.values().begin(), f_tilde.values().end());
  std::swap(g[step.donor], g[step.recipient]);

  InsuranceTriple t{TripleKind::Proportional, f_tilde * a, f_tilde, Payoff(std::move(g)), a, 1 + 1 / a, 0, 0, 0};
  return t;
}

InsuranceTriple deductible_triple(const Payoff& f, const MpsStep& step) {
  if (step.delta < 0) throw PreconditionError("deductible_triple needs delta >= 0");
  if (step.donor >= f.size() || step.recipient >= f.size() || step.donor == step.recipient)
    throw PreconditionError("deductible_triple: malformed step");
  const Rational& low = f[step.donor];
  const Rational& high = f[step.recipient];
  if (low > high) throw PreconditionError("deductible_triple needs f(donor) <= f(recipient)");

  const Rational half = step.delta / 2;
  const std::size_t n = f.size();
  std::vector<Rational> ft(n), gt(n), wt(n);
  for (std::size_t s = 0; s < n; ++s) {
    // Lower block: donor, {f <= f(donor)}, and {f(donor) < f < f(recipient)}.
    // When f(donor) == f(recipient) the tied states go to the lower block.
    const bool lower = s == step.donor || (s != step.recipient && (f[s] <= low || f[s] < high));
    ft[s] = lower ? half : Rational(-half);
    gt[s] = ft[s];
    wt[s] = lower ? Rational(f[s] - half) : Rational(f[s] + half);
  }
  gt[step.donor] = -half;
  gt[step.recipient] = half;

  InsuranceTriple t{TripleKind::DeductibleLimit,
                    Payoff(std::move(wt)),
                    Payoff(std::move(ft)),
                    Payoff(std::move(gt)),
                    0,
                    0,
                    Rational(-high - half),
                    step.delta,
                    half};
  return t;
}

}  // namespace riskprop
