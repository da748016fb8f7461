#include "riskprop/insurance.hpp"

#include "riskprop/orders.hpp"

#include <algorithm>
#include <map>

namespace riskprop {

std::string_view tag(InsuranceKind kind) {
  switch (kind) {
    case InsuranceKind::Full: return "fi";
    case InsuranceKind::Proportional: return "pr";
    case InsuranceKind::DeductibleLimit: return "dl";
    case InsuranceKind::IndemnitySchedule: return "is";
    case InsuranceKind::ContingencySchedule: return "cs";
  }
  return "?";
}

InsuranceKind parse_insurance_kind(std::string_view t) {
  for (auto kind : kAllInsuranceKinds)
    if (tag(kind) == t) return kind;
  throw ParseError("unknown insurance kind '" + std::string(t) + "'");
}

namespace {

Rational positive_part(const Rational& x) { return x > 0 ? x : Rational(0); }

// Distinct loss values (ascending) and the payment f takes on each, when f is
// a function of the loss -w.
std::optional<std::vector<std::pair<Rational, Rational>>> as_function_of_loss(const Payoff& f, const Payoff& w) {
  std::map<Rational, Rational> by_loss;
  for (std::size_t s = 0; s < f.size(); ++s) {
    Rational loss = -w[s];
    auto [it, inserted] = by_loss.emplace(loss, f[s]);
    if (!inserted && it->second != f[s]) return std::nullopt;
  }
  return std::vector<std::pair<Rational, Rational>>(by_loss.begin(), by_loss.end());
}

std::optional<Classification::ProportionalFit> fit_proportional(const Payoff& f, const Payoff& w) {
  const std::size_t n = f.size();
  std::size_t other = n;
  for (std::size_t s = 1; s < n; ++s)
    if (w[s] != w[0]) {
      other = s;
      break;
    }
  if (other == n) {
    // Constant w: every excess works when f is constant; report excess 0.
    if (!f.is_constant()) return std::nullopt;
    return Classification::ProportionalFit{0, Rational(-w[0] - f[0])};
  }
  // f = slope * (-w) - premium with slope = 1 - excess in (0, 1].
  const Rational slope = (f[other] - f[0]) / (w[0] - w[other]);
  if (slope <= 0 || slope > 1) return std::nullopt;
  const Rational premium = -slope * w[0] - f[0];
  for (std::size_t s = 0; s < n; ++s)
    if (f[s] != -slope * w[s] - premium) return std::nullopt;
  return Classification::ProportionalFit{Rational(1 - slope), premium};
}

// f + premium = clamp(loss - deductible, 0, limit) sampled at the distinct
// losses v_1 < ... < v_m. Increments d_k = y_{k+1} - y_k must lie in
// [0, v_{k+1} - v_k], the positive ones must form one contiguous block, and
// every increment strictly inside that block must be the full loss increment.
std::optional<Classification::DeductibleFit> fit_deductible(const Payoff& f, const Payoff& w) {
  auto table = as_function_of_loss(f, w);
  if (!table) return std::nullopt;
  const auto& pts = *table;
  const std::size_t m = pts.size();
  const Rational premium = -pts.front().second;

  std::size_t first = m;
  std::size_t last = m;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    const Rational d = pts[k + 1].second - pts[k].second;
    const Rational span = pts[k + 1].first - pts[k].first;
    if (d < 0 || d > span) return std::nullopt;
    if (d > 0) {
      if (first == m) first = k;
      else if (last != k - 1) return std::nullopt;
      last = k;
    }
  }
  if (first == m) return Classification::DeductibleFit{pts.front().first, 0, premium};

  for (std::size_t k = first + 1; k < last; ++k)
    if (pts[k + 1].second - pts[k].second != pts[k + 1].first - pts[k].first) return std::nullopt;

  const Rational d_first = pts[first + 1].second - pts[first].second;
  if (first == last) return Classification::DeductibleFit{pts[first].first, d_first, premium};

  const Rational d_last = pts[last + 1].second - pts[last].second;
  const Rational deductible = pts[first + 1].first - d_first;
  const Rational limit = pts[last].first + d_last - deductible;
  return Classification::DeductibleFit{deductible, limit, premium};
}

}  // namespace

InsuranceContract make_contract(const Payoff& w, InsuranceKind kind, const ContractParams& params) {
  const std::size_t n = w.size();
  std::vector<Rational> v(n);
  switch (kind) {
    case InsuranceKind::Full:
      for (std::size_t s = 0; s < n; ++s) v[s] = -w[s] - params.premium;
      break;
    case InsuranceKind::Proportional:
      if (params.excess < 0 || params.excess >= 1) throw PreconditionError("excess must lie in [0,1)");
      for (std::size_t s = 0; s < n; ++s) v[s] = -(1 - params.excess) * w[s] - params.premium;
      break;
    case InsuranceKind::DeductibleLimit:
      if (params.limit < 0) throw PreconditionError("limit must be >= 0");
      for (std::size_t s = 0; s < n; ++s)
        v[s] = std::min(positive_part(-w[s] - params.deductible), params.limit) - params.premium;
      break;
    case InsuranceKind::IndemnitySchedule:
      if (!params.schedule) throw PreconditionError("indemnity schedule missing");
      if (!params.schedule->is_non_decreasing()) throw PreconditionError("indemnity schedule must be increasing");
      for (std::size_t s = 0; s < n; ++s) v[s] = (*params.schedule)(Rational(-w[s])) - params.premium;
      break;
    case InsuranceKind::ContingencySchedule:
      if (!params.payoff) throw PreconditionError("contingency schedule payoff missing");
      require_same_length(*params.payoff, w, "make_contract");
      if (!counter_monotone(*params.payoff, w))
        throw PreconditionError("contingency schedule payoff is not comonotone with the loss");
      v.assign(params.payoff->values().begin(), params.payoff->values().end());
      break;
  }
  return {Payoff(std::move(v)), kind, params};
}

bool Classification::contains(InsuranceKind kind) const {
  switch (kind) {
    case InsuranceKind::Full: return full.has_value();
    case InsuranceKind::Proportional: return proportional.has_value();
    case InsuranceKind::DeductibleLimit: return deductible_limit.has_value();
    case InsuranceKind::IndemnitySchedule: return indemnity_schedule.has_value();
    case InsuranceKind::ContingencySchedule: return contingency_schedule;
  }
  return false;
}

std::vector<InsuranceKind> Classification::kinds() const {
  std::vector<InsuranceKind> out;
  for (auto kind : kAllInsuranceKinds)
    if (contains(kind)) out.push_back(kind);
  return out;
}

Classification classify(const Payoff& f, const Payoff& w) {
  require_same_length(f, w, "classify");
  Classification c;
  const Payoff wealth = w + f;
  if (wealth.is_constant()) c.full = Classification::FullFit{Rational(-wealth[0])};
  c.proportional = fit_proportional(f, w);
  c.deductible_limit = fit_deductible(f, w);
  if (auto table = as_function_of_loss(f, w)) {
    bool increasing = true;
    for (std::size_t k = 1; k < table->size(); ++k)
      if ((*table)[k].second < (*table)[k - 1].second) increasing = false;
    if (increasing) c.indemnity_schedule = Classification::ScheduleFit{std::move(*table)};
  }
  c.contingency_schedule = counter_monotone(f, w);
  return c;
}

PremiumPrinciple::PremiumPrinciple(std::string name, std::function<Rational(const Payoff&)> base, Rational theta)
    : name_(std::move(name)), base_(std::move(base)), theta_(std::move(theta)) {
  if (theta_ <= 0) throw PreconditionError("premium principle needs theta > 0");
}

PremiumPrinciple PremiumPrinciple::fair() {
  return PremiumPrinciple("fair", [](const Payoff& h) { return expectation(h); }, Rational(1));
}

PremiumPrinciple PremiumPrinciple::expected_value_loading(const Rational& load) {
  const Rational factor = 1 + load;
  if (factor <= 0) throw PreconditionError("loading must exceed -1");
  return PremiumPrinciple("loading:" + to_string(load),
                          [factor](const Payoff& h) { return Rational(factor * expectation(h)); }, factor);
}

Rational premium(const PremiumPrinciple& pp, const Payoff& h) { return pp(h); }

}  // namespace riskprop
