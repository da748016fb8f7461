#include "riskprop/certify.hpp"

#include "riskprop/decompose.hpp"
#include "riskprop/orders.hpp"

#include <functional>

namespace riskprop {

std::string_view tag(Verdict v) { return v == Verdict::Violated ? "violated" : "holds_on_budget"; }

std::string_view tag(Propensity p) {
  switch (p) {
    case Propensity::Full: return "fi";
    case Propensity::Proportional: return "pr";
    case Propensity::DeductibleLimit: return "dl";
    case Propensity::IndemnitySchedule: return "is";
    case Propensity::ContingencySchedule: return "cs";
    case Propensity::Hedging: return "hedging";
  }
  return "?";
}

Propensity parse_propensity(std::string_view t) {
  for (auto p : kAllPropensities)
    if (tag(p) == t) return p;
  throw ParseError("unknown propensity '" + std::string(t) + "'");
}

Propensity propensity_for(InsuranceKind kind) {
  switch (kind) {
    case InsuranceKind::Full: return Propensity::Full;
    case InsuranceKind::Proportional: return Propensity::Proportional;
    case InsuranceKind::DeductibleLimit: return Propensity::DeductibleLimit;
    case InsuranceKind::IndemnitySchedule: return Propensity::IndemnitySchedule;
    case InsuranceKind::ContingencySchedule: return Propensity::ContingencySchedule;
  }
  return Propensity::Full;
}

namespace {

InsuranceKind insurance_kind(Propensity p) {
  switch (p) {
    case Propensity::Full: return InsuranceKind::Full;
    case Propensity::Proportional: return InsuranceKind::Proportional;
    case Propensity::DeductibleLimit: return InsuranceKind::DeductibleLimit;
    case Propensity::IndemnitySchedule: return InsuranceKind::IndemnitySchedule;
    case Propensity::ContingencySchedule:
    case Propensity::Hedging: break;
  }
  return InsuranceKind::ContingencySchedule;
}

constexpr const char* kNotAProof = "holds_on_budget is not a proof: only the searched instances were checked";
constexpr const char* kContinuity = "continuity of the preference model is assumed, not checked";
constexpr const char* kTolerance = "float evaluators are compared with tolerance 1e-9";

// ---------------------------------------------------------------------------
// Exact checks. A Check splits a property into its premise (which generated
// candidates satisfy by construction) and the violation test, which returns
// the two compared quantities (lhs < rhs) on a strict violation.

using Sides = std::pair<std::string, std::string>;

struct Check {
  std::function<bool(const Witness&)> premise;
  std::function<std::optional<Sides>(const Witness&)> violation;
  /// Recomputes derived payoffs (e.g. the constant E[f]) after shrinking.
  std::function<Witness(Witness)> complete = [](Witness w) { return w; };

  std::optional<Witness> verify(const Witness& candidate) const {
    Witness w = complete(candidate);
    if (!premise(w)) return std::nullopt;
    auto sides = violation(w);
    if (!sides) return std::nullopt;
    w.lhs = std::move(sides->first);
    w.rhs = std::move(sides->second);
    return w;
  }
};

std::string describe(const PreferenceModel& m, const Payoff& p) {
  if (m.complete()) return value(m, p).str();
  return "mean " + to_string(expectation(p)) + ", variance " + to_string(variance(p));
}

// f is strictly worse than g under m.
std::optional<Sides> strictly_worse(const PreferenceModel& m, const Payoff& f, const Payoff& g) {
  if (weakly_prefers(m, f, g)) return std::nullopt;
  return Sides{describe(m, f), describe(m, g)};
}

// f and g are not indifferent under m; lhs is the worse one.
std::optional<Sides> not_indifferent(const PreferenceModel& m, const Payoff& f, const Payoff& g) {
  const bool fg = weakly_prefers(m, f, g);
  const bool gf = weakly_prefers(m, g, f);
  if (fg && gf) return std::nullopt;
  if (fg && !gf) return Sides{describe(m, g), describe(m, f)};
  if (gf && !fg) return Sides{describe(m, f), describe(m, g)};
  return Sides{describe(m, f) + " (incomparable)", describe(m, g)};
}

// rho_B(g, f) < rho_A(g, f).
std::optional<Sides> rho_drops(const PreferenceModel& a, const PreferenceModel& b, const Payoff& g, const Payoff& f) {
  const Number ra = rho(a, g, f);
  const Number rb = rho(b, g, f);
  if (compare(rb, ra) >= 0) return std::nullopt;
  return Sides{rb.str(), ra.str()};
}

bool has(const Witness& w, bool need_w, bool need_f, bool need_g) {
  return (!need_w || w.w) && (!need_f || w.f) && (!need_g || w.g);
}

Rational mean_constant_check(const Payoff& p) { return expectation(p); }

bool in_class(Propensity kind, const Witness& c) {
  if (!equal_in_distribution(*c.f, *c.g)) return false;
  if (kind == Propensity::Hedging) return better_hedge(*c.f, *c.g, *c.w);
  return classify(*c.f, *c.w).contains(insurance_kind(kind));
}

Check weak_ra_check(const PreferenceModel& m) {
  Check c;
  c.complete = [](Witness w) {
    if (w.f) w.g = Payoff::constant(w.f->size(), mean_constant_check(*w.f));
    return w;
  };
  c.premise = [](const Witness& w) { return has(w, false, true, true); };
  c.violation = [&m](const Witness& w) { return strictly_worse(m, *w.g, *w.f); };
  return c;
}

Check strong_ra_check(const PreferenceModel& m) {
  Check c;
  c.premise = [](const Witness& w) { return has(w, false, true, true) && concave_order(*w.f, *w.g); };
  c.violation = [&m](const Witness& w) { return strictly_worse(m, *w.f, *w.g); };
  return c;
}

Check propensity_check(Propensity kind, const PreferenceModel& m) {
  Check c;
  c.premise = [kind](const Witness& w) { return has(w, true, true, true) && in_class(kind, w); };
  c.violation = [&m](const Witness& w) { return strictly_worse(m, *w.w + *w.f, *w.w + *w.g); };
  return c;
}

Check premium_check(const PreferenceModel& m, const PremiumPrinciple& pp) {
  Check c;
  c.premise = [&pp](const Witness& w) {
    return has(w, true, true, true) && *w.f == -*w.w - pp(-*w.w) && equal_in_distribution(*w.f, *w.g);
  };
  c.violation = [&m](const Witness& w) { return strictly_worse(m, *w.w + *w.f, *w.w + *w.g); };
  return c;
}

Check risk_neutral_check(const PreferenceModel& m) {
  Check c = weak_ra_check(m);
  c.violation = [&m](const Witness& w) { return not_indifferent(m, *w.g, *w.f); };
  return c;
}

Check neutral_propensity_check(Propensity kind, const PreferenceModel& m) {
  Check c = propensity_check(kind, m);
  c.violation = [&m](const Witness& w) { return not_indifferent(m, *w.w + *w.f, *w.w + *w.g); };
  return c;
}

Check dependence_check(const PreferenceModel& m) {
  Check c;
  c.premise = [](const Witness& w) { return has(w, true, true, true) && equal_in_distribution(*w.f, *w.g); };
  c.violation = [&m](const Witness& w) { return not_indifferent(m, *w.w + *w.f, *w.w + *w.g); };
  return c;
}

// The induced order agrees with comparing expectations.
Check expected_value_check(const PreferenceModel& m) {
  Check c;
  c.premise = [](const Witness& w) { return has(w, false, true, true); };
  c.violation = [&m](const Witness& w) -> std::optional<Sides> {
    const bool by_model = weakly_prefers(m, *w.f, *w.g);
    const bool by_mean = expectation(*w.f) >= expectation(*w.g);
    if (by_model == by_mean) return std::nullopt;
    return Sides{"model: f " + std::string(by_model ? ">=" : "not >=") + " g",
                 "mean: " + to_string(expectation(*w.f)) + " vs " + to_string(expectation(*w.g))};
  };
  return c;
}

Check compare_weak_check(const PreferenceModel& a, const PreferenceModel& b) {
  Check c;
  c.complete = [](Witness w) {
    if (w.g) w.f = Payoff::constant(w.g->size(), expectation(*w.g));
    return w;
  };
  c.premise = [](const Witness& w) { return has(w, false, true, true); };
  c.violation = [&a, &b](const Witness& w) { return rho_drops(a, b, *w.g, *w.f); };
  return c;
}

Check compare_strong_check(const PreferenceModel& a, const PreferenceModel& b) {
  Check c;
  c.premise = [](const Witness& w) { return has(w, false, true, true) && concave_order(*w.f, *w.g); };
  c.violation = [&a, &b](const Witness& w) { return rho_drops(a, b, *w.g, *w.f); };
  return c;
}

Check compare_propensity_check(Propensity kind, const PreferenceModel& a, const PreferenceModel& b) {
  Check c;
  c.premise = [kind](const Witness& w) { return has(w, true, true, true) && in_class(kind, w); };
  c.violation = [&a, &b](const Witness& w) { return rho_drops(a, b, *w.w + *w.g, *w.w + *w.f); };
  return c;
}

// ---------------------------------------------------------------------------
// Candidate streams. Each trial draws its base instance first, in the same
// order for every check built on the same stream, so e.g. the weak risk
// aversion search and the full-insurance search look at the same payoff h in
// trial t.

using Visit = std::function<bool(const Witness&)>;  // true: stop (violation)

Witness wfg(Payoff w, Payoff f, Payoff g) { return Witness{std::move(w), std::move(f), std::move(g), {}, {}, 0}; }
Witness fg(Payoff f, Payoff g) { return Witness{std::nullopt, std::move(f), std::move(g), {}, {}, 0}; }

// Stream "single": one payoff h.
Payoff draw_single(Rng& rng, const SearchBudget& budget) {
  const std::size_t n = draw_size(rng, budget);
  return draw_payoff(rng, n, budget.value_grid);
}

// The full-insurance instance built from the split of h - E[h]: w + f is the
// constant E[h] while w + g equals h statewise.
Witness full_insurance_instance(const Payoff& h) {
  const Rational mean = expectation(h);
  const auto split = split_zero_mean(h - mean);
  return wfg(split.h, -split.h + mean, -split.h_prime + mean);
}

// Same, with the contract priced by pp: w is shifted so that Pi(-w) = -E[h].
Witness priced_instance(const Payoff& h, const PremiumPrinciple& pp) {
  const Rational mean = expectation(h);
  const auto split = split_zero_mean(h - mean);
  const Rational gamma = (pp(-split.h) + mean) / pp.theta();
  Payoff w = split.h + gamma;
  const Rational price = pp(-w);
  Payoff f = -w - price;
  Payoff g = -(split.h_prime + gamma) - price;
  return wfg(std::move(w), std::move(f), std::move(g));
}

bool visit_all(const std::vector<Payoff>& gs, const Payoff& w, const Payoff& f, const Visit& visit) {
  for (const auto& g : gs)
    if (visit(wfg(w, f, g))) return true;
  return false;
}

// Random contracts of the given class for a random risk w, against every (or
// a sample of) rearrangement(s) of the contract.
bool visit_random_contracts(Rng& rng, std::size_t n, Propensity kind, const SearchBudget& budget, const Visit& visit) {
  Payoff w = draw_payoff(rng, n, budget.value_grid);
  Payoff f = w;
  if (kind == Propensity::Hedging) {
    const bool schedule = draw_from(rng, {Rational(0), Rational(1)}) == 1;
    f = schedule ? draw_contract(rng, InsuranceKind::ContingencySchedule, w, budget.value_grid)
                 : draw_payoff(rng, n, budget.value_grid);
  } else {
    f = draw_contract(rng, insurance_kind(kind), w, budget.value_grid);
  }
  auto gs = rearrangements(rng, f, budget);
  if (kind == Propensity::Hedging) {
    std::erase_if(gs, [&](const Payoff& g) { return !better_hedge(f, g, w); });
  }
  return visit_all(gs, w, f, visit);
}

// Insurance triples splitting one spread step `before -> after`. Equal-valued
// donor and recipient get the perturbation f_eps = before moved by eps, for a
// shrinking sequence of eps.
bool visit_triples(const ChainLink& link, Propensity kind, const Visit& visit) {
  const bool want_pr = kind != Propensity::DeductibleLimit;
  const bool want_dl = kind != Propensity::Proportional;
  auto emit = [&](const InsuranceTriple& t) { return visit(wfg(t.w_tilde, t.f_tilde, t.g_tilde)); };
  if (want_dl && emit(deductible_triple(link.before, link.step))) return true;
  if (want_pr && link.step.delta > 0) {
    if (link.before[link.step.donor] < link.before[link.step.recipient])
      return emit(proportional_triple(link.before, link.step));
    Rational eps = link.step.delta;
    for (int k = 0; k < 8; ++k) {
      eps /= 2;
      const Payoff perturbed = apply(link.before, {link.step.donor, link.step.recipient, eps});
      if (emit(proportional_triple(perturbed, {link.step.donor, link.step.recipient, link.step.delta - eps})))
        return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Driver.

std::string model_label(const PreferenceModel& m) { return m.name(); }

CertificateReport run_check(std::string property, std::string model, const Check& check,
                            const std::function<bool(std::size_t, Rng&, const Visit&)>& search,
                            const SearchBudget& budget, const Execution& exec, std::vector<std::string> assumptions) {
  budget.validate();
  TrialFn trial = [&](std::size_t, Rng& rng) -> std::optional<Witness> {
    std::optional<Witness> hit;
    search(0, rng, [&](const Witness& candidate) {
      if (!check.violation(check.complete(candidate))) return false;
      hit = check.verify(candidate);
      return hit.has_value();
    });
    return hit;
  };
  SearchOutcome outcome = run_trials(budget.trials, budget.seed, trial, exec);

  CertificateReport r;
  r.property = std::move(property);
  r.model = std::move(model);
  r.trials_run = outcome.trials_run;
  r.seed = budget.seed;
  r.budget = budget;
  r.assumptions = std::move(assumptions);
  if (outcome.witness) {
    r.verdict = Verdict::Violated;
    r.witness = shrink(*outcome.witness, [&](const Witness& w) { return check.verify(w); }, budget.value_grid);
  }
  return r;
}

std::vector<std::string> assumptions_for(bool needs_continuity, std::initializer_list<const PreferenceModel*> models) {
  std::vector<std::string> out{kNotAProof};
  if (needs_continuity) out.emplace_back(kContinuity);
  for (const auto* m : models)
    if (!m->exact()) {
      out.emplace_back(kTolerance);
      break;
    }
  return out;
}

void require_comparable(const PreferenceModel& m, const char* op) {
  if (!m.complete() || !m.monotone() || !m.secular())
    throw UnsupportedModel(std::string(op) + " needs monotone, secular models with a total evaluator; '" + m.name() +
                           "' is not");
}

// Searches shared by the absolute and comparative checks.
auto single_search(const SearchBudget& budget) {
  return [&budget](std::size_t, Rng& rng, const Visit& visit) {
    const Payoff h = draw_single(rng, budget);
    return visit(fg(h, h));
  };
}

auto full_insurance_search(const SearchBudget& budget) {
  return [&budget](std::size_t, Rng& rng, const Visit& visit) {
    const Payoff h = draw_single(rng, budget);
    if (visit(full_insurance_instance(h))) return true;
    return visit_random_contracts(rng, h.size(), Propensity::Full, budget, visit);
  };
}

auto chain_pairs_search(const SearchBudget& budget) {
  return [&budget](std::size_t, Rng& rng, const Visit& visit) {
    const Payoff h = draw_single(rng, budget);
    const DrawnChain chain = draw_chain(rng, h, budget.value_grid);
    for (const auto& link : chain.links)
      if (visit(fg(link.before, link.after))) return true;
    return visit(fg(h, chain.end));
  };
}

auto partial_search(Propensity kind, const SearchBudget& budget) {
  return [kind, &budget](std::size_t, Rng& rng, const Visit& visit) {
    const Payoff h = draw_single(rng, budget);
    const DrawnChain chain = draw_chain(rng, h, budget.value_grid);
    for (const auto& link : chain.links)
      if (visit_triples(link, kind, visit)) return true;
    return visit_random_contracts(rng, h.size(), kind, budget, visit);
  };
}

std::function<bool(std::size_t, Rng&, const Visit&)> propensity_search(Propensity kind, const SearchBudget& budget) {
  if (kind == Propensity::Full) return full_insurance_search(budget);
  return partial_search(kind, budget);
}

// Weak-risk-aversion style witnesses carry h as f; the check derives g.
auto weak_search(const SearchBudget& budget) {
  return [&budget](std::size_t, Rng& rng, const Visit& visit) {
    const Payoff h = draw_single(rng, budget);
    Witness w;
    w.f = h;
    return visit(w);
  };
}

auto compare_weak_search(const SearchBudget& budget) {
  return [&budget](std::size_t, Rng& rng, const Visit& visit) {
    const Payoff h = draw_single(rng, budget);
    Witness w;
    w.g = h;
    return visit(w);
  };
}

auto dependence_search(const SearchBudget& budget) {
  return [&budget](std::size_t, Rng& rng, const Visit& visit) {
    const Payoff h = draw_single(rng, budget);
    if (visit(full_insurance_instance(h))) return true;
    const Payoff w = draw_payoff(rng, h.size(), budget.value_grid);
    const Payoff f = draw_payoff(rng, h.size(), budget.value_grid);
    return visit_all(rearrangements(rng, f, budget), w, f, visit);
  };
}

auto pair_search(const SearchBudget& budget) {
  return [&budget](std::size_t, Rng& rng, const Visit& visit) {
    const std::size_t n = draw_size(rng, budget);
    Payoff f = draw_payoff(rng, n, budget.value_grid);
    Payoff g = draw_payoff(rng, n, budget.value_grid);
    return visit(fg(std::move(f), std::move(g)));
  };
}

std::string compare_label(const PreferenceModel& a, const PreferenceModel& b) { return a.name() + "->" + b.name(); }

bool continuity_matters(Propensity kind) { return kind != Propensity::Full; }

}  // namespace

CertificateReport check_weak_risk_aversion(const PreferenceModel& m, const SearchBudget& budget,
                                           const Execution& exec) {
  return run_check("weak_ra", model_label(m), weak_ra_check(m), weak_search(budget), budget, exec,
                   assumptions_for(false, {&m}));
}

CertificateReport check_strong_risk_aversion(const PreferenceModel& m, const SearchBudget& budget,
                                             const Execution& exec) {
  return run_check("strong_ra", model_label(m), strong_ra_check(m), chain_pairs_search(budget), budget, exec,
                   assumptions_for(false, {&m}));
}

CertificateReport check_propensity(Propensity kind, const PreferenceModel& m, const SearchBudget& budget,
                                   const Execution& exec) {
  return run_check("propensity:" + std::string(tag(kind)), model_label(m), propensity_check(kind, m),
                   propensity_search(kind, budget), budget, exec, assumptions_for(continuity_matters(kind), {&m}));
}

CertificateReport check_neutrality(const PreferenceModel& m, const SearchBudget& budget, const Execution& exec) {
  CertificateReport r;
  r.property = "neutrality";
  r.model = model_label(m);
  r.seed = budget.seed;
  r.budget = budget;
  r.assumptions = assumptions_for(true, {&m});

  r.details.push_back(run_check("neutrality:risk", r.model, risk_neutral_check(m), weak_search(budget), budget, exec,
                                assumptions_for(false, {&m})));
  r.details.push_back(run_check("neutrality:full_insurance", r.model, neutral_propensity_check(Propensity::Full, m),
                                full_insurance_search(budget), budget, exec, assumptions_for(false, {&m})));
  r.details.push_back(run_check("neutrality:hedging", r.model, neutral_propensity_check(Propensity::Hedging, m),
                                partial_search(Propensity::Hedging, budget), budget, exec,
                                assumptions_for(true, {&m})));
  r.details.push_back(run_check("neutrality:dependence", r.model, dependence_check(m), dependence_search(budget),
                                budget, exec, assumptions_for(false, {&m})));
  if (m.monotone())
    r.details.push_back(run_check("neutrality:expected_value", r.model, expected_value_check(m), pair_search(budget),
                                  budget, exec, assumptions_for(false, {&m})));

  for (const auto& d : r.details) {
    r.trials_run += d.trials_run;
    if (d.violated() && !r.violated()) {
      r.verdict = Verdict::Violated;
      r.witness = d.witness;
    }
  }
  return r;
}

CertificateReport check_premium_propensity(const PreferenceModel& m, const PremiumPrinciple& pp,
                                           const SearchBudget& budget, const Execution& exec) {
  auto search = [&budget, &pp](std::size_t, Rng& rng, const Visit& visit) {
    const Payoff h = draw_single(rng, budget);
    if (visit(priced_instance(h, pp))) return true;
    const Payoff w = draw_payoff(rng, h.size(), budget.value_grid);
    const Payoff f = -w - pp(-w);
    return visit_all(rearrangements(rng, f, budget), w, f, visit);
  };
  return run_check("premium_propensity:" + pp.name(), model_label(m), premium_check(m, pp), search, budget, exec,
                   assumptions_for(false, {&m}));
}

CertificateReport compare_weak(const PreferenceModel& a, const PreferenceModel& b, const SearchBudget& budget,
                               const Execution& exec) {
  require_comparable(a, "compare_weak");
  require_comparable(b, "compare_weak");
  return run_check("compare_weak", compare_label(a, b), compare_weak_check(a, b), compare_weak_search(budget), budget,
                   exec, assumptions_for(false, {&a, &b}));
}

CertificateReport compare_strong(const PreferenceModel& a, const PreferenceModel& b, const SearchBudget& budget,
                                 const Execution& exec) {
  require_comparable(a, "compare_strong");
  require_comparable(b, "compare_strong");
  return run_check("compare_strong", compare_label(a, b), compare_strong_check(a, b), chain_pairs_search(budget),
                   budget, exec, assumptions_for(false, {&a, &b}));
}

CertificateReport compare_propensity(Propensity kind, const PreferenceModel& a, const PreferenceModel& b,
                                     const SearchBudget& budget, const Execution& exec) {
  require_comparable(a, "compare_propensity");
  require_comparable(b, "compare_propensity");
  return run_check("compare_propensity:" + std::string(tag(kind)), compare_label(a, b),
                   compare_propensity_check(kind, a, b), propensity_search(kind, budget), budget, exec,
                   assumptions_for(continuity_matters(kind), {&a, &b}));
}

bool replay_witness(const CertificateReport& report, const PreferenceModel& m, const PreferenceModel* b,
                    const PremiumPrinciple* pp) {
  if (!report.violated() || !report.witness) return false;
  const std::string& p = report.property;
  auto suffix = [&](std::string_view prefix) { return std::string_view(p).substr(prefix.size()); };
  auto starts = [&](std::string_view prefix) { return std::string_view(p).substr(0, prefix.size()) == prefix; };

  std::optional<Check> check;
  if (p == "weak_ra") check = weak_ra_check(m);
  else if (p == "strong_ra") check = strong_ra_check(m);
  else if (starts("propensity:")) check = propensity_check(parse_propensity(suffix("propensity:")), m);
  else if (starts("premium_propensity:") && pp) check = premium_check(m, *pp);
  else if (p == "neutrality:risk") check = risk_neutral_check(m);
  else if (p == "neutrality:full_insurance") check = neutral_propensity_check(Propensity::Full, m);
  else if (p == "neutrality:hedging") check = neutral_propensity_check(Propensity::Hedging, m);
  else if (p == "neutrality:dependence") check = dependence_check(m);
  else if (p == "neutrality:expected_value") check = expected_value_check(m);
  else if (p == "neutrality") {
    for (const auto& d : report.details)
      if (d.violated()) return replay_witness(d, m, b, pp);
    return false;
  } else if (b && p == "compare_weak") check = compare_weak_check(m, *b);
  else if (b && p == "compare_strong") check = compare_strong_check(m, *b);
  else if (b && starts("compare_propensity:"))
    check = compare_propensity_check(parse_propensity(suffix("compare_propensity:")), m, *b);
  if (!check) return false;
  return check->verify(*report.witness).has_value();
}

namespace zoo {

namespace {
Rational q(long p, long d = 1) { return make_rational(p, d); }
}  // namespace

PreferenceModel eu_concave() {
  return PreferenceModel::expected_utility(PiecewiseLinearFn({{q(-1), q(-1)}, {q(0), q(0)}, {q(1), q(1, 2)}}),
                                           "eu_concave");
}

PreferenceModel eu_convex_kink() {
  return PreferenceModel::expected_utility(PiecewiseLinearFn({{q(-1), q(-1, 2)}, {q(0), q(0)}, {q(1), q(1)}}),
                                           "eu_convex_kink");
}

PreferenceModel dual_convex() { return PreferenceModel::dual(Distortion::power(2), "dual_convex"); }

PreferenceModel dual_nonconvex_dominated() {
  return PreferenceModel::dual(
      Distortion(PiecewiseLinearFn({{q(0), q(0)}, {q(1, 3), q(1, 4)}, {q(2, 3), q(13, 20)}, {q(1), q(1)}})),
      "dual_nonconvex_dominated");
}

PreferenceModel expected_value() { return PreferenceModel::expected_value("expected_value"); }

std::vector<PreferenceModel> all() {
  return {eu_concave(), eu_convex_kink(), dual_convex(), dual_nonconvex_dominated(), expected_value()};
}

}  // namespace zoo

}  // namespace riskprop
