#include "oracles.hpp"
#include "riskprop/insurance.hpp"
#include "riskprop/orders.hpp"

#include <doctest.h>

using namespace riskprop;

namespace {

std::set<InsuranceKind> kinds_of(const Payoff& f, const Payoff& w) {
  const auto k = classify(f, w).kinds();
  return {k.begin(), k.end()};
}

const std::set<InsuranceKind> kEverything(std::begin(kAllInsuranceKinds), std::end(kAllInsuranceKinds));

// Rebuilds f from each fitted parameter set.
void check_fits_reproduce(const Payoff& f, const Payoff& w) {
  const auto c = classify(f, w);
  if (c.full) {
    ContractParams p;
    p.premium = c.full->premium;
    CHECK(make_contract(w, InsuranceKind::Full, p).payoff == f);
  }
  if (c.proportional) {
    ContractParams p;
    p.excess = c.proportional->excess;
    p.premium = c.proportional->premium;
    CHECK(make_contract(w, InsuranceKind::Proportional, p).payoff == f);
  }
  if (c.deductible_limit) {
    ContractParams p;
    p.deductible = c.deductible_limit->deductible;
    p.limit = c.deductible_limit->limit;
    p.premium = c.deductible_limit->premium;
    CHECK(make_contract(w, InsuranceKind::DeductibleLimit, p).payoff == f);
  }
  if (c.indemnity_schedule) {
    for (std::size_t s = 0; s < f.size(); ++s) {
      bool found = false;
      for (const auto& [loss, pay] : c.indemnity_schedule->schedule)
        if (loss == -w[s]) {
          found = true;
          CHECK(pay == f[s]);
        }
      CHECK(found);
    }
  }
}

Rational clamp_payment(const Rational& loss, const Rational& deductible, const Rational& limit) {
  Rational x = loss - deductible;
  if (x < 0) x = 0;
  return x < limit ? x : limit;
}

// Brute-force search for deductible-limit parameters on a half-integer grid.
bool dl_by_search(const Payoff& f, const Payoff& w) {
  for (long d2 = -10; d2 <= 10; ++d2)
    for (long l2 = 0; l2 <= 10; ++l2) {
      const Rational deductible = riskprop::make_rational(d2, 2), limit = riskprop::make_rational(l2, 2);
      // The premium is forced by any one state.
      const Rational premium = clamp_payment(-w[0], deductible, limit) - f[0];
      bool ok = true;
      for (std::size_t s = 0; s < f.size() && ok; ++s) ok = clamp_payment(-w[s], deductible, limit) - premium == f[s];
      if (ok) return true;
    }
  return false;
}

std::size_t distinct(const Payoff& p) {
  auto v = p.sorted();
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

}  // namespace

TEST_CASE("make_contract examples") {
  ContractParams p;
  p.premium = -1;
  CHECK(make_contract(Payoff::of({0, 1, 1}), InsuranceKind::Full, p).payoff == Payoff::of({1, 0, 0}));

  p = {};
  p.excess = Rational(1, 2);
  CHECK(make_contract(Payoff::of({0, 2}), InsuranceKind::Proportional, p).payoff == Payoff::of({0, -1}));

  p = {};
  p.deductible = -3;
  p.limit = 2;
  p.premium = 1;
  CHECK(make_contract(Payoff::of({-1, 3}), InsuranceKind::DeductibleLimit, p).payoff == Payoff::of({1, -1}));
}

TEST_CASE("make_contract rejects out-of-range parameters") {
  const Payoff w = Payoff::of({0, 1});
  ContractParams p;
  p.excess = 1;
  CHECK_THROWS_AS(make_contract(w, InsuranceKind::Proportional, p), PreconditionError);
  p.excess = -1;
  CHECK_THROWS_AS(make_contract(w, InsuranceKind::Proportional, p), PreconditionError);
  p = {};
  p.limit = -1;
  CHECK_THROWS_AS(make_contract(w, InsuranceKind::DeductibleLimit, p), PreconditionError);
  p = {};
  CHECK_THROWS_AS(make_contract(w, InsuranceKind::IndemnitySchedule, p), PreconditionError);
  p.schedule = PiecewiseLinearFn({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
  CHECK_THROWS_AS(make_contract(w, InsuranceKind::IndemnitySchedule, p), PreconditionError);
  p = {};
  CHECK_THROWS_AS(make_contract(w, InsuranceKind::ContingencySchedule, p), PreconditionError);
  p.payoff = Payoff::of({0, 1});
  CHECK_THROWS_AS(make_contract(w, InsuranceKind::ContingencySchedule, p), PreconditionError);
  p.payoff = Payoff::of({1, 0});
  CHECK(make_contract(w, InsuranceKind::ContingencySchedule, p).payoff == Payoff::of({1, 0}));
  p.payoff = Payoff::of({1, 0, 0});
  CHECK_THROWS_AS(make_contract(w, InsuranceKind::ContingencySchedule, p), LengthMismatch);
}

TEST_CASE("indemnity schedules are evaluated on the loss") {
  ContractParams p;
  p.schedule = PiecewiseLinearFn({{Rational(0), Rational(0)}, {Rational(2), Rational(1)}});
  p.premium = Rational(1, 2);
  const auto c = make_contract(Payoff::of({0, -2, -4}), InsuranceKind::IndemnitySchedule, p);
  CHECK(c.payoff == Payoff{Rational(-1, 2), Rational(1, 2), Rational(3, 2)});
  CHECK(classify(c.payoff, Payoff::of({0, -2, -4})).contains(InsuranceKind::IndemnitySchedule));
}

TEST_CASE("classify examples") {
  const Payoff w = Payoff::of({0, 1, 1});
  const auto rain = classify(Payoff::of({1, 0, 0}), w);
  const auto rain_kinds = rain.kinds();
  CHECK(std::set<InsuranceKind>(rain_kinds.begin(), rain_kinds.end()) == kEverything);
  REQUIRE(rain.full);
  CHECK(rain.full->premium == -1);
  REQUIRE(rain.deductible_limit);
  check_fits_reproduce(Payoff::of({1, 0, 0}), w);

  CHECK(kinds_of(Payoff::of({0, 1, 0}), w).empty());

  const Payoff c = Payoff::of({2, 2, 2});
  CHECK(kinds_of(c, w) ==
        std::set{InsuranceKind::DeductibleLimit, InsuranceKind::IndemnitySchedule, InsuranceKind::ContingencySchedule});
  const auto dl = classify(c, w).deductible_limit;
  REQUIRE(dl);
  CHECK(dl->limit == 0);
  CHECK(kinds_of(c, Payoff::of({5, 5, 5})) == kEverything);
  const auto pr = classify(c, Payoff::of({5, 5, 5})).proportional;
  REQUIRE(pr);
  CHECK(pr->excess == 0);

  CHECK_THROWS_AS(classify(Payoff::of({1}), w), LengthMismatch);
}

TEST_CASE("deductible-limit fit with a negative deductible") {
  const auto fit = classify(Payoff::of({1, -1}), Payoff::of({-1, 3})).deductible_limit;
  REQUIRE(fit);
  CHECK(fit->deductible == -3);
  CHECK(fit->limit == 2);
  CHECK(fit->premium == 1);
}

TEST_CASE("classify agrees with pairwise oracles and its fits reproduce the payoff (exhaustive, n <= 4)") {
  const std::vector<Rational> grid{Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2)};
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto all = oracle::all_payoffs(n, grid);
    // n = 4 has 390625 pairs; a fixed stride keeps the run short.
    const std::size_t stride = n == 4 ? 7 : 1;
    std::size_t k = 0;
    for (const auto& w : all)
      for (const auto& f : all) {
        if (k++ % stride) continue;
        const auto c = classify(f, w);
        CHECK(c.full.has_value() == (w + f).is_constant());
        CHECK(c.indemnity_schedule.has_value() == oracle::indemnity_schedule(f, w));
        CHECK(c.contingency_schedule == oracle::counter_monotone(f, w));
        // Inclusion chain between the classes.
        if (c.proportional || c.deductible_limit) CHECK(c.indemnity_schedule);
        if (c.indemnity_schedule) CHECK(c.contingency_schedule);
        // Full insurance is both proportional and deductible-limit.
        if (c.full) {
          CHECK(c.proportional);
          CHECK(c.deductible_limit);
        }
        // The converse needs at least four distinct wealth levels.
        if (c.proportional && c.deductible_limit && distinct(w) >= 4) CHECK(c.full);
        check_fits_reproduce(f, w);
      }
  }
}

TEST_CASE("proportional and deductible-limit together need not be full insurance with few wealth levels") {
  // Two levels: f = -w/2 is proportional (excess 1/2) and deductible-limit
  // (deductible -2, limit 1, premium 1), but w + f is not constant.
  auto c = classify(Payoff::of({0, -1}), Payoff::of({0, 2}));
  CHECK(c.proportional);
  CHECK(c.deductible_limit);
  CHECK_FALSE(c.full);
  // Three levels: same phenomenon with slope 1/2 on both segments.
  c = classify(Payoff{Rational(0), Rational(-1, 2), Rational(-1)}, Payoff::of({0, 1, 2}));
  CHECK(c.proportional);
  CHECK(c.deductible_limit);
  CHECK_FALSE(c.full);
}

TEST_CASE("deductible-limit membership agrees with a parameter search") {
  const std::vector<Rational> grid{Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2)};
  std::mt19937_64 rng(79);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto all = oracle::all_payoffs(n, grid);
    for (int t = 0; t < 400; ++t) {
      const Payoff& w = all[gen::size(rng, 0, all.size() - 1)];
      const Payoff& f = all[gen::size(rng, 0, all.size() - 1)];
      CHECK(classify(f, w).deductible_limit.has_value() == dl_by_search(f, w));
    }
  }
}

TEST_CASE("contracts classify into their declared kind") {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = gen::size(rng, 1, 7);
    const Payoff w = gen::payoff(rng, n);
    ContractParams p;
    p.premium = gen::rational(rng);
    p.excess = riskprop::make_rational(static_cast<long>(gen::size(rng, 0, 3)), 4);
    p.deductible = gen::rational(rng);
    p.limit = abs(gen::rational(rng));
    p.schedule = PiecewiseLinearFn({{Rational(-1), Rational(0)}, {Rational(0), Rational(0)}, {Rational(3), Rational(2)}});
    p.payoff = [&] {
      auto vals = gen::payoff(rng, n).sorted();
      const auto order = sort_order(-w);
      std::vector<Rational> v(n);
      for (std::size_t k = 0; k < n; ++k) v[order[k]] = vals[k];
      return Payoff(std::move(v));
    }();
    for (auto kind : kAllInsuranceKinds) {
      const auto c = make_contract(w, kind, p);
      CHECK(classify(c.payoff, w).contains(kind));
    }
  }
}

TEST_CASE("classification is invariant under constant wealth shifts") {
  std::mt19937_64 rng(89);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = gen::size(rng, 1, 6);
    const Payoff w = gen::small_payoff(rng, n);
    const Payoff f = t % 2 ? gen::small_payoff(rng, n) : -w * Rational(1, 2) + Rational(1);
    for (const Rational& w0 : {Rational(-3), Rational(5, 2), gen::rational(rng)})
      CHECK(classify(f, w).kinds() == classify(f, w + w0).kinds());
  }
}

TEST_CASE("premium principles") {
  const auto fair = PremiumPrinciple::fair();
  const Payoff w = Payoff::of({0, 2});
  // The fair price of the full indemnity -w is the expected loss E[-w].
  CHECK(premium(fair, -w) == -1);
  ContractParams p;
  p.premium = premium(fair, -w);
  CHECK(make_contract(w, InsuranceKind::Full, p).payoff == Payoff::of({1, -1}));
  CHECK(-w - premium(fair, -w) == Payoff::of({1, -1}));

  const auto loaded = PremiumPrinciple::expected_value_loading(Rational(1, 5));
  CHECK(premium(loaded, Payoff::of({1, 1})) == Rational(6, 5));
  CHECK(loaded.theta() == Rational(6, 5));
  CHECK(loaded.name() == "loading:1/5");
  CHECK_THROWS_AS(PremiumPrinciple::expected_value_loading(Rational(-1)), PreconditionError);
}

TEST_CASE("premium principles satisfy the translation axiom") {
  std::mt19937_64 rng(97);
  const std::vector<PremiumPrinciple> principles{PremiumPrinciple::fair(),
                                                 PremiumPrinciple::expected_value_loading(Rational(1, 5)),
                                                 PremiumPrinciple::expected_value_loading(Rational(-1, 3))};
  for (const auto& pp : principles)
    for (int t = 0; t < 100; ++t) {
      const Payoff h = gen::payoff(rng, gen::size(rng, 1, 8));
      const Rational gamma = gen::rational(rng);
      CHECK(pp(h + gamma) == pp(h) + pp.theta() * gamma);
    }
}

TEST_CASE("insurance kind tags round trip") {
  for (auto kind : kAllInsuranceKinds) CHECK(parse_insurance_kind(tag(kind)) == kind);
  CHECK_THROWS_AS(parse_insurance_kind("xx"), ParseError);
}
