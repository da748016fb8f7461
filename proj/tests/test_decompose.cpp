#include "oracles.hpp"
#include "riskprop/decompose.hpp"
#include "riskprop/insurance.hpp"

#include <doctest.h>

using namespace riskprop;

namespace {

void check_split(const Payoff& f, const ZeroMeanSplit& s) {
  CHECK(s.h - s.h_prime == f);
  CHECK(s.h.sorted() == s.h_prime.sorted());
  for (std::size_t k = 0; k < f.size(); ++k) {
    CHECK(f.min() <= s.h[k]);
    CHECK(s.h[k] <= f.max());
    CHECK(f.min() <= s.h_prime[k]);
    CHECK(s.h_prime[k] <= f.max());
  }
}

void check_triple(const Payoff& f, const MpsStep& step, const InsuranceTriple& t, InsuranceKind kind) {
  const Payoff g = apply(f, step);
  CHECK(t.w_tilde + t.f_tilde == f);
  CHECK(t.w_tilde + t.g_tilde == g);
  CHECK(t.spread() == g);
  CHECK(t.f_tilde.sorted() == t.g_tilde.sorted());
  CHECK(classify(t.f_tilde, t.w_tilde).contains(kind));
}

}  // namespace

TEST_CASE("split_zero_mean examples") {
  auto s = split_zero_mean(Payoff::of({2, -1, -1}));
  CHECK(s.h == Payoff::of({2, 1, 0}));
  CHECK(s.h_prime == Payoff::of({0, 2, 1}));

  s = split_zero_mean(Payoff::of({1, -1}));
  CHECK(s.h == Payoff::of({1, 0}));
  CHECK(s.h_prime == Payoff::of({0, 1}));

  s = split_zero_mean(Payoff::of({0, 0, 0}));
  CHECK(s.h == Payoff::of({0, 0, 0}));
  CHECK(s.h_prime == Payoff::of({0, 0, 0}));

  CHECK_THROWS_AS(split_zero_mean(Payoff::of({1, 0})), PreconditionError);
}

TEST_CASE("split_zero_mean invariants on random zero-mean payoffs") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 500; ++t) {
    const Payoff f = t % 2 ? gen::zero_mean(rng, gen::size(rng, 1, 12)) : [&] {
      const Payoff p = gen::small_payoff(rng, gen::size(rng, 1, 12));
      return p - oracle::mean(p);
    }();
    check_split(f, split_zero_mean(f));
  }
}

TEST_CASE("full insurance built from the split is equally distributed and reproduces the payoff") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 200; ++t) {
    const Payoff h = gen::payoff(rng, gen::size(rng, 1, 10));
    const Rational c = oracle::mean(h);
    const auto s = split_zero_mean(h - c);
    const Payoff f = -s.h + c, g = -s.h_prime + c;
    CHECK(f.sorted() == g.sorted());
    CHECK((s.h + f).is_constant());
    CHECK(s.h + g == h);
    CHECK(classify(f, s.h).contains(InsuranceKind::Full));
  }
}

TEST_CASE("mps_chain examples") {
  auto chain = mps_chain(Payoff::of({1, 1}), Payoff::of({0, 2}));
  REQUIRE(chain.spread_count() == 1);
  CHECK(std::get<MpsStep>(chain.steps.front()) == MpsStep{0, 1, Rational(1)});
  CHECK(chain.replay(Payoff::of({1, 1})) == Payoff::of({0, 2}));

  CHECK(mps_chain(Payoff::of({3, 1}), Payoff::of({3, 1})).steps.empty());

  // (1,1,1) -> (0,1,2) needs a single spread from the first state to the
  // third; the closing permutation is the identity.
  const Payoff f = Payoff::of({1, 1, 1}), g = Payoff::of({0, 1, 2});
  chain = mps_chain(f, g);
  CHECK(chain.spread_count() == 1);
  CHECK(std::get<MpsStep>(chain.steps.front()) == MpsStep{0, 2, Rational(1)});
  CHECK(std::get<StatePermutation>(chain.steps.back()).is_identity());
  CHECK(chain.replay(f) == g);

  CHECK_THROWS_AS(mps_chain(Payoff::of({0, 2}), Payoff::of({1, 1})), PreconditionError);
}

namespace {

void check_chain(const Payoff& f, const Payoff& g) {
  const auto chain = mps_chain(f, g);
  CHECK(chain.spread_count() <= f.size() - 1);
  Payoff h = f;
  for (const auto& e : chain.steps) {
    if (const auto* step = std::get_if<MpsStep>(&e)) {
      const Payoff next = apply(h, *step);
      const auto seen = recognize_mps(h, next);
      REQUIRE(seen.has_value());
      CHECK(apply(h, *seen) == next);
      h = next;
    } else {
      h = h.permuted(std::get<StatePermutation>(e).perm);
    }
  }
  CHECK(h == g);
  CHECK(chain.replay(f) == g);
}

}  // namespace

TEST_CASE("mps_chain replays random forward spread sequences") {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = gen::size(rng, 1, 8);
    Payoff g = gen::payoff(rng, n);
    const Payoff f = g;
    const std::size_t steps = gen::size(rng, 0, 5);
    for (std::size_t k = 0; k < steps && n > 1; ++k) {
      std::size_t a = gen::size(rng, 0, n - 1), b = gen::size(rng, 0, n - 2);
      if (b >= a) ++b;
      if (g[a] > g[b]) std::swap(a, b);
      g = apply(g, {a, b, riskprop::make_rational(static_cast<long>(gen::size(rng, 0, 4)), 2)});
    }
    g = gen::shuffled(rng, g);
    check_chain(f, g);
  }
}

TEST_CASE("mps_chain replays every concave-ordered pair on a small grid (n <= 4)") {
  const std::vector<Rational> grid{Rational(-1), Rational(0), Rational(1), Rational(2)};
  int pairs = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto all = oracle::all_payoffs(n, grid);
    for (const auto& f : all)
      for (const auto& g : all)
        if (oracle::concave_order(f, g)) {
          ++pairs;
          check_chain(f, g);
        }
  }
  CHECK(pairs > 100);
}

TEST_CASE("mps_chain on random concave-ordered pairs up to n = 8") {
  std::mt19937_64 rng(71);
  int pairs = 0;
  for (int t = 0; t < 3000 && pairs < 300; ++t) {
    const std::size_t n = gen::size(rng, 2, 8);
    const Payoff f = gen::small_payoff(rng, n, 3);
    const Payoff g = gen::small_payoff(rng, n, 3);
    if (!oracle::concave_order(f, g)) continue;
    ++pairs;
    check_chain(f, g);
  }
  CHECK(pairs > 30);
}

TEST_CASE("proportional_triple examples") {
  auto t = proportional_triple(Payoff::of({0, 2, 5}), {0, 1, Rational(1)});
  CHECK(t.scale == -3);
  CHECK(t.f_tilde == Payoff{Rational(0), Rational(-1), Rational(-5, 2)});
  CHECK(t.w_tilde == Payoff{Rational(0), Rational(3), Rational(15, 2)});
  CHECK(t.g_tilde == Payoff{Rational(-1), Rational(0), Rational(-5, 2)});
  CHECK(t.excess == Rational(2, 3));
  CHECK(t.spread() == Payoff::of({-1, 3, 5}));

  t = proportional_triple(Payoff::of({0, 4}), {0, 1, Rational(1)});
  CHECK(t.scale == -5);
  CHECK(t.f_tilde == Payoff::of({0, -1}));
  CHECK(t.w_tilde == Payoff::of({0, 5}));
  CHECK(t.excess == Rational(4, 5));
  CHECK(t.spread() == Payoff::of({-1, 5}));

  CHECK_THROWS_AS(proportional_triple(Payoff::of({1, 1}), {0, 1, Rational(1)}), PreconditionError);
  CHECK_THROWS_AS(proportional_triple(Payoff::of({0, 1}), {0, 1, Rational(0)}), PreconditionError);
}

TEST_CASE("deductible_triple examples") {
  // A transfer of 2 (half-spread 1) between the two states of (0,2).
  auto t = deductible_triple(Payoff::of({0, 2}), {0, 1, Rational(2)});
  CHECK(t.f_tilde == Payoff::of({1, -1}));
  CHECK(t.g_tilde == Payoff::of({-1, 1}));
  CHECK(t.w_tilde == Payoff::of({-1, 3}));
  CHECK(t.deductible == -3);
  CHECK(t.limit == 2);
  CHECK(t.premium == 1);
  CHECK(t.spread() == Payoff::of({-2, 4}));
  const auto fit = classify(t.f_tilde, t.w_tilde).deductible_limit;
  REQUIRE(fit);
  CHECK(fit->deductible == -3);
  CHECK(fit->limit == 2);
  CHECK(fit->premium == 1);

  t = deductible_triple(Payoff::of({0, 2}), {0, 1, Rational(0)});
  CHECK(t.f_tilde == Payoff::of({0, 0}));
  CHECK(t.g_tilde == Payoff::of({0, 0}));
  CHECK(t.w_tilde == Payoff::of({0, 2}));

  // The middle state lies strictly between donor and recipient.
  const Payoff f = Payoff::of({0, 1, 3});
  t = deductible_triple(f, {0, 2, Rational(2)});
  CHECK(t.f_tilde == Payoff::of({1, 1, -1}));
  CHECK(t.g_tilde == Payoff::of({-1, 1, 1}));
  CHECK(t.w_tilde == Payoff::of({-1, 0, 4}));
  check_triple(f, {0, 2, Rational(2)}, t, InsuranceKind::DeductibleLimit);
}

TEST_CASE("triple identities and memberships on random spread steps") {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = gen::size(rng, 2, 8);
    const Payoff f = t % 2 ? gen::payoff(rng, n) : gen::small_payoff(rng, n);
    std::size_t a = gen::size(rng, 0, n - 1), b = gen::size(rng, 0, n - 2);
    if (b >= a) ++b;
    if (f[a] > f[b]) std::swap(a, b);
    const MpsStep step{a, b, riskprop::make_rational(static_cast<long>(gen::size(rng, 0, 8)), 3)};
    check_triple(f, step, deductible_triple(f, step), InsuranceKind::DeductibleLimit);
    if (step.delta > 0 && f[a] < f[b]) {
      const auto pt = proportional_triple(f, step);
      check_triple(f, step, pt, InsuranceKind::Proportional);
      CHECK(pt.excess > 0);
      CHECK(pt.excess < 1);
    }
  }
}
