#include "oracles.hpp"
#include "riskprop/space.hpp"

#include <doctest.h>

using namespace riskprop;

TEST_CASE("expectation examples") {
  CHECK(expectation(Payoff::of({1, 1, 1})) == 1);
  // The viticulturist's wealth with the drought insurance, w + g = (0,2,1),
  // has the same lottery as the constant 1.
  CHECK(expectation(Payoff::of({0, 2, 1})) == 1);
  CHECK(expectation(Payoff::of({2, -1, -1})) == 0);
}

TEST_CASE("variance is the mean squared deviation") {
  CHECK(variance(Payoff::of({0, 2})) == 1);
  CHECK(variance(Payoff::of({3, 3, 3})) == 0);
  CHECK(variance(Payoff::of({0, 4})) == 4);
}

TEST_CASE("payoffs reject empty state spaces and mixed lengths") {
  CHECK_THROWS_AS(Payoff(std::vector<Rational>{}), PreconditionError);
  CHECK_THROWS_AS(Payoff::of({1, 2}) + Payoff::of({1}), LengthMismatch);
  CHECK_THROWS_AS(equal_in_distribution(Payoff::of({1, 2}), Payoff::of({1})), LengthMismatch);
}

TEST_CASE("arithmetic preserves length and is exact") {
  const Payoff f{Rational(1, 3), Rational(-1, 2)};
  const Payoff g = f * Rational(6) + Rational(1);
  CHECK(g == Payoff::of({3, -2}));
  CHECK((g - f).size() == 2);
  CHECK((-f)[0] == Rational(-1, 3));
  CHECK((f / Rational(2))[1] == Rational(-1, 4));
}

TEST_CASE("equal_in_distribution examples") {
  // Rain insurance (1,0,0) and drought insurance (0,1,0).
  CHECK(equal_in_distribution(Payoff::of({1, 0, 0}), Payoff::of({0, 1, 0})));
  CHECK(equal_in_distribution(Payoff::of({1, 2}), Payoff::of({1, 2})));
  CHECK_FALSE(equal_in_distribution(Payoff::of({1, 1, 0}), Payoff::of({1, 0, 0})));
}

TEST_CASE("equal_in_distribution is an equivalence relation") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = gen::size(rng, 1, 6);
    const Payoff f = gen::small_payoff(rng, n);
    const Payoff g = gen::shuffled(rng, f);
    const Payoff h = gen::shuffled(rng, g);
    const Payoff other = gen::small_payoff(rng, n);
    CHECK(equal_in_distribution(f, f));
    CHECK(equal_in_distribution(f, g) == equal_in_distribution(g, f));
    CHECK(equal_in_distribution(f, h));
    CHECK(equal_in_distribution(f, other) == equal_in_distribution(other, f));
    if (equal_in_distribution(f, other)) CHECK(equal_in_distribution(h, other));
  }
}

TEST_CASE("sort order is stable") {
  const auto order = sort_order(Payoff::of({2, 1, 2, 1, 0}));
  CHECK(order == std::vector<std::size_t>{4, 1, 3, 0, 2});
}

TEST_CASE("lottery atoms are increasing with probabilities summing to one") {
  const auto lot = lottery(Payoff::of({3, 1, 3, 3}));
  REQUIRE(lot.atoms.size() == 2);
  CHECK(lot.atoms[0].value == 1);
  CHECK(lot.atoms[0].probability == Rational(1, 4));
  CHECK(lot.atoms[1].value == 3);
  CHECK(lot.atoms[1].probability == Rational(3, 4));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto l = lottery(gen::small_payoff(rng, gen::size(rng, 1, 8)));
    Rational total = 0;
    for (std::size_t k = 0; k < l.atoms.size(); ++k) {
      CHECK(l.atoms[k].probability > 0);
      if (k > 0) CHECK(l.atoms[k - 1].value < l.atoms[k].value);
      total += l.atoms[k].probability;
    }
    CHECK(total == 1);
  }
}

TEST_CASE("quantile tables validate their pieces") {
  CHECK_THROWS_AS(QuantileTable({}), PreconditionError);
  CHECK_THROWS_AS(QuantileTable({{Rational(1, 2), Rational(0)}}), PreconditionError);
  CHECK_THROWS_AS(QuantileTable({{Rational(1, 2), Rational(1)}, {Rational(1), Rational(0)}}), PreconditionError);
  const QuantileTable q({{Rational(1, 4), Rational(0)}, {Rational(1), Rational(4)}});
  CHECK(q.at(Rational(1, 4)) == 0);
  CHECK(q.at(Rational(1, 2)) == 4);
  CHECK(q.integral_to(Rational(1, 2)) == 1);
  CHECK(q.integral() == 3);
}

TEST_CASE("dyadic_condition examples") {
  CHECK(dyadic_condition(QuantileTable::constant(Rational(3)), 2) == Payoff::of({3, 3, 3, 3}));
  CHECK(dyadic_condition(QuantileTable({{Rational(1, 2), Rational(0)}, {Rational(1), Rational(1)}}), 1) ==
        Payoff::of({0, 1}));
  CHECK(dyadic_condition(QuantileTable({{Rational(1, 4), Rational(0)}, {Rational(1), Rational(4)}}), 1) ==
        Payoff::of({2, 4}));
  CHECK(dyadic_condition(QuantileTable::constant(Rational(5)), 0) == Payoff::of({5}));
}

namespace {

QuantileTable random_table(std::mt19937_64& rng) {
  const std::size_t pieces = gen::size(rng, 1, 5);
  std::set<Rational> cuts;
  while (cuts.size() < pieces - 1) {
    Rational c(static_cast<long>(gen::size(rng, 1, 20)), 21);
    c.canonicalize();
    cuts.insert(c);
  }
  cuts.insert(Rational(1));
  std::vector<Rational> values;
  for (std::size_t k = 0; k < pieces; ++k) values.push_back(gen::rational(rng));
  std::sort(values.begin(), values.end());
  std::vector<QuantileTable::Piece> out;
  std::size_t k = 0;
  for (const auto& c : cuts) out.push_back({c, values[k++]});
  return QuantileTable(std::move(out));
}

}  // namespace

TEST_CASE("dyadic conditioning preserves the mean at every level") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const auto q = random_table(rng);
    for (unsigned level = 0; level <= 6; ++level) CHECK(oracle::mean(dyadic_condition(q, level)) == q.integral());
  }
}

TEST_CASE("dyadic levels nest: pairwise averages of level n+1 give level n") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 100; ++t) {
    const auto q = random_table(rng);
    for (unsigned level = 0; level < 6; ++level) {
      const Payoff fine = dyadic_condition(q, level + 1);
      const Payoff coarse = dyadic_condition(q, level);
      for (std::size_t k = 0; k < coarse.size(); ++k) CHECK((fine[2 * k] + fine[2 * k + 1]) / 2 == coarse[k]);
    }
  }
}

TEST_CASE("a payoff's quantile table reproduces it at the finest dyadic level") {
  const Payoff f = Payoff::of({5, -1, 3, 0});
  CHECK(dyadic_condition(QuantileTable::from_payoff(f), 2) == Payoff::of({-1, 0, 3, 5}));
}
