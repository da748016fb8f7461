#include "riskprop/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace riskprop {

void SearchBudget::validate() const {
  if (min_n < 1) throw PreconditionError("budget: min_n must be >= 1");
  if (max_n < min_n) throw PreconditionError("budget: max_n must be >= min_n");
  if (exhaustive_n > max_n) throw PreconditionError("budget: exhaustive_n must not exceed max_n");
  if (max_n > 12) throw PreconditionError("budget: max_n above 12 is not supported");
  if (value_grid.empty()) throw PreconditionError("budget: value_grid must not be empty");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::size_t draw_index(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

}  // namespace

Rng trial_rng(std::uint64_t seed, std::size_t trial) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(0x5eedULL + trial)));
}

SearchOutcome run_trials(std::size_t trials, std::uint64_t seed, const TrialFn& fn, const Execution& exec) {
  if (!exec.parallel) {
    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng = trial_rng(seed, t);
      if (auto w = fn(t, rng)) {
        w->trial = t;
        return {std::move(w), t + 1};
      }
    }
    return {std::nullopt, trials};
  }

  // Trials above the lowest violating index found so far are skipped; the
  // lowest index is the one the serial loop would report.
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::vector<std::optional<Witness>> found(trials);
  std::exception_ptr error;
  const long long count = static_cast<long long>(trials);
#ifdef _OPENMP
  const int threads = exec.threads > 0 ? exec.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
  for (long long i = 0; i < count; ++i) {
    const auto t = static_cast<std::size_t>(i);
    if (t > best.load(std::memory_order_relaxed)) continue;
    try {
      Rng rng = trial_rng(seed, t);
      if (auto w = fn(t, rng)) {
        w->trial = t;
        found[t] = std::move(w);
        std::size_t current = best.load();
        while (t < current && !best.compare_exchange_weak(current, t)) {
        }
      }
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(riskprop_trial_error)
#endif
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  const std::size_t b = best.load();
  if (b == std::numeric_limits<std::size_t>::max()) return {std::nullopt, trials};
  return {std::move(found[b]), b + 1};
}

namespace {

Witness drop_state(const Witness& w, std::size_t s) {
  Witness out = w;
  if (out.w) out.w = out.w->without_state(s);
  if (out.f) out.f = out.f->without_state(s);
  if (out.g) out.g = out.g->without_state(s);
  return out;
}

std::size_t witness_size(const Witness& w) {
  if (w.f) return w.f->size();
  if (w.g) return w.g->size();
  if (w.w) return w.w->size();
  return 0;
}

bool on_grid(const Payoff& p, const std::set<Rational>& grid) {
  for (const auto& x : p.values())
    if (!grid.count(x)) return false;
  return true;
}

std::optional<Witness> halved(const Witness& w, const std::set<Rational>& grid) {
  Witness out = w;
  bool nonzero = false;
  for (auto* slot : {&out.w, &out.f, &out.g}) {
    if (!*slot) continue;
    Payoff half = **slot / Rational(2);
    if (!on_grid(half, grid)) return std::nullopt;
    for (const auto& x : half.values())
      if (x != 0) nonzero = true;
    *slot = std::move(half);
  }
  if (!nonzero) return std::nullopt;
  return out;
}

}  // namespace

Witness shrink(Witness witness, const Verifier& verify, const std::vector<Rational>& grid) {
  const std::size_t trial = witness.trial;
  bool progress = true;
  while (progress) {
    progress = false;
    const std::size_t n = witness_size(witness);
    for (std::size_t s = 0; n > 1 && s < n; ++s) {
      if (auto smaller = verify(drop_state(witness, s))) {
        witness = std::move(*smaller);
        progress = true;
        break;
      }
    }
  }
  const std::set<Rational> grid_set(grid.begin(), grid.end());
  while (auto half = halved(witness, grid_set)) {
    auto verified = verify(*half);
    if (!verified) break;
    witness = std::move(*verified);
  }
  witness.trial = trial;
  return witness;
}

std::size_t draw_size(Rng& rng, const SearchBudget& budget) {
  return std::uniform_int_distribution<std::size_t>(budget.min_n, budget.max_n)(rng);
}

Rational draw_from(Rng& rng, const std::vector<Rational>& values) { return values[draw_index(rng, values.size())]; }

Payoff draw_payoff(Rng& rng, std::size_t n, const std::vector<Rational>& grid) {
  std::vector<Rational> v(n);
  for (auto& x : v) x = draw_from(rng, grid);
  return Payoff(std::move(v));
}

std::vector<std::size_t> draw_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  // Fisher-Yates with our own index draws (std::shuffle's exact sequence is
  // implementation-defined).
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[draw_index(rng, i)]);
  return perm;
}

DrawnChain draw_chain(Rng& rng, const Payoff& f, const std::vector<Rational>& grid) {
  std::set<Rational> magnitudes{Rational(1, 2)};
  for (const auto& x : grid)
    if (x != 0) magnitudes.insert(abs(x));
  const std::vector<Rational> deltas(magnitudes.begin(), magnitudes.end());

  DrawnChain chain{{}, f};
  const std::size_t n = f.size();
  const std::size_t steps = 1 + draw_index(rng, 3);
  Payoff current = f;
  for (std::size_t k = 0; k < steps && n > 1; ++k) {
    std::size_t a = draw_index(rng, n);
    std::size_t b = draw_index(rng, n - 1);
    if (b >= a) ++b;
    if (current[a] > current[b]) std::swap(a, b);
    MpsStep step{a, b, draw_from(rng, deltas)};
    Payoff next = apply(current, step);
    chain.links.push_back({current, step, next});
    current = std::move(next);
  }
  chain.end = current.permuted(draw_permutation(rng, n));
  return chain;
}

Payoff draw_contract(Rng& rng, InsuranceKind kind, const Payoff& w, const std::vector<Rational>& grid) {
  const std::size_t n = w.size();
  ContractParams params;
  params.premium = draw_from(rng, grid);
  switch (kind) {
    case InsuranceKind::Full: break;
    case InsuranceKind::Proportional: {
      static const std::vector<Rational> excesses{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)};
      params.excess = draw_from(rng, excesses);
      break;
    }
    case InsuranceKind::DeductibleLimit:
      params.deductible = draw_from(rng, grid);
      params.limit = abs(draw_from(rng, grid));
      break;
    case InsuranceKind::IndemnitySchedule:
    case InsuranceKind::ContingencySchedule: {
      // Payments sorted along the loss -w: an increasing function of the loss
      // when equal losses share a payment (indemnity), merely comonotone with
      // the loss otherwise (contingency).
      auto payments = draw_payoff(rng, n, grid).sorted();
      auto order = sort_order(-w);
      std::vector<Rational> v(n);
      for (std::size_t k = 0; k < n; ++k) v[order[k]] = payments[k];
      if (kind == InsuranceKind::IndemnitySchedule)
        for (std::size_t k = 1; k < n; ++k)
          if (w[order[k]] == w[order[k - 1]]) v[order[k]] = v[order[k - 1]];
      return Payoff(std::move(v)) - params.premium;
    }
  }
  return make_contract(w, kind, params).payoff;
}

std::vector<Payoff> all_rearrangements(const Payoff& f) {
  auto values = f.sorted();
  std::vector<Payoff> out;
  do {
    out.emplace_back(values);
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

std::vector<Payoff> rearrangements(Rng& rng, const Payoff& f, const SearchBudget& budget) {
  if (f.size() <= budget.exhaustive_n) return all_rearrangements(f);
  std::vector<Payoff> out;
  out.reserve(budget.sampled_permutations);
  for (std::size_t k = 0; k < budget.sampled_permutations; ++k) out.push_back(f.permuted(draw_permutation(rng, f.size())));
  return out;
}

}  // namespace riskprop
