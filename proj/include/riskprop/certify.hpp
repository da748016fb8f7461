#pragma once

// Certification engine: searches concrete instances for violations of the
// absolute, neutral, comparative and priced insurance attitudes of a
// preference model. "holds_on_budget" means no violation was found within the
// budget; it is not a proof.

#include "riskprop/insurance.hpp"
#include "riskprop/preferences.hpp"
#include "riskprop/search.hpp"

#include <optional>
#include <string>
#include <vector>

namespace riskprop {

enum class Verdict { HoldsOnBudget, Violated };

std::string_view tag(Verdict v);

/// Propensity properties: the five insurance classes plus hedging.
enum class Propensity { Full, Proportional, DeductibleLimit, IndemnitySchedule, ContingencySchedule, Hedging };

inline constexpr Propensity kAllPropensities[] = {Propensity::Full,
                                                  Propensity::Proportional,
                                                  Propensity::DeductibleLimit,
                                                  Propensity::IndemnitySchedule,
                                                  Propensity::ContingencySchedule,
                                                  Propensity::Hedging};

std::string_view tag(Propensity p);
Propensity parse_propensity(std::string_view tag);
Propensity propensity_for(InsuranceKind kind);

struct CertificateReport {
  std::string property;
  /// Model name, or "A->B" for comparative checks.
  std::string model;
  Verdict verdict = Verdict::HoldsOnBudget;
  std::optional<Witness> witness;
  std::size_t trials_run = 0;
  std::uint64_t seed = 0;
  SearchBudget budget;
  std::vector<std::string> assumptions;
  /// Sub-verdicts (neutrality).
  std::vector<CertificateReport> details;

  bool violated() const noexcept { return verdict == Verdict::Violated; }
};

CertificateReport check_weak_risk_aversion(const PreferenceModel& m, const SearchBudget& budget,
                                           const Execution& exec = {});
CertificateReport check_strong_risk_aversion(const PreferenceModel& m, const SearchBudget& budget,
                                             const Execution& exec = {});
CertificateReport check_propensity(Propensity kind, const PreferenceModel& m, const SearchBudget& budget,
                                   const Execution& exec = {});
/// Sub-verdicts in `details`: risk, full_insurance, hedging, dependence and
/// (for monotone models) expected_value ordering.
CertificateReport check_neutrality(const PreferenceModel& m, const SearchBudget& budget, const Execution& exec = {});
CertificateReport check_premium_propensity(const PreferenceModel& m, const PremiumPrinciple& pp,
                                           const SearchBudget& budget, const Execution& exec = {});

/// B is (weakly / strongly / more propense) than A: violations are instances
/// with rho_B < rho_A. Both models must be monotone and secular.
CertificateReport compare_weak(const PreferenceModel& a, const PreferenceModel& b, const SearchBudget& budget,
                               const Execution& exec = {});
CertificateReport compare_strong(const PreferenceModel& a, const PreferenceModel& b, const SearchBudget& budget,
                                 const Execution& exec = {});
CertificateReport compare_propensity(Propensity kind, const PreferenceModel& a, const PreferenceModel& b,
                                     const SearchBudget& budget, const Execution& exec = {});

/// Re-verifies a report's witness exactly against the models (B is used only
/// by comparative properties). True when the report is violated and its
/// witness still shows a strict violation.
bool replay_witness(const CertificateReport& report, const PreferenceModel& m,
                    const PreferenceModel* b = nullptr, const PremiumPrinciple* pp = nullptr);

/// Reference models used by the cross-checks.
namespace zoo {
PreferenceModel eu_concave();
PreferenceModel eu_convex_kink();
PreferenceModel dual_convex();
PreferenceModel dual_nonconvex_dominated();
PreferenceModel expected_value();
std::vector<PreferenceModel> all();
}  // namespace zoo

}  // namespace riskprop
