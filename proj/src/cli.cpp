#include "riskprop/cli.hpp"

#include "riskprop/certify.hpp"
#include "riskprop/decompose.hpp"
#include "riskprop/json_io.hpp"
#include "riskprop/orders.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace riskprop::cli {

namespace {

using json_io::Json;

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return json_io::parse(buf.str(), path);
}

Payoff read_payoff(const std::string& path) { return json_io::payoff_from_json(read_json(path), path); }

// "zoo:<name>" selects a built-in reference model; anything else is a file.
PreferenceModel read_model(const std::string& spec) {
  const std::string prefix = "zoo:";
  if (spec.rfind(prefix, 0) == 0) {
    const auto name = spec.substr(prefix.size());
    for (auto& m : zoo::all())
      if (m.name() == name) return m;
    throw InputError(spec + ": unknown built-in model");
  }
  return json_io::model_from_json(read_json(spec), spec);
}

std::uint64_t parse_seed(const std::string& text, const std::string& source) {
  try {
    std::size_t used = 0;
    if (text.empty() || text[0] == '-') throw std::invalid_argument("negative");
    const unsigned long long v = std::stoull(text, &used, 10);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw InputError(source + ": expected an unsigned 64-bit integer, got '" + text + "'");
  }
}

struct BudgetOptions {
  std::string budget_file;
  std::optional<std::size_t> trials, max_n, min_n, exhaustive_n;
  std::optional<std::string> seed;
  std::string grid;
  bool serial = false;
  int threads = 0;

  void attach(CLI::App* app) {
    app->add_option("--budget", budget_file, "JSON search budget (fields override defaults)");
    app->add_option("--trials", trials, "number of seeded trials");
    app->add_option("--min-n", min_n, "smallest number of states");
    app->add_option("--max-n", max_n, "largest number of states");
    app->add_option("--exhaustive-n", exhaustive_n, "exhaustive permutation search up to this size");
    app->add_option("--seed", seed, "64-bit seed (default: $RISKPROP_SEED, else 0)");
    app->add_option("--grid", grid, "comma-separated value grid, e.g. -2,-1,0,1,2");
    app->add_flag("--serial", serial, "run the serial reference search");
    app->add_option("--threads", threads, "worker threads (0 = OpenMP default)");
  }

  SearchBudget budget() const {
    SearchBudget b;
    if (!budget_file.empty()) b = json_io::budget_from_json(read_json(budget_file), budget_file);
    if (trials) b.trials = *trials;
    if (min_n) b.min_n = *min_n;
    if (max_n) b.max_n = *max_n;
    if (exhaustive_n) b.exhaustive_n = *exhaustive_n;
    if (!grid.empty()) {
      b.value_grid.clear();
      std::stringstream ss(grid);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          b.value_grid.push_back(parse_rational(item));
        } catch (const ParseError& e) {
          throw InputError(std::string("--grid: ") + e.what());
        }
      }
    }
    if (seed) {
      b.seed = parse_seed(*seed, "--seed");
    } else if (const char* env = std::getenv("RISKPROP_SEED"); env && *env) {
      b.seed = parse_seed(env, "RISKPROP_SEED");
    } else if (budget_file.empty()) {
      b.seed = kDefaultSeed;
    }
    try {
      b.validate();
    } catch (const PreconditionError& e) {
      throw InputError(e.what());
    }
    return b;
  }

  Execution execution() const { return {!serial, threads}; }
};

Json bool_field(const char* key, bool v) {
  Json out;
  out[key] = v;
  return out;
}

int emit_report(const CertificateReport& r, Json& result) {
  result = json_io::to_json(r);
  return r.violated() ? kExitViolated : kExitOk;
}

Propensity propensity_arg(const std::string& p) {
  try {
    return parse_propensity(p);
  } catch (const ParseError&) {
    throw InputError("--property: unknown property '" + p + "'");
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"riskprop: risk attitudes, insurance contracts and their certification on finite spaces"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write the JSON result here instead of stdout");

  // order
  auto* order = app.add_subcommand("order", "stochastic order and dependence relations between f and g");
  std::string order_f, order_g;
  bool want_cv = false, want_fsd = false, want_mps = false, want_co = false, want_counter = false;
  order->add_option("f", order_f, "payoff f")->required();
  order->add_option("g", order_g, "payoff g")->required();
  order->add_flag("--cv", want_cv, "f is less risky than g (concave order)");
  order->add_flag("--fsd", want_fsd, "f first-order dominates g");
  order->add_flag("--mps", want_mps, "the single mean-preserving spread from f to g, if any");
  order->add_flag("--comonotone", want_co, "f and g are comonotone");
  order->add_flag("--counter-monotone", want_counter, "f and g are counter-monotone");

  // classify
  auto* cls = app.add_subcommand("classify", "insurance classes of contract f for risk w");
  std::string cls_f, cls_w;
  cls->add_option("f", cls_f, "contract payoff f")->required();
  cls->add_option("w", cls_w, "risk w")->required();

  // decompose
  auto* dec = app.add_subcommand("decompose", "constructive decompositions");
  dec->require_subcommand(1);
  auto* dec_split = dec->add_subcommand("split", "equidistributed split of a zero-mean payoff");
  std::string split_f;
  dec_split->add_option("f", split_f, "zero-mean payoff")->required();
  auto* dec_chain = dec->add_subcommand("chain", "chain of mean-preserving spreads from f to g");
  std::string chain_f, chain_g;
  dec_chain->add_option("f", chain_f, "less risky payoff")->required();
  dec_chain->add_option("g", chain_g, "riskier payoff")->required();
  auto* dec_triple = dec->add_subcommand("triple", "insurance triple splitting one spread step");
  std::string triple_f, triple_step, triple_kind = "pr";
  dec_triple->add_option("f", triple_f, "payoff f")->required();
  dec_triple->add_option("step", triple_step, "spread step {donor, recipient, delta}")->required();
  dec_triple->add_option("--kind", triple_kind, "pr or dl")->check(CLI::IsMember({"pr", "dl"}));

  // hedge
  auto* hedge = app.add_subcommand("hedge", "is f a better hedge than g for w");
  std::string hedge_f, hedge_g, hedge_w;
  hedge->add_option("f", hedge_f, "payoff f")->required();
  hedge->add_option("g", hedge_g, "payoff g")->required();
  hedge->add_option("w", hedge_w, "risk w")->required();

  // preference
  auto* pref = app.add_subcommand("preference", "evaluate a preference model");
  std::string pref_model, pref_f, pref_g;
  pref->add_option("model", pref_model, "model JSON file or zoo:<name>")->required();
  pref->add_option("f", pref_f, "payoff f")->required();
  pref->add_option("g", pref_g, "optional payoff g to compare against");

  // certify
  auto* cert = app.add_subcommand("certify", "search for violations of a risk attitude");
  std::string cert_property, cert_model, cert_premium;
  BudgetOptions cert_budget;
  cert->add_option("--property", cert_property,
                   "weak_ra, strong_ra, fi, pr, dl, is, cs, hedging, neutrality or premium")
      ->required();
  cert->add_option("--model", cert_model, "model JSON file or zoo:<name>")->required();
  cert->add_option("--premium", cert_premium, "premium principle JSON (property premium; default fair)");
  cert_budget.attach(cert);

  // compare
  auto* cmp = app.add_subcommand("compare", "is model B more risk averse / more propense than model A");
  std::string cmp_property, cmp_a, cmp_b;
  BudgetOptions cmp_budget;
  cmp->add_option("--property", cmp_property, "weak, strong, fi, pr, dl, is, cs or hedging")->required();
  cmp->add_option("--a", cmp_a, "model A (JSON file or zoo:<name>)")->required();
  cmp->add_option("--b", cmp_b, "model B (JSON file or zoo:<name>)")->required();
  cmp_budget.attach(cmp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  Json result;
  int code = kExitOk;
  try {
    if (order->parsed()) {
      const Payoff f = read_payoff(order_f), g = read_payoff(order_g);
      require_same_length(f, g, "order");
      const bool all = !(want_cv || want_fsd || want_mps || want_co || want_counter);
      result = Json::object();
      if (all || want_cv) result["cv"] = concave_order(f, g);
      if (all || want_fsd) result["fsd"] = fsd(f, g);
      if (all || want_mps) {
        auto step = recognize_mps(f, g);
        result["mps"] = step ? json_io::to_json(*step) : Json(nullptr);
      }
      if (all || want_co) result["comonotone"] = comonotone(f, g);
      if (all || want_counter) result["counter_monotone"] = counter_monotone(f, g);
    } else if (cls->parsed()) {
      result = json_io::to_json(classify(read_payoff(cls_f), read_payoff(cls_w)));
    } else if (dec_split->parsed()) {
      result = json_io::to_json(split_zero_mean(read_payoff(split_f)));
    } else if (dec_chain->parsed()) {
      const Payoff f = read_payoff(chain_f), g = read_payoff(chain_g);
      result = json_io::to_json(mps_chain(f, g));
    } else if (dec_triple->parsed()) {
      const Payoff f = read_payoff(triple_f);
      const MpsStep step = json_io::mps_step_from_json(read_json(triple_step), triple_step);
      result = json_io::to_json(triple_kind == "pr" ? proportional_triple(f, step) : deductible_triple(f, step));
    } else if (hedge->parsed()) {
      result = bool_field("better_hedge", better_hedge(read_payoff(hedge_f), read_payoff(hedge_g), read_payoff(hedge_w)));
    } else if (pref->parsed()) {
      const PreferenceModel m = read_model(pref_model);
      const Payoff f = read_payoff(pref_f);
      result["model"] = json_io::to_json(m);
      if (m.complete()) result["value"] = value(m, f).str();
      if (m.complete() && m.monotone() && m.secular()) result["certainty_equivalent"] = certainty_equivalent(m, f).str();
      if (!pref_g.empty()) {
        const Payoff g = read_payoff(pref_g);
        require_same_length(f, g, "preference");
        if (m.complete()) result["value_g"] = value(m, g).str();
        result["f_weakly_preferred"] = weakly_prefers(m, f, g);
        result["g_weakly_preferred"] = weakly_prefers(m, g, f);
        if (m.complete() && m.monotone() && m.secular()) result["rho_g_f"] = rho(m, g, f).str();
      }
    } else if (cert->parsed()) {
      const PreferenceModel m = read_model(cert_model);
      const SearchBudget b = cert_budget.budget();
      const Execution exec = cert_budget.execution();
      if (cert_property == "weak_ra") {
        code = emit_report(check_weak_risk_aversion(m, b, exec), result);
      } else if (cert_property == "strong_ra") {
        code = emit_report(check_strong_risk_aversion(m, b, exec), result);
      } else if (cert_property == "neutrality") {
        code = emit_report(check_neutrality(m, b, exec), result);
      } else if (cert_property == "premium") {
        const PremiumPrinciple pp =
            cert_premium.empty() ? PremiumPrinciple::fair()
                                 : json_io::premium_principle_from_json(read_json(cert_premium), cert_premium);
        code = emit_report(check_premium_propensity(m, pp, b, exec), result);
      } else {
        code = emit_report(check_propensity(propensity_arg(cert_property), m, b, exec), result);
      }
    } else if (cmp->parsed()) {
      const PreferenceModel a = read_model(cmp_a), b = read_model(cmp_b);
      const SearchBudget budget = cmp_budget.budget();
      const Execution exec = cmp_budget.execution();
      if (cmp_property == "weak")
        code = emit_report(compare_weak(a, b, budget, exec), result);
      else if (cmp_property == "strong")
        code = emit_report(compare_strong(a, b, budget, exec), result);
      else
        code = emit_report(compare_propensity(propensity_arg(cmp_property), a, b, budget, exec), result);
    }
  } catch (const std::invalid_argument& e) {
    // ParseError, LengthMismatch, PreconditionError, UnsupportedModel and
    // file errors all land here.
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }

  const std::string text = json_io::dump(result);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: " << out_path << ": cannot write file\n";
      return kExitInput;
    }
    file << text;
  }
  return code;
}

}  // namespace riskprop::cli
