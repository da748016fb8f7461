#include "riskprop/json_io.hpp"

#include <set>

namespace riskprop::json_io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing field");
  return *it;
}

const Json* optional_field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return nullptr;
  return &*it;
}

void only_fields(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) known = true;
    if (!known) fail(path + "." + it.key(), "unknown field");
  }
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::uint64_t as_unsigned(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  fail(path, "expected a non-negative integer");
}

std::size_t as_state(const Json& j, const std::string& path) {
  const auto s = as_unsigned(j, path);
  if (s == 0) fail(path, "states are numbered from 1");
  return static_cast<std::size_t>(s - 1);
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string at(const std::string& path, std::size_t k) { return path + "[" + std::to_string(k) + "]"; }

template <class F>
auto guarded(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

Json pairs_to_json(const std::vector<std::pair<Rational, Rational>>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back(Json::array({to_json(a), to_json(b)}));
  return out;
}

std::vector<std::pair<Rational, Rational>> pairs_from_json(const Json& j, const std::string& path) {
  std::vector<std::pair<Rational, Rational>> out;
  const auto& arr = as_array(j, path);
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto p = at(path, k);
    if (!arr[k].is_array() || arr[k].size() != 2) fail(p, "expected a pair [x, y]");
    out.emplace_back(rational_from_json(arr[k][0], p + "[0]"), rational_from_json(arr[k][1], p + "[1]"));
  }
  return out;
}

Json optional_payoff(const std::optional<Payoff>& p) { return p ? to_json(*p) : Json(nullptr); }

std::optional<Payoff> optional_payoff_from(const Json& j, const std::string& path, const char* key) {
  if (const Json* v = optional_field(j, key)) return payoff_from_json(*v, path + "." + key);
  return std::nullopt;
}

Verdict verdict_from(const std::string& s, const std::string& path) {
  if (s == "violated") return Verdict::Violated;
  if (s == "holds_on_budget") return Verdict::HoldsOnBudget;
  fail(path, "expected \"holds_on_budget\" or \"violated\"");
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j, const std::string& path) {
  if (!j.is_string() && !j.is_number()) fail(path, "expected a rational (\"p/q\" string or number)");
  // parse_rational does not know where the text came from; add the path.
  try {
    return parse_rational(j.is_string() ? j.get<std::string>() : j.dump());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

Json to_json(const Payoff& p) {
  Json values = Json::array();
  for (const auto& x : p.values()) values.push_back(to_json(x));
  Json out;
  out["n"] = p.size();
  out["values"] = std::move(values);
  return out;
}

Payoff payoff_from_json(const Json& j, const std::string& path) {
  const Json* values = &j;
  std::string vpath = path;
  if (j.is_object()) {
    only_fields(j, path, {"n", "values"});
    values = &field(j, path, "values");
    vpath = path + ".values";
  }
  const auto& arr = as_array(*values, vpath);
  if (arr.empty()) fail(vpath, "a payoff needs at least one state");
  std::vector<Rational> v;
  v.reserve(arr.size());
  for (std::size_t k = 0; k < arr.size(); ++k) v.push_back(rational_from_json(arr[k], at(vpath, k)));
  if (j.is_object()) {
    if (const Json* n = optional_field(j, "n"))
      if (as_unsigned(*n, path + ".n") != v.size()) fail(path + ".n", "does not match the number of values");
  }
  return Payoff(std::move(v));
}

Json to_json(const PiecewiseLinearFn& fn) {
  Json pts = Json::array();
  for (const auto& p : fn.points()) pts.push_back(Json::array({to_json(p.x), to_json(p.y)}));
  Json out;
  out["breakpoints"] = std::move(pts);
  return out;
}

PiecewiseLinearFn piecewise_from_json(const Json& j, const std::string& path) {
  only_fields(j, path, {"breakpoints"});
  std::vector<PiecewiseLinearFn::Point> pts;
  for (auto& [x, y] : pairs_from_json(field(j, path, "breakpoints"), path + ".breakpoints")) pts.push_back({x, y});
  return guarded(path + ".breakpoints", [&] { return PiecewiseLinearFn(std::move(pts)); });
}

Json to_json(const QuantileTable& q) {
  std::vector<std::pair<Rational, Rational>> pieces;
  for (const auto& p : q.pieces()) pieces.emplace_back(p.upper, p.value);
  Json out;
  out["pieces"] = pairs_to_json(pieces);
  return out;
}

QuantileTable quantile_table_from_json(const Json& j, const std::string& path) {
  only_fields(j, path, {"pieces"});
  std::vector<QuantileTable::Piece> pieces;
  for (auto& [u, v] : pairs_from_json(field(j, path, "pieces"), path + ".pieces")) pieces.push_back({u, v});
  return guarded(path + ".pieces", [&] { return QuantileTable(std::move(pieces)); });
}

Json to_json(const MpsStep& step) {
  Json out;
  out["donor"] = step.donor + 1;
  out["recipient"] = step.recipient + 1;
  out["delta"] = to_json(step.delta);
  return out;
}

MpsStep mps_step_from_json(const Json& j, const std::string& path) {
  only_fields(j, path, {"donor", "recipient", "delta"});
  return {as_state(field(j, path, "donor"), path + ".donor"), as_state(field(j, path, "recipient"), path + ".recipient"),
          rational_from_json(field(j, path, "delta"), path + ".delta")};
}

Json to_json(const ZeroMeanSplit& s) {
  Json out;
  out["h"] = to_json(s.h);
  out["h_prime"] = to_json(s.h_prime);
  return out;
}

ZeroMeanSplit split_from_json(const Json& j, const std::string& path) {
  only_fields(j, path, {"h", "h_prime"});
  return {payoff_from_json(field(j, path, "h"), path + ".h"),
          payoff_from_json(field(j, path, "h_prime"), path + ".h_prime")};
}

Json to_json(const MpsChain& c) {
  Json steps = Json::array();
  for (const auto& e : c.steps) {
    Json item;
    if (const auto* s = std::get_if<MpsStep>(&e)) {
      item["mps"] = to_json(*s);
    } else {
      Json perm = Json::array();
      for (auto p : std::get<StatePermutation>(e).perm) perm.push_back(p + 1);
      item["permutation"] = std::move(perm);
    }
    steps.push_back(std::move(item));
  }
  Json out;
  out["spreads"] = c.spread_count();
  out["steps"] = std::move(steps);
  return out;
}

MpsChain chain_from_json(const Json& j, const std::string& path) {
  only_fields(j, path, {"spreads", "steps"});
  MpsChain c;
  const auto spath = path + ".steps";
  const auto& arr = as_array(field(j, path, "steps"), spath);
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto p = at(spath, k);
    if (!arr[k].is_object() || arr[k].size() != 1) fail(p, "expected {\"mps\": ...} or {\"permutation\": [...]}");
    if (const Json* m = optional_field(arr[k], "mps")) {
      c.steps.emplace_back(mps_step_from_json(*m, p + ".mps"));
    } else {
      const auto pp = p + ".permutation";
      const auto& perm = as_array(field(arr[k], p, "permutation"), pp);
      StatePermutation sp;
      for (std::size_t i = 0; i < perm.size(); ++i) sp.perm.push_back(as_state(perm[i], at(pp, i)));
      c.steps.emplace_back(std::move(sp));
    }
  }
  return c;
}

Json to_json(const InsuranceTriple& t) {
  Json out;
  const bool pr = t.kind == TripleKind::Proportional;
  out["kind"] = pr ? "pr" : "dl";
  out["w_tilde"] = to_json(t.w_tilde);
  out["f_tilde"] = to_json(t.f_tilde);
  out["g_tilde"] = to_json(t.g_tilde);
  if (pr) {
    out["scale"] = to_json(t.scale);
    out["excess"] = to_json(t.excess);
  } else {
    out["deductible"] = to_json(t.deductible);
    out["limit"] = to_json(t.limit);
    out["premium"] = to_json(t.premium);
  }
  return out;
}

InsuranceTriple triple_from_json(const Json& j, const std::string& path) {
  only_fields(j, path, {"kind", "w_tilde", "f_tilde", "g_tilde", "scale", "excess", "deductible", "limit", "premium"});
  const auto kind = as_string(field(j, path, "kind"), path + ".kind");
  if (kind != "pr" && kind != "dl") fail(path + ".kind", "expected \"pr\" or \"dl\"");
  auto r = [&](const char* key) {
    const Json* v = optional_field(j, key);
    return v ? rational_from_json(*v, path + "." + key) : Rational(0);
  };
  return InsuranceTriple{kind == "pr" ? TripleKind::Proportional : TripleKind::DeductibleLimit,
                         payoff_from_json(field(j, path, "w_tilde"), path + ".w_tilde"),
                         payoff_from_json(field(j, path, "f_tilde"), path + ".f_tilde"),
                         payoff_from_json(field(j, path, "g_tilde"), path + ".g_tilde"),
                         r("scale"),
                         r("excess"),
                         r("deductible"),
                         r("limit"),
                         r("premium")};
}

ContractParams params_from_json(const Json& j, const std::string& path) {
  only_fields(j, path, {"premium", "excess", "deductible", "limit", "schedule", "payoff"});
  ContractParams p;
  auto r = [&](const char* key, Rational& out) {
    if (const Json* v = optional_field(j, key)) out = rational_from_json(*v, path + "." + key);
  };
  r("premium", p.premium);
  r("excess", p.excess);
  r("deductible", p.deductible);
  r("limit", p.limit);
  if (const Json* s = optional_field(j, "schedule")) p.schedule = piecewise_from_json(*s, path + ".schedule");
  p.payoff = optional_payoff_from(j, path, "payoff");
  return p;
}

Json to_json(const InsuranceContract& c) {
  Json params;
  params["premium"] = to_json(c.params.premium);
  params["excess"] = to_json(c.params.excess);
  params["deductible"] = to_json(c.params.deductible);
  params["limit"] = to_json(c.params.limit);
  if (c.params.schedule) params["schedule"] = to_json(*c.params.schedule);
  if (c.params.payoff) params["payoff"] = to_json(*c.params.payoff);
  Json out;
  out["kind"] = std::string(tag(c.kind));
  out["params"] = std::move(params);
  out["payoff"] = to_json(c.payoff);
  return out;
}

InsuranceContract contract_from_json(const Json& j, const std::string& path) {
  only_fields(j, path, {"kind", "params", "payoff"});
  const auto kpath = path + ".kind";
  const auto kind = guarded(kpath, [&] { return parse_insurance_kind(as_string(field(j, path, "kind"), kpath)); });
  const Json* params = optional_field(j, "params");
  return {payoff_from_json(field(j, path, "payoff"), path + ".payoff"), kind,
          params ? params_from_json(*params, path + ".params") : ContractParams{}};
}

Json to_json(const Classification& c) {
  Json kinds = Json::array();
  for (auto k : c.kinds()) kinds.push_back(std::string(tag(k)));
  Json fits = Json::object();
  if (c.full) fits["fi"] = Json{{"premium", to_json(c.full->premium)}};
  if (c.proportional)
    fits["pr"] = Json{{"excess", to_json(c.proportional->excess)}, {"premium", to_json(c.proportional->premium)}};
  if (c.deductible_limit)
    fits["dl"] = Json{{"deductible", to_json(c.deductible_limit->deductible)},
                      {"limit", to_json(c.deductible_limit->limit)},
                      {"premium", to_json(c.deductible_limit->premium)}};
  if (c.indemnity_schedule) fits["is"] = Json{{"schedule", pairs_to_json(c.indemnity_schedule->schedule)}};
  if (c.contingency_schedule) fits["cs"] = true;
  Json out;
  out["kinds"] = std::move(kinds);
  out["fits"] = std::move(fits);
  return out;
}

Classification classification_from_json(const Json& j, const std::string& path) {
  only_fields(j, path, {"kinds", "fits"});
  const auto fpath = path + ".fits";
  const Json& fits = field(j, path, "fits");
  only_fields(fits, fpath, {"fi", "pr", "dl", "is", "cs"});
  auto r = [&](const Json& o, const std::string& p, const char* key) {
    return rational_from_json(field(o, p, key), p + "." + key);
  };
  Classification c;
  if (const Json* v = optional_field(fits, "fi")) c.full = Classification::FullFit{r(*v, fpath + ".fi", "premium")};
  if (const Json* v = optional_field(fits, "pr"))
    c.proportional = Classification::ProportionalFit{r(*v, fpath + ".pr", "excess"), r(*v, fpath + ".pr", "premium")};
  if (const Json* v = optional_field(fits, "dl"))
    c.deductible_limit = Classification::DeductibleFit{r(*v, fpath + ".dl", "deductible"),
                                                       r(*v, fpath + ".dl", "limit"), r(*v, fpath + ".dl", "premium")};
  if (const Json* v = optional_field(fits, "is"))
    c.indemnity_schedule =
        Classification::ScheduleFit{pairs_from_json(field(*v, fpath + ".is", "schedule"), fpath + ".is.schedule")};
  if (const Json* v = optional_field(fits, "cs")) c.contingency_schedule = v->is_boolean() && v->get<bool>();

  std::set<std::string> listed;
  const auto kpath = path + ".kinds";
  const auto& kinds = as_array(field(j, path, "kinds"), kpath);
  for (std::size_t k = 0; k < kinds.size(); ++k) listed.insert(as_string(kinds[k], at(kpath, k)));
  for (auto kind : kAllInsuranceKinds)
    if (c.contains(kind) != (listed.count(std::string(tag(kind))) > 0))
      fail(kpath, "kinds do not match the fits for '" + std::string(tag(kind)) + "'");
  return c;
}

Json to_json(const PreferenceModel& m) {
  Json out;
  out["type"] = std::string(tag(m.kind()));
  out["name"] = m.name();
  if (m.kind() == ModelKind::ExpectedUtility) out["fn"] = to_json(*m.utility());
  if (m.kind() == ModelKind::Dual) {
    if (auto k = m.distortion()->power_exponent())
      out["power"] = *k;
    else
      out["fn"] = to_json(*m.distortion()->piecewise());
  }
  return out;
}

PreferenceModel model_from_json(const Json& j, const std::string& path) {
  only_fields(j, path, {"type", "name", "fn", "power"});
  const auto type = as_string(field(j, path, "type"), path + ".type");
  std::string name = type;
  if (const Json* n = optional_field(j, "name")) name = as_string(*n, path + ".name");
  if (type == "ev") return PreferenceModel::expected_value(name);
  if (type == "mv") return PreferenceModel::mean_variance(name);
  if (type == "eu")
    return PreferenceModel::expected_utility(piecewise_from_json(field(j, path, "fn"), path + ".fn"), name);
  if (type == "dual") {
    if (const Json* p = optional_field(j, "power")) {
      const auto k = as_unsigned(*p, path + ".power");
      return guarded(path + ".power", [&] { return PreferenceModel::dual(Distortion::power(unsigned(k)), name); });
    }
    auto fn = piecewise_from_json(field(j, path, "fn"), path + ".fn");
    return guarded(path + ".fn", [&] { return PreferenceModel::dual(Distortion(std::move(fn)), name); });
  }
  fail(path + ".type", "expected one of eu, dual, mv, ev");
}

Json to_json(const PremiumPrinciple& pp) {
  Json out;
  const std::string& name = pp.name();
  const std::string loading = "loading:";
  if (name.rfind(loading, 0) == 0) {
    out["type"] = "loading";
    out["load"] = name.substr(loading.size());
  } else {
    out["type"] = name;
  }
  out["theta"] = to_json(pp.theta());
  return out;
}

PremiumPrinciple premium_principle_from_json(const Json& j, const std::string& path) {
  only_fields(j, path, {"type", "load", "theta"});
  const auto type = as_string(field(j, path, "type"), path + ".type");
  if (type == "fair") return PremiumPrinciple::fair();
  if (type == "loading") {
    const auto load = rational_from_json(field(j, path, "load"), path + ".load");
    return guarded(path + ".load", [&] { return PremiumPrinciple::expected_value_loading(load); });
  }
  fail(path + ".type", "expected \"fair\" or \"loading\"");
}

Json to_json(const SearchBudget& b) {
  Json grid = Json::array();
  for (const auto& x : b.value_grid) grid.push_back(to_json(x));
  Json out;
  out["min_n"] = b.min_n;
  out["max_n"] = b.max_n;
  out["exhaustive_n"] = b.exhaustive_n;
  out["trials"] = b.trials;
  out["seed"] = b.seed;
  out["value_grid"] = std::move(grid);
  out["sampled_permutations"] = b.sampled_permutations;
  return out;
}

SearchBudget budget_from_json(const Json& j, const std::string& path) {
  only_fields(j, path, {"min_n", "max_n", "exhaustive_n", "trials", "seed", "value_grid", "sampled_permutations"});
  SearchBudget b;
  auto u = [&](const char* key, auto& out) {
    if (const Json* v = optional_field(j, key)) out = static_cast<std::decay_t<decltype(out)>>(as_unsigned(*v, path + "." + key));
  };
  u("min_n", b.min_n);
  u("max_n", b.max_n);
  u("exhaustive_n", b.exhaustive_n);
  u("trials", b.trials);
  u("seed", b.seed);
  u("sampled_permutations", b.sampled_permutations);
  if (const Json* g = optional_field(j, "value_grid")) {
    const auto gpath = path + ".value_grid";
    const auto& arr = as_array(*g, gpath);
    b.value_grid.clear();
    for (std::size_t k = 0; k < arr.size(); ++k) b.value_grid.push_back(rational_from_json(arr[k], at(gpath, k)));
  }
  guarded(path, [&] {
    b.validate();
    return 0;
  });
  return b;
}

Json to_json(const Witness& w) {
  Json out;
  out["w"] = optional_payoff(w.w);
  out["f"] = optional_payoff(w.f);
  out["g"] = optional_payoff(w.g);
  out["lhs"] = w.lhs;
  out["rhs"] = w.rhs;
  out["trial"] = w.trial;
  return out;
}

Witness witness_from_json(const Json& j, const std::string& path) {
  only_fields(j, path, {"w", "f", "g", "lhs", "rhs", "trial"});
  Witness w;
  w.w = optional_payoff_from(j, path, "w");
  w.f = optional_payoff_from(j, path, "f");
  w.g = optional_payoff_from(j, path, "g");
  if (const Json* v = optional_field(j, "lhs")) w.lhs = as_string(*v, path + ".lhs");
  if (const Json* v = optional_field(j, "rhs")) w.rhs = as_string(*v, path + ".rhs");
  if (const Json* v = optional_field(j, "trial")) w.trial = as_unsigned(*v, path + ".trial");
  return w;
}

Json to_json(const CertificateReport& r) {
  Json out;
  out["property"] = r.property;
  out["model"] = r.model;
  out["verdict"] = std::string(tag(r.verdict));
  out["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  out["trials"] = r.trials_run;
  out["seed"] = r.seed;
  out["budget"] = to_json(r.budget);
  out["assumptions"] = r.assumptions;
  Json details = Json::array();
  for (const auto& d : r.details) details.push_back(to_json(d));
  out["details"] = std::move(details);
  return out;
}

CertificateReport report_from_json(const Json& j, const std::string& path) {
  only_fields(j, path, {"property", "model", "verdict", "witness", "trials", "seed", "budget", "assumptions", "details"});
  CertificateReport r;
  r.property = as_string(field(j, path, "property"), path + ".property");
  if (const Json* v = optional_field(j, "model")) r.model = as_string(*v, path + ".model");
  r.verdict = verdict_from(as_string(field(j, path, "verdict"), path + ".verdict"), path + ".verdict");
  if (const Json* v = optional_field(j, "witness")) r.witness = witness_from_json(*v, path + ".witness");
  r.trials_run = as_unsigned(field(j, path, "trials"), path + ".trials");
  r.seed = as_unsigned(field(j, path, "seed"), path + ".seed");
  if (const Json* v = optional_field(j, "budget")) r.budget = budget_from_json(*v, path + ".budget");
  if (const Json* v = optional_field(j, "assumptions")) {
    const auto apath = path + ".assumptions";
    const auto& arr = as_array(*v, apath);
    for (std::size_t k = 0; k < arr.size(); ++k) r.assumptions.push_back(as_string(arr[k], at(apath, k)));
  }
  if (const Json* v = optional_field(j, "details")) {
    const auto dpath = path + ".details";
    const auto& arr = as_array(*v, dpath);
    for (std::size_t k = 0; k < arr.size(); ++k) r.details.push_back(report_from_json(arr[k], at(dpath, k)));
  }
  return r;
}

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": invalid JSON (" + e.what() + ")");
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace riskprop::json_io
