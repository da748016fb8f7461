#pragma once

// JSON encoding of every value the CLI reads or writes. Rationals are "p/q"
// strings on output; on input strings ("p/q", integers, terminating
// decimals) and JSON numbers (read exactly from their decimal text) are both
// accepted. States are numbered from 1 in JSON.
//
// Parse functions take the path of the value being read (e.g. "f.values[2]")
// and throw ParseError naming it when the input is malformed.

#include "riskprop/certify.hpp"
#include "riskprop/decompose.hpp"
#include "riskprop/insurance.hpp"
#include "riskprop/preferences.hpp"

#include <json.hpp>

#include <string>

namespace riskprop::json_io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& path);

/// {"n": 3, "values": ["1/1", ...]}; a bare array of values is also accepted.
Json to_json(const Payoff& p);
Payoff payoff_from_json(const Json& j, const std::string& path);

/// {"breakpoints": [[x, y], ...]}
Json to_json(const PiecewiseLinearFn& fn);
PiecewiseLinearFn piecewise_from_json(const Json& j, const std::string& path);

/// {"pieces": [[upper, value], ...]}
Json to_json(const QuantileTable& q);
QuantileTable quantile_table_from_json(const Json& j, const std::string& path);

/// {"donor": 1, "recipient": 2, "delta": "1/1"}
Json to_json(const MpsStep& step);
MpsStep mps_step_from_json(const Json& j, const std::string& path);

/// {"h": payoff, "h_prime": payoff}
Json to_json(const ZeroMeanSplit& s);
ZeroMeanSplit split_from_json(const Json& j, const std::string& path);

/// {"spreads": k, "steps": [{"mps": step} | {"permutation": [1-based]}]}
Json to_json(const MpsChain& c);
MpsChain chain_from_json(const Json& j, const std::string& path);

Json to_json(const InsuranceTriple& t);
InsuranceTriple triple_from_json(const Json& j, const std::string& path);

/// {"kind": "dl", "params": {...}, "payoff": payoff}
Json to_json(const InsuranceContract& c);
InsuranceContract contract_from_json(const Json& j, const std::string& path);
ContractParams params_from_json(const Json& j, const std::string& path);

/// {"kinds": [...], "fits": {...}}
Json to_json(const Classification& c);
Classification classification_from_json(const Json& j, const std::string& path);

/// {"type": "eu", "name": ..., "fn": {"breakpoints": ...}}, {"type": "dual",
/// "fn": ...} or {"type": "dual", "power": k}, {"type": "mv"}, {"type": "ev"}.
Json to_json(const PreferenceModel& m);
PreferenceModel model_from_json(const Json& j, const std::string& path);

/// {"type": "fair"} or {"type": "loading", "load": "1/5"}
Json to_json(const PremiumPrinciple& pp);
PremiumPrinciple premium_principle_from_json(const Json& j, const std::string& path);

Json to_json(const SearchBudget& b);
SearchBudget budget_from_json(const Json& j, const std::string& path);

Json to_json(const Witness& w);
Witness witness_from_json(const Json& j, const std::string& path);

/// {"property", "model", "verdict", "witness", "trials", "seed", "budget",
///  "assumptions", "details"}
Json to_json(const CertificateReport& r);
CertificateReport report_from_json(const Json& j, const std::string& path);

/// Parses JSON text; ParseError mentions `source` on a syntax error.
Json parse(const std::string& text, const std::string& source);

/// Pretty-printed with two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace riskprop::json_io
