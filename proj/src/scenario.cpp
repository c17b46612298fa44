#include "hsdt/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hsdt {

namespace {

using nlohmann::json;

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i + 1 <= byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

double number_field(const json& j, const char* context) {
  if (!j.is_number())
    throw SchemaError(std::string(context) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v))
    throw SchemaError(std::string(context) + ": non-finite number");
  return v;
}

Complex amplitude_field(const json& j, const char* context) {
  if (j.is_number()) return Complex(number_field(j, context), 0.0);
  if (j.is_array() && j.size() == 2)
    return Complex(number_field(j[0], context), number_field(j[1], context));
  throw SchemaError(std::string(context) +
                    ": amplitude must be a number or an [re, im] pair");
}

StateVector state_field(const json& arr, std::size_t expected_dim,
                        const char* name, std::vector<std::string>& warnings) {
  if (!arr.is_array() || arr.empty())
    throw SchemaError(std::string(name) + ": expected a non-empty array");
  if (expected_dim != 0 && arr.size() != expected_dim)
    throw SchemaError(std::string(name) + ": has " + std::to_string(arr.size()) +
                      " amplitudes for " + std::to_string(expected_dim) +
                      " outcomes");
  std::vector<Complex> amps;
  amps.reserve(arr.size());
  for (const json& a : arr) amps.push_back(amplitude_field(a, name));
  double norm_sq = 0.0;
  for (const Complex& a : amps) norm_sq += std::norm(a);
  const double norm = std::sqrt(norm_sq);
  if (!(norm > 0.0))
    throw NormalizationError(std::string(name) + ": zero amplitude vector");
  const double deviation = std::abs(norm - 1.0);
  if (deviation > kRenormErrorTol) {
    std::ostringstream msg;
    msg << name << ": norm " << norm << " is off unit by " << deviation
        << " (limit " << kRenormErrorTol << ")";
    throw NormalizationError(msg.str());
  }
  if (deviation > kRenormWarnTol) {
    std::ostringstream msg;
    msg << name << " renormalized; norm deviated from 1 by " << deviation;
    warnings.push_back(msg.str());
  }
  return make_state(std::move(amps));
}

std::vector<PayoffAction> action_list(const json& doc, std::size_t dim) {
  std::vector<PayoffAction> actions;
  if (!doc.contains("actions")) return actions;
  const json& arr = doc.at("actions");
  if (!arr.is_array()) throw SchemaError("actions: expected an array");
  for (const json& a : arr) {
    if (!a.is_object() || !a.contains("label") || !a.contains("payoffs"))
      throw SchemaError("actions: each entry needs 'label' and 'payoffs'");
    if (!a.at("label").is_string())
      throw SchemaError("actions: 'label' must be a string");
    PayoffAction action;
    action.label = a.at("label").get<std::string>();
    const json& payoffs = a.at("payoffs");
    if (!payoffs.is_array() || payoffs.size() != dim)
      throw SchemaError("action '" + action.label + "': payoffs must have " +
                        std::to_string(dim) + " entries");
    for (const json& p : payoffs)
      action.payoffs.push_back(number_field(p, "payoffs"));
    actions.push_back(std::move(action));
  }
  return actions;
}

void append_portfolio_actions(const json& block, std::size_t dim,
                              std::vector<PayoffAction>& actions) {
  if (dim != 2)
    throw SchemaError("portfolio: only defined for two-outcome scenarios");
  if (!block.is_object()) throw SchemaError("portfolio: expected an object");
  for (const char* key : {"q0", "r1", "r2", "r", "w0"}) {
    if (!block.contains(key))
      throw SchemaError(std::string("portfolio: missing field '") + key + "'");
  }
  PortfolioParams params;
  params.q0 = number_field(block.at("q0"), "portfolio.q0");
  params.r1 = number_field(block.at("r1"), "portfolio.r1");
  params.r2 = number_field(block.at("r2"), "portfolio.r2");
  params.r = number_field(block.at("r"), "portfolio.r");
  params.w0 = number_field(block.at("w0"), "portfolio.w0");

  if (!block.contains("utility") || !block.at("utility").is_string())
    throw SchemaError("portfolio: missing utility name");
  const std::string utility_name = block.at("utility").get<std::string>();
  const double gamma =
      block.contains("gamma") ? number_field(block.at("gamma"), "portfolio.gamma")
                              : 1.0;

  if (!block.contains("portfolios") || !block.at("portfolios").is_array() ||
      block.at("portfolios").empty())
    throw SchemaError("portfolio: needs a non-empty 'portfolios' array");

  UtilityFn utility = UtilityFn::linear();
  try {
    utility = UtilityFn::by_name(utility_name, gamma);
  } catch (const DomainError& e) {
    throw SchemaError(std::string("portfolio: ") + e.what());
  }

  int index = 0;
  for (const json& p : block.at("portfolios")) {
    ++index;
    if (!p.is_object() || !p.contains("a") || !p.contains("b"))
      throw SchemaError("portfolio: each entry needs quantities 'a' and 'b'");
    PortfolioParams entry = params;
    entry.a = number_field(p.at("a"), "portfolio.a");
    entry.b = number_field(p.at("b"), "portfolio.b");
    std::string label = p.contains("label") && p.at("label").is_string()
                            ? p.at("label").get<std::string>()
                            : "portfolio-" + std::to_string(index);
    try {
      actions.push_back(portfolio_action(entry, utility, std::move(label)));
    } catch (const DomainError& e) {
      throw SchemaError(std::string("portfolio: ") + e.what());
    }
  }
}

json amplitude_to_json(const Complex& a) {
  return json::array({a.real(), a.imag()});
}

}  // namespace

ParsedScenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(e.what(), line, column);
  }
  if (!doc.is_object()) throw SchemaError("scenario: top level must be an object");
  if (!doc.contains("outcomes") || !doc.at("outcomes").is_array() ||
      doc.at("outcomes").empty())
    throw SchemaError("scenario: needs a non-empty 'outcomes' array");
  std::vector<std::string> outcomes;
  for (const json& o : doc.at("outcomes")) {
    if (!o.is_string()) throw SchemaError("outcomes: entries must be strings");
    outcomes.push_back(o.get<std::string>());
  }
  const std::size_t dim = outcomes.size();

  if (!doc.contains("state")) throw SchemaError("scenario: missing 'state'");

  std::vector<std::string> warnings;
  StateVector world = state_field(doc.at("state"), dim, "state", warnings);

  std::vector<PayoffAction> actions = action_list(doc, dim);
  if (doc.contains("portfolio"))
    append_portfolio_actions(doc.at("portfolio"), dim, actions);
  if (actions.empty())
    throw SchemaError("scenario: needs 'actions' and/or a 'portfolio' block");

  std::optional<MindState> mind;
  if (doc.contains("mind"))
    mind.emplace(state_field(doc.at("mind"), dim, "mind", warnings));

  ParsedScenario parsed{
      make_problem(std::move(outcomes), std::move(world), std::move(actions)),
      std::move(mind), std::move(warnings)};
  return parsed;
}

std::string serialize_scenario(const DecisionProblem& problem,
                               const std::optional<MindState>& mind) {
  json doc;
  doc["outcomes"] = problem.outcome_labels;
  json state = json::array();
  for (const Complex& a : problem.world_state.amplitudes())
    state.push_back(amplitude_to_json(a));
  doc["state"] = std::move(state);
  if (mind) {
    json m = json::array();
    for (const Complex& a : mind->vector().amplitudes())
      m.push_back(amplitude_to_json(a));
    doc["mind"] = std::move(m);
  }
  json actions = json::array();
  for (const PayoffAction& a : problem.actions)
    actions.push_back(json{{"label", a.label}, {"payoffs", a.payoffs}});
  doc["actions"] = std::move(actions);
  return doc.dump(2) + "\n";
}

ParsedScenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scenario file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading scenario file '" + path + "'");
  return parse_scenario(buffer.str());
}

}  // namespace hsdt
