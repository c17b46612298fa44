#pragma once
//
// Scenario files: a JSON document describing one decision problem.
//
//   {
//     "outcomes": ["black", "white"],
//     "state":    [[0.8, 0.0], [0.6, 0.0]],      // complex amps as [re, im]
//     "mind":     [[0.6, 0.0], [0.0, 0.8]],      // optional
//     "actions":  [{"label": "bet-black", "payoffs": [1, 0]}, ...],
//     "portfolio": {                              // optional, dim 2 only
//       "q0": 1.0, "r1": 2.0, "r2": 0.0, "r": 1.0, "w0": 2.0,
//       "utility": "linear",                      // or "power" (+"gamma"), "log"
//       "portfolios": [{"label": "stock-tilted", "a": 1.0, "b": 1.0}, ...]
//     }
//   }
//
// Bare numbers are accepted as real amplitudes. States off unit norm by more
// than kRenormWarnTol are renormalized with a warning; beyond
// kRenormErrorTol they are rejected. The portfolio block appends one
// generated action per listed portfolio.

#include <optional>
#include <string>
#include <vector>

#include "hsdt/decision.hpp"
#include "hsdt/mind.hpp"

namespace hsdt {

inline constexpr double kRenormWarnTol = 1e-9;
inline constexpr double kRenormErrorTol = 1e-6;

struct ParsedScenario {
  DecisionProblem problem;
  std::optional<MindState> mind;
  std::vector<std::string> warnings;
};

// Throws ParseError (malformed JSON, with line/column), SchemaError (wrong
// shape or dimensions), NormalizationError (state too far off unit norm) and
// BudgetError (portfolio violating its budget).
ParsedScenario parse_scenario(const std::string& text);

// Inverse of parse_scenario for the problem/mind pair; generated portfolio
// actions serialize as plain actions.
std::string serialize_scenario(const DecisionProblem& problem,
                               const std::optional<MindState>& mind = std::nullopt);

// Reads and parses a scenario file. Throws IoError when unreadable.
ParsedScenario load_scenario_file(const std::string& path);

}  // namespace hsdt
