#pragma once

// Problem files (JSON) and path files (CSV).
//
// Problem schema, all keys required unless noted, unknown keys rejected:
//   {
//     "interval": {"a": 0.0, "b": 1.0},
//     "grid": 1000,
//     "N": 1,
//     "fractional": {"alpha": 0.5, "beta": 0.5, "gamma": 1.0},
//     "lagrangian": "(dy1 + Dy1)^2",
//     "boundary": {
//       "left": [0.0],
//       "right": [{"fixed": 0.55596}]      // or "free" or {"capped": 1.0}
//     },
//     "constraints": [                      // optional, default []
//       {"integrand": "dy1 + Dy1", "target": 1.0, "kind": "equality"}
//     ]
//   }
//
// Path CSV: header "x,y1,...,yN", one row per node, '.' decimal
// separator, '\n' line endings, 12 significant digits.

#include <string>

#include "frac/variational.hpp"

namespace frac::io {

var::ProblemSpec parse_problem(const std::string& json_text);
var::ProblemSpec load_problem(const std::string& path);

std::string problem_to_json(const var::ProblemSpec& problem);
void save_problem(const var::ProblemSpec& problem, const std::string& path);

/// Field-wise equality with structural comparison of the expressions.
bool equivalent(const var::ProblemSpec& a, const var::ProblemSpec& b);

void save_path_csv(const SampledPath& path, const std::string& file);

/// Loads a path and validates it against the expected grid (node count
/// and x column within 1e-9 of the grid nodes).
SampledPath load_path_csv(const std::string& file, const Grid& grid);

/// Decimal text with 12 significant digits, locale-independent.
std::string format_number(double v);

} // namespace frac::io
