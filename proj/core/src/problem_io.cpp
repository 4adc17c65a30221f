#include "frac/problem_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "frac/errors.hpp"

namespace frac::io {
namespace {

using nlohmann::json;
using var::Constraint;
using var::ProblemSpec;
using var::RightBoundary;

void reject_unknown_keys(const json& object, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (const char* k : allowed) known |= key == k;
    if (!known) throw std::invalid_argument("unknown key '" + key + "' in " + where);
  }
}

double require_number(const json& object, const char* key, const std::string& where) {
  if (!object.contains(key))
    throw std::invalid_argument("missing key '" + std::string(key) + "' in " + where);
  const json& v = object.at(key);
  if (!v.is_number()) throw std::invalid_argument("'" + std::string(key) + "' must be a number");
  return v.get<double>();
}

RightBoundary parse_right_entry(const json& entry) {
  if (entry.is_string()) {
    if (entry.get<std::string>() == "free") return RightBoundary::free();
    throw std::invalid_argument("right boundary string must be \"free\"");
  }
  if (entry.is_object()) {
    reject_unknown_keys(entry, {"fixed", "capped"}, "boundary.right entry");
    if (entry.contains("fixed")) return RightBoundary::fixed(entry.at("fixed").get<double>());
    if (entry.contains("capped")) return RightBoundary::capped(entry.at("capped").get<double>());
  }
  throw std::invalid_argument("right boundary entry must be {\"fixed\": v}, \"free\" or {\"capped\": v}");
}

json right_entry_to_json(const RightBoundary& rb) {
  switch (rb.kind) {
    case RightBoundary::Kind::Fixed: return json{{"fixed", rb.value}};
    case RightBoundary::Kind::Free: return json("free");
    case RightBoundary::Kind::Capped: return json{{"capped", rb.value}};
  }
  return json();
}

} // namespace

var::ProblemSpec parse_problem(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& err) {
    throw std::invalid_argument(std::string("problem file is not valid JSON: ") + err.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("problem file must be a JSON object");
  reject_unknown_keys(doc, {"interval", "grid", "N", "fractional", "lagrangian", "boundary",
                            "constraints"},
                      "problem file");

  ProblemSpec problem;

  const json& interval = doc.at("interval");
  reject_unknown_keys(interval, {"a", "b"}, "interval");
  const double a = require_number(interval, "a", "interval");
  const double b = require_number(interval, "b", "interval");
  const int n = doc.at("grid").get<int>();
  problem.grid = Grid(a, b, n);

  problem.components = doc.at("N").get<int>();
  if (problem.components < 1) throw std::invalid_argument("N must be at least 1");

  const json& fractional = doc.at("fractional");
  reject_unknown_keys(fractional, {"alpha", "beta", "gamma"}, "fractional");
  problem.params = ops::FractionalParams(require_number(fractional, "alpha", "fractional"),
                                         require_number(fractional, "beta", "fractional"),
                                         require_number(fractional, "gamma", "fractional"));

  problem.lagrangian = expr::parse(doc.at("lagrangian").get<std::string>(), problem.components);

  const json& boundary = doc.at("boundary");
  reject_unknown_keys(boundary, {"left", "right"}, "boundary");
  problem.bc.left = boundary.at("left").get<std::vector<double>>();
  for (const json& entry : boundary.at("right")) problem.bc.right.push_back(parse_right_entry(entry));

  if (doc.contains("constraints")) {
    for (const json& entry : doc.at("constraints")) {
      reject_unknown_keys(entry, {"integrand", "target", "kind"}, "constraint");
      Constraint c;
      c.integrand = expr::parse(entry.at("integrand").get<std::string>(), problem.components);
      c.target = require_number(entry, "target", "constraint");
      const std::string kind = entry.at("kind").get<std::string>();
      if (kind == "equality") c.kind = Constraint::Kind::Equality;
      else if (kind == "inequality") c.kind = Constraint::Kind::Inequality;
      else throw std::invalid_argument("constraint kind must be \"equality\" or \"inequality\"");
      problem.constraints.push_back(std::move(c));
    }
  }

  problem.validate();
  return problem;
}

var::ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open problem file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str());
}

std::string problem_to_json(const var::ProblemSpec& problem) {
  json doc;
  doc["interval"] = {{"a", problem.grid.a}, {"b", problem.grid.b}};
  doc["grid"] = problem.grid.n;
  doc["N"] = problem.components;
  doc["fractional"] = {{"alpha", problem.params.alpha},
                       {"beta", problem.params.beta},
                       {"gamma", problem.params.gamma}};
  doc["lagrangian"] = expr::to_string(problem.lagrangian);
  json right = json::array();
  for (const auto& rb : problem.bc.right) right.push_back(right_entry_to_json(rb));
  doc["boundary"] = {{"left", problem.bc.left}, {"right", right}};
  if (!problem.constraints.empty()) {
    json constraints = json::array();
    for (const auto& c : problem.constraints)
      constraints.push_back(
          {{"integrand", expr::to_string(c.integrand)},
           {"target", c.target},
           {"kind", c.kind == Constraint::Kind::Equality ? "equality" : "inequality"}});
    doc["constraints"] = std::move(constraints);
  }
  return doc.dump(2) + "\n";
}

void save_problem(const var::ProblemSpec& problem, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write problem file: " + path);
  out << problem_to_json(problem);
}

bool equivalent(const var::ProblemSpec& a, const var::ProblemSpec& b) {
  if (!(a.grid == b.grid) || a.components != b.components) return false;
  if (a.params.alpha != b.params.alpha || a.params.beta != b.params.beta ||
      a.params.gamma != b.params.gamma)
    return false;
  if (!expr::structurally_equal(a.lagrangian, b.lagrangian)) return false;
  if (!(a.bc == b.bc)) return false;
  if (a.constraints.size() != b.constraints.size()) return false;
  for (std::size_t j = 0; j < a.constraints.size(); ++j) {
    const auto& ca = a.constraints[j];
    const auto& cb = b.constraints[j];
    if (ca.target != cb.target || ca.kind != cb.kind ||
        !expr::structurally_equal(ca.integrand, cb.integrand))
      return false;
  }
  return true;
}

std::string format_number(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

void save_path_csv(const SampledPath& path, const std::string& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write path file: " + file);
  out << "x";
  for (int i = 1; i <= path.components(); ++i) out << ",y" << i;
  out << "\n";
  for (int k = 0; k <= path.grid().n; ++k) {
    out << format_number(path.grid().node(k));
    for (int i = 0; i < path.components(); ++i) out << "," << format_number(path(i, k));
    out << "\n";
  }
}

SampledPath load_path_csv(const std::string& file, const Grid& grid) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open path file: " + file);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("path file is empty: " + file);
  int columns = 1;
  for (char c : line)
    if (c == ',') ++columns;
  const int components = columns - 1;
  if (components < 1 || line.substr(0, 2) != "x,")
    throw std::invalid_argument("path file must start with an 'x,y1,...' header");

  std::vector<std::vector<double>> values(static_cast<std::size_t>(components),
                                          std::vector<double>());
  const double xtol = 1e-9 * (std::fabs(grid.a) + std::fabs(grid.b) + 1.0);
  int row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (row > grid.n) throw std::invalid_argument("path file has more rows than grid nodes");
    std::istringstream fields(line);
    std::string field;
    int col = 0;
    while (std::getline(fields, field, ',')) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc() || ptr != field.data() + field.size())
        throw std::invalid_argument("malformed number '" + field + "' in path file");
      if (col == 0) {
        if (std::fabs(v - grid.node(row)) > xtol)
          throw std::invalid_argument("path file x column does not match the problem grid");
      } else {
        if (col > components) throw std::invalid_argument("row has too many fields");
        values[static_cast<std::size_t>(col - 1)].push_back(v);
      }
      ++col;
    }
    if (col != components + 1) throw std::invalid_argument("row has too few fields");
    ++row;
  }
  if (row != grid.n + 1)
    throw std::invalid_argument("path file has " + std::to_string(row) + " rows, expected " +
                                std::to_string(grid.n + 1));
  return SampledPath(grid, std::move(values));
}

} // namespace frac::io
