#pragma once

#include "hopfcore/action.hpp"
#include "hopfcore/algebra.hpp"
#include "hopfcore/bialgebra.hpp"
#include "hopfcore/report.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopfcore {

using json = nlohmann::ordered_json;

struct Instance {
  std::string name;
  std::string kind;  // ueg | xyw | raw
  std::shared_ptr<const FilteredBialgebra> h;
  std::optional<std::vector<std::string>> generator_order;
};

// Instance files: {"kind": "ueg", "degree_bound": D, "lie": {...}},
// {"kind": "xyw", ...} or {"kind": "raw", "tables": {...}}. A degree given
// on the command line overrides the file (raw tables cannot be rebuilt).
// Throws FormatError.
Instance load_instance(const json& j, const std::string& name,
                       std::optional<unsigned> degree = std::nullopt);
// A path, or one of the built-in names heis, sl2, xyw, abelian.
Instance load_instance(const std::string& path_or_name,
                       std::optional<unsigned> degree = std::nullopt);

// A built-in ring name (q, m2q, qxq, qx2) or a ring table file.
CoefficientRing load_ring(const std::string& name_or_path);
CoefficientRing parse_ring(const json& j);

struct ActionSpec {
  std::shared_ptr<const DeskAlgebra> algebra;
  std::map<std::string, QMatrix> gen_ops;
  json ideal;
};

ActionSpec load_action(const std::string& path);
ActionSpec parse_action(const json& j);
// From the "ideal" object of an action file, or the command-line form
// "zero", "whole", or a monomial list such as "(x)" or "(x*y, y^2)".
IdealOracle make_ideal(std::shared_ptr<const DeskAlgebra> A, const json& spec);
IdealOracle make_ideal(std::shared_ptr<const DeskAlgebra> A, const std::string& text);

json read_json_file(const std::string& path);
Rational json_rational(const json& v);
// {"label": "p/q", ...} over the given labels.
Vector json_vector(const json& v, const std::vector<std::string>& labels);

json report_json(const Report& r);

} // namespace hopfcore
