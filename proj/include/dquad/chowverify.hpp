#pragma once

#include "dquad/polynomial.hpp"
#include "dquad/scalar.hpp"

#include "json.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dquad {

enum class ClassKind { HyperplanePullback, PointExceptionalSmooth, PointExceptionalNode, CurveExceptional };

std::string to_string(ClassKind k);
/// Inverse of to_string; throws Error for an unknown name.
ClassKind class_kind_from_string(const std::string& s);

struct ClassSymbol {
    std::string name;
    ClassKind kind = ClassKind::HyperplanePullback;
};

/// Divisor classes on an iterated blow-up together with which point-exceptional classes meet
/// which curve-exceptional classes.
class ChowModel {
public:
    ChowModel(std::string tag, std::vector<ClassSymbol> classes,
              std::vector<std::pair<std::string, std::string>> incidences = {});

    const std::string& tag() const noexcept { return tag_; }
    const std::vector<ClassSymbol>& classes() const noexcept { return classes_; }
    std::size_t index(const std::string& name) const;
    bool incident(std::size_t point, std::size_t curve) const;

    /// Triples forced to vanish by the geometry of the blow-up: h with a point-exceptional class,
    /// one curve-exceptional class with two pulled-back classes, disjoint exceptional classes.
    bool structurally_zero(std::array<std::size_t, 3> t) const;
    /// Sorted index triples that are not structurally zero.
    std::vector<std::array<std::size_t, 3>> unknown_triples() const;

private:
    std::string tag_;
    std::vector<ClassSymbol> classes_;
    std::vector<std::pair<std::size_t, std::size_t>> incidences_;
};

/// Values of all triple products of a model's classes; symmetric by construction.
class RelationTable {
public:
    explicit RelationTable(ChowModel model) : model_(std::move(model)) {}

    const ChowModel& model() const noexcept { return model_; }
    void set(std::array<std::size_t, 3> t, const Scalar& v);
    /// Structural zeros return 0; other triples without an entry throw MissingRelationError.
    Scalar value(std::array<std::size_t, 3> t) const;
    Scalar value(const std::string& a, const std::string& b, const std::string& c) const;
    const std::map<std::array<std::size_t, 3>, Scalar>& entries() const noexcept { return values_; }

private:
    ChowModel model_;
    std::map<std::array<std::size_t, 3>, Scalar> values_;
};

/// Parameter names available in expressions: mu, nu, nu0 .. nu9.
const std::vector<std::string>& chow_parameters();

/// Parses an expression in the parameters and the model's class names.
Polynomial parse_chow_expression(const std::string& text, const ChowModel& model);
/// Parses a polynomial in the parameters only.
Polynomial parse_parameter_polynomial(const std::string& text);
std::string parameter_polynomial_text(const Polynomial& p);

/// Replaces every class-degree-3 monomial by its triple product. Terms of class degree 1 or 2
/// throw DimensionError; a missing entry throws MissingRelationError.
Polynomial expand(const Polynomial& expr, const RelationTable& table);

struct IdentityCheck {
    bool holds = false;
    /// expand(expr) - expected.
    Polynomial difference;
    Polynomial expanded;
};

IdentityCheck verify_identity(const Polynomial& expr, const RelationTable& table, const Polynomial& expected);

struct GoldenIdentity {
    std::string name;
    /// Model tag, or "all" for identities that hold on every model.
    std::string table;
    std::string expression;
    std::string expected;
    /// Restatements of another entry in a different algebraic form.
    bool restatement = false;
};

struct GoldenSet {
    std::vector<ChowModel> models;
    std::vector<GoldenIdentity> identities;
};

/// Reads {"models": {tag: {"classes": [{"name", "kind"}], "incidences": [[point, curve]]}},
/// "identities": [{"name", "table", "expression", "expected", "restatement"?}]}.
GoldenSet golden_from_json(const nlohmann::json& j);

struct SolvedTables {
    std::map<std::string, RelationTable> tables;
    std::size_t equations = 0;
    std::size_t independent = 0;
    /// Equations implied by the others; at least one is required.
    std::size_t redundant() const noexcept { return equations - independent; }
};

/// Solves, per model, the linear system on the unknown triple products given by matching
/// coefficients of every identity. Throws RelationSystemError when a system is inconsistent,
/// leaves an entry undetermined, or has no redundant equation overall.
SolvedTables solve_relation_table(const GoldenSet& golden);

}  // namespace dquad
