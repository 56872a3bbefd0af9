#include "dquad/chowverify.hpp"

#include "dquad/errors.hpp"
#include "dquad/matrix.hpp"
#include "dquad/parser.hpp"

#include <algorithm>
#include <set>

namespace dquad {

namespace {

constexpr int kParams = 12;

std::array<std::size_t, 3> sorted(std::array<std::size_t, 3> t) {
    std::sort(t.begin(), t.end());
    return t;
}

bool is_point(ClassKind k) {
    return k == ClassKind::PointExceptionalSmooth || k == ClassKind::PointExceptionalNode;
}

std::vector<std::string> expression_names(const ChowModel& model) {
    std::vector<std::string> names = chow_parameters();
    for (const auto& c : model.classes()) names.push_back(c.name);
    return names;
}

/// Parameter part and class triple of a term; `classes` empty for class degree 0.
void split_term(const Monomial& m, std::size_t nclasses, Monomial& params, std::vector<std::size_t>& classes) {
    params = Monomial();
    classes.clear();
    for (int i = 0; i < kParams; ++i)
        if (m[i] != 0) params.set(i, m[i]);
    for (std::size_t c = 0; c < nclasses; ++c)
        for (int e = 0; e < m[kParams + static_cast<int>(c)]; ++e) classes.push_back(c);
}

std::string triple_name(const ChowModel& model, std::array<std::size_t, 3> t) {
    std::string s;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i) s += ".";
        s += model.classes()[t[i]].name;
    }
    return s;
}

void check_ring(const Polynomial& expr, const ChowModel& model) {
    if (expr.nvars() != kParams + static_cast<int>(model.classes().size()))
        throw DimensionError("expression ring does not match model " + model.tag());
}

}  // namespace

std::string to_string(ClassKind k) {
    switch (k) {
        case ClassKind::HyperplanePullback: return "hyperplane-pullback";
        case ClassKind::PointExceptionalSmooth: return "point-exceptional-smooth";
        case ClassKind::PointExceptionalNode: return "point-exceptional-node";
        case ClassKind::CurveExceptional: return "curve-exceptional";
    }
    return "";
}

ClassKind class_kind_from_string(const std::string& s) {
    for (auto k : {ClassKind::HyperplanePullback, ClassKind::PointExceptionalSmooth, ClassKind::PointExceptionalNode,
                   ClassKind::CurveExceptional})
        if (to_string(k) == s) return k;
    throw Error("unknown class kind '" + s + "'");
}

ChowModel::ChowModel(std::string tag, std::vector<ClassSymbol> classes,
                     std::vector<std::pair<std::string, std::string>> incidences)
    : tag_(std::move(tag)), classes_(std::move(classes)) {
    if (classes_.empty()) throw DimensionError("model " + tag_ + " has no classes");
    if (kParams + classes_.size() > static_cast<std::size_t>(kMaxVars))
        throw DimensionError("model " + tag_ + " has too many classes");
    std::set<std::string> seen;
    for (const auto& c : classes_) {
        if (c.name.empty() || !seen.insert(c.name).second)
            throw Error("duplicate or empty class name '" + c.name + "' in model " + tag_);
        const auto& params = chow_parameters();
        if (std::find(params.begin(), params.end(), c.name) != params.end())
            throw Error("class name '" + c.name + "' clashes with a parameter");
    }
    for (const auto& [p, c] : incidences) {
        std::size_t i = index(p), j = index(c);
        if (!is_point(classes_[i].kind) || classes_[j].kind != ClassKind::CurveExceptional)
            throw Error("incidence " + p + "/" + c + " must pair a point-exceptional with a curve-exceptional class");
        incidences_.emplace_back(i, j);
    }
}

std::size_t ChowModel::index(const std::string& name) const {
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].name == name) return i;
    throw Error("unknown class '" + name + "' in model " + tag_);
}

bool ChowModel::incident(std::size_t point, std::size_t curve) const {
    return std::find(incidences_.begin(), incidences_.end(), std::pair{point, curve}) != incidences_.end();
}

bool ChowModel::structurally_zero(std::array<std::size_t, 3> t) const {
    std::set<std::size_t> points, curves;
    int pullbacks = 0, curve_factors = 0;
    for (std::size_t i : t) {
        if (i >= classes_.size()) throw DimensionError("class index out of range");
        ClassKind k = classes_[i].kind;
        if (k == ClassKind::HyperplanePullback) ++pullbacks;
        else if (is_point(k)) points.insert(i);
        else {
            curves.insert(i);
            ++curve_factors;
        }
    }
    if (pullbacks > 0 && !points.empty()) return true;
    if (curve_factors == 1) return true;
    if (points.size() > 1 || curves.size() > 1) return true;
    if (!points.empty() && !curves.empty()) return !incident(*points.begin(), *curves.begin());
    return false;
}

std::vector<std::array<std::size_t, 3>> ChowModel::unknown_triples() const {
    std::vector<std::array<std::size_t, 3>> out;
    std::size_t n = classes_.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            for (std::size_t c = b; c < n; ++c)
                if (!structurally_zero({a, b, c})) out.push_back({a, b, c});
    return out;
}

void RelationTable::set(std::array<std::size_t, 3> t, const Scalar& v) {
    t = sorted(t);
    if (model_.structurally_zero(t)) {
        if (!v.is_zero()) throw Error("triple " + triple_name(model_, t) + " vanishes in model " + model_.tag());
        return;
    }
    values_[t] = v;
}

Scalar RelationTable::value(std::array<std::size_t, 3> t) const {
    t = sorted(t);
    if (model_.structurally_zero(t)) return Scalar();
    auto it = values_.find(t);
    if (it == values_.end())
        throw MissingRelationError("missing relation " + triple_name(model_, t) + " in model " + model_.tag());
    return it->second;
}

Scalar RelationTable::value(const std::string& a, const std::string& b, const std::string& c) const {
    return value({model_.index(a), model_.index(b), model_.index(c)});
}

const std::vector<std::string>& chow_parameters() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v{"mu", "nu"};
        for (int i = 0; i < 10; ++i) v.push_back("nu" + std::to_string(i));
        return v;
    }();
    return names;
}

Polynomial parse_chow_expression(const std::string& text, const ChowModel& model) {
    return parse_polynomial(text, expression_names(model), Domain::rationals());
}

Polynomial parse_parameter_polynomial(const std::string& text) {
    return parse_polynomial(text, chow_parameters(), Domain::rationals());
}

std::string parameter_polynomial_text(const Polynomial& p) { return p.to_string(chow_parameters()); }

Polynomial expand(const Polynomial& expr, const RelationTable& table) {
    const ChowModel& model = table.model();
    check_ring(expr, model);
    std::vector<Term> out;
    Monomial params;
    std::vector<std::size_t> classes;
    for (const auto& t : expr.terms()) {
        split_term(t.mono, model.classes().size(), params, classes);
        if (classes.empty()) {
            out.push_back({params, t.coeff});
        } else if (classes.size() == 3) {
            Scalar v = table.value({classes[0], classes[1], classes[2]});
            if (!v.is_zero()) out.push_back({params, t.coeff * v});
        } else {
            throw DimensionError("term of class degree " + std::to_string(classes.size()) +
                                 " cannot be evaluated to a number");
        }
    }
    return Polynomial::from_terms(kParams, std::move(out));
}

IdentityCheck verify_identity(const Polynomial& expr, const RelationTable& table, const Polynomial& expected) {
    if (expected.nvars() != kParams) throw DimensionError("expected value must be a polynomial in the parameters");
    IdentityCheck r;
    r.expanded = expand(expr, table);
    r.difference = r.expanded - expected;
    r.holds = r.difference.is_zero();
    return r;
}

GoldenSet golden_from_json(const nlohmann::json& j) {
    GoldenSet g;
    try {
        for (const auto& [tag, m] : j.at("models").items()) {
            std::vector<ClassSymbol> classes;
            for (const auto& c : m.at("classes"))
                classes.push_back({c.at("name").get<std::string>(), class_kind_from_string(c.at("kind").get<std::string>())});
            std::vector<std::pair<std::string, std::string>> inc;
            if (m.contains("incidences"))
                for (const auto& p : m.at("incidences")) inc.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
            g.models.emplace_back(tag, std::move(classes), std::move(inc));
        }
        for (const auto& e : j.at("identities")) {
            GoldenIdentity id;
            id.name = e.at("name").get<std::string>();
            id.table = e.at("table").get<std::string>();
            id.expression = e.at("expression").get<std::string>();
            id.expected = e.at("expected").get<std::string>();
            id.restatement = e.value("restatement", false);
            g.identities.push_back(std::move(id));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw Error(std::string("malformed golden identity file: ") + ex.what());
    }
    return g;
}

SolvedTables solve_relation_table(const GoldenSet& golden) {
    for (const auto& id : golden.identities) {
        bool known = id.table == "all";
        for (const auto& m : golden.models) known = known || m.tag() == id.table;
        if (!known) throw Error("identity " + id.name + " refers to unknown model " + id.table);
    }
    SolvedTables out;
    const Domain q = Domain::rationals();
    for (const auto& model : golden.models) {
        auto unknowns = model.unknown_triples();
        std::map<std::array<std::size_t, 3>, std::size_t> column;
        for (std::size_t i = 0; i < unknowns.size(); ++i) column[unknowns[i]] = i;
        std::size_t n = unknowns.size();

        std::vector<std::vector<Scalar>> rows;
        for (const auto& id : golden.identities) {
            if (id.table != "all" && id.table != model.tag()) continue;
            Polynomial expr = parse_chow_expression(id.expression, model);
            Polynomial expected = parse_parameter_polynomial(id.expected);
            // One equation per parameter monomial: coefficients of the unknowns | right-hand side.
            std::map<std::vector<int>, std::vector<Scalar>> eq;
            auto row = [&](const Monomial& m) -> std::vector<Scalar>& {
                auto& r = eq[m.exponents(kParams)];
                if (r.empty()) r.assign(n + 1, q.zero());
                return r;
            };
            Monomial params;
            std::vector<std::size_t> classes;
            for (const auto& t : expr.terms()) {
                split_term(t.mono, model.classes().size(), params, classes);
                if (classes.empty()) {
                    row(params)[n] -= t.coeff;
                } else if (classes.size() == 3) {
                    auto key = sorted({classes[0], classes[1], classes[2]});
                    if (model.structurally_zero(key)) continue;
                    row(params)[column.at(key)] += t.coeff;
                } else {
                    throw DimensionError("identity " + id.name + " has a term of class degree " +
                                         std::to_string(classes.size()));
                }
            }
            for (const auto& t : expected.terms()) row(t.mono)[n] += t.coeff;
            for (auto& [k, r] : eq)
                if (std::any_of(r.begin(), r.end(), [](const Scalar& s) { return !s.is_zero(); }))
                    rows.push_back(std::move(r));
        }

        auto red = rref(Matrix::from_rows(rows, q));
        if (!red.pivots.empty() && red.pivots.back() == n)
            throw RelationSystemError("relation system for model " + model.tag() + " is inconsistent");
        if (red.pivots.size() < n) {
            std::string free;
            std::set<std::size_t> pivots(red.pivots.begin(), red.pivots.end());
            for (std::size_t c = 0; c < n; ++c)
                if (!pivots.count(c)) free += (free.empty() ? "" : ", ") + triple_name(model, unknowns[c]);
            throw RelationSystemError("relation system for model " + model.tag() + " leaves " + free + " undetermined");
        }
        RelationTable table(model);
        for (std::size_t r = 0; r < red.pivots.size(); ++r) table.set(unknowns[red.pivots[r]], red.reduced(r, n));
        out.equations += rows.size();
        out.independent += red.pivots.size();
        out.tables.emplace(model.tag(), std::move(table));
    }
    if (out.redundant() == 0) throw RelationSystemError("relation system has no redundant equation");
    return out;
}

}  // namespace dquad
