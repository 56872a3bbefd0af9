#include "dquad/singularities.hpp"

#include "dquad/errors.hpp"
#include "dquad/matrix.hpp"

#include <random>

namespace dquad {

ProjectivePoint::ProjectivePoint(std::vector<Scalar> coords) : coords_(std::move(coords)) {
    std::size_t lead = coords_.size();
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) {
            lead = i;
            break;
        }
    if (lead == coords_.size()) throw DomainError("the zero vector is not a projective point");
    Scalar inv = coords_[lead].inverse();
    for (auto& c : coords_) c = c * inv;
}

ProjectivePoint ProjectivePoint::to_domain(const Domain& d) const {
    std::vector<Scalar> c;
    for (const auto& x : coords_) c.push_back(x.to_domain(d));
    return ProjectivePoint(std::move(c));
}

std::string ProjectivePoint::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += " : ";
        s += coords_[i].to_string();
    }
    return s + ")";
}

bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

std::string to_string(NodeVerdict v) {
    switch (v) {
        case NodeVerdict::Node: return "node";
        case NodeVerdict::WorseThanNode: return "worse-than-node";
        case NodeVerdict::SmoothPoint: return "smooth-point";
        case NodeVerdict::NotOnS: return "not-on-S";
    }
    return "unknown";
}

namespace {

void check_pair(const Form& q, const Form& w) {
    if (q.nvars() != 5 || w.nvars() != 5) throw DimensionError("Q and W must be forms in 5 variables");
    if (q.degree() != 2) throw DimensionError("Q must be a quadric, got degree " + std::to_string(q.degree()));
    if (w.degree() != 4) throw DimensionError("W must be a quartic, got degree " + std::to_string(w.degree()));
    if (q.is_zero()) throw DimensionError("Q is the zero form");
}

Domain domain_of(const Form& q, const Form& w) {
    auto dq = q.poly().domain();
    auto dw = w.poly().domain();
    if (dq && dw && !(*dq == *dw)) throw DomainError("Q and W have different coefficient domains");
    return dq ? *dq : Domain::rationals();
}

/// Coefficient of y_i * y_j (or y_i^2) in the homogeneous degree-2 part of an affine polynomial,
/// skipping terms that involve `skip`.
Matrix quadratic_part(const Polynomial& f, int nv, int skip, const Domain& d) {
    std::vector<int> keep;
    for (int i = 0; i < nv; ++i)
        if (i != skip) keep.push_back(i);
    Matrix h(keep.size(), keep.size(), d);
    for (const auto& t : f.terms()) {
        if (t.mono.degree() != 2 || t.mono[skip] != 0) continue;
        for (std::size_t a = 0; a < keep.size(); ++a)
            for (std::size_t b = a; b < keep.size(); ++b) {
                int ea = t.mono[keep[a]], eb = t.mono[keep[b]];
                if (a == b && ea == 2) h(a, a) = t.coeff + t.coeff;
                else if (a != b && ea == 1 && eb == 1) h(a, b) = h(b, a) = t.coeff;
            }
    }
    return h;
}

Scalar linear_coefficient(const Polynomial& f, int var) { return f.coefficient(Monomial::variable(var)); }

}  // namespace

Ideal singular_scheme_ideal(const Form& q, const Form& w) {
    check_pair(q, w);
    domain_of(q, w);
    std::vector<Polynomial> gens{q.poly(), w.poly()};
    for (const auto& m : jacobian_minors(q, w)) gens.push_back(m.poly());
    return Ideal(5, std::move(gens), Ambient::Projective);
}

NodeReport verify_node(const Form& q, const Form& w, const ProjectivePoint& p0) {
    check_pair(q, w);
    const Domain d = domain_of(q, w);
    if (p0.size() != 5) throw DimensionError("point must have 5 coordinates");
    ProjectivePoint p = p0;
    if (!(p.domain() == d)) {
        if (p.domain().is_rational() && !d.is_rational()) p = p.to_domain(d);
        else throw DomainError("point coordinates are not in " + d.name());
    }

    NodeReport report{p};
    const auto& x = p.coords();
    bool q_zero = q.evaluate(x).is_zero();
    report.on_S = q_zero && w.evaluate(x).is_zero();
    std::vector<Form> qw{q, w};
    Matrix jac = jacobian_at(qw, x);
    Matrix gq(1, 5, d);
    for (std::size_t j = 0; j < 5; ++j) gq(0, j) = jac(0, j);
    if (q_zero && gq.is_zero()) throw SmoothnessError("the quadric is singular at " + p.to_string());
    report.jacobian_rank = static_cast<int>(rank(jac));
    if (!report.on_S) return report;
    if (report.jacobian_rank == 2) {
        report.verdict = NodeVerdict::SmoothPoint;
        return report;
    }

    // Columns: p, three tangent directions completing p to a basis of ker grad Q(p), and a
    // direction v transverse to the tangent hyperplane.
    Matrix ker = kernel_basis(gq);
    std::vector<std::vector<Scalar>> cols{x};
    for (std::size_t k = 0; k < ker.cols() && cols.size() < 4; ++k) {
        auto trial = cols;
        trial.push_back(ker.column(k));
        if (rank(Matrix::from_rows(trial, d)) == trial.size()) cols = std::move(trial);
    }
    std::vector<Scalar> v(5, d.zero());
    for (std::size_t j = 0; j < 5; ++j)
        if (!gq(0, j).is_zero()) {
            v[j] = d.one();
            break;
        }
    cols.push_back(v);
    Matrix m = Matrix::from_rows(cols, d).transpose();

    // Chart y0 = 1: Q = c*y4 + q2 + ..., W = a*y4 + w2 + ...; on Q, y4 = -q2(y1, y2, y3, 0)/c + O(3).
    Polynomial qa = q.substitute_linear(m).poly().dehomogenize(0);
    Polynomial wa = w.substitute_linear(m).poly().dehomogenize(0);
    Scalar c = linear_coefficient(qa, 3);
    Scalar a = linear_coefficient(wa, 3);
    Matrix cone = quadratic_part(wa, 4, 3, d);
    Matrix q2 = quadratic_part(qa, 4, 3, d);
    Scalar lambda = a / c;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) cone(i, j) = cone(i, j) - lambda * q2(i, j);
    report.hessian_rank_local = static_cast<int>(rank(cone));
    report.verdict = report.hessian_rank_local == 3 ? NodeVerdict::Node : NodeVerdict::WorseThanNode;
    return report;
}

namespace {

NodeCount count_in(const Ideal& ideal, const Domain& d, std::mt19937_64& rng, const NodeCountOptions& options) {
    std::vector<Polynomial> local;
    for (const auto& g : ideal.generators()) local.push_back(g.to_domain(d));
    ChartedLocus l =
        projective_zero_dim_locus(Ideal(5, std::move(local)), rng, options.groebner, options.max_chart_attempts);
    NodeCount out;
    out.count = l.length;
    out.distinct_points = distinct_point_count(l, rng);
    out.domain = d;
    out.probabilistic = !d.is_rational();
    out.chart = Form(l.chart, 1);
    out.saturated = l.saturated;
    return out;
}

}  // namespace

NodeCount count_nodes(const Form& q, const Form& w, const NodeCountOptions& options) {
    Ideal ideal = singular_scheme_ideal(q, w);
    const Domain base = domain_of(q, w);
    std::mt19937_64 rng(options.seed);
    if (options.domain) return count_in(ideal, *options.domain, rng, options);
    if (!base.is_rational()) return count_in(ideal, base, rng, options);
    try {
        return count_in(ideal, base, rng, options);
    } catch (const ResourceLimitError& e) {
        Domain p = Domain::random_prime_field(rng);
        NodeCount out = count_in(ideal, p, rng, options);
        out.note = std::string("exact computation stopped (") + e.what() + "); counted modulo " +
                   std::to_string(p.prime());
        return out;
    }
}

}  // namespace dquad
