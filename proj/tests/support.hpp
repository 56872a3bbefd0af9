#pragma once

// Random generators shared by the property tests.

#include "dquad/form.hpp"
#include "dquad/matrix.hpp"
#include "dquad/monomial.hpp"
#include "dquad/parser.hpp"
#include "dquad/singularities.hpp"

#include <random>
#include <vector>

namespace dquad::testing {

inline Scalar random_rational(std::mt19937_64& rng, const Domain& d, int range = 5, bool allow_fraction = true) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, allow_fraction ? 3 : 1);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return d.from_rational(q);
}

inline Form random_form(std::mt19937_64& rng, int nvars, int degree, const Domain& d, double density = 0.6,
                        int range = 5) {
    std::bernoulli_distribution keep(density);
    std::vector<Term> ts;
    for (const auto& m : monomial_basis(nvars, degree))
        if (keep(rng)) ts.push_back({m, random_rational(rng, d, range)});
    return Form(Polynomial::from_terms(nvars, std::move(ts)), degree);
}

inline std::vector<Scalar> random_point(std::mt19937_64& rng, int n, const Domain& d, int range = 5) {
    std::vector<Scalar> p;
    for (int i = 0; i < n; ++i) p.push_back(random_rational(rng, d, range));
    return p;
}

inline Matrix random_invertible(std::mt19937_64& rng, int n, const Domain& d, int range = 3) {
    std::uniform_int_distribution<int> e(-range, range);
    for (;;) {
        Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), d);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = d.from_int(e(rng));
        if (rank(m) == static_cast<std::size_t>(n)) return m;
    }
}

/// The smooth quadric x0*x3 - x1*x2 + x4^2 used throughout the tests.
inline Form standard_quadric(const Domain& d = Domain::rationals()) {
    return parse_form("x0*x3 - x1*x2 + x4^2", 5, d);
}

/// Random rational point of the standard quadric: pick x0 != 0, x1, x2, x4 and solve for x3.
inline ProjectivePoint random_point_on_quadric(std::mt19937_64& rng, int range = 4) {
    const Domain d = Domain::rationals();
    std::uniform_int_distribution<int> e(-range, range);
    for (;;) {
        int x0 = e(rng), x1 = e(rng), x2 = e(rng), x4 = e(rng);
        if (x0 == 0) continue;
        mpq_class x3(x1 * x2 - x4 * x4, x0);
        x3.canonicalize();
        return ProjectivePoint({d.from_int(x0), d.from_int(x1), d.from_int(x2), d.from_rational(x3), d.from_int(x4)});
    }
}

inline std::vector<ProjectivePoint> distinct_points_on_quadric(std::mt19937_64& rng, std::size_t k) {
    std::vector<ProjectivePoint> pts;
    while (pts.size() < k) {
        ProjectivePoint p = random_point_on_quadric(rng);
        bool dup = false;
        for (const auto& o : pts) dup = dup || o == p;
        if (!dup) pts.push_back(p);
    }
    return pts;
}

/// Random quartic W with W(p) = 0 and grad W(p) proportional to grad Q(p) at every given point
/// of Q: a random integer combination of the solutions of these linear conditions.
inline Form quartic_singular_at(std::mt19937_64& rng, const Form& q, const std::vector<ProjectivePoint>& pts,
                                int range = 3) {
    const Domain d = Domain::rationals();
    auto basis = monomial_basis(5, 4);
    std::vector<std::vector<Form>> grads(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Form m(Polynomial::from_terms(5, {Term{basis[i], d.one()}}), 4);
        for (int v = 0; v < 5; ++v) grads[i].push_back(m.partial_derivative(v));
    }
    std::vector<std::vector<Scalar>> rows;
    for (const auto& p : pts) {
        std::vector<Form> qq{q};
        Matrix tangent = kernel_basis(jacobian_at(qq, p.coords()));
        std::vector<std::vector<Scalar>> gm;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<Scalar> g;
            for (int v = 0; v < 5; ++v) g.push_back(grads[i][static_cast<std::size_t>(v)].evaluate(p.coords()));
            gm.push_back(std::move(g));
        }
        for (std::size_t c = 0; c < tangent.cols(); ++c) {
            std::vector<Scalar> row;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                Scalar s = d.zero();
                for (std::size_t v = 0; v < 5; ++v) s = s + gm[i][v] * tangent(v, c);
                row.push_back(s);
            }
            rows.push_back(std::move(row));
        }
    }
    Matrix k = kernel_basis(Matrix::from_rows(rows, d));
    std::uniform_int_distribution<int> e(-range, range);
    std::vector<Scalar> weights;
    for (std::size_t c = 0; c < k.cols(); ++c) weights.push_back(d.from_int(e(rng)));
    std::vector<Term> ts;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Scalar s = d.zero();
        for (std::size_t c = 0; c < k.cols(); ++c) s = s + k(i, c) * weights[c];
        ts.push_back({basis[i], s});
    }
    return Form(Polynomial::from_terms(5, std::move(ts)), 4);
}

/// Rational member of the family W = f2^2 + f1*f3 on the standard quadric. On the hyperplane
/// f1 = x4 = 0 the quadric is P1 x P1 via x = (s0 t0, s0 t1, s1 t0, s1 t1), and
/// x0 - c x1 - a x2 + a c x3 cuts the lines s = a and t = c. f2 cuts {s = 1, 2} and {t = 1, -1},
/// f3 cuts {s = -1, 3, -2} and {t = 2, -2, 3}, so the 12 intersections are rational.
struct RationalFamilyInstance {
    Form q, f1, f2, f3;
    std::vector<ProjectivePoint> nodes;
};

inline RationalFamilyInstance rational_family_instance() {
    const Domain d = Domain::rationals();
    const std::string l11 = "(x0 - x1 - x2 + x3)", l2m1 = "(x0 + x1 - 2*x2 - 2*x3)";
    const std::string lm12 = "(x0 - 2*x1 + x2 - 2*x3)", l3m2 = "(x0 + 2*x1 - 3*x2 - 6*x3)",
                      lm23 = "(x0 - 3*x1 + 2*x2 - 6*x3)";
    RationalFamilyInstance r{standard_quadric(), parse_form("x4", 5),
                             parse_form(l11 + "*" + l2m1 + " + x4*(x0 + 2*x1 - x2 + 3*x3 - x4)", 5),
                             parse_form(lm12 + "*" + l3m2 + "*" + lm23 +
                                            " + x4*(x0^2 - x1*x3 + 2*x2^2 + x3*x4 - x1*x2 + 3*x0*x4)",
                                        5),
                             {}};
    auto node = [&](int s, int t) {
        return ProjectivePoint({d.from_int(s * t), d.from_int(s), d.from_int(t), d.one(), d.zero()});
    };
    for (int s : {1, 2})
        for (int t : {2, -2, 3}) r.nodes.push_back(node(s, t));
    for (int s : {-1, 3, -2})
        for (int t : {1, -1}) r.nodes.push_back(node(s, t));
    return r;
}

}  // namespace dquad::testing
