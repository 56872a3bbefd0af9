#include "dquad/position.hpp"

#include "dquad/errors.hpp"
#include "dquad/groebner.hpp"
#include "dquad/matrix.hpp"

#include <functional>
#include <random>
#include <set>

namespace dquad {

std::string to_string(CubicFlag f) {
    switch (f) {
        case CubicFlag::None: return "none";
        case CubicFlag::Suspect: return "suspect";
        case CubicFlag::Confirmed: return "confirmed";
    }
    return "unknown";
}

namespace {

using Index = std::vector<std::size_t>;

void for_each_subset(std::size_t n, std::size_t r, const std::function<void(const Index&)>& fn) {
    if (r > n) return;
    Index s(r);
    for (std::size_t i = 0; i < r; ++i) s[i] = i;
    while (true) {
        fn(s);
        std::size_t i = r;
        while (i > 0 && s[i - 1] == n - r + i - 1) --i;
        if (i == 0) return;
        ++s[i - 1];
        for (std::size_t j = i; j < r; ++j) s[j] = s[j - 1] + 1;
    }
}

Domain check_points(const std::vector<ProjectivePoint>& points) {
    if (points.empty()) throw DimensionError("no points given");
    const Domain d = points[0].domain();
    for (const auto& p : points) {
        if (p.size() != 5) throw DimensionError("points must have 5 coordinates");
        if (!(p.domain() == d)) throw DomainError("points have different coefficient domains");
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw DuplicatePointError("point " + points[i].to_string() + " is listed twice");
    return d;
}

Matrix rows_of(const std::vector<ProjectivePoint>& points, const Index& idx) {
    std::vector<std::vector<Scalar>> rows;
    for (auto i : idx) rows.push_back(points[i].coords());
    return Matrix::from_rows(rows, points[0].domain());
}

Index all_indices(std::size_t n) {
    Index s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = i;
    return s;
}

/// Maximal sets of points lying in a k-plane spanned by points of the list.
std::set<Index> flats(const std::vector<ProjectivePoint>& points, int k) {
    const std::size_t r = static_cast<std::size_t>(k) + 1;
    std::set<Index> out;
    if (rank(rows_of(points, all_indices(points.size()))) <= r) {
        out.insert(all_indices(points.size()));
        return out;
    }
    for_each_subset(points.size(), r, [&](const Index& s) {
        Matrix a = kernel_basis(rows_of(points, s));
        if (a.cols() != 5 - r) return;
        Index members;
        for (std::size_t i = 0; i < points.size(); ++i) {
            bool in = true;
            for (std::size_t c = 0; c < a.cols() && in; ++c) {
                Scalar dot = points[i].domain().zero();
                for (std::size_t j = 0; j < 5; ++j) dot += points[i][j] * a(j, c);
                in = dot.is_zero();
            }
            if (in) members.push_back(i);
        }
        out.insert(std::move(members));
    });
    return out;
}

std::vector<Form> span_equations(const std::vector<ProjectivePoint>& points, const Index& idx) {
    Matrix a = kernel_basis(rows_of(points, idx));
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t c = 0; c < a.cols(); ++c) rows.push_back(a.column(c));
    std::vector<Form> out;
    if (rows.empty()) return out;
    RrefResult rr = rref(Matrix::from_rows(rows, points[0].domain()));
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) out.push_back(linear_form(rr.reduced.row(i)));
    return out;
}

SubspaceMax largest(const std::set<Index>& fs) {
    SubspaceMax best;
    for (const auto& f : fs)
        if (f.size() > best.count) best = {f.size(), f};
    return best;
}

/// Coordinates of the points in a basis of their span: the pivot columns of the row echelon form.
std::vector<std::vector<Scalar>> span_coordinates(const std::vector<ProjectivePoint>& points, const Index& idx) {
    RrefResult rr = rref(rows_of(points, idx));
    std::vector<std::vector<Scalar>> out;
    for (auto i : idx) {
        std::vector<Scalar> c;
        for (auto j : rr.pivots) c.push_back(points[i][j]);
        out.push_back(std::move(c));
    }
    return out;
}

Scalar monomial_value(const Monomial& m, const std::vector<Scalar>& x) {
    Scalar v = x[0].domain().one();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (m[static_cast<int>(i)] > 0) v *= x[i].pow(static_cast<unsigned>(m[static_cast<int>(i)]));
    return v;
}

Matrix quadric_evaluation(const std::vector<std::vector<Scalar>>& coords, const std::vector<Monomial>& basis,
                          const Domain& d) {
    Matrix m(coords.size(), basis.size(), d);
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) m(i, j) = monomial_value(basis[j], coords[i]);
    return m;
}

bool confirm_twisted_cubic(const Matrix& kernel, const std::vector<Monomial>& basis, const Domain& d,
                           std::uint64_t seed) {
    std::vector<Polynomial> quadrics;
    for (std::size_t c = 0; c < kernel.cols(); ++c) {
        std::vector<Term> terms;
        for (std::size_t j = 0; j < basis.size(); ++j) terms.push_back({basis[j], kernel(j, c)});
        quadrics.push_back(Polynomial::from_terms(4, std::move(terms)));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<Scalar> chart;
    for (int i = 0; i < 3; ++i) chart.push_back(d.from_int(coef(rng)));
    ChartedLocus curve = chart_locus(Ideal(4, quadrics), chart);
    if (curve.dimension != 1) return false;
    // A generic plane meets a twisted cubic in 3 points.
    std::vector<Term> plane;
    for (int i = 0; i < 4; ++i) {
        int c = 0;
        while (c == 0) c = coef(rng);
        plane.push_back({Monomial::variable(i), d.from_int(c)});
    }
    quadrics.push_back(Polynomial::from_terms(4, std::move(plane)));
    try {
        return projective_zero_dim_locus(Ideal(4, quadrics), rng).length == 3;
    } catch (const NotZeroDimensionalError&) {
        return false;
    }
}

}  // namespace

SubspaceMax max_on_subspace(const std::vector<ProjectivePoint>& points, int k) {
    if (k < 1 || k > 3) throw DimensionError("subspace dimension must be 1, 2 or 3");
    check_points(points);
    return largest(flats(points, k));
}

TwistedCubicResult twisted_cubic_test(const std::vector<ProjectivePoint>& points, bool exact, std::uint64_t seed) {
    if (points.size() != 10) throw DimensionError("the twisted cubic test takes exactly 10 points");
    const Domain d = check_points(points);
    Index idx = all_indices(points.size());
    if (rank(rows_of(points, idx)) != 4) throw DimensionError("the 10 points must span a 3-space");
    auto basis = monomial_basis(4, 2);
    Matrix kernel = kernel_basis(quadric_evaluation(span_coordinates(points, idx), basis, d));
    TwistedCubicResult r;
    r.quadric_kernel_dim = kernel.cols();
    if (r.quadric_kernel_dim < 3) return r;
    r.flag = CubicFlag::Suspect;
    if (exact && confirm_twisted_cubic(kernel, basis, d, seed)) r.flag = CubicFlag::Confirmed;
    return r;
}

PositionReport ek_check(const std::vector<ProjectivePoint>& points, const PositionOptions& options) {
    check_points(points);
    PositionReport r;
    std::set<Index> lines = flats(points, 1), planes = flats(points, 2), spaces = flats(points, 3);
    r.collinear = largest(lines);
    r.coplanar = largest(planes);
    r.hyperplane = largest(spaces);
    const SubspaceMax* per_k[] = {&r.collinear, &r.coplanar, &r.hyperplane};
    for (int k = 1; k <= 3; ++k) {
        const SubspaceMax& m = *per_k[k - 1];
        if (m.count > static_cast<std::size_t>(options.degree * k + 1)) {
            r.ek_pass = false;
            r.ek_witness = EkWitness{k, m.witness, span_equations(points, m.witness)};
            break;
        }
    }

    const Domain d = points[0].domain();
    auto conic_basis = monomial_basis(3, 2);
    for (const auto& plane : planes) {
        if (plane.size() < 7 || r.conic_flag) continue;
        auto coords = span_coordinates(points, plane);
        if (coords[0].size() != 3) continue;
        for_each_subset(plane.size(), 7, [&](const Index& s) {
            if (r.conic_flag) return;
            std::vector<std::vector<Scalar>> sub;
            for (auto i : s) sub.push_back(coords[i]);
            if (rank(quadric_evaluation(sub, conic_basis, d)) < 6) {
                r.conic_flag = true;
                for (auto i : s) r.conic_witness.push_back(plane[i]);
            }
        });
    }

    for (const auto& space : spaces) {
        if (space.size() < 10 || r.twisted_cubic_flag == CubicFlag::Confirmed) continue;
        if (rank(rows_of(points, space)) != 4) continue;
        for_each_subset(space.size(), 10, [&](const Index& s) {
            if (r.twisted_cubic_flag == CubicFlag::Confirmed) return;
            std::vector<ProjectivePoint> sub;
            Index global;
            for (auto i : s) {
                sub.push_back(points[space[i]]);
                global.push_back(space[i]);
            }
            if (rank(rows_of(sub, all_indices(10))) != 4) return;
            CubicFlag f = twisted_cubic_test(sub, options.exact_twisted_cubic, options.seed).flag;
            if (f > r.twisted_cubic_flag) {
                r.twisted_cubic_flag = f;
                r.twisted_cubic_witness = global;
            }
        });
    }
    return r;
}

}  // namespace dquad
