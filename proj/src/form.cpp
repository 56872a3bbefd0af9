#include "dquad/form.hpp"

#include "dquad/errors.hpp"

namespace dquad {

Form::Form(Polynomial p, std::optional<int> degree)
    : poly_(p.order() == MonomialOrder::grevlex() ? std::move(p) : p.with_order(MonomialOrder::grevlex())),
      degree_(0) {
    auto ds = poly_.degrees();
    if (ds.size() > 1) throw InhomogeneousError(ds[0], ds[1]);
    if (ds.empty()) {
        degree_ = degree.value_or(0);
    } else {
        if (degree && *degree != ds[0])
            throw DimensionError("form has degree " + std::to_string(ds[0]) + ", expected " +
                                 std::to_string(*degree));
        degree_ = ds[0];
    }
    if (degree_ < 0) throw DimensionError("negative form degree");
}

Form Form::zero(int nvars, int degree) { return Form(Polynomial(nvars), degree); }

Form operator+(const Form& a, const Form& b) {
    if (a.degree_ != b.degree_)
        throw DimensionError("adding forms of degrees " + std::to_string(a.degree_) + " and " +
                             std::to_string(b.degree_));
    return Form(a.poly_ + b.poly_, a.degree_);
}

Form operator-(const Form& a, const Form& b) {
    if (a.degree_ != b.degree_)
        throw DimensionError("subtracting forms of degrees " + std::to_string(a.degree_) + " and " +
                             std::to_string(b.degree_));
    return Form(a.poly_ - b.poly_, a.degree_);
}

Form operator*(const Form& a, const Form& b) { return Form(a.poly_ * b.poly_, a.degree_ + b.degree_); }

Form Form::pow(unsigned e) const {
    if (e == 0) {
        auto d = poly_.domain();
        return Form(Polynomial::constant(nvars(), (d ? *d : Domain::rationals()).one()), 0);
    }
    return Form(poly_.pow(e), degree_ * static_cast<int>(e));
}

Scalar Form::evaluate(std::span<const Scalar> point) const { return poly_.evaluate(point); }

Form Form::partial_derivative(int var) const {
    return Form(poly_.derivative(var), degree_ > 0 ? degree_ - 1 : 0);
}

Form Form::substitute_linear(const Matrix& m) const {
    const auto n = static_cast<std::size_t>(nvars());
    if (m.rows() != n || m.cols() != n) throw DimensionError("substitution matrix must be n x n");
    if (rank(m) != n) throw SingularMatrixError("linear substitution matrix is singular");
    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Term> ts;
        for (std::size_t j = 0; j < n; ++j)
            if (!m(i, j).is_zero()) ts.push_back({Monomial::variable(static_cast<int>(j)), m(i, j)});
        images.push_back(Polynomial::from_terms(nvars(), std::move(ts)));
    }
    return Form(poly_.substitute(images), degree_);
}

Form linear_form(std::span<const Scalar> coeffs) {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) ts.push_back({Monomial::variable(static_cast<int>(i)), coeffs[i]});
    return Form(Polynomial::from_terms(static_cast<int>(coeffs.size()), std::move(ts)), 1);
}

Form quadratic_form(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("quadratic form matrix must be square");
    std::vector<Term> ts;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            Monomial mono = Monomial::variable(static_cast<int>(i)) * Monomial::variable(static_cast<int>(j));
            ts.push_back({mono, m(i, j)});
        }
    return Form(Polynomial::from_terms(static_cast<int>(m.rows()), std::move(ts)), 2);
}

Matrix jacobian_at(std::span<const Form> forms, std::span<const Scalar> point) {
    if (forms.empty()) throw DimensionError("empty form list");
    if (point.empty()) throw DimensionError("empty point");
    const auto n = static_cast<std::size_t>(forms[0].nvars());
    Matrix j(forms.size(), n, point[0].domain());
    for (std::size_t r = 0; r < forms.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) j(r, c) = forms[r].partial_derivative(static_cast<int>(c)).evaluate(point);
    return j;
}

std::vector<Form> jacobian_minors(const Form& f, const Form& g) {
    if (f.nvars() != g.nvars()) throw DimensionError("forms live in rings of different size");
    const int n = f.nvars();
    std::vector<Form> df, dg;
    for (int i = 0; i < n; ++i) {
        df.push_back(f.partial_derivative(i));
        dg.push_back(g.partial_derivative(i));
    }
    std::vector<Form> minors;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            minors.push_back(df[static_cast<std::size_t>(i)] * dg[static_cast<std::size_t>(j)] -
                             df[static_cast<std::size_t>(j)] * dg[static_cast<std::size_t>(i)]);
    return minors;
}

}  // namespace dquad
