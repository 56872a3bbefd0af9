#pragma once

#include "dquad/matrix.hpp"
#include "dquad/polynomial.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dquad {

/// Homogeneous polynomial with an explicit degree. The zero form keeps its declared degree.
/// Terms are always stored in degrevlex order.
class Form {
public:
    /// Throws InhomogeneousError if `p` mixes degrees and DimensionError if a nonzero `p`
    /// disagrees with `degree`.
    Form(Polynomial p, std::optional<int> degree = std::nullopt);
    static Form zero(int nvars, int degree);

    int nvars() const noexcept { return poly_.nvars(); }
    int degree() const noexcept { return degree_; }
    bool is_zero() const noexcept { return poly_.is_zero(); }
    const Polynomial& poly() const noexcept { return poly_; }
    const std::vector<Term>& terms() const noexcept { return poly_.terms(); }

    Form operator-() const { return Form(-poly_, degree_); }
    Form scaled(const Scalar& c) const { return Form(poly_.scaled(c), degree_); }
    Form pow(unsigned e) const;

    Scalar evaluate(std::span<const Scalar> point) const;
    Form partial_derivative(int var) const;
    /// (f o M)(y) = f(M y). Throws SingularMatrixError unless M is invertible.
    Form substitute_linear(const Matrix& m) const;
    Form to_domain(const Domain& d) const { return Form(poly_.to_domain(d), degree_); }

    std::string to_string() const { return poly_.to_string(); }

    friend Form operator+(const Form& a, const Form& b);
    friend Form operator-(const Form& a, const Form& b);
    friend Form operator*(const Form& a, const Form& b);
    friend bool operator==(const Form& a, const Form& b) { return a.degree_ == b.degree_ && a.poly_ == b.poly_; }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

private:
    Polynomial poly_;
    int degree_;
};

/// Linear form sum_i c_i x_i.
Form linear_form(std::span<const Scalar> coeffs);

/// Quadric whose symmetric coefficient matrix is `m` up to the usual factor: sum_ij m_ij x_i x_j.
Form quadratic_form(const Matrix& m);

/// Row i holds the gradient of forms[i] at `point`.
Matrix jacobian_at(std::span<const Form> forms, std::span<const Scalar> point);

/// The 2x2 minors of the Jacobian of (f, g), in lexicographic order of column pairs.
std::vector<Form> jacobian_minors(const Form& f, const Form& g);

}  // namespace dquad
