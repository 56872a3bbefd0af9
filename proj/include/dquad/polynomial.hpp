#pragma once

#include "dquad/monomial.hpp"
#include "dquad/scalar.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dquad {

struct Term {
    Monomial mono;
    Scalar coeff;
};

/// Sparse multivariate polynomial. Terms are kept sorted strictly descending under the
/// polynomial's monomial order and never carry a zero coefficient.
class Polynomial {
public:
    explicit Polynomial(int nvars = 0, MonomialOrder order = MonomialOrder::grevlex());

    static Polynomial constant(int nvars, const Scalar& c, MonomialOrder order = MonomialOrder::grevlex());
    static Polynomial variable(int nvars, int index, const Domain& domain,
                               MonomialOrder order = MonomialOrder::grevlex());
    /// Combines like terms, drops zeros and sorts.
    static Polynomial from_terms(int nvars, std::vector<Term> terms,
                                 MonomialOrder order = MonomialOrder::grevlex());

    int nvars() const noexcept { return nvars_; }
    const MonomialOrder& order() const noexcept { return order_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    const Term& leading() const;
    const Monomial& lm() const { return leading().mono; }
    const Scalar& lc() const { return leading().coeff; }

    /// Maximum term degree; -1 for the zero polynomial.
    int total_degree() const noexcept;
    bool is_homogeneous() const noexcept;
    /// Distinct term degrees, ascending.
    std::vector<int> degrees() const;
    /// Coefficient domain of the terms, if any.
    std::optional<Domain> domain() const;
    /// Largest coefficient bit size.
    std::size_t max_coeff_bits() const noexcept;
    Scalar coefficient(const Monomial& m) const;

    Polynomial with_order(MonomialOrder order) const;
    Polynomial to_domain(const Domain& d) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial mul_term(const Monomial& m, const Scalar& c) const;
    /// this - c * m * g, the elementary reduction step.
    void sub_mul_term(const Monomial& m, const Scalar& c, const Polynomial& g);
    Polynomial pow(unsigned e) const;
    Polynomial monic() const;

    Scalar evaluate(std::span<const Scalar> point) const;
    Polynomial derivative(int var) const;
    /// Replace x_i by images[i]; all images share their ring, which becomes the result's ring.
    Polynomial substitute(std::span<const Polynomial> images) const;
    /// Set x_var = 1 and drop that variable.
    Polynomial dehomogenize(int var) const;
    /// Insert a new variable at position `var` so that every term has degree `degree`
    /// (default: the total degree).
    Polynomial homogenize(int var, std::optional<int> degree = std::nullopt) const;
    /// Move variable i to position map[i] of a ring with `nvars` variables.
    Polynomial remap(int nvars, std::span<const int> map) const;

    /// Text in the parser's grammar using `names` (default x0, x1, ...).
    std::string to_string(std::span<const std::string> names = {}) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void check_ring(const Polynomial& o) const;
    int nvars_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

inline Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
inline Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

std::string default_variable_name(int i);

}  // namespace dquad
