#pragma once

#include "dquad/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace dquad {

enum class Ambient { Projective, AffineChart };

/// Generator set of a polynomial ideal. Zero generators are dropped on construction.
class Ideal {
public:
    Ideal(int nvars, std::vector<Polynomial> generators, Ambient ambient = Ambient::Projective);

    int nvars() const noexcept { return nvars_; }
    Ambient ambient() const noexcept { return ambient_; }
    const std::vector<Polynomial>& generators() const noexcept { return gens_; }
    bool is_homogeneous() const noexcept;

private:
    int nvars_;
    Ambient ambient_;
    std::vector<Polynomial> gens_;
};

struct GroebnerOptions {
    /// Cap on S-pairs processed before a ResourceLimitError.
    std::size_t max_pairs = 200000;
    /// Cap on the bit size of any rational coefficient in a new basis element.
    std::size_t max_coeff_bits = 60000;
};

class GroebnerBasis {
public:
    GroebnerBasis(int nvars, MonomialOrder order, std::vector<Polynomial> elements, bool reduced);

    int nvars() const noexcept { return nvars_; }
    const MonomialOrder& order() const noexcept { return order_; }
    const std::vector<Polynomial>& elements() const noexcept { return elements_; }
    bool is_reduced() const noexcept { return reduced_; }
    /// True when the basis is {1}.
    bool is_unit() const noexcept;
    std::vector<Monomial> leading_monomials() const;

    /// Statistics from the run that produced the basis.
    std::size_t pairs_processed = 0;
    std::size_t pairs_pruned = 0;

private:
    int nvars_;
    MonomialOrder order_;
    std::vector<Polynomial> elements_;
    bool reduced_;
};

/// Reduced Groebner basis by Buchberger's algorithm with the normal selection strategy and
/// the Gebauer-Moeller implementation of both pair criteria.
GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order = MonomialOrder::grevlex(),
                         const GroebnerOptions& options = {});

/// Full remainder of multivariate division by the basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// S-polynomial of two polynomials sharing a ring.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger's criterion: every S-polynomial of basis pairs has normal form zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

/// I : f^infinity via an extra variable t, the generator t*f - 1 and a block order that
/// eliminates t. The result is generated by a degrevlex Groebner basis of the saturation.
Ideal saturate(const Ideal& ideal, const Polynomial& f, const GroebnerOptions& options = {});

/// Monomials outside the leading-term ideal. Throws NotZeroDimensionalError when infinite.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

/// Length of the affine zero-dimensional scheme: the number of standard monomials.
std::size_t zero_dim_degree(const GroebnerBasis& gb);

/// Krull dimension of the quotient ring; -1 for the unit ideal.
int ideal_dimension(const GroebnerBasis& gb);

/// Dimension of the degree-d slice of a homogeneous ideal, computed as the rank of the
/// coefficient matrix of all products m*g of degree d.
std::size_t graded_component_dim(const Ideal& ideal, int d);

/// Whether a homogeneous ideal has no projective zeros.
bool is_irrelevant(const Ideal& ideal, const GroebnerOptions& options = {});

/// Affine part of a projective scheme in the chart {l = 1}, l = x0 + c1 x1 + ... + c_{n-1} x_{n-1},
/// with affine coordinates x1..x_{n-1}.
struct ChartedLocus {
    Polynomial chart;
    /// Krull dimension of the affine part; -1 when it is empty.
    int dimension = -1;
    /// Length of the affine part when it is zero-dimensional.
    std::size_t length = 0;
    /// Whether the scheme meets {l = 0}; only checked for zero-dimensional affine parts.
    bool meets_infinity = false;
    /// Homogenized affine basis: the saturation of the input by l and by the irrelevant ideal.
    Ideal saturated = Ideal(0, {});
    /// Reduced grevlex basis of the affine part in x1..x_{n-1}.
    std::optional<GroebnerBasis> affine;
};

/// `chart` holds c1..c_{n-1}. The input must be homogeneous.
ChartedLocus chart_locus(const Ideal& homogeneous, std::span<const Scalar> chart, const GroebnerOptions& options = {});

/// Draws charts with coefficients in [-30, 30] from `rng` until the scheme misses the hyperplane
/// at infinity, so that `length` is the length of the whole projective scheme. Throws
/// NotZeroDimensionalError for positive-dimensional schemes.
ChartedLocus projective_zero_dim_locus(const Ideal& homogeneous, std::mt19937_64& rng,
                                       const GroebnerOptions& options = {}, int attempts = 8);

/// Number of distinct geometric points of a zero-dimensional affine part: the degree of the
/// squarefree part of the minimal polynomial of a random linear form drawn from `rng`. Equals
/// `length` exactly when the affine part is reduced (with high probability over the form).
std::size_t distinct_point_count(const ChartedLocus& locus, std::mt19937_64& rng);

}  // namespace dquad
