#pragma once

#include "dquad/form.hpp"
#include "dquad/groebner.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dquad {

/// Point of projective space, scaled so that its first nonzero coordinate is 1.
class ProjectivePoint {
public:
    /// Throws DomainError for the zero vector or mixed domains.
    explicit ProjectivePoint(std::vector<Scalar> coords);

    const std::vector<Scalar>& coords() const noexcept { return coords_; }
    std::size_t size() const noexcept { return coords_.size(); }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    Domain domain() const { return coords_.front().domain(); }
    ProjectivePoint to_domain(const Domain& d) const;
    /// "(1 : 0 : 3/2 : ...)"
    std::string to_string() const;

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b);
    friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) { return !(a == b); }

private:
    std::vector<Scalar> coords_;
};

enum class NodeVerdict { Node, WorseThanNode, SmoothPoint, NotOnS };

std::string to_string(NodeVerdict v);

struct NodeReport {
    ProjectivePoint point;
    bool on_S = false;
    int jacobian_rank = 0;
    /// Rank of the quadratic cone of S at the point; only computed when jacobian_rank is 1.
    int hessian_rank_local = 0;
    NodeVerdict verdict = NodeVerdict::NotOnS;
};

/// (Q, W, the ten 2x2 minors of the Jacobian of (Q, W)) for S = Q ∩ W in P^4.
Ideal singular_scheme_ideal(const Form& q, const Form& w);

/// Classifies p on S = Q ∩ W. At a point where the Jacobian has rank 1, coordinates are
/// changed so that p = (1:0:0:0:0) and the tangent hyperplane of Q is {y4 = 0}; Q is then
/// solved for y4 to second order and substituted into W, and the rank of the resulting
/// quadratic form in y1, y2, y3 is reported. Throws SmoothnessError when grad Q(p) = 0 and
/// DomainError when p does not live in the domain of Q and W.
NodeReport verify_node(const Form& q, const Form& w, const ProjectivePoint& p);

struct NodeCountOptions {
    /// Domain of the computation; unset means rationals with a prime-field fallback.
    std::optional<Domain> domain;
    std::uint64_t seed = 1;
    GroebnerOptions groebner;
    int max_chart_attempts = 8;
};

struct NodeCount {
    /// Length of the singular scheme; equals the number of nodes when S is nodal.
    std::size_t count = 0;
    /// Number of distinct geometric points; equals `count` exactly when the scheme is reduced.
    std::size_t distinct_points = 0;
    Domain domain = Domain::rationals();
    /// True when the count was taken modulo a random prime.
    bool probabilistic = false;
    /// The chart used is {chart != 0}; no point of the locus lies on chart = 0.
    Form chart = Form::zero(5, 1);
    /// Homogeneous ideal of the locus (saturated by the irrelevant ideal), over `domain`.
    Ideal saturated = Ideal(5, {});
    /// Reason for a prime-field fallback, empty otherwise.
    std::string note;
};

/// Number of singular points of S = Q ∩ W counted with scheme length. A random chart
/// (seeded) is chosen so that the locus avoids its hyperplane at infinity, which is checked
/// by a second pass on that hyperplane. Throws NotZeroDimensionalError when the locus is
/// positive-dimensional.
NodeCount count_nodes(const Form& q, const Form& w, const NodeCountOptions& options = {});

}  // namespace dquad
