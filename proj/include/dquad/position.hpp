#pragma once

#include "dquad/singularities.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace dquad {

struct SubspaceMax {
    std::size_t count = 0;
    /// Indices of the points in one maximal k-plane, ascending.
    std::vector<std::size_t> witness;
};

/// Largest number of points lying in a common k-plane of P^4, k in {1, 2, 3}. Enumerates the
/// (k+1)-subsets spanning a k-plane (at most 16 points). Throws DuplicatePointError.
SubspaceMax max_on_subspace(const std::vector<ProjectivePoint>& points, int k);

enum class CubicFlag { None, Suspect, Confirmed };

std::string to_string(CubicFlag f);

struct TwistedCubicResult {
    CubicFlag flag = CubicFlag::None;
    /// Dimension of the space of quadrics of the P^3 through the 10 points.
    std::size_t quadric_kernel_dim = 0;
};

/// For exactly 10 points spanning a P^3: at least 3 independent quadrics through them makes a
/// twisted cubic a suspect. In exact mode the base locus of all those quadrics is computed in a
/// random chart (seeded) and confirmed when it is a curve meeting a generic plane in 3 points.
TwistedCubicResult twisted_cubic_test(const std::vector<ProjectivePoint>& points, bool exact = false,
                                      std::uint64_t seed = 1);

struct EkWitness {
    int k = 0;
    std::vector<std::size_t> points;
    /// Linear forms cutting out the span of the witness points.
    std::vector<Form> equations;
};

struct PositionReport {
    /// Every k-plane (k = 1, 2, 3) holds at most d*k + 1 of the points.
    bool ek_pass = true;
    /// Smallest failing k and its points.
    std::optional<EkWitness> ek_witness;
    SubspaceMax collinear;
    SubspaceMax coplanar;
    SubspaceMax hyperplane;
    /// Some plane holding at least 7 of the points has 7 of them on a conic.
    bool conic_flag = false;
    std::vector<std::size_t> conic_witness;
    /// Strongest twisted-cubic result over the 10-subsets of hyperplanes holding 10 or more points.
    CubicFlag twisted_cubic_flag = CubicFlag::None;
    std::vector<std::size_t> twisted_cubic_witness;
};

struct PositionOptions {
    int degree = 3;
    bool exact_twisted_cubic = false;
    std::uint64_t seed = 1;
};

PositionReport ek_check(const std::vector<ProjectivePoint>& points, const PositionOptions& options = {});

}  // namespace dquad
