#pragma once

#include "dquad/position.hpp"
#include "dquad/singularities.hpp"

#include "json.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dquad {

/// Branch quartics of the form W = f2^2 + f1 * f3.
struct SplitFamily {
    Form f1, f2, f3;
};

struct DoubleQuadricInput {
    Form q;
    Form w;
    /// Optional node list; every point must verify as a node.
    std::optional<std::vector<ProjectivePoint>> nodes;
    std::optional<SplitFamily> family;
    /// For the split family: the ideal (f1, f2, f3, Q) of the expected node locus.
    std::optional<Ideal> node_locus;
};

/// W = f2^2 + f1 * f3 with the family tag and node locus attached. Throws DimensionError on
/// degree mismatch and SmoothnessError when Q is singular.
DoubleQuadricInput construct_example(const Form& f1, const Form& f2, const Form& f3, const Form& q);

struct SplittingWitness {
    /// (W - f2^2) / f1.
    Form quotient;
    /// The two components of the preimage of {f1 = 0} on y^2 = W.
    std::array<std::string, 2> divisors;
    /// y -> -y maps each component to the other.
    bool exchanged_by_involution = false;
};

/// Checks that f1 divides W - f2^2 exactly with quotient f3. Throws Error otherwise.
SplittingWitness verify_splitting(const DoubleQuadricInput& input);

/// Row i holds the 35 cubic monomials evaluated at point i. Throws DuplicatePointError.
Matrix cubic_evaluation_matrix(const std::vector<ProjectivePoint>& points);

/// The partial derivatives of Q have no common projective zero.
bool quadric_is_smooth(const Form& q);

enum class DefectPath { ExplicitPoints, Symbolic, Both };
enum class Verdict { QFactorial, NotQFactorial, Undetermined };

std::string to_string(DefectPath p);
std::string to_string(Verdict v);

struct DefectOptions {
    /// Forces the symbolic count into this domain; unset means rationals with a fallback to two
    /// random primes on resource failure.
    std::optional<Domain> domain;
    std::uint64_t seed = 1;
    GroebnerOptions groebner;
    /// Run the scheme-theoretic path (node count and saturated cubic conditions).
    bool symbolic = true;
    bool exact_twisted_cubic = false;
};

struct DefectCertificate {
    std::size_t s = 0;
    std::size_t rank3 = 0;
    std::size_t defect = 0;
    DefectPath path = DefectPath::Symbolic;
    std::optional<std::size_t> explicit_defect;
    std::optional<std::size_t> symbolic_defect;
    std::optional<PositionReport> position;
    Verdict verdict = Verdict::Undetermined;
    std::optional<SplittingWitness> witness;
    bool probabilistic = false;
    /// Domain of the symbolic count, e.g. "Q" or "F_p".
    std::string count_domain;
    std::vector<std::uint64_t> primes;
    std::uint64_t seed = 1;
    std::vector<ProjectivePoint> nodes;
    /// Length of the (f1, f2, f3, Q) scheme for the split family.
    std::optional<std::size_t> family_locus_length;
    /// Node configurations violating the positional bounds for nodes.
    std::vector<std::string> alerts;
    std::vector<std::string> notes;
    std::string criterion;
    /// Input forms as polynomial text.
    std::string q;
    std::string w;
};

/// Q-factoriality decision from the defect s - rank of the conditions the nodes impose on cubics.
/// Throws NonNodalError, SmoothnessError, DimensionError, DomainError.
DefectCertificate defect(const DoubleQuadricInput& input, const DefectOptions& options = {});

/// "n/d" for rationals, the representative for field elements.
std::string exact_string(const Scalar& c);

nlohmann::json to_json(const ProjectivePoint& p);
nlohmann::json to_json(const PositionReport& r);
nlohmann::json to_json(const NodeReport& r);
/// Canonically ordered certificate document.
nlohmann::json to_json(const DefectCertificate& c);

}  // namespace dquad
