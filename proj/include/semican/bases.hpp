#pragma once

// Monomial value tables, canonical stalk functions, the inverse of the
// restriction map from the nilpotent variety to E, and the two expansion
// matrices derived from it.

#include "semican/core.hpp"
#include "semican/matrix.hpp"
#include "semican/qcount.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace semican::bases {

using core::DimVector;
using core::Orbit;
using core::PiModClass;
using qcount::MonomialWord;

/// Orbit-indexed function on E; values[r] is the value on the rank-r orbit.
struct ConstructibleFnE {
    DimVector dim;
    std::vector<Rational> values;

    const Rational& at(int r) const { return values.at(static_cast<std::size_t>(r)); }
    friend bool operator==(const ConstructibleFnE&, const ConstructibleFnE&) = default;
};

/// Class-indexed function on the nilpotent variety, aligned with core::enumerate_pi_classes.
struct ConstructibleFnLambda {
    DimVector dim;
    std::vector<PiModClass> classes;
    std::vector<Rational> values;

    const Rational& at(int r, int s) const;
    friend bool operator==(const ConstructibleFnLambda&, const ConstructibleFnLambda&) = default;
};

/// Square matrix indexed by (r', r); unitriangular when valid.
struct ExpansionMatrix {
    DimVector dim;
    RatMatrix entries;

    const Rational& operator()(int r_prime, int r) const {
        return entries(static_cast<std::size_t>(r_prime), static_cast<std::size_t>(r));
    }
    bool is_identity() const { return entries == RatMatrix::identity(entries.rows()); }
};

struct RankDeficiencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SmallnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConjectureViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Compositions of (d1, d2) plus grouped words 1^a 2^b 1^c and 2^a 1^b 2^c
/// (middle exponent >= 1, zero outer letters dropped). Sorted and deduplicated.
std::vector<MonomialWord> spanning_words(DimVector dim);

/// Ungrouped compositions only.
std::vector<MonomialWord> composition_words(DimVector dim);

/// Word x orbit matrix of stable-flag Euler characteristics on E.
RatMatrix monomial_matrix_E(DimVector dim, const std::vector<MonomialWord>& words);

/// Word x class matrix on the nilpotent variety (classes in enumerate_pi_classes order).
RatMatrix monomial_matrix_Pi(DimVector dim, const std::vector<MonomialWord>& words);

/// Both tables for one dimension and word set.
struct MonomialTables {
    DimVector dim;
    std::vector<MonomialWord> words;
    RatMatrix e_side;
    RatMatrix pi_side;

    static MonomialTables build(DimVector dim, std::vector<MonomialWord> words);
    static MonomialTables build(DimVector dim) { return build(dim, spanning_words(dim)); }
};

enum class ResolutionSide { Kernel, Cokernel };

/// Small-resolution criterion for the closure of the rank-r orbit.
bool smallness_check(DimVector dim, int r, ResolutionSide side);

/// Stalk Euler characteristics of the IC sheaf of the closure of orbit r,
/// normalized to 1 on the orbit itself.
ConstructibleFnE canonical_fn(DimVector dim, int r);

/// Coefficients c with sum_w c_w * mono_w = f. Free unknowns (in word order) are zero.
RatVector express_in_monomials(const ConstructibleFnE& f, const MonomialTables& tables);
RatVector express_in_monomials(const ConstructibleFnE& f, const std::vector<MonomialWord>& words);

/// Applies the monomial coefficients of f to the nilpotent-variety side.
ConstructibleFnLambda psi_inverse(const ConstructibleFnE& f, const MonomialTables& tables);
ConstructibleFnLambda psi_inverse(const ConstructibleFnE& f, const std::vector<MonomialWord>& words);

/// Lifts an arbitrary word-coefficient vector to the nilpotent variety.
ConstructibleFnLambda lift_coefficients(const RatVector& coeffs, const MonomialTables& tables);

/// Restriction to the classes (r, 0), i.e. pairs with y = 0.
ConstructibleFnE restrict_to_E(const ConstructibleFnLambda& f);

/// Column r holds the values of psi_inverse(canonical_fn(r)) at the generic
/// class (r', min - r') of each component.
ExpansionMatrix m_coefficients(const MonomialTables& tables);
ExpansionMatrix m_coefficients(DimVector dim);

/// Sign-twisted m; throws ConjectureViolation if the result is not
/// unitriangular, integral and nonnegative.
ExpansionMatrix cc_multiplicities(const ExpansionMatrix& m);
ExpansionMatrix cc_multiplicities(DimVector dim);

/// Unitriangularity and integrality of m; returns a description of the first
/// failure or an empty string.
std::string check_m_structure(const ExpansionMatrix& m);

}  // namespace semican::bases
