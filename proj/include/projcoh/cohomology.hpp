#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "projcoh/cochain.hpp"
#include "projcoh/group.hpp"
#include "projcoh/smith.hpp"

namespace projcoh {

/// Outcome of a trivialization attempt: either a 1-cochain x with
/// coboundary(x) == xi (verified entrywise before being returned), or the
/// index of the inconsistent row of the diagonalized linear system as
/// proof of failure.
struct TrivializationCertificate {
    std::optional<Cochain> witness;
    std::int64_t obstruction_row = -1;
    explicit operator bool() const { return witness.has_value(); }
};

/// Decides xi in B^2: solves coboundary(x) = xi over Z_m via the modular
/// Smith-form engine. The returned witness satisfies x(e) = xi(e,e) (so
/// x(e) = 0 whenever xi is normalized; every solution is so constrained).
/// Throws NotACocycle when xi is not a 2-cocycle.
TrivializationCertificate is_coboundary(const Cochain& xi);

/// Equivalence of factor-system exponents: certificate for xi_prime - xi.
/// Throws NotACocycle, ModulusMismatch.
TrivializationCertificate are_equivalent(const Cochain& xi, const Cochain& xi_prime);

/// H^2(G, Z_m) presented by invariant factors d1 | d2 | ... (each > 1, each
/// dividing m) together with one normalized cocycle representative per factor.
struct CohomologyResult {
    FiniteGroup group;
    std::int64_t modulus;
    std::vector<std::int64_t> invariant_factors;
    std::vector<Cochain> representatives;
    int z2_rank;  // minimal generator count of the cocycle group Z^2 as a Z_m-module
    int b2_rank;  // same for the coboundary group B^2
};

/// Computes H^2 = Z^2/B^2 over Z_m: assembles the integer matrices of
/// delta^1: C^1 -> C^2 and delta^2: C^2 -> C^3, reads the mod-m kernel of
/// delta^2 off a Smith diagonalization, quotients by the image of delta^1,
/// and pulls generator representatives back through the recorded transforms.
/// Every representative is checked to be a non-coboundary cocycle.
/// Throws SizeLimitExceeded when the delta^2 matrix would exceed `entry_limit`.
CohomologyResult second_cohomology(const FiniteGroup& g, std::int64_t m,
                                   std::size_t entry_limit = kDefaultEntryLimit);

/// The antisymmetrized cocycle beta(a,b) = xi(a,b) - xi(b,a) mod m on an
/// abelian group: a coboundary-invariant bicharacter (bi-additive, zero on
/// the diagonal), nonzero beta obstructs trivialization.
/// Throws NotAbelian, NotACocycle.
Cochain alternating_pairing(const Cochain& xi);

/// Uniform sampling from the full cocycle group Z^2(G, Z_m), via a basis of
/// the mod-m kernel of delta^2. Construction cost is one Smith pass; sampling
/// is a matrix-vector product.
class CocycleSampler {
public:
    CocycleSampler(FiniteGroup g, std::int64_t m, std::size_t entry_limit = kDefaultEntryLimit);
    Cochain sample(std::mt19937_64& rng) const;
    /// sample() followed by normalize(); the common case for extension building.
    Cochain sample_normalized(std::mt19937_64& rng) const;

private:
    FiniteGroup group_;
    std::int64_t modulus_;
    IntMat basis_;                            // column j spans coordinate j of Z^2
    std::vector<std::int64_t> coord_orders_;  // column j contributes coord_orders_[j] choices
};

/// Integer matrix of coboundary: C^1 -> C^2 in the documented index order
/// (row a*n+b: +1 at a, +1 at b, -1 at ab, multiplicities accumulated).
IntMat delta1_matrix(const FiniteGroup& g);

/// Integer matrix of coboundary: C^2 -> C^3 (row (a*n+b)*n+c: +(b,c) -(ab,c)
/// +(a,bc) -(a,b)).
IntMat delta2_matrix(const FiniteGroup& g, std::size_t entry_limit = kDefaultEntryLimit);

}  // namespace projcoh
