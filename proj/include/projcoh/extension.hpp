#pragma once

#include <cstdint>
#include <vector>

#include "projcoh/cochain.hpp"
#include "projcoh/group.hpp"

namespace projcoh {

/// The central extension H of G by Z_m determined by a normalized 2-cocycle:
/// elements are pairs (theta, a) indexed theta-major (index = theta*|G| + a),
/// with product (theta1,a)(theta2,b) = (theta1+theta2+xi(a,b) mod m, ab).
/// The identity is (0,e) = index 0; C = {(theta,e)} is central with H/C = G.
struct CentralExtension {
    FiniteGroup base;
    std::int64_t modulus;
    Cochain cocycle;    // normalized 2-cocycle
    FiniteGroup total;  // the group H, fully validated

    int index_of(int theta, int a) const { return static_cast<int>(theta) * base.order() + a; }
    int project(int h) const { return h % base.order(); }  // (theta,a) -> a
    int theta_of(int h) const { return h / base.order(); }
    int section(int a) const { return a; }  // a -> (0,a)

    /// Element indices of the central subgroup C = {(theta, e)}.
    std::vector<int> center_subgroup() const;
};

/// Raw pair-law table (no cocycle checks) — the force-feed path: feeding the
/// table of a non-cocycle to FiniteGroup::from_cayley_table must trip the
/// associativity validator.
std::vector<std::vector<int>> extension_table_unchecked(const FiniteGroup& g, std::int64_t m,
                                                        const Cochain& xi);

/// Builds and validates the extension. Throws NotACocycle, NotNormalized,
/// ModulusMismatch (xi must be a 2-cochain on g over Z_m).
CentralExtension build_extension(const FiniteGroup& g, std::int64_t m, const Cochain& xi);

/// The explicit isomorphism (alpha, a) -> (alpha - x(a) mod m, a) between the
/// extensions of two cocycles related by e2.cocycle = e1.cocycle + coboundary(x).
/// Returns the map as an index table on H, after exhaustively verifying it is
/// a bijective homomorphism e1.total -> e2.total.
/// Throws CocyclesNotRelatedByX when the cocycles do not so differ.
std::vector<int> extension_isomorphism(const CentralExtension& e1, const CentralExtension& e2,
                                       const Cochain& x);

/// Coset table of H by the central subgroup C, relabeled through the section;
/// the result always equals the base group's table. Computed honestly from
/// the coset partition (representative independence is checked).
FiniteGroup quotient_by_center_subgroup(const CentralExtension& e);

}  // namespace projcoh
