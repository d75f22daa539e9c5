#pragma once

#include <stdexcept>
#include <string>

namespace projcoh {

/// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed argument (bad size, out-of-range parameter, unparsable input).
struct ArgumentOutOfRange : Error {
    using Error::Error;
};

/// Cayley table has an associativity defect; (a,b,c) is a witnessing triple,
/// i.e. (a*b)*c != a*(b*c).
struct NotAssociative : Error {
    int a, b, c;
    NotAssociative(int a_, int b_, int c_)
        : Error("table is not associative at triple (" + std::to_string(a_) + ", " +
                std::to_string(b_) + ", " + std::to_string(c_) + ")"),
          a(a_), b(b_), c(c_) {}
};

/// No two-sided identity element exists in the table.
struct NoIdentity : Error {
    NoIdentity() : Error("table has no two-sided identity element") {}
};

/// `element` has no two-sided inverse.
struct MissingInverse : Error {
    int element;
    explicit MissingInverse(int e)
        : Error("element " + std::to_string(e) + " has no two-sided inverse"), element(e) {}
};

/// A requested dense array would exceed the configured entry limit.
struct SizeLimitExceeded : Error {
    using Error::Error;
};

/// A 2-cochain required to be a cocycle is not one; (a,b,c) witnesses the
/// failed identity xi(a,b) + xi(ab,c) = xi(b,c) + xi(a,bc).
struct NotACocycle : Error {
    int a, b, c;
    NotACocycle(int a_, int b_, int c_)
        : Error("cochain is not a cocycle; witness triple (" + std::to_string(a_) + ", " +
                std::to_string(b_) + ", " + std::to_string(c_) + ")"),
          a(a_), b(b_), c(c_) {}
};

/// Two cochains disagree on group, degree, or modulus.
struct ModulusMismatch : Error {
    using Error::Error;
};

/// A 2-cocycle required to be normalized (xi(e,b) = xi(a,e) = 0) is not.
struct NotNormalized : Error {
    using Error::Error;
};

/// Operation requires an abelian group.
struct NotAbelian : Error {
    using Error::Error;
};

/// extension_isomorphism: the two extensions' cocycles do not differ by the
/// coboundary of the supplied 1-cochain.
struct CocyclesNotRelatedByX : Error {
    using Error::Error;
};

/// lift_to_extension: the extension's cocycle differs from the representation's
/// extracted factor system.
struct CocycleMismatch : Error {
    using Error::Error;
};

/// extract_factor_system: U_a U_b is not a scalar multiple of U_{ab}.
struct NotProjective : Error {
    int a, b;
    NotProjective(int a_, int b_)
        : Error("U_a U_b is not a scalar multiple of U_ab for pair (" + std::to_string(a_) +
                ", " + std::to_string(b_) + ")"),
          a(a_), b(b_) {}
};

/// extract_factor_system: a phase lies too far from the Z_m grid to snap.
struct SnapToleranceExceeded : Error {
    int a, b;
    double distance;  // radians to the nearest grid point
    SnapToleranceExceeded(int a_, int b_, double d)
        : Error("phase at pair (" + std::to_string(a_) + ", " + std::to_string(b_) +
                ") is " + std::to_string(d) + " rad away from the Z_m grid"),
          a(a_), b(b_), distance(d) {}
};

/// rephase: the 1-cochain of phases must vanish at the identity.
struct NonzeroPhaseAtIdentity : Error {
    NonzeroPhaseAtIdentity() : Error("rephasing cochain must satisfy x(e) = 0") {}
};

/// A matrix family fails the unitary-representation invariants.
struct InvalidRepresentation : Error {
    using Error::Error;
};

/// Text input (group table, cochain file, group spec) failed to parse.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace projcoh
