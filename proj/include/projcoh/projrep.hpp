#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "projcoh/cochain.hpp"
#include "projcoh/extension.hpp"
#include "projcoh/group.hpp"

namespace projcoh {

using Matrix =
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Max-entry norm, the comparison norm used throughout this module.
double max_abs(const Matrix& m);

/// Phases snap to the Z_m grid only when within this angular distance (radians).
inline constexpr double kSnapTolerance = 1e-6 * 2.0 * 3.14159265358979323846;

/// Matrices above this size are refused; the toolkit targets desk scale.
inline constexpr int kMaxDimension = 64;

/// A family of unitary matrices U_a indexed by group elements, validated at
/// construction: each U_a unitary and U_e = I, both within `tolerance` in
/// max-entry norm.
struct UnitaryRep {
    FiniteGroup group;
    int dim = 0;
    std::vector<Matrix> matrices;
    double tolerance = 1e-10;

    static UnitaryRep make(FiniteGroup g, std::vector<Matrix> mats, double tol = 1e-10);
    const Matrix& at(int a) const { return matrices[static_cast<std::size_t>(a)]; }
};

/// Factor system extracted from a projective representation: the exponent
/// cochain xi with U_a U_b = exp(2 pi i xi(a,b)/m) U_{ab}, plus the largest
/// matrix deviation left after snapping the phases to the Z_m grid.
struct FactorSystem {
    Cochain exponent;
    double residual = 0.0;
};

/// diag(1, w, ..., w^{N-1}) with w = exp(2 pi i / N).
Matrix clock(int n);
/// Cyclic basis shift e_j -> e_{(j+1) mod N}: entry (row (j+1) mod N, col j) = 1.
Matrix shift(int n);

/// The clock-and-shift projective representation of Z_N x Z_N:
/// U_{(j,k)} = clock^j shift^k on the group cyclic(N) x cyclic(N).
UnitaryRep schwinger_rep(int n);

/// Recovers the factor system of `rep` on the Z_m phase grid.
/// Throws NotProjective when some U_a U_b is not a scalar multiple of U_{ab},
/// SnapToleranceExceeded when a phase is off-grid, NotACocycle if the snapped
/// exponents fail the cocycle identity (tolerance catastrophe).
FactorSystem extract_factor_system(const UnitaryRep& rep, std::int64_t m);

/// New representatives U'_a = exp(2 pi i x(a)/m) U_a; the factor system shifts
/// by coboundary(x). Requires x(e) = 0 (throws NonzeroPhaseAtIdentity).
UnitaryRep rephase(const UnitaryRep& rep, const Cochain& x);

/// The dimension-|G| representation U_a e_b = exp(2 pi i xi(a,b)/m) e_{ab};
/// realizes any normalized 2-cocycle as a factor system exactly.
/// Throws NotACocycle, NotNormalized.
UnitaryRep twisted_regular_rep(const FiniteGroup& g, std::int64_t m, const Cochain& xi);

/// Genuine representation of the extension: V_{(theta,a)} = exp(2 pi i theta/m) U_a,
/// indexed like e.total. Requires e.cocycle to equal rep's extracted factor
/// system (throws CocycleMismatch).
UnitaryRep lift_to_extension(const UnitaryRep& rep, const CentralExtension& e);

}  // namespace projcoh
