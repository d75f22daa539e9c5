#include "projcoh/projrep.hpp"

#include <cmath>
#include <numbers>

namespace projcoh {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> unit_phase(std::int64_t numer, std::int64_t denom) {
    const double angle = kTwoPi * static_cast<double>(numer) / static_cast<double>(denom);
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

UnitaryRep UnitaryRep::make(FiniteGroup g, std::vector<Matrix> mats, double tol) {
    if (mats.size() != static_cast<std::size_t>(g.order()))
        throw InvalidRepresentation("need one matrix per group element");
    if (mats.empty() || mats[0].rows() == 0)
        throw InvalidRepresentation("matrices must be nonempty");
    if (mats[0].rows() > kMaxDimension)
        throw InvalidRepresentation("dimension " + std::to_string(mats[0].rows()) +
                                    " exceeds the supported maximum of " +
                                    std::to_string(kMaxDimension));
    const auto dim = mats[0].rows();
    const Matrix eye = Matrix::Identity(dim, dim);
    for (int a = 0; a < g.order(); ++a) {
        const Matrix& u = mats[static_cast<std::size_t>(a)];
        if (u.rows() != dim || u.cols() != dim)
            throw InvalidRepresentation("matrix for element " + std::to_string(a) +
                                        " has inconsistent dimensions");
        if (max_abs(u.adjoint() * u - eye) > tol)
            throw InvalidRepresentation("matrix for element " + std::to_string(a) +
                                        " is not unitary within tolerance");
    }
    if (max_abs(mats[FiniteGroup::identity] - eye) > tol)
        throw InvalidRepresentation("U_e differs from the identity matrix");
    return UnitaryRep{std::move(g), static_cast<int>(dim), std::move(mats), tol};
}

Matrix clock(int n) {
    if (n < 1) throw ArgumentOutOfRange("clock: n must be >= 1");
    Matrix c = Matrix::Zero(n, n);
    for (int t = 0; t < n; ++t) c(t, t) = unit_phase(t, n);
    return c;
}

Matrix shift(int n) {
    if (n < 1) throw ArgumentOutOfRange("shift: n must be >= 1");
    Matrix s = Matrix::Zero(n, n);
    for (int j = 0; j < n; ++j) s((j + 1) % n, j) = 1.0;
    return s;
}

UnitaryRep schwinger_rep(int n) {
    FiniteGroup g = direct_product(cyclic(n), cyclic(n));
    const Matrix c = clock(n), s = shift(n);
    // Powers up front; element (j,k) sits at index j*n + k.
    std::vector<Matrix> cp(static_cast<std::size_t>(n)), sp(static_cast<std::size_t>(n));
    cp[0] = sp[0] = Matrix::Identity(n, n);
    for (int i = 1; i < n; ++i) {
        cp[static_cast<std::size_t>(i)] = cp[static_cast<std::size_t>(i - 1)] * c;
        sp[static_cast<std::size_t>(i)] = sp[static_cast<std::size_t>(i - 1)] * s;
    }
    std::vector<Matrix> mats;
    mats.reserve(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            mats.push_back(cp[static_cast<std::size_t>(j)] * sp[static_cast<std::size_t>(k)]);
    return UnitaryRep::make(std::move(g), std::move(mats));
}

FactorSystem extract_factor_system(const UnitaryRep& rep, std::int64_t m) {
    if (m < 1 || m > kMaxModulus) throw ArgumentOutOfRange("extract_factor_system: bad modulus");
    const int n = rep.group.order();
    Cochain xi(rep.group, 2, m);
    double residual = 0.0;
    const Matrix eye = Matrix::Identity(rep.dim, rep.dim);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ab = rep.group.op(a, b);
            const Matrix prod = rep.at(a) * rep.at(b);
            const Matrix scalar = prod * rep.at(ab).adjoint();
            const std::complex<double> lambda = scalar.trace() / static_cast<double>(rep.dim);
            if (std::abs(std::abs(lambda) - 1.0) > rep.tolerance ||
                max_abs(scalar - lambda * eye) > rep.tolerance)
                throw NotProjective(a, b);
            const double angle = std::arg(lambda);
            const auto k = std::llround(angle * static_cast<double>(m) / kTwoPi);
            const double snapped = kTwoPi * static_cast<double>(k) / static_cast<double>(m);
            if (std::abs(angle - snapped) > kSnapTolerance)
                throw SnapToleranceExceeded(a, b, std::abs(angle - snapped));
            xi.set(a, b, k);
            residual = std::max(residual, max_abs(prod - unit_phase(xi(a, b), m) * rep.at(ab)));
        }
    require_cocycle(xi);
    return FactorSystem{std::move(xi), residual};
}

UnitaryRep rephase(const UnitaryRep& rep, const Cochain& x) {
    if (x.degree() != 1 || !x.group().same_table(rep.group))
        throw ArgumentOutOfRange("rephase expects a 1-cochain on the representation's group");
    if (x(FiniteGroup::identity) != 0) throw NonzeroPhaseAtIdentity();
    std::vector<Matrix> mats;
    mats.reserve(rep.matrices.size());
    for (int a = 0; a < rep.group.order(); ++a)
        mats.push_back(unit_phase(x(a), x.modulus()) * rep.at(a));
    return UnitaryRep::make(rep.group, std::move(mats), rep.tolerance);
}

UnitaryRep twisted_regular_rep(const FiniteGroup& g, std::int64_t m, const Cochain& xi) {
    if (xi.degree() != 2 || xi.modulus() != m || !xi.group().same_table(g))
        throw ModulusMismatch("twisted_regular_rep expects a 2-cochain on g over Z_m");
    require_cocycle(xi);
    if (!is_normalized(xi)) throw NotNormalized("twisted_regular_rep requires a normalized cocycle");
    const int n = g.order();
    std::vector<Matrix> mats;
    mats.reserve(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        Matrix u = Matrix::Zero(n, n);
        for (int b = 0; b < n; ++b) u(g.op(a, b), b) = unit_phase(xi(a, b), m);
        mats.push_back(std::move(u));
    }
    return UnitaryRep::make(g, std::move(mats));
}

UnitaryRep lift_to_extension(const UnitaryRep& rep, const CentralExtension& e) {
    if (!rep.group.same_table(e.base))
        throw CocycleMismatch("representation and extension live over different groups");
    const FactorSystem fs = extract_factor_system(rep, e.modulus);
    if (!(fs.exponent == e.cocycle))
        throw CocycleMismatch("extension cocycle differs from the extracted factor system");
    const int n = e.base.order();
    std::vector<Matrix> mats;
    mats.reserve(static_cast<std::size_t>(e.total.order()));
    for (int h = 0; h < e.total.order(); ++h) {
        const int theta = h / n, a = h % n;
        mats.push_back(unit_phase(theta, e.modulus) * rep.at(a));
    }
    return UnitaryRep::make(e.total, std::move(mats), rep.tolerance);
}

}  // namespace projcoh
