#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "projcoh/cochain.hpp"
#include "projcoh/cohomology.hpp"
#include "projcoh/extension.hpp"
#include "projcoh/group.hpp"
#include "projcoh/projrep.hpp"

using namespace projcoh;
using std::complex;

namespace {

Cochain schwinger_cocycle(int n) {
    FiniteGroup g = direct_product(cyclic(n), cyclic(n));
    Cochain xi(g, 2, n);
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            xi.set(a, b, -static_cast<std::int64_t>(a % n) * (b / n));
    return xi;
}

// Permutation matrices of the left-regular action, built straight off the
// Cayley table (independent of twisted_regular_rep).
UnitaryRep plain_regular_rep(const FiniteGroup& g) {
    std::vector<Matrix> mats;
    for (int a = 0; a < g.order(); ++a) {
        Matrix u = Matrix::Zero(g.order(), g.order());
        for (int b = 0; b < g.order(); ++b) u(g.op(a, b), b) = 1.0;
        mats.push_back(std::move(u));
    }
    return UnitaryRep::make(g, std::move(mats));
}

}  // namespace

TEST_CASE("clock and shift conventions") {
    CHECK(max_abs(clock(1) - Matrix::Identity(1, 1)) == 0.0);
    CHECK(max_abs(shift(1) - Matrix::Identity(1, 1)) == 0.0);

    const Matrix z = clock(2), x = shift(2);
    CHECK(std::abs(z(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(z(1, 1) + 1.0) < 1e-15);
    CHECK(std::abs(x(1, 0) - 1.0) < 1e-15);
    CHECK(std::abs(x(0, 1) - 1.0) < 1e-15);
    CHECK(std::abs(x(0, 0)) < 1e-15);

    for (int n : {2, 3, 5, 8}) {
        const Matrix c = clock(n), s = shift(n);
        const complex<double> omega = std::polar(1.0, 2.0 * 3.14159265358979323846 / n);
        CHECK(max_abs(c * s - omega * (s * c)) < 1e-12);
    }
}

TEST_CASE("schwinger representation and the frozen sign convention") {
    SUBCASE("N = 1 is the trivial genuine representation") {
        const auto rep = schwinger_rep(1);
        const auto fs = extract_factor_system(rep, 1);
        CHECK(fs.exponent.is_zero());
        CHECK(static_cast<bool>(is_coboundary(fs.exponent)));
    }

    SUBCASE("extracted exponent is -k1*j2 mod N, by matrix multiplication") {
        for (int n : {2, 3, 4}) {
            const auto rep = schwinger_rep(n);
            const auto fs = extract_factor_system(rep, n);
            CHECK(fs.residual < 1e-10);
            CHECK(fs.exponent == schwinger_cocycle(n));
            CHECK(is_normalized(fs.exponent));
        }
    }

    SUBCASE("nontrivial class for N >= 2") {
        for (int n : {2, 3}) {
            const auto fs = extract_factor_system(schwinger_rep(n), n);
            CHECK(is_cocycle(fs.exponent));
            CHECK_FALSE(static_cast<bool>(is_coboundary(fs.exponent)));
        }
    }

    SUBCASE("commutator phase equals the alternating pairing") {
        for (int n : {2, 3}) {
            const auto rep = schwinger_rep(n);
            const auto beta = alternating_pairing(extract_factor_system(rep, n).exponent);
            const Matrix eye = Matrix::Identity(n, n);
            for (int a = 0; a < rep.group.order(); ++a)
                for (int b = 0; b < rep.group.order(); ++b) {
                    const complex<double> phase =
                        std::polar(1.0, 2.0 * 3.14159265358979323846 *
                                            static_cast<double>(beta(a, b)) / n);
                    const Matrix comm = rep.at(a) * rep.at(b) * rep.at(a).adjoint() *
                                        rep.at(b).adjoint();
                    CHECK(max_abs(comm - phase * eye) < 1e-10);
                }
        }
    }
}

TEST_CASE("extraction") {
    SUBCASE("a genuine representation extracts the zero system") {
        const auto rep = plain_regular_rep(cyclic(3));
        const auto fs = extract_factor_system(rep, 3);
        CHECK(fs.exponent.is_zero());
        CHECK(fs.residual < 1e-12);
    }

    SUBCASE("phases off the grid are refused") {
        // N = 2 phases live on the Z2 grid; snapping to Z3 must fail.
        CHECK_THROWS_AS(extract_factor_system(schwinger_rep(2), 3), SnapToleranceExceeded);
    }

    SUBCASE("non-projective families are refused") {
        const auto z2 = cyclic(2);
        std::vector<Matrix> mats{Matrix::Identity(2, 2), Matrix::Zero(2, 2)};
        mats[1] << 1.0, 0.0, 0.0, complex<double>(0.0, 1.0);
        const auto rep = UnitaryRep::make(z2, std::move(mats));
        CHECK_THROWS_AS(extract_factor_system(rep, 4), NotProjective);
    }
}

TEST_CASE("unitary representation validation") {
    const auto z2 = cyclic(2);
    std::vector<Matrix> bad{Matrix::Identity(2, 2), 2.0 * Matrix::Identity(2, 2)};
    CHECK_THROWS_AS(UnitaryRep::make(z2, std::move(bad)), InvalidRepresentation);

    std::vector<Matrix> not_id{Matrix::Zero(2, 2), Matrix::Identity(2, 2)};
    not_id[0] << 0.0, 1.0, 1.0, 0.0;
    CHECK_THROWS_AS(UnitaryRep::make(z2, std::move(not_id)), InvalidRepresentation);

    std::vector<Matrix> wrong_count{Matrix::Identity(2, 2)};
    CHECK_THROWS_AS(UnitaryRep::make(z2, std::move(wrong_count)), InvalidRepresentation);

    // Desk-scale dimension cap.
    CHECK_THROWS_AS(twisted_regular_rep(cyclic(65), 2, Cochain(cyclic(65), 2, 2)),
                    InvalidRepresentation);
    CHECK_NOTHROW(twisted_regular_rep(cyclic(64), 2, Cochain(cyclic(64), 2, 2)));
}

TEST_CASE("twisted regular representation") {
    SUBCASE("zero cocycle gives permutation matrices") {
        const auto g = symmetric(3);
        const auto rep = twisted_regular_rep(g, 4, Cochain(g, 2, 4));
        const auto plain = plain_regular_rep(g);
        for (int a = 0; a < g.order(); ++a) CHECK(max_abs(rep.at(a) - plain.at(a)) == 0.0);
    }

    SUBCASE("extraction round trip is exact for sampled cocycles") {
        std::mt19937_64 rng(83);
        for (const auto& g : {cyclic(4), direct_product(cyclic(2), cyclic(2)), quaternion8()}) {
            for (std::int64_t m : {2, 4}) {
                const CocycleSampler sampler(g, m);
                const Cochain xi = sampler.sample_normalized(rng);
                const auto fs = extract_factor_system(twisted_regular_rep(g, m, xi), m);
                CHECK(fs.exponent == xi);
                CHECK(fs.residual < 1e-12);
            }
        }
    }

    SUBCASE("matrix associativity sanity") {
        std::mt19937_64 rng(89);
        const auto xi = schwinger_cocycle(2);
        const auto rep = twisted_regular_rep(xi.group(), 2, xi);
        std::uniform_int_distribution<int> pick(0, rep.group.order() - 1);
        for (int t = 0; t < 30; ++t) {
            const int a = pick(rng), b = pick(rng), c = pick(rng);
            CHECK(max_abs((rep.at(a) * rep.at(b)) * rep.at(c) -
                          rep.at(a) * (rep.at(b) * rep.at(c))) < 1e-12);
        }
    }

    SUBCASE("input validation") {
        const auto g = cyclic(3);
        Cochain bad(g, 2, 3);
        bad.set(1, 1, 1);
        CHECK_THROWS_AS(twisted_regular_rep(g, 3, bad), NotACocycle);
        Cochain unnorm(g, 2, 3);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) unnorm.set(a, b, 1);
        REQUIRE(is_cocycle(unnorm));
        CHECK_THROWS_AS(twisted_regular_rep(g, 3, unnorm), NotNormalized);
    }
}

TEST_CASE("rephasing") {
    std::mt19937_64 rng(97);
    const auto xi = schwinger_cocycle(3);
    const auto g = xi.group();
    const auto rep = twisted_regular_rep(g, 3, xi);

    SUBCASE("x = 0 changes nothing") {
        const auto same = rephase(rep, Cochain(g, 1, 3));
        for (int a = 0; a < g.order(); ++a) CHECK(max_abs(same.at(a) - rep.at(a)) == 0.0);
    }

    SUBCASE("factor system shifts by the coboundary, entrywise") {
        for (int t = 0; t < 5; ++t) {
            Cochain x = random_cochain(g, 1, 3, rng);
            x.set_index(FiniteGroup::identity, 0);
            const auto fs = extract_factor_system(rephase(rep, x), 3);
            CHECK(fs.exponent == xi + coboundary(x));
        }
    }

    SUBCASE("a trivialization certificate removes the phase entirely") {
        Cochain y = random_cochain(g, 1, 3, rng);
        y.set_index(FiniteGroup::identity, 0);
        const Cochain cb = coboundary(y);
        const auto cert = is_coboundary(cb);
        REQUIRE(static_cast<bool>(cert));
        const auto fixed = rephase(twisted_regular_rep(g, 3, cb), -*cert.witness);
        CHECK(extract_factor_system(fixed, 3).exponent.is_zero());
    }

    SUBCASE("nonzero phase at the identity is refused") {
        Cochain x(g, 1, 3);
        x.set_index(0, 1);
        CHECK_THROWS_AS(rephase(rep, x), NonzeroPhaseAtIdentity);
    }
}

TEST_CASE("lifting to the extension") {
    SUBCASE("zero cocycle: tensor of a character with the representation") {
        const auto g = cyclic(3);
        const auto rep = plain_regular_rep(g);
        const auto ext = build_extension(g, 4, Cochain(g, 2, 4));
        const auto lifted = lift_to_extension(rep, ext);
        CHECK(lifted.group.same_table(ext.total));
        for (int h = 0; h < ext.total.order(); ++h) {
            const auto phase = std::polar(1.0, 2.0 * 3.14159265358979323846 *
                                                   ext.theta_of(h) / 4.0);
            CHECK(max_abs(lifted.at(h) - phase * rep.at(ext.project(h))) < 1e-12);
        }
    }

    SUBCASE("schwinger N=2: exact homomorphism over all 64 pairs") {
        const auto rep = schwinger_rep(2);
        const auto fs = extract_factor_system(rep, 2);
        const auto ext = build_extension(rep.group, 2, fs.exponent);
        const auto lifted = lift_to_extension(rep, ext);
        double defect = 0.0;
        for (int h1 = 0; h1 < 8; ++h1)
            for (int h2 = 0; h2 < 8; ++h2)
                defect = std::max(defect, max_abs(lifted.at(h1) * lifted.at(h2) -
                                                  lifted.at(ext.total.op(h1, h2))));
        CHECK(defect < 1e-10);
        // theta = 0 slice restores the original representatives.
        for (int a = 0; a < 4; ++a) CHECK(max_abs(lifted.at(ext.index_of(0, a)) - rep.at(a)) == 0.0);
    }

    SUBCASE("cocycle mismatch is refused") {
        const auto rep = schwinger_rep(2);
        const auto ext = build_extension(rep.group, 2, Cochain(rep.group, 2, 2));
        CHECK_THROWS_AS(lift_to_extension(rep, ext), CocycleMismatch);
    }
}
