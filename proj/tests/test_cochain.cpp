#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "projcoh/cochain.hpp"
#include "projcoh/group.hpp"

using namespace projcoh;

namespace {

std::vector<std::pair<FiniteGroup, std::int64_t>> small_corpus() {
    return {{cyclic(2), 2},
            {cyclic(3), 3},
            {cyclic(4), 4},
            {direct_product(cyclic(2), cyclic(2)), 2},
            {symmetric(3), 6},
            {dihedral(4), 2},
            {quaternion8(), 4},
            {cyclic(12), 6},
            {dihedral(6), 4}};
}

}  // namespace

TEST_CASE("degree-1 coboundary is x(a) + x(b) - x(ab)") {
    // Hand case: G = Z2, m = 2, x = (0,1) is a homomorphism, so dx = 0.
    const auto z2 = cyclic(2);
    const Cochain x(z2, 1, 2, {0, 1});
    const Cochain dx = coboundary(x);
    CHECK(dx.degree() == 2);
    for (std::size_t i = 0; i < 4; ++i) CHECK(dx.at_index(i) == 0);

    std::mt19937_64 rng(7);
    for (const auto& [g, m] : small_corpus()) {
        const Cochain y = random_cochain(g, 1, m, rng);
        const Cochain dy = coboundary(y);
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b)
                CHECK(dy(a, b) == y.reduce(y(a) + y(b) - y(g.op(a, b))));
    }
}

TEST_CASE("zero cochains map to zero in every degree") {
    const auto g = symmetric(3);
    for (int d = 0; d <= 2; ++d) {
        CHECK(coboundary(Cochain(g, d, 4)).is_zero());
        CHECK(coboundary_truncated(Cochain(g, d, 4)).is_zero());
    }
}

TEST_CASE("degree-0 coboundary vanishes identically") {
    const auto g = cyclic(5);
    const Cochain c(g, 0, 7, {3});
    CHECK(coboundary(c).is_zero());
}

TEST_CASE("delta squared is zero") {
    // Includes the order-12 groups; the moduli run over {2,3,4,6} everywhere.
    std::mt19937_64 rng(11);
    for (const auto& g : {cyclic(2), cyclic(4), direct_product(cyclic(2), cyclic(2)),
                          symmetric(3), quaternion8(), cyclic(12), dihedral(6)})
        for (std::int64_t m : {2, 3, 4, 6})
            for (int i = 0; i < 100; ++i) {
                const bool ok = delta_squared(random_cochain(g, i % 3, m, rng)).is_zero();
                if (!ok) CHECK_MESSAGE(ok, g.name(), " mod ", m);
            }
}

TEST_CASE("coboundary is linear") {
    std::mt19937_64 rng(13);
    for (const auto& [g, m] : small_corpus()) {
        const Cochain c1 = random_cochain(g, 2, m, rng);
        const Cochain c2 = random_cochain(g, 2, m, rng);
        CHECK(coboundary(c1 + c2) == coboundary(c1) + coboundary(c2));
    }
}

TEST_CASE("is_cocycle accepts coboundaries and rejects with a checkable witness") {
    std::mt19937_64 rng(17);
    for (const auto& [g, m] : small_corpus())
        CHECK(is_cocycle(coboundary(random_cochain(g, 1, m, rng))));

    const auto z3 = cyclic(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Cochain c = random_cochain(z3, 2, 3, rng);
        std::vector<int> w;
        if (is_cocycle(c, &w)) continue;
        REQUIRE(w.size() == 3);
        // Re-evaluate the associativity identity at the witness by hand.
        const auto [a, b, cc] = std::tuple{w[0], w[1], w[2]};
        const auto lhs = c.reduce(c(a, b) + c(z3.op(a, b), cc));
        const auto rhs = c.reduce(c(b, cc) + c(a, z3.op(b, cc)));
        CHECK(lhs != rhs);
        return;
    }
    FAIL("never sampled a non-cocycle on Z3 mod 3");
}

TEST_CASE("normalization") {
    const auto z2 = cyclic(2);
    // Normalized cocycle on Z2 mod 4 (the nontrivial-class shape).
    const Cochain xi(z2, 2, 4, {0, 0, 0, 2});
    REQUIRE(is_cocycle(xi));
    REQUIRE(is_normalized(xi));

    SUBCASE("already normalized returns unchanged with zero shift") {
        const auto [same, x] = normalize(xi);
        CHECK(same == xi);
        CHECK(x.is_zero());
    }

    SUBCASE("constant shift k is recovered exactly") {
        for (std::int64_t k = 1; k < 4; ++k) {
            Cochain xk(z2, 1, 4);
            for (std::size_t i = 0; i < xk.size(); ++i) xk.set_index(i, k);
            const Cochain shifted = xi + coboundary(xk);  // adds the constant k everywhere
            CHECK(shifted(0, 0) == k);
            CHECK_FALSE(is_normalized(shifted));
            const auto [back, x] = normalize(shifted);
            CHECK(back == xi);
            for (std::size_t i = 0; i < x.size(); ++i) CHECK(x.at_index(i) == x.reduce(-k));
        }
    }
}

TEST_CASE("normalize rejects non-cocycles") {
    const auto z3 = cyclic(3);
    Cochain c(z3, 2, 3);
    c.set(1, 1, 1);  // fails the cocycle identity
    REQUIRE_FALSE(is_cocycle(c));
    CHECK_THROWS_AS(normalize(c), NotACocycle);
}

TEST_CASE("truncated operator reproduces the two-term degree-1 formula") {
    std::mt19937_64 rng(19);
    for (const auto& [g, m] : small_corpus()) {
        const Cochain x = random_cochain(g, 1, m, rng);
        const Cochain dx = coboundary_truncated(x);
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b)
                CHECK(dx(a, b) == x.reduce(x(g.op(a, b)) - x(a)));
        // Degree-2 three-term form.
        const Cochain xi = random_cochain(g, 2, m, rng);
        const Cochain txi = coboundary_truncated(xi);
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b)
                for (int c = 0; c < g.order(); ++c)
                    CHECK(txi({a, b, c}) ==
                          xi.reduce(xi(g.op(a, b), c) - xi(a, g.op(b, c)) + xi(a, b)));
        // Nilpotency survives truncation (the telescoping cancellation).
        CHECK(coboundary_truncated(dx).is_zero());
        CHECK(coboundary_truncated(coboundary_truncated(xi)).is_zero());
    }
}

TEST_CASE("the two differentials have different degree-2 kernels") {
    // xi(1,1) = 1 on Z2 mod 2 satisfies the associativity identity but not
    // the truncated operator's kernel condition.
    const auto z2 = cyclic(2);
    const Cochain xi(z2, 2, 2, {0, 0, 0, 1});
    CHECK(is_cocycle(xi));
    const Cochain t = coboundary_truncated(xi);
    CHECK_FALSE(t.is_zero());
    CHECK(t({1, 1, 1}) == 1);
}

TEST_CASE("entry limits") {
    const auto g = cyclic(6);
    const Cochain c(g, 2, 4);
    CHECK_THROWS_AS(coboundary(c, 10), SizeLimitExceeded);
    CHECK_THROWS_AS(Cochain(cyclic(200), 4, 2), SizeLimitExceeded);
}

TEST_CASE("modulus validation and arithmetic") {
    const auto z4 = cyclic(4);
    CHECK_THROWS_AS(Cochain(z4, 2, 0), ArgumentOutOfRange);
    CHECK_THROWS_AS(Cochain(z4, -1, 2), ArgumentOutOfRange);
    CHECK_THROWS_AS(Cochain(z4, 1, 2, {0, 1, 2}), ArgumentOutOfRange);

    const Cochain a(z4, 1, 3, {0, 1, 2, 1});
    const Cochain b(z4, 1, 3, {2, 2, 2, 2});
    CHECK((a + b).values() == std::vector<std::int64_t>{2, 0, 1, 0});
    CHECK((a - b).values() == std::vector<std::int64_t>{1, 2, 0, 2});
    CHECK((-a).values() == std::vector<std::int64_t>{0, 2, 1, 2});
    CHECK((a * 2).values() == std::vector<std::int64_t>{0, 2, 1, 2});
    CHECK_THROWS_AS(a + Cochain(z4, 1, 5), ModulusMismatch);
    CHECK_THROWS_AS(a + Cochain(cyclic(3), 1, 3), ModulusMismatch);

    // m = 1 collapses everything to zero.
    const Cochain unit(z4, 2, 1, std::vector<std::int64_t>(16, 0));
    CHECK(unit.is_zero());
    CHECK(coboundary(unit).is_zero());
}

TEST_CASE("seeded sampling is reproducible") {
    const auto g = dihedral(3);
    std::mt19937_64 r1(42), r2(42);
    CHECK(random_cochain(g, 2, 5, r1) == random_cochain(g, 2, 5, r2));
}
