#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "projcoh/cochain.hpp"
#include "projcoh/cohomology.hpp"
#include "projcoh/extension.hpp"
#include "projcoh/group.hpp"

using namespace projcoh;

namespace {

Cochain schwinger_cocycle(int n) {
    FiniteGroup g = direct_product(cyclic(n), cyclic(n));
    Cochain xi(g, 2, n);
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            xi.set(a, b, -static_cast<std::int64_t>(a % n) * (b / n));
    return xi;
}

}  // namespace

TEST_CASE("zero cocycle gives the direct product, table for table") {
    for (const auto& g : {cyclic(3), symmetric(3)}) {
        for (std::int64_t m : {2, 4}) {
            const auto ext = build_extension(g, m, Cochain(g, 2, m));
            CHECK(ext.total.order() == static_cast<int>(m) * g.order());
            CHECK(ext.total.same_table(direct_product(cyclic(static_cast<int>(m)), g)));
        }
    }
}

TEST_CASE("clock-and-shift extension of the Klein group is the order-8 dihedral shape") {
    const auto xi = schwinger_cocycle(2);
    const auto ext = build_extension(xi.group(), 2, xi);
    CHECK(ext.total.order() == 8);
    CHECK_FALSE(ext.total.is_abelian());
    // 5 elements of order 2 (so D4 rather than Q8, which has one).
    int order2 = 0;
    for (int h = 0; h < 8; ++h) order2 += ext.total.element_order(h) == 2;
    CHECK(order2 == 5);
}

TEST_CASE("inverse formula on random extension elements") {
    std::mt19937_64 rng(67);
    for (const auto& g : {cyclic(4), dihedral(3)}) {
        for (std::int64_t m : {2, 3}) {
            const CocycleSampler sampler(g, m);
            const Cochain xi = sampler.sample_normalized(rng);
            const auto ext = build_extension(g, m, xi);
            for (int h = 0; h < ext.total.order(); ++h) {
                const int theta = ext.theta_of(h), a = ext.project(h);
                const int ainv = g.inverse(a);
                const auto want_theta = xi.reduce(-theta - xi(a, ainv));
                CHECK(ext.total.inverse(h) == ext.index_of(static_cast<int>(want_theta), ainv));
            }
        }
    }
}

TEST_CASE("build_extension validates its cocycle") {
    const auto z2 = cyclic(2);
    Cochain bad(direct_product(z2, z2), 2, 2);
    bad.set(1, 1, 1);
    REQUIRE_FALSE(is_cocycle(bad));
    CHECK_THROWS_AS(build_extension(bad.group(), 2, bad), NotACocycle);

    // A cocycle that is not normalized: xi + constant k.
    Cochain xi(z2, 2, 4, {0, 0, 0, 2});
    Cochain k(z2, 1, 4, {1, 1});
    const Cochain shifted = xi + coboundary(k);
    REQUIRE(is_cocycle(shifted));
    REQUIRE_FALSE(is_normalized(shifted));
    CHECK_THROWS_AS(build_extension(z2, 4, shifted), NotNormalized);
    CHECK_NOTHROW(build_extension(z2, 4, normalize(shifted).first));

    CHECK_THROWS_AS(build_extension(z2, 2, Cochain(z2, 2, 4)), ModulusMismatch);
    CHECK_THROWS_AS(build_extension(cyclic(3), 4, xi), ModulusMismatch);
}

TEST_CASE("force-fed non-cocycle tables fail associativity") {
    std::mt19937_64 rng(71);
    const auto g = cyclic(3);
    int rejected = 0;
    for (int trial = 0; trial < 25; ++trial) {
        Cochain c = random_cochain(g, 2, 3, rng);
        for (int b = 0; b < g.order(); ++b) c.set(0, b, 0);
        for (int a = 0; a < g.order(); ++a) c.set(a, 0, 0);
        if (is_cocycle(c)) continue;
        CHECK_THROWS_AS(FiniteGroup::from_cayley_table(extension_table_unchecked(g, 3, c)),
                        NotAssociative);
        ++rejected;
    }
    CHECK(rejected > 0);
}

TEST_CASE("structure invariants: center, projection, section") {
    std::mt19937_64 rng(73);
    const auto g = dihedral(4);
    const CocycleSampler sampler(g, 2);
    const Cochain xi = sampler.sample_normalized(rng);
    const auto ext = build_extension(g, 2, xi);

    const auto center = ext.center_subgroup();
    CHECK(center.size() == 2);
    for (int c : center)
        for (int h = 0; h < ext.total.order(); ++h)
            CHECK(ext.total.op(c, h) == ext.total.op(h, c));

    for (int h1 = 0; h1 < ext.total.order(); ++h1)
        for (int h2 = 0; h2 < ext.total.order(); ++h2)
            CHECK(ext.project(ext.total.op(h1, h2)) == g.op(ext.project(h1), ext.project(h2)));

    // Kernel of the projection is exactly C.
    for (int h = 0; h < ext.total.order(); ++h) {
        const bool in_kernel = ext.project(h) == FiniteGroup::identity;
        const bool in_center_list =
            std::find(center.begin(), center.end(), h) != center.end();
        CHECK(in_kernel == in_center_list);
    }

    // The section reproduces the cocycle.
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            CHECK(ext.total.op(ext.section(a), ext.section(b)) ==
                  ext.index_of(static_cast<int>(xi(a, b)), g.op(a, b)));
}

TEST_CASE("explicit isomorphism between extensions of equivalent cocycles") {
    std::mt19937_64 rng(79);

    SUBCASE("x = 0 is the identity map") {
        const auto xi = schwinger_cocycle(2);
        const auto e = build_extension(xi.group(), 2, xi);
        const auto phi = extension_isomorphism(e, e, Cochain(xi.group(), 1, 2));
        for (int h = 0; h < e.total.order(); ++h) CHECK(phi[static_cast<std::size_t>(h)] == h);
    }

    SUBCASE("random pairs, exhaustive verification inside") {
        for (const auto& g : {cyclic(4), symmetric(3), quaternion8()}) {
            for (std::int64_t m : {2, 3}) {
                const CocycleSampler sampler(g, m);
                for (int t = 0; t < 3; ++t) {
                    const Cochain xi = sampler.sample_normalized(rng);
                    Cochain x = random_cochain(g, 1, m, rng);
                    x.set_index(FiniteGroup::identity, 0);
                    const auto e1 = build_extension(g, m, xi);
                    const auto e2 = build_extension(g, m, xi + coboundary(x));
                    const auto phi = extension_isomorphism(e1, e2, x);
                    // phi fixes the central subgroup pointwise.
                    for (int theta = 0; theta < m; ++theta) {
                        const int c = e1.index_of(theta, FiniteGroup::identity);
                        CHECK(phi[static_cast<std::size_t>(c)] == c);
                    }
                }
            }
        }
    }

    SUBCASE("unrelated cocycles are refused") {
        const auto xi = schwinger_cocycle(2);
        const auto e1 = build_extension(xi.group(), 2, xi);
        const auto e2 = build_extension(xi.group(), 2, Cochain(xi.group(), 2, 2));
        CHECK_THROWS_AS(extension_isomorphism(e1, e2, Cochain(xi.group(), 1, 2)),
                        CocyclesNotRelatedByX);
    }
}

TEST_CASE("quotient by the central subgroup recovers the base") {
    SUBCASE("zero cocycle") {
        const auto g = symmetric(3);
        const auto ext = build_extension(g, 3, Cochain(g, 2, 3));
        CHECK(quotient_by_center_subgroup(ext).same_table(g));
    }
    SUBCASE("clock-and-shift extension of Z3xZ3, order 27") {
        const auto xi = schwinger_cocycle(3);
        const auto ext = build_extension(xi.group(), 3, xi);
        CHECK(ext.total.order() == 27);
        CHECK(quotient_by_center_subgroup(ext).same_table(xi.group()));
    }
    SUBCASE("trivial base group") {
        const auto one = cyclic(1);
        const auto ext = build_extension(one, 3, Cochain(one, 2, 3));
        CHECK(ext.total.order() == 3);
        CHECK(quotient_by_center_subgroup(ext).order() == 1);
    }
}
