#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "projcoh/group.hpp"

using namespace projcoh;

TEST_CASE("trivial and order-2 tables") {
    const auto t1 = FiniteGroup::from_cayley_table({{0}}, "1");
    CHECK(t1.order() == 1);
    CHECK(t1.inverse(0) == 0);

    const auto z2 = FiniteGroup::from_cayley_table({{0, 1}, {1, 0}}, "Z2");
    CHECK(z2.order() == 2);
    CHECK(z2.op(1, 1) == 0);
    CHECK(z2.inverse(1) == 1);
}

TEST_CASE("associativity failure names the first witnessing triple") {
    // Two-sided identity at 0, broken at (1,1,2): (1*1)*2 = 2*2 = 0 but
    // 1*(1*2) = 1*0 = 1. (No order-3 Latin square can fail here: one with a
    // two-sided identity is forced to be the cyclic table.)
    try {
        FiniteGroup::from_cayley_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 0}});
        FAIL("expected NotAssociative");
    } catch (const NotAssociative& e) {
        CHECK(e.a == 1);
        CHECK(e.b == 1);
        CHECK(e.c == 2);
    }
}

TEST_CASE("Latin square without identity is rejected as NoIdentity") {
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{1, 0, 2}, {0, 2, 1}, {2, 1, 0}}),
                    NoIdentity);
}

TEST_CASE("monoid without inverses is rejected, naming the element") {
    try {
        FiniteGroup::from_cayley_table({{0, 1, 2}, {1, 1, 1}, {2, 1, 1}});
        FAIL("expected MissingInverse");
    } catch (const MissingInverse& e) {
        CHECK(e.element == 1);
    }
}

TEST_CASE("malformed tables") {
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 1}, {1}}), ArgumentOutOfRange);
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 2}, {2, 0}}), ArgumentOutOfRange);
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table({}), ArgumentOutOfRange);
}

TEST_CASE("identity found elsewhere is relabeled to index 0") {
    // Cyclic structure with the identity parked at index 2.
    const auto g = FiniteGroup::from_cayley_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
    CHECK(g.order() == 3);
    for (int b = 0; b < 3; ++b) CHECK(g.op(0, b) == b);
    CHECK(g.element_order(1) == 3);
    CHECK(g.element_order(2) == 3);
}

TEST_CASE("cyclic groups") {
    CHECK(cyclic(1).order() == 1);
    CHECK(cyclic(4).op(3, 2) == 1);
    CHECK_THROWS_AS(cyclic(0), ArgumentOutOfRange);

    const auto z5 = cyclic(5);
    CHECK(z5.inverse(2) == 3);
    CHECK(FiniteGroup::from_cayley_table(z5.rows()).same_table(z5));
}

TEST_CASE("direct products") {
    const auto z2 = cyclic(2), z3 = cyclic(3), z4 = cyclic(4);
    CHECK(direct_product(cyclic(1), z4).same_table(z4));
    CHECK(direct_product(z3, z4).order() == 12);

    const auto klein = direct_product(z2, z2);
    CHECK(klein.is_abelian());
    for (int a = 1; a < 4; ++a) CHECK(klein.element_order(a) == 2);

    CHECK(direct_product(symmetric(3), z2).is_abelian() == false);
    CHECK(direct_product(z3, z4).is_abelian());
}

TEST_CASE("dihedral groups") {
    CHECK_THROWS_AS(dihedral(1), ArgumentOutOfRange);
    const auto d2 = dihedral(2);
    CHECK(d2.order() == 4);
    CHECK(d2.is_abelian());
    CHECK(d2.equal_under_relabeling(direct_product(cyclic(2), cyclic(2)), {0, 1, 2, 3}));

    const auto d4 = dihedral(4);
    CHECK(d4.order() == 8);
    CHECK_FALSE(d4.is_abelian());
    // r has order 4, every reflection has order 2
    CHECK(d4.element_order(1) == 4);
    for (int s = 4; s < 8; ++s) CHECK(d4.element_order(s) == 2);
}

TEST_CASE("quaternion group has exactly one element of order 2") {
    const auto q8 = quaternion8();
    CHECK(q8.order() == 8);
    CHECK_FALSE(q8.is_abelian());
    int count = 0;
    for (int a = 0; a < 8; ++a) count += q8.element_order(a) == 2;
    CHECK(count == 1);
}

TEST_CASE("symmetric groups") {
    CHECK(symmetric(1).order() == 1);
    CHECK(symmetric(3).order() == 6);
    CHECK_FALSE(symmetric(3).is_abelian());
    CHECK(symmetric(4).order() == 24);
    CHECK_THROWS_AS(symmetric(5), ArgumentOutOfRange);
    CHECK_THROWS_AS(symmetric(0), ArgumentOutOfRange);
}

TEST_CASE("element orders") {
    CHECK(cyclic(6).element_order(4) == 3);
    CHECK(cyclic(6).element_order(0) == 1);
    CHECK(cyclic(6).is_abelian());
    CHECK_FALSE(symmetric(3).is_abelian());
}

TEST_CASE("every builtin passes revalidation unchanged") {
    for (const auto& g : {cyclic(7), dihedral(3), quaternion8(), symmetric(4),
                          direct_product(cyclic(3), cyclic(3))}) {
        const auto again = FiniteGroup::from_cayley_table(g.rows(), g.name());
        CHECK(again.same_table(g));
        for (int a = 0; a < g.order(); ++a) CHECK(g.op(a, g.inverse(a)) == 0);
    }
}

TEST_CASE("relabeling equality rejects non-isomorphic assignments") {
    const auto z4 = cyclic(4);
    const auto klein = direct_product(cyclic(2), cyclic(2));
    bool any = false;
    std::vector<int> perm = {0, 1, 2, 3};
    do {
        any |= z4.equal_under_relabeling(klein, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK_FALSE(any);  // Z4 and the Klein group are not isomorphic
}
