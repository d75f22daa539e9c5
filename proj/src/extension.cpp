#include "projcoh/extension.hpp"

namespace projcoh {

std::vector<int> CentralExtension::center_subgroup() const {
    std::vector<int> c;
    c.reserve(static_cast<std::size_t>(modulus));
    for (int theta = 0; theta < modulus; ++theta) c.push_back(index_of(theta, FiniteGroup::identity));
    return c;
}

std::vector<std::vector<int>> extension_table_unchecked(const FiniteGroup& g, std::int64_t m,
                                                        const Cochain& xi) {
    if (xi.degree() != 2 || xi.modulus() != m || !xi.group().same_table(g))
        throw ModulusMismatch("extension table requires a 2-cochain on the given group over Z_m");
    const int n = g.order();
    const int order = static_cast<int>(m) * n;
    std::vector<std::vector<int>> t(static_cast<std::size_t>(order),
                                    std::vector<int>(static_cast<std::size_t>(order)));
    for (int h1 = 0; h1 < order; ++h1) {
        const int theta1 = h1 / n, a = h1 % n;
        for (int h2 = 0; h2 < order; ++h2) {
            const int theta2 = h2 / n, b = h2 % n;
            const int theta = static_cast<int>((theta1 + theta2 + xi(a, b)) % m);
            t[static_cast<std::size_t>(h1)][static_cast<std::size_t>(h2)] =
                theta * n + g.op(a, b);
        }
    }
    return t;
}

CentralExtension build_extension(const FiniteGroup& g, std::int64_t m, const Cochain& xi) {
    require_cocycle(xi);
    if (!is_normalized(xi))
        throw NotNormalized("build_extension requires a normalized cocycle (pass it through normalize first)");
    auto table = extension_table_unchecked(g, m, xi);
    FiniteGroup total = FiniteGroup::from_cayley_table(
        table, g.name() + " ext Z" + std::to_string(m));
    return CentralExtension{g, m, xi, std::move(total)};
}

std::vector<int> extension_isomorphism(const CentralExtension& e1, const CentralExtension& e2,
                                       const Cochain& x) {
    if (!e1.base.same_table(e2.base) || e1.modulus != e2.modulus)
        throw ModulusMismatch("extension_isomorphism requires extensions of the same group and modulus");
    if (x.degree() != 1 || x.modulus() != e1.modulus || !x.group().same_table(e1.base))
        throw ArgumentOutOfRange("extension_isomorphism expects a 1-cochain on the base group");
    if (!(e1.cocycle + coboundary(x) == e2.cocycle))
        throw CocyclesNotRelatedByX("e2.cocycle != e1.cocycle + coboundary(x)");

    const int n = e1.base.order();
    const int order = e1.total.order();
    const std::int64_t m = e1.modulus;
    std::vector<int> phi(static_cast<std::size_t>(order));
    std::vector<bool> hit(static_cast<std::size_t>(order), false);
    for (int h = 0; h < order; ++h) {
        const int a = h % n, alpha = h / n;
        const std::int64_t shifted = ((alpha - x(a)) % m + m) % m;
        phi[static_cast<std::size_t>(h)] = static_cast<int>(shifted) * n + a;
        hit[static_cast<std::size_t>(phi[static_cast<std::size_t>(h)])] = true;
    }
    for (bool b : hit)
        if (!b) throw Error("internal: extension isomorphism is not a bijection");
    for (int h1 = 0; h1 < order; ++h1)
        for (int h2 = 0; h2 < order; ++h2)
            if (phi[static_cast<std::size_t>(e1.total.op(h1, h2))] !=
                e2.total.op(phi[static_cast<std::size_t>(h1)], phi[static_cast<std::size_t>(h2)]))
                throw Error("internal: extension isomorphism is not a homomorphism");
    return phi;
}

FiniteGroup quotient_by_center_subgroup(const CentralExtension& e) {
    const int n = e.base.order();
    const auto center = e.center_subgroup();
    // Coset of h under C: {c*h : c in C}; every member must project to the
    // same base element, and products must be representative-independent.
    std::vector<int> coset_label(static_cast<std::size_t>(e.total.order()), -1);
    for (int h = 0; h < e.total.order(); ++h) {
        const int label = e.project(h);
        for (int c : center) {
            const int ch = e.total.op(c, h);
            if (e.project(ch) != label)
                throw Error("internal: central coset spans several base elements");
            coset_label[static_cast<std::size_t>(ch)] = label;
        }
    }
    std::vector<std::vector<int>> q(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int h1 = 0; h1 < e.total.order(); ++h1)
        for (int h2 = 0; h2 < e.total.order(); ++h2) {
            const int a = coset_label[static_cast<std::size_t>(h1)];
            const int b = coset_label[static_cast<std::size_t>(h2)];
            const int p = coset_label[static_cast<std::size_t>(e.total.op(h1, h2))];
            auto& cell = q[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (cell == -1) cell = p;
            else if (cell != p)
                throw Error("internal: coset product depends on representatives");
        }
    return FiniteGroup::from_cayley_table(q, e.base.name());
}

}  // namespace projcoh
