#include "projcoh/cohomology.hpp"

#include <algorithm>

namespace projcoh {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
    v %= m;
    return v < 0 ? v + m : v;
}

// A * B with entries reduced into [0, mod).
IntMat matmul_mod(const IntMat& a, const IntMat& b, std::int64_t mod) {
    IntMat out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) {
            __int128 acc = 0;
            for (std::size_t k = 0; k < a.cols; ++k)
                acc += static_cast<__int128>(a.at(i, k)) * b.at(k, j);
            out.at(i, j) = mod_reduce(static_cast<std::int64_t>(acc % mod), mod);
        }
    return out;
}

std::vector<std::int64_t> matvec_mod(const IntMat& a, const std::vector<std::int64_t>& v,
                                     std::int64_t mod) {
    std::vector<std::int64_t> out(a.rows, 0);
    for (std::size_t i = 0; i < a.rows; ++i) {
        __int128 acc = 0;
        for (std::size_t k = 0; k < a.cols; ++k)
            acc += static_cast<__int128>(a.at(i, k)) * v[k];
        out[i] = mod_reduce(static_cast<std::int64_t>(acc % mod), mod);
    }
    return out;
}

// Rows reduced mod m, zero rows dropped, duplicates removed. Valid for kernel
// computations: the mod-m kernel depends only on the set of distinct rows.
IntMat dedupe_rows_mod(const IntMat& a, std::int64_t m) {
    std::vector<std::vector<std::int64_t>> rows;
    rows.reserve(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        std::vector<std::int64_t> r(a.cols);
        bool nonzero = false;
        for (std::size_t j = 0; j < a.cols; ++j) {
            r[j] = mod_reduce(a.at(i, j), m);
            nonzero |= r[j] != 0;
        }
        if (nonzero) rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    IntMat out(rows.size(), a.cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < a.cols; ++j) out.at(i, j) = rows[i][j];
    return out;
}

struct KernelBasis {
    IntMat q;                              // column transform of the delta^2 diagonalization
    IntMat q_inv;                          // its inverse, entries mod m^2
    std::vector<std::int64_t> stride;      // t_j: coordinate j of the kernel is t_j * Z mod m
    std::vector<std::int64_t> coord_order; // m / t_j
};

// Mod-m kernel of delta^2 as Q * diag(stride) (columns taken mod m).
KernelBasis cocycle_kernel(const FiniteGroup& g, std::int64_t m, std::size_t entry_limit) {
    const auto d2 = dedupe_rows_mod(delta2_matrix(g, entry_limit), m);
    const std::size_t dim = static_cast<std::size_t>(g.order()) * g.order();
    auto diag = diagonalize_mod(d2, m, m * m, kTrackQ | kTrackQinv);
    KernelBasis kb;
    kb.q = std::move(*diag.q);
    kb.q_inv = std::move(*diag.q_inv);
    const auto d = diag.diag_padded(dim);
    kb.stride.resize(dim);
    kb.coord_order.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        const std::int64_t gj = gcd_with_modulus(d[j], m);
        kb.stride[j] = m / gj;
        kb.coord_order[j] = gj;
    }
    return kb;
}

}  // namespace

IntMat delta1_matrix(const FiniteGroup& g) {
    const int n = g.order();
    IntMat d1(static_cast<std::size_t>(n) * n, static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const std::size_t row = static_cast<std::size_t>(a) * n + b;
            d1.at(row, static_cast<std::size_t>(a)) += 1;
            d1.at(row, static_cast<std::size_t>(b)) += 1;
            d1.at(row, static_cast<std::size_t>(g.op(a, b))) -= 1;
        }
    return d1;
}

IntMat delta2_matrix(const FiniteGroup& g, std::size_t entry_limit) {
    const std::size_t n = static_cast<std::size_t>(g.order());
    if (n * n > entry_limit / n || n * n * n > entry_limit / (n * n))
        throw SizeLimitExceeded("delta^2 matrix for an order-" + std::to_string(n) +
                                " group exceeds the entry limit");
    IntMat d2(n * n * n, n * n);
    for (int a = 0; a < static_cast<int>(n); ++a)
        for (int b = 0; b < static_cast<int>(n); ++b)
            for (int c = 0; c < static_cast<int>(n); ++c) {
                const std::size_t row = (static_cast<std::size_t>(a) * n + b) * n + c;
                auto col = [n](int x, int y) { return static_cast<std::size_t>(x) * n + y; };
                d2.at(row, col(b, c)) += 1;
                d2.at(row, col(g.op(a, b), c)) -= 1;
                d2.at(row, col(a, g.op(b, c))) += 1;
                d2.at(row, col(a, b)) -= 1;
            }
    return d2;
}

TrivializationCertificate is_coboundary(const Cochain& xi) {
    if (xi.degree() != 2) throw ArgumentOutOfRange("is_coboundary expects a 2-cochain");
    require_cocycle(xi);
    const std::int64_t m = xi.modulus();
    auto solved = solve_mod(delta1_matrix(xi.group()), xi.values(), m);
    TrivializationCertificate cert;
    if (solved) {
        Cochain x(xi.group(), 1, m, std::move(*solved.x));
        if (!(coboundary(x) == xi))
            throw Error("internal: solver returned a non-solution of coboundary(x) = xi");
        cert.witness = std::move(x);
    } else {
        cert.obstruction_row = solved.inconsistent_row;
    }
    return cert;
}

TrivializationCertificate are_equivalent(const Cochain& xi, const Cochain& xi_prime) {
    if (xi.degree() != 2 || xi_prime.degree() != 2)
        throw ArgumentOutOfRange("are_equivalent expects 2-cochains");
    if (xi.modulus() != xi_prime.modulus() || !xi.group().same_table(xi_prime.group()))
        throw ModulusMismatch("are_equivalent requires matching group and modulus");
    require_cocycle(xi);
    require_cocycle(xi_prime);
    return is_coboundary(xi_prime - xi);
}

Cochain alternating_pairing(const Cochain& xi) {
    if (xi.degree() != 2) throw ArgumentOutOfRange("alternating_pairing expects a 2-cochain");
    if (!xi.group().is_abelian()) throw NotAbelian("alternating_pairing requires an abelian group");
    require_cocycle(xi);
    const int n = xi.group().order();
    Cochain beta(xi.group(), 2, xi.modulus());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) beta.set(a, b, xi(a, b) - xi(b, a));
    return beta;
}

CohomologyResult second_cohomology(const FiniteGroup& g, std::int64_t m,
                                   std::size_t entry_limit) {
    const std::size_t n = static_cast<std::size_t>(g.order());
    const std::size_t dim = n * n;
    const auto kb = cocycle_kernel(g, m, entry_limit);

    // z2: coordinate j of Z^2 is cyclic of order coord_order[j].
    int z2_rank = 0;
    for (auto c : kb.coord_order) z2_rank += c > 1;

    // b2: C^1 / ker(delta^1) read off the delta^1 diagonal.
    const IntMat d1 = delta1_matrix(g);
    int b2_rank = 0;
    {
        auto diag1 = diagonalize_mod(d1, m, m, 0).diag_padded(n);
        for (auto d : diag1) b2_rank += (m / gcd_with_modulus(d, m)) > 1;
    }

    // Relations of B^2 (plus the ambient m Z) written in kernel-basis
    // coordinates: columns [T^-1 Qinv D1 | diag(m/t) Qinv].
    const std::int64_t m2 = m * m;
    const IntMat num = matmul_mod(kb.q_inv, d1, m2);
    IntMat rel(dim, n + dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::int64_t t = kb.stride[i];
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t v = num.at(i, j);
            if (v % t != 0)
                throw Error("internal: coboundary image not divisible by kernel stride");
            rel.at(i, j) = mod_reduce(v / t, m);
        }
        const std::int64_t scale = m / t;
        for (std::size_t j = 0; j < dim; ++j)
            rel.at(i, n + j) = mod_reduce(scale * kb.q_inv.at(i, j), m);
    }

    auto reld = diagonalize_mod(std::move(rel), m, m, kTrackPinv);
    const auto rdiag = reld.diag_padded(dim);
    const IntMat& pinv = *reld.p_inv;

    CohomologyResult res{g, m, {}, {}, z2_rank, b2_rank};
    std::int64_t prev = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        const std::int64_t f = gcd_with_modulus(rdiag[i], m);
        if (f <= 1) continue;
        if (prev > 1 && f % prev != 0)
            throw Error("internal: invariant factors not a divisibility chain");
        prev = f;
        res.invariant_factors.push_back(f);

        // Generator of this cyclic factor, pulled back to an ambient 2-cochain:
        // Q * diag(stride) * (column i of P^-1), mod m.
        std::vector<std::int64_t> coords(dim);
        for (std::size_t j = 0; j < dim; ++j)
            coords[j] = mod_reduce(kb.stride[j] * pinv.at(j, i), m);
        Cochain rep(g, 2, m, matvec_mod(kb.q, coords, m));
        require_cocycle(rep);
        rep = normalize(rep).first;
        if (is_coboundary(rep))
            throw Error("internal: H^2 representative collapsed to a coboundary");
        res.representatives.push_back(std::move(rep));
    }
    return res;
}

CocycleSampler::CocycleSampler(FiniteGroup g, std::int64_t m, std::size_t entry_limit)
    : group_(std::move(g)), modulus_(m) {
    const auto kb = cocycle_kernel(group_, m, entry_limit);
    const std::size_t dim = static_cast<std::size_t>(group_.order()) * group_.order();
    basis_ = IntMat(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            basis_.at(i, j) = mod_reduce(kb.q.at(i, j) * kb.stride[j], m);
    coord_orders_ = kb.coord_order;
}

Cochain CocycleSampler::sample(std::mt19937_64& rng) const {
    const std::size_t dim = basis_.rows;
    std::vector<std::int64_t> coeff(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        std::uniform_int_distribution<std::int64_t> pick(0, coord_orders_[j] - 1);
        coeff[j] = pick(rng);
    }
    return Cochain(group_, 2, modulus_, matvec_mod(basis_, coeff, modulus_));
}

Cochain CocycleSampler::sample_normalized(std::mt19937_64& rng) const {
    return normalize(sample(rng)).first;
}

}  // namespace projcoh
