#include "projcoh/group.hpp"

#include <algorithm>
#include <numeric>

namespace projcoh {

namespace {

// Two-sided identity of a flat table, or -1.
int find_identity(const std::vector<int>& t, int n) {
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b)
            ok = t[static_cast<std::size_t>(e) * n + b] == b &&
                 t[static_cast<std::size_t>(b) * n + e] == b;
        if (ok) return e;
    }
    return -1;
}

}  // namespace

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<int>>& table,
                                           std::string name) {
    const std::size_t n = table.size();
    if (n == 0) throw ArgumentOutOfRange("Cayley table must be nonempty");
    std::vector<int> flat;
    flat.reserve(n * n);
    for (const auto& row : table) {
        if (row.size() != n)
            throw ArgumentOutOfRange("Cayley table must be square: row of length " +
                                     std::to_string(row.size()) + " in an order-" +
                                     std::to_string(n) + " table");
        for (int v : row) {
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw ArgumentOutOfRange("table entry " + std::to_string(v) +
                                         " outside [0, " + std::to_string(n) + ")");
            flat.push_back(v);
        }
    }
    const int ni = static_cast<int>(n);

    const int e = find_identity(flat, ni);
    if (e < 0) throw NoIdentity();

    // Relabel so the identity sits at index 0; sigma is the involution 0 <-> e,
    // used both ways (new -> old and old -> new).
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::swap(sigma[0], sigma[e]);
    std::vector<int> relabeled(n * n);
    for (int a = 0; a < ni; ++a)
        for (int b = 0; b < ni; ++b)
            relabeled[static_cast<std::size_t>(a) * n + b] =
                sigma[flat[static_cast<std::size_t>(sigma[a]) * n + sigma[b]]];

    auto at = [&](int a, int b) { return relabeled[static_cast<std::size_t>(a) * n + b]; };

    for (int a = 0; a < ni; ++a)
        for (int b = 0; b < ni; ++b)
            for (int c = 0; c < ni; ++c)
                if (at(at(a, b), c) != at(a, at(b, c)))
                    throw NotAssociative(sigma[a], sigma[b], sigma[c]);

    std::vector<int> inv(n, -1);
    for (int a = 0; a < ni; ++a) {
        for (int b = 0; b < ni; ++b)
            if (at(a, b) == 0 && at(b, a) == 0) {
                inv[a] = b;
                break;
            }
        if (inv[a] < 0) throw MissingInverse(sigma[a]);
    }

    return FiniteGroup(ni, std::move(relabeled), std::move(inv), std::move(name));
}

std::vector<std::vector<int>> FiniteGroup::rows() const {
    std::vector<std::vector<int>> out(n_);
    for (int a = 0; a < n_; ++a)
        out[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a) * n_,
                      table_.begin() + static_cast<std::ptrdiff_t>(a + 1) * n_);
    return out;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (op(a, b) != op(b, a)) return false;
    return true;
}

int FiniteGroup::element_order(int a) const {
    if (a < 0 || a >= n_) throw ArgumentOutOfRange("element index out of range");
    int k = 1, p = a;
    while (p != identity) {
        p = op(p, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::equal_under_relabeling(const FiniteGroup& other,
                                         const std::vector<int>& perm) const {
    if (other.n_ != n_ || static_cast<int>(perm.size()) != n_) return false;
    std::vector<bool> seen(n_, false);
    for (int v : perm) {
        if (v < 0 || v >= n_ || seen[v]) return false;
        seen[v] = true;
    }
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (other.op(perm[a], perm[b]) != perm[op(a, b)]) return false;
    return true;
}

FiniteGroup cyclic(int n) {
    if (n < 1) throw ArgumentOutOfRange("cyclic: n must be >= 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup::from_cayley_table(t, "Z" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& k) {
    const int ng = g.order(), nk = k.order(), n = ng * nk;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int pg = g.op(a / nk, b / nk);
            const int pk = k.op(a % nk, b % nk);
            t[a][b] = pg * nk + pk;
        }
    return FiniteGroup::from_cayley_table(t, g.name() + "x" + k.name());
}

FiniteGroup dihedral(int n) {
    if (n < 2) throw ArgumentOutOfRange("dihedral: n must be >= 2");
    // 0..n-1: r^i; n..2n-1: s r^(i-n), with s r^i s = r^-i.
    const int order = 2 * n;
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            const bool ra = a < n, rb = b < n;
            const int i = ra ? a : a - n, j = rb ? b : b - n;
            if (ra && rb) t[a][b] = (i + j) % n;
            else if (ra && !rb) t[a][b] = n + (j - i + n) % n;
            else if (!ra && rb) t[a][b] = n + (i + j) % n;
            else t[a][b] = (j - i + n) % n;
        }
    return FiniteGroup::from_cayley_table(t, "D" + std::to_string(n));
}

FiniteGroup quaternion8() {
    // index = 2*basis + sign, basis in {0:1, 1:i, 2:j, 3:k}, sign 0:+ 1:-.
    // Structure constants of the quaternion units.
    static const int btab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int stab[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    // btab[x][y] = basis of unit product, stab[x][y] = 1 when the product picks up a minus:
    // i*i = j*j = k*k = -1, i*j = k, j*k = i, k*i = j, and anticommuted pairs flip sign.
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const int xb = a / 2, xs = a % 2, yb = b / 2, ys = b % 2;
            const int pb = btab[xb][yb];
            const int ps = (xs + ys + stab[xb][yb]) % 2;
            t[a][b] = 2 * pb + ps;
        }
    return FiniteGroup::from_cayley_table(t, "Q8");
}

FiniteGroup symmetric(int k) {
    if (k < 1 || k > 4) throw ArgumentOutOfRange("symmetric: k must be in [1, 4]");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    const int n = static_cast<int>(perms.size());
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<int> comp(k);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (int x = 0; x < k; ++x) comp[x] = perms[a][perms[b][x]];
            t[a][b] = index_of(comp);
        }
    return FiniteGroup::from_cayley_table(t, "S" + std::to_string(k));
}

}  // namespace projcoh
