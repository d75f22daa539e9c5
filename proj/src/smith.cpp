#include "projcoh/smith.hpp"

#include <algorithm>
#include <numeric>

namespace projcoh {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
    v %= m;
    return v < 0 ? v + m : v;
}

// State for one diagonalization run: the working matrix (entries in [0, m))
// plus whichever transforms are tracked (entries in [0, track)).
struct Worker {
    IntMat w;
    std::int64_t m, track;
    std::optional<IntMat> p, p_inv, q, q_inv;
    std::vector<std::int64_t>* rhs;

    Worker(IntMat a, std::int64_t m_, std::int64_t track_, unsigned flags,
           std::vector<std::int64_t>* rhs_)
        : w(std::move(a)), m(m_), track(track_), rhs(rhs_) {
        for (auto& v : w.a) v = mod_reduce(v, m);
        if (flags & kTrackP) p = IntMat::identity(w.rows);
        if (flags & kTrackPinv) p_inv = IntMat::identity(w.rows);
        if (flags & kTrackQ) q = IntMat::identity(w.cols);
        if (flags & kTrackQinv) q_inv = IntMat::identity(w.cols);
    }

    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < w.cols; ++c) std::swap(w.at(i, c), w.at(j, c));
        if (p)
            for (std::size_t c = 0; c < p->cols; ++c) std::swap(p->at(i, c), p->at(j, c));
        if (p_inv)
            for (std::size_t r = 0; r < p_inv->rows; ++r) std::swap(p_inv->at(r, i), p_inv->at(r, j));
        if (rhs) std::swap((*rhs)[i], (*rhs)[j]);
    }

    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < w.rows; ++r) std::swap(w.at(r, i), w.at(r, j));
        if (q)
            for (std::size_t r = 0; r < q->rows; ++r) std::swap(q->at(r, i), q->at(r, j));
        if (q_inv)
            for (std::size_t c = 0; c < q_inv->cols; ++c) std::swap(q_inv->at(i, c), q_inv->at(j, c));
    }

    // row dst += f * row src
    void row_axpy(std::size_t dst, std::size_t src, std::int64_t f) {
        if (f == 0) return;
        for (std::size_t c = 0; c < w.cols; ++c)
            w.at(dst, c) = mod_reduce(w.at(dst, c) + f * w.at(src, c), m);
        if (p)
            for (std::size_t c = 0; c < p->cols; ++c)
                p->at(dst, c) = mod_reduce(p->at(dst, c) + f * p->at(src, c), track);
        if (p_inv)  // P^-1 <- P^-1 * E^-1: column src -= f * column dst
            for (std::size_t r = 0; r < p_inv->rows; ++r)
                p_inv->at(r, src) = mod_reduce(p_inv->at(r, src) - f * p_inv->at(r, dst), track);
        if (rhs) (*rhs)[dst] = mod_reduce((*rhs)[dst] + f * (*rhs)[src], m);
    }

    // col dst += f * col src
    void col_axpy(std::size_t dst, std::size_t src, std::int64_t f) {
        if (f == 0) return;
        for (std::size_t r = 0; r < w.rows; ++r)
            w.at(r, dst) = mod_reduce(w.at(r, dst) + f * w.at(r, src), m);
        if (q)
            for (std::size_t r = 0; r < q->rows; ++r)
                q->at(r, dst) = mod_reduce(q->at(r, dst) + f * q->at(r, src), track);
        if (q_inv)  // Q^-1 <- F^-1 * Q^-1: row src -= f * row dst
            for (std::size_t c = 0; c < q_inv->cols; ++c)
                q_inv->at(src, c) = mod_reduce(q_inv->at(src, c) - f * q_inv->at(dst, c), track);
    }
};

}  // namespace

std::int64_t gcd_with_modulus(std::int64_t v, std::int64_t m) {
    return std::gcd(mod_reduce(v, m), m);  // gcd(0, m) = m
}

std::int64_t mod_inverse(std::int64_t v, std::int64_t m) {
    if (m == 1) return 0;
    std::int64_t t = 0, new_t = 1, r = m, new_r = mod_reduce(v, m);
    while (new_r != 0) {
        const std::int64_t qq = r / new_r;
        t -= qq * new_t;
        std::swap(t, new_t);
        r -= qq * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw ArgumentOutOfRange("mod_inverse: value not invertible");
    return mod_reduce(t, m);
}

ModDiagonalization diagonalize_mod(IntMat a, std::int64_t m, std::int64_t track_mod,
                                   unsigned flags, std::vector<std::int64_t>* rhs) {
    if (m < 1) throw ArgumentOutOfRange("diagonalize_mod: modulus must be >= 1");
    if (track_mod < m) track_mod = m;
    if (rhs && rhs->size() != a.rows)
        throw ArgumentOutOfRange("diagonalize_mod: rhs length mismatch");
    Worker wk(std::move(a), m, track_mod, flags, rhs);
    IntMat& w = wk.w;
    const std::size_t limit = std::min(w.rows, w.cols);

    for (std::size_t t = 0; t < limit; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing submatrix becomes the pivot.
            std::size_t pi = t, pj = t;
            std::int64_t best = 0;
            for (std::size_t i = t; i < w.rows; ++i)
                for (std::size_t j = t; j < w.cols; ++j) {
                    const std::int64_t v = w.at(i, j);
                    if (v != 0 && (best == 0 || v < best)) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) goto done;  // trailing submatrix vanished
            wk.row_swap(t, pi);
            wk.col_swap(t, pj);
            const std::int64_t pivot = w.at(t, t);

            bool disturbed = false;
            for (std::size_t i = t + 1; i < w.rows; ++i)
                if (w.at(i, t) != 0) {
                    wk.row_axpy(i, t, -(w.at(i, t) / pivot));
                    if (w.at(i, t) != 0) disturbed = true;  // remainder smaller than pivot
                }
            if (disturbed) continue;
            for (std::size_t j = t + 1; j < w.cols; ++j)
                if (w.at(t, j) != 0) {
                    wk.col_axpy(j, t, -(w.at(t, j) / pivot));
                    if (w.at(t, j) != 0) disturbed = true;
                }
            if (disturbed) continue;

            // Divisibility sweep: drag a non-multiple of the pivot into row t
            // so the next pass shrinks the pivot to the gcd.
            bool fixed = true;
            for (std::size_t i = t + 1; i < w.rows && fixed; ++i)
                for (std::size_t j = t + 1; j < w.cols && fixed; ++j)
                    if (w.at(i, j) % pivot != 0) {
                        wk.row_axpy(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
    }
done:
    ModDiagonalization out;
    out.diag.resize(limit);
    for (std::size_t t = 0; t < limit; ++t) out.diag[t] = w.at(t, t);
    out.p = std::move(wk.p);
    out.p_inv = std::move(wk.p_inv);
    out.q = std::move(wk.q);
    out.q_inv = std::move(wk.q_inv);
    return out;
}

ModSolveResult solve_mod(IntMat a, std::vector<std::int64_t> b, std::int64_t m) {
    const std::size_t rows = a.rows, cols = a.cols;
    for (auto& v : b) v = mod_reduce(v, m);
    auto d = diagonalize_mod(std::move(a), m, m, kTrackQ, &b);

    ModSolveResult res;
    std::vector<std::int64_t> y(cols, 0);
    const std::size_t len = d.diag.size();
    for (std::size_t i = 0; i < rows; ++i) {
        const std::int64_t rhs_i = b[i];
        const std::int64_t di = i < len ? d.diag[i] : 0;
        const std::int64_t g = gcd_with_modulus(di, m);
        if (rhs_i % g != 0) {
            res.inconsistent_row = static_cast<std::int64_t>(i);
            return res;
        }
        if (i < len && di != 0)
            y[i] = mod_reduce((rhs_i / g) * mod_inverse(di / g, m / g), m);
        // di == 0 (mod m): row constrains nothing beyond rhs_i % m == 0, and
        // g == m makes that exactly the check above; y[i] stays 0.
    }
    // x = Q y (mod m)
    const IntMat& q = *d.q;
    std::vector<std::int64_t> x(cols, 0);
    for (std::size_t r = 0; r < cols; ++r) {
        __int128 acc = 0;
        for (std::size_t c = 0; c < cols; ++c) acc += static_cast<__int128>(q.at(r, c)) * y[c];
        x[r] = mod_reduce(static_cast<std::int64_t>(acc % m), m);
    }
    res.x = std::move(x);
    return res;
}

}  // namespace projcoh
