#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "projcoh/errors.hpp"

namespace projcoh {

/// Small dense integer matrix, row-major.
struct IntMat {
    std::size_t rows = 0, cols = 0;
    std::vector<std::int64_t> a;

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    std::int64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::int64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

/// Which transform matrices diagonalize_mod should accumulate.
enum TrackFlags : unsigned {
    kTrackP = 1u,     // W = P A Q: row transform
    kTrackPinv = 2u,  // P^-1
    kTrackQ = 4u,     // column transform
    kTrackQinv = 8u,  // Q^-1
};

/// Result of diagonalizing A by integer-unimodular row/column operations,
/// working modulo m: P*A*Q == diag(d) + m*(integer junk), with d[i] | d[i+1]
/// as stored (entries in [0, m), 0 standing for "0 mod m"). The transforms are
/// exact unimodular integer matrices whose entries are stored reduced into
/// [0, track_mod); any congruence-mod-divisor-of-track_mod question about them
/// can be answered from the stored values.
struct ModDiagonalization {
    std::vector<std::int64_t> diag;
    std::optional<IntMat> p, p_inv, q, q_inv;

    /// diag padded with zeros to length `len` (columns beyond the pivot count
    /// behave as zero rows/columns of the diagonal).
    std::vector<std::int64_t> diag_padded(std::size_t len) const {
        auto d = diag;
        d.resize(len, 0);
        return d;
    }
};

/// Diagonalizes A modulo m (m >= 1). `rhs`, when non-null, receives the same
/// row operations as A (entries kept reduced mod m) — the augmented-column
/// trick for solving A x = rhs without materializing P.
ModDiagonalization diagonalize_mod(IntMat a, std::int64_t m, std::int64_t track_mod,
                                   unsigned flags, std::vector<std::int64_t>* rhs = nullptr);

/// Solution of A x == b (mod m), or the index of the first inconsistent row of
/// the diagonalized system (the proof-of-failure token).
struct ModSolveResult {
    std::optional<std::vector<std::int64_t>> x;
    std::int64_t inconsistent_row = -1;
    explicit operator bool() const { return x.has_value(); }
};

ModSolveResult solve_mod(IntMat a, std::vector<std::int64_t> b, std::int64_t m);

std::int64_t gcd_with_modulus(std::int64_t v, std::int64_t m);  // gcd(v, m); gcd(0, m) = m

/// Inverse of v modulo m; requires gcd(v, m) = 1.
std::int64_t mod_inverse(std::int64_t v, std::int64_t m);

}  // namespace projcoh
