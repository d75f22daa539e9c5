#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "projcoh/errors.hpp"
#include "projcoh/group.hpp"

namespace projcoh {

/// Dense-array cap for cochain values (and for the solver matrices assembled
/// from them).
inline constexpr std::size_t kDefaultEntryLimit = 10'000'000;

/// Largest accepted coefficient modulus. Keeps m^2 (used internally by the
/// modular linear algebra) far inside int64.
inline constexpr std::int64_t kMaxModulus = 1'000'000;

/// A degree-d cochain on a finite group G with values in Z_m (additive).
///
/// Values are stored densely in lexicographic order with the FIRST argument
/// most significant: index(g1,...,gd) = g1*n^(d-1) + g2*n^(d-2) + ... + gd.
/// The same ordering is used by the cohomology solver's matrix assembly and by
/// the cochain text format.
class Cochain {
public:
    /// Zero cochain of the given degree.
    Cochain(FiniteGroup group, int degree, std::int64_t modulus,
            std::size_t entry_limit = kDefaultEntryLimit);

    /// Takes ownership of `values` (length n^degree); entries are reduced mod m.
    Cochain(FiniteGroup group, int degree, std::int64_t modulus,
            std::vector<std::int64_t> values, std::size_t entry_limit = kDefaultEntryLimit);

    const FiniteGroup& group() const { return group_; }
    int degree() const { return degree_; }
    std::int64_t modulus() const { return modulus_; }
    const std::vector<std::int64_t>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }

    std::int64_t at_index(std::size_t i) const { return values_[i]; }
    void set_index(std::size_t i, std::int64_t v) { values_[i] = reduce(v); }

    /// Value on an argument tuple (size must equal degree).
    std::int64_t operator()(const std::vector<int>& args) const;
    std::int64_t operator()() const { return values_[0]; }
    std::int64_t operator()(int a) const { return values_[static_cast<std::size_t>(a)]; }
    std::int64_t operator()(int a, int b) const {
        return values_[static_cast<std::size_t>(a) * group_.order() + b];
    }
    void set(int a, int b, std::int64_t v) {
        values_[static_cast<std::size_t>(a) * group_.order() + b] = reduce(v);
    }

    std::int64_t reduce(std::int64_t v) const {
        v %= modulus_;
        return v < 0 ? v + modulus_ : v;
    }

    bool is_zero() const;

    Cochain& operator+=(const Cochain& rhs);
    Cochain& operator-=(const Cochain& rhs);
    friend Cochain operator+(Cochain lhs, const Cochain& rhs) { return lhs += rhs; }
    friend Cochain operator-(Cochain lhs, const Cochain& rhs) { return lhs -= rhs; }
    Cochain operator-() const;
    Cochain operator*(std::int64_t scalar) const;

    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.degree_ == b.degree_ && a.modulus_ == b.modulus_ &&
               a.group_.same_table(b.group_) && a.values_ == b.values_;
    }

private:
    FiniteGroup group_;
    int degree_;
    std::int64_t modulus_;
    std::vector<std::int64_t> values_;
};

/// The coboundary operator (full alternating-sum differential):
///   (dc)(g1,...,g_{d+1}) = c(g2,...,g_{d+1})
///                        + sum_{i=1..d} (-1)^i c(g1,...,g_i*g_{i+1},...,g_{d+1})
///                        + (-1)^{d+1} c(g1,...,g_d).
/// For d=1 this is x(a) + x(b) - x(ab); its degree-2 kernel is exactly the
/// associativity identity xi(a,b) + xi(ab,c) = xi(b,c) + xi(a,bc).
Cochain coboundary(const Cochain& c, std::size_t entry_limit = kDefaultEntryLimit);

/// Variant that omits the leading face term:
///   (d'c)(g1,...,g_{d+1}) = sum_{i=1..d} (-1)^{i-1} c(...,g_i*g_{i+1},...)
///                         + (-1)^d c(g1,...,g_d),
/// so for a 1-cochain (d'x)(a,b) = x(ab) - x(a). Also satisfies d'∘d' = 0, but
/// its degree-2 kernel is NOT the associativity identity; `coboundary` is the
/// operator used throughout the toolkit.
Cochain coboundary_truncated(const Cochain& c, std::size_t entry_limit = kDefaultEntryLimit);

/// coboundary twice; identically zero for every cochain.
Cochain delta_squared(const Cochain& c, std::size_t entry_limit = kDefaultEntryLimit);

/// True iff coboundary(c) == 0. On failure, `witness` (if non-null) receives
/// one argument tuple of coboundary(c) with a nonzero value.
bool is_cocycle(const Cochain& c, std::vector<int>* witness = nullptr);

/// Throws NotACocycle (with witness triple, for degree 2) unless is_cocycle(c).
void require_cocycle(const Cochain& c);

/// For a 2-cochain: xi(e,b) = xi(a,e) = 0 for all a, b.
bool is_normalized(const Cochain& xi);

/// Shifts a 2-cocycle into normalized form: returns (xi + dx, x) with x the
/// constant 1-cochain x(a) = -xi(e,e). (For any 2-cocycle, xi(e,b) = xi(a,e)
/// = xi(e,e), so the constant shift suffices.) Throws NotACocycle.
std::pair<Cochain, Cochain> normalize(const Cochain& xi);

/// Uniformly random cochain with the given shape (seedable, reproducible).
Cochain random_cochain(const FiniteGroup& g, int degree, std::int64_t modulus,
                       std::mt19937_64& rng);

/// Unravels a flat value index into the argument tuple it encodes.
std::vector<int> index_to_tuple(std::size_t index, int degree, int order);

}  // namespace projcoh
