#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "projcoh/errors.hpp"

namespace projcoh {

/// A finite group given by its full Cayley table over dense element indices
/// 0..n-1, with the identity pinned at index 0. Immutable once built; every
/// constructor runs the full validator (closure, two-sided identity,
/// exhaustive associativity, two-sided inverses).
class FiniteGroup {
public:
    /// Validates `table` and builds the group. A two-sided identity found at
    /// an index other than 0 is relabeled to 0 (witnesses in thrown errors are
    /// reported in the caller's original labels).
    /// Throws ArgumentOutOfRange, NoIdentity, NotAssociative, MissingInverse.
    static FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table,
                                         std::string name = "unnamed");

    int order() const { return n_; }
    const std::string& name() const { return name_; }
    static constexpr int identity = 0;

    /// Product of elements a and b.
    int op(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inverse(int a) const { return inverse_[a]; }

    const std::vector<int>& flat_table() const { return table_; }
    std::vector<std::vector<int>> rows() const;

    bool is_abelian() const;
    /// Minimal k >= 1 with a^k = e.
    int element_order(int a) const;

    /// True when relabeling this group's elements by the bijection `perm`
    /// (perm[a] = corresponding element of `other`) carries the Cayley table
    /// onto other's. This is the only isomorphism facility provided.
    bool equal_under_relabeling(const FiniteGroup& other, const std::vector<int>& perm) const;

    bool same_table(const FiniteGroup& other) const {
        return n_ == other.n_ && table_ == other.table_;
    }

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.same_table(b);
    }

private:
    FiniteGroup(int n, std::vector<int> flat, std::vector<int> inv, std::string name)
        : n_(n), table_(std::move(flat)), inverse_(std::move(inv)), name_(std::move(name)) {}

    int n_ = 1;
    std::vector<int> table_;    // row-major n*n, table_[a*n+b] = a*b
    std::vector<int> inverse_;  // inverse_[a]*a = a*inverse_[a] = e
    std::string name_;
};

/// Z_n with table (a+b) mod n. Requires n >= 1.
FiniteGroup cyclic(int n);

/// Direct product on pairs (g,k), indexed g-major: index = g*|K| + k.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& k);

/// Dihedral group of order 2n (n >= 2): indices 0..n-1 are rotations r^i,
/// n..2n-1 are reflections s r^(i-n).
FiniteGroup dihedral(int n);

/// Quaternion group of order 8: indices {1,-1,i,-i,j,-j,k,-k}.
FiniteGroup quaternion8();

/// Symmetric group on k symbols, 1 <= k <= 4; elements are the k! permutations
/// in lexicographic order (identity first), product = composition p*q : x -> p(q(x)).
FiniteGroup symmetric(int k);

}  // namespace projcoh
