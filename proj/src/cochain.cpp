#include "projcoh/cochain.hpp"

#include <algorithm>

namespace projcoh {

namespace {

// n^d with the entry-limit guard.
std::size_t checked_power(int n, int d, std::size_t limit) {
    std::size_t s = 1;
    for (int i = 0; i < d; ++i) {
        if (s > limit / static_cast<std::size_t>(n))
            throw SizeLimitExceeded("dense cochain of degree " + std::to_string(d) +
                                    " on an order-" + std::to_string(n) +
                                    " group exceeds the entry limit");
        s *= static_cast<std::size_t>(n);
    }
    return s;
}

}  // namespace

Cochain::Cochain(FiniteGroup group, int degree, std::int64_t modulus, std::size_t entry_limit)
    : Cochain(std::move(group), degree, modulus, std::vector<std::int64_t>(), entry_limit) {}

Cochain::Cochain(FiniteGroup group, int degree, std::int64_t modulus,
                 std::vector<std::int64_t> values, std::size_t entry_limit)
    : group_(std::move(group)), degree_(degree), modulus_(modulus), values_(std::move(values)) {
    if (degree_ < 0) throw ArgumentOutOfRange("cochain degree must be >= 0");
    if (modulus_ < 1 || modulus_ > kMaxModulus)
        throw ArgumentOutOfRange("cochain modulus must be in [1, " +
                                 std::to_string(kMaxModulus) + "]");
    const std::size_t want = checked_power(group_.order(), degree_, entry_limit);
    if (values_.empty())
        values_.assign(want, 0);
    else if (values_.size() != want)
        throw ArgumentOutOfRange("cochain value array has length " +
                                 std::to_string(values_.size()) + ", expected " +
                                 std::to_string(want));
    for (auto& v : values_) v = reduce(v);
}

std::int64_t Cochain::operator()(const std::vector<int>& args) const {
    if (static_cast<int>(args.size()) != degree_)
        throw ArgumentOutOfRange("argument tuple size does not match cochain degree");
    std::size_t idx = 0;
    for (int a : args) idx = idx * group_.order() + static_cast<std::size_t>(a);
    return values_[idx];
}

bool Cochain::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](std::int64_t v) { return v == 0; });
}

Cochain& Cochain::operator+=(const Cochain& rhs) {
    if (degree_ != rhs.degree_ || modulus_ != rhs.modulus_ || !group_.same_table(rhs.group_))
        throw ModulusMismatch("cochain addition requires equal group, degree, and modulus");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = reduce(values_[i] + rhs.values_[i]);
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& rhs) {
    if (degree_ != rhs.degree_ || modulus_ != rhs.modulus_ || !group_.same_table(rhs.group_))
        throw ModulusMismatch("cochain subtraction requires equal group, degree, and modulus");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = reduce(values_[i] - rhs.values_[i]);
    return *this;
}

Cochain Cochain::operator-() const {
    Cochain out = *this;
    for (auto& v : out.values_) v = reduce(-v);
    return out;
}

Cochain Cochain::operator*(std::int64_t scalar) const {
    Cochain out = *this;
    scalar = reduce(scalar);
    for (auto& v : out.values_) v = reduce(v * scalar);
    return out;
}

std::vector<int> index_to_tuple(std::size_t index, int degree, int order) {
    std::vector<int> args(static_cast<std::size_t>(degree));
    for (int i = degree - 1; i >= 0; --i) {
        args[static_cast<std::size_t>(i)] = static_cast<int>(index % order);
        index /= static_cast<std::size_t>(order);
    }
    return args;
}

namespace {

// Shared walker for both differentials. `leading` turns the c(g2,...,g_{d+1})
// face on/off; `sign0` is the sign of the first composed term.
Cochain apply_delta(const Cochain& c, bool leading, std::size_t entry_limit) {
    const int n = c.group().order();
    const int d = c.degree();
    Cochain out(c.group(), d + 1, c.modulus(), entry_limit);

    std::vector<int> args(static_cast<std::size_t>(d + 1), 0);
    std::vector<int> sub(static_cast<std::size_t>(d), 0);
    const std::size_t total = out.size();
    for (std::size_t idx = 0; idx < total; ++idx) {
        // Decode idx -> (g1,...,g_{d+1}), first argument most significant.
        std::size_t rem = idx;
        for (int i = d; i >= 0; --i) {
            args[static_cast<std::size_t>(i)] = static_cast<int>(rem % n);
            rem /= static_cast<std::size_t>(n);
        }

        std::int64_t acc = 0;
        if (leading) {
            sub.assign(args.begin() + 1, args.end());
            acc += c(sub);
        }
        // Face i composes g_i * g_{i+1}; signs continue the alternating sum.
        for (int i = 1; i <= d; ++i) {
            sub.clear();
            for (int j = 0; j < i - 1; ++j) sub.push_back(args[static_cast<std::size_t>(j)]);
            sub.push_back(c.group().op(args[static_cast<std::size_t>(i - 1)],
                                       args[static_cast<std::size_t>(i)]));
            for (int j = i + 1; j <= d; ++j) sub.push_back(args[static_cast<std::size_t>(j)]);
            const std::int64_t term = c(sub);
            const int sign = (leading ? i : i - 1) % 2;
            acc += sign == 0 ? term : -term;
        }
        {
            sub.assign(args.begin(), args.end() - 1);
            const std::int64_t term = c(sub);
            const int sign = (leading ? d + 1 : d) % 2;
            acc += sign == 0 ? term : -term;
        }
        out.set_index(idx, acc);
    }
    return out;
}

}  // namespace

Cochain coboundary(const Cochain& c, std::size_t entry_limit) {
    return apply_delta(c, /*leading=*/true, entry_limit);
}

Cochain coboundary_truncated(const Cochain& c, std::size_t entry_limit) {
    return apply_delta(c, /*leading=*/false, entry_limit);
}

Cochain delta_squared(const Cochain& c, std::size_t entry_limit) {
    return coboundary(coboundary(c, entry_limit), entry_limit);
}

bool is_cocycle(const Cochain& c, std::vector<int>* witness) {
    const Cochain d = coboundary(c);
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d.at_index(i) != 0) {
            if (witness) *witness = index_to_tuple(i, d.degree(), c.group().order());
            return false;
        }
    return true;
}

void require_cocycle(const Cochain& c) {
    std::vector<int> w;
    if (!is_cocycle(c, &w)) {
        if (w.size() == 3) throw NotACocycle(w[0], w[1], w[2]);
        throw NotACocycle(-1, -1, -1);
    }
}

bool is_normalized(const Cochain& xi) {
    if (xi.degree() != 2) throw ArgumentOutOfRange("is_normalized expects a 2-cochain");
    const int n = xi.group().order();
    for (int b = 0; b < n; ++b)
        if (xi(FiniteGroup::identity, b) != 0) return false;
    for (int a = 0; a < n; ++a)
        if (xi(a, FiniteGroup::identity) != 0) return false;
    return true;
}

std::pair<Cochain, Cochain> normalize(const Cochain& xi) {
    require_cocycle(xi);
    const std::int64_t k = xi(FiniteGroup::identity, FiniteGroup::identity);
    Cochain x(xi.group(), 1, xi.modulus());
    for (std::size_t a = 0; a < x.size(); ++a) x.set_index(a, -k);
    Cochain shifted = xi + coboundary(x);
    return {std::move(shifted), std::move(x)};
}

Cochain random_cochain(const FiniteGroup& g, int degree, std::int64_t modulus,
                       std::mt19937_64& rng) {
    Cochain c(g, degree, modulus);
    std::uniform_int_distribution<std::int64_t> pick(0, modulus - 1);
    for (std::size_t i = 0; i < c.size(); ++i) c.set_index(i, pick(rng));
    return c;
}

}  // namespace projcoh
