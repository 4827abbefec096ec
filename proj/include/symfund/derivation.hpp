#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "memo.hpp"
#include "symfun.hpp"

namespace symfund {

// ---------------------------------------------------------------------------
// The derivation D = sum_n n d/dp_n and its pieces D_n.
//
// On power sums D_n(p_l) = n m_n(l) p_{l minus one part n}. On Schur functions
// D_n collapses every hook of length n with sign (-1)^leg. The two agree under
// basis change; the Schur path is the primary one.
// ---------------------------------------------------------------------------

inline SchurVector d_n(const SchurVector& f, int n)
{
    if (n < 1)
        throw std::invalid_argument("d_n: n must be positive");
    return detail::collapse_hooks(f, n);
}

inline PowerVector d_n(const PowerVector& f, int n)
{
    if (n < 1)
        throw std::invalid_argument("d_n: n must be positive");
    PowerVector out;
    for (const auto& [l, c] : f) {
        const int mult = l.multiplicity(n);
        if (mult == 0)
            continue;
        std::vector<int> parts(l.begin(), l.end());
        parts.erase(std::find(parts.begin(), parts.end(), n));
        out.add_term(Partition(std::move(parts)), c * n * mult);
    }
    return out;
}

inline SchurVector derive(const SchurVector& f) { return detail::collapse_hooks(f, 0); }

inline PowerVector derive(const PowerVector& f)
{
    PowerVector out;
    for (const auto& [l, c] : f) {
        int prev = 0;
        for (int n : l) {
            if (n == prev)
                continue;
            prev = n;
            out += d_n(power(l, c), n);
        }
    }
    return out;
}

/// (<D_n f, g>, <f, p_n g>); equal by adjointness.
inline std::pair<Rational, Rational> adjoint_check(const SchurVector& f, const SchurVector& g, int n)
{
    return {hall_schur(d_n(f, n), g), hall_schur(f, mult_pn(g, n))};
}

/// f = (1/d) sum_n p_n D_n(f) for f homogeneous of degree d >= 1.
inline SchurVector reconstruct(const SchurVector& f, int d)
{
    if (d < 1)
        throw std::invalid_argument("reconstruct: degree must be positive");
    for (const auto& [a, c] : f) {
        if (a.size() != d) {
            throw std::invalid_argument("reconstruct: input is not homogeneous of degree "
                                        + std::to_string(d));
        }
    }
    SchurVector out;
    for (int n = 1; n <= d; ++n)
        out += mult_pn(d_n(f, n), n);
    return out *= Rational(1, d);
}

namespace detail {

inline MemoTable<std::pair<Partition, Partition>, SchurVector, PartitionPairLess>& lr_table()
{
    static MemoTable<std::pair<Partition, Partition>, SchurVector, PartitionPairLess> table;
    return table;
}

inline MemoTable<Partition, SchurVector>& preimage_table()
{
    static MemoTable<Partition, SchurVector> table;
    return table;
}

}  // namespace detail

/// s_a s_b through the quasi-isometry: the coefficient of s_g is
/// (1/d) <D(s_a) s_b + s_a D(s_b), D(s_g)>, d = |a| + |b|. The left factor
/// only involves products of total degree d - 1 or less.
inline SchurVector lr_product_recursive(const Partition& a, const Partition& b)
{
    if (a.empty())
        return schur(b);
    if (b.empty())
        return schur(a);
    auto key = a < b ? std::pair{a, b} : std::pair{b, a};
    return detail::lr_table().get_or_compute(key, [&] {
        const int d = a.size() + b.size();
        SchurVector left;
        for (const auto& [da, c] : derive(schur(a)))
            left.add_scaled(lr_product_recursive(da, b), c);
        for (const auto& [db, c] : derive(schur(b)))
            left.add_scaled(lr_product_recursive(a, db), c);

        SchurVector out;
        for (const auto& g : partitions_of(d)) {
            Rational coeff = hall_schur(left, derive(schur(g))) / d;
            out.add_term(g, coeff);
        }
        return out;
    });
}

/// An h with D(h) = s_a. Uses s_m = D(s_{m+1} - s_m) and, in general,
/// s_a = D(s_{a'}) - (other terms of D(s_{a'})) with a' = (a_1 + 1, a_2, ...).
/// Every other term has smaller size, or equal size and a larger first part,
/// so the recursion terminates.
inline SchurVector derive_preimage(const Partition& a)
{
    if (auto hit = detail::preimage_table().find(a))
        return *hit;
    std::vector<int> bumped(a.begin(), a.end());
    if (bumped.empty())
        bumped.push_back(1);
    else
        ++bumped[0];
    Partition lifted(std::move(bumped));

    SchurVector h = schur(lifted);
    for (const auto& [b, c] : derive(schur(lifted))) {
        if (b == a)
            continue;
        h.add_scaled(derive_preimage(b), -c);
    }
    // D(s_lifted) contains s_a with coefficient exactly 1
    return detail::preimage_table().insert(a, std::move(h));
}

}  // namespace symfund
