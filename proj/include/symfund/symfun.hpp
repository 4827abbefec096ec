#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "basis.hpp"
#include "memo.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace symfund {

inline Integer z_lambda(const Multiplicity& m)
{
    Integer z = 1;
    for (int k = 1; k <= static_cast<int>(m.mult.size()); ++k) {
        for (int i = 1; i <= m[k]; ++i)
            z *= Integer(k) * i;
    }
    return z;
}

inline Integer z_lambda(const Partition& cycle_type) { return z_lambda(to_multiplicity(cycle_type)); }

inline Rational hall_power(const PowerVector& f, const PowerVector& g)
{
    Rational total = 0;
    for (const auto& [l, c] : f) {
        Rational other = g.coefficient(l);
        if (other != 0)
            total += c * other * Rational(z_lambda(l));
    }
    return total;
}

inline Rational hall_schur(const SchurVector& f, const SchurVector& g)
{
    Rational total = 0;
    for (const auto& [a, c] : f) {
        Rational other = g.coefficient(a);
        if (other != 0)
            total += c * other;
    }
    return total;
}

namespace detail {

// Signed hook collapses of every cell of hook length n (all cells when n == 0).
inline SchurVector collapse_hooks(const SchurVector& f, int n)
{
    SchurVector out;
    for (const auto& [a, c] : f) {
        for (Cell cell : cells(a)) {
            if (n != 0 && hook_length(a, cell) != n)
                continue;
            auto removed = remove_hook(a, cell);
            out.add_term(removed.shape, removed.sign == 1 ? c : Rational(-c));
        }
    }
    return out;
}

inline Partition merge_parts(const Partition& a, const Partition& b)
{
    std::vector<int> parts(a.begin(), a.end());
    parts.insert(parts.end(), b.begin(), b.end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

}  // namespace detail

/// Multiplication by p_n in the Schur basis (Murnaghan-Nakayama).
inline SchurVector mult_pn(const SchurVector& f, int n)
{
    if (n < 1)
        throw std::invalid_argument("mult_pn: n must be positive");
    SchurVector out;
    for (const auto& [a, c] : f)
        for (const auto& [g, sign] : add_border_strips(a, n))
            out.add_term(g, sign == 1 ? c : Rational(-c));
    return out;
}

/// Ring product of power-sum expansions (monomials multiply by merging cycle types).
inline PowerVector multiply(const PowerVector& f, const PowerVector& g)
{
    PowerVector out;
    for (const auto& [l, c] : f)
        for (const auto& [m, e] : g)
            out.add_term(detail::merge_parts(l, m), c * e);
    return out;
}

namespace detail {

inline MemoTable<Partition, SchurVector>& power_image_table()
{
    static MemoTable<Partition, SchurVector> table;
    return table;
}

inline MemoTable<Partition, PowerVector>& schur_image_table()
{
    static MemoTable<Partition, PowerVector> table;
    return table;
}

// Schur expansion of p_l, built by peeling the last (smallest) part.
inline SchurVector power_image(const Partition& l)
{
    if (l.empty())
        return one();
    return power_image_table().get_or_compute(l, [&] {
        std::vector<int> prefix(l.begin(), l.end() - 1);
        return mult_pn(power_image(Partition(std::move(prefix))), l[l.length() - 1]);
    });
}

// Power-sum expansion of s_a via column orthogonality of the images p_l -> Schur.
inline PowerVector schur_image(const Partition& a)
{
    if (a.empty())
        return power(Partition{});
    return schur_image_table().get_or_compute(a, [&] {
        PowerVector out;
        for (const auto& l : partitions_of(a.size())) {
            Rational chi = power_image(l).coefficient(a);
            if (chi != 0)
                out.add_term(l, chi / Rational(z_lambda(l)));
        }
        return out;
    });
}

}  // namespace detail

inline SchurVector power_to_schur(const PowerVector& g)
{
    SchurVector out;
    for (const auto& [l, c] : g)
        out.add_scaled(detail::power_image(l), c);
    return out;
}

inline PowerVector schur_to_power(const SchurVector& f)
{
    PowerVector out;
    for (const auto& [a, c] : f)
        out.add_scaled(detail::schur_image(a), c);
    return out;
}

/// Symmetric-group character value <s_a, p_l>, by iterated hook collapses
/// D_1^{l_1} ... D_t^{l_t} followed by pairing with 1.
inline Integer character(const Partition& a, const Partition& cycle_type)
{
    if (a.size() != cycle_type.size()) {
        throw std::invalid_argument("character: |alpha| = " + std::to_string(a.size())
                                    + " but |lambda| = " + std::to_string(cycle_type.size()));
    }
    SchurVector f = schur(a);
    for (int k = cycle_type.length() - 1; k >= 0; --k)
        f = detail::collapse_hooks(f, cycle_type[k]);
    Rational v = f.coefficient(Partition{});
    return v.get_num();
}

inline Integer character(const Partition& a, const Multiplicity& m) { return character(a, to_partition(m)); }

namespace detail {

struct PartitionPairLess {
    bool operator()(const std::pair<Partition, Partition>& x, const std::pair<Partition, Partition>& y) const
    {
        return x < y;
    }
};

inline MemoTable<std::pair<Partition, Partition>, SchurVector, PartitionPairLess>& product_table()
{
    static MemoTable<std::pair<Partition, Partition>, SchurVector, PartitionPairLess> table;
    return table;
}

inline SchurVector schur_pair_product(const Partition& a, const Partition& b)
{
    if (a.empty())
        return schur(b);
    if (b.empty())
        return schur(a);
    auto key = a < b ? std::pair{a, b} : std::pair{b, a};
    return product_table().get_or_compute(key, [&] {
        return power_to_schur(multiply(schur_image(a), schur_image(b)));
    });
}

}  // namespace detail

/// Ring product in the Schur basis, through the power-sum basis.
inline SchurVector product(const SchurVector& f, const SchurVector& g)
{
    SchurVector out;
    for (const auto& [a, c] : f)
        for (const auto& [b, e] : g)
            out.add_scaled(detail::schur_pair_product(a, b), c * e);
    return out;
}

}  // namespace symfund
