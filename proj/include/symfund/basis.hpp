#pragma once

#include <optional>
#include <set>
#include <utility>

#include "linear_combination.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace symfund {

struct SchurTag {};
struct PowerTag {};

/// Element of the ring of symmetric functions in the Schur basis.
using SchurVector = LinearCombination<Partition, SchurTag, GradedDescending>;
/// Element of the ring in the power-sum basis; keys are cycle types, so
/// {(2,1,1) -> c} stands for c p_2 p_1^2.
using PowerVector = LinearCombination<Partition, PowerTag, GradedDescending>;

inline SchurVector schur(Partition a, Rational c = 1) { return SchurVector::term(std::move(a), c); }
inline PowerVector power(Partition l, Rational c = 1) { return PowerVector::term(std::move(l), c); }
inline SchurVector one() { return schur(Partition{}); }

template <class K, class T, class C>
LinearCombination<K, T, C> degree_component(const LinearCombination<K, T, C>& f, int d)
{
    LinearCombination<K, T, C> out;
    for (const auto& [k, c] : f)
        if (k.size() == d)
            out.add_term(k, c);
    return out;
}

template <class K, class T, class C>
std::set<int> degrees(const LinearCombination<K, T, C>& f)
{
    std::set<int> out;
    for (const auto& [k, c] : f)
        out.insert(k.size());
    return out;
}

/// The degree of a nonzero homogeneous vector; nullopt for zero or mixed degree.
template <class K, class T, class C>
std::optional<int> homogeneous_degree(const LinearCombination<K, T, C>& f)
{
    auto ds = degrees(f);
    if (ds.size() != 1)
        return std::nullopt;
    return *ds.begin();
}

}  // namespace symfund
