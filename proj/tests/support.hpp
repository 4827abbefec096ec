#pragma once

#include <random>
#include <utility>
#include <vector>

#include <symfund.hpp>

namespace symfund::testing {

using Terms = std::vector<std::pair<Partition, int>>;

inline SchurVector S(const Terms& terms)
{
    SchurVector out;
    for (const auto& [a, c] : terms)
        out.add_term(a, c);
    return out;
}

inline SLabeledVector L(const std::vector<std::tuple<Partition, int, int>>& terms)
{
    SLabeledVector out;
    for (const auto& [a, label, c] : terms)
        out.add_term({a, label}, c);
    return out;
}

inline Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

/// Random homogeneous Schur vector of degree d with integer coefficients in [-lo, lo].
inline SchurVector random_homogeneous(std::mt19937& rng, int d, int bound = 5)
{
    std::uniform_int_distribution<int> coeff(-bound, bound);
    SchurVector out;
    for (const auto& a : partitions_of(d))
        out.add_term(a, coeff(rng));
    return out;
}

/// Random vector mixing degrees 0..max_degree.
inline SchurVector random_vector(std::mt19937& rng, int max_degree, int bound = 5)
{
    std::uniform_int_distribution<int> coeff(-bound, bound);
    std::bernoulli_distribution keep(0.4);
    SchurVector out;
    for (int d = 0; d <= max_degree; ++d)
        for (const auto& a : partitions_of(d))
            if (keep(rng))
                out.add_term(a, coeff(rng));
    return out;
}

inline Partition random_partition(std::mt19937& rng, int max_size)
{
    const int d = std::uniform_int_distribution<int>(0, max_size)(rng);
    std::vector<int> parts;
    int left = d;
    while (left > 0) {
        const int p = std::uniform_int_distribution<int>(1, left)(rng);
        parts.push_back(p);
        left -= p;
    }
    return normalize(parts);
}

/// All pairs (a, b) of nonempty partitions with |a||b| <= limit.
inline std::vector<std::pair<Partition, Partition>> plethysm_pairs(int limit)
{
    std::vector<std::pair<Partition, Partition>> out;
    for (int m = 1; m <= limit; ++m)
        for (int n = 1; m * n <= limit; ++n)
            for (const auto& a : partitions_of(m))
                for (const auto& b : partitions_of(n))
                    out.emplace_back(a, b);
    return out;
}

}  // namespace symfund::testing
