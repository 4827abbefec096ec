#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "derivation.hpp"
#include "errors.hpp"
#include "memo.hpp"
#include "symfun.hpp"

namespace symfund {

/// Basis element s_shape * label^s of the extended ring.
struct LabeledPartition {
    Partition shape;
    int label = 1;
    friend bool operator==(const LabeledPartition&, const LabeledPartition&) = default;
};

struct LabeledOrder {
    bool operator()(const LabeledPartition& x, const LabeledPartition& y) const
    {
        if (x.label != y.label)
            return x.label < y.label;
        return GradedDescending{}(x.shape, y.shape);
    }
};

struct LabeledTag {};
using SLabeledVector = LinearCombination<LabeledPartition, LabeledTag, LabeledOrder>;

/// f * k^s.
inline SLabeledVector labeled(const SchurVector& f, int k)
{
    SLabeledVector out;
    for (const auto& [a, c] : f)
        out.add_term({a, k}, c);
    return out;
}

inline std::set<int> labels(const SLabeledVector& F)
{
    std::set<int> out;
    for (const auto& [key, c] : F)
        out.insert(key.label);
    return out;
}

/// The Lambda-coefficient of k^s in F.
inline SchurVector component(const SLabeledVector& F, int k)
{
    SchurVector out;
    for (const auto& [key, c] : F)
        if (key.label == k)
            out.add_term(key.shape, c);
    return out;
}

inline std::map<int, SchurVector> components(const SLabeledVector& F)
{
    std::map<int, SchurVector> out;
    for (const auto& [key, c] : F)
        out[key.label].add_term(key.shape, c);
    return out;
}

/// D_s: every cell collapses with sign (-1)^leg and records its hook length as the label.
inline SLabeledVector d_s(const SchurVector& f)
{
    SLabeledVector out;
    for (const auto& [a, c] : f) {
        for (Cell cell : cells(a)) {
            auto removed = remove_hook(a, cell);
            out.add_term({std::move(removed.shape), hook_length(a, cell)}, removed.sign == 1 ? c : Rational(-c));
        }
    }
    return out;
}

/// <f h^s, g k^s>_s = <f, g> delta_{h,k}.
inline Rational hall_s(const SLabeledVector& F, const SLabeledVector& G)
{
    Rational total = 0;
    for (const auto& [key, c] : F) {
        Rational other = G.coefficient(key);
        if (other != 0)
            total += c * other;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Plethysm by power sums: p_n[p_k] = p_{nk}, so p_n[g] rescales every
// cycle-type part of g by n.
// ---------------------------------------------------------------------------

inline PowerVector plethysm_power(int n, const PowerVector& g)
{
    if (n < 1)
        throw std::invalid_argument("plethysm_power: n must be positive");
    PowerVector out;
    for (const auto& [l, c] : g) {
        std::vector<int> parts(l.begin(), l.end());
        for (int& p : parts)
            p *= n;
        out.add_term(Partition(std::move(parts)), c);
    }
    return out;
}

namespace detail {

using DilationKey = std::pair<int, Partition>;

inline MemoTable<DilationKey, SchurVector>& dilation_table()
{
    static MemoTable<DilationKey, SchurVector> table;
    return table;
}

inline SchurVector dilated_schur(int n, const Partition& b)
{
    if (n == 1)
        return schur(b);
    return dilation_table().get_or_compute({n, b}, [&] {
        return power_to_schur(plethysm_power(n, schur_to_power(schur(b))));
    });
}

}  // namespace detail

inline SchurVector plethysm_power(int n, const SchurVector& g)
{
    if (n < 1)
        throw std::invalid_argument("plethysm_power: n must be positive");
    SchurVector out;
    for (const auto& [b, c] : g)
        out.add_scaled(detail::dilated_schur(n, b), c);
    return out;
}

/// (f n^s) * (g k^s) = f p_n[g] (nk)^s, extended bilinearly.
inline SLabeledVector star(const SLabeledVector& F, const SLabeledVector& G)
{
    SLabeledVector out;
    const auto gs = components(G);
    for (const auto& [n, f] : components(F)) {
        for (const auto& [k, g] : gs)
            out += labeled(product(f, plethysm_power(n, g)), n * k);
    }
    return out;
}

/// f[g] through the power-sum basis: p_l[g] = prod_n p_n[g]^{m_n(l)}.
inline SchurVector plethysm_general(const SchurVector& f, const SchurVector& g)
{
    const PowerVector fp = schur_to_power(f);
    const PowerVector gp = schur_to_power(g);
    std::map<int, PowerVector> dilations;
    PowerVector total;
    for (const auto& [l, c] : fp) {
        PowerVector term = power(Partition{});
        for (int n : l) {
            auto it = dilations.find(n);
            if (it == dilations.end())
                it = dilations.emplace(n, plethysm_power(n, gp)).first;
            term = multiply(term, it->second);
        }
        total.add_scaled(term, c);
    }
    return power_to_schur(total);
}

// ---------------------------------------------------------------------------
// Shape bounds
// ---------------------------------------------------------------------------

enum class Axis { columns, rows };

inline int extent(const Partition& a, Axis axis) { return axis == Axis::columns ? a.first() : a.length(); }

inline bool supported_on(const SchurVector& f, int t, Axis axis)
{
    return std::all_of(f.begin(), f.end(), [&](const auto& kv) { return extent(kv.first, axis) <= t; });
}

inline bool supported_on(const SLabeledVector& F, int t, Axis axis)
{
    return std::all_of(F.begin(), F.end(), [&](const auto& kv) { return extent(kv.first.shape, axis) <= t; });
}

struct SupportBound {
    int max_columns = 0;
    int max_rows = 0;
    friend bool operator==(const SupportBound&, const SupportBound&) = default;
};

/// Every s_g in s_a[s_b] has g_1 <= b_1 |a| and l(g) <= l(b) |a|.
inline SupportBound support_bound(const Partition& a, const Partition& b)
{
    return {b.first() * a.size(), b.length() * a.size()};
}

// ---------------------------------------------------------------------------
// Recursive plethysm
// ---------------------------------------------------------------------------

struct PlethysmOptions {
    /// Restrict candidate shapes to the support bound.
    bool prune = true;
    /// Worker threads for coefficient extraction (0 or 1: serial).
    unsigned threads = 1;
};

inline SchurVector plethysm(const Partition& a, const Partition& b, const PlethysmOptions& opts = {});

namespace detail {

inline MemoTable<std::pair<Partition, Partition>, SchurVector, PartitionPairLess>& plethysm_table(bool prune)
{
    static MemoTable<std::pair<Partition, Partition>, SchurVector, PartitionPairLess> pruned;
    static MemoTable<std::pair<Partition, Partition>, SchurVector, PartitionPairLess> full;
    return prune ? pruned : full;
}

// (f[s_b]) for f in the Schur basis, each term through the recursive plethysm.
inline SchurVector plethysm_by_schur(const SchurVector& f, const Partition& b, const PlethysmOptions& opts)
{
    SchurVector out;
    for (const auto& [a, c] : f)
        out.add_scaled(plethysm(a, b, opts), c);
    return out;
}

// <L, D_s(s_g)>_s for one candidate shape g.
inline Rational pair_with_ds(const SLabeledVector& L, const Partition& g)
{
    Rational total = 0;
    for (Cell cell : cells(g)) {
        auto removed = remove_hook(g, cell);
        Rational c = L.coefficient({removed.shape, hook_length(g, cell)});
        if (c != 0)
            total += removed.sign == 1 ? c : Rational(-c);
    }
    return total;
}

}  // namespace detail

/// D_s(f)[g], with the recursive plethysm when g is a single s_b.
inline SLabeledVector plethysm_left(const SLabeledVector& F, const SchurVector& g,
                                    const PlethysmOptions& opts = {})
{
    std::optional<Partition> single;
    if (g.size() == 1 && g.begin()->second == 1)
        single = g.begin()->first;
    SLabeledVector out;
    for (const auto& [k, f] : components(F))
        out += labeled(single ? detail::plethysm_by_schur(f, *single, opts) : plethysm_general(f, g), k);
    return out;
}

/// (D_s(f)[g]) * D_s(g), which equals D_s(f[g]); f[g] itself is never formed.
inline SLabeledVector chain_rule(const SchurVector& f, const SchurVector& g, const PlethysmOptions& opts = {})
{
    return star(plethysm_left(d_s(f), g, opts), d_s(g));
}

/// Fourier extraction c_g = <L, D_s(s_g)>_s / d over the candidate shapes.
inline SchurVector extract_coefficients(const SLabeledVector& L, int d, const std::vector<Partition>& candidates,
                                        unsigned threads = 1)
{
    std::vector<Rational> values(candidates.size());
    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < candidates.size(); i += stride)
            values[i] = detail::pair_with_ds(L, candidates[i]) / d;
    };
    if (threads <= 1 || candidates.size() < 2) {
        work(0, 1);
    } else {
        const std::size_t n = std::min<std::size_t>(threads, candidates.size());
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < n; ++t)
            pool.emplace_back(work, t, n);
    }
    SchurVector out;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!is_integer(values[i])) {
            std::ostringstream msg;
            msg << "non-integral plethysm coefficient " << values[i].get_str() << " at " << candidates[i];
            throw InternalConsistencyError(msg.str());
        }
        out.add_term(candidates[i], values[i]);
    }
    return out;
}

inline SchurVector plethysm(const Partition& a, const Partition& b, const PlethysmOptions& opts)
{
    if (a.empty())
        return one();
    if (b.empty())
        return a.length() <= 1 ? one() : SchurVector{};
    if (a.size() == 1)
        return schur(b);

    auto& table = detail::plethysm_table(opts.prune);
    if (auto hit = table.find({a, b}))
        return *hit;

    const int d = a.size() * b.size();
    SLabeledVector left;
    for (Cell cell : cells(a)) {
        auto removed = remove_hook(a, cell);
        left += labeled(plethysm(removed.shape, b, opts), hook_length(a, cell)) * Rational(removed.sign);
    }
    const SLabeledVector L = star(left, d_s(schur(b)));

    std::vector<Partition> candidates;
    if (opts.prune) {
        auto bound = support_bound(a, b);
        candidates = partitions_of(d, bound.max_columns, bound.max_rows);
    } else {
        candidates = partitions_of(d);
    }
    return table.insert({a, b}, extract_coefficients(L, d, candidates, opts.threads));
}

// ---------------------------------------------------------------------------
// Support decomposition f = g + m p_d
// ---------------------------------------------------------------------------

/// The involution s_a -> s_{a*}.
inline SchurVector omega(const SchurVector& f)
{
    SchurVector out;
    for (const auto& [a, c] : f)
        out.add_term(transpose(a), c);
    return out;
}

struct SupportDecomposition {
    SchurVector g;
    Rational m;
};

/// For homogeneous f of degree d whose D_s(f) is supported on t <= d-1
/// columns (rows), returns g supported on t columns (rows) and m with
/// f = g + m p_d.
inline SupportDecomposition decompose_support(const SchurVector& f, int t, Axis axis = Axis::columns)
{
    if (f.is_zero())
        return {SchurVector{}, Rational(0)};
    auto deg = homogeneous_degree(f);
    if (!deg || *deg < 1)
        throw std::invalid_argument("decompose_support: input must be homogeneous of positive degree");
    const int d = *deg;
    if (t < 0 || t > d - 1) {
        throw std::invalid_argument("decompose_support: t = " + std::to_string(t) + " outside 0.."
                                    + std::to_string(d - 1));
    }
    const char* axis_name = axis == Axis::columns ? "columns" : "rows";
    for (const auto& [key, c] : d_s(f)) {
        if (extent(key.shape, axis) > t) {
            std::ostringstream msg;
            msg << "D_s(f) is not supported on " << t << ' ' << axis_name << ": label " << key.label
                << " carries s" << key.shape;
            throw HypothesisError(msg.str());
        }
    }

    const PowerVector pd = power(Partition{d});
    Rational m;
    if (axis == Axis::columns) {
        m = f.coefficient(Partition{d});
    } else {
        // p_d has coefficient (-1)^{d-1} on s_{1^d}
        m = f.coefficient(Partition(std::vector<int>(static_cast<std::size_t>(d), 1)));
        if (d % 2 == 0)
            m = -m;
    }
    SchurVector g = f - power_to_schur(pd) * m;
    if (!supported_on(g, t, axis)) {
        std::ostringstream msg;
        msg << "decompose_support: remainder is not supported on " << t << ' ' << axis_name;
        throw InternalConsistencyError(msg.str());
    }
    return {std::move(g), std::move(m)};
}

}  // namespace symfund
