#pragma once

// Brute-force reference computations in finitely many variables. Nothing in
// here calls the main paths (hook removal, Murnaghan-Nakayama, the
// derivation); only the value types are shared.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "basis.hpp"
#include "errors.hpp"
#include "memo.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace symfund::oracle {

/// Symmetric polynomial in `nvars` variables, stored by monomial orbits: the
/// key mu stands for every exponent vector that sorts to mu.
class MonomialPoly {
public:
    using Orbits = std::map<Partition, Rational, GradedDescending>;

    explicit MonomialPoly(int nvars) : nvars_(nvars)
    {
        if (nvars < 1)
            throw std::invalid_argument("MonomialPoly: nvars must be positive");
    }

    /// Builds from explicit exponent vectors; every permutation of a present
    /// vector must carry the same coefficient.
    static MonomialPoly from_exponents(int nvars, const std::vector<std::pair<std::vector<int>, Rational>>& terms)
    {
        MonomialPoly out(nvars);
        std::map<std::vector<int>, Rational> full;
        for (const auto& [e, c] : terms) {
            if (static_cast<int>(e.size()) != nvars)
                throw std::invalid_argument("MonomialPoly: exponent vector length differs from nvars");
            full[e] += c;
        }
        std::erase_if(full, [](const auto& kv) { return kv.second == 0; });
        for (const auto& [e, c] : full) {
            std::vector<int> perm = e;
            std::sort(perm.begin(), perm.end());
            do {
                auto it = full.find(perm);
                if (it == full.end() || it->second != c)
                    throw std::invalid_argument("MonomialPoly: input is not symmetric");
            } while (std::next_permutation(perm.begin(), perm.end()));
            std::vector<int> sorted = e;
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            out.orbits_[normalize(sorted)] = c;
        }
        return out;
    }

    int nvars() const noexcept { return nvars_; }
    const Orbits& orbits() const noexcept { return orbits_; }
    bool is_zero() const noexcept { return orbits_.empty(); }

    Rational coefficient(const Partition& mu) const
    {
        auto it = orbits_.find(mu);
        return it == orbits_.end() ? Rational(0) : it->second;
    }

    /// Coefficient of x^e for an arbitrary exponent vector.
    Rational coefficient(const std::vector<int>& exponents) const { return coefficient(normalize(exponents)); }

    /// Orbits longer than nvars vanish.
    void add(const Partition& mu, const Rational& c)
    {
        if (c == 0 || mu.length() > nvars_)
            return;
        auto [it, inserted] = orbits_.try_emplace(mu, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                orbits_.erase(it);
        }
    }

    /// Number of distinct exponent vectors in the orbit of mu.
    Integer orbit_size(const Partition& mu) const
    {
        Integer n = 1;
        for (int i = 0; i < mu.length(); ++i)
            n *= nvars_ - i;
        int prev = 0, run = 0;
        auto close_run = [&] {
            for (int i = 2; i <= run; ++i)
                n /= i;
        };
        for (int p : mu) {
            if (p != prev) {
                close_run();
                prev = p;
                run = 0;
            }
            ++run;
        }
        close_run();
        return n;
    }

    /// Value at x_1 = ... = x_nvars = 1.
    Rational evaluate_at_ones() const
    {
        Rational v = 0;
        for (const auto& [mu, c] : orbits_)
            v += c * Rational(orbit_size(mu));
        return v;
    }

    MonomialPoly& operator+=(const MonomialPoly& o)
    {
        require_same_vars(o);
        for (const auto& [mu, c] : o.orbits_)
            add(mu, c);
        return *this;
    }
    MonomialPoly& operator-=(const MonomialPoly& o)
    {
        require_same_vars(o);
        for (const auto& [mu, c] : o.orbits_)
            add(mu, -c);
        return *this;
    }
    MonomialPoly& operator*=(const Rational& s)
    {
        if (s == 0)
            orbits_.clear();
        for (auto& kv : orbits_)
            kv.second *= s;
        return *this;
    }

    friend MonomialPoly operator+(MonomialPoly a, const MonomialPoly& b) { return a += b; }
    friend MonomialPoly operator-(MonomialPoly a, const MonomialPoly& b) { return a -= b; }
    friend MonomialPoly operator*(MonomialPoly a, const Rational& s) { return a *= s; }
    friend bool operator==(const MonomialPoly& a, const MonomialPoly& b)
    {
        return a.nvars_ == b.nvars_ && a.orbits_ == b.orbits_;
    }

    /// Polynomial product: the coefficient of x^mu collects P[a] Q[mu - a]
    /// over all exponent vectors a <= mu.
    friend MonomialPoly operator*(const MonomialPoly& P, const MonomialPoly& Q)
    {
        P.require_same_vars(Q);
        MonomialPoly out(P.nvars_);
        std::map<int, std::vector<std::pair<Partition, Rational>>> p_by_degree;
        for (const auto& kv : P.orbits_)
            p_by_degree[kv.first.size()].push_back(kv);
        std::vector<int> q_degrees;
        for (const auto& kv : Q.orbits_)
            if (q_degrees.empty() || q_degrees.back() != kv.first.size())
                q_degrees.push_back(kv.first.size());

        std::vector<int> a;
        for (const auto& [dp, unused] : p_by_degree) {
            for (int dq : q_degrees) {
                for (const auto& mu : partitions_of(dp + dq, std::nullopt, P.nvars_)) {
                    Rational total = 0;
                    a.assign(static_cast<std::size_t>(mu.length()), 0);
                    auto rec = [&](auto&& self, int i, int remaining) -> void {
                        if (i == mu.length()) {
                            if (remaining != 0)
                                return;
                            std::vector<int> b(a.size());
                            for (std::size_t j = 0; j < a.size(); ++j)
                                b[j] = mu[j] - a[j];
                            Rational pc = P.coefficient(a);
                            if (pc == 0)
                                return;
                            Rational qc = Q.coefficient(b);
                            if (qc != 0)
                                total += pc * qc;
                            return;
                        }
                        int tail = 0;
                        for (int j = i + 1; j < mu.length(); ++j)
                            tail += mu[j];
                        const int lo = std::max(0, remaining - tail);
                        const int hi = std::min(mu[i], remaining);
                        for (int v = lo; v <= hi; ++v) {
                            a[i] = v;
                            self(self, i + 1, remaining - v);
                        }
                    };
                    rec(rec, 0, dp);
                    out.add(mu, total);
                }
            }
        }
        return out;
    }

private:
    void require_same_vars(const MonomialPoly& o) const
    {
        if (o.nvars_ != nvars_)
            throw std::invalid_argument("MonomialPoly: variable counts differ");
    }

    int nvars_;
    Orbits orbits_;
};

namespace detail {

inline symfund::detail::MemoTable<std::pair<Partition, Partition>, Integer>& kostka_table()
{
    static symfund::detail::MemoTable<std::pair<Partition, Partition>, Integer> table;
    return table;
}

// Kostka number for shape a and content (c_1, ..., c_k): the largest letter k
// fills a horizontal strip of c_k boxes; strip it and recurse.
inline Integer kostka_content(const Partition& a, const std::vector<int>& content)
{
    if (content.empty())
        return a.empty() ? Integer(1) : Integer(0);
    std::vector<int> rest(content.begin(), content.end() - 1);
    const int strip = content.back();
    Integer total = 0;
    std::vector<int> inner(a.begin(), a.end());
    const int len = a.length();
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == len) {
            if (remaining == 0)
                total += kostka_content(normalize(inner), rest);
            return;
        }
        // row i keeps between a_{i+1} and a_i boxes
        const int below = i + 1 < len ? a[i + 1] : 0;
        for (int keep = a[i]; keep >= below; --keep) {
            const int removed = a[i] - keep;
            if (removed > remaining)
                break;
            inner[i] = keep;
            self(self, i + 1, remaining - removed);
        }
        inner[i] = a[i];
    };
    rec(rec, 0, strip);
    return total;
}

}  // namespace detail

/// Number of semistandard tableaux of shape a and content mu.
inline Integer kostka(const Partition& a, const Partition& mu)
{
    if (a.size() != mu.size())
        return 0;
    return detail::kostka_table().get_or_compute({a, mu}, [&] {
        return detail::kostka_content(a, std::vector<int>(mu.begin(), mu.end()));
    });
}

/// s_a(x_1, ..., x_nvars) as the tableau sum; zero when nvars < l(a).
inline MonomialPoly schur_poly(const Partition& a, int nvars)
{
    MonomialPoly out(nvars);
    for (const auto& mu : partitions_of(a.size(), std::nullopt, nvars))
        out.add(mu, Rational(kostka(a, mu)));
    return out;
}

inline MonomialPoly power_poly(int n, int nvars)
{
    MonomialPoly out(nvars);
    out.add(n == 0 ? Partition{} : Partition{n}, n == 0 ? Rational(nvars) : Rational(1));
    return out;
}

/// p_n[P]: every monomial raised to the n-th power.
inline MonomialPoly substitute_power(int n, const MonomialPoly& P)
{
    MonomialPoly out(P.nvars());
    for (const auto& [mu, c] : P.orbits()) {
        std::vector<int> parts(mu.begin(), mu.end());
        for (int& p : parts)
            p *= n;
        out.add(Partition(std::move(parts)), c);
    }
    return out;
}

inline MonomialPoly expand(const SchurVector& f, int nvars)
{
    MonomialPoly out(nvars);
    for (const auto& [a, c] : f)
        out += schur_poly(a, nvars) * c;
    return out;
}

inline int max_degree(const SchurVector& f)
{
    int d = 0;
    for (const auto& [a, c] : f)
        d = std::max(d, a.size());
    return d;
}

inline MonomialPoly product_oracle(const SchurVector& f, const SchurVector& g, int nvars)
{
    if (nvars < max_degree(f) + max_degree(g))
        throw std::invalid_argument("product_oracle: insufficient nvars");
    return expand(f, nvars) * expand(g, nvars);
}

/// f[g] with f in power sums: p_l[g] = prod_n g(x_1^n, x_2^n, ...).
inline MonomialPoly plethysm_oracle(const PowerVector& f_power, const SchurVector& g, int nvars)
{
    int fdeg = 0;
    for (const auto& [l, c] : f_power)
        fdeg = std::max(fdeg, l.size());
    if (nvars < fdeg * max_degree(g))
        throw std::invalid_argument("plethysm_oracle: insufficient nvars");

    const MonomialPoly gp = expand(g, nvars);
    std::map<int, MonomialPoly> dilated;
    std::map<Partition, MonomialPoly> prefix_products;
    MonomialPoly unit(nvars);
    unit.add(Partition{}, 1);

    auto dil = [&](int n) -> const MonomialPoly& {
        auto it = dilated.find(n);
        if (it == dilated.end())
            it = dilated.emplace(n, substitute_power(n, gp)).first;
        return it->second;
    };
    auto prod = [&](auto&& self, const Partition& l) -> MonomialPoly {
        if (l.empty())
            return unit;
        auto it = prefix_products.find(l);
        if (it != prefix_products.end())
            return it->second;
        std::vector<int> prefix(l.begin(), l.end() - 1);
        MonomialPoly v = self(self, Partition(std::move(prefix))) * dil(l[l.length() - 1]);
        prefix_products.emplace(l, v);
        return v;
    };

    MonomialPoly out(nvars);
    for (const auto& [l, c] : f_power)
        out += prod(prod, l) * c;
    return out;
}

/// Schur expansion of a homogeneous symmetric polynomial of degree d,
/// peeling leading monomials in lexicographic (dominance-compatible) order.
inline SchurVector monomial_to_schur(const MonomialPoly& P, int d)
{
    if (P.nvars() < d)
        throw std::invalid_argument("monomial_to_schur: need nvars >= degree for a faithful expansion");
    for (const auto& [mu, c] : P.orbits())
        if (mu.size() != d)
            throw std::invalid_argument("monomial_to_schur: input is not homogeneous of degree " + std::to_string(d));
    MonomialPoly residue = P;
    SchurVector out;
    for (const auto& mu : partitions_of(d)) {
        Rational c = residue.coefficient(mu);
        if (c == 0)
            continue;
        out.add_term(mu, c);
        residue -= schur_poly(mu, P.nvars()) * c;
    }
    if (!residue.is_zero())
        throw InternalConsistencyError("monomial_to_schur: nonzero residue after exhausting partitions");
    return out;
}

inline Integer z_value(const Partition& l)
{
    Integer z = 1;
    int prev = 0, run = 0;
    for (int p : l) {
        if (p != prev) {
            prev = p;
            run = 0;
        }
        ++run;
        z *= Integer(p) * run;
    }
    return z;
}

/// Power-sum expansion of s_a from characters read off the monomial
/// expansion of each p_l: s_a = sum_l <p_l, s_a> / z_l p_l.
inline PowerVector schur_in_power_sums(const Partition& a)
{
    const int d = a.size();
    if (d == 0)
        return power(Partition{});
    static symfund::detail::MemoTable<int, std::map<Partition, SchurVector>> tables;
    const auto table = tables.get_or_compute(d, [d] {
        std::map<Partition, SchurVector> images;
        for (const auto& l : partitions_of(d)) {
            MonomialPoly pl(d);
            pl.add(Partition{}, 1);
            for (int n : l)
                pl = pl * power_poly(n, d);
            images.emplace(l, monomial_to_schur(pl, d));
        }
        return images;
    });
    PowerVector out;
    for (const auto& [l, image] : table) {
        Rational chi = image.coefficient(a);
        if (chi != 0)
            out.add_term(l, chi / Rational(z_value(l)));
    }
    return out;
}

/// Schur expansion of s_a[s_b] computed entirely by brute force; nvars
/// defaults to the degree of the result.
inline SchurVector plethysm_schur(const Partition& a, const Partition& b, int nvars = 0)
{
    const int d = a.size() * b.size();
    if (nvars == 0)
        nvars = std::max(d, 1);
    PowerVector fp;
    for (const auto& [l, c] : schur_in_power_sums(a))
        fp.add_term(l, c);
    return monomial_to_schur(plethysm_oracle(fp, schur(b), nvars), d);
}

inline SchurVector product_schur(const Partition& a, const Partition& b, int nvars = 0)
{
    const int d = a.size() + b.size();
    if (nvars == 0)
        nvars = std::max(d, 1);
    return monomial_to_schur(product_oracle(schur(a), schur(b), nvars), d);
}

}  // namespace symfund::oracle
