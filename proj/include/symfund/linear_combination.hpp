#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <utility>

#include "rational.hpp"

namespace symfund {

/// Finite formal sum of basis elements with Rational coefficients. No zero
/// coefficient is ever stored. `Tag` keeps bases with the same key type apart.
template <class Key, class Tag, class Compare = std::less<Key>>
class LinearCombination {
public:
    using key_type = Key;
    using map_type = std::map<Key, Rational, Compare>;
    using const_iterator = typename map_type::const_iterator;

    LinearCombination() = default;

    LinearCombination(std::initializer_list<std::pair<Key, Rational>> terms)
    {
        for (const auto& [k, c] : terms)
            add_term(k, c);
    }

    static LinearCombination term(Key key, Rational coeff = 1)
    {
        LinearCombination v;
        v.add_term(std::move(key), coeff);
        return v;
    }

    void add_term(const Key& key, const Rational& coeff)
    {
        if (coeff == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Rational coefficient(const Key& key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const_iterator begin() const noexcept { return terms_.begin(); }
    const_iterator end() const noexcept { return terms_.end(); }
    const map_type& terms() const noexcept { return terms_; }

    LinearCombination& operator+=(const LinearCombination& o)
    {
        for (const auto& [k, c] : o.terms_)
            add_term(k, c);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& o)
    {
        for (const auto& [k, c] : o.terms_)
            add_term(k, -c);
        return *this;
    }
    LinearCombination& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& kv : terms_)
            kv.second *= s;
        return *this;
    }

    /// Adds s * o without a temporary.
    void add_scaled(const LinearCombination& o, const Rational& s)
    {
        if (s == 0)
            return;
        for (const auto& [k, c] : o.terms_)
            add_term(k, c * s);
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }
    friend LinearCombination operator*(LinearCombination a, const Rational& s) { return a *= s; }
    friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }

    friend bool operator==(const LinearCombination& a, const LinearCombination& b)
    {
        return a.terms_ == b.terms_;
    }

private:
    map_type terms_;
};

/// scale(f, s): same as f * s.
template <class K, class T, class C>
LinearCombination<K, T, C> scale(LinearCombination<K, T, C> f, const Rational& s)
{
    return f *= s;
}

}  // namespace symfund
