#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "splethysm.hpp"
#include "symfun.hpp"

namespace symfund {

/// Polynomial in the rank variable r with Rational coefficients (ascending powers).
class RankPolynomial {
public:
    RankPolynomial() = default;
    RankPolynomial(Rational constant) : coeffs_{std::move(constant)} { trim(); }
    RankPolynomial(int constant) : RankPolynomial(Rational(constant)) {}
    explicit RankPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static RankPolynomial r() { return RankPolynomial(std::vector<Rational>{0, 1}); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Rational coefficient(int k) const
    {
        return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : Rational(0);
    }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    Rational operator()(const Rational& x) const
    {
        Rational v = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            v = v * x + *it;
        return v;
    }

    RankPolynomial& operator+=(const RankPolynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    RankPolynomial& operator-=(const RankPolynomial& o) { return *this += o * Rational(-1); }

    friend RankPolynomial operator+(RankPolynomial a, const RankPolynomial& b) { return a += b; }
    friend RankPolynomial operator-(RankPolynomial a, const RankPolynomial& b) { return a -= b; }
    friend RankPolynomial operator-(RankPolynomial a) { return a * Rational(-1); }
    friend RankPolynomial operator*(const RankPolynomial& a, const RankPolynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return RankPolynomial(std::move(out));
    }
    friend RankPolynomial operator*(RankPolynomial a, const Rational& s)
    {
        for (auto& c : a.coeffs_)
            c *= s;
        a.trim();
        return a;
    }
    friend RankPolynomial operator*(const Rational& s, RankPolynomial a) { return std::move(a) * s; }

    friend bool operator==(const RankPolynomial&, const RankPolynomial&) = default;

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// "r^2 - 1", "1/2*r^2 + 1/2*r", "r + 4", "0".
inline std::string to_string(const RankPolynomial& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coefficient(k);
        if (c == 0)
            continue;
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1)
            os << mag.get_str() << '*';
        os << 'r';
        if (k > 1)
            os << '^' << k;
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const RankPolynomial& p) { return os << to_string(p); }

/// Rank of the Schur functor S^a of a rank-r bundle: prod over cells of
/// (r + col - row) / hook.
inline RankPolynomial schur_rank(const Partition& a)
{
    RankPolynomial out = 1;
    for (Cell c : cells(a)) {
        RankPolynomial factor(std::vector<Rational>{Rational(c.col - c.row), Rational(1)});
        out = out * factor * Rational(1, hook_length(a, c));
    }
    return out;
}

inline Integer schur_rank(const Partition& a, int r)
{
    Rational v = schur_rank(a)(Rational(r));
    if (!is_integer(v))
        throw InternalConsistencyError("schur_rank: non-integral rank");
    return v.get_num();
}

/// Rank of a virtual bundle given in the Schur basis.
inline RankPolynomial rank(const SchurVector& f)
{
    RankPolynomial out;
    for (const auto& [a, c] : f)
        out += schur_rank(a) * c;
    return out;
}

/// rk_m(sum_k U_k k^s) = sum_k rk(U_k) k^m.
inline RankPolynomial rk_m(const SLabeledVector& F, int m)
{
    if (m < 0)
        throw std::invalid_argument("rk_m: m must be nonnegative");
    RankPolynomial out;
    for (const auto& [k, f] : components(F)) {
        Integer weight;
        mpz_pow_ui(weight.get_mpz_t(), Integer(k).get_mpz_t(), static_cast<unsigned long>(m));
        out += rank(f) * Rational(weight);
    }
    return out;
}

inline Rational rk_m(const SLabeledVector& F, int m, int r) { return rk_m(F, m)(Rational(r)); }

/// Sh_m(U) = rk_m(D_s(U)).
inline RankPolynomial chern_shadow(const SchurVector& U, int m) { return rk_m(d_s(U), m); }
inline RankPolynomial chern_shadow(const Partition& a, int m) { return chern_shadow(schur(a), m); }
inline Rational chern_shadow(const Partition& a, int m, int r) { return chern_shadow(a, m)(Rational(r)); }

namespace detail {

inline Rational int_power(int base, int exp)
{
    Integer v;
    mpz_pow_ui(v.get_mpz_t(), Integer(base).get_mpz_t(), static_cast<unsigned long>(exp));
    return Rational(v);
}

inline RankPolynomial r_power(int k)
{
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
    c.back() = 1;
    return RankPolynomial(std::move(c));
}

}  // namespace detail

/// Closed form Sh_m(P_l) = r^{l(l)-1} sum_n m_n(l) n^{m+1}, l(l) the number of factors.
inline RankPolynomial shadow_power_monomial(const Partition& cycle_type, int m)
{
    if (cycle_type.empty())
        return {};
    Rational sum = 0;
    for (int n : cycle_type)
        sum += detail::int_power(n, m + 1);
    return detail::r_power(cycle_type.length() - 1) * sum;
}

inline RankPolynomial shadow_power_monomial(const Multiplicity& l, int m)
{
    return shadow_power_monomial(to_partition(l), m);
}

/// Sh_m of a power-sum expansion using only the generator values
/// rk(P_n) = r, Sh_m(P_n) = n^{m+1}, additivity and log-multiplicativity.
inline RankPolynomial shadow_by_generators(const PowerVector& U, int m)
{
    RankPolynomial total;
    for (const auto& [l, c] : U) {
        RankPolynomial rk = 1;
        RankPolynomial sh;
        for (int n : l) {
            const RankPolynomial gen_rk = RankPolynomial::r();
            const RankPolynomial gen_sh = detail::int_power(n, m + 1);
            sh = rk * gen_sh + sh * gen_rk;
            rk = rk * gen_rk;
        }
        total += sh * c;
    }
    return total;
}

struct ChernCheck {
    int rank = 0;
    Rational direct;
    Rational via_generators;
};

struct ChernReport {
    Partition alpha;
    int k = 1;
    RankPolynomial direct;
    RankPolynomial via_generators;
    std::vector<ChernCheck> checks;

    bool symbolic_agreement() const { return direct == via_generators; }
    bool pass() const
    {
        if (!symbolic_agreement())
            return false;
        for (const auto& c : checks)
            if (c.direct != c.via_generators)
                return false;
        return true;
    }
};

/// Compares Sh_{k-1}(S^a E) from D_s(s_a) against the generator route
/// through the power-sum expansion of s_a, symbolically and at each rank.
inline ChernReport verify_chern_identity(const Partition& a, int k, const std::vector<int>& r_values)
{
    if (k < 1 || k > 3)
        throw std::invalid_argument("verify_chern_identity: k must be 1, 2 or 3");
    ChernReport report;
    report.alpha = a;
    report.k = k;
    report.direct = chern_shadow(a, k - 1);
    report.via_generators = shadow_by_generators(schur_to_power(schur(a)), k - 1);
    for (int r : r_values)
        report.checks.push_back({r, report.direct(Rational(r)), report.via_generators(Rational(r))});
    return report;
}

}  // namespace symfund
