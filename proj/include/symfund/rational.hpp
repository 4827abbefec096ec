#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace symfund {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(std::string_view text)
{
    Rational q;
    if (text.empty() || q.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

// Exact quotient num/den as a Rational built from two decimal strings.
inline Rational make_rational(std::string_view num, std::string_view den)
{
    Integer n, d;
    if (n.set_str(std::string(num), 10) != 0 || d.set_str(std::string(den), 10) != 0 || d == 0)
        throw std::invalid_argument("bad rational '" + std::string(num) + "/" + std::string(den) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

}  // namespace symfund
