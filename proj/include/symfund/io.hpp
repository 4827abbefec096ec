#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "shadows.hpp"
#include "splethysm.hpp"
#include "symfun.hpp"

namespace symfund::io {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Partitions: "3,2,2"; the empty partition is "-".
// ---------------------------------------------------------------------------

inline std::string format_partition(const Partition& a)
{
    if (a.empty())
        return "-";
    std::string out;
    for (int i = 0; i < a.length(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(a[i]);
    }
    return out;
}

inline std::vector<int> parse_int_list(std::string_view text, std::size_t offset = 0)
{
    std::vector<int> parts;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_ws();
    std::size_t end = text.size();
    while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1])))
        --end;
    if (i == end || text.substr(i, end - i) == "-")
        return parts;
    while (true) {
        skip_ws();
        if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected a positive integer", offset + i);
        long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000)
                throw ParseError("part too large", offset + i);
            ++i;
        }
        parts.push_back(static_cast<int>(v));
        skip_ws();
        if (i == text.size())
            break;
        if (text[i] != ',')
            throw ParseError("expected ','", offset + i);
        ++i;
    }
    return parts;
}

inline Partition parse_partition(std::string_view text)
{
    auto parts = parse_int_list(text);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0)
            throw ParseError("partition parts must be positive", i);
        if (i > 0 && parts[i] > parts[i - 1])
            throw ParseError("partition parts must be weakly decreasing", i);
    }
    return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Text rendering: 2*s[3,1] - s[2,2], 1/2*p[1,1] + 1/2*p[2], s[3]*1^s + 4^s
// ---------------------------------------------------------------------------

namespace detail {

inline std::string bracket(const Partition& a)
{
    std::string out = "[";
    for (int i = 0; i < a.length(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(a[i]);
    }
    return out + "]";
}

// Appends one signed term; `body` is empty for a bare constant.
inline void append_term(std::string& out, const Rational& c, const std::string& body)
{
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty())
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    if (body.empty())
        out += mag.get_str();
    else if (mag == 1)
        out += body;
    else
        out += mag.get_str() + "*" + body;
}

template <class Vector>
std::string render_basis(const Vector& f, char letter)
{
    std::string out;
    for (const auto& [a, c] : f)
        append_term(out, c, a.empty() ? std::string() : std::string(1, letter) + bracket(a));
    return out.empty() ? "0" : out;
}

}  // namespace detail

inline std::string to_text(const SchurVector& f) { return detail::render_basis(f, 's'); }
inline std::string to_text(const PowerVector& f) { return detail::render_basis(f, 'p'); }

inline std::string to_text(const SLabeledVector& F)
{
    std::string out;
    for (const auto& [k, f] : components(F)) {
        const std::string label = std::to_string(k) + "^s";
        if (f.size() == 1) {
            const auto& [a, c] = *f.begin();
            detail::append_term(out, c, a.empty() ? label : "s" + detail::bracket(a) + "*" + label);
        } else {
            out += out.empty() ? "" : " + ";
            out += "(" + to_text(f) + ")*" + label;
        }
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// LaTeX rendering
// ---------------------------------------------------------------------------

namespace detail {

inline std::string latex_rational(const Rational& q)
{
    if (is_integer(q))
        return q.get_num().get_str();
    return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

inline std::string latex_basis(const Partition& a, char letter)
{
    std::string out(1, letter);
    out += "_{";
    for (int i = 0; i < a.length(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(a[i]);
    }
    return out + "}";
}

template <class Vector>
std::string latex_vector(const Vector& f, char letter)
{
    std::string out;
    for (const auto& [a, c] : f) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
        if (a.empty())
            out += latex_rational(mag);
        else
            out += (mag == 1 ? std::string() : latex_rational(mag) + " ") + latex_basis(a, letter);
    }
    return out.empty() ? "0" : out;
}

}  // namespace detail

inline std::string to_latex(const SchurVector& f) { return detail::latex_vector(f, 's'); }
inline std::string to_latex(const PowerVector& f) { return detail::latex_vector(f, 'p'); }

inline std::string to_latex(const SLabeledVector& F)
{
    std::string out;
    for (const auto& [k, f] : components(F)) {
        out += out.empty() ? "" : " + ";
        out += "\\left(" + to_latex(f) + "\\right) \\cdot " + std::to_string(k) + "^s";
    }
    return out.empty() ? "0" : out;
}

inline std::string to_latex(const RankPolynomial& p)
{
    std::string text = to_string(p);
    std::string out;
    for (char ch : text)
        out += ch == '*' ? std::string(" ") : std::string(1, ch);
    return out;
}

// ---------------------------------------------------------------------------
// JSON: {"terms":[{"partition":[3,1],"num":"2","den":"1","label":4}]}
// ---------------------------------------------------------------------------

inline json rational_json(const Rational& q)
{
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

inline Rational rational_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string()
        || !j["den"].is_string())
        throw std::invalid_argument("rational must be an object with string fields num and den");
    return make_rational(j["num"].get<std::string>(), j["den"].get<std::string>());
}

inline json to_json(const SchurVector& f)
{
    json terms = json::array();
    for (const auto& [a, c] : f) {
        json t = rational_json(c);
        t["partition"] = a.vector();
        terms.push_back(std::move(t));
    }
    return json{{"terms", std::move(terms)}};
}

inline json to_json(const SLabeledVector& F)
{
    json terms = json::array();
    for (const auto& [key, c] : F) {
        json t = rational_json(c);
        t["partition"] = key.shape.vector();
        t["label"] = key.label;
        terms.push_back(std::move(t));
    }
    return json{{"terms", std::move(terms)}};
}

namespace detail {

inline Partition partition_from_json(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("partition must be an array of integers");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw std::invalid_argument("partition must be an array of integers");
        parts.push_back(v.get<int>());
    }
    return Partition(std::move(parts));
}

inline const json& terms_of(const json& j)
{
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("expected an object with a \"terms\" array");
    return j["terms"];
}

}  // namespace detail

inline SchurVector schur_from_json(const json& j)
{
    SchurVector out;
    for (const auto& t : detail::terms_of(j)) {
        if (t.contains("label"))
            throw std::invalid_argument("labeled term in an unlabeled vector");
        out.add_term(detail::partition_from_json(t.at("partition")), rational_from_json(t));
    }
    return out;
}

inline SLabeledVector labeled_from_json(const json& j)
{
    SLabeledVector out;
    for (const auto& t : detail::terms_of(j)) {
        if (!t.contains("label") || !t["label"].is_number_integer() || t["label"].get<int>() < 1)
            throw std::invalid_argument("labeled term needs a positive integer label");
        out.add_term({detail::partition_from_json(t.at("partition")), t["label"].get<int>()},
                     rational_from_json(t));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Expressions over s[...], p[...], rationals, + - * and parentheses.
// ---------------------------------------------------------------------------

namespace detail {

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    SchurVector parse()
    {
        SchurVector v = expression();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return v;
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char ch)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    SchurVector expression()
    {
        SchurVector total = signed_term();
        while (true) {
            if (accept('+'))
                total += term();
            else if (accept('-'))
                total -= term();
            else
                return total;
        }
    }

    SchurVector signed_term()
    {
        if (accept('-'))
            return -term();
        accept('+');
        return term();
    }

    SchurVector term()
    {
        SchurVector v = factor();
        while (accept('*'))
            v = product(v, factor());
        return v;
    }

    SchurVector factor()
    {
        skip_ws();
        if (pos_ == text_.size())
            throw ParseError("unexpected end of expression", pos_);
        const char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            SchurVector v = expression();
            if (!accept(')'))
                throw ParseError("expected ')'", pos_);
            return v;
        }
        if (ch == 's' || ch == 'p') {
            ++pos_;
            const std::size_t list_start = pos_;
            if (!accept('['))
                throw ParseError("expected '[' after '" + std::string(1, ch) + "'", list_start);
            const std::size_t close = text_.find(']', pos_);
            if (close == std::string_view::npos)
                throw ParseError("missing ']'", pos_);
            auto parts = parse_int_list(text_.substr(pos_, close - pos_), pos_);
            const std::size_t at = pos_;
            pos_ = close + 1;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (parts[i] == 0)
                    throw ParseError("parts must be positive", at);
            }
            if (ch == 'p')
                return power_to_schur(power(normalize(parts)));
            for (std::size_t i = 1; i < parts.size(); ++i) {
                if (parts[i] > parts[i - 1])
                    throw ParseError("Schur index must be weakly decreasing", at);
            }
            return schur(Partition(std::move(parts)));
        }
        if (std::isdigit(static_cast<unsigned char>(ch)))
            return schur(Partition{}, number());
        throw ParseError("unexpected '" + std::string(1, ch) + "'", pos_);
    }

    Rational number()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::string num(text_.substr(start, pos_ - start));
        std::string den = "1";
        if (pos_ < text_.size() && text_[pos_] == '/') {
            const std::size_t den_start = ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == den_start)
                throw ParseError("expected a denominator", den_start);
            den = std::string(text_.substr(den_start, pos_ - den_start));
            if (den.find_first_not_of('0') == std::string::npos)
                throw ParseError("zero denominator", den_start);
        }
        return make_rational(num, den);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses e.g. "2*s[3,1] - 1/2*p[2,1] + (s[1] + 1)*s[1]" into the Schur basis.
inline SchurVector parse_expression(std::string_view text) { return detail::ExpressionParser(text).parse(); }

}  // namespace symfund::io
