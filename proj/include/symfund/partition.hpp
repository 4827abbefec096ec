#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symfund {

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the unique partition of 0.
class Partition {
public:
    Partition() = default;

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
            size_ += parts_[i];
        }
    }

    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part i (0-based); zero past the end.
    int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    int operator[](std::size_t i) const noexcept { return part(i); }
    int first() const noexcept { return part(0); }

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vector() const noexcept { return parts_; }
    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    /// Number of parts equal to k.
    int multiplicity(int k) const noexcept
    {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& a)
{
    os << '(';
    for (int i = 0; i < a.length(); ++i)
        os << (i ? "," : "") << a[i];
    return os << ')';
}

/// Larger size first, then lexicographically larger first: (4) < (3,1) < ... < (1^4) < (3).
struct GradedDescending {
    bool operator()(const Partition& a, const Partition& b) const
    {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a > b;
    }
};

/// Exponent vector (m_1, ..., m_t) of a partition: m_k parts equal to k.
struct Multiplicity {
    std::vector<int> mult;

    Multiplicity() = default;
    Multiplicity(std::initializer_list<int> m) : Multiplicity(std::vector<int>(m)) {}
    explicit Multiplicity(std::vector<int> m) : mult(std::move(m))
    {
        for (int v : mult)
            if (v < 0)
                throw std::invalid_argument("multiplicities must be nonnegative");
        while (!mult.empty() && mult.back() == 0)
            mult.pop_back();
    }

    /// Weighted size m_1 + 2 m_2 + ... + t m_t.
    int size() const noexcept
    {
        int s = 0;
        for (std::size_t k = 0; k < mult.size(); ++k)
            s += static_cast<int>(k + 1) * mult[k];
        return s;
    }
    int operator[](int k) const noexcept
    {
        return k >= 1 && static_cast<std::size_t>(k) <= mult.size() ? mult[k - 1] : 0;
    }

    friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

inline Multiplicity to_multiplicity(const Partition& a)
{
    std::vector<int> m(static_cast<std::size_t>(a.first()), 0);
    for (int p : a)
        ++m[p - 1];
    return Multiplicity(std::move(m));
}

inline Partition to_partition(const Multiplicity& m)
{
    std::vector<int> parts;
    for (int k = static_cast<int>(m.mult.size()); k >= 1; --k)
        parts.insert(parts.end(), m.mult[k - 1], k);
    return Partition(std::move(parts));
}

/// A box of a Young diagram, 1-based, row 1 at the top.
struct Cell {
    int row = 1;
    int col = 1;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Cell& c)
{
    return os << '(' << c.row << ',' << c.col << ')';
}

/// Drops zeros and sorts weakly decreasing.
inline Partition normalize(std::vector<int> seq)
{
    for (int v : seq)
        if (v < 0)
            throw std::invalid_argument("normalize: negative entry");
    std::erase(seq, 0);
    std::sort(seq.begin(), seq.end(), std::greater<>());
    return Partition(std::move(seq));
}

inline Partition transpose(const Partition& a)
{
    std::vector<int> t(static_cast<std::size_t>(a.first()), 0);
    for (int p : a)
        for (int k = 0; k < p; ++k)
            ++t[k];
    return Partition(std::move(t));
}

inline bool contains(const Partition& a, Cell c) noexcept
{
    return c.row >= 1 && c.col >= 1 && c.row <= a.length() && c.col <= a[c.row - 1];
}

namespace detail {

inline void require_cell(const Partition& a, Cell c)
{
    if (!contains(a, c)) {
        throw std::out_of_range("cell (" + std::to_string(c.row) + "," + std::to_string(c.col)
                                + ") lies outside the diagram");
    }
}

// Length of column `col` (1-based) without building the transpose.
inline int column_length(const Partition& a, int col) noexcept
{
    int n = 0;
    while (n < a.length() && a[n] >= col)
        ++n;
    return n;
}

}  // namespace detail

inline int arm_length(const Partition& a, Cell c) { return a[c.row - 1] - c.col; }
inline int leg_length(const Partition& a, Cell c) { return detail::column_length(a, c.col) - c.row; }

inline int hook_length(const Partition& a, Cell c)
{
    detail::require_cell(a, c);
    return arm_length(a, c) + leg_length(a, c) + 1;
}

/// All cells of `a` in row-major order.
inline std::vector<Cell> cells(const Partition& a)
{
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(a.size()));
    for (int i = 1; i <= a.length(); ++i)
        for (int j = 1; j <= a[i - 1]; ++j)
            out.push_back({i, j});
    return out;
}

inline std::vector<Cell> cells_with_hook(const Partition& a, int n)
{
    std::vector<Cell> out;
    if (n < 1)
        return out;
    for (Cell c : cells(a))
        if (hook_length(a, c) == n)
            out.push_back(c);
    return out;
}

/// A partition together with the sign (+1 or -1) it is produced with.
struct SignedPartition {
    Partition shape;
    int sign = 1;
    friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
};

namespace detail {

// First-column hook lengths padded to `len` entries: b_i = a_i + len - i.
inline std::vector<int> beta_numbers(const Partition& a, int len)
{
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        beta[i] = a[i] + (len - 1 - i);
    return beta;
}

// Inverse of beta_numbers; `beta` must be strictly decreasing and nonnegative.
inline Partition from_beta_numbers(const std::vector<int>& beta)
{
    const int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        int p = beta[i] - (len - 1 - i);
        if (p > 0)
            parts.push_back(p);
    }
    return Partition(std::move(parts));
}

// Replace beta[idx] by `value` (absent from beta), re-sort, and return the
// sign of the sorting permutation: (-1)^(number of betas strictly between).
inline std::pair<Partition, int> move_bead(std::vector<int> beta, std::size_t idx, int value)
{
    const int lo = std::min(beta[idx], value);
    const int hi = std::max(beta[idx], value);
    int between = 0;
    for (int b : beta)
        if (b > lo && b < hi)
            ++between;
    beta[idx] = value;
    std::sort(beta.begin(), beta.end(), std::greater<>());
    return {from_beta_numbers(beta), between % 2 == 0 ? 1 : -1};
}

}  // namespace detail

/// Removes the rim hook attached to cell `c`: the result has |a| - hook(c)
/// boxes and the sign is (-1)^leg(c).
inline SignedPartition remove_hook(const Partition& a, Cell c)
{
    detail::require_cell(a, c);
    const int len = a.length();
    const int h = hook_length(a, c);
    auto beta = detail::beta_numbers(a, len);
    const auto idx = static_cast<std::size_t>(c.row - 1);
    auto [shape, sign] = detail::move_bead(beta, idx, beta[idx] - h);
    return {std::move(shape), sign};
}

/// Every g containing b with g/b a border strip of n boxes, signed by
/// (-1)^height. Lexicographically decreasing order.
inline std::vector<SignedPartition> add_border_strips(const Partition& b, int n)
{
    std::vector<SignedPartition> out;
    if (n < 1)
        return out;
    const int len = b.length() + n;
    const auto beta = detail::beta_numbers(b, len);
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] + n;
        if (std::find(beta.begin(), beta.end(), target) != beta.end())
            continue;
        auto [shape, sign] = detail::move_bead(beta, i, target);
        out.push_back({std::move(shape), sign});
    }
    std::sort(out.begin(), out.end(),
              [](const SignedPartition& x, const SignedPartition& y) { return x.shape > y.shape; });
    return out;
}

/// Partitions of d in reverse-lexicographic order, optionally bounded in
/// first part and length.
inline std::vector<Partition> partitions_of(int d, std::optional<int> max_first_part = std::nullopt,
                                            std::optional<int> max_length = std::nullopt)
{
    std::vector<Partition> out;
    if (d < 0)
        return out;
    const int first_cap = std::min(d, max_first_part.value_or(d));
    const int len_cap = max_length.value_or(d);
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= len_cap)
            return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            // p parts of size at most p cannot fill `remaining` within the length cap
            if (static_cast<long>(p) * (len_cap - static_cast<long>(cur.size())) < remaining)
                break;
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, first_cap);
    return out;
}

}  // namespace symfund
