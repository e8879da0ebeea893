// Sequence combinatorics: finitely supported exponent sequences, the
// admissible sequences and the bijection onto unrestricted sequences, the
// right-lexicographic order, the sets of fixed reduced degree r and the
// excess function ex(r).
#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "steenrod/fp.hpp"

namespace steenrod {

using Entry = std::uint64_t;

/// Finite sequence of nonnegative integers with an implicit zero tail.
/// Trailing zeros are stripped on construction so equality is structural.
class ExponentSeq
{
public:
    ExponentSeq() = default;
    ExponentSeq(std::initializer_list<Entry> xs) : xs_(xs) { normalize(); }
    explicit ExponentSeq(std::vector<Entry> xs) : xs_(std::move(xs)) { normalize(); }

    /// 1-based access as in (x_1, x_2, ...); zero past the stored length.
    Entry operator[](std::size_t i) const { return i >= 1 && i <= xs_.size() ? xs_[i - 1] : 0; }
    std::size_t length() const { return xs_.size(); }
    bool empty() const { return xs_.empty(); }
    const std::vector<Entry>& entries() const { return xs_; }

    /// Sum of entries.
    Entry weight() const;

    friend bool operator==(const ExponentSeq&, const ExponentSeq&) = default;

    std::string str() const;

private:
    void normalize()
    {
        while (!xs_.empty() && xs_.back() == 0)
            xs_.pop_back();
    }
    std::vector<Entry> xs_;
};

/// Right-lexicographic comparison: the highest index of difference decides.
std::strong_ordering right_lex_cmp(const ExponentSeq& a, const ExponentSeq& b);

/// Strict "greater" in right-lex; used to keep containers in descending order.
struct RightLexGreater
{
    bool operator()(const ExponentSeq& a, const ExponentSeq& b) const { return right_lex_cmp(a, b) > 0; }
};

struct ExponentSeqHash
{
    std::size_t operator()(const ExponentSeq& s) const noexcept;
};

bool is_admissible(const ExponentSeq& s, Prime p);

/// An admissible sequence I: x_i >= p * x_{i+1} for all i.
class GammaSeq
{
public:
    /// Throws std::invalid_argument unless `s` is admissible for `p`.
    GammaSeq(ExponentSeq s, Prime p);

    const ExponentSeq& seq() const { return seq_; }
    Prime prime() const { return p_; }
    /// |I| = sum of entries.
    Entry weight() const { return seq_.weight(); }

    friend bool operator==(const GammaSeq&, const GammaSeq&) = default;

private:
    ExponentSeq seq_;
    Prime p_;
};

/// gamma(I) = (x_1 - p x_2, x_2 - p x_3, ...).
ExponentSeq gamma(const GammaSeq& i);
/// Checked overload; throws std::invalid_argument on a non-admissible sequence.
ExponentSeq gamma(const ExponentSeq& i, Prime p);
/// Inverse of gamma: x_k + p x_{k+1} + p^2 x_{k+2} + ...
GammaSeq gamma_inv(const ExponentSeq& j, Prime p);

/// Weight of position k in the reduced degree: 1 + p + ... + p^{k-1}.
Entry upsilon_weight(Prime p, std::size_t k);

/// Reduced degree sum_k x_k (1 + p + ... + p^{k-1}).
Entry upsilon_degree(const ExponentSeq& j, Prime p);

/// All J with upsilon_degree(J) = r, sorted descending in right-lex.
std::vector<ExponentSeq> enumerate_upsilon_r(Prime p, Entry r);

/// All admissible I with |I| = r, enumerated directly (not through gamma),
/// sorted descending in right-lex.
std::vector<ExponentSeq> enumerate_gamma_r(Prime p, Entry r);

/// The right-lex greatest element of Upsilon_r, built directly as the unique
/// representation with entries <= p where an entry equal to p has only zeros
/// before it.
ExponentSeq greatest_in_upsilon_r(Prime p, Entry r);

/// True iff `j` satisfies both conditions characterizing the greatest element.
bool satisfies_greatest_conditions(const ExponentSeq& j, Prime p);

/// ex(r) = 2 |greatest_in_upsilon_r(p, r)|.
Entry ex(Prime p, Entry r);

/// sum_{i>=1} floor((n-1) / (2 p^i)).
Entry count_k(Prime p, Entry n);

/// Greatest k with n > ex(k) + 2k(p-1), by direct search.
Entry count_k_bruteforce(Prime p, Entry n);

}  // namespace steenrod
