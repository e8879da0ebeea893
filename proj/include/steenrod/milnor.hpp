// The quotient A_p/(beta) of the mod-p Steenrod algebra.
//
// Elements are sparse F_p-combinations of basis vectors indexed by exponent
// sequences. Two bases are used:
//   * the Milnor basis, where the sequence J indexes the dual of xi^J and the
//     topological degree is sum 2 x_i (p^i - 1);
//   * the Cartan-Serre (admissible) basis, where an admissible I indexes the
//     composite P^{x_1} P^{x_2} ... and the degree is 2(p-1)|I|.
// At p = 2 the unified convention P^i = Sq^{2i}, xi_i = zeta_i^2 is in force,
// so one code path serves every prime.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "steenrod/fp.hpp"
#include "steenrod/seqcomb.hpp"

namespace steenrod {

/// Topological degree of the Milnor basis element indexed by `j`.
Entry milnor_degree(const ExponentSeq& j, Prime p);

/// Topological degree of P^I.
inline Entry admissible_degree(const ExponentSeq& i, Prime p) { return 2 * (p - 1) * i.weight(); }

struct MilnorBasis
{
    static Entry degree(const ExponentSeq& j, Prime p) { return milnor_degree(j, p); }
    static constexpr const char* name = "xi";
};

struct AdmissibleBasis
{
    static Entry degree(const ExponentSeq& i, Prime p) { return admissible_degree(i, p); }
    static constexpr const char* name = "P";
};

/// Sparse F_p-linear combination of basis vectors; never stores a zero
/// coefficient. Iteration order is descending right-lex.
template <class Basis>
class FpCombination
{
public:
    using Terms = std::map<ExponentSeq, Coeff, RightLexGreater>;

    explicit FpCombination(Prime p) : p_(p) {}
    static FpCombination unit(Prime p) { return basis(ExponentSeq{}, p); }
    static FpCombination basis(const ExponentSeq& s, Prime p, Coeff c = 1)
    {
        FpCombination e(p);
        e.add_term(s, c);
        return e;
    }

    Prime prime() const { return p_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Coeff coefficient(const ExponentSeq& s) const
    {
        auto it = terms_.find(s);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const ExponentSeq& s, Coeff c)
    {
        c %= p_;
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(s, c);
        if (!inserted) {
            it->second = add_mod(it->second, c, p_);
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    /// Degree of a nonzero homogeneous element; nullopt for zero or mixed degree.
    std::optional<Entry> degree() const
    {
        std::optional<Entry> d;
        for (const auto& [s, c] : terms_) {
            const Entry ds = Basis::degree(s, p_);
            if (d && *d != ds)
                return std::nullopt;
            d = ds;
        }
        return d;
    }
    bool is_homogeneous() const { return is_zero() || degree().has_value(); }

    FpCombination& operator+=(const FpCombination& o)
    {
        require_same_prime(o);
        for (const auto& [s, c] : o.terms_)
            add_term(s, c);
        return *this;
    }
    FpCombination& operator-=(const FpCombination& o)
    {
        require_same_prime(o);
        for (const auto& [s, c] : o.terms_)
            add_term(s, neg_mod(c, p_));
        return *this;
    }
    FpCombination& operator*=(Coeff k)
    {
        k %= p_;
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [s, c] : terms_)
            c = mul_mod(c, k, p_);
        return *this;
    }
    friend FpCombination operator+(FpCombination a, const FpCombination& b) { return a += b; }
    friend FpCombination operator-(FpCombination a, const FpCombination& b) { return a -= b; }
    friend FpCombination operator*(Coeff k, FpCombination a) { return a *= k; }
    friend FpCombination operator-(FpCombination a) { return a *= (a.p_ - 1); }
    friend bool operator==(const FpCombination& a, const FpCombination& b)
    {
        return a.p_ == b.p_ && a.terms_ == b.terms_;
    }

    /// e.g. "2*xi(1) + xi(0,1)"; "0" for the zero element, "1" for the unit monomial.
    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [s, c] : terms_) {
            if (!out.empty())
                out += " + ";
            if (s.empty()) {
                out += std::to_string(c);
                continue;
            }
            if (c != 1)
                out += std::to_string(c) + "*";
            out += Basis::name + s.str();
        }
        return out;
    }

    void require_same_prime(const FpCombination& o) const
    {
        if (o.p_ != p_)
            throw std::invalid_argument("prime mismatch");
    }

private:
    Prime p_;
    Terms terms_;
};

using MilnorElement = FpCombination<MilnorBasis>;
using AdmissibleExpansion = FpCombination<AdmissibleBasis>;
using AdmissibleWord = GammaSeq;

/// Product of two Milnor basis elements by the Milnor matrix formula.
MilnorElement milnor_product(const ExponentSeq& r, const ExponentSeq& s, Prime p);

/// Bilinear extension of the monomial product. Throws on prime mismatch.
MilnorElement milnor_product(const MilnorElement& a, const MilnorElement& b);

inline MilnorElement operator*(const MilnorElement& a, const MilnorElement& b) { return milnor_product(a, b); }

/// P^k as a Milnor element (the basis element indexed by (k)).
inline MilnorElement reduced_power(Prime p, Entry k) { return MilnorElement::basis(ExponentSeq{k}, p); }

/// chi(P^r) = (-1)^r sum over J in Upsilon_r of (xi^J)^*.
MilnorElement chi_pr(Prime p, Entry r);

/// chi(P^r) from the convolution identity sum_{i+j=r} P^i chi(P^j) = 0,
/// independent of the closed form above.
MilnorElement chi_convolution_oracle(Prime p, Entry r);

/// Milnor expansion of P^{x_1} P^{x_2} ... by iterated products.
MilnorElement admissible_to_milnor(const AdmissibleWord& w);

/// Milnor expansion of an arbitrary composite P^{a_1} ... P^{a_n}.
MilnorElement composite_to_milnor(const std::vector<Entry>& letters, Prime p);

/// Image of an admissible expansion in the Milnor basis.
MilnorElement to_milnor(const AdmissibleExpansion& e);

/// <xi^J, P^I>: the coefficient of xi^J in the Milnor expansion of P^I.
Coeff pairing(const ExponentSeq& j, const AdmissibleWord& i);

/// Cartan-Serre expansion of a homogeneous Milnor element, by substitution
/// through the triangular transition matrix of its degree.
/// Throws std::invalid_argument on a non-homogeneous element.
AdmissibleExpansion milnor_to_admissible(const MilnorElement& e);

/// ex(P^I) = 2 |gamma(I)|.
Entry excess_of_word(const AdmissibleWord& w);

}  // namespace steenrod
