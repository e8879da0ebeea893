// The action of A_p/(beta) on H^*(K(Z,2)^m; F_p) = F_p[i_1, ..., i_m],
// deg i_k = 2.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "steenrod/adem.hpp"
#include "steenrod/milnor.hpp"

namespace steenrod {

using Multidegree = std::vector<Entry>;

/// Strict "greater" in left-lex order on exponent vectors of equal length.
struct LeftLexGreater
{
    bool operator()(const Multidegree& a, const Multidegree& b) const { return a > b; }
};

/// Sparse polynomial over F_p in m variables of degree 2. Terms iterate from
/// the left-lex greatest monomial down.
class PolyClass
{
public:
    using Terms = std::map<Multidegree, Coeff, LeftLexGreater>;

    PolyClass(std::size_t variables, Prime p) : m_(variables), p_(p) {}

    static PolyClass monomial(const Multidegree& a, Prime p, Coeff c = 1);
    /// i_1 i_2 ... i_m.
    static PolyClass fundamental_product(std::size_t variables, Prime p);

    std::size_t variables() const { return m_; }
    Prime prime() const { return p_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coeff coefficient(const Multidegree& a) const;
    void add_term(const Multidegree& a, Coeff c);

    /// Topological degree of a nonzero homogeneous class.
    std::optional<Entry> degree() const;

    PolyClass& operator+=(const PolyClass& o);
    PolyClass& operator*=(Coeff k);
    friend PolyClass operator+(PolyClass a, const PolyClass& b) { return a += b; }
    friend PolyClass operator*(Coeff k, PolyClass a) { return a *= k; }
    friend PolyClass operator*(const PolyClass& a, const PolyClass& b);
    friend bool operator==(const PolyClass&, const PolyClass&) = default;

    /// e.g. "i1^2*i2^2 + 2*i1*i2^3"; "0" for zero, "1" for the unit monomial.
    std::string str() const;
    static std::string monomial_str(const Multidegree& a);

private:
    void require_compatible(const PolyClass& o) const;
    std::size_t m_;
    Prime p_;
    Terms terms_;
};

/// P^k(i^a) = binom(a, k) i^{a + k(p-1)}; returns (coefficient, exponent).
std::pair<Coeff, Entry> pk_on_power(Prime p, Entry k, Entry a);

/// P^k on a polynomial by the Cartan formula.
PolyClass apply_pk(Prime p, Entry k, const PolyClass& f);

/// Applies P^{a_1} ... P^{a_n}, rightmost letter first.
PolyClass apply_word(const std::vector<Entry>& letters, const PolyClass& f);
PolyClass apply_word(const AdmissibleWord& w, const PolyClass& f);
PolyClass apply_word(const CompositionWord& w, const PolyClass& f);

/// Applies a homogeneous element through its Cartan-Serre expansion.
/// Throws std::invalid_argument on a non-homogeneous element.
PolyClass apply_element(const MilnorElement& e, const PolyClass& f);

/// The monomial M_J: x_n variables raised to p^n, then x_{n-1} variables to
/// p^{n-1}, ..., then x_1 variables to p.
Multidegree witness_monomial(const ExponentSeq& j, Prime p);

struct NontrivialityWitness
{
    PolyClass result;
    Multidegree witness;
    Coeff witness_coefficient = 0;
    bool witness_is_leading = false;  // left-lex greatest monomial of `result`
    bool ok = false;                  // result nonzero and witness present
};

/// chi(P^r) applied to i_1 ... i_{ex(r)/2}, with the witness monomial built
/// from the greatest element of Upsilon_r.
NontrivialityWitness chi_nontriviality_witness(Prime p, Entry r);

}  // namespace steenrod
