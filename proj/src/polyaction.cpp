#include "steenrod/polyaction.hpp"

#include <functional>
#include <stdexcept>

namespace steenrod {

PolyClass PolyClass::monomial(const Multidegree& a, Prime p, Coeff c)
{
    PolyClass f(a.size(), p);
    f.add_term(a, c);
    return f;
}

PolyClass PolyClass::fundamental_product(std::size_t variables, Prime p)
{
    return monomial(Multidegree(variables, 1), p);
}

Coeff PolyClass::coefficient(const Multidegree& a) const
{
    auto it = terms_.find(a);
    return it == terms_.end() ? 0 : it->second;
}

void PolyClass::add_term(const Multidegree& a, Coeff c)
{
    if (a.size() != m_)
        throw std::invalid_argument("monomial has the wrong number of variables");
    c %= p_;
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) {
        it->second = add_mod(it->second, c, p_);
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::optional<Entry> PolyClass::degree() const
{
    std::optional<Entry> d;
    for (const auto& [a, c] : terms_) {
        Entry s = 0;
        for (Entry e : a)
            s += e;
        if (d && *d != 2 * s)
            return std::nullopt;
        d = 2 * s;
    }
    return d;
}

void PolyClass::require_compatible(const PolyClass& o) const
{
    if (o.p_ != p_ || o.m_ != m_)
        throw std::invalid_argument("polynomial classes over different rings");
}

PolyClass& PolyClass::operator+=(const PolyClass& o)
{
    require_compatible(o);
    for (const auto& [a, c] : o.terms_)
        add_term(a, c);
    return *this;
}

PolyClass& PolyClass::operator*=(Coeff k)
{
    k %= p_;
    if (k == 0)
        terms_.clear();
    for (auto& [a, c] : terms_)
        c = mul_mod(c, k, p_);
    return *this;
}

PolyClass operator*(const PolyClass& f, const PolyClass& g)
{
    f.require_compatible(g);
    PolyClass out(f.m_, f.p_);
    Multidegree sum(f.m_);
    for (const auto& [a, ca] : f.terms_)
        for (const auto& [b, cb] : g.terms_) {
            for (std::size_t i = 0; i < f.m_; ++i)
                sum[i] = a[i] + b[i];
            out.add_term(sum, mul_mod(ca, cb, f.p_));
        }
    return out;
}

std::string PolyClass::monomial_str(const Multidegree& a)
{
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += "i" + std::to_string(i + 1);
        if (a[i] != 1)
            out += "^" + std::to_string(a[i]);
    }
    return out.empty() ? "1" : out;
}

std::string PolyClass::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [a, c] : terms_) {
        if (!out.empty())
            out += " + ";
        if (c != 1)
            out += std::to_string(c) + "*";
        out += monomial_str(a);
    }
    return out;
}

std::pair<Coeff, Entry> pk_on_power(Prime p, Entry k, Entry a)
{
    return {binomial_mod(static_cast<std::int64_t>(a), static_cast<std::int64_t>(k), p), a + k * (p - 1)};
}

PolyClass apply_pk(Prime p, Entry k, const PolyClass& f)
{
    if (f.prime() != p)
        throw std::invalid_argument("prime mismatch");
    if (k == 0)
        return f;
    const std::size_t m = f.variables();
    PolyClass out(m, p);
    Multidegree image(m);
    // Split k over the variables; P^{k_i} on i^{a_i} vanishes unless k_i <= a_i.
    for (const auto& [a, c] : f.terms()) {
        std::function<void(std::size_t, Entry, Coeff)> rec = [&](std::size_t v, Entry rest, Coeff acc) {
            if (v == m) {
                if (rest == 0)
                    out.add_term(image, acc);
                return;
            }
            Entry tail = 0;
            for (std::size_t u = v + 1; u < m; ++u)
                tail += a[u];
            const Entry lo = rest > tail ? rest - tail : 0;
            for (Entry kv = lo; kv <= std::min(rest, a[v]); ++kv) {
                const auto [cv, e] = pk_on_power(p, kv, a[v]);
                if (cv == 0)
                    continue;
                image[v] = e;
                rec(v + 1, rest - kv, mul_mod(acc, cv, p));
            }
        };
        rec(0, k, c);
    }
    return out;
}

PolyClass apply_word(const std::vector<Entry>& letters, const PolyClass& f)
{
    PolyClass g = f;
    for (auto it = letters.rbegin(); it != letters.rend() && !g.is_zero(); ++it)
        g = apply_pk(f.prime(), *it, g);
    return g;
}

PolyClass apply_word(const AdmissibleWord& w, const PolyClass& f)
{
    if (w.prime() != f.prime())
        throw std::invalid_argument("prime mismatch");
    return apply_word(w.seq().entries(), f);
}

PolyClass apply_word(const CompositionWord& w, const PolyClass& f)
{
    if (w.prime() != f.prime())
        throw std::invalid_argument("prime mismatch");
    return apply_word(w.letters(), f);
}

PolyClass apply_element(const MilnorElement& e, const PolyClass& f)
{
    if (e.prime() != f.prime())
        throw std::invalid_argument("prime mismatch");
    if (!e.is_homogeneous())
        throw std::invalid_argument("apply_element needs a homogeneous element");
    PolyClass out(f.variables(), f.prime());
    const AdmissibleExpansion expansion = milnor_to_admissible(e);
    for (const auto& [word, c] : expansion.terms()) {
        PolyClass g = apply_word(word.entries(), f);
        g *= c;
        out += g;
    }
    return out;
}

Multidegree witness_monomial(const ExponentSeq& j, Prime p)
{
    Multidegree out;
    for (std::size_t k = j.length(); k >= 1; --k) {
        Entry power = 1;
        for (std::size_t e = 0; e < k; ++e)
            power *= p;
        out.insert(out.end(), j[k], power);
    }
    return out;
}

NontrivialityWitness chi_nontriviality_witness(Prime p, Entry r)
{
    if (r == 0)
        throw std::invalid_argument("chi_nontriviality_witness needs r >= 1");
    const ExponentSeq greatest = greatest_in_upsilon_r(p, r);
    const std::size_t m = ex(p, r) / 2;
    NontrivialityWitness w{apply_element(chi_pr(p, r), PolyClass::fundamental_product(m, p)),
                           witness_monomial(greatest, p)};
    w.witness_coefficient = w.result.coefficient(w.witness);
    w.witness_is_leading = !w.result.is_zero() && w.result.terms().begin()->first == w.witness;
    w.ok = !w.result.is_zero() && w.witness_coefficient != 0;
    return w;
}

}  // namespace steenrod
