#include "steenrod/milnor.hpp"

#include <functional>
#include <stdexcept>

#include "steenrod/transition.hpp"

namespace steenrod {

Entry milnor_degree(const ExponentSeq& j, Prime p)
{
    Entry d = 0, pk = 1;
    for (std::size_t i = 1; i <= j.length(); ++i) {
        pk *= p;
        d += 2 * j[i] * (pk - 1);
    }
    return d;
}

MilnorElement milnor_product(const ExponentSeq& r, const ExponentSeq& s, Prime p)
{
    MilnorElement result(p);
    const std::size_t rows = r.length(), cols = s.length();
    if (rows == 0 || cols == 0) {
        result.add_term(rows == 0 ? s : r, 1);
        return result;
    }

    // X is (rows+1) x (cols+1); x_{00} unused. Free cells are i, j >= 1;
    // x_{i0} and x_{0j} are what remains of the row and column budgets.
    const std::size_t width = cols + 1;
    std::vector<Entry> x((rows + 1) * width, 0);
    std::vector<Entry> row_rest(rows + 1), col_rest(cols + 1);
    for (std::size_t i = 1; i <= rows; ++i)
        row_rest[i] = r[i];
    for (std::size_t j = 1; j <= cols; ++j)
        col_rest[j] = s[j];
    std::vector<Entry> pow(cols + 1, 1);
    for (std::size_t j = 1; j <= cols; ++j)
        pow[j] = pow[j - 1] * p;

    std::vector<Entry> diag;
    std::vector<Entry> t(rows + cols);

    auto emit = [&] {
        for (std::size_t i = 1; i <= rows; ++i)
            x[i * width] = row_rest[i];
        for (std::size_t j = 1; j <= cols; ++j)
            x[j] = col_rest[j];
        Coeff c = 1;
        for (std::size_t k = 1; k <= rows + cols; ++k) {
            diag.clear();
            Entry sum = 0;
            for (std::size_t i = (k > cols ? k - cols : 0); i <= std::min(k, rows); ++i) {
                const Entry v = x[i * width + (k - i)];
                diag.push_back(v);
                sum += v;
            }
            t[k - 1] = sum;
            c = mul_mod(c, multinomial_mod(diag, p), p);
            if (c == 0)
                return;
        }
        result.add_term(ExponentSeq(t), c);
    };

    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t j) {
        if (i > rows) {
            emit();
            return;
        }
        if (j > cols) {
            fill(i + 1, 1);
            return;
        }
        const Entry cap = std::min(row_rest[i] / pow[j], col_rest[j]);
        for (Entry v = 0; v <= cap; ++v) {
            x[i * width + j] = v;
            row_rest[i] -= v * pow[j];
            col_rest[j] -= v;
            fill(i, j + 1);
            row_rest[i] += v * pow[j];
            col_rest[j] += v;
        }
        x[i * width + j] = 0;
    };
    fill(1, 1);
    return result;
}

MilnorElement milnor_product(const MilnorElement& a, const MilnorElement& b)
{
    a.require_same_prime(b);
    const Prime p = a.prime();
    MilnorElement result(p);
    for (const auto& [ra, ca] : a.terms())
        for (const auto& [sb, cb] : b.terms()) {
            const Coeff c = mul_mod(ca, cb, p);
            const MilnorElement prod = milnor_product(ra, sb, p);
            for (const auto& [t, ct] : prod.terms())
                result.add_term(t, mul_mod(c, ct, p));
        }
    return result;
}

MilnorElement chi_pr(Prime p, Entry r)
{
    MilnorElement result(p);
    const Coeff sign = sign_mod(r, p);
    for (const auto& j : enumerate_upsilon_r(p, r))
        result.add_term(j, sign);
    return result;
}

MilnorElement chi_convolution_oracle(Prime p, Entry r)
{
    std::vector<MilnorElement> chi;
    chi.reserve(r + 1);
    chi.push_back(MilnorElement::unit(p));
    for (Entry n = 1; n <= r; ++n) {
        MilnorElement acc(p);
        for (Entry i = 1; i <= n; ++i)
            acc += reduced_power(p, i) * chi[n - i];
        chi.push_back(-acc);
    }
    return chi[r];
}

MilnorElement composite_to_milnor(const std::vector<Entry>& letters, Prime p)
{
    MilnorElement result = MilnorElement::unit(p);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        result = reduced_power(p, *it) * result;
    return result;
}

MilnorElement admissible_to_milnor(const AdmissibleWord& w)
{
    return composite_to_milnor(w.seq().entries(), w.prime());
}

MilnorElement to_milnor(const AdmissibleExpansion& e)
{
    const Prime p = e.prime();
    MilnorElement result(p);
    for (const auto& [word, c] : e.terms()) {
        MilnorElement m = admissible_to_milnor(GammaSeq(word, p));
        m *= c;
        result += m;
    }
    return result;
}

Coeff pairing(const ExponentSeq& j, const AdmissibleWord& i)
{
    const Prime p = i.prime();
    if (milnor_degree(j, p) != admissible_degree(i.seq(), p))
        return 0;
    return admissible_to_milnor(i).coefficient(j);
}

AdmissibleExpansion milnor_to_admissible(const MilnorElement& e)
{
    const Prime p = e.prime();
    AdmissibleExpansion result(p);
    if (e.is_zero())
        return result;
    const auto d = e.degree();
    if (!d)
        throw std::invalid_argument("milnor_to_admissible needs a homogeneous element");
    const Entry r = *d / (2 * (p - 1));
    const auto m = TransitionCache::instance().get(p, r);
    const auto& words = m->words();

    // e = sum_i a_i P^{I_i} and c_j = sum_{i <= j} a_i M(i, j): forward substitution.
    std::vector<Coeff> a(words.size(), 0);
    for (std::size_t j = 0; j < words.size(); ++j) {
        Coeff c = e.coefficient(gamma(words[j], p));
        for (std::size_t i = 0; i < j; ++i)
            if (a[i])
                c = sub_mod(c, mul_mod(a[i], m->at(i, j), p), p);
        a[j] = mul_mod(c, inv_mod(m->at(j, j), p), p);
        result.add_term(words[j], a[j]);
    }
    return result;
}

Entry excess_of_word(const AdmissibleWord& w) { return 2 * gamma(w).weight(); }

}  // namespace steenrod
