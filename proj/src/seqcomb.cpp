#include "steenrod/seqcomb.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace steenrod {

Entry ExponentSeq::weight() const
{
    Entry s = 0;
    for (Entry x : xs_)
        s += x;
    return s;
}

std::string ExponentSeq::str() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(xs_[i]);
    }
    return out + ")";
}

std::strong_ordering right_lex_cmp(const ExponentSeq& a, const ExponentSeq& b)
{
    const std::size_t n = std::max(a.length(), b.length());
    for (std::size_t i = n; i >= 1; --i) {
        if (auto c = a[i] <=> b[i]; c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

std::size_t ExponentSeqHash::operator()(const ExponentSeq& s) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ull;
    for (Entry x : s.entries())
        h = (h ^ std::hash<Entry>{}(x)) * 0x100000001b3ull;
    return h;
}

bool is_admissible(const ExponentSeq& s, Prime p)
{
    for (std::size_t i = 1; i <= s.length(); ++i)
        if (s[i] < p * s[i + 1])
            return false;
    return true;
}

GammaSeq::GammaSeq(ExponentSeq s, Prime p) : seq_(std::move(s)), p_(p)
{
    if (!is_admissible(seq_, p_))
        throw std::invalid_argument("sequence " + seq_.str() + " is not admissible for p=" + std::to_string(p_.value()));
}

ExponentSeq gamma(const GammaSeq& i)
{
    const ExponentSeq& s = i.seq();
    const Prime p = i.prime();
    std::vector<Entry> out(s.length());
    for (std::size_t k = 1; k <= s.length(); ++k)
        out[k - 1] = s[k] - p * s[k + 1];
    return ExponentSeq(std::move(out));
}

ExponentSeq gamma(const ExponentSeq& i, Prime p) { return gamma(GammaSeq(i, p)); }

GammaSeq gamma_inv(const ExponentSeq& j, Prime p)
{
    std::vector<Entry> out(j.length());
    Entry acc = 0;
    for (std::size_t k = j.length(); k >= 1; --k) {
        acc = j[k] + p * acc;
        out[k - 1] = acc;
    }
    return GammaSeq(ExponentSeq(std::move(out)), p);
}

Entry upsilon_weight(Prime p, std::size_t k)
{
    Entry w = 0, pow = 1;
    for (std::size_t i = 0; i < k; ++i) {
        w += pow;
        pow *= p;
    }
    return w;
}

Entry upsilon_degree(const ExponentSeq& j, Prime p)
{
    Entry d = 0;
    for (std::size_t k = 1; k <= j.length(); ++k)
        d += j[k] * upsilon_weight(p, k);
    return d;
}

std::vector<ExponentSeq> enumerate_upsilon_r(Prime p, Entry r)
{
    std::vector<Entry> weights;  // weights[k-1] = 1 + p + ... + p^{k-1} <= r
    for (std::size_t k = 1; upsilon_weight(p, k) <= std::max<Entry>(r, 1); ++k)
        weights.push_back(upsilon_weight(p, k));

    std::vector<ExponentSeq> out;
    std::vector<Entry> xs(weights.size(), 0);
    // Highest index first, values descending: emits descending right-lex order.
    std::function<void(std::size_t, Entry)> rec = [&](std::size_t k, Entry rest) {
        if (k == 0) {
            if (rest == 0)
                out.emplace_back(xs);
            return;
        }
        const Entry w = weights[k - 1];
        for (Entry x = rest / w + 1; x-- > 0;) {
            xs[k - 1] = x;
            rec(k - 1, rest - x * w);
        }
        xs[k - 1] = 0;
    };
    rec(weights.size(), r);
    if (r == 0 && out.empty())
        out.emplace_back();
    return out;
}

std::vector<ExponentSeq> enumerate_gamma_r(Prime p, Entry r)
{
    std::vector<ExponentSeq> out;
    std::vector<Entry> xs;
    // Choose x_1, then an admissible tail with first entry <= x_1 / p.
    std::function<void(Entry, Entry)> rec = [&](Entry rest, Entry cap) {
        if (rest == 0) {
            out.emplace_back(xs);
            return;
        }
        for (Entry x = std::min(rest, cap); x >= 1; --x) {
            xs.push_back(x);
            rec(rest - x, x / p);
            xs.pop_back();
        }
    };
    rec(r, r);
    std::sort(out.begin(), out.end(), RightLexGreater{});
    return out;
}

ExponentSeq greatest_in_upsilon_r(Prime p, Entry r)
{
    // Greedy from the largest weight; each step leaves a remainder that the
    // lower positions can absorb with digits <= p-1, except the lowest
    // nonzero position, which may take p.
    std::size_t len = 0;
    while (upsilon_weight(p, len + 1) <= r)
        ++len;
    std::vector<Entry> xs(len, 0);
    Entry rest = r;
    for (std::size_t k = len; k >= 1; --k) {
        const Entry w = upsilon_weight(p, k);
        xs[k - 1] = rest / w;
        rest -= xs[k - 1] * w;
    }
    return ExponentSeq(std::move(xs));
}

bool satisfies_greatest_conditions(const ExponentSeq& j, Prime p)
{
    for (std::size_t i = 1; i <= j.length(); ++i) {
        if (j[i] > p)
            return false;
        if (j[i] == p)
            for (std::size_t k = 1; k < i; ++k)
                if (j[k] != 0)
                    return false;
    }
    return true;
}

Entry ex(Prime p, Entry r) { return 2 * greatest_in_upsilon_r(p, r).weight(); }

Entry count_k(Prime p, Entry n)
{
    if (n == 0)
        throw std::invalid_argument("count_k requires n >= 1");
    Entry total = 0;
    for (Entry denom = 2 * Entry{p}; denom <= n - 1; denom *= p)
        total += (n - 1) / denom;
    return total;
}

Entry count_k_bruteforce(Prime p, Entry n)
{
    if (n == 0)
        throw std::invalid_argument("count_k requires n >= 1");
    // ex(k) >= 0 so no k >= n / (2(p-1)) can qualify.
    Entry best = 0;
    for (Entry k = 1; 2 * k * (p - 1) < n; ++k)
        if (n > ex(p, k) + 2 * k * (p - 1))
            best = k;
    return best;
}

}  // namespace steenrod
