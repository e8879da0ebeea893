#include "steenrod/bounds.hpp"

#include <stdexcept>

namespace steenrod {

std::vector<std::uint32_t> primes_up_to(Entry n)
{
    std::vector<std::uint32_t> out;
    if (n < 2)
        return out;
    std::vector<bool> composite(n + 1, false);
    for (Entry i = 2; i <= n; ++i) {
        if (composite[i])
            continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (Entry j = i * i; j <= n; j += i)
            composite[j] = true;
    }
    return out;
}

Entry nu_lower(Prime p, Entry n) { return count_k(p, n); }

Entry nu_upper(Prime p, Entry n)
{
    if (n < 3)
        return 0;
    return (n - 3) / (2 * (p - 1));
}

BigInt factorial(Entry m)
{
    BigInt f = 1;
    for (Entry i = 2; i <= m; ++i)
        f *= i;
    return f;
}

BigInt odd_part(BigInt x)
{
    if (x == 0)
        return 0;
    while ((x & 1) == 0)
        x >>= 1;
    return x;
}

BigInt pow_big(std::uint32_t base, Entry e)
{
    BigInt r = 1;
    for (Entry i = 0; i < e; ++i)
        r *= base;
    return r;
}

std::vector<std::uint32_t> contributing_primes(Entry n)
{
    const Entry top = n >= 5 ? (n - 1) / 2 : 2;
    return primes_up_to(std::max<Entry>(top, 2));
}

std::pair<BigInt, BigInt> ku_bounds(Entry n)
{
    if (n == 0)
        throw std::invalid_argument("dimension must be positive");
    BigInt upper = 1;
    for (std::uint32_t p : contributing_primes(n))
        upper *= pow_big(p, nu_upper(Prime(p), n));
    return {factorial((n - 1) / 2), upper};
}

std::pair<BigInt, BigInt> kso_bounds(Entry n)
{
    auto [lo, hi] = ku_bounds(n);
    return {odd_part(lo), odd_part(hi)};
}

BigInt ku_superseded(Entry n)
{
    if (n == 0)
        throw std::invalid_argument("dimension must be positive");
    BigInt out = 1;
    for (std::uint32_t p : primes_up_to(n))
        out *= pow_big(p, (n - 1) / (2 * (p - 1)));
    return out;
}

BigInt kso_superseded(Entry n) { return odd_part(ku_superseded(n)); }

ExactValues exact_values(Entry n)
{
    if (n == 0)
        throw std::invalid_argument("dimension must be positive");
    ExactValues out;
    for (std::uint32_t p : contributing_primes(n)) {
        const Prime q(p);
        PrimeBound b{p, nu_lower(q, n), nu_upper(q, n), std::nullopt};
        if (n < 2 * Entry{p} * p + 2 * Entry{p})
            b.exact = b.nu_lower;
        out.per_prime.push_back(b);
    }
    const BigInt lower = factorial((n - 1) / 2);
    if (n < 12)
        out.ku_exact = lower;
    if (n < 24)
        out.kso_candidates.push_back(odd_part(lower));
    else if (n == 24)
        for (std::uint64_t c : kKso24Candidates)
            out.kso_candidates.emplace_back(c);
    return out;
}

BoundReport bound_report(Entry n)
{
    auto [ku_lo, ku_hi] = ku_bounds(n);
    ExactValues exact = exact_values(n);
    BoundReport r{n,
                  std::move(exact.per_prime),
                  ku_lo,
                  ku_hi,
                  odd_part(ku_lo),
                  odd_part(ku_hi),
                  std::move(exact.ku_exact),
                  std::move(exact.kso_candidates),
                  ku_superseded(n),
                  kso_superseded(n)};
    return r;
}

std::vector<std::pair<Entry, BigInt>> kso_table()
{
    std::vector<std::pair<Entry, BigInt>> out;
    for (Entry n = 1; n <= 23; ++n) {
        // k_SO(n) = prod over odd p of p^{nu_lower(p, n)}
        BigInt v = 1;
        for (std::uint32_t p : contributing_primes(n))
            if (p > 2)
                v *= pow_big(p, nu_lower(Prime(p), n));
        out.emplace_back(n, v);
    }
    return out;
}

}  // namespace steenrod
