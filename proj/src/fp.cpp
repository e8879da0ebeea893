#include "steenrod/fp.hpp"

#include <vector>

namespace steenrod {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Coeff reduce(std::int64_t a, Prime p)
{
    const std::int64_t m = a % static_cast<std::int64_t>(p.value());
    return static_cast<Coeff>(m < 0 ? m + p : m);
}

Coeff inv_mod(Coeff a, Prime p)
{
    a %= p;
    if (a == 0)
        throw std::domain_error("inverse of zero in F_p");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<Coeff>(result);
}

namespace {

Coeff small_binomial(std::uint64_t n, std::uint64_t k, Prime p)
{
    // n, k < p
    if (k > n)
        return 0;
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    return mul_mod(static_cast<Coeff>(num), inv_mod(static_cast<Coeff>(den), p), p);
}

}  // namespace

Coeff binomial_mod(std::int64_t n, std::int64_t k, Prime p)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    Coeff result = 1;
    auto un = static_cast<std::uint64_t>(n), uk = static_cast<std::uint64_t>(k);
    while (uk > 0 || un > 0) {
        const Coeff c = small_binomial(un % p, uk % p, p);
        if (c == 0)
            return 0;
        result = mul_mod(result, c, p);
        un /= p;
        uk /= p;
    }
    return result;
}

Coeff multinomial_mod(std::span<const std::uint64_t> parts, Prime p)
{
    // Digit-wise: the multinomial of the digits, provided no digit column sums past p-1.
    std::vector<std::uint64_t> rest(parts.begin(), parts.end());
    Coeff result = 1;
    bool any = true;
    while (any) {
        any = false;
        std::uint64_t column = 0;
        for (auto& a : rest) {
            const std::uint64_t d = a % p;
            a /= p;
            if (a)
                any = true;
            if (d == 0)
                continue;
            column += d;
            if (column >= p)
                return 0;
            result = mul_mod(result, small_binomial(column, d, p), p);
        }
    }
    return result;
}

}  // namespace steenrod
