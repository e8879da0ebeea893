#include "doctest.h"

#include <vector>

#include "steenrod/fp.hpp"

using namespace steenrod;

namespace {

// Exact binomial via Pascal's triangle, reduced at the end.
std::uint64_t pascal(int n, int k)
{
    std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        t[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
    }
    return t[n][k];
}

}  // namespace

TEST_CASE("Prime rejects composites")
{
    CHECK_THROWS_AS(Prime(4), std::invalid_argument);
    CHECK_THROWS_AS(Prime(1), std::invalid_argument);
    CHECK_THROWS_AS(Prime(0), std::invalid_argument);
    CHECK(Prime(7).value() == 7);
}

TEST_CASE("Lucas binomials agree with Pascal's triangle")
{
    for (unsigned p : {2u, 3u, 5u, 7u})
        for (int n = 0; n <= 40; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(binomial_mod(n, k, Prime(p)) == pascal(n, k) % p);
    CHECK(binomial_mod(-1, 0, Prime(3)) == 0);
    CHECK(binomial_mod(3, 5, Prime(3)) == 0);
}

TEST_CASE("multinomials are products of binomials")
{
    const Prime p(3);
    for (std::uint64_t a = 0; a < 12; ++a)
        for (std::uint64_t b = 0; b < 12; ++b)
            for (std::uint64_t c = 0; c < 12; ++c) {
                const std::vector<std::uint64_t> parts{a, b, c};
                const Coeff expect = mul_mod(binomial_mod(a + b + c, a, p), binomial_mod(b + c, b, p), p);
                CHECK(multinomial_mod(parts, p) == expect);
            }
}

TEST_CASE("modular helpers")
{
    const Prime p(7);
    for (Coeff a = 1; a < 7; ++a)
        CHECK(mul_mod(a, inv_mod(a, p), p) == 1);
    CHECK_THROWS(inv_mod(0, p));
    CHECK(reduce(-1, p) == 6);
    CHECK(sign_mod(3, p) == 6);
    CHECK(sign_mod(3, Prime(2)) == 1);
}
