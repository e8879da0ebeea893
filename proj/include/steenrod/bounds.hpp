// Bounds and exact values for the realization multipliers k_U(n), k_SO(n).
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "steenrod/fp.hpp"
#include "steenrod/seqcomb.hpp"

namespace steenrod {

using BigInt = boost::multiprecision::cpp_int;

/// Primes <= n by the sieve of Eratosthenes.
std::vector<std::uint32_t> primes_up_to(Entry n);

/// sum_{i>=1} floor((n-1) / (2 p^i)).
Entry nu_lower(Prime p, Entry n);
/// floor((n-3) / (2(p-1))), clamped at 0.
Entry nu_upper(Prime p, Entry n);

BigInt factorial(Entry m);
BigInt odd_part(BigInt x);
BigInt pow_big(std::uint32_t base, Entry e);

/// (floor((n-1)/2)!, prod_p p^{nu_upper(p,n)}).
std::pair<BigInt, BigInt> ku_bounds(Entry n);
/// Odd parts of ku_bounds.
std::pair<BigInt, BigInt> kso_bounds(Entry n);

/// Earlier bounds prod_p p^{floor((n-1)/(2(p-1)))}, over all p (U) and odd p (SO).
BigInt ku_superseded(Entry n);
BigInt kso_superseded(Entry n);

struct PrimeBound
{
    std::uint32_t p;
    Entry nu_lower;
    Entry nu_upper;
    std::optional<Entry> exact;  // set when n < 2p^2 + 2p
};

struct ExactValues
{
    std::vector<PrimeBound> per_prime;
    std::optional<BigInt> ku_exact;     // n < 12
    std::vector<BigInt> kso_candidates; // one value for n < 24, two for n = 24, else empty
};

/// Primes that can contribute in dimension n: p <= max(2, (n-1)/2).
std::vector<std::uint32_t> contributing_primes(Entry n);

ExactValues exact_values(Entry n);

struct BoundReport
{
    Entry n;
    std::vector<PrimeBound> per_prime;
    BigInt ku_lower, ku_upper;
    BigInt kso_lower, kso_upper;
    std::optional<BigInt> ku_exact;
    std::vector<BigInt> kso_candidates;
    BigInt ku_superseded, kso_superseded;
};

/// Throws std::invalid_argument for n == 0.
BoundReport bound_report(Entry n);

/// Published k_SO(n), n = 1..23.
inline constexpr std::array<std::uint64_t, 23> kPublishedKsoTable{
    1, 1, 1, 1, 1, 1, 3, 3, 3, 3, 15, 15, 45, 45, 315, 315, 315, 315, 2835, 2835, 14175, 14175, 155925};

/// k_SO(24) is one of these two values.
inline constexpr std::array<std::uint64_t, 2> kKso24Candidates{155925, 467775};

/// Computed (n, k_SO(n)) for n = 1..23.
std::vector<std::pair<Entry, BigInt>> kso_table();

}  // namespace steenrod
