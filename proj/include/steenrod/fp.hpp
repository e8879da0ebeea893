// Prime-field arithmetic shared by every module: a validated prime type,
// canonical residues and Lucas-theorem binomials/multinomials.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace steenrod {

using Coeff = std::uint32_t;  // canonical residue 0..p-1

bool is_prime(std::uint64_t n);

/// A prime number. Construction rejects composites, 0 and 1.
class Prime
{
public:
    explicit Prime(std::uint64_t p) : p_(static_cast<std::uint32_t>(p))
    {
        if (p > 0xFFFF || !is_prime(p))
            throw std::invalid_argument("not a supported prime: " + std::to_string(p));
    }
    std::uint32_t value() const { return p_; }
    operator std::uint32_t() const { return p_; }
    friend bool operator==(Prime, Prime) = default;
    friend auto operator<=>(Prime, Prime) = default;

private:
    std::uint32_t p_;
};

inline Coeff add_mod(Coeff a, Coeff b, Prime p) { return static_cast<Coeff>((std::uint64_t{a} + b) % p); }
inline Coeff sub_mod(Coeff a, Coeff b, Prime p) { return static_cast<Coeff>((std::uint64_t{a} + p - b % p) % p); }
inline Coeff mul_mod(Coeff a, Coeff b, Prime p) { return static_cast<Coeff>((std::uint64_t{a} * b) % p); }
inline Coeff neg_mod(Coeff a, Prime p) { return a % p == 0 ? 0 : p - a % p; }

/// Reduces a signed integer to 0..p-1.
Coeff reduce(std::int64_t a, Prime p);

/// Multiplicative inverse of a nonzero residue.
Coeff inv_mod(Coeff a, Prime p);

/// (-1)^k mod p.
inline Coeff sign_mod(std::uint64_t k, Prime p) { return (k % 2 == 0) ? 1 : p - 1; }

/// binom(n, k) mod p by Lucas' theorem; zero when k > n or either is negative.
Coeff binomial_mod(std::int64_t n, std::int64_t k, Prime p);

/// Multinomial (a_1 + ... + a_k)! / (a_1! ... a_k!) mod p by Lucas' theorem:
/// zero iff adding the a_i in base p carries.
Coeff multinomial_mod(std::span<const std::uint64_t> parts, Prime p);

}  // namespace steenrod
