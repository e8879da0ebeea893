#include "doctest.h"

#include <random>

#include "steenrod/milnor.hpp"

using namespace steenrod;

namespace {

MilnorElement random_homogeneous(Prime p, Entry r, std::mt19937& rng)
{
    MilnorElement e(p);
    std::uniform_int_distribution<Coeff> coeff(0, p - 1);
    for (const auto& j : enumerate_upsilon_r(p, r))
        e.add_term(j, coeff(rng));
    return e;
}

}  // namespace

TEST_CASE("Milnor degrees")
{
    CHECK(milnor_degree(ExponentSeq{1}, Prime(2)) == 2);
    CHECK(milnor_degree(ExponentSeq{}, Prime(5)) == 0);
    CHECK(milnor_degree(ExponentSeq{0, 1}, Prime(3)) == 16);
    // Upsilon_r sits in degree 2r(p-1)
    for (unsigned pv : {2u, 3u, 5u})
        for (Entry r = 0; r <= 12; ++r)
            for (const auto& j : enumerate_upsilon_r(Prime(pv), r))
                CHECK(milnor_degree(j, Prime(pv)) == 2 * r * (pv - 1));
}

TEST_CASE("Milnor products of small elements")
{
    const Prime two(2), three(3);
    CHECK(reduced_power(three, 1) * MilnorElement::unit(three) == reduced_power(three, 1));
    CHECK(reduced_power(three, 1) * reduced_power(three, 1) == 2 * reduced_power(three, 2));
    CHECK((reduced_power(two, 1) * reduced_power(two, 1)).is_zero());

    // P^2 P^1 = P(3) + P(0,1) at p = 2
    MilnorElement expect(two);
    expect.add_term(ExponentSeq{3}, 1);
    expect.add_term(ExponentSeq{0, 1}, 1);
    CHECK(reduced_power(two, 2) * reduced_power(two, 1) == expect);

    CHECK_THROWS_AS(reduced_power(two, 1) * reduced_power(three, 1), std::invalid_argument);
}

TEST_CASE("Milnor product is associative, unital, bilinear and degree-additive")
{
    std::mt19937 rng(12345);
    for (unsigned pv : {2u, 3u, 5u}) {
        const Prime p(pv);
        const Entry cap = pv == 2 ? 6 : (pv == 3 ? 4 : 3);
        for (int trial = 0; trial < 25; ++trial) {
            std::uniform_int_distribution<Entry> deg(0, cap);
            const auto a = random_homogeneous(p, deg(rng), rng);
            const auto b = random_homogeneous(p, deg(rng), rng);
            const auto c = random_homogeneous(p, deg(rng), rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * MilnorElement::unit(p) == a);
            CHECK(MilnorElement::unit(p) * a == a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((2 * a) * b == 2 * (a * b));
            const auto ab = a * b;
            if (!ab.is_zero()) {
                REQUIRE(ab.degree());
                CHECK(*ab.degree() == *a.degree() + *b.degree());
            }
        }
    }
}

TEST_CASE("antipode of P^r")
{
    const Prime two(2), three(3);
    CHECK(chi_pr(three, 1) == 2 * reduced_power(three, 1));
    CHECK(chi_pr(three, 0) == MilnorElement::unit(three));
    MilnorElement chi3(two);
    chi3.add_term(ExponentSeq{3}, 1);
    chi3.add_term(ExponentSeq{0, 1}, 1);
    CHECK(chi_pr(two, 3) == chi3);

    CHECK(chi_convolution_oracle(three, 1) == 2 * reduced_power(three, 1));
    CHECK(chi_convolution_oracle(two, 2) == reduced_power(two, 2));
    CHECK(chi_convolution_oracle(two, 3) == chi3);

    for (unsigned pv : {2u, 3u, 5u}) {
        const Prime p(pv);
        for (Entry r = 1; r <= 8; ++r) {
            const auto chi = chi_pr(p, r);
            CHECK(chi == chi_convolution_oracle(p, r));
            REQUIRE(chi.degree());
            CHECK(*chi.degree() == 2 * r * (pv - 1));
            MilnorElement left(p), right(p);
            for (Entry i = 0; i <= r; ++i) {
                left += reduced_power(p, i) * chi_pr(p, r - i);
                right += chi_pr(p, i) * reduced_power(p, r - i);
            }
            CHECK(left.is_zero());
            CHECK(right.is_zero());
        }
    }
}

TEST_CASE("admissible words in the Milnor basis")
{
    const Prime two(2), three(3);
    CHECK(admissible_to_milnor(GammaSeq(ExponentSeq{5}, three)) == reduced_power(three, 5));
    CHECK(admissible_to_milnor(GammaSeq(ExponentSeq{}, two)) == MilnorElement::unit(two));
    CHECK(admissible_to_milnor(GammaSeq(ExponentSeq{2, 1}, two)).coefficient(ExponentSeq{0, 1}) == 1);

    CHECK(pairing(ExponentSeq{0, 1}, GammaSeq(ExponentSeq{2, 1}, two)) == 1);
    CHECK(pairing(ExponentSeq{0, 1}, GammaSeq(ExponentSeq{5}, two)) == 0);  // degrees differ

    for (unsigned pv : {2u, 3u, 5u}) {
        const Prime p(pv);
        for (Entry r = 0; r <= 8; ++r) {
            const auto words = enumerate_gamma_r(p, r);
            for (const auto& i : words) {
                const GammaSeq w(i, p);
                const Coeff diag = pairing(gamma(w), w);
                CHECK((diag == 1 || diag == pv - 1));
                for (const auto& i2 : words)
                    if (right_lex_cmp(i, i2) < 0)
                        CHECK(pairing(gamma(i2, p), w) == 0);
            }
        }
    }
}

TEST_CASE("Milnor to Cartan-Serre conversion")
{
    const Prime two(2);
    CHECK(milnor_to_admissible(reduced_power(two, 4)).coefficient(ExponentSeq{4}) == 1);
    CHECK(milnor_to_admissible(chi_pr(two, 2)) == AdmissibleExpansion::basis(ExponentSeq{2}, two));
    CHECK(milnor_to_admissible(chi_pr(two, 3)) == AdmissibleExpansion::basis(ExponentSeq{2, 1}, two));
    CHECK(milnor_to_admissible(MilnorElement(two)).is_zero());

    MilnorElement mixed = reduced_power(two, 1) + reduced_power(two, 2);
    CHECK_THROWS_AS(milnor_to_admissible(mixed), std::invalid_argument);

    for (unsigned pv : {2u, 3u, 5u}) {
        const Prime p(pv);
        for (Entry r = 0; r <= 8; ++r) {
            for (const auto& i : enumerate_gamma_r(p, r)) {
                const GammaSeq w(i, p);
                CHECK(milnor_to_admissible(admissible_to_milnor(w)) == AdmissibleExpansion::basis(i, p));
            }
            // the greatest admissible word appears with a unit coefficient
            if (r >= 1) {
                const auto expansion = milnor_to_admissible(chi_pr(p, r));
                const Coeff c = expansion.coefficient(gamma_inv(greatest_in_upsilon_r(p, r), p).seq());
                CHECK((c == 1 || c == pv - 1));
                CHECK(to_milnor(expansion) == chi_pr(p, r));
            }
        }
    }
}

TEST_CASE("excess of admissible words")
{
    CHECK(excess_of_word(GammaSeq(ExponentSeq{7}, Prime(3))) == 14);
    CHECK(excess_of_word(GammaSeq(ExponentSeq{2, 1}, Prime(2))) == 2);
    for (unsigned pv : {2u, 3u, 5u})
        for (Entry r = 1; r <= 20; ++r) {
            Entry best = ~Entry{0};
            for (const auto& i : enumerate_gamma_r(Prime(pv), r))
                best = std::min(best, excess_of_word(GammaSeq(i, Prime(pv))));
            CHECK(best == ex(Prime(pv), r));
        }
}
