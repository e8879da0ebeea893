#include "doctest.h"

#include <random>

#include "steenrod/polyaction.hpp"

using namespace steenrod;

namespace {

PolyClass random_homogeneous(std::size_t m, Entry total, Prime p, std::mt19937& rng, int terms = 4)
{
    PolyClass f(m, p);
    std::uniform_int_distribution<std::size_t> var(0, m - 1);
    std::uniform_int_distribution<Coeff> coeff(1, p - 1);
    for (int t = 0; t < terms; ++t) {
        Multidegree a(m, 0);
        for (Entry e = 0; e < total; ++e)
            ++a[var(rng)];
        f.add_term(a, coeff(rng));
    }
    return f;
}

MilnorElement random_element(Prime p, Entry r, std::mt19937& rng)
{
    MilnorElement e(p);
    std::uniform_int_distribution<Coeff> coeff(0, p - 1);
    for (const auto& j : enumerate_upsilon_r(p, r))
        e.add_term(j, coeff(rng));
    return e;
}

}  // namespace

TEST_CASE("P^k on a power of the generator")
{
    CHECK(pk_on_power(Prime(3), 1, 1) == std::pair<Coeff, Entry>{1, 3});
    CHECK(pk_on_power(Prime(5), 0, 7) == std::pair<Coeff, Entry>{1, 7});
    CHECK(pk_on_power(Prime(2), 2, 2) == std::pair<Coeff, Entry>{1, 4});
    CHECK(pk_on_power(Prime(3), 2, 1).first == 0);
}

TEST_CASE("Cartan formula on small classes")
{
    const Prime two(2), three(3);
    const auto i1i2 = PolyClass::fundamental_product(2, two);
    CHECK(apply_pk(two, 0, i1i2) == i1i2);
    CHECK(apply_pk(two, 2, i1i2) == PolyClass::monomial({2, 2}, two));
    CHECK(apply_pk(three, 1, PolyClass::monomial({2}, three)) == PolyClass::monomial({4}, three, 2));

    PolyClass expect(2, two);
    expect.add_term({4, 1}, 1);
    expect.add_term({1, 4}, 1);
    CHECK(apply_word(GammaSeq(ExponentSeq{2, 1}, two), i1i2) == expect);
    CHECK(apply_word(GammaSeq(ExponentSeq{}, two), i1i2) == i1i2);
    CHECK(apply_word(CompositionWord({1}, two), i1i2) == apply_pk(two, 1, i1i2));
    CHECK(expect.str() == "i1^4*i2 + i1*i2^4");
}

TEST_CASE("Cartan multiplicativity and degree bookkeeping")
{
    std::mt19937 rng(7);
    for (unsigned pv : {2u, 3u}) {
        const Prime p(pv);
        for (int trial = 0; trial < 20; ++trial) {
            const auto f = random_homogeneous(3, 1 + trial % 3, p, rng);
            const auto g = random_homogeneous(3, 1 + trial % 2, p, rng);
            for (Entry k = 0; k <= 4; ++k) {
                PolyClass rhs(3, p);
                for (Entry i = 0; i <= k; ++i)
                    rhs += apply_pk(p, i, f) * apply_pk(p, k - i, g);
                CHECK(apply_pk(p, k, f * g) == rhs);
                const auto image = apply_pk(p, k, f);
                if (!image.is_zero() && f.degree())
                    CHECK(*image.degree() == *f.degree() + 2 * k * (pv - 1));
            }
        }
    }
}

TEST_CASE("the action is a module structure")
{
    std::mt19937 rng(99);
    for (unsigned pv : {2u, 3u}) {
        const Prime p(pv);
        for (int trial = 0; trial < 15; ++trial) {
            std::uniform_int_distribution<Entry> deg(0, pv == 2 ? 5 : 3);
            const auto a = random_element(p, deg(rng), rng);
            const auto b = random_element(p, deg(rng), rng);
            const auto f = random_homogeneous(2, 2, p, rng);
            CHECK(apply_element(a * b, f) == apply_element(a, apply_element(b, f)));
        }
    }
    CHECK(apply_element(MilnorElement::unit(Prime(2)), PolyClass::fundamental_product(2, Prime(2))) ==
          PolyClass::fundamental_product(2, Prime(2)));
    CHECK(apply_element(chi_pr(Prime(2), 1), PolyClass::fundamental_product(1, Prime(2))) ==
          PolyClass::monomial({2}, Prime(2)));
    CHECK_THROWS_AS(apply_element(reduced_power(Prime(2), 1) + reduced_power(Prime(2), 2),
                                  PolyClass::fundamental_product(1, Prime(2))),
                    std::invalid_argument);
}

TEST_CASE("excess vanishing on the fundamental product")
{
    for (unsigned pv : {2u, 3u}) {
        const Prime p(pv);
        for (Entry r = 1; r <= (pv == 2 ? 8u : 6u); ++r)
            for (const auto& i : enumerate_gamma_r(p, r)) {
                const GammaSeq w(i, p);
                const Entry e = excess_of_word(w);
                for (std::size_t m = 1; 2 * m < e && m <= 3; ++m)
                    CHECK(apply_word(w, PolyClass::fundamental_product(m, p)).is_zero());
            }
    }
}

TEST_CASE("M_J is the leading monomial of P^{gamma^-1(J)} on the fundamental product")
{
    for (unsigned pv : {2u, 3u}) {
        const Prime p(pv);
        for (Entry r = 1; r <= (pv == 2 ? 10u : 8u); ++r) {
            const Entry m = ex(p, r) / 2;
            for (const auto& j : enumerate_upsilon_r(p, r)) {
                if (j.weight() != m)
                    continue;
                const auto image = apply_word(gamma_inv(j, p), PolyClass::fundamental_product(m, p));
                const auto mj = witness_monomial(j, p);
                REQUIRE_FALSE(image.is_zero());
                CHECK(image.coefficient(mj) == 1);
                CHECK(image.terms().begin()->first == mj);
            }
        }
    }
}

TEST_CASE("chi(P^r) acts nontrivially on i_1 ... i_{ex(r)/2}")
{
    const Prime two(2);
    auto w1 = chi_nontriviality_witness(two, 1);
    CHECK(w1.ok);
    CHECK(w1.result == PolyClass::monomial({2}, two));
    CHECK(w1.witness == Multidegree{2});

    auto w2 = chi_nontriviality_witness(two, 2);
    CHECK(w2.ok);
    CHECK(w2.witness == Multidegree{2, 2});
    CHECK(w2.result.coefficient({2, 2}) != 0);

    auto w3 = chi_nontriviality_witness(two, 3);
    CHECK(w3.ok);
    CHECK(w3.witness == Multidegree{4});
    CHECK(w3.witness_is_leading);

    CHECK_THROWS(chi_nontriviality_witness(two, 0));
    CHECK(witness_monomial(ExponentSeq{1, 2}, Prime(3)) == Multidegree{9, 9, 3});
}
