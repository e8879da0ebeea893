#include "doctest.h"

#include <algorithm>
#include <limits>
#include <set>

#include "steenrod/seqcomb.hpp"

using namespace steenrod;

namespace {

// Every vector with entries bounded by r and length bounded by the largest
// weight <= r, filtered by the defining equation. Independent of the
// recursive enumerator.
std::vector<ExponentSeq> upsilon_bruteforce(Prime p, Entry r)
{
    std::vector<Entry> w;
    for (Entry k = 1, acc = 1, pk = 1; acc <= std::max<Entry>(r, 1); ++k) {
        w.push_back(acc);
        pk *= p;
        acc += pk;
    }
    std::vector<ExponentSeq> out;
    std::vector<Entry> xs(w.size(), 0);
    while (true) {
        Entry d = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            d += xs[i] * w[i];
        if (d == r)
            out.emplace_back(xs);
        std::size_t i = 0;
        while (i < xs.size() && xs[i] == r) {
            xs[i] = 0;
            ++i;
        }
        if (i == xs.size())
            break;
        ++xs[i];
    }
    return out;
}

// Minimal number of parts (coin change) in Upsilon_r, by dynamic programming.
Entry min_parts(Prime p, Entry r)
{
    std::vector<Entry> best(r + 1, std::numeric_limits<Entry>::max());
    best[0] = 0;
    for (Entry v = 1; v <= r; ++v)
        for (Entry w = 1, pk = 1; w <= v; pk *= p, w += pk)
            best[v] = std::min(best[v], best[v - w] + 1);
    return best[r];
}

}  // namespace

TEST_CASE("ExponentSeq strips trailing zeros")
{
    CHECK(ExponentSeq{1, 0, 0} == ExponentSeq{1});
    CHECK(ExponentSeq{0, 0}.empty());
    CHECK(ExponentSeq{2, 0, 3}[3] == 3);
    CHECK(ExponentSeq{2, 0, 3}[7] == 0);
    CHECK(ExponentSeq{2, 0, 3}.weight() == 5);
}

TEST_CASE("right-lex comparison")
{
    CHECK(right_lex_cmp(ExponentSeq{1, 0, 1}, ExponentSeq{3, 0, 0}) > 0);
    CHECK(right_lex_cmp(ExponentSeq{2, 1}, ExponentSeq{2, 1}) == 0);
    CHECK(right_lex_cmp(ExponentSeq{0, 1}, ExponentSeq{3}) > 0);
    CHECK(right_lex_cmp(ExponentSeq{3}, ExponentSeq{0, 1}) < 0);
    CHECK(right_lex_cmp(ExponentSeq{}, ExponentSeq{1}) < 0);
}

TEST_CASE("gamma and its inverse")
{
    const Prime two(2), three(3);
    CHECK(gamma(ExponentSeq{2, 1}, two) == ExponentSeq{0, 1});
    CHECK(gamma(ExponentSeq{}, three) == ExponentSeq{});
    CHECK(gamma(ExponentSeq{4, 1}, three) == ExponentSeq{1, 1});
    CHECK_THROWS_AS(gamma(ExponentSeq{1, 1}, two), std::invalid_argument);

    CHECK(gamma_inv(ExponentSeq{0, 1}, two).seq() == ExponentSeq{2, 1});
    CHECK(gamma_inv(ExponentSeq{7}, three).seq() == ExponentSeq{7});
    CHECK(gamma_inv(ExponentSeq{1, 1}, three).seq() == ExponentSeq{4, 1});
}

TEST_CASE("gamma is an order-preserving bijection from Gamma_r to Upsilon_r")
{
    for (unsigned pv : {2u, 3u, 5u}) {
        const Prime p(pv);
        for (Entry r = 0; r <= 16; ++r) {
            const auto gam = enumerate_gamma_r(p, r);
            const auto ups = enumerate_upsilon_r(p, r);
            REQUIRE(gam.size() == ups.size());
            for (std::size_t i = 0; i < gam.size(); ++i) {
                CHECK(gamma(gam[i], p) == ups[i]);
                CHECK(gamma_inv(ups[i], p).seq() == gam[i]);
                CHECK(gamma_inv(ups[i], p).weight() == r);
            }
            for (const auto& a : gam)
                for (const auto& b : gam)
                    CHECK(right_lex_cmp(a, b) == right_lex_cmp(gamma(a, p), gamma(b, p)));
        }
    }
}

TEST_CASE("Upsilon_r enumeration matches brute force")
{
    CHECK(enumerate_upsilon_r(Prime(2), 3) == std::vector<ExponentSeq>{{0, 1}, {3}});
    CHECK(enumerate_upsilon_r(Prime(3), 0) == std::vector<ExponentSeq>{{}});
    CHECK(enumerate_upsilon_r(Prime(3), 5) == std::vector<ExponentSeq>{{1, 1}, {5}});

    for (unsigned pv : {2u, 3u, 5u, 7u}) {
        const Prime p(pv);
        for (Entry r = 0; r <= 14; ++r) {
            auto brute = upsilon_bruteforce(p, r);
            auto got = enumerate_upsilon_r(p, r);
            CHECK(std::is_sorted(got.begin(), got.end(), RightLexGreater{}));
            std::sort(brute.begin(), brute.end(), RightLexGreater{});
            CHECK(got == brute);
            for (const auto& j : got)
                CHECK(upsilon_degree(j, p) == r);
        }
    }
}

TEST_CASE("greatest element of Upsilon_r")
{
    CHECK(greatest_in_upsilon_r(Prime(2), 3) == ExponentSeq{0, 1});
    CHECK(greatest_in_upsilon_r(Prime(3), 1) == ExponentSeq{1});
    CHECK(greatest_in_upsilon_r(Prime(3), 5) == ExponentSeq{1, 1});
    CHECK(greatest_in_upsilon_r(Prime(5), 0) == ExponentSeq{});

    for (unsigned pv : {2u, 3u, 5u, 7u}) {
        const Prime p(pv);
        for (Entry r = 0; r <= 30; ++r) {
            const auto all = enumerate_upsilon_r(p, r);
            const auto g = greatest_in_upsilon_r(p, r);
            CHECK(g == all.front());
            CHECK(satisfies_greatest_conditions(g, p));
            for (const auto& j : all) {
                CHECK(g.weight() <= j.weight());
                if (j != g)
                    CHECK_FALSE(satisfies_greatest_conditions(j, p));
            }
        }
    }
}

TEST_CASE("ex(r)")
{
    CHECK(ex(Prime(2), 0) == 0);
    CHECK(ex(Prime(3), 1) == 2);
    CHECK(ex(Prime(2), 2) == 4);
    CHECK(ex(Prime(2), 3) == 2);
    CHECK(ex(Prime(3), 5) == 4);

    for (unsigned pv : {2u, 3u, 5u, 7u}) {
        const Prime p(pv);
        for (Entry r = 1; r <= 60; ++r) {
            CHECK(ex(p, r) == 2 * min_parts(p, r));
            const auto diff = static_cast<long long>(ex(p, r)) - static_cast<long long>(ex(p, r - 1));
            CHECK((diff == 2 || diff == -2 * (static_cast<long long>(pv) - 1)));
        }
    }
}

TEST_CASE("count_k closed form against search")
{
    CHECK(count_k(Prime(2), 7) == 1);
    CHECK(count_k(Prime(2), 3) == 0);
    CHECK(count_k(Prime(3), 25) == 5);
    CHECK(count_k_bruteforce(Prime(2), 7) == 1);
    CHECK(count_k_bruteforce(Prime(3), 25) == 5);
    CHECK_THROWS(count_k(Prime(2), 0));

    for (unsigned pv : {2u, 3u, 5u, 7u})
        for (Entry n = 1; n <= 200; ++n)
            CHECK(count_k(Prime(pv), n) == count_k_bruteforce(Prime(pv), n));
}

TEST_CASE("enumerate_gamma_r lists admissible sequences of weight r")
{
    const Prime p(2);
    const auto g = enumerate_gamma_r(p, 6);
    std::set<std::vector<Entry>> seen;
    for (const auto& s : g) {
        CHECK(is_admissible(s, p));
        CHECK(s.weight() == 6);
        seen.insert(s.entries());
    }
    CHECK(seen == std::set<std::vector<Entry>>{{6}, {5, 1}, {4, 2}});
}
