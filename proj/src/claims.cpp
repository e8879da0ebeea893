#include "steenrod/claims.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "steenrod/adem.hpp"
#include "steenrod/milnor.hpp"
#include "steenrod/polyaction.hpp"
#include "steenrod/transition.hpp"

namespace steenrod {

ClaimCaps ClaimCaps::acceptance()
{
    ClaimCaps c;
    c.sequence_primes = {2, 3, 5};
    c.n_consistency = 2000;
    c.n_count = 500;
    c.r_sequence = 30;
    c.r_excess_bruteforce = 20;
    c.degree_transition = 60;
    c.r_chi_top = 8;
    c.r_antipode = 10;
    c.adem_letter_sum = 8;
    c.r_witness_p2 = 8;
    c.r_witness_p3 = 6;
    c.module_triples = 200;
    c.module_degree = 40;
    return c;
}

KsoTable published_kso_table() { return KsoTable(kPublishedKsoTable.begin(), kPublishedKsoTable.end()); }

namespace {

// Primes for the algebra-level claims that are cheap enough to run at p = 5 too.
const std::vector<std::uint32_t> kAlgebraWidePrimes{2, 3, 5};

struct Outcome
{
    bool pass = true;
    std::ostringstream detail;

    // Records the first failure only; later ones are counted.
    std::size_t failures = 0;
    template <class... Args>
    void fail(const Args&... args)
    {
        if (failures++ == 0)
            (detail << ... << args);
        pass = false;
    }
};

Outcome check_kso_table(const KsoTable& expected)
{
    Outcome o;
    const auto table = kso_table();
    if (expected.size() != table.size()) {
        o.fail("expected table has ", expected.size(), " entries, computed ", table.size());
        return o;
    }
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i].second != expected[i])
            o.fail("n=", table[i].first, ": computed ", table[i].second, ", expected ", expected[i]);
    if (o.pass)
        o.detail << "n=1..23 match, k_SO(23)=" << table.back().second;
    return o;
}

Outcome check_exact_values()
{
    Outcome o;
    BigInt fact = 1;  // floor((n-1)/2)!
    for (Entry n = 1; n <= 40; ++n) {
        if (n >= 3 && (n - 1) % 2 == 0)
            fact *= (n - 1) / 2;
        const ExactValues e = exact_values(n);
        if (n < 12) {
            if (!e.ku_exact || *e.ku_exact != fact)
                o.fail("k_U(", n, ") not reported as ", fact);
        } else if (e.ku_exact) {
            o.fail("k_U(", n, ") reported exact outside its range");
        }
        if (n < 24) {
            if (e.kso_candidates != std::vector<BigInt>{odd_part(fact)})
                o.fail("k_SO(", n, ") not reported as ", odd_part(fact));
        } else if (n == 24) {
            if (e.kso_candidates != std::vector<BigInt>{155925, 467775})
                o.fail("k_SO(24) candidates are not {155925, 467775}");
        } else if (!e.kso_candidates.empty()) {
            o.fail("k_SO(", n, ") reported exact outside its range");
        }
        for (const auto& b : e.per_prime) {
            const bool licensed = n < 2 * Entry{b.p} * b.p + 2 * Entry{b.p};
            if (licensed != b.exact.has_value() || (b.exact && *b.exact != b.nu_lower))
                o.fail("exactness flag for p=", b.p, " at n=", n);
        }
    }
    if (o.pass)
        o.detail << "k_U exact for n<12, k_SO exact for n<24, k_SO(24) in {155925, 467775}";
    return o;
}

Outcome check_bound_consistency(Entry n_max)
{
    Outcome o;
    BigInt fact = 1;
    for (Entry n = 1; n <= n_max; ++n) {
        if (n >= 3 && (n - 1) % 2 == 0)
            fact *= (n - 1) / 2;
        BigInt lower_product = 1, upper_product = 1;
        for (std::uint32_t p : contributing_primes(n)) {
            const Entry lo = nu_lower(Prime(p), n), hi = nu_upper(Prime(p), n);
            if (lo > hi)
                o.fail("n=", n, ", p=", p, ": lower exponent ", lo, " > upper ", hi);
            lower_product *= pow_big(p, lo);
            upper_product *= pow_big(p, hi);
        }
        if (lower_product != fact)
            o.fail("n=", n, ": product of lower prime powers differs from floor((n-1)/2)!");
        if (upper_product % lower_product != 0)
            o.fail("n=", n, ": lower bound does not divide upper bound");
    }
    if (o.pass)
        o.detail << "n=1.." << n_max;
    return o;
}

Outcome check_count_closed_form(const std::vector<std::uint32_t>& primes, Entry n_max)
{
    Outcome o;
    for (std::uint32_t pv : primes)
        for (Entry n = 1; n <= n_max; ++n) {
            const Entry closed = count_k(Prime(pv), n), search = count_k_bruteforce(Prime(pv), n);
            if (closed != search)
                o.fail("p=", pv, ", n=", n, ": closed form ", closed, " vs search ", search);
        }
    if (o.pass)
        o.detail << "n=1.." << n_max << " for " << primes.size() << " primes";
    return o;
}

Outcome check_excess(const std::vector<std::uint32_t>& primes, Entry r_max, Entry r_brute)
{
    Outcome o;
    for (std::uint32_t pv : primes) {
        const Prime p(pv);
        for (Entry r = 1; r <= r_max; ++r) {
            const auto diff = static_cast<long long>(ex(p, r)) - static_cast<long long>(ex(p, r - 1));
            if (diff != 2 && diff != -2 * (static_cast<long long>(pv) - 1))
                o.fail("p=", pv, ", r=", r, ": ex difference ", diff);
        }
        for (Entry r = 1; r <= r_brute; ++r) {
            Entry best = ~Entry{0};
            for (const auto& i : enumerate_gamma_r(p, r))
                best = std::min(best, excess_of_word(GammaSeq(i, p)));
            if (best != ex(p, r))
                o.fail("p=", pv, ", r=", r, ": min excess over Gamma_r ", best, " vs ex ", ex(p, r));
        }
    }
    if (o.pass)
        o.detail << "differences for r<=" << r_max << ", minimum over Gamma_r for r<=" << r_brute;
    return o;
}

Outcome check_greatest(const std::vector<std::uint32_t>& primes, Entry r_max)
{
    Outcome o;
    for (std::uint32_t pv : primes) {
        const Prime p(pv);
        for (Entry r = 0; r <= r_max; ++r) {
            const auto all = enumerate_upsilon_r(p, r);
            const auto g = greatest_in_upsilon_r(p, r);
            if (g != all.front())
                o.fail("p=", pv, ", r=", r, ": constructed ", g.str(), " but maximum is ", all.front().str());
            if (!satisfies_greatest_conditions(g, p))
                o.fail("p=", pv, ", r=", r, ": ", g.str(), " violates the digit conditions");
            for (const auto& j : all) {
                if (j.weight() < g.weight())
                    o.fail("p=", pv, ", r=", r, ": ", j.str(), " has a smaller term sum");
                if (j != g && satisfies_greatest_conditions(j, p))
                    o.fail("p=", pv, ", r=", r, ": non-maximal ", j.str(), " satisfies the conditions");
            }
        }
    }
    if (o.pass)
        o.detail << "r=0.." << r_max;
    return o;
}

Outcome check_transition(const std::vector<std::uint32_t>& primes, Entry degree_max)
{
    Outcome o;
    std::size_t largest = 0;
    for (std::uint32_t pv : primes) {
        const Prime p(pv);
        for (Entry r = 0; 2 * (pv - 1) * r <= degree_max; ++r) {
            const DenseFpMatrix m = dense_transition_matrix(p, r);
            largest = std::max(largest, m.dim);
            if (!is_upper_unitriangular(m, p)) {
                o.fail("p=", pv, ", degree ", 2 * (pv - 1) * r, ": not upper unitriangular");
                continue;
            }
            for (const auto& i : enumerate_gamma_r(p, r)) {
                const GammaSeq w(i, p);
                if (milnor_to_admissible(admissible_to_milnor(w)) != AdmissibleExpansion::basis(i, p))
                    o.fail("p=", pv, ": round trip of P", i.str(), " fails");
            }
        }
    }
    if (o.pass)
        o.detail << "degrees <= " << degree_max << ", largest basis " << largest;
    return o;
}

Outcome check_chi_top(const std::vector<std::uint32_t>& primes, Entry r_max)
{
    Outcome o;
    for (std::uint32_t pv : primes) {
        const Prime p(pv);
        for (Entry r = 1; r <= r_max; ++r) {
            const ExponentSeq top = gamma_inv(greatest_in_upsilon_r(p, r), p).seq();
            if (top != enumerate_gamma_r(p, r).front())
                o.fail("p=", pv, ", r=", r, ": gamma^-1 of the greatest element is not the greatest word");
            const Coeff c = milnor_to_admissible(chi_pr(p, r)).coefficient(top);
            if (c != 1 && c != pv - 1)
                o.fail("p=", pv, ", r=", r, ": coefficient of P", top.str(), " is ", c);
        }
    }
    if (o.pass)
        o.detail << "r=1.." << r_max;
    return o;
}

Outcome check_antipode(const std::vector<std::uint32_t>& primes, Entry r_max)
{
    Outcome o;
    for (std::uint32_t pv : primes) {
        const Prime p(pv);
        std::vector<MilnorElement> closed, recursive;
        for (Entry r = 0; r <= r_max; ++r) {
            closed.push_back(chi_pr(p, r));
            recursive.push_back(chi_convolution_oracle(p, r));
        }
        for (Entry r = 1; r <= r_max; ++r) {
            if (closed[r] != recursive[r])
                o.fail("p=", pv, ", r=", r, ": closed form and recursion differ");
            for (const auto* chi : {&closed, &recursive}) {
                MilnorElement left(p), right(p);
                for (Entry i = 0; i <= r; ++i) {
                    left += reduced_power(p, i) * (*chi)[r - i];
                    right += (*chi)[i] * reduced_power(p, r - i);
                }
                if (!left.is_zero() || !right.is_zero())
                    o.fail("p=", pv, ", r=", r, ": convolution sum is nonzero");
            }
        }
    }
    if (o.pass)
        o.detail << "r=1.." << r_max;
    return o;
}

Outcome check_adem(const std::vector<std::uint32_t>& primes, Entry letter_sum)
{
    Outcome o;
    const auto words = compositions_up_to(letter_sum);
    for (std::uint32_t pv : primes)
        for (const auto& letters : words) {
            const CompositionWord w(letters, Prime(pv));
            const auto nf = adem_normalize(w);
            for (const auto& [word, c] : nf.terms())
                if (!is_admissible(word, Prime(pv)))
                    o.fail("p=", pv, ": Adem output ", word.str(), " is not admissible");
            if (to_milnor(nf) != composite_to_milnor(letters, Prime(pv)))
                o.fail("p=", pv, ": composite ", ExponentSeq(letters).str(), " disagrees");
        }
    if (o.pass)
        o.detail << words.size() << " composites per prime";
    return o;
}

Outcome check_witness(Entry r_p2, Entry r_p3)
{
    Outcome o;
    std::vector<std::string> off_unit;
    const std::array<std::pair<std::uint32_t, Entry>, 2> ranges{{{2, r_p2}, {3, r_p3}}};
    for (const auto& [pv, r_max] : ranges) {
        const Prime p(pv);
        for (Entry r = 1; r <= r_max; ++r) {
            const auto w = chi_nontriviality_witness(p, r);
            if (!w.ok)
                o.fail("p=", pv, ", r=", r, ": result ", w.result.is_zero() ? "is zero" : "misses the witness monomial");
            else if (!w.witness_is_leading)
                o.fail("p=", pv, ", r=", r, ": witness is not the left-lex leading monomial");
            // the coefficient carries the +-1 of the top admissible word
            const auto top = gamma_inv(greatest_in_upsilon_r(p, r), p);
            const auto own = apply_word(top, PolyClass::fundamental_product(ex(p, r) / 2, p));
            if (own.coefficient(w.witness) != 1)
                off_unit.push_back(std::to_string(pv) + ":" + std::to_string(r));
        }
    }
    if (o.pass) {
        o.detail << "p=2 r<=" << r_p2 << ", p=3 r<=" << r_p3;
        if (off_unit.empty()) {
            o.detail << "; M_J coefficient 1 throughout";
        } else {
            o.detail << "; M_J coefficient differs from 1 at (p:r)";
            for (const auto& s : off_unit)
                o.detail << ' ' << s;
        }
    }
    return o;
}

MilnorElement random_element(Prime p, Entry r, std::mt19937& rng)
{
    MilnorElement e(p);
    std::uniform_int_distribution<Coeff> coeff(0, p - 1);
    for (const auto& j : enumerate_upsilon_r(p, r))
        e.add_term(j, coeff(rng));
    if (e.is_zero())
        e.add_term(enumerate_upsilon_r(p, r).front(), 1);
    return e;
}

PolyClass random_class(Prime p, std::mt19937& rng)
{
    std::uniform_int_distribution<std::size_t> vars(1, 4);
    std::uniform_int_distribution<Entry> total(1, 6);
    const std::size_t m = vars(rng);
    const Entry t = total(rng);
    std::uniform_int_distribution<std::size_t> var(0, m - 1);
    std::uniform_int_distribution<Coeff> coeff(1, p - 1);
    PolyClass f(m, p);
    for (int k = 0; k < 3; ++k) {
        Multidegree a(m, 0);
        for (Entry e = 0; e < t; ++e)
            ++a[var(rng)];
        f.add_term(a, coeff(rng));
    }
    if (f.is_zero())
        f = PolyClass::fundamental_product(m, p);
    return f;
}

Outcome check_module(std::size_t triples, Entry degree_cap, std::uint32_t seed)
{
    Outcome o;
    std::mt19937 rng(seed);
    const std::vector<std::uint32_t> primes{2, 3, 5};
    std::size_t nonzero = 0;
    for (std::size_t t = 0; t < triples; ++t) {
        const Prime p(primes[t % primes.size()]);
        const auto f = random_class(p, rng);
        // P^k kills x^a for k > a, so larger total degrees would act as zero.
        Entry f_exponent = 0;
        for (Entry e : f.terms().begin()->first)
            f_exponent += e;
        const Entry r_total = std::min<Entry>(degree_cap / (2 * (p - 1)), f_exponent);
        std::uniform_int_distribution<Entry> split(0, r_total);
        const Entry ra = split(rng);
        std::uniform_int_distribution<Entry> rest(0, r_total - ra);
        const Entry rb = rest(rng);
        const auto a = random_element(p, ra, rng);
        const auto b = random_element(p, rb, rng);
        const auto lhs = apply_element(a * b, f);
        if (lhs != apply_element(a, apply_element(b, f)))
            o.fail("trial ", t, " (p=", p.value(), ", a in degree ", *a.degree(), ", b in degree ", *b.degree(),
                   "): (ab)f != a(bf)");
        if (!lhs.is_zero())
            ++nonzero;
    }
    if (o.pass)
        o.detail << triples << " triples, " << nonzero << " with nonzero image";
    return o;
}

struct ClaimSpec
{
    std::string id;
    std::string statement;
    std::string anchor;
    std::optional<double> time_limit;
    std::function<Outcome()> run;
};

std::vector<ClaimSpec> claim_specs(const ClaimCaps& caps, const KsoTable& table)
{
    return {
        {"kso-table", "k_SO(n) for n=1..23 equals the published table", "bounds::kso_table", 1.0,
         [&] { return check_kso_table(table); }},
        {"exact-small-dimensions", "exact k_U for n<12, k_SO for n<24, two candidates at n=24", "bounds::exact_values", std::nullopt,
         [] { return check_exact_values(); }},
        {"bound-consistency", "lower exponent <= upper exponent; lower bound is floor((n-1)/2)!", "bounds::bound_report", 10.0,
         [&] { return check_bound_consistency(caps.n_consistency); }},
        {"count-closed-form", "sum floor((n-1)/2p^i) is the greatest k with n > ex(k)+2k(p-1)", "seqcomb::count_k", std::nullopt,
         [&] { return check_count_closed_form(caps.count_primes, caps.n_count); }},
        {"excess-recurrence", "ex(r)-ex(r-1) in {2, -2(p-1)}; ex(r) is the minimal excess over Gamma_r", "seqcomb::ex",
         std::nullopt, [&] { return check_excess(caps.sequence_primes, caps.r_sequence, caps.r_excess_bruteforce); }},
        {"greatest-element", "greatest element of Upsilon_r: digit conditions and minimal term sum", "seqcomb::greatest_in_upsilon_r", std::nullopt,
         [&] { return check_greatest(caps.sequence_primes, caps.r_sequence); }},
        {"transition-triangular", "Milnor/Cartan-Serre transition is upper unitriangular; round trip is identity", "transition::build_transition_matrix",
         std::nullopt, [&] { return check_transition(kAlgebraWidePrimes, caps.degree_transition); }},
        {"chi-top-word", "chi(P^r) contains the greatest admissible word with coefficient +-1", "milnor::milnor_to_admissible", std::nullopt,
         [&] { return check_chi_top(caps.algebra_primes, caps.r_chi_top); }},
        {"antipode-convolution", "closed-form antipode equals the convolution recursion", "milnor::chi_pr", std::nullopt,
         [&] { return check_antipode(kAlgebraWidePrimes, caps.r_antipode); }},
        {"adem-milnor", "Adem normal form and Milnor product agree", "adem::adem_normalize", std::nullopt,
         [&] { return check_adem(kAlgebraWidePrimes, caps.adem_letter_sum); }},
        {"chi-witness", "chi(P^r) is nonzero on i_1...i_{ex(r)/2} with leading witness monomial", "polyaction::chi_nontriviality_witness", 120.0,
         [&] { return check_witness(caps.r_witness_p2, caps.r_witness_p3); }},
        {"module-action", "(ab)f = a(bf) on random homogeneous triples", "polyaction::apply_element", std::nullopt,
         [&] { return check_module(caps.module_triples, caps.module_degree, caps.seed); }},
    };
}

}  // namespace

std::vector<std::string> claim_ids()
{
    std::vector<std::string> ids;
    for (const auto& c : claim_specs(ClaimCaps{}, published_kso_table()))
        ids.push_back(c.id);
    return ids;
}

std::vector<ClaimResult> run_claims(const ClaimCaps& caps, const KsoTable& expected_table)
{
    std::vector<ClaimResult> out;
    for (const auto& spec : claim_specs(caps, expected_table)) {
        ClaimResult r{spec.id, spec.statement, spec.anchor, false, {}, 0, spec.time_limit};
        const auto start = std::chrono::steady_clock::now();
        try {
            Outcome o = spec.run();
            r.pass = o.pass;
            r.detail = o.detail.str();
            if (o.failures > 1)
                r.detail += " (+" + std::to_string(o.failures - 1) + " more)";
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.pass && r.time_limit && r.seconds >= *r.time_limit) {
            r.pass = false;
            r.detail += "; exceeded time limit";
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace steenrod
