// Checkable claims: each runs one family of identities over a bounded range
// and reports pass/fail with a short diagnostic. Shared by the CLI
// `verify-paper` command and the acceptance suite.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steenrod/bounds.hpp"

namespace steenrod {

struct ClaimCaps
{
    std::vector<std::uint32_t> count_primes{2, 3, 5, 7};
    std::vector<std::uint32_t> sequence_primes{2, 3, 5, 7};
    std::vector<std::uint32_t> algebra_primes{2, 3};
    Entry n_consistency = 500;         // nu bounds and Legendre identity
    Entry n_count = 500;               // closed form vs search for k
    Entry r_sequence = 30;             // ex recurrence, greatest element
    Entry r_excess_bruteforce = 20;    // ex(r) against a scan of Gamma_r
    Entry degree_transition = 60;      // topological degree of transition matrices
    Entry r_chi_top = 8;               // top admissible word in chi(P^r)
    Entry r_antipode = 8;              // closed form vs convolution recursion
    Entry adem_letter_sum = 8;         // Adem vs Milnor
    Entry r_witness_p2 = 8;
    Entry r_witness_p3 = 6;
    std::size_t module_triples = 200;  // random (a, b, f) for the module identity
    Entry module_degree = 40;          // deg a + deg b
    std::uint32_t seed = 20240601;

    /// The ranges stated as exit criteria for the project.
    static ClaimCaps acceptance();
};

struct ClaimResult
{
    std::string id;
    std::string statement;
    std::string anchor;  // library operation the claim exercises, e.g. "seqcomb::ex"
    bool pass = false;
    std::string detail;
    double seconds = 0;
    std::optional<double> time_limit;  // seconds; a pass requires finishing within it
};

/// Expected k_SO(1..23); the published values unless overridden.
using KsoTable = std::vector<std::uint64_t>;
KsoTable published_kso_table();

std::vector<ClaimResult> run_claims(const ClaimCaps& caps, const KsoTable& expected_table = published_kso_table());

/// Claim ids in run order.
std::vector<std::string> claim_ids();

}  // namespace steenrod
