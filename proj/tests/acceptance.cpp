// Runs the twelve exit criteria at their stated ranges, one line each.
#include <cstdio>

#include "steenrod/claims.hpp"
#include "steenrod/report.hpp"

int main()
{
    using namespace steenrod;
    const auto results = run_claims(ClaimCaps::acceptance());
    int failed = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& c = results[i];
        std::printf("criterion %2zu %s\n", i + 1, render_claim(c).c_str());
        failed += c.pass ? 0 : 1;
    }
    std::printf("%zu/%zu criteria pass\n", results.size() - failed, results.size());
    return failed == 0 ? 0 : 1;
}
