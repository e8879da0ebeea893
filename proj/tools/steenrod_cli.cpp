// steenrod: command-line front end.
//
//   steenrod bounds <n> [--show-superseded]
//   steenrod chi <p> <r> [--basis milnor|admissible]
//   steenrod ex <p> <r_max>
//   steenrod upsilon <p> <r>
//   steenrod act <p> <r>
//   steenrod verify-paper [--cap-r N] [--cap-n N] [--cap-degree N]
//
// Every command accepts --json. Exit status: 0 success, 1 a failed check,
// 2 bad arguments.
#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "steenrod/bounds.hpp"
#include "steenrod/claims.hpp"
#include "steenrod/milnor.hpp"
#include "steenrod/polyaction.hpp"
#include "steenrod/report.hpp"

namespace {

using namespace steenrod;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

Prime checked_prime(std::uint64_t p)
{
    if (!is_prime(p) || p > 0xFFFF)
        throw UsageError(std::to_string(p) + " is not a (supported) prime");
    return Prime(p);
}

KsoTable parse_table(const std::string& csv)
{
    KsoTable out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoull(item));
        } catch (const std::exception&) {
            throw UsageError("bad table entry '" + item + "'");
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Steenrod-algebra antipodes, excess and realization bounds"};
    app.require_subcommand(1);

    bool as_json = false, timing = false;
    app.add_flag("--json", as_json, "Print a structured JSON document");
    app.add_flag("--timing", timing, "Include elapsed time in the JSON document");

    std::uint64_t n = 0, p = 0, r = 0;
    bool show_superseded = false;
    auto* bounds = app.add_subcommand("bounds", "Bounds and exact values of k_U(n), k_SO(n)");
    bounds->add_option("n", n, "Dimension")->required();
    bounds->add_flag("--show-superseded", show_superseded, "Also print the earlier upper bounds");

    std::string basis = "milnor";
    auto* chi = app.add_subcommand("chi", "Antipode chi(P^r) in the Milnor or Cartan-Serre basis");
    chi->add_option("p", p, "Prime")->required();
    chi->add_option("r", r, "Exponent")->required();
    chi->add_option("--basis", basis, "milnor or admissible")->check(CLI::IsMember({"milnor", "admissible"}));

    auto* ex_cmd = app.add_subcommand("ex", "Table of ex(r) for r = 0..r_max");
    ex_cmd->add_option("p", p, "Prime")->required();
    ex_cmd->add_option("r_max", r, "Largest r")->required();

    auto* upsilon = app.add_subcommand("upsilon", "Enumerate Upsilon_r, flagging its greatest element");
    upsilon->add_option("p", p, "Prime")->required();
    upsilon->add_option("r", r, "Reduced degree")->required();

    auto* act = app.add_subcommand("act", "chi(P^r) on i_1...i_{ex(r)/2} with its witness monomial");
    act->add_option("p", p, "Prime")->required();
    act->add_option("r", r, "Exponent (>= 1)")->required();

    ClaimCaps caps;
    std::uint64_t cap_r = caps.r_chi_top, cap_n = caps.n_consistency, cap_degree = caps.degree_transition;
    std::string table_override;
    auto* verify = app.add_subcommand("verify-paper", "Run every bounded check and report one line per claim");
    verify->add_option("--cap-r", cap_r, "Largest r for algebra and action checks");
    verify->add_option("--cap-n", cap_n, "Largest dimension for bound identities");
    verify->add_option("--cap-degree", cap_degree, "Largest degree for transition matrices and module checks");
    verify->add_option("--expect-table", table_override, "Comma-separated k_SO(1..23) to check against");

    for (auto* sub : {bounds, chi, ex_cmd, upsilon, act, verify}) {
        sub->add_flag("--json", as_json, "Print a structured JSON document");
        sub->add_flag("--timing", timing, "Include elapsed time in the JSON document");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    OutputDocument doc;
    std::string text;
    int status = kExitOk;

    try {
        if (bounds->parsed()) {
            if (n < 1)
                throw UsageError("n must be a positive integer");
            const BoundReport report = bound_report(n);
            doc.command = "bounds";
            doc.parameters = {{"n", n}, {"show_superseded", show_superseded}};
            doc.result = to_json(report, show_superseded);
            text = render_bounds(report, show_superseded);
        } else if (chi->parsed()) {
            const Prime q = checked_prime(p);
            const MilnorElement e = chi_pr(q, r);
            doc.command = "chi";
            doc.parameters = {{"p", p}, {"r", r}, {"basis", basis}};
            if (basis == "milnor") {
                doc.result = to_json(e);
                text = "chi(P^" + std::to_string(r) + ") = " + e.str() + "\n";
            } else {
                const AdmissibleExpansion a = milnor_to_admissible(e);
                doc.result = to_json(a);
                text = "chi(P^" + std::to_string(r) + ") = " + a.str() + "\n";
            }
        } else if (ex_cmd->parsed()) {
            const Prime q = checked_prime(p);
            doc.command = "ex";
            doc.parameters = {{"p", p}, {"r_max", r}};
            doc.result = ex_table_json(q, r);
            text = render_ex_table(q, r);
        } else if (upsilon->parsed()) {
            const Prime q = checked_prime(p);
            doc.command = "upsilon";
            doc.parameters = {{"p", p}, {"r", r}};
            doc.result = upsilon_json(q, r);
            text = render_upsilon(q, r);
        } else if (act->parsed()) {
            const Prime q = checked_prime(p);
            if (r < 1)
                throw UsageError("r must be at least 1");
            const auto w = chi_nontriviality_witness(q, r);
            doc.command = "act";
            doc.parameters = {{"p", p}, {"r", r}};
            doc.result = to_json(w, q, r);
            text = render_witness(w, q, r);
            status = w.ok ? kExitOk : kExitFailed;
        } else if (verify->parsed()) {
            caps.r_chi_top = caps.r_antipode = caps.adem_letter_sum = caps.r_witness_p2 = cap_r;
            caps.r_witness_p3 = std::min<std::uint64_t>(cap_r, 6);
            caps.n_consistency = caps.n_count = cap_n;
            caps.degree_transition = caps.module_degree = cap_degree;
            const KsoTable table = table_override.empty() ? published_kso_table() : parse_table(table_override);
            const auto results = run_claims(caps, table);
            doc.command = "verify-paper";
            doc.parameters = {{"cap_r", cap_r}, {"cap_n", cap_n}, {"cap_degree", cap_degree}};
            json claims = json::array();
            bool all = true;
            for (const auto& c : results) {
                claims.push_back(to_json(c));
                text += render_claim(c) + "\n";
                all = all && c.pass;
            }
            doc.result = {{"claims", claims}, {"all_pass", all}};
            text += all ? "all claims PASS\n" : "some claims FAILED\n";
            status = all ? kExitOk : kExitFailed;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (timing)
        doc.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << (as_json ? serialize(doc) + "\n" : text);
    return status;
}
