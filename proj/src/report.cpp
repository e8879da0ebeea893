#include "steenrod/report.hpp"

#include <iomanip>
#include <sstream>

namespace steenrod {

using nlohmann::json;

json to_json(const OutputDocument& doc)
{
    json j{{"schema", kSchemaVersion},
           {"command", doc.command},
           {"parameters", doc.parameters},
           {"result", doc.result},
           {"engine_version", doc.engine_version}};
    if (doc.elapsed_ms)
        j["elapsed_ms"] = *doc.elapsed_ms;
    return j;
}

OutputDocument document_from_json(const json& j)
{
    if (!j.is_object() || j.value("schema", 0) != kSchemaVersion)
        throw std::runtime_error("unsupported output document schema");
    try {
        OutputDocument doc;
        doc.command = j.at("command").get<std::string>();
        doc.parameters = j.at("parameters");
        doc.result = j.at("result");
        doc.engine_version = j.at("engine_version").get<std::string>();
        if (j.contains("elapsed_ms"))
            doc.elapsed_ms = j.at("elapsed_ms").get<double>();
        return doc;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("malformed output document: ") + e.what());
    }
}

std::string serialize(const OutputDocument& doc) { return to_json(doc).dump(2); }

OutputDocument parse_document(const std::string& text) { return document_from_json(json::parse(text)); }

std::string to_string(const BigInt& x) { return x.str(); }

namespace {

template <class Basis>
json combination_json(const FpCombination<Basis>& e)
{
    json terms = json::array();
    for (const auto& [s, c] : e.terms())
        terms.push_back({{"basis", std::string(Basis::name) + s.str()}, {"exponents", s.entries()}, {"coeff", c}});
    json j{{"prime", e.prime().value()}, {"terms", terms}, {"text", e.str()}};
    if (auto d = e.degree())
        j["degree"] = *d;
    return j;
}

}  // namespace

json to_json(const MilnorElement& e) { return combination_json(e); }
json to_json(const AdmissibleExpansion& e) { return combination_json(e); }

json to_json(const PolyClass& f)
{
    json terms = json::array();
    for (const auto& [a, c] : f.terms())
        terms.push_back({{"monomial", PolyClass::monomial_str(a)}, {"exponents", a}, {"coeff", c}});
    json j{{"prime", f.prime().value()}, {"variables", f.variables()}, {"terms", terms}, {"text", f.str()}};
    if (auto d = f.degree())
        j["degree"] = *d;
    return j;
}

json to_json(const BoundReport& r, bool show_superseded)
{
    json primes = json::array();
    for (const auto& b : r.per_prime) {
        json row{{"p", b.p}, {"nu_lower", b.nu_lower}, {"nu_upper", b.nu_upper}};
        row["exact"] = b.exact ? json(*b.exact) : json(nullptr);
        primes.push_back(row);
    }
    json j{{"n", r.n},
           {"per_prime", primes},
           {"ku_lower", to_string(r.ku_lower)},
           {"ku_upper", to_string(r.ku_upper)},
           {"kso_lower", to_string(r.kso_lower)},
           {"kso_upper", to_string(r.kso_upper)}};
    j["ku_exact"] = r.ku_exact ? json(to_string(*r.ku_exact)) : json(nullptr);
    if (r.kso_candidates.size() == 1) {
        j["kso_exact"] = to_string(r.kso_candidates.front());
    } else if (r.kso_candidates.empty()) {
        j["kso_exact"] = nullptr;
    } else {
        json c = json::array();
        for (const auto& v : r.kso_candidates)
            c.push_back(to_string(v));
        j["kso_exact"] = json{{"candidates", c}};
    }
    if (show_superseded) {
        j["ku_superseded"] = to_string(r.ku_superseded);
        j["kso_superseded"] = to_string(r.kso_superseded);
    }
    return j;
}

json to_json(const NontrivialityWitness& w, Prime p, Entry r)
{
    return json{{"p", p.value()},
                {"r", r},
                {"ex", ex(p, r)},
                {"variables", w.result.variables()},
                {"greatest", greatest_in_upsilon_r(p, r).entries()},
                {"witness", w.witness},
                {"witness_monomial", PolyClass::monomial_str(w.witness)},
                {"witness_coefficient", w.witness_coefficient},
                {"witness_is_leading", w.witness_is_leading},
                {"ok", w.ok},
                {"result", to_json(w.result)}};
}

json to_json(const ClaimResult& c)
{
    json j{{"id", c.id}, {"statement", c.statement}, {"anchor", c.anchor}, {"status", c.pass ? "PASS" : "FAIL"}, {"detail", c.detail}};
    j["time_limit_s"] = c.time_limit ? json(*c.time_limit) : json(nullptr);
    return j;
}

json ex_table_json(Prime p, Entry r_max)
{
    json rows = json::array();
    for (Entry r = 0; r <= r_max; ++r) {
        json row{{"r", r}, {"ex", ex(p, r)}};
        if (r > 0)
            row["diff"] = static_cast<long long>(ex(p, r)) - static_cast<long long>(ex(p, r - 1));
        else
            row["diff"] = nullptr;
        rows.push_back(row);
    }
    return json{{"p", p.value()}, {"rows", rows}};
}

json upsilon_json(Prime p, Entry r)
{
    const auto all = enumerate_upsilon_r(p, r);
    const auto g = greatest_in_upsilon_r(p, r);
    json items = json::array();
    for (const auto& j : all)
        items.push_back({{"sequence", j.entries()},
                         {"text", j.str()},
                         {"sum", j.weight()},
                         {"admissible", gamma_inv(j, p).seq().entries()},
                         {"greatest", j == g}});
    return json{{"p", p.value()}, {"r", r}, {"count", all.size()}, {"elements", items}};
}

std::string render_bounds(const BoundReport& r, bool show_superseded)
{
    std::ostringstream out;
    out << "dimension n = " << r.n << "\n\n";
    out << std::setw(6) << "p" << std::setw(10) << "nu_lower" << std::setw(10) << "nu_upper" << std::setw(8)
        << "exact" << "\n";
    for (const auto& b : r.per_prime)
        out << std::setw(6) << b.p << std::setw(10) << b.nu_lower << std::setw(10) << b.nu_upper << std::setw(8)
            << (b.exact ? std::to_string(*b.exact) : "-") << "\n";
    out << "\nk_U  lower " << r.ku_lower << "\n";
    out << "k_U  upper " << r.ku_upper << "\n";
    out << "k_U  exact " << (r.ku_exact ? to_string(*r.ku_exact) : "unknown") << "\n";
    out << "k_SO lower " << r.kso_lower << "\n";
    out << "k_SO upper " << r.kso_upper << "\n";
    out << "k_SO exact ";
    if (r.kso_candidates.empty())
        out << "unknown";
    else if (r.kso_candidates.size() == 1)
        out << r.kso_candidates.front();
    else {
        out << "one of {";
        for (std::size_t i = 0; i < r.kso_candidates.size(); ++i)
            out << (i ? ", " : "") << r.kso_candidates[i];
        out << "}";
    }
    out << "\n";
    if (show_superseded) {
        out << "k_U  superseded upper " << r.ku_superseded << "\n";
        out << "k_SO superseded upper " << r.kso_superseded << "\n";
    }
    return out.str();
}

std::string render_ex_table(Prime p, Entry r_max)
{
    std::ostringstream out;
    out << "p = " << p.value() << "\n" << std::setw(6) << "r" << std::setw(8) << "ex" << std::setw(8) << "diff"
        << "\n";
    for (Entry r = 0; r <= r_max; ++r) {
        out << std::setw(6) << r << std::setw(8) << ex(p, r);
        if (r > 0)
            out << std::setw(8) << static_cast<long long>(ex(p, r)) - static_cast<long long>(ex(p, r - 1));
        out << "\n";
    }
    return out.str();
}

std::string render_upsilon(Prime p, Entry r)
{
    std::ostringstream out;
    const auto g = greatest_in_upsilon_r(p, r);
    out << "Upsilon_" << r << " at p = " << p.value() << " (" << enumerate_upsilon_r(p, r).size()
        << " elements, descending; * marks the greatest)\n";
    for (const auto& j : enumerate_upsilon_r(p, r))
        out << "  " << j.str() << (j == g ? " *" : "") << "    P" << gamma_inv(j, p).seq().str() << "\n";
    return out.str();
}

std::string render_witness(const NontrivialityWitness& w, Prime p, Entry r)
{
    std::ostringstream out;
    out << "chi(P^" << r << ") at p = " << p.value() << " on i1*...*i" << w.result.variables() << " (ex = " << ex(p, r)
        << ")\n";
    out << "status  " << (w.ok ? "ok" : "FAILED") << "\n";
    out << "witness " << PolyClass::monomial_str(w.witness) << " coefficient " << w.witness_coefficient
        << (w.witness_is_leading ? " (leading)" : "") << "\n";
    out << "result  " << w.result.str() << "\n";
    return out.str();
}

std::string render_claim(const ClaimResult& c)
{
    std::ostringstream out;
    out << std::left << std::setw(24) << c.id << (c.pass ? "PASS" : "FAIL") << std::right << std::setw(9)
        << std::fixed << std::setprecision(2) << c.seconds << "s  " << c.anchor << "  " << c.statement;
    if (!c.detail.empty())
        out << " [" << c.detail << "]";
    return out.str();
}

}  // namespace steenrod
