#include "doctest.h"

#include "steenrod/report.hpp"

using namespace steenrod;
using nlohmann::json;

TEST_CASE("output documents round trip")
{
    OutputDocument doc;
    doc.command = "bounds";
    doc.parameters = {{"n", 24}};
    doc.result = to_json(bound_report(24), true);
    CHECK(parse_document(serialize(doc)) == doc);

    doc.elapsed_ms = 1.5;
    CHECK(parse_document(serialize(doc)) == doc);

    doc.command = "chi";
    doc.elapsed_ms.reset();
    doc.result = to_json(chi_pr(Prime(3), 5));
    CHECK(parse_document(serialize(doc)) == doc);
}

TEST_CASE("serialized keys are sorted and carry the schema")
{
    OutputDocument doc;
    doc.command = "ex";
    doc.result = ex_table_json(Prime(2), 4);
    const std::string text = serialize(doc);
    CHECK(text.find("\"command\"") < text.find("\"engine_version\""));
    CHECK(text.find("\"parameters\"") < text.find("\"result\""));
    CHECK(text.find("\"result\"") < text.find("\"schema\""));
    CHECK(text.find("elapsed_ms") == std::string::npos);
    CHECK(json::parse(text)["schema"] == kSchemaVersion);
}

TEST_CASE("malformed documents are rejected")
{
    CHECK_THROWS_AS(parse_document("{\"schema\": 2}"), std::runtime_error);
    CHECK_THROWS_AS(parse_document("{\"schema\": 1, \"command\": \"x\"}"), std::runtime_error);
    CHECK_THROWS(parse_document("not json"));
}

TEST_CASE("bounds JSON fields")
{
    const json b11 = to_json(bound_report(11), false);
    CHECK(b11["ku_exact"] == "120");
    CHECK(b11["kso_exact"] == "15");
    CHECK(b11["ku_lower"] == "120");
    CHECK(b11["ku_upper"] == "720");
    CHECK_FALSE(b11.contains("ku_superseded"));

    const json b24 = to_json(bound_report(24), true);
    CHECK(b24["ku_exact"].is_null());
    CHECK(b24["kso_exact"]["candidates"] == json::array({"155925", "467775"}));
    CHECK(b24.contains("kso_superseded"));

    const json b40 = to_json(bound_report(40), false);
    CHECK(b40["kso_exact"].is_null());
}

TEST_CASE("ex table rows")
{
    const json t = ex_table_json(Prime(2), 3);
    REQUIRE(t["rows"].size() == 4);
    CHECK(t["rows"][0]["ex"] == 0);
    CHECK(t["rows"][0]["diff"].is_null());
    CHECK(t["rows"][1]["ex"] == 2);
    CHECK(t["rows"][2]["ex"] == 4);
    CHECK(t["rows"][3]["ex"] == 2);
    CHECK(t["rows"][3]["diff"] == -2);
}

TEST_CASE("claim lines")
{
    ClaimResult c{"kso-table", "table matches", "bounds::kso_table", true, "", 0.25, 1.0};
    CHECK(render_claim(c).find("PASS") != std::string::npos);
    CHECK(render_claim(c).find("bounds::kso_table") != std::string::npos);
    CHECK(to_json(c)["status"] == "PASS");
}
