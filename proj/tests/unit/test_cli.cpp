#include <doctest.h>

#include <cmath>

#include "bkforms/commands.hpp"
#include "bkforms/form_spec.hpp"
#include "bkforms/report.hpp"

using namespace bkforms;

namespace {

const char* kUnitSpec = R"({
  "k": 2,
  "circles": [
    {"id": "Z1", "R": 1.0, "orientation": 1,
     "A": {"order": 16, "coeffs": [{"constant": 1.0, "cos": [], "sin": []}]}}
  ],
  "bulk_integral": 0.0
})";

}  // namespace

TEST_CASE("form specs parse, validate and round-trip") {
    const BkSurfaceForm form = parse_form_spec(kUnitSpec);
    CHECK(form.k == 2);
    REQUIRE(form.collars.size() == 1);
    CHECK(form.collars[0].density.coeff(0) == CircleFunction(1.0));

    const Json emitted = form_to_json(form);
    const BkSurfaceForm again = form_from_json(emitted);
    CHECK(canonical_dump(form_to_json(again)) == canonical_dump(emitted));
}

TEST_CASE("spec validation names the circle") {
    SUBCASE("order below k") {
        const char* bad = R"({"k": 2, "circles": [
            {"id": "Zbad", "R": 1.0, "orientation": 1,
             "A": {"order": 1, "coeffs": [{"constant": 1.0}]}}], "bulk_integral": 0})";
        try {
            parse_form_spec(bad);
            FAIL("expected a validation error");
        } catch (const ValidationError& err) {
            CHECK(std::string(err.what()).find("Zbad") != std::string::npos);
        }
    }
    SUBCASE("frequency above the cap") {
        const char* bad = R"({"k": 1, "circles": [
            {"id": "Zhot", "R": 1.0, "orientation": 1,
             "A": {"order": 2, "coeffs": [{"constant": 1.0, "cos": [[65, 1.0]]}]}}]})";
        CHECK_THROWS_AS(parse_form_spec(bad), ValidationError);
    }
    SUBCASE("broken JSON mentions the position") {
        CHECK_THROWS_AS(parse_form_spec("{\"k\": "), ValidationError);
    }
}

TEST_CASE("decompose report on the unit fixture") {
    const Json report = cmd_decompose(parse_form_spec(kUnitSpec));
    CHECK(report["command"] == "decompose");
    const auto& integrals = report["residue_integrals"][0]["integrals"];
    CHECK(integrals[0].get<double>() == 0.0);
    CHECK(integrals[1].get<double>() == 1.0);
    CHECK(report["iota_L"][0]["density"]["constant"].get<double>() == 1.0);
}

TEST_CASE("decompose on an empty-circle spec") {
    const Json report = cmd_decompose(parse_form_spec(R"({"k": 3, "bulk_integral": 1.25})"));
    CHECK(report["normal_form"]["circles"].empty());
    const Json volume = cmd_volume(parse_form_spec(R"({"k": 3, "bulk_integral": 1.25})"));
    CHECK(volume["liouville_volume"].get<double>() == 1.25);
}

TEST_CASE("volume report on the unit fixture") {
    const Json report = cmd_volume(parse_form_spec(kUnitSpec));
    CHECK(report["volume_polynomial"]["coefficients"][0].get<double>() == -2.0);
    CHECK(report["volume_polynomial"]["coefficients"][1].get<double>() == 2.0);
    CHECK(report["liouville_volume"].get<double>() == -2.0);
    CHECK(report["volume_polynomial"]["rendered"].get<std::string>() == "P(t) = -2 + 2 t");
    for (const auto& gap : report["asymptotic_gaps"]) CHECK(gap[1].get<double>() == 0.0);
}

TEST_CASE("classify command maps verdicts to exit codes") {
    const BkSurfaceForm unit = parse_form_spec(kUnitSpec);
    SUBCASE("identical specs: exit 0") {
        const auto outcome = cmd_classify(unit, unit, "symplecto", 1e-8);
        CHECK(outcome.exit_code == 0);
        CHECK(outcome.report["verdict"] == "equivalent");
    }
    SUBCASE("halved residues: symplecto exit 1, poisson exit 0") {
        BkSurfaceForm half(2, {CollarPiece("Z1", 0.5, 2, 1,
                                           CollarSeries(16, {CircleFunction(0.5)}))}, 0.0);
        CHECK(cmd_classify(unit, half, "symplecto", 1e-8).exit_code == 1);
        CHECK(cmd_classify(unit, half, "poisson", 1e-8).exit_code == 0);
    }
    SUBCASE("sign flip: exit 2") {
        BkSurfaceForm negative(2, {CollarPiece("Z1", 1.0, 2, 1,
                                               CollarSeries(16, {CircleFunction(-1.0)}))}, 0.0);
        CHECK(cmd_classify(unit, negative, "symplecto", 1e-8).exit_code == 2);
    }
    SUBCASE("positivity violation raises") {
        BkSurfaceForm negative(2, {CollarPiece("Z1", 1.0, 2, 1,
                                               CollarSeries(16, {CircleFunction(-1.0)}))}, 0.0);
        CHECK_THROWS_AS(cmd_classify(unit, negative, "poisson", 1e-8), NotPositivelyOriented);
    }
    SUBCASE("unknown mode") {
        CHECK_THROWS_AS(cmd_classify(unit, unit, "nonsense", 1e-8), ValidationError);
    }
}

TEST_CASE("normalize command") {
    const Json report = cmd_normalize({0.0, 1.0, 1.0}, 16);
    const auto& coeffs = report["polynomial"]["coefficients"];
    REQUIRE(coeffs.size() == 3);
    CHECK(coeffs[0].get<double>() == 0.0);
    CHECK(coeffs[1].get<double>() == 1.0);
    CHECK(coeffs[2].get<double>() == 1.0);
    CHECK(report["polynomial"]["rendered"].get<std::string>() == "P(y) = y + y^2");
    CHECK(report["expansion"]["residue"].get<double>() == doctest::Approx(0.0));

    CHECK(cmd_normalize({3.0, 1.0}, 16)["polynomial"]["coefficients"][1].get<double>() == 1.0);
    CHECK(cmd_normalize({5.0}, 16)["polynomial"]["rendered"].get<std::string>() == "P(y) = y");
    CHECK_THROWS_AS(cmd_normalize({1.0, -1.0}, 16), ValidationError);
}

TEST_CASE("reports re-emit byte-identically") {
    const BkSurfaceForm unit = parse_form_spec(kUnitSpec);
    for (const Json& report :
         {cmd_volume(unit), cmd_decompose(unit), cmd_normalize({0.5, 0.25, 1.5}, 12),
          cmd_classify(unit, unit, "symplecto", 1e-8).report}) {
        const std::string once = canonical_dump(report);
        const std::string twice = canonical_dump(parse_json(once));
        CHECK(once == twice);
    }
}

TEST_CASE("seventeen-digit floats survive the round trip") {
    Json doc;
    doc["x"] = 0.1;
    doc["y"] = -2.0;
    doc["z"] = 1.0 / 3.0;
    const std::string once = canonical_dump(doc);
    CHECK(once.find("0.10000000000000001") != std::string::npos);
    CHECK(canonical_dump(parse_json(once)) == once);
}

TEST_CASE("text rendering mentions the key quantities") {
    const BkSurfaceForm unit = parse_form_spec(kUnitSpec);
    const std::string text = render_text(cmd_volume(unit));
    CHECK(text.find("P(t) = -2 + 2 t") != std::string::npos);
    CHECK(text.find("Liouville volume: -2") != std::string::npos);
    const std::string decomposed = render_text(cmd_decompose(unit));
    CHECK(decomposed.find("alpha_{-2} = 1") != std::string::npos);
}
