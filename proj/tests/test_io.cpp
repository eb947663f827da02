#include <doctest.h>

#include <filesystem>
#include <stdexcept>

#include "borelres/builders.hpp"
#include "borelres/io.hpp"
#include "helpers.hpp"

using namespace borelres;

namespace {

void check_rejected(const Json& j, const std::string& fragment)
{
    CAPTURE(fragment);
    try {
        complex_from_json(j);
        FAIL("accepted");
    }
    catch (const std::invalid_argument& e) {
        const std::string what = e.what();
        CHECK(what.find("complex import") != std::string::npos);
        CHECK_MESSAGE(what.find(fragment) != std::string::npos, what);
    }
}

}  // namespace

TEST_CASE("P_1(a,b) export")
{
    auto j = complex_to_json(build_P(2, VarRange(1, 2), 1));
    CHECK(j["vars"] == 2);
    CHECK(j["vertices"].size() == 2);
    CHECK(j["vertices"][0]["label"] == "x1");
    CHECK(j["vertices"][1]["label"] == "x2");
    REQUIRE(j["cells"].size() == 3);
    CHECK(j["cells"][2]["dim"] == 1);
    CHECK(j["cells"][2]["label"] == "x1*x2");
    CHECK(j["cells"][2]["facets"].size() == 2);
}

TEST_CASE("P_2(a,b,c) export ordering")
{
    auto j = complex_to_json(build_P(3, VarRange(1, 3), 2));
    CHECK(j["cells"].size() == 17);
    CHECK(j["vertices"][0]["label"] == "x1^2");
    CHECK(j["vertices"][5]["label"] == "x3^2");
    for (std::size_t i = 1; i < j["cells"].size(); ++i) {
        const auto& a = j["cells"][i - 1];
        const auto& b = j["cells"][i];
        CHECK(std::make_pair(a["dim"].get<int>(), a["vertices"].get<std::vector<std::size_t>>()) <
              std::make_pair(b["dim"].get<int>(), b["vertices"].get<std::vector<std::size_t>>()));
    }
}

TEST_CASE("round trip keeps cells and signs")
{
    for (auto x : {build_P(3, VarRange(1, 3), 2), build_P(4, VarRange(1, 4), 2),
                   build_Q_principal(M("bd^2", 4)), build_Q_principal(M("b^5c", 3))}) {
        const std::string text = export_json(x);
        auto back = import_json(text);
        CHECK(back == x);
        CHECK(back.has_incidence());
        CHECK(export_json(back) == text);
    }
}

TEST_CASE("unsigned export imports without incidence")
{
    auto j = complex_to_json(build_P(3, VarRange(1, 3), 2));
    for (auto& c : j["cells"])
        for (auto& f : c["facets"])
            f[1] = 0;
    auto x = complex_from_json(j);
    CHECK_FALSE(x.has_incidence());
    CHECK(x.same_cells(build_P(3, VarRange(1, 3), 2)));
}

TEST_CASE("import rejections")
{
    const Json good = complex_to_json(build_P(3, VarRange(1, 3), 2));

    Json j = good;
    j["vertices"][1]["label"] = j["vertices"][0]["label"];
    check_rejected(j, "duplicate vertex label");

    j = good;
    j["cells"][10]["facets"][0][0] = 999;
    check_rejected(j, "dangling facet");

    j = good;
    j["cells"][6]["facets"][0][0] = 16;
    check_rejected(j, "dangling facet");

    j = good;
    j["cells"][10]["label"] = "x1^5";
    check_rejected(j, "label is not the lcm");

    j = good;
    j["cells"][10]["facets"][0][1] = 2;
    check_rejected(j, "facet sign");

    j = good;
    j.erase("cells");
    check_rejected(j, "missing field 'cells'");

    j = good;
    j["cells"][7]["id"] = j["cells"][6]["id"];
    check_rejected(j, "duplicate cell id");

    j = good;
    j["cells"][6]["vertices"].push_back(5);
    check_rejected(j, "");

    CHECK_THROWS_AS(import_json("{not json"), std::invalid_argument);
}

TEST_CASE("diamond failure is rejected")
{
    // A 2-cell with only two edges over a triangle's vertex set.
    Json j = complex_to_json(simplex(Ms("a, b, c", 3)));
    auto& cells = j["cells"];
    REQUIRE(cells.back()["dim"] == 2);
    cells.back()["facets"].erase(cells.back()["facets"].size() - 1);
    CHECK_THROWS_AS(complex_from_json(j), std::invalid_argument);
}

TEST_CASE("files")
{
    const auto path = std::filesystem::temp_directory_path() / "borelres_io_test.json";
    const std::string text = export_json(build_P(2, VarRange(1, 2), 2));
    write_text_file(path, text);
    CHECK(read_text_file(path) == text);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_text_file(path), std::invalid_argument);
}

TEST_CASE("ideal specs")
{
    auto a = parse_ideal_spec("borel: bc", 3);
    CHECK(a.kind == IdealSpec::Kind::Borel);
    CHECK(a.gens == Ms("bc", 3));
    auto b = parse_ideal_spec("  mono: a^2, bc", 3);
    CHECK(b.kind == IdealSpec::Kind::Mono);
    CHECK(b.gens.size() == 2);
    auto c = parse_ideal_spec("x1*x3^3, x2^2*x3*x4", 4);
    CHECK(c.kind == IdealSpec::Kind::Borel);
    CHECK(c.gens == Ms("x1x3^3, x2^2x3x4", 4));
    CHECK_THROWS_AS(parse_ideal_spec("borel:", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_ideal_spec("borel: x5", 3), std::invalid_argument);
}
