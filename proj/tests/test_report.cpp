#include <catch2/catch_amalgamated.hpp>

#include "fortress/corpus.hpp"
#include "fortress/families.hpp"
#include "fortress/report.hpp"

using fortress::FamilySpec;
using fortress::generate;
using fortress::Graph;
using fortress::ordered_json;

TEST_CASE("report carries the documented keys in order") {
    ordered_json doc = fortress::build_report(generate(FamilySpec::path(4)));
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    REQUIRE(keys == std::vector<std::string>{"graph", "n", "m", "z_number", "f_number",
                                             "minimal_forts", "fort_sizes", "well_failed",
                                             "well_forced", "irrelevant", "star_centers",
                                             "tree_shape"});
}

TEST_CASE("report values on a small path") {
    ordered_json doc = fortress::build_report(generate(FamilySpec::path(4)));
    REQUIRE(doc["n"] == 4);
    REQUIRE(doc["m"] == 3);
    REQUIRE(doc["z_number"] == 1);
    REQUIRE(doc["f_number"] == 1);
    REQUIRE(doc["minimal_forts"] ==
            ordered_json::array({{0, 1, 3}, {0, 2, 3}}));
    REQUIRE(doc["fort_sizes"] == ordered_json::array({3}));
    REQUIRE(doc["well_failed"] == true);
    REQUIRE(doc["well_forced"] == false);
    REQUIRE(doc["irrelevant"]["fort"] == ordered_json::array());
    REQUIRE(doc["irrelevant"]["failed_zero_forcing"] == ordered_json::array({0, 3}));
    REQUIRE(doc["tree_shape"]["tag"] == "path");
}

TEST_CASE("report on the petersen graph") {
    ordered_json doc = fortress::build_report(generate(FamilySpec::petersen()));
    REQUIRE(doc["z_number"] == 5);
    REQUIRE(doc["f_number"] == 6);
    REQUIRE(doc["fort_sizes"] == ordered_json::array({4}));
    REQUIRE(doc["well_failed"] == true);
    REQUIRE(doc["tree_shape"].is_null());
    REQUIRE(doc["star_centers"]["layers"] == ordered_json::array());
}

TEST_CASE("report output is byte-stable") {
    Graph g = generate(FamilySpec::star222());
    REQUIRE(fortress::build_report(g).dump(2) == fortress::build_report(g).dump(2));
}

TEST_CASE("oversized trees keep structure and lose enumeration") {
    ordered_json doc = fortress::build_report(generate(FamilySpec::path(40)));
    REQUIRE(doc["z_number"].is_null());
    REQUIRE(doc["f_number"].is_null());
    REQUIRE(doc["minimal_forts"].is_null());
    REQUIRE(doc["fort_sizes"].is_null());
    REQUIRE(doc["well_failed"] == false);
    REQUIRE(doc["well_forced"] == false);
    REQUIRE(doc["irrelevant"]["fort"] == ordered_json::array());
    REQUIRE(doc["irrelevant"]["failed_zero_forcing"] == ordered_json::array({0, 39}));
    REQUIRE(doc["tree_shape"]["tag"] == "path");
}

TEST_CASE("oversized non-trees are refused") {
    REQUIRE_THROWS_AS(fortress::build_report(generate(FamilySpec::cycle(30))),
                      fortress::GuardExceeded);
}

TEST_CASE("two-round sample tree report shows the layers") {
    ordered_json doc = fortress::build_report(fortress::sample_star_removal_tree());
    REQUIRE(doc["star_centers"]["layers"].size() == 2);
    REQUIRE(doc["star_centers"]["layers"][0]["centers"] ==
            ordered_json::array({2, 8, 15}));
    REQUIRE(doc["star_centers"]["layers"][1]["centers"] ==
            ordered_json::array({4, 13}));
    REQUIRE(doc["star_centers"]["final_residual"] == ordered_json::array({5, 6}));
    REQUIRE(doc["well_forced"] == true);
    REQUIRE(doc["well_failed"] == false);
}

TEST_CASE("text rendering carries the same verdicts") {
    ordered_json doc = fortress::build_report(generate(FamilySpec::path(5)));
    std::string text = fortress::render_text(doc);
    REQUIRE(text.find("well_failed: false") != std::string::npos);
    REQUIRE(text.find("z_number: 1") != std::string::npos);
    REQUIRE(text.find("tree_shape: path") != std::string::npos);
}
