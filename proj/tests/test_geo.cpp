#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <vector>

#include "netload/csv.hpp"
#include "netload/geo.hpp"
#include "netload/rng.hpp"

using namespace netload;

TEST_CASE("regular lattice has zero variation") {
    std::vector<std::pair<double, double>> pts;
    for (int x = 0; x < 10; ++x)
        for (int y = 0; y < 10; ++y) pts.emplace_back(x + 0.5, y + 0.5);
    const GeoSummary s = summarize_geo(pts, 10, false);
    CHECK(s.total == 100);
    CHECK(s.cv == 0.0);
    CHECK(s.uniform_verdict);
}

TEST_CASE("uniform cloud has cv near 1/sqrt(points per cell)") {
    RngStream rng(42);
    std::vector<std::pair<double, double>> pts;
    for (int k = 0; k < 10000; ++k) pts.emplace_back(rng.next_unit(), rng.next_unit());
    const GeoSummary s = summarize_geo(pts, 10, false);
    CHECK(s.cv == doctest::Approx(0.1).epsilon(0.35));
    CHECK(s.uniform_verdict);
    long long counted = 0;
    for (long long c : s.counts) counted += c;
    CHECK(counted == s.total);
}

TEST_CASE("total concentration maxes out the cv") {
    std::vector<std::pair<double, double>> pts(500, {3.0, 4.0});
    const GeoSummary s = summarize_geo(pts, 10, false);
    CHECK(s.cv == doctest::Approx(std::sqrt(99.0)).epsilon(1e-12));
    CHECK_FALSE(s.uniform_verdict);
}

TEST_CASE("lat/lon squeeze keeps verdicts sane") {
    RngStream rng(7);
    std::vector<std::pair<double, double>> pts;
    for (int k = 0; k < 4000; ++k)
        pts.emplace_back(37.0 + rng.next_unit(), -122.0 + rng.next_unit());
    const GeoSummary s = summarize_geo(pts, 8, true);
    CHECK(s.uniform_verdict);
    CHECK(s.total == 4000);
}

TEST_CASE("csv reading") {
    const char* path = "geo_test_rows.csv";
    write_text_file(path, "x,y\n1.5,2.5\n3.0,4.0\n");
    const auto rows = read_pair_csv(path);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].first == 1.5);
    CHECK(rows[1].second == 4.0);

    write_text_file(path, "1,2\nbad,row\n");
    CHECK_THROWS_WITH_AS(read_pair_csv(path), doctest::Contains(":2:"), std::runtime_error);
    std::remove(path);
}
