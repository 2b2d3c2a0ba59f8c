#include <doctest.h>

#include "combex/no_three_in_line.hpp"

using namespace combex;

TEST_SUITE_BEGIN("no-three");

TEST_CASE("collinearity verifier") {
    CHECK_FALSE(verify_no3({{{1, 1}, {2, 2}, {3, 3}}}).ok);
    CHECK(verify_no3({{{1, 1}, {2, 3}, {3, 2}}}).ok);
    CHECK(verify_no3({{}}).ok);
    // slanted line 2x + y
    CHECK_FALSE(verify_no3({{{1, 1}, {2, 3}, {3, 5}, {1, 2}}}).ok);
}

TEST_CASE("primality guard") {
    CHECK(is_prime(2));
    CHECK(is_prime(101));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS(modular_parabola(4));
}

TEST_CASE("modular parabola at 5") {
    PointSet s = modular_parabola(5);
    // 0-based values (0,0),(1,1),(2,4),(3,4),(4,1) shifted by one
    std::vector<GridPoint> expect = {{1, 1}, {2, 2}, {3, 5}, {4, 5}, {5, 2}};
    CHECK(s.points == expect);
    CHECK(verify_no3(s).ok);
}

TEST_CASE("modular parabola has p points and no three in line, p <= 101") {
    for (long long p = 2; p <= 101; ++p) {
        if (!is_prime(p)) continue;
        PointSet s = modular_parabola(p);
        CHECK((long long)s.points.size() == p);
        CHECK(verify_no3(s).ok);
    }
}

TEST_CASE("row and column bound: at most 2 per line of the grid") {
    PointSet s = greedy_extend({}, 12, ScanOrder::RowMajor);
    REQUIRE(verify_no3(s).ok);
    std::vector<int> row(13, 0), col(13, 0);
    for (auto& [x, y] : s.points) {
        ++col[x];
        ++row[y];
    }
    for (int i = 1; i <= 12; ++i) {
        CHECK(row[i] <= 2);
        CHECK(col[i] <= 2);
    }
    CHECK((long long)s.points.size() <= 2 * 12);
}

TEST_CASE("greedy on the 2x2 grid takes all four points") {
    PointSet s = greedy_extend({}, 2, ScanOrder::RowMajor);
    CHECK(s.points.size() == 4);
    CHECK(verify_no3(s).ok);
}

TEST_CASE("greedy results are maximal") {
    for (auto order : {ScanOrder::RowMajor, ScanOrder::Spiral}) {
        PointSet s = greedy_extend({}, 6, order);
        CHECK(verify_no3(s).ok);
        CHECK((long long)s.points.size() <= 12);
        // adding any missing grid point creates a collinear triple
        for (long long x = 1; x <= 6; ++x)
            for (long long y = 1; y <= 6; ++y) {
                GridPoint cand{x, y};
                if (std::find(s.points.begin(), s.points.end(), cand) != s.points.end()) continue;
                PointSet ext = s;
                ext.points.push_back(cand);
                CHECK_FALSE(verify_no3(ext).ok);
            }
    }
}

TEST_CASE("random scan order is seed-reproducible") {
    PointSet a = greedy_extend({}, 8, ScanOrder::Random, 7);
    PointSet b = greedy_extend({}, 8, ScanOrder::Random, 7);
    PointSet c = greedy_extend({}, 8, ScanOrder::Random, 8);
    CHECK(a.points == b.points);
    CHECK(verify_no3(c).ok);
}

TEST_CASE("density profile") {
    PointSet s = modular_parabola(7);
    auto prof = line_density_profile(s, 7);
    CHECK(prof.back().second == Rational(1));  // 7 points in [7]^2
    auto zero = line_density_profile({}, 5);
    for (auto& [n, d] : zero) CHECK(d == Rational(0));
}

TEST_CASE("csv round trip") {
    PointSet s = modular_parabola(5);
    PointSet back = points_from_csv(points_to_csv(s));
    CHECK(back.points == s.points);
}

TEST_CASE("certificates verify; tampering fails") {
    VerifierRegistry reg;
    register_no_three_verifiers(reg);

    Certificate par = make_parabola_certificate(13);
    CHECK(reg.verify(par).ok);
    Certificate bad = par;
    bad.witness["points"][0] = {1, 2};
    CHECK_FALSE(reg.verify(bad).ok);

    PointSet g = greedy_extend({}, 9, ScanOrder::RowMajor);
    Certificate gc = make_greedy_certificate(g, 9, ScanOrder::RowMajor, 0);
    CHECK(reg.verify(gc).ok);
    Certificate gbad = gc;
    auto pts = gbad.witness["points"];
    pts.erase(pts.begin());  // drop a point: no longer maximal
    gbad.witness["points"] = pts;
    gbad.value = std::to_string(pts.size());
    CHECK_FALSE(reg.verify(gbad).ok);
}

TEST_SUITE_END();
