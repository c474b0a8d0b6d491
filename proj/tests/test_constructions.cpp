#include <catch2/catch_amalgamated.hpp>

#include "curvesys/bounds.hpp"
#include "curvesys/constructions.hpp"

using namespace curvesys;

namespace {

// All applicable closed-system checks in one go.
bool closed_checks_pass(const CurveSystem& sys) {
    return verify_k_system(sys).ok() && verify_homology_consistency(sys).ok() &&
           verify_class_budget(sys).ok() && check_degree_bounds(sys).ok();
}

}  // namespace

TEST_CASE("polygon systems") {
    auto p1 = polygon_system(1);
    REQUIRE(p1.size() == 3);
    auto fam = gf2::canonical_family(1);
    for (int i = 0; i < 3; ++i) CHECK(*p1.curves[i].homology == fam[i]);
    CHECK(p1.count_between(0, 1) == 1);

    auto p2 = polygon_system(2);
    CHECK(p2.size() == 5);
    CHECK(p2.intersections().size() == 10);  // C(5,2) unit intersections
    for (const auto& e : p2.intersections()) CHECK(e.count == 1);

    for (int g = 1; g <= 20; ++g) {
        auto p = polygon_system(g);
        CHECK(p.size() == static_cast<std::size_t>(2 * g + 1));
        CHECK(verify_homology_consistency(p).ok());
    }
    CHECK(closed_checks_pass(polygon_system(6)));
    CHECK_THROWS_AS(polygon_system(0), std::invalid_argument);
}

TEST_CASE("boundary systems") {
    auto b20 = boundary_system(2, 0);
    CHECK(b20.size() == 5);
    CHECK(b20.boundary == 0);
    // identical matrix to the polygon system
    auto p2 = polygon_system(2);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            CHECK(b20.count_between(i, j) == p2.count_between(i, j));

    auto b23 = boundary_system(2, 3);
    CHECK(b23.size() == 20);  // (2g+1)(n+1)
    CHECK(b23.boundary == 3);
    CHECK(verify_k_system(b23).ok());
    for (const auto& c : b23.curves) CHECK_FALSE(c.homology.has_value());

    auto b14 = boundary_system(1, 4);
    CHECK(b14.size() == 12);  // 3n
    CHECK(verify_k_system(b14).ok());

    CHECK_THROWS_AS(boundary_system(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(boundary_system(0, 2), std::invalid_argument);
}

TEST_CASE("boundary size formula across the grid") {
    for (int g = 1; g <= 10; ++g) {
        for (int n = (g == 1 ? 1 : 0); n <= 10; ++n) {
            auto sys = boundary_system(g, n);
            std::size_t expect = g == 1 ? static_cast<std::size_t>(3 * n)
                                        : static_cast<std::size_t>((2 * g + 1) * (n + 1));
            CHECK(sys.size() == expect);
        }
    }
    // spot extremes of the claimed range
    CHECK(boundary_system(50, 0).size() == 101);
    CHECK(boundary_system(1, 50).size() == 150);
    CHECK(boundary_system(12, 50).size() == static_cast<std::size_t>(25 * 51));
}

TEST_CASE("duplication structure: the special family Y") {
    auto sys = boundary_system(2, 2);
    // generation 0 curves are the first 5; they pairwise intersect
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) CHECK(sys.count_between(i, j) == 1);
    // duplicates of the same base never meet; across bases they meet once
    for (std::size_t i = 0; i < sys.size(); ++i) {
        std::size_t base_i = i % 5;
        for (std::size_t j = i + 1; j < sys.size(); ++j) {
            std::size_t base_j = j % 5;
            CHECK(sys.count_between(i, j) == (base_i == base_j ? 0u : 1u));
        }
    }
    // no curve outside Y intersects all of Y (it misses its own base)
    for (std::size_t i = 5; i < sys.size(); ++i) {
        bool misses = false;
        for (std::size_t y = 0; y < 5; ++y)
            if (sys.count_between(i, y) == 0) misses = true;
        CHECK(misses);
    }
}

TEST_CASE("closed lower systems") {
    auto c4 = closed_lower_system(4);
    CHECK(c4.size() == 27);  // (5)(5) + 2, m = n = 2
    CHECK(closed_checks_pass(c4));
    CHECK(BigInt(c4.size()) >= bounds(4, 0, 1).lower);
    CHECK(BigInt(c4.size()) <= bounds(4, 0, 1).upper);

    auto c5 = closed_lower_system(5);
    CHECK(c5.size() == 38);  // (5)(7) + 3, m = 2, n = 3

    for (int g = 4; g <= 12; ++g) {
        auto sys = closed_lower_system(g);
        int m = g % 2 == 0 ? g / 2 : (g - 1) / 2;
        int n = g - m;
        CHECK(sys.size() == static_cast<std::size_t>((2 * m + 1) * (2 * n + 1) + n));
        CHECK(2 * sys.size() >= static_cast<std::size_t>(2 * g * g + 5 * g));  // >= g^2 + 5g/2
        CHECK(verify_homology_consistency(sys).ok());
        CHECK(verify_class_budget(sys).ok());
    }
    CHECK_THROWS_AS(closed_lower_system(3), std::invalid_argument);
}

TEST_CASE("closed lower system homology details") {
    auto sys = closed_lower_system(4);  // m = 2, n = 2
    // meridians are disjoint from everything and carry the a_{m+j} classes
    std::size_t meridians = 0;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        if (sys.curves[i].id[0] != 'h') continue;
        ++meridians;
        for (std::size_t j = 0; j < sys.size(); ++j) CHECK(sys.count_between(i, j) == 0);
        CHECK_FALSE(sys.curves[i].homology->is_zero());
    }
    CHECK(meridians == 2);

    // every class nonzero, used at most twice, same-class curves disjoint
    std::map<gf2::Vector, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        CHECK_FALSE(sys.curves[i].homology->is_zero());
        by_class[*sys.curves[i].homology].push_back(i);
    }
    for (const auto& [cls, members] : by_class) {
        CHECK(members.size() <= 2);
        if (members.size() == 2) CHECK(sys.count_between(members[0], members[1]) == 0);
    }
}

TEST_CASE("closed lower size dominates g^2 + 5g/2 up to g = 100") {
    // pure arithmetic on the size formula, ceilinged comparison
    for (long long g = 4; g <= 100; ++g) {
        long long m = g % 2 == 0 ? g / 2 : (g - 1) / 2;
        long long n = g - m;
        long long size = (2 * m + 1) * (2 * n + 1) + n;
        CHECK(2 * size >= 2 * g * g + 5 * g);
    }
}

TEST_CASE("size formulas at the corners of the claimed range") {
    CHECK(polygon_system(50).size() == 101);
    CHECK(closed_lower_system(50).size() == static_cast<std::size_t>(51 * 51 + 25));
    CHECK(hyperelliptic_system(50).size() == 300);
    auto big = boundary_system(50, 50);
    CHECK(big.size() == static_cast<std::size_t>(101 * 51));
    CHECK(verify_k_system(big).ok());
}

TEST_CASE("hyperelliptic systems") {
    auto h2 = hyperelliptic_system(2);
    CHECK(h2.size() == 12);  // = N(1,2)
    CHECK(closed_checks_pass(h2));

    auto h3 = hyperelliptic_system(3);
    CHECK(h3.size() == 18);  // the 6g lower bound at g = 3
    CHECK(closed_checks_pass(h3));

    for (int g = 2; g <= 10; ++g) {
        auto sys = hyperelliptic_system(g);
        CHECK(sys.size() == static_cast<std::size_t>(6 * g));
        CHECK(verify_homology_consistency(sys).ok());
        CHECK(verify_class_budget(sys).ok());
        CHECK(BigInt(sys.size()) <= bounds(g, 0, 1).upper);
    }

    // weaker than the handle construction from genus 4 on
    CHECK(hyperelliptic_system(4).size() == 24);
    CHECK(closed_lower_system(4).size() == 27);
    CHECK_THROWS_AS(hyperelliptic_system(1), std::invalid_argument);
}

TEST_CASE("generated closed systems respect the global upper bound") {
    for (int g = 1; g <= 12; ++g) {
        auto p = polygon_system(g);
        CHECK(BigInt(p.size()) <= bounds(g, 0, 1).upper);
    }
    for (int g = 4; g <= 10; ++g)
        CHECK(BigInt(closed_lower_system(g).size()) <= bounds(g, 0, 1).upper);
}

TEST_CASE("intersection matrices are 0/1 with zero diagonal") {
    for (const CurveSystem& sys :
         {polygon_system(3), boundary_system(2, 2), closed_lower_system(4),
          hyperelliptic_system(3)}) {
        for (const auto& e : sys.intersections()) {
            CHECK(e.i < e.j);
            CHECK(e.count == 1);
        }
    }
}
