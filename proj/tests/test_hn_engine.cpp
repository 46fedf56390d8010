#include "doctest.h"

#include <random>

#include "ngon/hn_engine.hpp"
#include "ngon/oracle.hpp"

using namespace ngon;

TEST_CASE("slices") {
    auto one = hn_of_object(SheafObject(Band(2, 1, {0, 0})));
    CHECK(one.slices.size() == 1);

    SheafObject mixed(2, {Band(2, 1, {0, 0}), Torsion(2, SmoothPoint{}, 1)});
    auto h = hn_of_object(mixed);
    REQUIRE(h.slices.size() == 2);
    CHECK(h.slices[0].phase == phase_of_charge({-1, 0}));
    CHECK(h.slices[0].members == std::vector<std::size_t>{1});
    CHECK(h.slices[1].phase == phase_of_charge({0, 1}));

    SheafObject same(2, {Band(2, 1, {0, 0}, Label::symbol("a")), Band(2, 1, {0, 0}, Label::symbol("b"))});
    auto hs = hn_of_object(same);
    REQUIRE(hs.slices.size() == 1);
    CHECK(hs.slices[0].members.size() == 2);
    CHECK(hs.slices[0].total_charge == ChargeVec{0, 4});

    CHECK_THROWS_AS(hn_of_object(SheafObject(Chain(2, 2, 0, {1, -1}))), DomainError);
}

TEST_CASE("polygon") {
    CHECK(hn_polygon({}).vertices == std::vector<ChargeVec>{{0, 0}});
    CHECK(hn_polygon({{0, 1}}).vertices == std::vector<ChargeVec>{{0, 0}, {0, 1}});
    std::vector<ChargeVec> expected{{0, 0}, {-1, 0}, {-1, 1}};
    CHECK(hn_polygon({{-1, 0}, {0, 1}}).vertices == expected);
    CHECK(hn_polygon({{0, 1}, {-1, 0}}).vertices == expected);
    CHECK(oracle::hull_brute({{0, 1}, {-1, 0}}).vertices == expected);
    CHECK_THROWS_AS(hn_polygon({{1, 0}}), DomainError);
}

TEST_CASE("slice windows") {
    SheafObject line(Band(2, 1, {0, 0}));
    SheafObject point(Torsion(2, SmoothPoint{}, 1));
    PhasePoint zero = PhasePoint::zero(), one = phase_of_charge({-1, 0}), half = phase_of_charge({0, 1});
    CHECK(slice_membership(line, zero, one));
    CHECK(slice_membership(point, zero, one));
    CHECK_FALSE(slice_membership(point, zero, half));
    CHECK(slice_membership(line, phase_of_charge({1, 1}), phase_of_charge({-1, 1})));
}

TEST_CASE("polygon is idempotent and matches slices") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<Int> u(-6, 6), v(0, 6);
    for (int i = 0; i < 500; ++i) {
        std::vector<ChargeVec> cs;
        std::size_t k = rng() % 7;
        while (cs.size() < k) {
            ChargeVec c{u(rng), v(rng)};
            if (c.in_upper()) cs.push_back(c);
        }
        auto poly = hn_polygon(cs);
        std::vector<ChargeVec> edges;
        for (std::size_t j = 1; j < poly.vertices.size(); ++j)
            edges.push_back({poly.vertices[j].re - poly.vertices[j - 1].re, poly.vertices[j].im - poly.vertices[j - 1].im});
        CHECK(hn_polygon(edges).vertices == poly.vertices);
        for (std::size_t j = 1; j < edges.size(); ++j) CHECK(phase_of_charge(edges[j - 1]) > phase_of_charge(edges[j]));
    }
}
