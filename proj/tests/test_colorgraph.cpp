#include "monocomp/blowup.hpp"
#include "monocomp/colorgraph.hpp"
#include "monocomp/errors.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace monocomp;

TEST_CASE("a one-colored complete graph is a single component") {
    Hypergraph host;
    host.n = 5;
    host.edges = {{0, 1, 2, 3, 4}};
    host.colors = {0};
    const ColoredGraph g = uniform_blowup(host, 5);
    const ComponentReport rep = analyze(g);
    CHECK(rep.per_color.size() == 1);
    CHECK(rep.per_color[0] == std::vector<long long>{5});
    CHECK(rep.min_degree == 4);
    CHECK(rep.max_component == 5);
}

TEST_CASE("extremal coloring: blow-up of the full order-2 plane on 8 vertices") {
    const ColoredGraph g = uniform_blowup(to_hypergraph(affine_plane(2)), 8);
    const ComponentReport rep = analyze(g);
    CHECK(rep.r == 3);
    CHECK(rep.min_degree == 7); // complete: every pair of points shares a line
    for (const auto& orders : rep.per_color)
        CHECK(orders == std::vector<long long>{4, 4}); // every component is n/2
    CHECK(rep.max_component == 4);
}

TEST_CASE("exhaustive mc oracle on small complete graphs") {
    CHECK(mc_oracle(complete_graph(3), 2) == 3);
    CHECK(mc_oracle(complete_graph(4), 2) == 4);
    CHECK(mc_oracle(complete_graph(5), 2) == 5);
    CHECK(mc_oracle(complete_graph(4), 3) == 2);
    CHECK(mc_oracle(complete_graph(4), 1) == 4);
    CHECK(mc_oracle(complete_graph(3), 4) == 2); // any edge is a component of order 2
}

TEST_CASE("mc oracle cap") {
    CHECK_THROWS_AS(mc_oracle(complete_graph(5), 3, /*cap=*/100), TooLargeError);
    // an edgeless graph has no monochromatic components at all
    SimpleGraph empty;
    empty.n = 4;
    CHECK(mc_oracle(empty, 2) == 0);
}

TEST_CASE("bounds at r=7, n=35: the window [6, 7]") {
    const BoundsReport rep = known_bounds(7, 35);
    CHECK(rep.q == 5);
    CHECK(rep.gyarfas_lower == Rational(35, 6));
    CHECK(rep.furedi_lower == Rational(6));
    CHECK(rep.furedi_upper == 7);
    CHECK(rep.furedi_applicable);
    CHECK(rep.plane_status == "known_nonexistent");
    CHECK_FALSE(rep.rbibd_upper.has_value());
}

TEST_CASE("bounds at r=3: the order-2 plane exists, no improvement window") {
    const BoundsReport rep = known_bounds(3, 12);
    CHECK(rep.gyarfas_lower == Rational(6));
    CHECK_FALSE(rep.furedi_applicable);
    CHECK(rep.plane_status == "exists");
}

TEST_CASE("bounds at r=23: q=19 and an unknown order-22 plane") {
    const BoundsReport rep = known_bounds(23, 462);
    CHECK(rep.q == 19);
    CHECK(rep.furedi_upper == 25); // ceil(462/19)
    CHECK(rep.plane_status == "unknown");
    CHECK(rep.furedi_applicable);
}

TEST_CASE("a matching resolvable design improves the upper bound when v | n") {
    const RbibdDesign kirkman = kirkman_15();
    const BoundsReport with = known_bounds(7, 105, &kirkman);
    REQUIRE(with.rbibd_upper.has_value());
    CHECK(*with.rbibd_upper == Rational(21)); // 105/5
    CHECK(with.rbibd_v == 15);
    CHECK(with.rbibd_k == 3);
    CHECK(with.rbibd_t == 1);

    // not divisible: the design is reported unusable, bounds unchanged
    const BoundsReport without = known_bounds(7, 35, &kirkman);
    CHECK_FALSE(without.rbibd_upper.has_value());

    // wrong color count (r != 7): unusable as well
    const BoundsReport other = known_bounds(8, 150, &kirkman);
    CHECK_FALSE(other.rbibd_upper.has_value());
}

TEST_CASE("bounds preconditions") {
    CHECK_THROWS_AS(known_bounds(2, 100), PreconditionError);
    CHECK_THROWS_AS(known_bounds(7, 10), PreconditionError); // n < q^2 = 25
}

TEST_CASE("design coloring of the Kirkman system") {
    const RbibdDesign d = kirkman_15();

    const ColoredGraph g15 = design_coloring(d, 15);
    const ComponentReport rep15 = analyze(g15);
    CHECK(rep15.r == 7);
    CHECK(rep15.min_degree == 14); // K_15
    CHECK(rep15.max_component == 3);

    const ColoredGraph g105 = design_coloring(d, 105);
    const ComponentReport rep105 = analyze(g105);
    CHECK(rep105.min_degree == 104); // K_105
    CHECK(rep105.max_component == 21);
    for (const auto& orders : rep105.per_color)
        CHECK(orders == std::vector<long long>(5, 21)); // 5 blocks per class

    CHECK_THROWS_AS(design_coloring(d, 20), NotDivisibleError);
}

TEST_CASE("the order-3 plane doubles as a (9,3,1) design") {
    const ColoredGraph g = design_coloring(to_design(affine_plane(3)), 9);
    const ComponentReport rep = analyze(g);
    CHECK(rep.r == 4);
    CHECK(rep.min_degree == 8); // K_9
    CHECK(rep.max_component == 3);
}

TEST_CASE("a broken resolution is rejected") {
    RbibdDesign d = kirkman_15();
    std::swap(d.classes[0][0], d.classes[1][0]); // classes no longer partition
    CHECK_THROWS_AS(design_coloring(d, 15), NotResolvableError);
}

TEST_CASE("report JSON carries the audit fields") {
    const ComponentReport rep = analyze(gys_construction(3, 9));
    const auto j = nlohmann::json::parse(report_json(rep));
    CHECK(j["delta"] == 6);
    CHECK(j["max_component"] == 3);
    CHECK(j["per_color_component_orders"].size() == 3);
    const auto jb = nlohmann::json::parse(bounds_json(known_bounds(7, 35)));
    CHECK(jb["furedi_lower"] == "6/1");
    CHECK(jb["furedi_upper"] == 7);
}
