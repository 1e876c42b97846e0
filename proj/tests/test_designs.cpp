#include "monocomp/designs.hpp"
#include "monocomp/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace monocomp;

TEST_CASE("plane counts: q^2 points, q(q+1) lines, q+1 classes") {
    const AffinePlane p2 = affine_plane(2);
    CHECK(p2.num_points() == 4);
    CHECK(p2.lines.size() == 6);
    CHECK(p2.classes.size() == 3);

    const AffinePlane p3 = affine_plane(3);
    CHECK(p3.num_points() == 9);
    CHECK(p3.lines.size() == 12);
    CHECK(p3.classes.size() == 4);

    CHECK_THROWS_AS(affine_plane(6), NotPrimePowerError);
    CHECK_THROWS_AS(affine_plane(16), UnsupportedOrderError);
}

TEST_CASE("every point pair on exactly one line, for every supported order") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        const AffinePlane plane = affine_plane(q);
        std::map<std::pair<int, int>, int> count;
        for (const auto& line : plane.lines)
            for (size_t i = 0; i < line.size(); ++i)
                for (size_t j = i + 1; j < line.size(); ++j) ++count[{line[i], line[j]}];
        CHECK(count.size() == static_cast<size_t>(q * q * (q * q - 1) / 2));
        for (const auto& [pair, c] : count) CHECK(c == 1);
    }
}

TEST_CASE("lines through a point: q+1 of them, pairwise meeting only there, covering V") {
    for (int q : {2, 3, 5}) {
        const AffinePlane plane = affine_plane(q);
        for (int v = 0; v < plane.num_points(); ++v) {
            std::vector<const std::vector<int>*> through;
            for (const auto& line : plane.lines)
                if (std::binary_search(line.begin(), line.end(), v)) through.push_back(&line);
            CHECK(through.size() == static_cast<size_t>(q + 1));
            std::set<int> covered;
            for (const auto* line : through) covered.insert(line->begin(), line->end());
            CHECK(covered.size() == static_cast<size_t>(q * q));
            for (size_t i = 0; i < through.size(); ++i)
                for (size_t j = i + 1; j < through.size(); ++j) {
                    std::vector<int> common;
                    std::set_intersection(through[i]->begin(), through[i]->end(),
                                          through[j]->begin(), through[j]->end(),
                                          std::back_inserter(common));
                    CHECK(common == std::vector<int>{v});
                }
        }
    }
}

TEST_CASE("class conventions: class 0 is rows, last class is columns") {
    const AffinePlane p = affine_plane(3);
    for (int li : p.classes[0]) {
        const int row = p.point_row(p.lines[li][0]);
        for (int v : p.lines[li]) CHECK(p.point_row(v) == row);
    }
    for (int li : p.classes[3]) {
        const int col = p.point_col(p.lines[li][0]);
        for (int v : p.lines[li]) CHECK(p.point_col(v) == col);
    }
}

TEST_CASE("verify_design flags a deleted line as uncovered pairs") {
    const AffinePlane p = affine_plane(3);
    std::vector<std::vector<int>> blocks = p.lines;
    const std::vector<int> removed = blocks.back();
    blocks.pop_back();

    const DesignCheck chk = verify_design(blocks, 9, 3);
    CHECK_FALSE(chk.pair_coverage_exact);
    CHECK(chk.overcovered_pairs.empty());
    REQUIRE(chk.uncovered_pairs.size() == 3);
    std::set<std::pair<int, int>> expect;
    for (size_t i = 0; i < removed.size(); ++i)
        for (size_t j = i + 1; j < removed.size(); ++j) expect.insert({removed[i], removed[j]});
    for (const auto& pr : chk.uncovered_pairs) CHECK(expect.count(pr) == 1);
}

TEST_CASE("kirkman system: 35 blocks, 7 classes, all checks pass") {
    const RbibdDesign d = kirkman_15();
    CHECK(d.v == 15);
    CHECK(d.k == 3);
    CHECK(d.blocks.size() == 35);  // C(15,2)/C(3,2)
    CHECK(d.num_classes() == 7);   // (v-1)/(k-1)
    CHECK(d.t_parameter() == 1);
    const DesignCheck chk = verify_design(d.blocks, d.v, d.k, &d.classes);
    CHECK(chk.all_ok());
}

TEST_CASE("rbibd family parameters") {
    const RbibdParams a = rbibd_coloring_params(3, 0); // the affine plane case
    CHECK(a.v == 9);
    CHECK(a.num_colors == 4);
    CHECK(a.component_bound_fraction == Rational(1, 3));

    const RbibdParams b = rbibd_coloring_params(3, 1);
    CHECK(b.v == 15);
    CHECK(b.num_colors == 7);
    CHECK(b.component_bound_fraction == Rational(1, 5));

    const RbibdParams c = rbibd_coloring_params(11, 1);
    CHECK(c.v == 231);
    CHECK(c.num_colors == 23);
    CHECK(c.component_bound_fraction == Rational(1, 21));

    CHECK_THROWS_AS(rbibd_coloring_params(1, 0), PreconditionError);
    CHECK_THROWS_AS(rbibd_coloring_params(3, -1), PreconditionError);
}

TEST_CASE("rbibd_coloring_params(k, 0) reproduces the plane parameters") {
    for (int k : {2, 3, 4, 5}) {
        const RbibdParams p = rbibd_coloring_params(k, 0);
        CHECK(p.v == static_cast<long long>(k) * k);
        CHECK(p.num_colors == k + 1);
        CHECK(p.component_bound_fraction == Rational(1, k));
    }
}

TEST_CASE("design text format round trips bit-exactly") {
    const RbibdDesign d = kirkman_15();
    const std::string text = write_design(d);
    const RbibdDesign back = read_design_string(text);
    CHECK(back.v == d.v);
    CHECK(back.k == d.k);
    CHECK(back.blocks == d.blocks);
    CHECK(back.classes == d.classes);
    CHECK(write_design(back) == text);

    const AffinePlane plane = affine_plane(4);
    const std::string ptext = write_design(to_design(plane));
    CHECK(write_design(read_design_string(ptext)) == ptext);

    CHECK_THROWS_AS(read_design_string(""), ParseError);
    CHECK_THROWS_AS(read_design_string("0 1 -2\n"), ParseError);
}
