#include "monocomp/blowup.hpp"
#include "monocomp/colorgraph.hpp"
#include "monocomp/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace monocomp;

TEST_CASE("uniform blow-up of the order-2 plane with classes of size 1 is K_4") {
    const ColoredGraph g = uniform_blowup(to_hypergraph(affine_plane(2)), 4);
    CHECK(g.n == 4);
    CHECK(g.num_colors == 3);
    REQUIRE(g.materialized);
    CHECK(g.edge_list.size() == 6);

    const ComponentReport rep = analyze(g);
    CHECK(rep.min_degree == 3);
    for (const auto& orders : rep.per_color)
        CHECK(orders == std::vector<long long>{2, 2});
}

TEST_CASE("divisibility is enforced") {
    const Hypergraph host = to_hypergraph(affine_plane(2));
    CHECK_THROWS_AS(uniform_blowup(host, 6), NotDivisibleError);
    CHECK_THROWS_AS(uniform_blowup(host, 0), NotDivisibleError);
}

TEST_CASE("reference construction: plane minus one class, uniform blow-up") {
    struct Case {
        int r;
        long long n, delta, comp;
    };
    // delta = (1 - (r-1)/r^2) n - 1, largest component n/r
    for (const Case c : {Case{3, 18, 13, 6}, Case{3, 9, 6, 3}, Case{4, 16, 12, 4}}) {
        const ColoredGraph g = gys_construction(c.r, c.n);
        const ComponentReport rep = analyze(g);
        CHECK(rep.min_degree == c.delta);
        CHECK(rep.max_component == c.comp);
        CHECK(rep.r == c.r);
    }
    CHECK_THROWS_AS(gys_construction(3, 12), NotDivisibleError);
    CHECK_THROWS_AS(gys_construction(6, 36), NotPrimePowerError);
}

TEST_CASE("perturbed size plan: adjusted classes and totals") {
    const BlowupPlan plan = perturbed_plan(3, 1, 18);
    CHECK(plan.total() == 18);
    std::multiset<long long> sizes(plan.class_sizes.begin(), plan.class_sizes.end());
    CHECK(sizes == std::multiset<long long>{2, 2, 2, 4, 4, 4});

    // the enlarged classes are exactly the adjustment set of the host
    const std::set<std::pair<int, int>> grown_labels = {{1, 0}, {1, 1}, {0, 2}};
    for (int v = 0; v < plan.host.n; ++v) {
        const bool grown = plan.class_sizes[v] == 4;
        CHECK(grown == (grown_labels.count(plan.host.labels[v]) == 1));
    }

    const BlowupPlan p4 = perturbed_plan(4, 1, 84);
    std::map<long long, int> hist;
    for (long long s : p4.class_sizes) ++hist[s];
    CHECK(hist[9] == 4);
    CHECK(hist[6] == 8);
}

TEST_CASE("perturbed plan preconditions name the failing inequality") {
    CHECK_THROWS_WITH_AS(perturbed_plan(3, 1, 12),
                         doctest::Contains("n < r(r-1)((r-1)(r-2)+1)c"), PreconditionError);
    CHECK_THROWS_WITH_AS(perturbed_plan(3, 1, 20), doctest::Contains("(r^2 - r) | n"),
                         PreconditionError);
    CHECK_THROWS_WITH_AS(perturbed_plan(2, 1, 18), doctest::Contains("r >= 3"),
                         PreconditionError);
    CHECK_THROWS_WITH_AS(perturbed_plan(3, 0, 18), doctest::Contains("c >= 1"),
                         PreconditionError);
}

TEST_CASE("perturbed graphs: audited degree and component values") {
    struct Case {
        int r;
        long long c, n, delta, comp;
    };
    for (const Case c : {Case{3, 1, 18, 13, 8}, Case{4, 1, 84, 68, 27},
                         Case{5, 1, 260, 219, 64}}) {
        const ColoredGraph g = perturbed_graph(c.r, c.c, c.n);
        const ComponentReport rep = analyze(g);
        CHECK(rep.min_degree == c.delta);
        CHECK(rep.max_component == c.comp);
    }
}

TEST_CASE("every monochromatic component of a perturbed graph is one host edge") {
    for (int r : {3, 4}) {
        const long long n = r == 3 ? 18 : 84;
        const ColoredGraph g = perturbed_graph(r, 1, n);
        const BlowupPlan& plan = *g.quotient;
        const ComponentReport rep = analyze(g);

        // lowest color through each host vertex decides its internal clique
        std::vector<int> lowest(plan.host.n, -1);
        for (int i = 0; i < plan.host.num_edges(); ++i)
            for (int v : plan.host.edges[i])
                if (lowest[v] < 0 || plan.host.colors[i] < lowest[v])
                    lowest[v] = plan.host.colors[i];

        for (int c = 0; c < g.num_colors; ++c) {
            std::vector<long long> expected;
            for (int i = 0; i < plan.host.num_edges(); ++i) {
                if (plan.host.colors[i] != c) continue;
                const auto& e = plan.host.edges[i];
                // a singleton edge only shows up through its class clique,
                // and only when this color is the lowest one at that vertex
                if (e.size() == 1 && (lowest[e[0]] != c || plan.class_sizes[e[0]] < 2))
                    continue;
                long long order = 0;
                for (int v : e) order += plan.class_sizes[v];
                expected.push_back(order);
            }
            std::sort(expected.rbegin(), expected.rend());
            CHECK(rep.per_color[c] == expected);
        }
    }
}

TEST_CASE("pointwise degree formula: adjacent to everything outside the column") {
    for (int r : {3, 4}) {
        const long long n = r == 3 ? 18 : 84;
        const BlowupPlan plan = perturbed_plan(r, 1, n);
        const ColoredGraph g = blow_up(plan);
        const ComponentReport rep = analyze(g);
        (void)rep;

        // group host vertices by column label
        std::map<int, std::vector<int>> columns;
        for (int v = 0; v < plan.host.n; ++v)
            columns[plan.host.labels[v].second].push_back(v);

        // recompute each class's degree from the column sums and compare with
        // the materialized graph
        std::vector<long long> degree(g.n, 0);
        for (const auto& e : g.edge_list) {
            ++degree[e[1]];
            ++degree[e[2]];
        }
        long long off = 0;
        for (int v = 0; v < plan.host.n; ++v) {
            long long colsum = 0;
            for (int w : columns[plan.host.labels[v].second])
                if (w != v) colsum += plan.class_sizes[w];
            const long long want = (n - 1) - colsum;
            for (long long x = off; x < off + plan.class_sizes[v]; ++x)
                CHECK(degree[x] == want);
            off += plan.class_sizes[v];
        }
    }
}

TEST_CASE("weighted blow-up apportionment") {
    Hypergraph host;
    host.n = 3;
    host.edges = {{0, 1, 2}};
    host.colors = {0};

    WeightAssignment w;
    w.w = {Rational(1, 2), Rational(1, 3), Rational(1, 6)};
    const ColoredGraph g = weighted_blowup(host, w, 6);
    CHECK(g.quotient->class_sizes == std::vector<long long>{3, 2, 1});

    // equal fractional parts: ceiling goes to the lowest vertex ids
    WeightAssignment u;
    u.w = {Rational(1, 3), Rational(1, 3), Rational(1, 3)};
    const ColoredGraph g2 = weighted_blowup(host, u, 4);
    CHECK(g2.quotient->class_sizes == std::vector<long long>{2, 1, 1});

    // uniform weights at a divisible n coincide with the uniform blow-up
    const ColoredGraph g3 = weighted_blowup(host, u, 6);
    const ColoredGraph g4 = uniform_blowup(host, 6);
    CHECK(g3.quotient->class_sizes == g4.quotient->class_sizes);
    CHECK(g3.edge_list == g4.edge_list);

    WeightAssignment zero;
    zero.w = {Rational(1), Rational(0), Rational(0)};
    CHECK_THROWS_AS(weighted_blowup(host, zero, 6), PreconditionError);
    // n = 2 cannot give all three classes a vertex
    CHECK_THROWS_AS(weighted_blowup(host, u, 2), PreconditionError);
}

TEST_CASE("pairs in several host edges take the lowest color") {
    Hypergraph host;
    host.n = 3;
    host.edges = {{0, 1, 2}, {0, 1}};
    host.colors = {1, 0}; // the pair {0,1} lies in both; color 0 must win

    const ColoredGraph g = uniform_blowup(host, 6);
    REQUIRE(g.materialized);
    CHECK(g.edge_list.size() == 15); // K_6: hosts 0,1,2 pairwise joined, all covered
    auto block = [](long long x) { return static_cast<int>(x / 2); };
    for (const auto& e : g.edge_list) {
        const int bu = block(e[1]), bv = block(e[2]);
        // anything touching host vertex 2 keeps color 1, the rest drops to 0
        const int want = (bu == 2 || bv == 2) ? 1 : 0;
        CHECK(e[0] == want);
    }
}

TEST_CASE("single-vertex host edges color their class cliques") {
    Hypergraph host;
    host.n = 3;
    host.edges = {{0}, {1, 2}};
    host.colors = {0, 1};
    const ColoredGraph g = uniform_blowup(host, 6);
    const ComponentReport rep = analyze(g);
    // X_0's internal clique is the only color-0 component
    CHECK(rep.per_color[0] == std::vector<long long>{2});
    CHECK(rep.per_color[1] == std::vector<long long>{4});
}

TEST_CASE("an uncovered host vertex yields isolated blown-up vertices") {
    Hypergraph host;
    host.n = 3;
    host.edges = {{0, 1}};
    host.colors = {0};
    const ColoredGraph g = uniform_blowup(host, 9);
    const ComponentReport rep = analyze(g);
    CHECK(rep.min_degree == 0);                               // X_2 is isolated
    CHECK(rep.per_color[0] == std::vector<long long>{6});     // X_0 u X_1
}

TEST_CASE("graph text format round trips") {
    const ColoredGraph g = perturbed_graph(3, 1, 18);
    const std::string text = write_graph(g);
    const ColoredGraph back = read_graph_string(text);
    CHECK(back.n == g.n);
    CHECK(back.num_colors == g.num_colors);
    CHECK(back.edge_list == g.edge_list);
    CHECK(write_graph(back) == text);

    const ComponentReport a = analyze(g);
    const ComponentReport b = analyze(back);
    CHECK(a.min_degree == b.min_degree);
    CHECK(a.max_component == b.max_component);
    CHECK(a.per_color == b.per_color);

    CHECK_THROWS_AS(read_graph_string("X 2 1\n"), ParseError);
    CHECK_THROWS_AS(read_graph_string("G 2 1\n0 0 0\n"), ParseError);
    CHECK_THROWS_AS(read_graph_string("G 2 1\n0 0 1\n0 1 0\n"), ParseError);
    CHECK_THROWS_AS(read_graph_string("G 2 1\n1 0 1\n"), ParseError);
    CHECK_THROWS_AS(read_graph_string("G 2 1\n0 0\n"), ParseError);
}

TEST_CASE("quotient analysis matches a hand-materialized check at larger n") {
    // stays within the materialization limit so the cross-check runs
    const ColoredGraph g = gys_construction(3, 1998);
    CHECK(g.materialized);
    const ComponentReport rep = analyze(g);
    CHECK(rep.min_degree == 1998 - 2 * (1998 / 9) - 1);
    CHECK(rep.max_component == 666);
}
