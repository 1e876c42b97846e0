#pragma once

#include "monocomp/hypergraph.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace monocomp {

// Blow-up recipe: a properly edge-colored host hypergraph plus one positive
// class size per host vertex.
struct BlowupPlan {
    Hypergraph host;
    std::vector<long long> class_sizes;

    long long total() const;
    // host colored with contiguous colors 0..r-1, sizes all >= 1
    void validate() const;
};

// An r-edge-colored graph.  Constructed graphs carry their quotient (the
// plan); graphs read from disk carry only the materialized edge list.  When
// both forms are present they are cross-checked against each other (degrees
// per vertex, monochromatic component orders per color).
//
// Blow-up semantics: vertex v of the host becomes a class X_v of class_sizes[v]
// vertices (classes laid out consecutively in host-vertex order).  Two
// distinct blown-up vertices u' in X_u, v' in X_v (u = v allowed) are adjacent
// iff some host edge contains {u, v}; the edge is colored by the
// lowest-color such host edge.  In particular a class whose host vertex lies
// in at least one edge becomes a clique internally.
struct ColoredGraph {
    long long n = 0;
    int num_colors = 0;
    std::optional<BlowupPlan> quotient;
    bool materialized = false;
    std::vector<std::array<long long, 3>> edge_list; // (color, u, v) with u < v

    // id of the first vertex of class v (quotient form)
    long long class_offset(int v) const;
};

// Materialization is automatic up to this many blown-up vertices; larger
// graphs stay in quotient form (all analysis still exact).
inline constexpr long long kMaterializeLimit = 2000;

// Blow up a plan; materializes and cross-checks when n <= kMaterializeLimit.
ColoredGraph blow_up(BlowupPlan plan);

// Uniform blow-up: every class gets n / n_host vertices.
// Throws NotDivisibleError when n_host does not divide n.
ColoredGraph uniform_blowup(const Hypergraph& host, long long n);

// Weighted blow-up: class sizes are floor/ceil of weight * n, apportioned by
// largest fractional part (ties to the lowest vertex id).  All weights must
// be strictly positive and n large enough that every class is nonempty.
ColoredGraph weighted_blowup(const Hypergraph& host, const WeightAssignment& w, long long n);

// Uniform blow-up of AG(2,r) with its vertical parallel class removed: an
// r-colored graph with minimum degree (1 - (r-1)/r^2) n - 1 whose largest
// monochromatic component is exactly n/r.  Both equalities are verified on
// the result.  Requires r^2 | n.
ColoredGraph gys_construction(int r, long long n, int cap = kDefaultOrderCap);

// Size plan for the perturbed blow-up of the hr hypergraph: every class gets
// n/(r^2-r) vertices, then the r classes of the adjustment set grow by
// (r-2)c and all others shrink by c (column sums unchanged).  Preconditions:
// r >= 3, c >= 1, (r^2-r) | n, n >= r(r-1)((r-1)(r-2)+1)c; violations name
// the failing inequality.
BlowupPlan perturbed_plan(int r, long long c, long long n, int cap = kDefaultOrderCap);

// Blow-up of perturbed_plan.  Verified on the result:
//   min degree        = (1 - (r-2)/(r^2-r)) n - c - 1
//   largest mono comp = n/(r-1) - c
ColoredGraph perturbed_graph(int r, long long c, long long n, int cap = kDefaultOrderCap);

// Text format, canonical emission (edges sorted by color, then endpoints):
//   G <n> <r>
//   <color> <u> <v>
std::string write_graph(const ColoredGraph& g);
ColoredGraph read_graph(std::istream& in);
ColoredGraph read_graph_string(const std::string& text);

} // namespace monocomp
