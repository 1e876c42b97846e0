#pragma once

#include "monocomp/designs.hpp"
#include "monocomp/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace monocomp {

// Vertex-list hypergraph with an optional proper edge coloring (same-colored
// edges pairwise disjoint) and optional (row, col) vertex labels inherited
// from a source plane.  Edges are sorted id vectors; duplicates of whole
// edges are allowed (it is a list).
struct Hypergraph {
    int n = 0;
    std::vector<std::vector<int>> edges;
    std::vector<int> colors;                      // per-edge, empty if uncolored
    std::vector<std::pair<int, int>> labels;      // per-vertex, empty if unlabeled

    bool colored() const { return !colors.empty(); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    int num_color_classes() const;

    // Checks id ranges, nonempty sorted edges, and the proper-coloring
    // invariant; throws InternalError on violation.
    void validate() const;
};

struct HypergraphStats {
    int rank = 0;                 // max edge size (0 if edgeless)
    Rational proportional_rank;   // rank / n
    int delta_star = 0;           // min over v of |N[v]|, N[v] always contains v
    int num_color_classes = 0;
};

HypergraphStats properties(const Hypergraph& h);

// True iff some vertex lies in `count` pairwise-distinct edges.  Those edges
// pairwise intersect (they share that vertex), so a proper coloring needs
// `count` colors: together with a proper coloring by `count` classes this
// pins the edge chromatic number exactly.
bool chromatic_witness(const Hypergraph& h, int count);

// Nonnegative vertex weights summing to exactly 1.
struct WeightAssignment {
    std::vector<Rational> w;

    static WeightAssignment uniform(int n);
    void validate() const; // throws PreconditionError if not on the simplex
    Rational edge_weight(const std::vector<int>& edge) const;
};

// Subhypergraph on the same vertex set keeping only the edges of maximum
// weight (exact rational comparison).
Hypergraph top_level(const Hypergraph& h, const WeightAssignment& w);

// Shared builder: drop one parallel class of the plane entirely, delete the
// point set s from every remaining line, renumber the surviving points in
// increasing id order, keep (row, col) labels, color edges by their original
// class index.  Edges emptied by the deletion are dropped; single-vertex
// remnants are kept.
Hypergraph plane_minus_class_minus_set(const AffinePlane& plane, int deleted_class,
                                       const std::vector<int>& s);

// The r-colored hypergraph behind the `hr` subcommand: AG(2,r) minus its
// vertical class minus the r-point set
//   { (row r-1, col j) : j in 0..r-2 }  union  { (row r-2, col r-1) }
// (0-based).  r*r - r vertices, every remaining line survives nonempty.
Hypergraph build_hr(int r, int cap = kDefaultOrderCap);

// Ids of that deletion set inside AG(2,r), and of the set used to adjust
// class sizes in the perturbed blow-up:
//   adjustment set = { (row r-2, col j) : j in 0..r-2 } union { (row r-3, col r-1) }.
std::vector<int> hr_deleted_set(int r);
std::vector<int> hr_adjustment_set_labels_to_ids(const Hypergraph& hr, int r);

// Companion example with no perturbation: AG(2,3) minus its vertical class
// minus all three vertices of one remaining line (the last row).  6 vertices,
// 8 edges (two full rows, six 2-point remnants).
Hypergraph build_h3_line_deleted();

// Plane / design as a colored hypergraph (classes are the colors); the
// optional skip list removes whole parallel classes, remaining classes are
// re-indexed contiguously in order.
Hypergraph to_hypergraph(const AffinePlane& plane, const std::vector<int>& skip_classes = {});
Hypergraph to_hypergraph(const RbibdDesign& design);

// Text format, bit-exact round trip:
//   H <n> <m>
//   <color> <v1> <v2> ...        (m lines; color -1 on every line = uncolored)
std::string write_hypergraph(const Hypergraph& h);
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_string(const std::string& text);

} // namespace monocomp
