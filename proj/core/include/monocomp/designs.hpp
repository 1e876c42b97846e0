#pragma once

#include "monocomp/galois.hpp"
#include "monocomp/rational.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace monocomp {

// Affine plane AG(2,q): q^2 points, q(q+1) lines of q points each, every pair
// of distinct points on exactly one line, lines partitioned into q+1 parallel
// classes of q disjoint lines.
//
// Coordinate convention (fixed so certificates are reproducible): point
// (x, y) over GF(q) has column index(x), row index(y) under the field's
// element enumeration, and point id = row * q + col.  Lines are
//   y = m x + b   for each slope m and intercept b (classes 0..q-1, class s
//                 holds slope element(s); class 0 is the horizontal "rows"),
//   x = c         the vertical "columns" (class q, listed last).
// Line id = class * q + intercept index; point lists sorted ascending.
struct AffinePlane {
    int q = 0;
    std::vector<std::vector<int>> lines;    // q(q+1) sorted point-id sets of size q
    std::vector<std::vector<int>> classes;  // q+1 classes, each q line ids

    int num_points() const { return q * q; }
    int point_row(int id) const { return id / q; }
    int point_col(int id) const { return id % q; }
    int point_id(int row, int col) const { return row * q + col; }
};

// Throws NotPrimePowerError / UnsupportedOrderError via Field::make.
AffinePlane affine_plane(int q, int cap = kDefaultOrderCap);

// Resolvable (v,k,1) design: k-uniform blocks covering every pair exactly
// once, partitioned into (v-1)/(k-1) parallel classes (perfect matchings).
struct RbibdDesign {
    int v = 0;
    int k = 0;
    std::vector<std::vector<int>> blocks;
    std::vector<std::vector<int>> classes; // block ids per class

    int num_classes() const { return static_cast<int>(classes.size()); }
    // t with v = k^2 + t k (k-1), or -1 when v is not of that form.
    int t_parameter() const;
};

// Outcome of checking the design axioms; failures are contents, not errors.
struct DesignCheck {
    bool uniform = false;
    int block_size = 0;                             // k when uniform
    bool pair_coverage_exact = false;
    std::vector<std::pair<int, int>> uncovered_pairs;
    std::vector<std::pair<int, int>> overcovered_pairs;
    bool resolvable = false;                         // provided classes are perfect matchings
    int num_classes = 0;

    bool all_ok() const { return uniform && pair_coverage_exact && resolvable; }
};

DesignCheck verify_design(const std::vector<std::vector<int>>& blocks, int v, int k,
                          const std::vector<std::vector<int>>* classes = nullptr);

// The classical Kirkman triple system on 15 points: 35 blocks in 7 parallel
// classes, shipped as literal data and re-verified on every call.
RbibdDesign kirkman_15();

struct RbibdParams {
    long long v = 0;
    long long num_colors = 0;
    Rational component_bound_fraction; // largest mono component <= fraction * n
};

// Parameters of the (k^2 + t k(k-1), k, 1) family: v, the number of parallel
// classes (t+1)k + 1, and the component bound 1/((t+1)k - t).
RbibdParams rbibd_coloring_params(long long k, long long t);

// Text format: one block per line as space-separated 0-based point ids,
// blank line between parallel classes.  Round-trips bit-exactly.
std::string write_design(const RbibdDesign& d);
RbibdDesign read_design(std::istream& in);
RbibdDesign read_design_string(const std::string& text);

// A plane is a (q^2, q, 1)-RBIBD (the t = 0 case).
RbibdDesign to_design(const AffinePlane& plane);

} // namespace monocomp
