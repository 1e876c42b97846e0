#pragma once

#include "monocomp/blowup.hpp"
#include "monocomp/designs.hpp"
#include "monocomp/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace monocomp {

// Exact audit of an edge-colored graph.  Monochromatic components are the
// connected components of one color's edge set; vertices touching no edge of
// a color contribute no component to that color.
struct ComponentReport {
    long long n = 0;
    int r = 0;
    long long min_degree = 0;
    long long max_component = 0;                     // max over all colors; 0 if edgeless
    std::vector<std::vector<long long>> per_color;   // component orders, descending
};

// Computes the report from the quotient when available (formulas over host
// classes), from the edge list otherwise, and cross-checks the two when the
// graph carries both representations.
ComponentReport analyze(const ColoredGraph& g);

// The audit object emitted next to constructed graphs:
// {"delta": ..., "per_color_component_orders": [[..],..], "max_component": ...}
std::string report_json(const ComponentReport& rep);

struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

SimpleGraph complete_graph(int n);
SimpleGraph strip_colors(const ColoredGraph& g);

// Exact mc_r by exhaustive enumeration of r-colorings with the first edge's
// color fixed (color-permutation symmetry): the minimum over colorings of
// the largest monochromatic component order.  Throws TooLargeError when
// r^{|E|} exceeds the cap.
long long mc_oracle(const SimpleGraph& g, int colors, long long cap = 100'000'000);

// Known lower/upper bounds on mc_r(K_n).  q is the largest prime power at
// most r-1 (the largest order at which this library can construct a plane);
// the Furedi window [n/(r-1-1/(r-1)), ceil(n/q)] applies only when no plane
// of order r-1 exists, so it is flagged by what is known about that order.
struct BoundsReport {
    int r = 0;
    long long n = 0;
    Rational gyarfas_lower;             // n / (r-1), always valid
    int q = 0;                          // largest prime power <= r-1
    Rational furedi_lower;              // n / (r-1 - 1/(r-1))
    long long furedi_upper = 0;         // ceil(n / q)
    bool furedi_applicable = false;     // false iff a plane of order r-1 exists
    std::string plane_status;           // "exists" | "known_nonexistent" | "unknown"
    // improvement from a resolvable design with (v-1)/(k-1) == r and v | n
    std::optional<Rational> rbibd_upper;
    int rbibd_v = 0, rbibd_k = 0, rbibd_t = 0;
};

BoundsReport known_bounds(int r, long long n, const RbibdDesign* rbibd = nullptr);
std::string bounds_json(const BoundsReport& rep);

// Uniform blow-up of a resolvable (v,k,1) design with its parallel classes
// as colors: a complete ((v-1)/(k-1))-colored graph whose largest
// monochromatic component is exactly n*k/v.  Both facts are verified on the
// result.  Requires v | n; the design's resolution is re-verified first.
ColoredGraph design_coloring(const RbibdDesign& d, long long n);

} // namespace monocomp
