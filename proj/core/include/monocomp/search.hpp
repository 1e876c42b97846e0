#pragma once

#include "monocomp/designs.hpp"
#include "monocomp/hypergraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace monocomp {

// One candidate deletion set S of r plane points, with the checks that the
// surviving hypergraph (plane minus one parallel class minus S) must pass:
//  - chromatic_witness: some vertex lies in r pairwise-distinct surviving
//    edges (they pairwise meet there), certifying edge chromatic number
//    exactly r together with the class coloring;
//  - rank_ok: some surviving edge kept all r vertices;
//  - delta_star_ok: min closed neighborhood size equals (r^2 - r) - (r - 2);
//  - top_level_perturbable: the uniform-weight top level admits no perfect
//    fractional matching (evaluated only when the three structural checks
//    pass; a candidate is valid iff all four hold).
struct DeletionCandidate {
    std::vector<int> s;
    bool chromatic_witness = false;
    bool rank_ok = false;
    bool delta_star_ok = false;
    std::optional<bool> top_level_perturbable;
    int orbit_id = -1; // filled after reduction, for valid candidates

    bool valid() const {
        return chromatic_witness && rank_ok && delta_star_ok &&
               top_level_perturbable.value_or(false);
    }
};

struct OrbitPartition {
    std::vector<int> orbit_of;                      // orbit id per input choice
    int count = 0;
    std::vector<std::vector<int>> representatives;  // lexicographically minimal member per orbit
};

struct SearchResult {
    int r = 0;
    int deleted_class = 0;
    long long total_candidates = 0;                 // C(r^2, r), all enumerated
    std::vector<DeletionCandidate> valid;           // candidates with every flag true
    OrbitPartition orbits;                          // over the valid candidates
    bool all_valid_are_transversals = false;        // one S point per deleted-class line
};

// Point permutations of the plane induced by affine semilinear maps
// (x, y) -> (a s(x) + b s(y) + e, c s(x) + d s(y) + f), with s a field
// automorphism and ad - bc != 0, restricted to those fixing the given
// parallel class setwise.  For prime q this is the full collineation
// stabilizer of the class.
std::vector<std::vector<int>> deleted_class_stabilizer(const AffinePlane& plane,
                                                       int deleted_class);

OrbitPartition reduce_by_isomorphism(const std::vector<std::vector<int>>& choices,
                                     const AffinePlane& plane, int deleted_class);

// Full enumeration of all C(r^2, r) deletion sets against the checks above.
// deleted_class = -1 means the vertical class (the default convention);
// passing another class index re-runs the search with that class removed,
// which, by plane symmetry, must produce the same orbit count.
// threads = 0 uses the hardware concurrency; evaluation order never affects
// the result.
SearchResult enumerate_s_choices(int r, int deleted_class = -1, int threads = 0,
                                 int cap = kDefaultOrderCap);

// {"r": .., "total_candidates": .., "valid_count": .., "orbit_count": ..,
//  "representatives": [[..], ..]}
std::string survey_json(const SearchResult& result);

} // namespace monocomp
