#pragma once

#include "monocomp/hypergraph.hpp"
#include "monocomp/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace monocomp {

// 0/1 vertex-by-edge incidence structure of a hypergraph (rows = vertices,
// columns = edges; every column has at least one 1 since edges are nonempty).
struct IncidenceSystem {
    int n = 0;
    int e = 0;
    std::vector<std::vector<int>> columns; // vertex ids per edge (sorted)

    static IncidenceSystem from(const Hypergraph& h);
};

// Edge weights m >= 0 with sum over edges at each vertex <= 1 (= 1 everywhere
// when perfect).
struct FractionalMatching {
    std::vector<Rational> m;
};

// Vertex weights t >= 0 with sum >= 1 on every edge.
struct FractionalCover {
    std::vector<Rational> t;
};

// Zero-sum vertex adjustment that is strictly negative on every edge.
struct Perturbation {
    std::vector<Rational> p;
};

// Infeasibility certificate for { Am = 1, m >= 0 }:  A^T w <= 0 and 1^T w > 0.
struct FarkasWitness {
    std::vector<Rational> w;
};

// Optimal fractional matching value and an optimal matching, by primal
// simplex with Bland's anti-cycling rule over exact rationals.  An edgeless
// hypergraph has value 0 with the empty matching.
std::pair<Rational, FractionalMatching> nu_star(const Hypergraph& h);

// Optimal fractional vertex cover value and an optimal cover, same engine on
// the dual program.  Throws NoEdgesError when h has no edges.  Equality with
// nu_star is asserted before returning (exact LP duality).
std::pair<Rational, FractionalCover> tau_star(const Hypergraph& h);

// Exactly one of the two members is set.
struct PfmResult {
    std::optional<FractionalMatching> matching; // a perfect fractional matching
    std::optional<FarkasWitness> witness;       // proof that none exists
};

// Phase-1 simplex on Am = 1, m >= 0: minimize the sum of artificial
// variables; feasible iff the optimum is exactly 0.  On infeasibility the
// witness is extracted from the optimal phase-1 duals and re-validated
// against A from scratch.
PfmResult perfect_fractional_matching(const Hypergraph& h);

// Absent iff h has a perfect fractional matching; otherwise the perturbation
//   p = w - (1^T w / n) * 1
// built from the Farkas witness.  Postconditions (sum p = 0, p(e) < 0 for
// every edge, strictly) are validated in exact arithmetic.
// Throws NoEdgesError when h has no edges.
std::optional<Perturbation> find_perturbation(const Hypergraph& h);

// Reverse arm of the equivalence, used to round-trip certificates: from a
// valid perturbation, w = p + (alpha/n) * 1 with alpha = min_e |p(e)| is a
// Farkas witness.
FarkasWitness farkas_from_perturbation(const Hypergraph& h, const Perturbation& p);

// Largest admissible epsilon is strictly below min{ |w(v)/p(v)| : p(v) != 0 }.
Rational perturbation_epsilon_bound(const WeightAssignment& w, const Perturbation& p);

// w + eps * p.  Requires 0 < eps < perturbation_epsilon_bound(w, p), else
// EpsilonTooLargeError.
WeightAssignment apply_perturbation(const WeightAssignment& w, const Perturbation& p,
                                    const Rational& eps);

// Default epsilon: half the bound (strictly inside the admissible region).
Rational default_perturbation_epsilon(const WeightAssignment& w, const Perturbation& p);

// Certificate validators; throw InternalError naming the violated invariant.
void validate_matching(const Hypergraph& h, const FractionalMatching& m,
                       bool require_perfect = false);
void validate_cover(const Hypergraph& h, const FractionalCover& t);
void validate_perturbation(const Hypergraph& h, const Perturbation& p);
void validate_farkas(const Hypergraph& h, const FarkasWitness& w);

// JSON certificates: {"kind": ..., "values": ["num/den", ...], "objective": "num/den"}.
std::string matching_certificate_json(const Rational& value, const FractionalMatching& m);
std::string cover_certificate_json(const Rational& value, const FractionalCover& t);
std::string perturbation_certificate_json(const Perturbation& p);
std::string farkas_certificate_json(const FarkasWitness& w);

} // namespace monocomp
