#include "monocomp/lp.hpp"

#include "monocomp/errors.hpp"

#include <json.hpp>

namespace monocomp {

IncidenceSystem IncidenceSystem::from(const Hypergraph& h) {
    IncidenceSystem a;
    a.n = h.n;
    a.e = h.num_edges();
    a.columns = h.edges;
    return a;
}

namespace {

// Dense-tableau primal simplex in maximization form with Bland's rule
// (entering: lowest-index improving column; leaving: lowest-index basic
// variable among the minimum ratios), which terminates on every input.
struct Tableau {
    int m = 0;      // constraint rows
    int ncols = 0;  // variables
    std::vector<std::vector<Rational>> row; // m x (ncols + 1); last entry = rhs
    std::vector<Rational> cost;             // reduced costs, size ncols
    Rational value;                         // current objective value
    std::vector<int> basis;                 // basic variable per row
    std::vector<char> barred;               // columns excluded from entering

    Tableau(int rows, int cols)
        : m(rows), ncols(cols), row(rows, std::vector<Rational>(cols + 1, Rational(0))),
          cost(cols, Rational(0)), value(0), basis(rows, -1), barred(cols, 0) {}

    // install objective c (size ncols) and price out the current basis
    void set_objective(const std::vector<Rational>& c) {
        cost = c;
        value = 0;
        for (int i = 0; i < m; ++i) {
            const Rational cb = c[basis[i]];
            if (cb == 0) continue;
            for (int j = 0; j < ncols; ++j) cost[j] -= cb * row[i][j];
            value += cb * row[i][ncols];
        }
    }

    void pivot(int r, int j) {
        const Rational piv = row[r][j];
        for (auto& x : row[r]) x /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == r || row[i][j] == 0) continue;
            const Rational f = row[i][j];
            for (int k = 0; k <= ncols; ++k) row[i][k] -= f * row[r][k];
        }
        if (cost[j] != 0) {
            const Rational f = cost[j];
            for (int k = 0; k < ncols; ++k) cost[k] -= f * row[r][k];
            value += f * row[r][ncols];
        }
        basis[r] = j;
    }

    void optimize() {
        // generous cap; Bland's rule cannot cycle, so hitting it is a bug
        for (long long iter = 0; iter < 10'000'000; ++iter) {
            int enter = -1;
            for (int j = 0; j < ncols; ++j) {
                if (!barred[j] && cost[j] > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return; // optimal
            int leave = -1;
            Rational best_ratio(0);
            for (int i = 0; i < m; ++i) {
                if (row[i][enter] <= 0) continue;
                const Rational ratio = row[i][ncols] / row[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            internal_check(leave >= 0, "simplex: unbounded objective");
            pivot(leave, enter);
        }
        throw InternalError("simplex iteration cap exceeded");
    }

    std::vector<Rational> primal_values(int count) const {
        std::vector<Rational> x(count, Rational(0));
        for (int i = 0; i < m; ++i)
            if (basis[i] < count) x[basis[i]] = row[i][ncols];
        return x;
    }
};

} // namespace

std::pair<Rational, FractionalMatching> nu_star(const Hypergraph& h) {
    const IncidenceSystem a = IncidenceSystem::from(h);
    if (a.e == 0) return {Rational(0), FractionalMatching{}};

    // max sum m_e  s.t.  for each vertex v: sum_{e contains v} m_e + s_v = 1
    Tableau t(a.n, a.e + a.n);
    for (int e = 0; e < a.e; ++e)
        for (int v : a.columns[e]) t.row[v][e] = 1;
    for (int v = 0; v < a.n; ++v) {
        t.row[v][a.e + v] = 1;
        t.row[v][t.ncols] = 1;
        t.basis[v] = a.e + v;
    }
    std::vector<Rational> c(t.ncols, Rational(0));
    for (int e = 0; e < a.e; ++e) c[e] = 1;
    t.set_objective(c);
    t.optimize();

    FractionalMatching match{t.primal_values(a.e)};
    validate_matching(h, match);
    Rational sum(0);
    for (const auto& x : match.m) sum += x;
    internal_check(sum == t.value, "matching certificate does not add up to the optimum");
    return {t.value, match};
}

std::pair<Rational, FractionalCover> tau_star(const Hypergraph& h) {
    const IncidenceSystem a = IncidenceSystem::from(h);
    if (a.e == 0) throw NoEdgesError("tau* is undefined on an edgeless hypergraph");

    // min sum t_v  s.t.  for each edge e: sum_{v in e} t_v - s_e + art_e = 1
    const int vt = 0, vs = a.n, va = a.n + a.e;
    Tableau t(a.e, a.n + 2 * a.e);
    for (int e = 0; e < a.e; ++e) {
        for (int v : a.columns[e]) t.row[e][vt + v] = 1;
        t.row[e][vs + e] = -1;
        t.row[e][va + e] = 1;
        t.row[e][t.ncols] = 1;
        t.basis[e] = va + e;
    }

    // phase 1: drive the artificials to zero (always possible: covers exist)
    std::vector<Rational> c1(t.ncols, Rational(0));
    for (int e = 0; e < a.e; ++e) c1[va + e] = -1;
    t.set_objective(c1);
    t.optimize();
    internal_check(t.value == 0, "cover LP phase 1 must reach 0");
    for (int e = 0; e < a.e; ++e) t.barred[va + e] = 1;

    // phase 2: maximize -sum t_v
    std::vector<Rational> c2(t.ncols, Rational(0));
    for (int v = 0; v < a.n; ++v) c2[vt + v] = -1;
    t.set_objective(c2);
    t.optimize();

    FractionalCover cover{t.primal_values(a.n)};
    validate_cover(h, cover);
    const Rational tau = -t.value;

    // mandatory duality postcondition, checked as an identity
    const Rational nu = nu_star(h).first;
    internal_check(tau == nu, "LP duality violated: tau* != nu*");
    return {tau, cover};
}

PfmResult perfect_fractional_matching(const Hypergraph& h) {
    const IncidenceSystem a = IncidenceSystem::from(h);

    // phase 1 on  Am + art = 1, m >= 0 : maximize -sum art
    const int vm = 0, va = a.e;
    Tableau t(a.n, a.e + a.n);
    for (int e = 0; e < a.e; ++e)
        for (int v : a.columns[e]) t.row[v][vm + e] = 1;
    for (int v = 0; v < a.n; ++v) {
        t.row[v][va + v] = 1;
        t.row[v][t.ncols] = 1;
        t.basis[v] = va + v;
    }
    std::vector<Rational> c(t.ncols, Rational(0));
    for (int v = 0; v < a.n; ++v) c[va + v] = -1;
    t.set_objective(c);
    t.optimize();

    PfmResult out;
    if (t.value == 0) {
        FractionalMatching match{t.primal_values(a.e)};
        validate_matching(h, match, /*require_perfect=*/true);
        out.matching = std::move(match);
        return out;
    }

    // infeasible: simplex multipliers y satisfy A^T y >= 0 and 1^T y < 0;
    // the artificial column for vertex v has reduced cost -1 - y_v, so the
    // flipped witness is w_v = -y_v = 1 + cbar_v.
    FarkasWitness wit;
    wit.w.resize(a.n);
    for (int v = 0; v < a.n; ++v) wit.w[v] = Rational(1) + t.cost[va + v];
    validate_farkas(h, wit);
    out.witness = std::move(wit);
    return out;
}

std::optional<Perturbation> find_perturbation(const Hypergraph& h) {
    if (h.edges.empty()) throw NoEdgesError("perturbation requires at least one edge");
    PfmResult pfm = perfect_fractional_matching(h);
    if (pfm.matching) return std::nullopt;

    const std::vector<Rational>& w = pfm.witness->w;
    Rational total(0);
    for (const auto& x : w) total += x;
    const Rational shift = total / h.n;

    Perturbation p;
    p.p.resize(h.n);
    for (int v = 0; v < h.n; ++v) p.p[v] = w[v] - shift;
    validate_perturbation(h, p);
    return p;
}

FarkasWitness farkas_from_perturbation(const Hypergraph& h, const Perturbation& p) {
    validate_perturbation(h, p);
    // alpha = smallest |p(e)| over edges; p(e) < 0 for all e, so alpha > 0
    Rational alpha(0);
    bool first = true;
    for (const auto& e : h.edges) {
        Rational pe(0);
        for (int v : e) pe += p.p[v];
        if (first || -pe < alpha) alpha = -pe;
        first = false;
    }
    FarkasWitness wit;
    wit.w.resize(h.n);
    const Rational shift = alpha / h.n;
    for (int v = 0; v < h.n; ++v) wit.w[v] = p.p[v] + shift;
    validate_farkas(h, wit);
    return wit;
}

Rational perturbation_epsilon_bound(const WeightAssignment& w, const Perturbation& p) {
    if (w.w.size() != p.p.size())
        throw PreconditionError("weight/perturbation size mismatch");
    Rational bound(0);
    bool any = false;
    for (size_t v = 0; v < p.p.size(); ++v) {
        if (p.p[v] == 0) continue;
        Rational ratio = w.w[v] / p.p[v];
        if (ratio < 0) ratio = -ratio;
        if (!any || ratio < bound) bound = ratio;
        any = true;
    }
    if (!any) throw PreconditionError("perturbation is identically zero");
    return bound;
}

WeightAssignment apply_perturbation(const WeightAssignment& w, const Perturbation& p,
                                    const Rational& eps) {
    const Rational bound = perturbation_epsilon_bound(w, p);
    if (!(eps > 0) || !(eps < bound))
        throw EpsilonTooLargeError("epsilon must satisfy 0 < eps < " + rational_to_string(bound) +
                                   ", got " + rational_to_string(eps));
    WeightAssignment out;
    out.w.resize(w.w.size());
    Rational sum(0);
    for (size_t v = 0; v < w.w.size(); ++v) {
        out.w[v] = w.w[v] + eps * p.p[v];
        internal_check(out.w[v] >= 0, "perturbed weight went negative");
        sum += out.w[v];
    }
    internal_check(sum == 1, "perturbed weights do not sum to 1");
    return out;
}

Rational default_perturbation_epsilon(const WeightAssignment& w, const Perturbation& p) {
    return perturbation_epsilon_bound(w, p) / 2;
}

void validate_matching(const Hypergraph& h, const FractionalMatching& m, bool require_perfect) {
    internal_check(m.m.size() == h.edges.size(), "matching length mismatch");
    for (const auto& x : m.m) internal_check(x >= 0, "matching entry negative");
    std::vector<Rational> load(h.n, Rational(0));
    for (size_t e = 0; e < h.edges.size(); ++e)
        for (int v : h.edges[e]) load[v] += m.m[e];
    for (int v = 0; v < h.n; ++v) {
        if (require_perfect)
            internal_check(load[v] == 1, "matching is not perfect at a vertex");
        else
            internal_check(load[v] <= 1, "matching overloads a vertex");
    }
}

void validate_cover(const Hypergraph& h, const FractionalCover& t) {
    internal_check(t.t.size() == static_cast<size_t>(h.n), "cover length mismatch");
    for (const auto& x : t.t) internal_check(x >= 0, "cover entry negative");
    for (const auto& e : h.edges) {
        Rational sum(0);
        for (int v : e) sum += t.t[v];
        internal_check(sum >= 1, "cover misses an edge");
    }
}

void validate_perturbation(const Hypergraph& h, const Perturbation& p) {
    internal_check(p.p.size() == static_cast<size_t>(h.n), "perturbation length mismatch");
    Rational sum(0);
    for (const auto& x : p.p) sum += x;
    internal_check(sum == 0, "perturbation does not sum to zero");
    for (const auto& e : h.edges) {
        Rational pe(0);
        for (int v : e) pe += p.p[v];
        internal_check(pe < 0, "perturbation is not strictly negative on an edge");
    }
}

void validate_farkas(const Hypergraph& h, const FarkasWitness& w) {
    internal_check(w.w.size() == static_cast<size_t>(h.n), "witness length mismatch");
    Rational total(0);
    for (const auto& x : w.w) total += x;
    internal_check(total > 0, "witness has nonpositive total");
    for (const auto& e : h.edges) {
        Rational we(0);
        for (int v : e) we += w.w[v];
        internal_check(we <= 0, "witness is positive on an edge");
    }
}

namespace {

nlohmann::json certificate_json(const char* kind, const std::vector<Rational>& values,
                                const Rational& objective) {
    nlohmann::json j;
    j["kind"] = kind;
    j["values"] = nlohmann::json::array();
    for (const auto& x : values) j["values"].push_back(rational_to_string(x));
    j["objective"] = rational_to_string(objective);
    return j;
}

} // namespace

std::string matching_certificate_json(const Rational& value, const FractionalMatching& m) {
    return certificate_json("matching", m.m, value).dump(2);
}

std::string cover_certificate_json(const Rational& value, const FractionalCover& t) {
    return certificate_json("cover", t.t, value).dump(2);
}

std::string perturbation_certificate_json(const Perturbation& p) {
    return certificate_json("perturbation", p.p, Rational(0)).dump(2);
}

std::string farkas_certificate_json(const FarkasWitness& w) {
    Rational total(0);
    for (const auto& x : w.w) total += x;
    return certificate_json("farkas", w.w, total).dump(2);
}

} // namespace monocomp
