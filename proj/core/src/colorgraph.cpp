#include "monocomp/colorgraph.hpp"

#include "monocomp/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace monocomp {

namespace {

struct Dsu {
    std::vector<int> parent;

    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// analysis of the quotient form: degrees and components from class sizes
struct QuotientAudit {
    std::vector<long long> class_degree;              // degree of every vertex of X_v
    std::vector<std::vector<long long>> per_color;    // component orders, descending
};

QuotientAudit quotient_audit(const BlowupPlan& plan, int num_colors) {
    const Hypergraph& h = plan.host;
    const int hn = h.n;

    // lowest-color adjacency between host vertices / inside host classes
    std::vector<int> pair_color(static_cast<size_t>(hn) * hn, -1);
    std::vector<int> vertex_color(hn, -1);
    for (size_t ei = 0; ei < h.edges.size(); ++ei) {
        const int c = h.colors[ei];
        const auto& e = h.edges[ei];
        for (size_t i = 0; i < e.size(); ++i) {
            int& vc = vertex_color[e[i]];
            if (vc < 0 || c < vc) vc = c;
            for (size_t j = i + 1; j < e.size(); ++j) {
                int& pc = pair_color[static_cast<size_t>(e[i]) * hn + e[j]];
                if (pc < 0 || c < pc) pc = c;
            }
        }
    }

    QuotientAudit out;
    out.class_degree.assign(hn, 0);
    for (int u = 0; u < hn; ++u) {
        long long d = vertex_color[u] >= 0 ? plan.class_sizes[u] - 1 : 0;
        for (int w = 0; w < hn; ++w) {
            if (w == u) continue;
            const auto idx = static_cast<size_t>(std::min(u, w)) * hn + std::max(u, w);
            if (pair_color[idx] >= 0) d += plan.class_sizes[w];
        }
        out.class_degree[u] = d;
    }

    out.per_color.assign(num_colors, {});
    for (int c = 0; c < num_colors; ++c) {
        Dsu dsu(hn);
        std::vector<char> active(hn, 0);
        for (int u = 0; u < hn; ++u)
            for (int w = u + 1; w < hn; ++w)
                if (pair_color[static_cast<size_t>(u) * hn + w] == c) {
                    dsu.unite(u, w);
                    active[u] = active[w] = 1;
                }
        // a class whose internal clique carries color c forms (or joins) a
        // component even when no cross pair of color c touches it
        for (int u = 0; u < hn; ++u)
            if (vertex_color[u] == c && plan.class_sizes[u] >= 2) active[u] = 1;

        std::map<int, long long> order;
        for (int u = 0; u < hn; ++u)
            if (active[u]) order[dsu.find(u)] += plan.class_sizes[u];
        for (const auto& [root, sz] : order) out.per_color[c].push_back(sz);
        std::sort(out.per_color[c].rbegin(), out.per_color[c].rend());
    }
    return out;
}

struct MaterializedAudit {
    std::vector<long long> degree;
    std::vector<std::vector<long long>> per_color;
};

MaterializedAudit materialized_audit(const ColoredGraph& g) {
    const int n = static_cast<int>(g.n);
    MaterializedAudit out;
    out.degree.assign(n, 0);
    for (const auto& e : g.edge_list) {
        ++out.degree[static_cast<int>(e[1])];
        ++out.degree[static_cast<int>(e[2])];
    }
    out.per_color.assign(g.num_colors, {});
    for (int c = 0; c < g.num_colors; ++c) {
        Dsu dsu(n);
        std::vector<char> active(n, 0);
        for (const auto& e : g.edge_list) {
            if (e[0] != c) continue;
            const int u = static_cast<int>(e[1]), v = static_cast<int>(e[2]);
            dsu.unite(u, v);
            active[u] = active[v] = 1;
        }
        std::map<int, long long> order;
        for (int v = 0; v < n; ++v)
            if (active[v]) ++order[dsu.find(v)];
        for (const auto& [root, sz] : order) out.per_color[c].push_back(sz);
        std::sort(out.per_color[c].rbegin(), out.per_color[c].rend());
    }
    return out;
}

} // namespace

ComponentReport analyze(const ColoredGraph& g) {
    ComponentReport rep;
    rep.n = g.n;
    rep.r = g.num_colors;

    std::optional<QuotientAudit> qa;
    std::optional<MaterializedAudit> ma;
    if (g.quotient) qa = quotient_audit(*g.quotient, g.num_colors);
    if (g.materialized) ma = materialized_audit(g);
    internal_check(qa || ma, "graph has neither quotient nor materialized form");

    if (qa && ma) {
        // the two representations must agree vertex by vertex and color by color
        const auto& sizes = g.quotient->class_sizes;
        long long off = 0;
        for (size_t v = 0; v < sizes.size(); ++v) {
            for (long long x = off; x < off + sizes[v]; ++x)
                internal_check(ma->degree[static_cast<size_t>(x)] == qa->class_degree[v],
                               "quotient/materialized degree mismatch");
            off += sizes[v];
        }
        internal_check(qa->per_color == ma->per_color,
                       "quotient/materialized component orders mismatch");
    }

    if (qa) {
        rep.per_color = qa->per_color;
        rep.min_degree = g.n > 0 ? *std::min_element(qa->class_degree.begin(),
                                                     qa->class_degree.end())
                                 : 0;
    } else {
        rep.per_color = ma->per_color;
        rep.min_degree = g.n > 0 ? *std::min_element(ma->degree.begin(), ma->degree.end()) : 0;
    }
    rep.max_component = 0;
    for (const auto& orders : rep.per_color)
        if (!orders.empty()) rep.max_component = std::max(rep.max_component, orders.front());
    return rep;
}

std::string report_json(const ComponentReport& rep) {
    nlohmann::json j;
    j["n"] = rep.n;
    j["r"] = rep.r;
    j["delta"] = rep.min_degree;
    j["max_component"] = rep.max_component;
    j["per_color_component_orders"] = rep.per_color;
    return j.dump(2);
}

SimpleGraph complete_graph(int n) {
    SimpleGraph g;
    g.n = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
    return g;
}

SimpleGraph strip_colors(const ColoredGraph& g) {
    internal_check(g.materialized, "strip_colors needs a materialized graph");
    SimpleGraph out;
    out.n = static_cast<int>(g.n);
    for (const auto& e : g.edge_list)
        out.edges.emplace_back(static_cast<int>(e[1]), static_cast<int>(e[2]));
    return out;
}

long long mc_oracle(const SimpleGraph& g, int colors, long long cap) {
    if (colors < 1) throw PreconditionError("mc oracle requires at least one color");
    const int m = static_cast<int>(g.edges.size());

    // colorings required: colors^m, rejected beyond the cap
    long long required = 1;
    for (int i = 0; i < m; ++i) {
        if (required > cap / colors) {
            throw TooLargeError("enumeration needs " + std::to_string(colors) + "^" +
                                std::to_string(m) + " colorings, above the cap " +
                                std::to_string(cap));
        }
        required *= colors;
    }
    if (required > cap)
        throw TooLargeError("enumeration needs " + std::to_string(required) +
                            " colorings, above the cap " + std::to_string(cap));
    if (m == 0) return 0;

    // fix the first edge's color (color permutations preserve the profile)
    // and walk the rest in mixed-radix order
    std::vector<int> assign(m, 0);
    long long best = g.n + 1;
    while (true) {
        long long worst = 0;
        for (int c = 0; c < colors && worst <= g.n; ++c) {
            Dsu dsu(g.n);
            std::vector<char> active(g.n, 0);
            for (int i = 0; i < m; ++i) {
                if (assign[i] != c) continue;
                dsu.unite(g.edges[i].first, g.edges[i].second);
                active[g.edges[i].first] = active[g.edges[i].second] = 1;
            }
            std::vector<long long> order(g.n, 0);
            for (int v = 0; v < g.n; ++v)
                if (active[v]) ++order[dsu.find(v)];
            for (int v = 0; v < g.n; ++v) worst = std::max(worst, order[v]);
        }
        best = std::min(best, worst);

        int pos = m - 1;
        while (pos >= 1 && assign[pos] == colors - 1) assign[pos--] = 0;
        if (pos < 1) break; // first edge stays at color 0
        ++assign[pos];
    }
    return best;
}

BoundsReport known_bounds(int r, long long n, const RbibdDesign* rbibd) {
    if (r < 3) throw PreconditionError("bounds require r >= 3");

    BoundsReport rep;
    rep.r = r;
    rep.n = n;
    for (int q = r - 1; q >= 2; --q) {
        int p = 0, k = 0;
        if (prime_power(q, p, k)) {
            rep.q = q;
            break;
        }
    }
    internal_check(rep.q >= 2, "no prime power below r");
    if (n < static_cast<long long>(rep.q) * rep.q)
        throw PreconditionError("bounds require n >= q^2 (q = " + std::to_string(rep.q) + ")");

    rep.gyarfas_lower = Rational(Int(n), Int(r - 1));
    // n / (r - 1 - 1/(r-1)) = n (r-1) / ((r-1)^2 - 1)
    rep.furedi_lower = Rational(Int(n) * (r - 1), Int(r - 1) * (r - 1) - 1);
    rep.furedi_upper = (n + rep.q - 1) / rep.q;

    int p = 0, k = 0;
    if (prime_power(r - 1, p, k)) {
        rep.plane_status = "exists";
        rep.furedi_applicable = false;
    } else if (r - 1 == 6 || r - 1 == 10) {
        // the two orders whose non-existence is an established fact
        rep.plane_status = "known_nonexistent";
        rep.furedi_applicable = true;
    } else {
        rep.plane_status = "unknown";
        rep.furedi_applicable = true;
    }
    if (rep.furedi_applicable)
        internal_check(rep.furedi_lower <= Rational(Int(rep.furedi_upper)),
                       "bounds window is empty");

    if (rbibd != nullptr) {
        DesignCheck chk = verify_design(rbibd->blocks, rbibd->v, rbibd->k, &rbibd->classes);
        if (!chk.all_ok())
            throw NotResolvableError("provided design is not a resolvable (v,k,1) design");
        const int classes = (rbibd->v - 1) / (rbibd->k - 1);
        if (classes == r && n % rbibd->v == 0) {
            rep.rbibd_upper = Rational(Int(n) * rbibd->k, Int(rbibd->v));
            rep.rbibd_v = rbibd->v;
            rep.rbibd_k = rbibd->k;
            rep.rbibd_t = rbibd->t_parameter();
        }
    }
    return rep;
}

std::string bounds_json(const BoundsReport& rep) {
    nlohmann::json j;
    j["r"] = rep.r;
    j["n"] = rep.n;
    j["gyarfas_lower"] = rational_to_string(rep.gyarfas_lower);
    j["q"] = rep.q;
    j["furedi_lower"] = rational_to_string(rep.furedi_lower);
    j["furedi_upper"] = rep.furedi_upper;
    j["furedi_applicable"] = rep.furedi_applicable;
    j["plane_of_order_r_minus_1"] = rep.plane_status;
    if (rep.rbibd_upper) {
        j["rbibd_upper"] = rational_to_string(*rep.rbibd_upper);
        j["rbibd_params"] = {{"v", rep.rbibd_v}, {"k", rep.rbibd_k}, {"t", rep.rbibd_t}};
    } else {
        j["rbibd_upper"] = nullptr;
    }
    return j.dump(2);
}

ColoredGraph design_coloring(const RbibdDesign& d, long long n) {
    DesignCheck chk = verify_design(d.blocks, d.v, d.k, &d.classes);
    if (!chk.all_ok())
        throw NotResolvableError("design is not a resolvable (v,k,1) design");
    if (n <= 0 || n % d.v != 0)
        throw NotDivisibleError("v | n required: n = " + std::to_string(n) + ", v = " +
                                std::to_string(d.v));
    ColoredGraph g = uniform_blowup(to_hypergraph(d), n);

    // pair coverage makes the blow-up complete; components are block blow-ups
    const ComponentReport rep = analyze(g);
    internal_check(rep.min_degree == n - 1, "design blow-up is not complete");
    internal_check(rep.max_component == n / d.v * d.k,
                   "design blow-up: wrong largest component");
    return g;
}

} // namespace monocomp
