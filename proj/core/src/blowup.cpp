#include "monocomp/blowup.hpp"

#include "monocomp/colorgraph.hpp"
#include "monocomp/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

namespace monocomp {

long long BlowupPlan::total() const {
    long long sum = 0;
    for (long long s : class_sizes) sum += s;
    return sum;
}

void BlowupPlan::validate() const {
    host.validate();
    internal_check(host.colored(), "blow-up host must carry an edge coloring");
    internal_check(class_sizes.size() == static_cast<size_t>(host.n),
                   "one class size per host vertex required");
    for (long long s : class_sizes) internal_check(s >= 1, "class sizes must be positive");
    // colors contiguous 0..r-1 so the blown-up graph is r-colored
    int max_color = -1;
    std::set<int> seen;
    for (int c : host.colors) {
        internal_check(c >= 0, "negative edge color");
        max_color = std::max(max_color, c);
        seen.insert(c);
    }
    internal_check(static_cast<int>(seen.size()) == max_color + 1,
                   "host colors must be contiguous 0..r-1");
}

long long ColoredGraph::class_offset(int v) const {
    internal_check(quotient.has_value(), "class_offset needs the quotient form");
    long long off = 0;
    for (int i = 0; i < v; ++i) off += quotient->class_sizes[i];
    return off;
}

namespace {

// host-level pair/vertex colors under the lowest-color tie-break
struct HostColors {
    int n = 0;
    std::vector<int> pair_color;  // n*n, -1 when the pair shares no edge
    std::vector<int> vertex_color; // -1 when the vertex lies in no edge

    explicit HostColors(const Hypergraph& h) : n(h.n), pair_color(h.n * h.n, -1),
                                               vertex_color(h.n, -1) {
        for (size_t ei = 0; ei < h.edges.size(); ++ei) {
            const int c = h.colors[ei];
            const auto& e = h.edges[ei];
            for (size_t i = 0; i < e.size(); ++i) {
                int& vc = vertex_color[e[i]];
                if (vc < 0 || c < vc) vc = c;
                for (size_t j = i + 1; j < e.size(); ++j) {
                    int& pc = pair_color[e[i] * n + e[j]];
                    if (pc < 0 || c < pc) pc = c;
                }
            }
        }
        // mirror for convenience
        for (int u = 0; u < n; ++u)
            for (int w = u + 1; w < n; ++w) pair_color[w * n + u] = pair_color[u * n + w];
    }
};

} // namespace

ColoredGraph blow_up(BlowupPlan plan) {
    plan.validate();
    ColoredGraph g;
    g.num_colors = plan.host.num_color_classes();
    g.n = plan.total();
    g.quotient = std::move(plan);

    if (g.n <= kMaterializeLimit) {
        const BlowupPlan& p = *g.quotient;
        const HostColors hc(p.host);
        std::vector<long long> offset(p.host.n + 1, 0);
        for (int v = 0; v < p.host.n; ++v) offset[v + 1] = offset[v] + p.class_sizes[v];

        for (int u = 0; u < p.host.n; ++u) {
            // internal clique of X_u, colored by the lowest color through u
            if (hc.vertex_color[u] >= 0) {
                for (long long x = offset[u]; x < offset[u + 1]; ++x)
                    for (long long y = x + 1; y < offset[u + 1]; ++y)
                        g.edge_list.push_back({hc.vertex_color[u], x, y});
            }
            for (int w = u + 1; w < p.host.n; ++w) {
                const int c = hc.pair_color[u * hc.n + w];
                if (c < 0) continue;
                for (long long x = offset[u]; x < offset[u + 1]; ++x)
                    for (long long y = offset[w]; y < offset[w + 1]; ++y)
                        g.edge_list.push_back({c, x, y});
            }
        }
        std::sort(g.edge_list.begin(), g.edge_list.end());
        g.materialized = true;
    }

    analyze(g); // cross-checks quotient vs materialized when both exist
    return g;
}

ColoredGraph uniform_blowup(const Hypergraph& host, long long n) {
    if (host.n <= 0) throw PreconditionError("blow-up host has no vertices");
    if (n <= 0 || n % host.n != 0)
        throw NotDivisibleError("n = " + std::to_string(n) + " is not a positive multiple of " +
                                std::to_string(host.n));
    BlowupPlan plan;
    plan.host = host;
    plan.class_sizes.assign(host.n, n / host.n);
    return blow_up(std::move(plan));
}

ColoredGraph weighted_blowup(const Hypergraph& host, const WeightAssignment& w, long long n) {
    if (static_cast<int>(w.w.size()) != host.n)
        throw PreconditionError("weight assignment size does not match host");
    w.validate();
    for (const auto& x : w.w)
        if (!(x > 0)) throw PreconditionError("weighted blow-up requires strictly positive weights");
    if (n <= 0) throw PreconditionError("n must be positive");

    // largest-remainder apportionment of n among the classes
    std::vector<long long> sizes(host.n);
    std::vector<std::pair<Rational, int>> remainders; // (fractional part, vertex id)
    long long assigned = 0;
    for (int v = 0; v < host.n; ++v) {
        const Rational target = w.w[v] * n;
        const Int fl = numerator(target) / denominator(target); // exact floor, target >= 0
        sizes[v] = fl.convert_to<long long>();
        assigned += sizes[v];
        remainders.emplace_back(target - Rational(fl), v);
    }
    long long leftover = n - assigned;
    internal_check(leftover >= 0 && leftover <= host.n, "apportionment leftover out of range");
    std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first; // biggest fractional part first
        return a.second < b.second;                        // ties to the lowest vertex id
    });
    for (long long i = 0; i < leftover; ++i) ++sizes[remainders[i].second];

    for (int v = 0; v < host.n; ++v)
        if (sizes[v] == 0)
            throw PreconditionError("n = " + std::to_string(n) +
                                    " is too small: class for vertex " + std::to_string(v) +
                                    " would be empty");
    BlowupPlan plan;
    plan.host = host;
    plan.class_sizes = std::move(sizes);
    return blow_up(std::move(plan));
}

ColoredGraph gys_construction(int r, long long n, int cap) {
    const AffinePlane plane = affine_plane(r, cap);
    if (n <= 0 || n % (static_cast<long long>(r) * r) != 0)
        throw NotDivisibleError("r^2 | n required: n = " + std::to_string(n) + ", r^2 = " +
                                std::to_string(r * r));
    // drop the vertical class; the r slope classes become the r colors
    ColoredGraph g = uniform_blowup(to_hypergraph(plane, {r}), n);

    const ComponentReport rep = analyze(g);
    const long long want_delta = n - (static_cast<long long>(r) - 1) * (n / (r * r)) - 1;
    internal_check(rep.min_degree == want_delta, "gys construction: wrong minimum degree");
    internal_check(rep.max_component == n / r, "gys construction: wrong largest component");
    return g;
}

BlowupPlan perturbed_plan(int r, long long c, long long n, int cap) {
    if (r < 3) throw PreconditionError("precondition violated: r >= 3");
    if (c < 1) throw PreconditionError("precondition violated: c >= 1");
    const long long rr = static_cast<long long>(r) * (r - 1);
    if (n <= 0 || n % rr != 0)
        throw PreconditionError("precondition violated: (r^2 - r) | n");
    const long long floor_n = static_cast<long long>(r) * (r - 1) *
                              ((static_cast<long long>(r) - 1) * (r - 2) + 1) * c;
    if (n < floor_n)
        throw PreconditionError("precondition violated: n < r(r-1)((r-1)(r-2)+1)c  (n = " +
                                std::to_string(n) + ", bound = " + std::to_string(floor_n) + ")");

    BlowupPlan plan;
    plan.host = build_hr(r, cap);
    const std::vector<int> adjust = hr_adjustment_set_labels_to_ids(plan.host, r);
    const long long base = n / rr;
    plan.class_sizes.assign(plan.host.n, base - c);
    for (int v : adjust) plan.class_sizes[v] = base + (r - 2) * c;

    long long total = 0;
    for (long long s : plan.class_sizes) total += s;
    internal_check(total == n, "perturbed plan sizes do not sum to n");
    return plan;
}

ColoredGraph perturbed_graph(int r, long long c, long long n, int cap) {
    ColoredGraph g = blow_up(perturbed_plan(r, c, n, cap));

    const ComponentReport rep = analyze(g);
    const long long base = n / (static_cast<long long>(r) * (r - 1));
    const long long want_delta = (n - 1) - (r - 2) * base - c;
    const long long want_comp = n / (r - 1) - c;
    internal_check(rep.min_degree == want_delta, "perturbed graph: wrong minimum degree");
    internal_check(rep.max_component == want_comp, "perturbed graph: wrong largest component");
    return g;
}

std::string write_graph(const ColoredGraph& g) {
    internal_check(g.materialized, "write_graph needs a materialized graph");
    std::ostringstream out;
    out << "G " << g.n << " " << g.num_colors << "\n";
    for (const auto& e : g.edge_list) out << e[0] << " " << e[1] << " " << e[2] << "\n";
    return out.str();
}

ColoredGraph read_graph(std::istream& in) {
    std::string tag;
    long long n = 0;
    int r = 0;
    if (!(in >> tag >> n >> r) || tag != "G")
        throw ParseError("expected graph header 'G <n> <r>'");
    if (n < 0 || r < 0) throw ParseError("negative counts in graph header");

    ColoredGraph g;
    g.n = n;
    g.num_colors = r;
    g.materialized = true;
    std::vector<long long> nums;
    std::string token;
    while (in >> token) {
        try {
            nums.push_back(std::stoll(token));
        } catch (const std::exception&) {
            throw ParseError("non-numeric token '" + token + "' in graph file");
        }
    }
    if (nums.size() % 3 != 0) throw ParseError("truncated edge line in graph file");
    std::set<std::pair<long long, long long>> seen;
    for (size_t i = 0; i < nums.size(); i += 3) {
        const long long color = nums[i];
        long long u = nums[i + 1], v = nums[i + 2];
        if (color < 0 || color >= r) throw ParseError("edge color out of range");
        if (u < 0 || u >= n || v < 0 || v >= n || u == v) throw ParseError("bad edge endpoints");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) throw ParseError("repeated edge in graph file");
        g.edge_list.push_back({color, u, v});
    }
    std::sort(g.edge_list.begin(), g.edge_list.end());
    return g;
}

ColoredGraph read_graph_string(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

} // namespace monocomp
