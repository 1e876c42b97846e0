#include "monocomp/hypergraph.hpp"

#include "monocomp/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace monocomp {

int Hypergraph::num_color_classes() const {
    if (!colored()) return 0;
    std::set<int> distinct(colors.begin(), colors.end());
    return static_cast<int>(distinct.size());
}

void Hypergraph::validate() const {
    internal_check(n >= 0, "negative vertex count");
    if (colored())
        internal_check(colors.size() == edges.size(), "color list length mismatch");
    if (!labels.empty())
        internal_check(static_cast<int>(labels.size()) == n, "label list length mismatch");
    for (const auto& e : edges) {
        internal_check(!e.empty(), "empty edge");
        internal_check(std::is_sorted(e.begin(), e.end()), "unsorted edge");
        internal_check(std::adjacent_find(e.begin(), e.end()) == e.end(), "repeated vertex in edge");
        internal_check(e.front() >= 0 && e.back() < n, "vertex id out of range");
    }
    if (colored()) {
        // proper coloring: same-colored edges pairwise disjoint
        std::map<int, std::vector<char>> seen;
        for (size_t i = 0; i < edges.size(); ++i) {
            auto& mask = seen[colors[i]];
            if (mask.empty()) mask.assign(n, 0);
            for (int v : edges[i]) {
                internal_check(!mask[v], "color class is not a matching");
                mask[v] = 1;
            }
        }
    }
}

HypergraphStats properties(const Hypergraph& h) {
    HypergraphStats out;
    for (const auto& e : h.edges)
        out.rank = std::max(out.rank, static_cast<int>(e.size()));
    out.proportional_rank = h.n > 0 ? Rational(out.rank, h.n) : Rational(0);
    out.num_color_classes = h.num_color_classes();

    // closed neighborhoods; N[v] contains v even for isolated vertices
    std::vector<std::set<int>> nbhd(h.n);
    for (int v = 0; v < h.n; ++v) nbhd[v].insert(v);
    for (const auto& e : h.edges)
        for (int v : e) nbhd[v].insert(e.begin(), e.end());
    out.delta_star = h.n == 0 ? 0 : h.n;
    for (int v = 0; v < h.n; ++v)
        out.delta_star = std::min(out.delta_star, static_cast<int>(nbhd[v].size()));
    return out;
}

bool chromatic_witness(const Hypergraph& h, int count) {
    std::vector<std::set<std::vector<int>>> distinct(h.n);
    for (const auto& e : h.edges)
        for (int v : e) distinct[v].insert(e);
    for (int v = 0; v < h.n; ++v)
        if (static_cast<int>(distinct[v].size()) >= count) return true;
    return count <= 0;
}

WeightAssignment WeightAssignment::uniform(int n) {
    WeightAssignment out;
    out.w.assign(n, Rational(1, n));
    return out;
}

void WeightAssignment::validate() const {
    Rational sum(0);
    for (const auto& x : w) {
        if (x < 0) throw PreconditionError("weight assignment has a negative entry");
        sum += x;
    }
    if (sum != 1) throw PreconditionError("weight assignment does not sum to 1");
}

Rational WeightAssignment::edge_weight(const std::vector<int>& edge) const {
    Rational sum(0);
    for (int v : edge) sum += w[v];
    return sum;
}

Hypergraph top_level(const Hypergraph& h, const WeightAssignment& w) {
    if (static_cast<int>(w.w.size()) != h.n)
        throw PreconditionError("weight assignment size does not match hypergraph");
    Hypergraph out;
    out.n = h.n;
    out.labels = h.labels;
    if (h.edges.empty()) return out;

    std::vector<Rational> weights(h.edges.size());
    Rational best = w.edge_weight(h.edges.front());
    for (size_t i = 0; i < h.edges.size(); ++i) {
        weights[i] = w.edge_weight(h.edges[i]);
        if (weights[i] > best) best = weights[i];
    }
    for (size_t i = 0; i < h.edges.size(); ++i) {
        if (weights[i] == best) {
            out.edges.push_back(h.edges[i]);
            if (h.colored()) out.colors.push_back(h.colors[i]);
        }
    }
    return out;
}

Hypergraph plane_minus_class_minus_set(const AffinePlane& plane, int deleted_class,
                                       const std::vector<int>& s) {
    const int q = plane.q;
    std::vector<char> dead(plane.num_points(), 0);
    for (int v : s) {
        internal_check(v >= 0 && v < plane.num_points(), "deleted point out of range");
        dead[v] = 1;
    }

    std::vector<int> new_id(plane.num_points(), -1);
    Hypergraph out;
    for (int v = 0; v < plane.num_points(); ++v) {
        if (!dead[v]) {
            new_id[v] = out.n++;
            out.labels.emplace_back(plane.point_row(v), plane.point_col(v));
        }
    }

    for (int cls = 0; cls <= q; ++cls) {
        if (cls == deleted_class) continue;
        for (int li : plane.classes[cls]) {
            std::vector<int> e;
            for (int v : plane.lines[li])
                if (!dead[v]) e.push_back(new_id[v]);
            if (e.empty()) continue; // deletion emptied this line
            std::sort(e.begin(), e.end());
            out.edges.push_back(std::move(e));
            out.colors.push_back(cls);
        }
    }
    out.validate();
    return out;
}

std::vector<int> hr_deleted_set(int r) {
    std::vector<int> s;
    for (int j = 0; j <= r - 2; ++j) s.push_back((r - 1) * r + j); // last row, cols 0..r-2
    s.push_back((r - 2) * r + (r - 1));                           // row r-2, last col
    return s;
}

Hypergraph build_hr(int r, int cap) {
    if (r < 3) throw PreconditionError("hr requires r >= 3");
    const AffinePlane plane = affine_plane(r, cap);
    Hypergraph h = plane_minus_class_minus_set(plane, /*deleted_class=*/r, hr_deleted_set(r));
    internal_check(h.n == r * r - r, "hr vertex count");
    return h;
}

std::vector<int> hr_adjustment_set_labels_to_ids(const Hypergraph& hr, int r) {
    std::set<std::pair<int, int>> wanted;
    for (int j = 0; j <= r - 2; ++j) wanted.insert({r - 2, j});
    wanted.insert({r - 3, r - 1});
    std::vector<int> ids;
    for (int v = 0; v < hr.n; ++v)
        if (wanted.count(hr.labels[v])) ids.push_back(v);
    internal_check(static_cast<int>(ids.size()) == r, "adjustment set must have r vertices");
    return ids;
}

Hypergraph build_h3_line_deleted() {
    const AffinePlane plane = affine_plane(3);
    // delete the vertical class and all of the last row
    std::vector<int> s = {plane.point_id(2, 0), plane.point_id(2, 1), plane.point_id(2, 2)};
    return plane_minus_class_minus_set(plane, /*deleted_class=*/3, s);
}

Hypergraph to_hypergraph(const AffinePlane& plane, const std::vector<int>& skip_classes) {
    std::set<int> skip(skip_classes.begin(), skip_classes.end());
    Hypergraph out;
    out.n = plane.num_points();
    for (int v = 0; v < out.n; ++v)
        out.labels.emplace_back(plane.point_row(v), plane.point_col(v));
    int color = 0;
    for (int cls = 0; cls <= plane.q; ++cls) {
        if (skip.count(cls)) continue;
        for (int li : plane.classes[cls]) {
            out.edges.push_back(plane.lines[li]);
            out.colors.push_back(color);
        }
        ++color;
    }
    out.validate();
    return out;
}

Hypergraph to_hypergraph(const RbibdDesign& design) {
    Hypergraph out;
    out.n = design.v;
    for (size_t cls = 0; cls < design.classes.size(); ++cls) {
        for (int bi : design.classes[cls]) {
            out.edges.push_back(design.blocks[bi]);
            out.colors.push_back(static_cast<int>(cls));
        }
    }
    out.validate();
    return out;
}

std::string write_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << "H " << h.n << " " << h.edges.size() << "\n";
    for (size_t i = 0; i < h.edges.size(); ++i) {
        out << (h.colored() ? h.colors[i] : -1);
        for (int v : h.edges[i]) out << " " << v;
        out << "\n";
    }
    return out.str();
}

Hypergraph read_hypergraph(std::istream& in) {
    std::string tag;
    int n = 0, m = 0;
    if (!(in >> tag >> n >> m) || tag != "H")
        throw ParseError("expected hypergraph header 'H <n> <m>'");
    if (n < 0 || m < 0) throw ParseError("negative counts in hypergraph header");

    Hypergraph h;
    h.n = n;
    bool any_colored = false, any_uncolored = false;
    std::vector<int> colors;
    for (int i = 0; i < m; ++i) {
        int color = 0;
        if (!(in >> color)) throw ParseError("truncated hypergraph edge line");
        (color == -1 ? any_uncolored : any_colored) = true;
        colors.push_back(color);

        std::string rest;
        std::getline(in, rest);
        std::istringstream ls(rest);
        std::vector<int> e;
        int v;
        while (ls >> v) {
            if (v < 0 || v >= n) throw ParseError("vertex id out of range in hypergraph edge");
            e.push_back(v);
        }
        if (e.empty()) throw ParseError("empty edge in hypergraph file");
        std::sort(e.begin(), e.end());
        h.edges.push_back(std::move(e));
    }
    if (any_colored && any_uncolored)
        throw ParseError("hypergraph mixes colored and uncolored edges");
    if (any_colored) h.colors = std::move(colors);
    h.validate();
    return h;
}

Hypergraph read_hypergraph_string(const std::string& text) {
    std::istringstream in(text);
    return read_hypergraph(in);
}

} // namespace monocomp
