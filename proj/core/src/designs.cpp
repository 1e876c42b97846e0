#include "monocomp/designs.hpp"

#include "monocomp/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace monocomp {

AffinePlane affine_plane(int q, int cap) {
    const Field f = Field::make(q, cap);

    AffinePlane plane;
    plane.q = q;
    plane.lines.reserve(q * (q + 1));
    plane.classes.assign(q + 1, {});

    // slope classes: class s holds the q lines y = element(s) * x + b
    for (int s = 0; s < q; ++s) {
        const int m = s;
        for (int b = 0; b < q; ++b) {
            std::vector<int> line;
            line.reserve(q);
            for (int x = 0; x < q; ++x) {
                const int y = f.add(f.mul(m, x), b);
                line.push_back(plane.point_id(y, x));
            }
            std::sort(line.begin(), line.end());
            plane.classes[s].push_back(static_cast<int>(plane.lines.size()));
            plane.lines.push_back(std::move(line));
        }
    }
    // vertical class, listed last: x = c
    for (int c = 0; c < q; ++c) {
        std::vector<int> line;
        line.reserve(q);
        for (int y = 0; y < q; ++y) line.push_back(plane.point_id(y, c));
        plane.classes[q].push_back(static_cast<int>(plane.lines.size()));
        plane.lines.push_back(std::move(line));
    }

    // construction-time self check: every pair exactly once, classes partition
    DesignCheck chk = verify_design(plane.lines, q * q, q, &plane.classes);
    internal_check(chk.all_ok(), "affine plane axioms failed for q=" + std::to_string(q));
    return plane;
}

DesignCheck verify_design(const std::vector<std::vector<int>>& blocks, int v, int k,
                          const std::vector<std::vector<int>>* classes) {
    DesignCheck out;

    out.uniform = !blocks.empty();
    for (const auto& b : blocks)
        if (static_cast<int>(b.size()) != k) out.uniform = false;
    out.block_size = k;

    // pair coverage multiset
    std::map<std::pair<int, int>, int> cover;
    for (const auto& b : blocks)
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = i + 1; j < b.size(); ++j) {
                auto pr = std::minmax(b[i], b[j]);
                ++cover[{pr.first, pr.second}];
            }
    out.pair_coverage_exact = true;
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) {
            auto it = cover.find({a, b});
            const int c = it == cover.end() ? 0 : it->second;
            if (c == 0) out.uncovered_pairs.emplace_back(a, b);
            if (c > 1) out.overcovered_pairs.emplace_back(a, b);
        }
    out.pair_coverage_exact = out.uncovered_pairs.empty() && out.overcovered_pairs.empty();

    // resolution: each provided class must partition [0, v)
    if (classes != nullptr) {
        out.num_classes = static_cast<int>(classes->size());
        out.resolvable = !classes->empty();
        std::set<int> used_blocks;
        for (const auto& cls : *classes) {
            std::vector<char> seen(v, 0);
            int covered = 0;
            for (int bi : cls) {
                if (bi < 0 || bi >= static_cast<int>(blocks.size()) || !used_blocks.insert(bi).second) {
                    out.resolvable = false;
                    break;
                }
                for (int p : blocks[bi]) {
                    if (p < 0 || p >= v || seen[p]) {
                        out.resolvable = false;
                        break;
                    }
                    seen[p] = 1;
                    ++covered;
                }
            }
            if (covered != v) out.resolvable = false;
        }
        if (used_blocks.size() != blocks.size()) out.resolvable = false;
    }
    return out;
}

RbibdDesign kirkman_15() {
    // The cyclic resolvable triple system on 15 points, stored verbatim:
    // points 0..6 and 7..13 are two copies of Z_7 (point x+7 sits above x),
    // 14 is the fixed point; class t is class 0 rotated by +t mod 7 within
    // each copy.  Data, not construction: re-verified below on every call.
    static const int table[7][5][3] = {
        {{0, 7, 14}, {1, 2, 4}, {3, 11, 13}, {5, 9, 10}, {6, 8, 12}},
        {{1, 8, 14}, {2, 3, 5}, {4, 7, 12}, {6, 10, 11}, {0, 9, 13}},
        {{2, 9, 14}, {3, 4, 6}, {5, 8, 13}, {0, 11, 12}, {1, 7, 10}},
        {{3, 10, 14}, {0, 4, 5}, {6, 7, 9}, {1, 12, 13}, {2, 8, 11}},
        {{4, 11, 14}, {1, 5, 6}, {0, 8, 10}, {2, 7, 13}, {3, 9, 12}},
        {{5, 12, 14}, {0, 2, 6}, {1, 9, 11}, {3, 7, 8}, {4, 10, 13}},
        {{6, 13, 14}, {0, 1, 3}, {2, 10, 12}, {4, 8, 9}, {5, 7, 11}},
    };

    RbibdDesign d;
    d.v = 15;
    d.k = 3;
    for (int t = 0; t < 7; ++t) {
        std::vector<int> cls;
        for (int b = 0; b < 5; ++b) {
            cls.push_back(static_cast<int>(d.blocks.size()));
            d.blocks.push_back({table[t][b][0], table[t][b][1], table[t][b][2]});
        }
        d.classes.push_back(std::move(cls));
    }

    DesignCheck chk = verify_design(d.blocks, d.v, d.k, &d.classes);
    internal_check(chk.all_ok(), "shipped Kirkman (15,3,1) data failed verification");
    return d;
}

int RbibdDesign::t_parameter() const {
    if (k < 2) return -1;
    const int denom = k * (k - 1);
    const int num = v - k * k;
    if (num < 0 || num % denom != 0) return -1;
    return num / denom;
}

RbibdParams rbibd_coloring_params(long long k, long long t) {
    if (k < 2) throw PreconditionError("rbibd parameters require k >= 2");
    if (t < 0) throw PreconditionError("rbibd parameters require t >= 0");
    RbibdParams out;
    out.v = k * k + t * k * (k - 1);
    out.num_colors = (t + 1) * k + 1;
    out.component_bound_fraction = Rational(1, Int((t + 1) * k - t));
    return out;
}

std::string write_design(const RbibdDesign& d) {
    std::ostringstream out;
    bool first_class = true;
    for (const auto& cls : d.classes) {
        if (!first_class) out << "\n";
        first_class = false;
        for (int bi : cls) {
            const auto& blk = d.blocks[bi];
            for (size_t i = 0; i < blk.size(); ++i) out << (i ? " " : "") << blk[i];
            out << "\n";
        }
    }
    return out.str();
}

RbibdDesign read_design(std::istream& in) {
    RbibdDesign d;
    std::vector<int> current_class;
    int max_id = -1;
    std::string line;
    auto close_class = [&] {
        if (!current_class.empty()) {
            d.classes.push_back(current_class);
            current_class.clear();
        }
    };
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            close_class();
            continue;
        }
        std::istringstream ls(line);
        std::vector<int> blk;
        int x;
        while (ls >> x) {
            if (x < 0) throw ParseError("negative point id in design file");
            blk.push_back(x);
            max_id = std::max(max_id, x);
        }
        if (blk.empty()) throw ParseError("malformed block line in design file");
        std::sort(blk.begin(), blk.end());
        current_class.push_back(static_cast<int>(d.blocks.size()));
        d.blocks.push_back(std::move(blk));
    }
    close_class();
    if (d.blocks.empty()) throw ParseError("design file has no blocks");
    d.v = max_id + 1;
    d.k = static_cast<int>(d.blocks.front().size());
    return d;
}

RbibdDesign read_design_string(const std::string& text) {
    std::istringstream in(text);
    return read_design(in);
}

RbibdDesign to_design(const AffinePlane& plane) {
    RbibdDesign d;
    d.v = plane.num_points();
    d.k = plane.q;
    d.blocks = plane.lines;
    d.classes = plane.classes;
    return d;
}

} // namespace monocomp
