#include "monocomp/search.hpp"

#include "monocomp/errors.hpp"
#include "monocomp/lp.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

namespace monocomp {

namespace {

DeletionCandidate evaluate_candidate(const AffinePlane& plane, int deleted_class,
                                     std::vector<int> s) {
    const int r = plane.q;
    DeletionCandidate out;
    out.s = std::move(s);

    const Hypergraph h = plane_minus_class_minus_set(plane, deleted_class, out.s);

    // rank: some line kept all r points
    int rank = 0;
    for (const auto& e : h.edges) rank = std::max(rank, static_cast<int>(e.size()));
    out.rank_ok = rank == r;

    out.chromatic_witness = chromatic_witness(h, r);

    out.delta_star_ok = properties(h).delta_star == (r * r - r) - (r - 2);

    if (out.chromatic_witness && out.rank_ok && out.delta_star_ok) {
        const Hypergraph top = top_level(h, WeightAssignment::uniform(h.n));
        out.top_level_perturbable = find_perturbation(top).has_value();
    }
    return out;
}

// field automorphisms of GF(q) as index permutations (powers of Frobenius)
std::vector<std::vector<int>> field_automorphisms(const Field& f) {
    const int q = f.order();
    std::vector<int> frob(q);
    for (int x = 0; x < q; ++x) {
        int y = x;
        for (int i = 1; i < f.characteristic(); ++i) y = f.mul(y, x);
        frob[x] = y;
    }
    std::vector<std::vector<int>> out;
    std::vector<int> cur(q);
    for (int x = 0; x < q; ++x) cur[x] = x;
    for (int i = 0; i < f.degree(); ++i) {
        out.push_back(cur);
        for (int x = 0; x < q; ++x) cur[x] = frob[cur[x]];
    }
    return out;
}

} // namespace

std::vector<std::vector<int>> deleted_class_stabilizer(const AffinePlane& plane,
                                                       int deleted_class) {
    const int q = plane.q;
    const Field f = Field::make(q, q);

    std::set<std::vector<int>> class_lines;
    for (int li : plane.classes[deleted_class]) class_lines.insert(plane.lines[li]);

    const auto autos = field_automorphisms(f);
    std::vector<std::vector<int>> maps;
    for (const auto& sigma : autos) {
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c)
                    for (int d = 0; d < q; ++d) {
                        // invertible linear part: ad - bc != 0
                        if (f.sub(f.mul(a, d), f.mul(b, c)) == 0) continue;
                        for (int e = 0; e < q; ++e)
                            for (int g = 0; g < q; ++g) {
                                std::vector<int> perm(plane.num_points());
                                for (int id = 0; id < plane.num_points(); ++id) {
                                    const int x = sigma[plane.point_col(id)];
                                    const int y = sigma[plane.point_row(id)];
                                    const int nx = f.add(f.add(f.mul(a, x), f.mul(b, y)), e);
                                    const int ny = f.add(f.add(f.mul(c, x), f.mul(d, y)), g);
                                    perm[id] = plane.point_id(ny, nx);
                                }
                                // keep only maps sending the deleted class to itself
                                bool stabilizes = true;
                                for (int li : plane.classes[deleted_class]) {
                                    std::vector<int> image;
                                    for (int v : plane.lines[li]) image.push_back(perm[v]);
                                    std::sort(image.begin(), image.end());
                                    if (!class_lines.count(image)) {
                                        stabilizes = false;
                                        break;
                                    }
                                }
                                if (stabilizes) maps.push_back(std::move(perm));
                            }
                    }
    }
    return maps;
}

OrbitPartition reduce_by_isomorphism(const std::vector<std::vector<int>>& choices,
                                     const AffinePlane& plane, int deleted_class) {
    const auto maps = deleted_class_stabilizer(plane, deleted_class);

    OrbitPartition out;
    out.orbit_of.assign(choices.size(), -1);
    std::map<std::vector<int>, int> orbit_of_canonical;
    for (size_t i = 0; i < choices.size(); ++i) {
        std::vector<int> canonical;
        for (const auto& perm : maps) {
            std::vector<int> image;
            image.reserve(choices[i].size());
            for (int v : choices[i]) image.push_back(perm[v]);
            std::sort(image.begin(), image.end());
            if (canonical.empty() || image < canonical) canonical = std::move(image);
        }
        auto [it, inserted] = orbit_of_canonical.try_emplace(canonical, out.count);
        if (inserted) {
            out.representatives.push_back(canonical);
            ++out.count;
        }
        out.orbit_of[i] = it->second;
    }
    return out;
}

SearchResult enumerate_s_choices(int r, int deleted_class, int threads, int cap) {
    if (r < 3) throw PreconditionError("search requires r >= 3");
    const AffinePlane plane = affine_plane(r, cap);
    if (deleted_class < 0) deleted_class = r; // the vertical class
    if (deleted_class > r) throw PreconditionError("deleted class index out of range");

    // all C(r^2, r) candidate sets, in lexicographic order
    std::vector<std::vector<int>> candidates;
    std::vector<int> comb(r);
    for (int i = 0; i < r; ++i) comb[i] = i;
    const int np = plane.num_points();
    while (true) {
        candidates.push_back(comb);
        int pos = r - 1;
        while (pos >= 0 && comb[pos] == np - r + pos) --pos;
        if (pos < 0) break;
        ++comb[pos];
        for (int i = pos + 1; i < r; ++i) comb[i] = comb[i - 1] + 1;
    }

    // independent evaluations, merged by candidate index
    std::vector<DeletionCandidate> evaluated(candidates.size());
    unsigned nthreads = threads > 0 ? static_cast<unsigned>(threads)
                                    : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<unsigned>(nthreads, candidates.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < candidates.size(); i = next.fetch_add(1))
            evaluated[i] = evaluate_candidate(plane, deleted_class, candidates[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    SearchResult result;
    result.r = r;
    result.deleted_class = deleted_class;
    result.total_candidates = static_cast<long long>(candidates.size());
    for (auto& cand : evaluated)
        if (cand.valid()) result.valid.push_back(std::move(cand));

    std::vector<std::vector<int>> valid_sets;
    for (const auto& cand : result.valid) valid_sets.push_back(cand.s);
    result.orbits = reduce_by_isomorphism(valid_sets, plane, deleted_class);
    for (size_t i = 0; i < result.valid.size(); ++i)
        result.valid[i].orbit_id = result.orbits.orbit_of[i];

    result.all_valid_are_transversals = true;
    for (const auto& cand : result.valid) {
        std::set<int> sset(cand.s.begin(), cand.s.end());
        for (int li : plane.classes[deleted_class]) {
            int hits = 0;
            for (int v : plane.lines[li]) hits += sset.count(v);
            if (hits != 1) result.all_valid_are_transversals = false;
        }
    }
    return result;
}

std::string survey_json(const SearchResult& result) {
    nlohmann::json j;
    j["r"] = result.r;
    j["deleted_class"] = result.deleted_class;
    j["total_candidates"] = result.total_candidates;
    j["valid_count"] = result.valid.size();
    j["orbit_count"] = result.orbits.count;
    j["representatives"] = result.orbits.representatives;
    j["all_valid_are_transversals"] = result.all_valid_are_transversals;
    return j.dump(2);
}

} // namespace monocomp
