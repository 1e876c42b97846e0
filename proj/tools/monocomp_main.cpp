// monocomp: exact constructions and certificates for small-monochromatic-
// component edge colorings (affine-plane blow-ups, resolvable-design
// colorings, perturbability of weighted hypergraphs).
//
// Exit codes: 0 success, 2 precondition/usage violation (the failing
// condition is named on stderr), 1 internal invariant failure (a bug).

#include "monocomp/blowup.hpp"
#include "monocomp/colorgraph.hpp"
#include "monocomp/designs.hpp"
#include "monocomp/errors.hpp"
#include "monocomp/hypergraph.hpp"
#include "monocomp/lp.hpp"
#include "monocomp/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace monocomp;
using nlohmann::json;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw PreconditionError("cannot open output file: " + path);
    out << content;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

WeightAssignment load_weights(const std::string& source, int n) {
    if (source == "uniform") return WeightAssignment::uniform(n);
    // anything else is a file: one rational per line
    std::istringstream in(slurp(source));
    WeightAssignment w;
    std::string tok;
    while (in >> tok) w.w.push_back(rational_from_string(tok));
    if (static_cast<int>(w.w.size()) != n)
        throw PreconditionError("weight file has " + std::to_string(w.w.size()) +
                                " entries, hypergraph has " + std::to_string(n) + " vertices");
    w.validate();
    return w;
}

json report_to_json(const ComponentReport& rep) {
    return json::parse(report_json(rep));
}

std::string report_to_text(const ComponentReport& rep) {
    std::ostringstream out;
    out << "n = " << rep.n << "\n";
    out << "r = " << rep.r << "\n";
    out << "delta = " << rep.min_degree << "\n";
    out << "max_component = " << rep.max_component << "\n";
    for (size_t c = 0; c < rep.per_color.size(); ++c) {
        out << "color " << c << " components:";
        for (long long x : rep.per_color[c]) out << " " << x;
        out << "\n";
    }
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"exact extremal edge-colored graph constructions and certificates"};
    app.require_subcommand(1);
    app.fallthrough(); // let subcommands pass --format up to the app

    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // plane
    auto* plane_cmd = app.add_subcommand("plane", "construct and export an affine plane");
    int plane_q = 0, plane_cap = kDefaultOrderCap;
    std::string plane_out;
    plane_cmd->add_option("--q", plane_q, "plane order (prime power)")->required();
    plane_cmd->add_option("--cap", plane_cap, "max supported order");
    plane_cmd->add_option("--output", plane_out, "output path (default stdout)");

    // hr
    auto* hr_cmd = app.add_subcommand("hr", "build the r-colored deleted-plane hypergraph");
    int hr_r = 0, hr_cap = kDefaultOrderCap;
    std::string hr_out;
    hr_cmd->add_option("--r", hr_r, "number of colors (plane order)")->required();
    hr_cmd->add_option("--cap", hr_cap, "max supported order");
    hr_cmd->add_option("--output", hr_out, "output path (default stdout)");

    // perturb
    auto* pert_cmd = app.add_subcommand(
        "perturb", "decide perturbability of the top level of a weighted hypergraph");
    std::string pert_input, pert_weights = "uniform", pert_eps, pert_out;
    pert_cmd->add_option("--input", pert_input, "hypergraph file")->required();
    pert_cmd->add_option("--weights", pert_weights, "'uniform' or a weight file");
    pert_cmd->add_option("--eps", pert_eps, "epsilon as num/den (default: half the bound)");
    pert_cmd->add_option("--output", pert_out, "output path (default stdout)");

    // construct
    auto* cons_cmd = app.add_subcommand(
        "construct", "perturbed blow-up with minimum degree (1-(r-2)/(r^2-r))n-c-1");
    int cons_r = 0, cons_cap = kDefaultOrderCap;
    long long cons_c = 1, cons_n = 0;
    std::string cons_out;
    cons_cmd->add_option("--r", cons_r, "number of colors")->required();
    cons_cmd->add_option("--c", cons_c, "perturbation size (default 1)");
    cons_cmd->add_option("--n", cons_n, "number of vertices, (r^2-r) | n")->required();
    cons_cmd->add_option("--cap", cons_cap, "max supported order");
    cons_cmd->add_option("--output", cons_out, "graph file path (audit goes to stdout)");

    // gys
    auto* gys_cmd = app.add_subcommand(
        "gys", "uniform blow-up of a plane with one parallel class removed");
    int gys_r = 0, gys_cap = kDefaultOrderCap;
    long long gys_n = 0;
    std::string gys_out;
    gys_cmd->add_option("--r", gys_r, "number of colors")->required();
    gys_cmd->add_option("--n", gys_n, "number of vertices, r^2 | n")->required();
    gys_cmd->add_option("--cap", gys_cap, "max supported order");
    gys_cmd->add_option("--output", gys_out, "graph file path (audit goes to stdout)");

    // analyze
    auto* ana_cmd = app.add_subcommand("analyze", "audit an edge-colored graph file");
    std::string ana_input, ana_out;
    ana_cmd->add_option("--input", ana_input, "graph file")->required();
    ana_cmd->add_option("--output", ana_out, "output path (default stdout)");

    // oracle
    auto* ora_cmd = app.add_subcommand(
        "oracle", "exact mc_r of a small graph by exhaustive coloring enumeration");
    int ora_complete = 0, ora_colors = 0;
    long long ora_cap = 100'000'000;
    std::string ora_input;
    ora_cmd->add_option("--complete", ora_complete, "use the complete graph K_n");
    ora_cmd->add_option("--input", ora_input, "or a graph file (colors ignored)");
    ora_cmd->add_option("--colors", ora_colors, "number of colors r")->required();
    ora_cmd->add_option("--cap", ora_cap, "max colorings to enumerate");

    // bounds
    auto* bnd_cmd = app.add_subcommand("bounds", "known lower/upper bounds for mc_r(K_n)");
    int bnd_r = 0;
    long long bnd_n = 0;
    std::string bnd_rbibd, bnd_out;
    bool bnd_kirkman = false;
    bnd_cmd->add_option("--r", bnd_r, "number of colors")->required();
    bnd_cmd->add_option("--n", bnd_n, "number of vertices")->required();
    bnd_cmd->add_option("--rbibd", bnd_rbibd, "resolvable design file improving the upper bound");
    bnd_cmd->add_flag("--kirkman", bnd_kirkman, "use the built-in (15,3,1) design");
    bnd_cmd->add_option("--output", bnd_out, "output path (default stdout)");

    // rbibd
    auto* rb_cmd = app.add_subcommand("rbibd", "resolvable design data, parameters, verification");
    long long rb_k = 0, rb_t = -1;
    std::string rb_verify, rb_out;
    bool rb_kirkman = false;
    rb_cmd->add_option("--k", rb_k, "block size (with --t: report family parameters)");
    rb_cmd->add_option("--t", rb_t, "family parameter, v = k^2 + t k(k-1)");
    rb_cmd->add_flag("--kirkman", rb_kirkman, "export the built-in (15,3,1) design");
    rb_cmd->add_option("--verify", rb_verify, "verify a design file");
    rb_cmd->add_option("--output", rb_out, "output path (default stdout)");

    // search-s
    auto* ss_cmd = app.add_subcommand(
        "search-s", "enumerate all r-point deletion sets and report the valid orbits");
    int ss_r = 0, ss_class = -1, ss_threads = 0, ss_cap = kDefaultOrderCap;
    std::string ss_out;
    ss_cmd->add_option("--r", ss_r, "plane order / color count")->required();
    ss_cmd->add_option("--deleted-class", ss_class, "parallel class to delete (default: vertical)");
    ss_cmd->add_option("--threads", ss_threads, "worker threads (default: hardware)");
    ss_cmd->add_option("--cap", ss_cap, "max supported order");
    ss_cmd->add_option("--output", ss_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);
    const bool as_json = format == "json";

    if (*plane_cmd) {
        const AffinePlane plane = affine_plane(plane_q, plane_cap);
        if (as_json) {
            json j;
            j["q"] = plane.q;
            j["num_points"] = plane.num_points();
            j["num_lines"] = plane.lines.size();
            j["num_classes"] = plane.classes.size();
            j["design"] = write_design(to_design(plane));
            write_output(plane_out, j.dump(2));
        } else {
            write_output(plane_out, write_design(to_design(plane)));
        }
        return 0;
    }

    if (*hr_cmd) {
        const Hypergraph h = build_hr(hr_r, hr_cap);
        if (as_json) {
            const HypergraphStats st = properties(h);
            json j;
            j["r"] = hr_r;
            j["n"] = h.n;
            j["m"] = h.num_edges();
            j["rank"] = st.rank;
            j["proportional_rank"] = rational_to_string(st.proportional_rank);
            j["delta_star"] = st.delta_star;
            j["num_color_classes"] = st.num_color_classes;
            // proper coloring by classes gives <= r; a vertex in r distinct
            // pairwise-meeting edges gives >= r
            j["chromatic_index_r_witness"] = chromatic_witness(h, hr_r);
            j["hypergraph"] = write_hypergraph(h);
            write_output(hr_out, j.dump(2));
        } else {
            write_output(hr_out, write_hypergraph(h));
        }
        return 0;
    }

    if (*pert_cmd) {
        const Hypergraph h = read_hypergraph_string(slurp(pert_input));
        const WeightAssignment w = load_weights(pert_weights, h.n);
        const Hypergraph top = top_level(h, w);
        if (top.edges.empty()) throw NoEdgesError("top level has no edges");

        json j;
        j["top_level_edges"] = top.num_edges();
        if (auto p = find_perturbation(top)) {
            j["result"] = "perturbation";
            j["certificate"] = json::parse(perturbation_certificate_json(*p));
            const Rational bound = perturbation_epsilon_bound(w, *p);
            const Rational eps =
                pert_eps.empty() ? bound / 2 : rational_from_string(pert_eps);
            j["epsilon_bound"] = rational_to_string(bound);
            j["epsilon"] = rational_to_string(eps);
            const WeightAssignment moved = apply_perturbation(w, *p, eps);
            json jw = json::array();
            for (const auto& x : moved.w) jw.push_back(rational_to_string(x));
            j["perturbed_weights"] = jw;
        } else {
            const PfmResult pfm = perfect_fractional_matching(top);
            Rational value(0);
            for (const auto& x : pfm.matching->m) value += x;
            j["result"] = "perfect_fractional_matching";
            j["certificate"] = json::parse(matching_certificate_json(value, *pfm.matching));
        }
        write_output(pert_out, j.dump(2));
        return 0;
    }

    if (*cons_cmd || *gys_cmd) {
        const ColoredGraph g = *cons_cmd ? perturbed_graph(cons_r, cons_c, cons_n, cons_cap)
                                         : gys_construction(gys_r, gys_n, gys_cap);
        const std::string out_path = *cons_cmd ? cons_out : gys_out;
        if (!out_path.empty()) {
            if (!g.materialized)
                throw PreconditionError("n exceeds the materialization limit " +
                                        std::to_string(kMaterializeLimit) +
                                        "; no graph file written");
            write_output(out_path, write_graph(g));
        }
        const ComponentReport rep = analyze(g);
        std::cout << (as_json ? report_to_json(rep).dump(2) + "\n" : report_to_text(rep));
        return 0;
    }

    if (*ana_cmd) {
        const ColoredGraph g = read_graph_string(slurp(ana_input));
        const ComponentReport rep = analyze(g);
        write_output(ana_out, as_json ? report_to_json(rep).dump(2) : report_to_text(rep));
        return 0;
    }

    if (*ora_cmd) {
        if ((ora_complete > 0) == !ora_input.empty())
            throw PreconditionError("oracle needs exactly one of --complete or --input");
        const SimpleGraph g = ora_complete > 0
                                  ? complete_graph(ora_complete)
                                  : strip_colors(read_graph_string(slurp(ora_input)));
        std::cout << mc_oracle(g, ora_colors, ora_cap) << "\n";
        return 0;
    }

    if (*bnd_cmd) {
        std::optional<RbibdDesign> design;
        if (!bnd_rbibd.empty())
            design = read_design_string(slurp(bnd_rbibd));
        else if (bnd_kirkman || bnd_r == 7)
            design = kirkman_15(); // shipped data, applies automatically for r = 7
        const BoundsReport rep = known_bounds(bnd_r, bnd_n, design ? &*design : nullptr);
        if (as_json) {
            write_output(bnd_out, bounds_json(rep));
        } else {
            std::ostringstream out;
            out << "gyarfas_lower = " << rational_to_string(rep.gyarfas_lower) << "\n";
            out << "furedi_lower = " << rational_to_string(rep.furedi_lower) << "\n";
            out << "furedi_upper = " << rep.furedi_upper << " (q = " << rep.q << ")\n";
            out << "furedi_applicable = " << (rep.furedi_applicable ? "yes" : "no")
                << " (plane of order r-1: " << rep.plane_status << ")\n";
            if (rep.rbibd_upper)
                out << "rbibd_upper = " << rational_to_string(*rep.rbibd_upper) << " (v = "
                    << rep.rbibd_v << ", k = " << rep.rbibd_k << ", t = " << rep.rbibd_t << ")\n";
            write_output(bnd_out, out.str());
        }
        return 0;
    }

    if (*rb_cmd) {
        if (rb_k > 0 && rb_t >= 0) {
            const RbibdParams params = rbibd_coloring_params(rb_k, rb_t);
            json j;
            j["v"] = params.v;
            j["num_colors"] = params.num_colors;
            j["component_bound_fraction"] = rational_to_string(params.component_bound_fraction);
            write_output(rb_out, j.dump(2));
            return 0;
        }
        if (!rb_verify.empty()) {
            const RbibdDesign d = read_design_string(slurp(rb_verify));
            const DesignCheck chk = verify_design(d.blocks, d.v, d.k, &d.classes);
            json j;
            j["v"] = d.v;
            j["k"] = d.k;
            j["num_blocks"] = d.blocks.size();
            j["num_classes"] = d.num_classes();
            j["uniform"] = chk.uniform;
            j["pair_coverage_exact"] = chk.pair_coverage_exact;
            j["uncovered_pairs"] = chk.uncovered_pairs;
            j["overcovered_pairs"] = chk.overcovered_pairs;
            j["resolvable"] = chk.resolvable;
            j["all_ok"] = chk.all_ok();
            write_output(rb_out, j.dump(2));
            return 0;
        }
        // default: export the built-in Kirkman design
        (void)rb_kirkman;
        write_output(rb_out, write_design(kirkman_15()));
        return 0;
    }

    if (*ss_cmd) {
        const SearchResult result = enumerate_s_choices(ss_r, ss_class, ss_threads, ss_cap);
        write_output(ss_out, survey_json(result));
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const monocomp::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const monocomp::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
