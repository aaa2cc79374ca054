// Command-line front end: load graph/glue documents, emit Laplacians,
// characteristic polynomials, spectra, tree counts, Cheeger constants and
// evolved states, and run the self-verification suite.
//
// Exit codes: 0 success, 1 self-check failure, 2 document parse error,
// 3 validation error, 4 verification mismatch, 5 size limit.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lapglue/lapglue.hpp"

namespace {

using namespace lapglue;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "plain") return Format::plain;
    fail(errc::parse_error, "unknown format: " + name);
}

int exit_code_for(errc code) {
    switch (code) {
    case errc::parse_error: return 2;
    case errc::verify_mismatch: return 4;
    case errc::too_large: return 5;
    default: return 3;
    }
}

struct GlueOptions {
    std::string graph1, graph2, glue;
    std::string emit = "graph";
    bool verify = false;
};

int run_glue(const GlueOptions& opt, Format fmt, double tol) {
    const OrientedGraph g1 = parse_graph_document(read_file(opt.graph1)).graph;
    const OrientedGraph g2 = parse_graph_document(read_file(opt.graph2)).graph;
    const GlueDocument glue = parse_glue_document(read_file(opt.glue));

    const bool is_interface = std::holds_alternative<InterfaceSpec>(glue);
    GluedGraph glued;
    if (is_interface)
        glued = glue_interface(g1, g2, std::get<InterfaceSpec>(glue));
    else
        glued = glue_bridge(g1, g2, std::get<BridgeSpec>(glue));

    auto verify_equal = [&](bool equal, const std::string& what) {
        if (!equal) fail(errc::verify_mismatch, "verification failed: " + what);
    };

    if (opt.emit == "graph") {
        std::cout << write_graph_document(glued.graph, fmt);
        return 0;
    }
    if (opt.emit == "even") {
        IntMatrix result;
        if (is_interface) {
            const CanonicalInterface c =
                canonical_interface_layout(g1, g2, std::get<InterfaceSpec>(glue));
            const int n = c.g1.vertex_count();
            const int q = c.iface.vertex_count();
            result = even_laplacian_interface_glued(even_laplacian(c.g1), even_laplacian(c.g2),
                                                    n, n + c.g2.vertex_count() - q, q);
        } else {
            result = even_laplacian_bridge_glued(even_laplacian(g1), even_laplacian(g2),
                                                 std::get<BridgeSpec>(glue));
        }
        if (opt.verify)
            verify_equal(result == even_laplacian(glued.graph),
                         "glued even Laplacian vs direct construction");
        std::cout << write_matrix_document(result, fmt);
        return 0;
    }
    if (opt.emit == "odd") {
        IntMatrix result;
        if (is_interface) {
            const CanonicalInterface c =
                canonical_interface_layout(g1, g2, std::get<InterfaceSpec>(glue));
            result = odd_laplacian_interface_glued(c.g1, c.g2, c.iface);
        } else {
            result = odd_laplacian_bridge_glued(g1, g2, std::get<BridgeSpec>(glue));
        }
        if (opt.verify)
            verify_equal(result == odd_laplacian(glued.graph),
                         "glued odd Laplacian vs direct construction");
        std::cout << write_matrix_document(result, fmt);
        return 0;
    }
    if (opt.emit == "charpoly" || opt.emit == "spectrum") {
        IntPoly poly;
        if (!is_interface) {
            poly = multi_bridge_charpoly(g1, g2, std::get<BridgeSpec>(glue));
        } else {
            const auto& iface = std::get<InterfaceSpec>(glue);
            if (iface.vertex_count() == 1 && iface.edge_count() == 0) {
                const int v1 = iface.vertices_1[0], v2 = iface.vertices_2[0];
                const IntMatrix L1 = even_laplacian(g1), L2 = even_laplacian(g2);
                poly = vertex_interface_charpoly(charpoly(L1), minor_charpoly(L1, v1),
                                                 charpoly(L2), minor_charpoly(L2, v2));
            } else {
                // No compact multi-vertex interface formula exists; computed
                // directly from the glued Laplacian.
                poly = charpoly(even_laplacian(glued.graph));
            }
        }
        if (opt.verify)
            verify_equal(poly == charpoly(even_laplacian(glued.graph)),
                         "glued charpoly vs direct construction");
        if (opt.emit == "charpoly") {
            std::cout << write_poly_document(poly, fmt);
        } else {
            std::cout << write_spectrum_document(even_spectrum(glued.graph, tol), fmt);
        }
        return 0;
    }
    fail(errc::parse_error, "unknown --emit kind: " + opt.emit);
}

int run_check(std::uint64_t seed) {
    const std::vector<CheckResult> results = run_acceptance_checks(seed);
    bool all = true;
    for (const CheckResult& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << " (" << r.detail << ")\n";
        all = all && r.passed;
    }
    std::cout << (all ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectral toolkit for glued graph Laplacians"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may appear after the subcommand

    std::string format_name = "json";
    double tol = 1e-12;
    app.add_option("--format", format_name, "output format: json|plain")->capture_default_str();
    app.add_option("--tol", tol, "eigensolver tolerance")->capture_default_str();

    std::string graph_path, which = "even";
    auto* lap = app.add_subcommand("laplacian", "print the even or odd Laplacian of a graph");
    lap->add_option("graph", graph_path, "graph document")->required();
    lap->add_option("--which", which, "even|odd")->capture_default_str();

    GlueOptions glue_opt;
    auto* glue = app.add_subcommand("glue", "glue two graphs along an interface or bridges");
    glue->add_option("graph1", glue_opt.graph1, "first graph document")->required();
    glue->add_option("graph2", glue_opt.graph2, "second graph document")->required();
    glue->add_option("gluefile", glue_opt.glue, "glue document")->required();
    glue->add_option("--emit", glue_opt.emit, "graph|even|odd|charpoly|spectrum")
        ->capture_default_str();
    glue->add_flag("--verify", glue_opt.verify,
                   "also compute the direct construction and compare");

    std::string spec_path, spec_which = "even";
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of a graph Laplacian");
    spectrum->add_option("graph", spec_path, "graph document")->required();
    spectrum->add_option("--which", spec_which, "even|odd")->capture_default_str();

    std::string fiedler_path;
    auto* fiedler = app.add_subcommand("fiedler", "smallest nonzero even-Laplacian eigenvalue");
    fiedler->add_option("graph", fiedler_path, "graph document")->required();

    std::string trees_path;
    auto* trees = app.add_subcommand("trees", "number of spanning trees");
    trees->add_option("graph", trees_path, "graph document")->required();

    std::string cheeger_path;
    auto* cheeger = app.add_subcommand("cheeger", "Cheeger constant (exhaustive, |V| <= 20)");
    cheeger->add_option("graph", cheeger_path, "graph document")->required();

    std::string evolve_graph, evolve_psi;
    double coeff = 1.0, dt = 0.0;
    auto* evolve_cmd = app.add_subcommand("evolve", "discrete Schroedinger evolution");
    evolve_cmd->add_option("graph", evolve_graph, "graph document")->required();
    evolve_cmd->add_option("psi", evolve_psi, "wave-function document")->required();
    evolve_cmd->add_option("--coeff", coeff, "scalar coefficient in the exponent")
        ->capture_default_str();
    evolve_cmd->add_option("--dt", dt, "elapsed time")->capture_default_str();

    std::uint64_t seed = lapglue::checks::default_seed;
    auto* check = app.add_subcommand("check", "run the self-verification suite");
    check->add_option("--seed", seed, "seed for randomized instances")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        const Format fmt = parse_format(format_name);
        if (lap->parsed()) {
            const OrientedGraph g = parse_graph_document(read_file(graph_path)).graph;
            if (which == "even")
                std::cout << write_matrix_document(even_laplacian(g), fmt);
            else if (which == "odd")
                std::cout << write_matrix_document(odd_laplacian(g), fmt);
            else
                fail(errc::parse_error, "unknown --which kind: " + which);
            return 0;
        }
        if (glue->parsed()) return run_glue(glue_opt, fmt, tol);
        if (spectrum->parsed()) {
            const OrientedGraph g = parse_graph_document(read_file(spec_path)).graph;
            if (spec_which == "even")
                std::cout << write_spectrum_document(even_spectrum(g, tol), fmt);
            else if (spec_which == "odd")
                std::cout << write_spectrum_document(odd_spectrum(g, tol), fmt);
            else
                fail(errc::parse_error, "unknown --which kind: " + spec_which);
            return 0;
        }
        if (fiedler->parsed()) {
            const OrientedGraph g = parse_graph_document(read_file(fiedler_path)).graph;
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.12g", fiedler_value(g, tol));
            if (fmt == Format::json)
                std::cout << "{\"fiedler\": " << buf << "}\n";
            else
                std::cout << "fiedler " << buf << "\n";
            return 0;
        }
        if (trees->parsed()) {
            const OrientedGraph g = parse_graph_document(read_file(trees_path)).graph;
            const Int t = spanning_tree_count(g);
            if (fmt == Format::json)
                std::cout << "{\"spanning_trees\": \"" << t.str() << "\"}\n";
            else
                std::cout << "spanning_trees " << t.str() << "\n";
            return 0;
        }
        if (cheeger->parsed()) {
            const OrientedGraph g = parse_graph_document(read_file(cheeger_path)).graph;
            const Rational h = cheeger_constant(g);
            std::string s = numerator(h).str();
            if (denominator(h) != 1) s += "/" + denominator(h).str();
            if (fmt == Format::json)
                std::cout << "{\"cheeger\": \"" << s << "\"}\n";
            else
                std::cout << "cheeger " << s << "\n";
            return 0;
        }
        if (evolve_cmd->parsed()) {
            const OrientedGraph g = parse_graph_document(read_file(evolve_graph)).graph;
            const WaveFunction psi = parse_wave_document(read_file(evolve_psi));
            const WaveFunction out = evolve(psi, g, EvolutionParams{coeff, dt});
            std::cout << write_wave_document(out, fmt, out.norm());
            return 0;
        }
        if (check->parsed()) return run_check(seed);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
