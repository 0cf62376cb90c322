#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "clusterforge/cluster.hpp"
#include "clusterforge/errors.hpp"
#include "clusterforge/graded.hpp"
#include "clusterforge/io.hpp"
#include "clusterforge/lattice.hpp"
#include "clusterforge/order.hpp"
#include "clusterforge/polygon.hpp"
#include "clusterforge/quiver.hpp"
#include "clusterforge/verify.hpp"

namespace {

using namespace clusterforge;

std::string message_of(const std::string& kind, const char* what) {
    std::string w = what;
    std::string prefix = kind + ": ";
    return w.rfind(prefix, 0) == 0 ? w.substr(prefix.size()) : w;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw input_error("OutputError", "cannot open " + path);
    f << text << "\n";
}

int max_polygon() {
    const char* env = std::getenv("CLUSTERFORGE_MAX_N");
    if (!env || !*env) return 9;
    try {
        return std::stoi(env);
    } catch (const std::exception&) {
        throw input_error("MalformedEnv", "CLUSTERFORGE_MAX_N must be an integer");
    }
}

std::string bracket_matrix(const ExponentMatrix& m) {
    std::vector<std::vector<std::string>> cells(m.size);
    size_t width = 0;
    for (int i = 1; i <= m.size; ++i)
        for (int j = 1; j <= m.size; ++j) {
            cells[i - 1].push_back(bracket_str(m.at(i, j)));
            width = std::max(width, cells[i - 1].back().size());
        }
    std::string out;
    for (const auto& row : cells) {
        out += "( ";
        for (const std::string& cell : row) {
            out += cell;
            out.append(width - cell.size() + 2, ' ');
        }
        out += ")\n";
    }
    if (!out.empty()) out.pop_back();
    return out;
}

std::string potential_str(const IceQuiver& q) {
    std::string out = "W =";
    for (const PotentialTerm& t : q.potential()) {
        out += t.sign > 0 ? " + " : " - ";
        for (int id : t.cycle) out += q.arrow(id).label;
    }
    return out;
}

std::string quiver_text(const IceQuiver& q) {
    std::ostringstream out;
    out << "polygon n=" << q.n() << ", " << q.vertices().size() << " vertices, " << q.arrows().size()
        << " arrows\n";
    out << "vertices:\n";
    for (const QuiverVertex& v : q.vertices())
        out << "  " << v.id << ": " << v.edge.str() << (v.frozen ? " [frozen]" : "") << "\n";
    out << "arrows:\n";
    for (const Arrow& a : q.arrows())
        out << "  " << a.label << ": " << q.vertex(a.source).edge.str() << " -> "
            << q.vertex(a.target).edge.str() << "  ("
            << (a.kind == ArrowKind::internal ? "internal" : "external") << ", theta " << a.theta
            << ")\n";
    out << potential_str(q) << "\n";
    out << "relations:\n";
    for (const Relation& r : jacobian_relations(q)) out << "  " << relation_str(q, r) << "\n";
    std::string s = out.str();
    s.pop_back();
    return s;
}

std::string decorate(const std::string& name) { return "x{" + name + "}"; }

int run(int argc, char** argv) {
    int exit_code = 0;
    CLI::App app{"exact computations for triangulated polygons: quivers with potential, "
                 "tiled orders, lattice decomposition, graded tilting, cluster expansions"};
    app.require_subcommand(1);

    // quiver
    auto* quiver_cmd = app.add_subcommand("quiver", "build the ice quiver with potential");
    int q_n = 0;
    std::string q_diagonals, q_format = "text", q_output;
    quiver_cmd->add_option("--n", q_n, "polygon size")->required();
    quiver_cmd->add_option("--diagonals", q_diagonals, "comma-separated s-t list");
    quiver_cmd->add_option("--format", q_format)->check(CLI::IsMember({"text", "json", "dot"}));
    quiver_cmd->add_option("--output", q_output, "write here instead of stdout");
    quiver_cmd->callback([&] {
        Triangulation sigma = validate_triangulation(q_n, parse_edge_list(q_diagonals));
        IceQuiver q = build_ice_quiver(sigma);
        if (q_format == "dot")
            emit(q_output, quiver_dot(q));
        else if (q_format == "json")
            emit(q_output, quiver_to_json(q));
        else
            emit(q_output, quiver_text(q));
    });

    // order
    auto* order_cmd = app.add_subcommand("order", "tiled-order exponent matrices");
    int o_n = 0;
    std::string o_diagonals, o_format = "text", o_output;
    bool o_check = false, o_lambda = false;
    order_cmd->add_option("--n", o_n, "polygon size")->required();
    order_cmd->add_option("--diagonals", o_diagonals, "comma-separated s-t list");
    order_cmd->add_flag("--check", o_check, "assert the frozen part equals the canonical order");
    order_cmd->add_flag("--lambda", o_lambda, "print only the canonical order");
    order_cmd->add_option("--format", o_format)->check(CLI::IsMember({"text", "json"}));
    order_cmd->add_option("--output", o_output);
    order_cmd->callback([&] {
        if (o_lambda) {
            ExponentMatrix lambda = lambda_matrix(o_n);
            emit(o_output, o_format == "json" ? exponent_matrix_to_json(lambda) : bracket_matrix(lambda));
            return;
        }
        Triangulation sigma = validate_triangulation(o_n, parse_edge_list(o_diagonals));
        ExponentMatrix frozen = frozen_part(sigma);  // self-checking
        if (o_check) {
            emit(o_output, "OK");
            return;
        }
        ExponentMatrix gamma = tiled_exponent_matrix(sigma, 1);
        ExponentMatrix lambda = lambda_matrix(o_n);
        if (o_format == "json") {
            nlohmann::ordered_json j;
            j["gamma"] = nlohmann::ordered_json::parse(exponent_matrix_to_json(gamma));
            j["frozen"] = nlohmann::ordered_json::parse(exponent_matrix_to_json(frozen));
            j["lambda"] = nlohmann::ordered_json::parse(exponent_matrix_to_json(lambda));
            emit(o_output, j.dump());
        } else {
            emit(o_output, "full order:\n" + bracket_matrix(gamma) + "\nfrozen part:\n" +
                               bracket_matrix(frozen) + "\ncanonical order:\n" + bracket_matrix(lambda));
        }
    });

    // expand
    auto* expand_cmd = app.add_subcommand("expand", "Laurent expansion of an edge over a base");
    int e_n = 0;
    std::string e_base, e_edge, e_format = "text", e_output;
    bool e_at_one = false;
    expand_cmd->add_option("--n", e_n, "polygon size")->required();
    expand_cmd->add_option("--base", e_base, "diagonals of the initial triangulation");
    expand_cmd->add_option("--edge", e_edge, "edge s-t to expand")->required();
    expand_cmd->add_flag("--at-one", e_at_one, "print the specialization at all variables = 1");
    expand_cmd->add_option("--format", e_format)->check(CLI::IsMember({"text", "json"}));
    expand_cmd->add_option("--output", e_output);
    expand_cmd->callback([&] {
        Triangulation sigma = validate_triangulation(e_n, parse_edge_list(e_base));
        ClusterContext ctx(sigma);
        const LaurentPoly& value = ctx.expand(parse_edge(e_edge));
        if (e_at_one) {
            emit(e_output, value.eval_at_one().get_str());
            return;
        }
        if (e_format == "json") {
            emit(e_output, laurent_to_json(value, ctx.variable_names()));
        } else {
            std::vector<std::string> names;
            for (const std::string& name : ctx.variable_names()) names.push_back(decorate(name));
            emit(e_output, value.str(names));
        }
    });

    // ar
    auto* ar_cmd = app.add_subcommand("ar", "window of the graded Auslander-Reiten quiver");
    int a_n = 0, a_imin = 0, a_imax = 0;
    std::string a_format = "text", a_output;
    ar_cmd->add_option("--n", a_n, "polygon size")->required();
    auto* imin_opt = ar_cmd->add_option("--imin", a_imin, "lowest first label");
    auto* imax_opt = ar_cmd->add_option("--imax", a_imax, "highest second label");
    ar_cmd->add_option("--format", a_format)->check(CLI::IsMember({"text", "json", "dot"}));
    ar_cmd->add_option("--output", a_output);
    ar_cmd->callback([&] {
        int lo = imin_opt->count() ? a_imin : 1 - a_n;
        int hi = imax_opt->count() ? a_imax : a_n;
        ARWindow w = ar_quiver_window(a_n, lo, hi);
        if (a_format == "dot") {
            emit(a_output, ar_window_dot(w));
        } else if (a_format == "json") {
            nlohmann::ordered_json j;
            j["n"] = w.n;
            j["i_min"] = w.i_min;
            j["i_max"] = w.i_max;
            j["vertices"] = nlohmann::ordered_json::array();
            for (const GradedCM& v : w.vertices)
                j["vertices"].push_back(nlohmann::ordered_json::parse(graded_to_json(v)));
            j["arrows"] = w.arrows;
            emit(a_output, j.dump());
        } else {
            std::ostringstream out;
            out << "graded AR window, n=" << w.n << ", " << w.i_min << " <= i, j <= " << w.i_max << "\n";
            for (const auto& [from, to] : w.arrows)
                out << "  " << w.vertices[from].str() << " -> " << w.vertices[to].str() << "\n";
            std::string s = out.str();
            s.pop_back();
            emit(a_output, s);
        }
    });

    // decompose
    auto* dec_cmd = app.add_subcommand("decompose", "split a cycle representation into strands");
    std::string d_input, d_format = "text", d_output;
    dec_cmd->add_option("--input", d_input, "JSON cycle representation")->required();
    dec_cmd->add_option("--format", d_format)->check(CLI::IsMember({"text", "json"}));
    dec_cmd->add_option("--output", d_output);
    dec_cmd->callback([&] {
        std::ifstream f(d_input);
        if (!f) throw input_error("InputError", "cannot read " + d_input);
        std::stringstream buffer;
        buffer << f.rdbuf();
        std::vector<CMModule> mods = decompose_cm(cycle_rep_from_json(buffer.str()));
        if (d_format == "json") {
            emit(d_output, module_set_to_json(mods));
        } else {
            std::string out;
            for (const CMModule& m : mods) out += m.str() + "\n";
            if (!out.empty()) out.pop_back();
            emit(d_output, out.empty() ? "(empty)" : out);
        }
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the full verification suite");
    std::string v_what;
    int v_n = 0;
    std::uint64_t v_seed = 0;
    std::string v_output;
    verify_cmd->add_option("what", v_what, "which suite (only: all)")->required();
    verify_cmd->add_option("--n", v_n, "polygon size")->required();
    verify_cmd->add_option("--seed", v_seed, "seed for randomized checks");
    verify_cmd->add_option("--output", v_output);
    verify_cmd->callback([&] {
        if (v_what != "all") throw input_error("UnknownSuite", "expected 'all', got '" + v_what + "'");
        int cap = max_polygon();
        if (v_n > cap)
            throw input_error("TooLarge", "n=" + std::to_string(v_n) + " exceeds CLUSTERFORGE_MAX_N=" +
                                              std::to_string(cap));
        std::string out;
        for (const VerifyResult& r : verify_all(v_n, v_seed)) {
            out += (r.passed ? "[PASS] " : "[FAIL] ") + r.name + ": " + r.detail + "\n";
            if (!r.passed) exit_code = 2;
        }
        out.pop_back();
        emit(v_output, out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << error_to_json("Usage", e.what()) << std::endl;
        return 1;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const input_error& e) {
        std::cerr << error_to_json(e.kind(), message_of(e.kind(), e.what())) << std::endl;
        return 1;
    } catch (const internal_error& e) {
        std::cerr << error_to_json(e.kind(), message_of(e.kind(), e.what())) << std::endl;
        return 3;
    } catch (const std::exception& e) {
        std::cerr << error_to_json("Unexpected", e.what()) << std::endl;
        return 3;
    }
}
