#include "clusterforge/io.hpp"

#include <algorithm>

#include <json.hpp>

#include "clusterforge/errors.hpp"

namespace clusterforge {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

json parse_or_throw(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw input_error("ParseError", e.what());
    }
}

int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw input_error("ParseError", std::string("missing integer field '") + key + "'");
    return j[key].get<int>();
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw input_error("ParseError", "polynomial must be a coefficient array");
    std::vector<mpq_class> coeffs;
    for (const auto& c : j) {
        mpq_class q;
        if (c.is_number_integer())
            q = c.get<long>();
        else if (c.is_string()) {
            try {
                q = mpq_class(c.get<std::string>());
            } catch (const std::invalid_argument&) {
                throw input_error("ParseError", "bad rational literal " + c.get<std::string>());
            }
            q.canonicalize();
        } else
            throw input_error("ParseError", "coefficients must be integers or rational strings");
        coeffs.push_back(q);
    }
    return Poly(coeffs);
}

ordered poly_to_json(const Poly& p) {
    ordered coeffs = ordered::array();
    for (int d = 0; d <= p.degree(); ++d) coeffs.push_back(p.coeff(d).get_str());
    return coeffs;
}

ordered matrix_to_json(const PolyMatrix& m) {
    ordered rows = ordered::array();
    for (int r = 0; r < m.rows; ++r) {
        ordered row = ordered::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(poly_to_json(m.m[r][c]));
        rows.push_back(row);
    }
    return rows;
}

PolyMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw input_error("ParseError", "matrix must be a non-empty row array");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    PolyMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j[r].size()) != cols)
            throw input_error("ParseError", "ragged matrix rows");
        for (int c = 0; c < cols; ++c) m.m[r][c] = poly_from_json(j[r][c]);
    }
    return m;
}

}  // namespace

Edge parse_edge(const std::string& text) {
    size_t dash = text.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == text.size())
        throw input_error("MalformedEdge", "expected 's-t', got '" + text + "'");
    int a = 0, b = 0;
    try {
        size_t used = 0;
        a = std::stoi(text.substr(0, dash), &used);
        if (used != dash) throw std::invalid_argument(text);
        std::string rest = text.substr(dash + 1);
        b = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw input_error("MalformedEdge", "expected 's-t', got '" + text + "'");
    }
    if (a == b) throw input_error("MalformedEdge", "edge endpoints coincide in '" + text + "'");
    return Edge(a, b);
}

std::vector<Edge> parse_edge_list(const std::string& text) {
    std::vector<Edge> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string piece = text.substr(pos, comma - pos);
        if (piece.empty()) throw input_error("MalformedEdge", "empty entry in edge list");
        out.push_back(parse_edge(piece));
        pos = comma + 1;
    }
    return out;
}

std::string triangulation_to_json(const Triangulation& t) {
    ordered j;
    j["n"] = t.n();
    j["diagonals"] = ordered::array();
    for (const Edge& d : t.diagonals()) j["diagonals"].push_back({d.s, d.t});
    return j.dump();
}

Triangulation triangulation_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    int n = int_field(j, "n");
    std::vector<Edge> diagonals;
    if (!j.contains("diagonals") || !j["diagonals"].is_array())
        throw input_error("ParseError", "missing 'diagonals' array");
    for (const auto& d : j["diagonals"]) {
        if (!d.is_array() || d.size() != 2)
            throw input_error("ParseError", "diagonal entries must be [s,t] pairs");
        diagonals.emplace_back(d[0].get<int>(), d[1].get<int>());
    }
    return validate_triangulation(n, diagonals);
}

std::string quiver_to_json(const IceQuiver& q) {
    ordered j;
    j["n"] = q.n();
    j["vertices"] = ordered::array();
    for (const QuiverVertex& v : q.vertices())
        j["vertices"].push_back({{"id", v.id}, {"edge", {v.edge.s, v.edge.t}}, {"frozen", v.frozen}});
    j["arrows"] = ordered::array();
    for (const Arrow& a : q.arrows())
        j["arrows"].push_back({{"id", a.id},
                               {"source", a.source},
                               {"target", a.target},
                               {"kind", a.kind == ArrowKind::internal ? "internal" : "external"},
                               {"theta", a.theta},
                               {"label", a.label}});
    j["potential"] = ordered::array();
    for (const PotentialTerm& t : q.potential())
        j["potential"].push_back({{"sign", t.sign}, {"cycle", t.cycle}});
    return j.dump();
}

std::string exponent_matrix_to_json(const ExponentMatrix& m) {
    ordered j;
    j["size"] = m.size;
    j["a"] = m.a;
    return j.dump();
}

ExponentMatrix exponent_matrix_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    ExponentMatrix m;
    m.size = int_field(j, "size");
    if (!j.contains("a")) throw input_error("ParseError", "missing 'a' matrix");
    m.a = j["a"].get<std::vector<std::vector<int>>>();
    if (static_cast<int>(m.a.size()) != m.size)
        throw input_error("ParseError", "matrix size disagrees with 'size'");
    for (const auto& row : m.a)
        if (static_cast<int>(row.size()) != m.size)
            throw input_error("ParseError", "matrix size disagrees with 'size'");
    return m;
}

std::string cm_module_to_json(const CMModule& m) {
    ordered j;
    j["n"] = m.n;
    j["i"] = m.i;
    j["j"] = m.j;
    return j.dump();
}

CMModule cm_module_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    return CMModule(int_field(j, "i"), int_field(j, "j"), int_field(j, "n"));
}

std::string module_set_to_json(const std::vector<CMModule>& mods) {
    std::vector<CMModule> sorted = mods;
    std::sort(sorted.begin(), sorted.end());
    ordered j = ordered::array();
    for (const CMModule& m : sorted) j.push_back({m.i, m.j});
    return j.dump();
}

std::string graded_to_json(const GradedCM& m) {
    ordered j;
    j["n"] = m.n;
    j["i"] = m.i;
    j["j"] = m.j;
    return j.dump();
}

GradedCM graded_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    return GradedCM(int_field(j, "i"), int_field(j, "j"), int_field(j, "n"));
}

std::string cycle_rep_to_json(const CycleRep& rep) {
    ordered j;
    j["n"] = rep.n;
    j["A"] = ordered::array();
    j["B"] = ordered::array();
    for (const PolyMatrix& m : rep.A) j["A"].push_back(matrix_to_json(m));
    for (const PolyMatrix& m : rep.B) j["B"].push_back(matrix_to_json(m));
    return j.dump();
}

CycleRep cycle_rep_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    CycleRep rep;
    rep.n = int_field(j, "n");
    if (!j.contains("A") || !j.contains("B"))
        throw input_error("ParseError", "cycle representation needs 'A' and 'B' lists");
    for (const auto& m : j["A"]) rep.A.push_back(matrix_from_json(m));
    for (const auto& m : j["B"]) rep.B.push_back(matrix_from_json(m));
    return rep;
}

std::string laurent_to_json(const LaurentPoly& p, const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != p.nvars())
        throw internal_error("SizeMismatch", "one name per variable required");
    ordered j = ordered::array();
    for (const auto& [exps, coeff] : p.terms()) {
        ordered term;
        if (coeff.fits_slong_p())
            term["coeff"] = coeff.get_si();
        else
            term["coeff"] = coeff.get_str();
        term["exps"] = ordered::object();
        for (int i = 0; i < p.nvars(); ++i)
            if (exps[i] != 0) term["exps"][names[i]] = exps[i];
        j.push_back(term);
    }
    return j.dump();
}

LaurentPoly laurent_from_json(const std::string& text, const std::vector<std::string>& names) {
    json j = parse_or_throw(text);
    if (!j.is_array()) throw input_error("ParseError", "Laurent polynomial must be a term array");
    int nvars = static_cast<int>(names.size());
    LaurentPoly out(nvars);
    for (const auto& term : j) {
        mpz_class coeff;
        if (term.contains("coeff") && term["coeff"].is_number_integer())
            coeff = term["coeff"].get<long>();
        else if (term.contains("coeff") && term["coeff"].is_string())
            coeff = mpz_class(term["coeff"].get<std::string>());
        else
            throw input_error("ParseError", "term without integer 'coeff'");
        LaurentPoly::Exps exps(nvars, 0);
        if (term.contains("exps"))
            for (const auto& [key, value] : term["exps"].items()) {
                auto it = std::find(names.begin(), names.end(), key);
                if (it == names.end()) throw input_error("ParseError", "unknown variable '" + key + "'");
                exps[it - names.begin()] = value.get<int>();
            }
        out.add_term(exps, coeff);
    }
    return out;
}

std::string error_to_json(const std::string& kind, const std::string& message) {
    ordered j;
    j["error"] = {{"kind", kind}, {"message", message}};
    return j.dump();
}

}  // namespace clusterforge
