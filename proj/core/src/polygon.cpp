#include "clusterforge/polygon.hpp"

#include <algorithm>
#include <set>

#include "clusterforge/errors.hpp"

namespace clusterforge {

Edge::Edge(int a, int b) {
    if (a == b)
        throw input_error("IndexOutOfRange", "degenerate edge " + std::to_string(a) + "-" + std::to_string(b));
    s = std::min(a, b);
    t = std::max(a, b);
}

std::string Edge::str() const {
    return std::to_string(s) + "-" + std::to_string(t);
}

bool crossing(const Edge& a, const Edge& b) {
    return (a.s < b.s && b.s < a.t && a.t < b.t) ||
           (b.s < a.s && a.s < b.t && b.t < a.t);
}

int Triangulation::edge_id(const Edge& e) const {
    auto it = std::find(edges_.begin(), edges_.end(), e);
    if (it == edges_.end()) return 0;
    return static_cast<int>(it - edges_.begin()) + 1;
}

Triangulation validate_triangulation(int n, std::vector<Edge> diagonals) {
    if (n < 3)
        throw input_error("IndexOutOfRange", "polygon size " + std::to_string(n) + " < 3");

    std::sort(diagonals.begin(), diagonals.end());
    diagonals.erase(std::unique(diagonals.begin(), diagonals.end()), diagonals.end());

    for (const Edge& e : diagonals) {
        if (e.s < 1 || e.t > n)
            throw input_error("IndexOutOfRange", "edge " + e.str() + " outside 1.." + std::to_string(n));
        if (e.is_boundary(n))
            throw input_error("NotADiagonal", "edge " + e.str() + " is a polygon side");
    }
    for (size_t i = 0; i < diagonals.size(); ++i)
        for (size_t j = i + 1; j < diagonals.size(); ++j)
            if (crossing(diagonals[i], diagonals[j]))
                throw input_error("CrossingPair", diagonals[i].str() + " crosses " + diagonals[j].str());
    if (static_cast<int>(diagonals.size()) != n - 3)
        throw input_error("NotMaximal", std::to_string(diagonals.size()) + " diagonals, need " + std::to_string(n - 3));

    Triangulation t;
    t.n_ = n;
    t.diagonals_ = diagonals;

    t.edges_.reserve(2 * n - 3);
    for (int i = 1; i < n; ++i) t.edges_.emplace_back(i, i + 1);
    t.edges_.emplace_back(1, n);
    t.edges_.insert(t.edges_.end(), diagonals.begin(), diagonals.end());

    // In a triangulated polygon a vertex triple bounds a face exactly when
    // all three connecting chords are present, so a plain triple scan is a
    // correct face list.
    std::set<Edge> present(t.edges_.begin(), t.edges_.end());
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            if (!present.count(Edge(u, v))) continue;
            for (int w = v + 1; w <= n; ++w)
                if (present.count(Edge(v, w)) && present.count(Edge(u, w)))
                    t.triangles_.push_back({u, v, w});
        }
    if (static_cast<int>(t.triangles_.size()) != n - 2)
        throw internal_error("FaceCount", "triangle scan found " + std::to_string(t.triangles_.size()) +
                                              " faces for n=" + std::to_string(n));
    return t;
}

std::pair<Triangulation, Edge> flip(const Triangulation& t, const Edge& d) {
    const auto& diags = t.diagonals();
    if (std::find(diags.begin(), diags.end(), d) == diags.end())
        throw input_error("NotInTriangulation", "diagonal " + d.str() + " not present");

    // The two faces adjacent to d give the opposite corners of its quad.
    std::vector<int> corners;
    for (const auto& tri : t.triangles()) {
        int hit = 0, other = 0;
        for (int v : tri) {
            if (v == d.s || v == d.t)
                ++hit;
            else
                other = v;
        }
        if (hit == 2) corners.push_back(other);
    }
    if (corners.size() != 2)
        throw internal_error("FlipQuad", "diagonal " + d.str() + " lies in " + std::to_string(corners.size()) + " faces");

    Edge replacement(corners[0], corners[1]);
    std::vector<Edge> next;
    for (const Edge& e : diags)
        if (!(e == d)) next.push_back(e);
    next.push_back(replacement);
    return {validate_triangulation(t.n(), std::move(next)), replacement};
}

namespace {

// Triangulations of the convex sub-polygon on the given vertex chain (in
// polygon order); each is reported as the set of chords it uses, sides of the
// chain included.  Classic Catalan recursion on the apex of the base edge.
void enumerate_chain(const std::vector<int>& chain, std::vector<Edge>& acc,
                     std::vector<std::vector<Edge>>& out) {
    size_t m = chain.size();
    if (m < 3) {
        out.push_back(acc);
        return;
    }
    for (size_t k = 1; k + 1 < m; ++k) {
        size_t before = acc.size();
        acc.emplace_back(chain.front(), chain[k]);
        acc.emplace_back(chain[k], chain.back());
        std::vector<int> left(chain.begin(), chain.begin() + k + 1);
        std::vector<int> right(chain.begin() + k, chain.end());
        std::vector<std::vector<Edge>> rights;
        std::vector<Edge> racc;
        enumerate_chain(right, racc, rights);
        for (auto& r : rights) {
            std::vector<Edge> combined = acc;
            combined.insert(combined.end(), r.begin(), r.end());
            std::vector<std::vector<Edge>> lefts;
            enumerate_chain(left, combined, lefts);
            for (auto& l : lefts) out.push_back(std::move(l));
        }
        acc.resize(before);
    }
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(int n) {
    if (n < 3)
        throw input_error("IndexOutOfRange", "polygon size " + std::to_string(n) + " < 3");
    if (n > 12)
        throw input_error("TooLarge", "n=" + std::to_string(n) + " exceeds enumeration cap 12");

    std::vector<int> chain(n);
    for (int i = 0; i < n; ++i) chain[i] = i + 1;
    std::vector<std::vector<Edge>> raw;
    std::vector<Edge> acc;
    enumerate_chain(chain, acc, raw);

    std::vector<Triangulation> result;
    result.reserve(raw.size());
    for (auto& edge_set : raw) {
        std::vector<Edge> diags;
        for (const Edge& e : edge_set)
            if (e.is_diagonal(n)) diags.push_back(e);
        result.push_back(validate_triangulation(n, std::move(diags)));
    }
    return result;
}

Triangulation fan_triangulation(int n, int apex) {
    if (n < 3)
        throw input_error("IndexOutOfRange", "polygon size " + std::to_string(n) + " < 3");
    if (apex < 1 || apex > n)
        throw input_error("IndexOutOfRange", "apex " + std::to_string(apex) + " outside 1.." + std::to_string(n));

    std::vector<Edge> diags;
    for (int k = 1; k <= n; ++k) {
        if (k == apex) continue;
        Edge e(apex, k);
        if (e.is_diagonal(n)) diags.push_back(e);
    }
    return validate_triangulation(n, std::move(diags));
}

}  // namespace clusterforge
