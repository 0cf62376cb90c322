#include "clusterforge/order.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

#include "clusterforge/errors.hpp"

namespace clusterforge {

bool tiled_valid(const ExponentMatrix& m) {
    for (int i = 0; i < m.size; ++i)
        if (m.a[i][i] != 0) return false;
    for (int i = 0; i < m.size; ++i)
        for (int j = 0; j < m.size; ++j)
            for (int k = 0; k < m.size; ++k)
                if (m.a[i][j] + m.a[j][k] < m.a[i][k]) return false;
    return true;
}

namespace {

int formula_length(const Edge& from, const Edge& to, int n) {
    int i = from.s, j = from.t, k = to.s, l = to.t;
    int wrap = std::min((j > k) + (i > l), (i > k) + (j > l));
    return k + l - i - j + n * wrap;
}

std::vector<std::vector<int>> dijkstra_table(const Triangulation& sigma) {
    IceQuiver q = build_ice_quiver(sigma);
    int v = static_cast<int>(q.vertices().size());
    std::vector<std::vector<std::pair<int, int>>> adj(v);  // (target-1, weight)
    for (const Arrow& a : q.arrows()) adj[a.source - 1].push_back({a.target - 1, a.theta});

    std::vector<std::vector<int>> l(v, std::vector<int>(v, std::numeric_limits<int>::max()));
    for (int s = 0; s < v; ++s) {
        auto& dist = l[s];
        dist[s] = 0;
        using Item = std::pair<int, int>;  // (distance, vertex)
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        heap.push({0, s});
        while (!heap.empty()) {
            auto [d, u] = heap.top();
            heap.pop();
            if (d > dist[u]) continue;
            for (auto& [w, theta] : adj[u])
                if (d + theta < dist[w]) {
                    dist[w] = d + theta;
                    heap.push({dist[w], w});
                }
        }
        for (int u = 0; u < v; ++u)
            if (dist[u] == std::numeric_limits<int>::max())
                throw internal_error("Unreachable", "quiver is not strongly connected");
    }
    return l;
}

}  // namespace

ThetaMetric::ThetaMetric(const Triangulation& sigma, LengthMode mode) : n_(sigma.n()) {
    const auto& edges = sigma.edges();
    int v = static_cast<int>(edges.size());
    if (mode == LengthMode::shortest_path) {
        l_ = dijkstra_table(sigma);
        return;
    }
    l_.assign(v, std::vector<int>(v, 0));
    for (int a = 0; a < v; ++a)
        for (int b = 0; b < v; ++b) l_[a][b] = formula_length(edges[a], edges[b], n_);
}

int ThetaMetric::length(int v1, int v2) const {
    if (v1 < 1 || v2 < 1 || v1 > size() || v2 > size())
        throw input_error("IndexOutOfRange", "vertex pair (" + std::to_string(v1) + "," +
                                                 std::to_string(v2) + ")");
    return l_[v1 - 1][v2 - 1];
}

int min_theta_length(const Triangulation& sigma, int v1, int v2, LengthMode mode) {
    return ThetaMetric(sigma, mode).length(v1, v2);
}

int d_exponent(const ThetaMetric& m, int i, int j, int k) {
    int s = m.length(i, j) + m.length(j, k) - m.length(i, k);
    if (s < 0 || s % m.n() != 0)
        throw internal_error("NonIntegral", "defect " + std::to_string(s) + " at (" + std::to_string(i) +
                                                "," + std::to_string(j) + "," + std::to_string(k) + ")");
    return s / m.n();
}

int d_exponent(const Triangulation& sigma, int i, int j, int k) {
    return d_exponent(ThetaMetric(sigma), i, j, k);
}

ExponentMatrix tiled_exponent_matrix(const Triangulation& sigma, int k) {
    ThetaMetric m(sigma);
    ExponentMatrix out;
    out.size = m.size();
    if (k < 1 || k > out.size) throw input_error("IndexOutOfRange", "base vertex " + std::to_string(k));
    out.a.assign(out.size, std::vector<int>(out.size, 0));
    for (int i = 1; i <= out.size; ++i)
        for (int j = 1; j <= out.size; ++j) out.a[i - 1][j - 1] = d_exponent(m, k, i, j);
    return out;
}

ExponentMatrix lambda_matrix(int n) {
    if (n < 3) throw input_error("IndexOutOfRange", "n must be at least 3");
    ExponentMatrix out;
    out.size = n;
    out.a.assign(n, std::vector<int>(n, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            out.a[i - 1][j - 1] = (i > j) + (i > j + 1) - (j == n && i == 1);
    return out;
}

ExponentMatrix frozen_part(const Triangulation& sigma) {
    ThetaMetric m(sigma);
    int n = sigma.n();
    ExponentMatrix out;
    out.size = n;
    out.a.assign(n, std::vector<int>(n, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            out.a[i - 1][j - 1] = d_exponent(m, 1, i, j) + (i == n) - (j == n);
    if (out != lambda_matrix(n))
        throw internal_error("Mismatch", "frozen corner of the tiled order differs from the canonical form");
    return out;
}

std::vector<int> module_column_exponents(const Triangulation& sigma, const Edge& e) {
    int id = sigma.edge_id(e);
    if (id == 0) throw input_error("EdgeNotInTriangulation", e.str());
    ThetaMetric m(sigma);
    int n = sigma.n();
    std::vector<int> col(n);
    for (int r = 1; r <= n; ++r) col[r - 1] = d_exponent(m, 1, r, id) + (r == n);
    int low = *std::min_element(col.begin(), col.end());
    for (int& c : col) c -= low;
    return col;
}

CMModule module_column(const Triangulation& sigma, const Edge& e) {
    std::vector<int> col = module_column_exponents(sigma, e);
    CMModule m(e.s, e.t, sigma.n());
    if (col != column_of(m))
        throw internal_error("ColumnPattern", "column at " + e.str() + " is not a step pattern");
    return m;
}

int hom_generator_exponent(const CMModule& m, const CMModule& nmod) {
    if (m.n != nmod.n)
        throw input_error("SizeMismatch", m.str() + " lives in a different polygon than " + nmod.str());
    std::vector<int> a = column_of(m), b = column_of(nmod);
    int g = std::numeric_limits<int>::min();
    for (int r = 0; r < m.n; ++r) g = std::max(g, b[r] - a[r]);
    return g;
}

ExponentMatrix dualize(const ExponentMatrix& m) {
    ExponentMatrix out;
    out.size = m.size;
    out.a.assign(m.size, std::vector<int>(m.size, 0));
    for (int i = 0; i < m.size; ++i)
        for (int j = 0; j < m.size; ++j) out.a[i][j] = -m.a[j][i];
    return out;
}

bool gorenstein_check(int n) {
    ExponentMatrix lambda = lambda_matrix(n);
    ExponentMatrix dual = dualize(lambda);
    // Column change: dual column c+2 carries x^2, the last two wrap around.
    ExponentMatrix g;
    g.size = n;
    g.a.assign(n, std::vector<int>(n, 0));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n - 2; ++c) g.a[r][c] = dual.a[r][c + 2] + 2;
        g.a[r][n - 2] = dual.a[r][0];
        g.a[r][n - 1] = dual.a[r][1];
    }
    return g == lambda;
}

SimpleQuiver end_quiver(const Triangulation& sigma) {
    ThetaMetric m(sigma);
    int v = m.size();
    SimpleQuiver out;
    out.vertices = v;
    // Maps between the column lattices at i and j are spanned by paths from j
    // to i, so irreducibility is read off the reversed metric.
    for (int i = 1; i <= v; ++i)
        for (int j = 1; j <= v; ++j) {
            if (i == j || m.length(j, i) <= 0) continue;
            bool split = false;
            for (int k = 1; k <= v && !split; ++k)
                if (k != i && k != j && m.length(j, k) + m.length(k, i) == m.length(j, i)) split = true;
            if (!split) out.arrows.push_back({i, j});
        }
    std::sort(out.arrows.begin(), out.arrows.end());
    return out;
}

SimpleQuiver opposite_quiver(const IceQuiver& q) {
    SimpleQuiver out;
    out.vertices = static_cast<int>(q.vertices().size());
    for (const Arrow& a : q.arrows()) out.arrows.push_back({a.target, a.source});
    std::sort(out.arrows.begin(), out.arrows.end());
    return out;
}

bool snake_order_check(int n) {
    ExponentMatrix lambda = lambda_matrix(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int k = ((j - i) % n + n) % n;
            // Entry X^i S_k X^{-j} with S_k = X^k (k <= n-2) or Y; negative
            // powers are cleared with X^n = x^2, a single Y with XY = x.
            int a, e;
            if (k <= n - 2) {
                a = i + k + n - j;
                e = 0;
            } else {
                a = i - 1 + n - j;
                e = 1;
            }
            if (a < 0 || a % n != 0)
                throw internal_error("ReductionFailure", "entry (" + std::to_string(i) + "," +
                                                             std::to_string(j) +
                                                             ") does not reduce to a power of x");
            e += 2 * (a / n) - 2;
            if (e != lambda.at(i, j)) return false;
        }
    return true;
}

std::string bracket_str(int e) {
    if (e == 0) return "R";
    if (e == 1) return "(x)";
    return "(x^" + std::to_string(e) + ")";
}

std::string matrix_str(const ExponentMatrix& m) {
    size_t width = 1;
    for (const auto& row : m.a)
        for (int e : row) width = std::max(width, bracket_str(e).size());
    std::ostringstream os;
    for (const auto& row : m.a) {
        for (int j = 0; j < m.size; ++j) {
            std::string cell = bracket_str(row[j]);
            os << cell << std::string(width - cell.size() + (j + 1 < m.size ? 1 : 0), ' ');
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace clusterforge
