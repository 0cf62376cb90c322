#include "clusterforge/quiver.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "clusterforge/errors.hpp"

namespace clusterforge {

namespace {

std::string internal_label(int idx) {  // 0 -> "a", 25 -> "z", 26 -> "aa"
    std::string s;
    if (idx < 26) {
        s.push_back(static_cast<char>('a' + idx));
    } else {
        idx -= 26;
        s.push_back(static_cast<char>('a' + idx / 26));
        s.push_back(static_cast<char>('a' + idx % 26));
    }
    return s;
}

const char* kGreek[] = {"α", "β", "γ", "δ", "ε", "ζ", "η", "θ", "ι", "κ", "λ", "μ"};

std::string external_label(int idx) {
    if (idx < 12) return kGreek[idx];
    return "ω" + std::to_string(idx);  // unreachable for n <= 12
}

// Rotate a cyclic arrow-id word so the minimal id comes first.
std::vector<int> rotate_min(std::vector<int> w) {
    auto it = std::min_element(w.begin(), w.end());
    std::rotate(w.begin(), it, w.end());
    return w;
}

}  // namespace

IceQuiver build_ice_quiver(const Triangulation& sigma) {
    const int n = sigma.n();
    IceQuiver q;
    q.sigma_ = sigma;

    const auto& edges = sigma.edges();
    for (int id = 1; id <= static_cast<int>(edges.size()); ++id)
        q.vertices_.push_back({id, edges[id - 1], id <= n});

    // Incident edges at each polygon vertex, sorted by the other endpoint in
    // cyclic order v+1, v+2, ..., v-1.  Consecutive entries bound a common
    // triangle; the anticlockwise rule orients the arrow from the earlier
    // edge to the later one.
    std::vector<std::vector<int>> star(n + 1);  // star[v] = vertex ids
    for (int v = 1; v <= n; ++v) {
        std::vector<std::pair<int, int>> inc;  // (cyclic pos of other endpoint, edge id)
        for (int id = 1; id <= static_cast<int>(edges.size()); ++id) {
            const Edge& e = edges[id - 1];
            int other = e.s == v ? e.t : (e.t == v ? e.s : 0);
            if (other == 0) continue;
            inc.push_back({(other - v + n) % n, id});
        }
        std::sort(inc.begin(), inc.end());
        for (auto& [pos, id] : inc) star[v].push_back(id);
    }

    // Internal arrows, one triangle at a time: {u<v<w} contributes
    // (v,w)->(u,v), (u,v)->(u,w), (u,w)->(v,w), listed by target edge.
    std::map<std::pair<int, int>, int> internal_at;  // (source,target) -> arrow id
    int next_id = 1, letter = 0;
    auto add_internal = [&](const Edge& from, const Edge& to, int joint) {
        int src = sigma.edge_id(from), dst = sigma.edge_id(to);
        int o1 = from.s == joint ? from.t : from.s;
        int o2 = to.s == joint ? to.t : to.s;
        int theta = ((o2 - o1) % n + n) % n;
        q.arrows_.push_back({next_id, src, dst, ArrowKind::internal, theta, internal_label(letter++)});
        internal_at[{src, dst}] = next_id;
        ++next_id;
    };
    for (const auto& tri : sigma.triangles()) {
        int u = tri[0], v = tri[1], w = tri[2];
        add_internal(Edge(v, w), Edge(u, v), v);
        add_internal(Edge(u, v), Edge(u, w), u);
        add_internal(Edge(u, w), Edge(v, w), w);
        int s = q.arrows_[next_id - 4].theta + q.arrows_[next_id - 3].theta + q.arrows_[next_id - 2].theta;
        if (s != n)
            throw internal_error("CycleLength", "triangle cycle has total weight " + std::to_string(s));
        q.potential_.push_back({+1, {next_id - 3, next_id - 2, next_id - 1}});
    }

    // External arrow around every polygon vertex meeting a diagonal: from the
    // clockwise side (v-1,v) to the anticlockwise side (v,v+1).
    std::vector<int> big_vertices;
    int greek = 0;
    for (int v = 1; v <= n; ++v) {
        if (star[v].size() <= 2) continue;  // only the two sides meet here
        big_vertices.push_back(v);
        Edge from(v == 1 ? n : v - 1, v);
        Edge to(v, v == n ? 1 : v + 1);
        q.arrows_.push_back({next_id, sigma.edge_id(from), sigma.edge_id(to), ArrowKind::external, 2,
                             external_label(greek++)});
        ++next_id;
    }

    // Big cycles: the internal chain around v closed up by its external arrow.
    for (int v : big_vertices) {
        std::vector<int> cycle;
        for (size_t i = 0; i + 1 < star[v].size(); ++i) {
            auto it = internal_at.find({star[v][i], star[v][i + 1]});
            if (it == internal_at.end())
                throw internal_error("BigCycle", "missing chain arrow at polygon vertex " + std::to_string(v));
            cycle.push_back(it->second);
        }
        Edge from(v == 1 ? n : v - 1, v);
        int ext = 0;
        for (const Arrow& a : q.arrows_)
            if (a.kind == ArrowKind::external && a.source == sigma.edge_id(from)) ext = a.id;
        cycle.push_back(ext);
        int s = 0;
        for (int id : cycle) s += q.arrow(id).theta;
        if (s != n)
            throw internal_error("CycleLength", "big cycle has total weight " + std::to_string(s));
        q.potential_.push_back({-1, rotate_min(cycle)});
    }

    return q;
}

int theta_length(const IceQuiver& q, int arrow_id) {
    return q.arrow(arrow_id).theta;
}

namespace {

// Cyclic derivative remainder: drop the arrow, keep the rest in cyclic order
// starting right after it.
std::vector<int> derivative(const std::vector<int>& cycle, int arrow) {
    auto it = std::find(cycle.begin(), cycle.end(), arrow);
    std::vector<int> rem(it + 1, cycle.end());
    rem.insert(rem.end(), cycle.begin(), it);
    return rem;
}

}  // namespace

std::vector<Relation> jacobian_relations(const IceQuiver& q) {
    std::vector<Relation> rels;
    for (const Arrow& a : q.arrows()) {
        if (q.vertex(a.source).frozen && q.vertex(a.target).frozen) continue;
        const PotentialTerm* tri = nullptr;
        const PotentialTerm* big = nullptr;
        for (const PotentialTerm& t : q.potential()) {
            if (std::find(t.cycle.begin(), t.cycle.end(), a.id) == t.cycle.end()) continue;
            ((t.sign > 0) ? tri : big) = &t;
        }
        if (!tri || !big)
            throw internal_error("RelationShape", "arrow " + a.label + " not in one triangle and one big cycle");
        rels.push_back({a.id, derivative(tri->cycle, a.id), derivative(big->cycle, a.id)});
    }
    return rels;
}

std::string relation_str(const IceQuiver& q, const Relation& r) {
    std::string s;
    for (int id : r.plus) s += q.arrow(id).label;
    s += " - ";
    for (int id : r.minus) s += q.arrow(id).label;
    return s;
}

std::vector<std::vector<int>> exchange_matrix(const IceQuiver& q) {
    int m = static_cast<int>(q.vertices().size());
    std::vector<std::vector<int>> b(m, std::vector<int>(m, 0));
    for (const Arrow& a : q.arrows()) {
        b[a.source - 1][a.target - 1] += 1;
        b[a.target - 1][a.source - 1] -= 1;
    }
    return b;
}

std::vector<std::vector<int>> mutate_exchange_matrix(std::vector<std::vector<int>> b, int k) {
    int m = static_cast<int>(b.size());
    int kk = k - 1;
    std::vector<std::vector<int>> out(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == kk || j == kk)
                out[i][j] = -b[i][j];
            else
                out[i][j] = b[i][j] + (std::abs(b[i][kk]) * b[kk][j] + b[i][kk] * std::abs(b[kk][j])) / 2;
        }
    return out;
}

std::vector<std::vector<int>> mutate_exchange_matrix(const IceQuiver& q, int k) {
    if (k < 1 || k > static_cast<int>(q.vertices().size()))
        throw input_error("IndexOutOfRange", "vertex " + std::to_string(k));
    if (q.vertex(k).frozen)
        throw input_error("FrozenVertex", "cannot mutate at frozen vertex " + std::to_string(k));
    return mutate_exchange_matrix(exchange_matrix(q), k);
}

std::string quiver_dot(const IceQuiver& q) {
    std::ostringstream os;
    os << "digraph ice_quiver {\n";
    os << "  rankdir=LR;\n";
    for (const QuiverVertex& v : q.vertices()) {
        os << "  v" << v.id << " [label=\"(" << v.edge.s << "," << v.edge.t << ")\"";
        if (v.frozen) os << " shape=box";
        os << "];\n";
    }
    for (const Arrow& a : q.arrows()) {
        os << "  v" << a.source << " -> v" << a.target << " [label=\"" << a.theta << "\"";
        if (a.kind == ArrowKind::external) os << " style=dashed";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace clusterforge
