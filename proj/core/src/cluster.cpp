#include "clusterforge/cluster.hpp"

#include <algorithm>

#include "clusterforge/cmcat.hpp"
#include "clusterforge/errors.hpp"
#include "clusterforge/quiver.hpp"

namespace clusterforge {

namespace {

// Endpoint of d strictly between e.s and e.t, and the opposite one.
std::pair<int, int> split_endpoints(const Edge& d, const Edge& e) {
    if (d.s > e.s && d.s < e.t) return {d.s, d.t};
    return {d.t, d.s};
}

}  // namespace

ClusterContext::ClusterContext(const Triangulation& sigma0) : sigma0_(sigma0) {
    if (sigma0_.n() < 3)
        throw input_error("IndexOutOfRange", "initial triangulation must have at least 3 vertices");
    for (const Edge& e : sigma0_.edges()) names_.push_back(e.str());
}

const LaurentPoly& ClusterContext::expand(const Edge& e) { return expand_at(e, 0); }

const LaurentPoly& ClusterContext::expand_at(const Edge& e, int depth) {
    int n = sigma0_.n();
    if (e.s < 1 || e.t > n)
        throw input_error("IndexOutOfRange", "edge " + e.str() + " leaves the polygon");
    if (auto it = memo_.find(e); it != memo_.end()) return it->second;
    if (depth > n * n) throw internal_error("RecursionGuard", "expansion recursion too deep");
    if (!in_progress_.insert(e).second)
        throw internal_error("RecursionGuard", "expansion cycled at " + e.str());

    LaurentPoly value;
    if (int id = sigma0_.edge_id(e); id != 0) {
        value = LaurentPoly::variable(nvars(), id - 1);
    } else {
        std::vector<Edge> crossed = crossing_sequence(sigma0_, e);
        if (crossed.empty())
            throw internal_error("ChooserFailure", "no crossing diagonal for " + e.str());
        Edge d = chooser_ ? chooser_(e, crossed) : crossed.front();
        if (!crossing(d, e))
            throw internal_error("ChooserFailure", "chosen diagonal does not cross " + e.str());
        int q[4] = {e.s, e.t, d.s, d.t};
        std::sort(q, q + 4);
        LaurentPoly numerator =
            expand_at(Edge(q[0], q[1]), depth + 1) * expand_at(Edge(q[2], q[3]), depth + 1) +
            expand_at(Edge(q[0], q[3]), depth + 1) * expand_at(Edge(q[1], q[2]), depth + 1);
        value = numerator.divide_exact(expand_at(d, depth + 1));
    }
    in_progress_.erase(e);
    return memo_.emplace(e, std::move(value)).first->second;
}

LaurentPoly expand(const Triangulation& sigma0, const Edge& e) {
    ClusterContext ctx(sigma0);
    return ctx.expand(e);
}

std::vector<Edge> crossing_sequence(const Triangulation& sigma0, const Edge& e) {
    int n = sigma0.n();
    std::vector<Edge> crossed;
    for (const Edge& d : sigma0.diagonals())
        if (crossing(d, e)) crossed.push_back(d);
    std::sort(crossed.begin(), crossed.end(), [&](const Edge& a, const Edge& b) {
        auto [ain, aout] = split_endpoints(a, e);
        auto [bin, bout] = split_endpoints(b, e);
        if (ain != bin) return ain < bin;
        return ((aout - e.s) % n + n) % n > ((bout - e.s) % n + n) % n;
    });
    return crossed;
}

CheckReport verify_plucker(const Triangulation& sigma0) {
    CheckReport report;
    ClusterContext ctx(sigma0);
    int n = sigma0.n();
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
            for (int s = q + 1; s <= n; ++s)
                for (int t = s + 1; t <= n; ++t) {
                    LaurentPoly lhs = ctx.expand(Edge(p, s)) * ctx.expand(Edge(q, t));
                    LaurentPoly rhs = ctx.expand(Edge(p, q)) * ctx.expand(Edge(s, t)) +
                                      ctx.expand(Edge(p, t)) * ctx.expand(Edge(q, s));
                    ++report.checked;
                    if (!(lhs - rhs).is_zero())
                        report.failures.push_back("short relation fails at " + std::to_string(p) + "," +
                                                  std::to_string(q) + "," + std::to_string(s) + "," +
                                                  std::to_string(t));
                }
    return report;
}

CheckReport verify_exchange(const Triangulation& sigma0) {
    CheckReport report;
    ClusterContext ctx(sigma0);
    int n = sigma0.n();
    std::vector<Edge> diagonals;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (Edge(i, j).is_diagonal(n)) diagonals.emplace_back(i, j);
    for (size_t a = 0; a < diagonals.size(); ++a)
        for (size_t b = a + 1; b < diagonals.size(); ++b) {
            if (!crossing(diagonals[a], diagonals[b])) continue;
            CMModule m(diagonals[a].s, diagonals[a].t, n);
            CMModule nn(diagonals[b].s, diagonals[b].t, n);
            auto [one, two] = extension_terms(m, nn);
            LaurentPoly lhs = ctx.expand(diagonals[a]) * ctx.expand(diagonals[b]);
            LaurentPoly rhs = ctx.expand(one[0].edge()) * ctx.expand(one[1].edge()) +
                              ctx.expand(two[0].edge()) * ctx.expand(two[1].edge());
            ++report.checked;
            if (!(lhs - rhs).is_zero())
                report.failures.push_back("exchange fails at " + diagonals[a].str() + " x " +
                                          diagonals[b].str());
        }
    return report;
}

std::vector<int> denominator_vector(const Triangulation& sigma0, const Edge& e) {
    if (!e.is_diagonal(sigma0.n()))
        throw input_error("NotADiagonal", e.str() + " is a side");
    ClusterContext ctx(sigma0);
    LaurentPoly::Exps mins = ctx.expand(e).min_exponents();
    std::vector<int> out;
    for (const Edge& d : sigma0.diagonals()) out.push_back(-mins[sigma0.edge_id(d) - 1]);
    return out;
}

StringModule ext_string_module(const Triangulation& sigma0, const Edge& e) {
    StringModule s;
    if (!e.is_diagonal(sigma0.n()) || sigma0.has_edge(e)) return s;
    s.support = crossing_sequence(sigma0, e);
    if (s.support.empty()) return s;
    IceQuiver q = build_ice_quiver(sigma0);
    for (size_t i = 0; i + 1 < s.support.size(); ++i) {
        int va = sigma0.edge_id(s.support[i]);
        int vb = sigma0.edge_id(s.support[i + 1]);
        bool found = false;
        for (const Arrow& arr : q.arrows()) {
            if (arr.kind != ArrowKind::internal) continue;
            if ((arr.source == va && arr.target == vb) || (arr.source == vb && arr.target == va)) {
                s.arrows.emplace_back(q.vertex(arr.source).edge, q.vertex(arr.target).edge);
                found = true;
                break;
            }
        }
        if (!found)
            throw internal_error("StringArrow", "no arrow joins consecutive crossings of " + e.str());
    }
    return s;
}

long long submodule_count(const StringModule& s) {
    int k = static_cast<int>(s.support.size());
    auto index_of = [&](const Edge& e) {
        for (int i = 0; i < k; ++i)
            if (s.support[i] == e) return i;
        throw internal_error("StringArrow", "arrow endpoint outside support");
    };
    long long count = 0;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        bool closed = true;
        for (const auto& [src, dst] : s.arrows)
            if ((mask >> index_of(src) & 1u) && !(mask >> index_of(dst) & 1u)) {
                closed = false;
                break;
            }
        if (closed) ++count;
    }
    return count;
}

CheckReport positivity_specialization_check(const Triangulation& sigma0) {
    CheckReport report;
    ClusterContext ctx(sigma0);
    int n = sigma0.n();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Edge e(i, j);
            if (!e.is_diagonal(n)) continue;
            const LaurentPoly& val = ctx.expand(e);
            ++report.checked;
            if (!val.all_coefficients_positive()) {
                report.failures.push_back("non-positive coefficient in expansion of " + e.str());
                continue;
            }
            mpz_class at_one = val.eval_at_one();
            mpz_class count(static_cast<long>(submodule_count(ext_string_module(sigma0, e))));
            if (at_one != count)
                report.failures.push_back("specialization of " + e.str() + " is " + at_one.get_str() +
                                          ", submodule count is " + count.get_str());
        }
    return report;
}

}  // namespace clusterforge
