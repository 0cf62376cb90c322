#include "clusterforge/verify.hpp"

#include <algorithm>
#include <random>

#include "clusterforge/cluster.hpp"
#include "clusterforge/cmcat.hpp"
#include "clusterforge/errors.hpp"
#include "clusterforge/graded.hpp"
#include "clusterforge/lattice.hpp"
#include "clusterforge/order.hpp"
#include "clusterforge/polygon.hpp"
#include "clusterforge/quiver.hpp"

namespace clusterforge {

namespace {

long long catalan(int k) {
    long long c = 1;
    for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

VerifyResult check_quiver_invariants(int n, const std::vector<Triangulation>& all) {
    int failures = 0, mutations = 0;
    for (const Triangulation& sigma : all) {
        IceQuiver q = build_ice_quiver(sigma);

        int positive = 0, negative = 0;
        for (const PotentialTerm& term : q.potential()) {
            (term.sign > 0 ? positive : negative)++;
            int total = 0;
            for (int id : term.cycle) total += q.arrow(id).theta;
            if (total != n) ++failures;
        }
        std::vector<bool> touched(n + 1, false);
        for (const Edge& d : sigma.diagonals()) touched[d.s] = touched[d.t] = true;
        int busy = static_cast<int>(std::count(touched.begin(), touched.end(), true));
        if (positive != n - 2 || negative != busy) ++failures;

        for (const Arrow& a : q.arrows()) {
            bool ff = q.vertex(a.source).frozen && q.vertex(a.target).frozen;
            if (a.kind == ArrowKind::external && a.theta != 2) ++failures;
            if (a.kind == ArrowKind::internal && ff && a.theta != n - 2) ++failures;
        }

        // Matrix mutation against the flipped quiver, edge-matched, ignoring
        // entries between two frozen vertices.
        for (const Edge& d : sigma.diagonals()) {
            auto mutated = mutate_exchange_matrix(q, sigma.edge_id(d));
            auto [flipped, replacement] = flip(sigma, d);
            auto target = exchange_matrix(build_ice_quiver(flipped));
            ++mutations;
            bool same = true;
            int count = 2 * n - 3;
            for (int i = 1; i <= count && same; ++i)
                for (int j = 1; j <= count && same; ++j) {
                    if (i <= n && j <= n) continue;
                    Edge ei = q.vertex(i).edge, ej = q.vertex(j).edge;
                    int fi = flipped.edge_id(ei == d ? replacement : ei);
                    int fj = flipped.edge_id(ej == d ? replacement : ej);
                    if (fi == 0 || fj == 0 || mutated[i - 1][j - 1] != target[fi - 1][fj - 1])
                        same = false;
                }
            if (!same) ++failures;
        }
    }
    return {"quiver invariants",
            failures == 0,
            std::to_string(all.size()) + " triangulations, " + std::to_string(mutations) +
                " flip comparisons, " + std::to_string(failures) + " failures"};
}

VerifyResult check_order_identities(int n, const std::vector<Triangulation>& all) {
    int failures = 0;
    for (const Triangulation& sigma : all) {
        ThetaMetric formula(sigma, LengthMode::closed_formula);
        ThetaMetric paths(sigma, LengthMode::shortest_path);
        int count = 2 * n - 3;
        for (int v = 1; v <= count; ++v)
            for (int w = 1; w <= count; ++w)
                if (formula.length(v, w) != paths.length(v, w)) ++failures;

        if (!(frozen_part(sigma) == lambda_matrix(n))) ++failures;
        if (!tiled_valid(tiled_exponent_matrix(sigma, 1))) ++failures;
        if (!(end_quiver(sigma) == opposite_quiver(build_ice_quiver(sigma)))) ++failures;
    }
    if (!gorenstein_check(n)) ++failures;
    if (!snake_order_check(n)) ++failures;
    return {"order identities",
            failures == 0,
            std::to_string(all.size()) + " triangulations, " + std::to_string(failures) + " failures"};
}

VerifyResult check_cmcat_bijections(int n, const std::vector<Triangulation>& all) {
    int failures = 0;
    auto indecomposables = all_indecomposables(n);
    if (static_cast<int>(indecomposables.size()) != n * (n - 1) / 2) ++failures;

    for (const CMModule& m : indecomposables)
        for (const CMModule& nn : indecomposables) {
            if (ext_dim(m, nn) != ext_dim(nn, m)) ++failures;
            stable_hom_dim(m, nn);  // self-checks against the exponent oracle
        }
    for (const CMModule& m : indecomposables)
        if (!is_projective(m)) tau(m);  // self-checks the syzygy-Nakayama factorization

    // Triangulations give cluster-tilting sets...
    std::vector<CMModule> projectives = projective_modules(n);
    for (const Triangulation& sigma : all) {
        std::vector<CMModule> set = projectives;
        for (const Edge& d : sigma.diagonals()) set.emplace_back(d.s, d.t, n);
        if (!is_cluster_tilting(n, set)) ++failures;
    }

    // ...and every full-size diagonal selection is cluster-tilting exactly
    // when it is non-crossing, with Catalan-many successes.
    std::vector<CMModule> diagonals;
    for (const CMModule& m : indecomposables)
        if (!is_projective(m)) diagonals.push_back(m);
    int want = n - 3;
    long long hits = 0;
    std::vector<int> idx(want);
    if (want == 0) {
        hits = is_cluster_tilting(n, projectives) ? 1 : 0;
    } else {
        for (int i = 0; i < want; ++i) idx[i] = i;
        while (true) {
            std::vector<CMModule> set = projectives;
            bool noncrossing = true;
            for (int a = 0; a < want && noncrossing; ++a)
                for (int b = a + 1; b < want; ++b)
                    if (crossing(diagonals[idx[a]].edge(), diagonals[idx[b]].edge())) {
                        noncrossing = false;
                        break;
                    }
            for (int i : idx) set.push_back(diagonals[i]);
            bool tilting = is_cluster_tilting(n, set);
            if (tilting != noncrossing) ++failures;
            if (tilting) ++hits;
            int k = want - 1, limit = static_cast<int>(diagonals.size());
            while (k >= 0 && idx[k] == limit - want + k) --k;
            if (k < 0) break;
            ++idx[k];
            for (int i = k + 1; i < want; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    if (hits != catalan(n - 2) || static_cast<long long>(all.size()) != catalan(n - 2)) ++failures;

    return {"module category bijections",
            failures == 0,
            std::to_string(hits) + " cluster-tilting sets, " + std::to_string(failures) + " failures"};
}

VerifyResult check_lattice_roundtrips(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto indecomposables = all_indecomposables(n);
    int failures = 0, trials = 25;
    for (int t = 0; t < trials; ++t) {
        int rank = 1 + static_cast<int>(rng() % 4);
        std::vector<CMModule> multiset;
        for (int r = 0; r < rank; ++r) multiset.push_back(indecomposables[rng() % indecomposables.size()]);
        std::sort(multiset.begin(), multiset.end());
        try {
            if (decompose_cm(random_glue(multiset, rng())) != multiset) ++failures;
        } catch (const std::exception&) {
            ++failures;
        }
    }
    return {"lattice round-trips",
            failures == 0,
            std::to_string(trials) + " glued instances, " + std::to_string(failures) + " failures"};
}

VerifyResult check_graded_tilting(int n, const std::vector<Triangulation>& all) {
    int failures = 0;
    for (const Triangulation& sigma : all) {
        TiltingReport report = verify_tilting(tilting_from_triangulation(sigma), 2 * n);
        if (!report.ok()) ++failures;
    }
    return {"graded tilting",
            failures == 0,
            std::to_string(all.size()) + " tilting objects, " + std::to_string(failures) + " failures"};
}

VerifyResult check_cluster_reports(int n, const std::vector<Triangulation>& all) {
    int failures = 0, bases = 0;
    std::vector<Triangulation> pick;
    if (n <= 7)
        pick = all;
    else
        pick.push_back(fan_triangulation(n, 1));
    for (const Triangulation& sigma : pick) {
        ++bases;
        if (!verify_plucker(sigma).ok()) ++failures;
        if (!verify_exchange(sigma).ok()) ++failures;
        if (!positivity_specialization_check(sigma).ok()) ++failures;
    }
    return {"cluster expansions",
            failures == 0,
            std::to_string(bases) + " initial triangulations, " + std::to_string(failures) + " failures"};
}

}  // namespace

std::vector<VerifyResult> verify_all(int n, std::uint64_t seed) {
    if (n < 3) throw input_error("IndexOutOfRange", "polygon needs at least 3 vertices");
    std::vector<Triangulation> all = enumerate_triangulations(n);
    std::vector<VerifyResult> results;
    results.push_back(check_quiver_invariants(n, all));
    results.push_back(check_order_identities(n, all));
    results.push_back(check_cmcat_bijections(n, all));
    results.push_back(check_lattice_roundtrips(n, seed));
    results.push_back(check_graded_tilting(n, all));
    results.push_back(check_cluster_reports(n, all));
    return results;
}

}  // namespace clusterforge
