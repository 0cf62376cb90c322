#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "clusterforge/errors.hpp"
#include "clusterforge/polygon.hpp"
#include "clusterforge/quiver.hpp"

using namespace clusterforge;

namespace {

IceQuiver pentagon_fan() {
    return build_ice_quiver(validate_triangulation(5, {Edge(1, 3), Edge(1, 4)}));
}

int theta_sum(const IceQuiver& q, const std::vector<int>& cycle) {
    int s = 0;
    for (int id : cycle) s += q.arrow(id).theta;
    return s;
}

}  // namespace

TEST_CASE("pentagon fan quiver golden data") {
    IceQuiver q = pentagon_fan();
    REQUIRE(q.vertices().size() == 7);
    REQUIRE(q.arrows().size() == 12);

    int frozen = 0;
    for (const QuiverVertex& v : q.vertices()) frozen += v.frozen;
    CHECK(frozen == 5);
    CHECK(q.vertex(6).edge == Edge(1, 3));
    CHECK_FALSE(q.vertex(6).frozen);

    std::vector<int> thetas;
    for (const Arrow& a : q.arrows()) thetas.push_back(a.theta);
    CHECK(thetas == std::vector<int>{3, 1, 1, 2, 1, 2, 1, 1, 3, 2, 2, 2});

    std::set<std::string> relations;
    for (const Relation& r : jacobian_relations(q)) relations.insert(relation_str(q, r));
    CHECK(relations == std::set<std::string>{"ca - ehα", "ab - βd", "ef - cβ", "fd - hαb",
                                             "de - γg", "ig - αbe", "hi - fγ"});
}

TEST_CASE("theta lengths agree with the stored arrow weights") {
    for (const Triangulation& t : enumerate_triangulations(6)) {
        IceQuiver q = build_ice_quiver(t);
        for (const Arrow& a : q.arrows()) CHECK(theta_length(q, a.id) == a.theta);
    }
}

TEST_CASE("potential terms close up to the polygon size") {
    for (int n = 4; n <= 7; ++n) {
        for (const Triangulation& t : enumerate_triangulations(n)) {
            IceQuiver q = build_ice_quiver(t);
            int positive = 0, negative = 0;
            for (const PotentialTerm& term : q.potential()) {
                CHECK(theta_sum(q, term.cycle) == n);
                (term.sign > 0 ? positive : negative)++;
            }
            CHECK(positive == n - 2);  // one triangle cycle per triangle
            CHECK(negative <= n);
            CHECK(negative >= 1);
        }
    }
}

TEST_CASE("external arrows carry weight two, frozen cycles weight n-2") {
    for (int n : {5, 6, 8}) {
        IceQuiver q = build_ice_quiver(fan_triangulation(n, 1));
        for (const Arrow& a : q.arrows()) {
            if (a.kind == ArrowKind::external) CHECK(a.theta == 2);
            if (a.kind == ArrowKind::internal && q.vertex(a.source).frozen &&
                q.vertex(a.target).frozen)
                CHECK(a.theta == n - 2);
        }
    }
}

TEST_CASE("exchange matrix shape and mutability") {
    IceQuiver q = pentagon_fan();
    auto b = exchange_matrix(q);
    REQUIRE(b.size() == 7);
    REQUIRE(b[0].size() == 7);
    // mutable-mutable block is antisymmetric
    for (int i = 5; i < 7; ++i)
        for (int j = 5; j < 7; ++j) CHECK(b[i][j] == -b[j][i]);
    CHECK_THROWS_WITH_AS(mutate_exchange_matrix(q, 1), doctest::Contains("FrozenVertex"),
                         input_error);
}

TEST_CASE("matrix mutation is an involution") {
    IceQuiver q = pentagon_fan();
    auto b = exchange_matrix(q);
    for (int k = 5; k < 7; ++k) {
        auto twice = mutate_exchange_matrix(mutate_exchange_matrix(b, k), k);
        CHECK(twice == b);
    }
}

TEST_CASE("mutation at a diagonal matches the flip, away from frozen pairs") {
    Triangulation t = validate_triangulation(5, {Edge(1, 3), Edge(1, 4)});
    IceQuiver q = build_ice_quiver(t);
    Edge d(1, 3);
    auto mutated = mutate_exchange_matrix(q, t.edge_id(d));
    auto [flipped, replacement] = flip(t, d);
    IceQuiver qf = build_ice_quiver(flipped);
    auto direct = exchange_matrix(qf);
    // compare entries indexed by edges; the flipped diagonal replaces d
    for (const Edge& ei : t.edges()) {
        for (const Edge& ej : t.edges()) {
            int i = t.edge_id(ei), j = t.edge_id(ej);
            if (i <= 5 && j <= 5) continue;  // frozen-frozen entries differ by convention
            Edge fi = ei == d ? replacement : ei;
            Edge fj = ej == d ? replacement : ej;
            CHECK(mutated[i - 1][j - 1] == direct[flipped.edge_id(fi) - 1][flipped.edge_id(fj) - 1]);
        }
    }
}

TEST_CASE("dot output lists every arrow and boxes the frozen vertices") {
    IceQuiver q = pentagon_fan();
    std::string dot = quiver_dot(q);
    CHECK(dot.find("digraph") != std::string::npos);
    size_t arrows = 0, boxes = 0, dashed = 0;
    for (size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; ++pos) ++arrows;
    for (size_t pos = 0; (pos = dot.find("shape=box", pos)) != std::string::npos; ++pos) ++boxes;
    for (size_t pos = 0; (pos = dot.find("style=dashed", pos)) != std::string::npos; ++pos) ++dashed;
    CHECK(arrows == 12);
    CHECK(boxes == 5);
    CHECK(dashed == 3);  // the external arrows
}
