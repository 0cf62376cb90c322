#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "clusterforge/errors.hpp"
#include "clusterforge/polygon.hpp"

using namespace clusterforge;

namespace {

std::string kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const input_error& e) {
        return e.kind();
    }
    return "";
}

}  // namespace

TEST_CASE("edges normalize and classify") {
    Edge e(4, 2);
    CHECK(e.s == 2);
    CHECK(e.t == 4);
    CHECK(e.str() == "2-4");
    CHECK(Edge(1, 2).is_boundary(5));
    CHECK(Edge(1, 5).is_boundary(5));
    CHECK_FALSE(Edge(1, 5).is_boundary(6));
    CHECK(Edge(1, 3).is_diagonal(5));
    CHECK(Edge(2, 4) < Edge(2, 5));
    CHECK(Edge(1, 4) < Edge(2, 3));
}

TEST_CASE("crossing is an open-arc test") {
    CHECK(crossing(Edge(1, 3), Edge(2, 4)));
    CHECK(crossing(Edge(2, 4), Edge(1, 3)));
    CHECK(crossing(Edge(2, 5), Edge(1, 4)));
    CHECK_FALSE(crossing(Edge(1, 3), Edge(1, 4)));   // shared endpoint
    CHECK_FALSE(crossing(Edge(1, 3), Edge(3, 5)));
    CHECK_FALSE(crossing(Edge(1, 2), Edge(3, 5)));   // side never crosses
    CHECK_FALSE(crossing(Edge(1, 3), Edge(1, 3)));
    CHECK_FALSE(crossing(Edge(2, 4), Edge(5, 7)));   // disjoint arcs, n=7
}

TEST_CASE("validate_triangulation rejects bad input with the right kind") {
    CHECK(kind_of([] { validate_triangulation(2, {}); }) == "IndexOutOfRange");
    CHECK(kind_of([] { validate_triangulation(5, {Edge(1, 6), Edge(1, 3)}); }) == "IndexOutOfRange");
    CHECK(kind_of([] { validate_triangulation(5, {Edge(1, 2), Edge(1, 3)}); }) == "NotADiagonal");
    CHECK(kind_of([] { validate_triangulation(5, {Edge(1, 3), Edge(1, 3)}); }) != "");
    CHECK(kind_of([] { validate_triangulation(5, {Edge(1, 3), Edge(2, 4)}); }) == "CrossingPair");
    CHECK(kind_of([] { validate_triangulation(5, {Edge(1, 3)}); }) == "NotMaximal");
    CHECK(kind_of([] { validate_triangulation(6, {Edge(1, 3), Edge(1, 4), Edge(1, 5)}); }).empty());
}

TEST_CASE("edge ids follow sides-then-diagonals order") {
    Triangulation t = validate_triangulation(5, {Edge(1, 4), Edge(1, 3)});
    const std::vector<Edge>& edges = t.edges();
    REQUIRE(edges.size() == 7);
    // sides (i,i+1) first, then (1,n), then diagonals sorted
    CHECK(edges[0] == Edge(1, 2));
    CHECK(edges[3] == Edge(4, 5));
    CHECK(edges[4] == Edge(1, 5));
    CHECK(edges[5] == Edge(1, 3));
    CHECK(edges[6] == Edge(1, 4));
    CHECK(t.edge_id(Edge(1, 3)) == 6);
    CHECK(t.edge_id(Edge(2, 4)) == 0);
    CHECK(t.has_edge(Edge(4, 5)));
    CHECK_FALSE(t.has_edge(Edge(2, 5)));
}

TEST_CASE("triangles of the pentagon fan") {
    Triangulation t = validate_triangulation(5, {Edge(1, 3), Edge(1, 4)});
    auto tri = t.triangles();
    REQUIRE(tri.size() == 3);
    CHECK(tri[0] == std::array<int, 3>{1, 2, 3});
    CHECK(tri[1] == std::array<int, 3>{1, 3, 4});
    CHECK(tri[2] == std::array<int, 3>{1, 4, 5});
}

TEST_CASE("flip replaces one diagonal by the opposite one") {
    Triangulation t = validate_triangulation(5, {Edge(1, 3), Edge(1, 4)});
    auto [flipped, replacement] = flip(t, Edge(1, 3));
    CHECK(replacement == Edge(2, 4));
    CHECK(flipped.has_edge(Edge(2, 4)));
    CHECK_FALSE(flipped.has_edge(Edge(1, 3)));
    auto [back, undone] = flip(flipped, Edge(2, 4));
    CHECK(undone == Edge(1, 3));
    CHECK(back.diagonals() == t.diagonals());

    CHECK(kind_of([&] { flip(t, Edge(2, 4)); }) == "NotInTriangulation");
    CHECK(kind_of([&] { flip(t, Edge(1, 2)); }) != "");
}

TEST_CASE("enumeration counts match the Catalan numbers") {
    int expected[] = {1, 2, 5, 14, 42, 132};
    for (int n = 3; n <= 8; ++n) {
        auto all = enumerate_triangulations(n);
        CHECK(static_cast<int>(all.size()) == expected[n - 3]);
        std::set<std::vector<Edge>> distinct;
        for (const Triangulation& t : all) {
            CHECK(t.n() == n);
            CHECK(static_cast<int>(t.diagonals().size()) == n - 3);
            distinct.insert(t.diagonals());
        }
        CHECK(distinct.size() == all.size());
    }
}

TEST_CASE("fan triangulations") {
    Triangulation f1 = fan_triangulation(6, 1);
    CHECK(f1.diagonals() == std::vector<Edge>{Edge(1, 3), Edge(1, 4), Edge(1, 5)});
    Triangulation f4 = fan_triangulation(6, 4);
    CHECK(f4.diagonals() == std::vector<Edge>{Edge(1, 4), Edge(2, 4), Edge(4, 6)});
    CHECK(kind_of([] { fan_triangulation(6, 7); }) == "IndexOutOfRange");
}

TEST_CASE("flip graph is connected") {
    // every triangulation of the hexagon is reachable from the fan by flips
    auto all = enumerate_triangulations(6);
    std::map<std::vector<Edge>, bool> seen;
    std::queue<Triangulation> frontier;
    frontier.push(fan_triangulation(6, 1));
    seen[frontier.front().diagonals()] = true;
    size_t reached = 1;
    while (!frontier.empty()) {
        Triangulation t = frontier.front();
        frontier.pop();
        for (const Edge& d : t.diagonals()) {
            Triangulation next = flip(t, d).first;
            if (!seen[next.diagonals()]) {
                seen[next.diagonals()] = true;
                ++reached;
                frontier.push(next);
            }
        }
    }
    CHECK(reached == all.size());
}
