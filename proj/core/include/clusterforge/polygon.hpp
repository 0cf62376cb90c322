#pragma once

#include <array>
#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace clusterforge {

// Chord of a convex n-gon with 1-based endpoints, stored with s < t.
struct Edge {
    int s = 0;
    int t = 0;

    Edge() = default;
    Edge(int a, int b);  // normalizes order, rejects a == b

    bool is_boundary(int n) const { return t == s + 1 || (s == 1 && t == n); }
    bool is_diagonal(int n) const { return !is_boundary(n); }

    auto operator<=>(const Edge&) const = default;

    std::string str() const;  // "s-t"
};

// true iff the open chords intersect in the interior: p<q<s<t interleaving.
bool crossing(const Edge& a, const Edge& b);

class Triangulation {
public:
    Triangulation() = default;

    int n() const { return n_; }
    const std::vector<Edge>& diagonals() const { return diagonals_; }

    // Sides then diagonals, in vertex-id order: side (i,i+1) at index i-1,
    // side (1,n) at index n-1, diagonals lexicographic afterwards.  The
    // 1-based position in this list is the quiver vertex id of the edge.
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_id(const Edge& e) const;  // 1-based, 0 if absent
    bool has_edge(const Edge& e) const { return edge_id(e) != 0; }

    // The n-2 triangles as sorted vertex triples, listed lexicographically.
    const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }

    friend Triangulation validate_triangulation(int n, std::vector<Edge> diagonals);

    bool operator==(const Triangulation& o) const {
        return n_ == o.n_ && diagonals_ == o.diagonals_;
    }

private:
    int n_ = 0;
    std::vector<Edge> diagonals_;
    std::vector<Edge> edges_;
    std::vector<std::array<int, 3>> triangles_;
};

Triangulation validate_triangulation(int n, std::vector<Edge> diagonals);

// Replaces d by the opposite diagonal of the quadrilateral around it.
std::pair<Triangulation, Edge> flip(const Triangulation& t, const Edge& d);

std::vector<Triangulation> enumerate_triangulations(int n);

Triangulation fan_triangulation(int n, int apex);

}  // namespace clusterforge
