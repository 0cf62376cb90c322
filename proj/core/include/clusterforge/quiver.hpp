#pragma once

#include <string>
#include <vector>

#include "clusterforge/polygon.hpp"

namespace clusterforge {

enum class ArrowKind { internal, external };

struct QuiverVertex {
    int id = 0;  // 1..2n-3; 1..n are frozen boundary edges
    Edge edge;
    bool frozen = false;
};

struct Arrow {
    int id = 0;  // 1-based; internal arrows first, then external
    int source = 0;
    int target = 0;
    ArrowKind kind = ArrowKind::internal;
    int theta = 0;
    std::string label;  // a,b,c,... for internal; α,β,γ,... for external
};

// Signed cycle of arrow ids, stored starting from the minimal id.
struct PotentialTerm {
    int sign = 0;  // +1 cyclic triangle, -1 big cycle
    std::vector<int> cycle;
};

// Pair of complementary paths p1 - p2 obtained as the cyclic derivative of
// the potential at one arrow.
struct Relation {
    int arrow = 0;
    std::vector<int> plus;   // remainder of the cyclic triangle
    std::vector<int> minus;  // remainder of the big cycle
};

class IceQuiver {
public:
    const Triangulation& sigma() const { return sigma_; }
    int n() const { return sigma_.n(); }

    const std::vector<QuiverVertex>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<PotentialTerm>& potential() const { return potential_; }

    const QuiverVertex& vertex(int id) const { return vertices_.at(id - 1); }
    const Arrow& arrow(int id) const { return arrows_.at(id - 1); }

    friend IceQuiver build_ice_quiver(const Triangulation& sigma);

private:
    Triangulation sigma_;
    std::vector<QuiverVertex> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<PotentialTerm> potential_;
};

IceQuiver build_ice_quiver(const Triangulation& sigma);

int theta_length(const IceQuiver& q, int arrow_id);

std::vector<Relation> jacobian_relations(const IceQuiver& q);

// "ca - ehα" style rendering via arrow labels.
std::string relation_str(const IceQuiver& q, const Relation& r);

// Signed adjacency matrix b_ij = #arrows i->j - #arrows j->i, (2n-3)^2.
std::vector<std::vector<int>> exchange_matrix(const IceQuiver& q);

std::vector<std::vector<int>> mutate_exchange_matrix(const IceQuiver& q, int k);
std::vector<std::vector<int>> mutate_exchange_matrix(std::vector<std::vector<int>> b, int k);

std::string quiver_dot(const IceQuiver& q);

}  // namespace clusterforge
