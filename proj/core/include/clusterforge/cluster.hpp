#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "clusterforge/laurent.hpp"
#include "clusterforge/polygon.hpp"

namespace clusterforge {

// Expansion engine for one initial triangulation; memoizes per edge.  The
// variables are indexed by edge_id of sigma0 (sides first, then diagonals).
class ClusterContext {
public:
    using Chooser = std::function<Edge(const Edge& e, const std::vector<Edge>& crossed)>;

    explicit ClusterContext(const Triangulation& sigma0);

    const Triangulation& sigma0() const { return sigma0_; }
    int nvars() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& variable_names() const { return names_; }

    const LaurentPoly& expand(const Edge& e);

    // Test hook: override which crossed diagonal drives the recursion.
    void set_chooser(Chooser chooser) { chooser_ = std::move(chooser); }

private:
    const LaurentPoly& expand_at(const Edge& e, int depth);

    Triangulation sigma0_;
    std::vector<std::string> names_;
    std::map<Edge, LaurentPoly> memo_;
    std::set<Edge> in_progress_;
    Chooser chooser_;
};

struct CheckReport {
    std::vector<std::string> failures;
    int checked = 0;
    bool ok() const { return failures.empty(); }
};

LaurentPoly expand(const Triangulation& sigma0, const Edge& e);

// Crossed diagonals of sigma0 ordered along e, starting from its smaller
// endpoint.
std::vector<Edge> crossing_sequence(const Triangulation& sigma0, const Edge& e);

CheckReport verify_plucker(const Triangulation& sigma0);
CheckReport verify_exchange(const Triangulation& sigma0);

std::vector<int> denominator_vector(const Triangulation& sigma0, const Edge& e);

struct StringModule {
    std::vector<Edge> support;                  // in crossing order
    std::vector<std::pair<Edge, Edge>> arrows;  // (source, target)
};

StringModule ext_string_module(const Triangulation& sigma0, const Edge& e);
long long submodule_count(const StringModule& s);

CheckReport positivity_specialization_check(const Triangulation& sigma0);

}  // namespace clusterforge
