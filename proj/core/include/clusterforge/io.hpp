#pragma once

#include <string>
#include <vector>

#include "clusterforge/cluster.hpp"
#include "clusterforge/cmcat.hpp"
#include "clusterforge/graded.hpp"
#include "clusterforge/lattice.hpp"
#include "clusterforge/order.hpp"
#include "clusterforge/polygon.hpp"
#include "clusterforge/quiver.hpp"

namespace clusterforge {

// Edge syntax "s-t"; lists comma-separated, empty string allowed.
Edge parse_edge(const std::string& text);
std::vector<Edge> parse_edge_list(const std::string& text);

std::string triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const std::string& text);

std::string quiver_to_json(const IceQuiver& q);

std::string exponent_matrix_to_json(const ExponentMatrix& m);
ExponentMatrix exponent_matrix_from_json(const std::string& text);

std::string cm_module_to_json(const CMModule& m);
CMModule cm_module_from_json(const std::string& text);
std::string module_set_to_json(const std::vector<CMModule>& mods);

std::string graded_to_json(const GradedCM& m);
GradedCM graded_from_json(const std::string& text);

std::string cycle_rep_to_json(const CycleRep& rep);
CycleRep cycle_rep_from_json(const std::string& text);

std::string laurent_to_json(const LaurentPoly& p, const std::vector<std::string>& names);
LaurentPoly laurent_from_json(const std::string& text, const std::vector<std::string>& names);

std::string error_to_json(const std::string& kind, const std::string& message);

}  // namespace clusterforge
