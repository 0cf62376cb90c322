#pragma once

#include <cstdint>
#include <vector>

#include "clusterforge/cmcat.hpp"
#include "clusterforge/polymat.hpp"

namespace clusterforge {

// A module presented as compatible maps around the cycle of nodes 0..n-1:
// A[p] runs node p -> p+1 (mod n), B[p] runs node p+1 -> p.  All matrices are
// square of one common size.  Walking once around clockwise must give x^2
// and each opposite pair must compose to x in both orders.
struct CycleRep {
    int n = 0;
    std::vector<PolyMatrix> A;
    std::vector<PolyMatrix> B;

    int rank() const { return A.empty() ? 0 : A.front().rows; }
};

void validate_cycle_rep(const CycleRep& rep);

CycleRep strand_rep(const CMModule& m);
CycleRep direct_sum_rep(const std::vector<CMModule>& mods);

// Node-wise base changes G such that conjugating every A[p] (and B[p]) gives
// diagonal matrices with entries 1 or x.
std::vector<PolyMatrix> cycle_diagonalize(const CycleRep& rep);

std::vector<CMModule> decompose_cm(const CycleRep& rep);

CycleRep random_glue(const std::vector<CMModule>& mods, std::uint64_t seed);

}  // namespace clusterforge
