#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace clusterforge {

struct VerifyResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// The full suite behind `verify all --n N`: quiver invariants, order
// identities, module-category bijections, seeded decomposition round-trips,
// graded tilting checks, and the exchange/short-relation/positivity reports.
std::vector<VerifyResult> verify_all(int n, std::uint64_t seed = 0);

}  // namespace clusterforge
