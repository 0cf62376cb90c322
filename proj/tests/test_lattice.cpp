#include <doctest.h>

#include <algorithm>
#include <vector>

#include "clusterforge/errors.hpp"
#include "clusterforge/lattice.hpp"
#include "clusterforge/polymat.hpp"

using namespace clusterforge;

namespace {

Poly x_power(int k) { return Poly::monomial(k); }

PolyMatrix from_entries(int rows, int cols, const std::vector<Poly>& entries) {
    PolyMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.m[r][c] = entries[r * cols + c];
    return m;
}

std::vector<CMModule> sorted(std::vector<CMModule> mods) {
    std::sort(mods.begin(), mods.end());
    return mods;
}

// Check the documented contract: conjugating A[p] by the node transforms
// G[p+1]^{-1} . A[p] . G[p] yields a diagonal matrix with entries 1 or x,
// phrased multiplicatively to avoid inverting G.
bool conjugates_to_unit_x(const CycleRep& rep, const std::vector<PolyMatrix>& g) {
    for (int p = 0; p < rep.n; ++p) {
        PolyMatrix lhs = rep.A[p] * g[p];
        const PolyMatrix& gq = g[(p + 1) % rep.n];
        for (int c = 0; c < rep.rank(); ++c) {
            bool matched = false;
            for (int power = 0; power <= 1 && !matched; ++power) {
                bool same = true;
                for (int r = 0; r < rep.rank(); ++r)
                    same = same && lhs.m[r][c] == gq.m[r][c] * x_power(power);
                matched = same;
            }
            if (!matched) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("column triangularization of a 2x2 example") {
    PolyMatrix m = from_entries(2, 2, {x_power(2) + x_power(1), x_power(1), x_power(1), Poly(1)});
    auto [u, g] = column_triangularize(m);
    CHECK(u.m[1][0].is_zero());
    CHECK(u.m[0][0] == x_power(1));
    CHECK(u.m[0][1] == x_power(1));
    CHECK(u.m[1][1] == Poly(1));
    CHECK(g.m[0][0] == Poly(1));
    CHECK(g.m[0][1] == Poly(0));
    CHECK(g.m[1][0] == -x_power(1));
    CHECK(g.m[1][1] == Poly(1));
    CHECK(m * g == u);
}

TEST_CASE("triangularization handles permutations and keeps determinants") {
    PolyMatrix m = from_entries(2, 2, {Poly(0), Poly(1), Poly(1), Poly(0)});
    auto [u, g] = column_triangularize(m);
    CHECK(m * g == u);
    CHECK(u.m[1][0].is_zero());
    Poly det = poly_det(g);
    CHECK(det.is_constant());
    CHECK_FALSE(det.is_zero());
}

TEST_CASE("x-diagonalization reports local invariants") {
    PolyMatrix m = from_entries(2, 2, {x_power(2) + x_power(1), x_power(1), x_power(1), Poly(1)});
    XDiagonalization d = x_diagonalize(m);
    std::vector<int> vals = d.valuations;
    std::sort(vals.begin(), vals.end());
    CHECK(vals == std::vector<int>{0, 1});
    CHECK(smith_x_valuations(m) == std::vector<int>{0, 1});
}

TEST_CASE("strand representations are valid and decompose to themselves") {
    CMModule m(2, 4, 6);
    CycleRep rep = strand_rep(m);
    CHECK(rep.n == 6);
    CHECK(rep.rank() == 1);
    validate_cycle_rep(rep);
    CHECK(decompose_cm(rep) == std::vector<CMModule>{m});
}

TEST_CASE("direct sums decompose without any gluing") {
    std::vector<CMModule> mods = {{1, 3, 5}, {2, 4, 5}, {1, 4, 5}};
    CycleRep rep = direct_sum_rep(mods);
    CHECK(rep.rank() == 3);
    validate_cycle_rep(rep);
    CHECK(decompose_cm(rep) == sorted(mods));
}

TEST_CASE("invalid cycle representations are rejected") {
    CHECK_THROWS_WITH_AS(direct_sum_rep({}), doctest::Contains("EmptySet"), input_error);
    CHECK_THROWS_WITH_AS(direct_sum_rep({{1, 3, 5}, {1, 3, 6}}), doctest::Contains("SizeMismatch"),
                         input_error);

    CycleRep rep = direct_sum_rep({{1, 3, 5}, {2, 4, 5}});
    rep.A[0].m[0][0] = x_power(2);  // breaks A_0 B_0 = x
    CHECK_THROWS_WITH_AS(validate_cycle_rep(rep), doctest::Contains("PreconditionViolated"),
                         input_error);
}

TEST_CASE("random gluing is deterministic per seed") {
    std::vector<CMModule> mods = {{1, 3, 5}, {2, 4, 5}};
    CycleRep a = random_glue(mods, 7);
    CycleRep b = random_glue(mods, 7);
    REQUIRE(a.n == b.n);
    for (int p = 0; p < a.n; ++p) {
        CHECK(a.A[p] == b.A[p]);
        CHECK(a.B[p] == b.B[p]);
    }
    CycleRep c = random_glue(mods, 8);
    bool same = true;
    for (int p = 0; p < a.n; ++p) same = same && a.A[p] == c.A[p];
    CHECK_FALSE(same);
}

TEST_CASE("glued representations hide the summands entrywise") {
    std::vector<CMModule> mods = {{1, 3, 5}, {2, 5, 5}};
    CycleRep glued = random_glue(mods, 3);
    validate_cycle_rep(glued);
    bool any_off_diagonal = false;
    for (int p = 0; p < glued.n; ++p)
        any_off_diagonal = any_off_diagonal || !glued.A[p].m[0][1].is_zero() ||
                           !glued.A[p].m[1][0].is_zero();
    CHECK(any_off_diagonal);
    CHECK(decompose_cm(glued) == sorted(mods));
}

TEST_CASE("diagonalization conjugates every arc to unit-or-x form") {
    std::vector<CMModule> mods = {{1, 4, 6}, {2, 5, 6}, {3, 6, 6}};
    CycleRep glued = random_glue(mods, 11);
    std::vector<PolyMatrix> g = cycle_diagonalize(glued);
    REQUIRE(static_cast<int>(g.size()) == glued.n);
    CHECK(conjugates_to_unit_x(glued, g));
}

TEST_CASE("round trips preserve multiplicities") {
    std::vector<CMModule> mods = {{1, 3, 5}, {1, 3, 5}, {1, 3, 5}};
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK(decompose_cm(random_glue(mods, seed)) == sorted(mods));

    std::vector<CMModule> mixed = {{1, 3, 6}, {2, 4, 6}, {1, 3, 6}, {3, 5, 6}};
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK(decompose_cm(random_glue(mixed, seed)) == sorted(mixed));
}

TEST_CASE("round trips across seeds and sizes") {
    for (int n = 4; n <= 6; ++n) {
        std::vector<CMModule> all;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) all.push_back(CMModule(i, j, n));
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            std::vector<CMModule> mods;
            std::uint64_t h = seed * 2654435761u + n;
            int rank = 1 + static_cast<int>(h % 4);
            for (int r = 0; r < rank; ++r) {
                h = h * 6364136223846793005ULL + 1442695040888963407ULL;
                mods.push_back(all[h % all.size()]);
            }
            CHECK(decompose_cm(random_glue(mods, seed)) == sorted(mods));
        }
    }
}
