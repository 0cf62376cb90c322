#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "clusterforge/errors.hpp"
#include "clusterforge/graded.hpp"
#include "clusterforge/polygon.hpp"

using namespace clusterforge;

TEST_CASE("graded labels and shifts") {
    GradedCM m(1, 3, 5);
    CHECK(m.str() == "(1,3)");
    CHECK(shift(m, 1) == GradedCM(3, 6, 5));
    CHECK(shift(m, -1) == GradedCM(-2, 1, 5));
    CHECK(shift(shift(m, 1), -1) == m);
    CHECK(shift(m, 2) == GradedCM(6, 8, 5));  // two steps = translate both by n
    CHECK_THROWS_AS(GradedCM(3, 3, 5), input_error);
    CHECK_THROWS_AS(GradedCM(0, 5, 5), input_error);  // gap must stay below n
}

TEST_CASE("grading round trip") {
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            CMModule plain(i, j, 5);
            GradedCM g = to_graded(plain);
            CHECK(forget_grading(g) == plain);
            CHECK(forget_grading(shift(g, 3)) == plain);
            CHECK(forget_grading(shift(g, -2)) == plain);
        }
}

TEST_CASE("projective-injectives have gap one or n-1") {
    CHECK(is_projective_injective(GradedCM(0, 1, 5)));
    CHECK(is_projective_injective(GradedCM(2, 6, 5)));
    CHECK_FALSE(is_projective_injective(GradedCM(0, 2, 5)));
    CHECK(is_projective_injective(GradedCM(-3, -2, 4)));
}

TEST_CASE("graded ext detects interleaving labels only") {
    GradedCM sub(1, 3, 5);
    CHECK(graded_ext_dim(GradedCM(2, 4, 5), sub) == 1);
    CHECK(graded_ext_dim(GradedCM(2, 5, 5), sub) == 1);
    CHECK(graded_ext_dim(GradedCM(0, 2, 5), sub) == 0);
    CHECK(graded_ext_dim(GradedCM(3, 5, 5), sub) == 0);
    CHECK(graded_ext_dim(sub, sub) == 0);
    // at a different shift the same underlying pair stops interleaving
    CHECK(graded_ext_dim(shift(GradedCM(2, 4, 5), 1), sub) == 0);
}

TEST_CASE("syzygy and cosyzygy are inverse") {
    for (int i = -3; i <= 3; ++i)
        for (int gap = 2; gap <= 4; ++gap) {
            GradedCM m(i, i + gap, 5);
            CHECK(graded_cosyzygy(graded_syzygy(m)) == m);
            CHECK(graded_syzygy(graded_cosyzygy(m)) == m);
        }
}

TEST_CASE("omega powers iterate the syzygy") {
    GradedCM m(0, 2, 6);
    CHECK(omega_power(m, 0) == m);
    CHECK(omega_power(m, 1) == graded_syzygy(m));
    CHECK(omega_power(m, -1) == graded_cosyzygy(m));
    GradedCM fwd = m, bwd = m;
    for (int k = 1; k <= 12; ++k) {
        fwd = graded_syzygy(fwd);
        bwd = graded_cosyzygy(bwd);
        CHECK(omega_power(m, k) == fwd);
        CHECK(omega_power(m, -k) == bwd);
    }
}

TEST_CASE("translates around the almost-split sequence") {
    GradedCM m(2, 5, 6);
    CHECK(ar_translate(m) == GradedCM(1, 4, 6));
    CHECK(graded_tau(m) == shift(ar_translate(m), 1));
    auto mid = graded_ar_middle(m);
    CHECK(std::set<GradedCM>{mid[0], mid[1]} == std::set<GradedCM>{GradedCM(1, 5, 6), GradedCM(2, 4, 6)});
    CHECK_THROWS_AS(graded_ar_middle(GradedCM(4, 5, 6)), input_error);
    CHECK_THROWS_AS(ar_translate(GradedCM(4, 5, 6)), input_error);
}

TEST_CASE("stable hom agrees with the column oracle") {
    for (int n : {4, 5}) {
        std::vector<GradedCM> window;
        for (int i = -n; i <= n; ++i)
            for (int gap = 1; gap < n; ++gap) window.push_back(GradedCM(i, i + gap, n));
        for (const GradedCM& m : window)
            for (const GradedCM& nmod : window)
                CHECK(graded_stable_hom_dim(m, nmod) == graded_stable_hom_oracle(m, nmod));
    }
}

TEST_CASE("graded columns match the ungraded step pattern at degree zero") {
    GradedCM m(1, 3, 5);
    CHECK(graded_column(m) == std::vector<int>{0, 1, 1, 2, 2});
    GradedCM shifted = shift(m, 1);  // (3,6): steps at 3 and 6=1 mod 5, pushed up a degree
    std::vector<int> col = graded_column(shifted);
    CHECK(col.size() == 5);
}

TEST_CASE("AR quiver windows form meshes") {
    ARWindow w = ar_quiver_window(5, -5, 10);
    REQUIRE(!w.vertices.empty());
    std::set<GradedCM> present(w.vertices.begin(), w.vertices.end());
    for (const GradedCM& m : w.vertices) {
        if (is_projective_injective(m)) continue;
        GradedCM left = ar_translate(m);
        if (!present.count(left)) continue;  // mesh leaves the window
        auto mid = graded_ar_middle(m);
        std::set<std::pair<int, int>> arrows(w.arrows.begin(), w.arrows.end());
        auto index = [&](const GradedCM& v) {
            return static_cast<int>(std::find(w.vertices.begin(), w.vertices.end(), v) -
                                    w.vertices.begin());
        };
        for (const GradedCM& e : mid) {
            if (!present.count(e)) continue;
            CHECK(arrows.count({index(left), index(e)}));
            CHECK(arrows.count({index(e), index(m)}));
        }
    }
    CHECK_THROWS_AS(ar_quiver_window(5, 3, 2), input_error);
}

TEST_CASE("window dot marks boundary meshes dashed") {
    ARWindow w = ar_quiver_window(4, 0, 4);
    std::string dot = ar_window_dot(w);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("style=dashed") != std::string::npos);
}

TEST_CASE("tilting from the pentagon fan") {
    GradedTilting t = tilting_from_triangulation(
        validate_triangulation(5, {Edge(1, 3), Edge(1, 4)}));
    CHECK(t.i0 == 2);
    CHECK(t.summands.size() == 7);
    std::set<GradedCM> distinct(t.summands.begin(), t.summands.end());
    CHECK(distinct.size() == 7);
    CHECK(verify_tilting(t, 10).ok());
}

TEST_CASE("tilting verification catches planted defects") {
    Triangulation fan = fan_triangulation(6, 1);
    GradedTilting t = tilting_from_triangulation(fan);
    REQUIRE(verify_tilting(t, 12).ok());

    GradedTilting broken = t;
    // drop one non-projective summand: the strip is no longer generated
    auto it = std::find_if(broken.summands.begin(), broken.summands.end(),
                           [](const GradedCM& m) { return !is_projective_injective(m); });
    REQUIRE(it != broken.summands.end());
    broken.summands.erase(it);
    TiltingReport r1 = verify_tilting(broken, 12);
    CHECK_FALSE(r1.ok());
    CHECK_FALSE(r1.generation_missing.empty());

    GradedTilting extended = t;
    extended.summands.push_back(GradedCM(0, 2, 6));
    TiltingReport r2 = verify_tilting(extended, 12);
    CHECK_FALSE(r2.ok());
    CHECK_FALSE(r2.rigidity_failures.empty());

    CHECK_THROWS_AS(verify_tilting(t, 3), input_error);  // window below 2n
}

TEST_CASE("every triangulation of the hexagon yields a tilting object") {
    for (const Triangulation& t : enumerate_triangulations(6))
        CHECK(verify_tilting(tilting_from_triangulation(t), 12).ok());
}
