#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "clusterforge/cmcat.hpp"

namespace clusterforge {

// Indecomposable graded lattice.  Labels (i,j) with 0 < j-i < n; i may be any
// integer, the grading shift moves labels through the plane.
struct GradedCM {
    int i = 0;
    int j = 1;
    int n = 3;

    GradedCM() = default;
    GradedCM(int i, int j, int n);

    std::string str() const;
    auto operator<=>(const GradedCM&) const = default;
};

// Projective = injective in the graded category: label gap 1 or n-1.
bool is_projective_injective(const GradedCM& m);

// m-fold degree shift; one step sends (i,j) to (j, i+n).
GradedCM shift(const GradedCM& m, int step);

GradedCM to_graded(const CMModule& m);
// Walk the shift orbit to the unique representative with 1 <= i < j <= n.
CMModule forget_grading(const GradedCM& m);

// dim Ext^1(top, sub): 1 exactly when sub=(s,t), top=(s',t') interleave as
// s < s' < t < t' < s+n.
int graded_ext_dim(const GradedCM& top, const GradedCM& sub);

GradedCM graded_syzygy(const GradedCM& m);
GradedCM graded_cosyzygy(const GradedCM& m);
GradedCM omega_power(const GradedCM& m, int k);

// Left-hand term of the almost-split sequence ending at m: (i-1, j-1).
GradedCM ar_translate(const GradedCM& m);
// Serre-type translate: shift(ar_translate(m), 1) = (j-1, i+n-1).
GradedCM graded_tau(const GradedCM& m);
// Middle terms {(i-1,j), (i,j-1)} of the almost-split sequence ending at m.
std::array<GradedCM, 2> graded_ar_middle(const GradedCM& m);

int graded_stable_hom_dim(const GradedCM& m, const GradedCM& nmod);
// Independent degree-zero computation from exponent columns; small n only.
int graded_stable_hom_oracle(const GradedCM& m, const GradedCM& nmod);

// Degree-r exponent column of m over rows 1..n.
std::vector<int> graded_column(const GradedCM& m);

struct GradedTilting {
    int i0 = 0;                      // ear vertex the construction is based at
    std::vector<GradedCM> summands;  // 2n-3 labels
};

GradedTilting tilting_from_triangulation(const Triangulation& sigma);

struct TiltingReport {
    std::vector<std::string> rigidity_failures;
    std::vector<GradedCM> generation_missing;
    bool ok() const { return rigidity_failures.empty() && generation_missing.empty(); }
};

// Rigidity across syzygy powers up to |k| <= window plus generation of the
// fundamental strip i0-n < s < i0 under syzygies and extension cones.
TiltingReport verify_tilting(const GradedTilting& t, int window);

struct ARWindow {
    int n = 0;
    int i_min = 0;
    int i_max = 0;
    std::vector<GradedCM> vertices;
    std::vector<std::pair<int, int>> arrows;  // indices into vertices
};

ARWindow ar_quiver_window(int n, int i_min, int i_max);
std::string ar_window_dot(const ARWindow& w);

}  // namespace clusterforge
