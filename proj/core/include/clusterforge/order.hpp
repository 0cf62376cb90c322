#pragma once

#include <string>
#include <utility>
#include <vector>

#include "clusterforge/cmcat.hpp"
#include "clusterforge/polygon.hpp"
#include "clusterforge/quiver.hpp"

namespace clusterforge {

enum class LengthMode { shortest_path, closed_formula };

// Tiled-order exponent matrix ((x^{a_ij})).
struct ExponentMatrix {
    int size = 0;
    std::vector<std::vector<int>> a;  // 0-indexed storage

    int at(int i, int j) const { return a[i - 1][j - 1]; }  // 1-based
    bool operator==(const ExponentMatrix&) const = default;
};

// Zero diagonal and a_ij + a_jk >= a_ik for all triples.
bool tiled_valid(const ExponentMatrix& m);

// All-pairs minimal path weight on Q_sigma in the arrow grading.
class ThetaMetric {
  public:
    explicit ThetaMetric(const Triangulation& sigma,
                         LengthMode mode = LengthMode::closed_formula);

    int n() const { return n_; }
    int size() const { return static_cast<int>(l_.size()); }
    int length(int v1, int v2) const;  // 1-based vertex ids

  private:
    int n_ = 0;
    std::vector<std::vector<int>> l_;
};

int min_theta_length(const Triangulation& sigma, int v1, int v2, LengthMode mode);

// (l(i,j) + l(j,k) - l(i,k)) / n; integrality is forced and asserted.
int d_exponent(const ThetaMetric& m, int i, int j, int k);
int d_exponent(const Triangulation& sigma, int i, int j, int k);

// (2n-3)x(2n-3) matrix with entry (i,j) = d^i_{k,j}.
ExponentMatrix tiled_exponent_matrix(const Triangulation& sigma, int k);

// The canonical n x n order: a_ij = [i>j] + [i>j+1] - [j==n][i==1].
ExponentMatrix lambda_matrix(int n);

// Frozen n x n corner of tiled_exponent_matrix(sigma, 1), normalized by the
// diag(x^{[i==n]}) conjugation; always equals lambda_matrix(n).
ExponentMatrix frozen_part(const Triangulation& sigma);

// Column of the tiled order at the vertex of e, over the frozen rows; the
// normalized exponents follow the step pattern (0^s, 1^{t-s}, 2^{n-t}).
std::vector<int> module_column_exponents(const Triangulation& sigma, const Edge& e);
CMModule module_column(const Triangulation& sigma, const Edge& e);

// Valuation g with Hom(M,N) = x^g R, from the step columns.
int hom_generator_exponent(const CMModule& m, const CMModule& nmod);

// Negated transpose (dual lattice exponents).
ExponentMatrix dualize(const ExponentMatrix& m);

// Dual of the canonical order is a column-rotated, x^2-rescaled copy of it.
bool gorenstein_check(int n);

struct SimpleQuiver {
    int vertices = 0;
    std::vector<std::pair<int, int>> arrows;  // sorted (source, target)
    bool operator==(const SimpleQuiver&) const = default;
};

// Gabriel quiver of the endomorphism order: arrows are the length-irreducible
// pairs; coincides with Q_sigma reversed.
SimpleQuiver end_quiver(const Triangulation& sigma);
SimpleQuiver opposite_quiver(const IceQuiver& q);

// Exponent table of the two-generator presentation XY = x, Y^2 = X^{n-2},
// X^n = x^2, conjugated by diag(X^i); must reduce to lambda_matrix(n).
bool snake_order_check(int n);

std::string bracket_str(int e);                 // 0 -> "R", 1 -> "(x)", ...
std::string matrix_str(const ExponentMatrix& m);

}  // namespace clusterforge
