#pragma once

#include <utility>
#include <vector>

#include "clusterforge/poly.hpp"

namespace clusterforge {

// Matrix over Q[x]; indices are 0-based.
struct PolyMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Poly>> m;

    PolyMatrix() = default;
    PolyMatrix(int rows, int cols);
    static PolyMatrix identity(int n);

    Poly& at(int r, int c) { return m[r][c]; }
    const Poly& at(int r, int c) const { return m[r][c]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix&) const = default;

    bool is_identity() const;
    // Diagonal with every diagonal entry 1 or x.
    bool is_unit_x_diagonal() const;

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    void add_row(int dst, int src, const Poly& f);  // row dst += f * row src
    void add_col(int dst, int src, const Poly& f);
};

Poly poly_det(const PolyMatrix& m);

// Column operations only: returns (U, G) with M*G = U upper triangular and G
// invertible over Q[x].
std::pair<PolyMatrix, PolyMatrix> column_triangularize(const PolyMatrix& m);

// Diagonalization D = L*M*R by elementary operations; only the column
// transform R is reported.  The x-valuations of the diagonal are the local
// Smith invariants at (x).
struct XDiagonalization {
    PolyMatrix diag;
    PolyMatrix right;
    std::vector<int> valuations;  // per diagonal entry; -1 for a zero entry
};

XDiagonalization x_diagonalize(const PolyMatrix& m);

// Valuation multiset at (x) read off minor gcds, with no transforms; an
// independent cross-check for x_diagonalize.
std::vector<int> smith_x_valuations(const PolyMatrix& m);

}  // namespace clusterforge
