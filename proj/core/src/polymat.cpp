#include "clusterforge/polymat.hpp"

#include <algorithm>
#include <limits>

#include "clusterforge/errors.hpp"

namespace clusterforge {

PolyMatrix::PolyMatrix(int rows, int cols) : rows(rows), cols(cols) {
    m.assign(rows, std::vector<Poly>(cols));
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix out(n, n);
    for (int i = 0; i < n; ++i) out.m[i][i] = 1;
    return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols != o.rows) throw internal_error("ShapeMismatch", "matrix product shapes disagree");
    PolyMatrix out(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            if (m[i][k].is_zero()) continue;
            for (int j = 0; j < o.cols; ++j) {
                if (o.m[k][j].is_zero()) continue;
                out.m[i][j] += m[i][k] * o.m[k][j];
            }
        }
    return out;
}

bool PolyMatrix::is_identity() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (m[i][j] != Poly(i == j ? 1 : 0)) return false;
    return true;
}

bool PolyMatrix::is_unit_x_diagonal() const {
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (i != j && !m[i][j].is_zero()) return false;
            if (i == j && m[i][j] != Poly(1) && m[i][j] != Poly::monomial(1)) return false;
        }
    return true;
}

void PolyMatrix::swap_rows(int a, int b) {
    if (a != b) std::swap(m[a], m[b]);
}

void PolyMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (int r = 0; r < rows; ++r) std::swap(m[r][a], m[r][b]);
}

void PolyMatrix::add_row(int dst, int src, const Poly& f) {
    for (int c = 0; c < cols; ++c) m[dst][c] += f * m[src][c];
}

void PolyMatrix::add_col(int dst, int src, const Poly& f) {
    for (int r = 0; r < rows; ++r) m[r][dst] += f * m[r][src];
}

Poly poly_det(const PolyMatrix& mat) {
    if (mat.rows != mat.cols) throw internal_error("ShapeMismatch", "determinant of a non-square matrix");
    int n = mat.rows;
    if (n == 0) return Poly(1);
    if (n == 1) return mat.m[0][0];
    Poly det;
    for (int r = 0; r < n; ++r) {
        if (mat.m[r][0].is_zero()) continue;
        PolyMatrix sub(n - 1, n - 1);
        for (int i = 0, si = 0; i < n; ++i) {
            if (i == r) continue;
            for (int j = 1; j < n; ++j) sub.m[si][j - 1] = mat.m[i][j];
            ++si;
        }
        Poly term = mat.m[r][0] * poly_det(sub);
        det += (r % 2 == 0) ? term : -term;
    }
    return det;
}

std::pair<PolyMatrix, PolyMatrix> column_triangularize(const PolyMatrix& mat) {
    if (mat.rows != mat.cols) throw input_error("ShapeMismatch", "matrix must be square");
    PolyMatrix u = mat;
    PolyMatrix g = PolyMatrix::identity(mat.cols);

    for (int r = mat.rows - 1; r >= 0; --r) {
        // Euclidean reduction among columns 0..r until row r has one survivor.
        while (true) {
            int pivot = -1;
            for (int c = 0; c <= r; ++c) {
                if (u.m[r][c].is_zero()) continue;
                if (pivot < 0 || u.m[r][c].degree() < u.m[r][pivot].degree()) pivot = c;
            }
            if (pivot < 0) break;
            bool reduced = false;
            for (int c = 0; c <= r; ++c) {
                if (c == pivot || u.m[r][c].is_zero()) continue;
                Poly q = -Poly::divmod(u.m[r][c], u.m[r][pivot]).first;
                u.add_col(c, pivot, q);
                g.add_col(c, pivot, q);
                reduced = true;
            }
            if (!reduced) {
                u.swap_cols(pivot, r);
                g.swap_cols(pivot, r);
                break;
            }
        }
    }
    return {u, g};
}

XDiagonalization x_diagonalize(const PolyMatrix& mat) {
    XDiagonalization out;
    out.diag = mat;
    out.right = PolyMatrix::identity(mat.cols);
    PolyMatrix& d = out.diag;

    int steps = std::min(mat.rows, mat.cols);
    for (int t = 0; t < steps; ++t) {
        while (true) {
            int pr = -1, pc = -1, best = std::numeric_limits<int>::max();
            for (int r = t; r < d.rows; ++r)
                for (int c = t; c < d.cols; ++c)
                    if (!d.m[r][c].is_zero() && d.m[r][c].degree() < best) {
                        best = d.m[r][c].degree();
                        pr = r;
                        pc = c;
                    }
            if (pr < 0) break;
            d.swap_rows(t, pr);
            d.swap_cols(t, pc);
            out.right.swap_cols(t, pc);

            bool dirty = false;
            for (int r = t + 1; r < d.rows; ++r) {
                if (d.m[r][t].is_zero()) continue;
                d.add_row(r, t, -Poly::divmod(d.m[r][t], d.m[t][t]).first);
                if (!d.m[r][t].is_zero()) dirty = true;  // remainder shrank, go again
            }
            for (int c = t + 1; c < d.cols; ++c) {
                if (d.m[t][c].is_zero()) continue;
                Poly q = -Poly::divmod(d.m[t][c], d.m[t][t]).first;
                d.add_col(c, t, q);
                out.right.add_col(c, t, q);
                if (!d.m[t][c].is_zero()) dirty = true;
            }
            if (!dirty) break;
        }
    }

    for (int r = 0; r < d.rows; ++r)
        for (int c = 0; c < d.cols; ++c)
            if (r != c && !d.m[r][c].is_zero())
                throw internal_error("DiagonalizationFailure", "off-diagonal residue survived");
    for (int t = 0; t < steps; ++t) out.valuations.push_back(d.m[t][t].x_valuation());
    return out;
}

std::vector<int> smith_x_valuations(const PolyMatrix& mat) {
    if (mat.rows != mat.cols) throw internal_error("ShapeMismatch", "valuations of a non-square matrix");
    int n = mat.rows;
    std::vector<int> cumulative{0};  // valuation of the t-minor gcd

    std::vector<int> rowsel(n), colsel(n);
    for (int t = 1; t <= n; ++t) {
        int best = std::numeric_limits<int>::max();
        // All t-subsets of rows and columns.
        std::vector<int> rc(t), cc(t);
        for (int i = 0; i < t; ++i) rc[i] = i;
        while (true) {
            for (int i = 0; i < t; ++i) cc[i] = i;
            while (true) {
                PolyMatrix sub(t, t);
                for (int i = 0; i < t; ++i)
                    for (int j = 0; j < t; ++j) sub.m[i][j] = mat.m[rc[i]][cc[j]];
                int v = poly_det(sub).x_valuation();
                if (v >= 0) best = std::min(best, v);
                int k = t - 1;
                while (k >= 0 && cc[k] == n - t + k) --k;
                if (k < 0) break;
                ++cc[k];
                for (int i = k + 1; i < t; ++i) cc[i] = cc[i - 1] + 1;
            }
            int k = t - 1;
            while (k >= 0 && rc[k] == n - t + k) --k;
            if (k < 0) break;
            ++rc[k];
            for (int i = k + 1; i < t; ++i) rc[i] = rc[i - 1] + 1;
        }
        if (best == std::numeric_limits<int>::max())
            throw internal_error("SingularMatrix", "all minors of size " + std::to_string(t) + " vanish");
        cumulative.push_back(best);
    }

    std::vector<int> vals;
    for (int t = 1; t <= n; ++t) vals.push_back(cumulative[t] - cumulative[t - 1]);
    std::sort(vals.begin(), vals.end());
    return vals;
}

}  // namespace clusterforge
