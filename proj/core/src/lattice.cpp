#include "clusterforge/lattice.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "clusterforge/errors.hpp"

namespace clusterforge {

namespace {

const Poly kX = Poly::monomial(1);

PolyMatrix x_identity(int k) {
    PolyMatrix out = PolyMatrix::identity(k);
    for (int i = 0; i < k; ++i) out.m[i][i] = kX;
    return out;
}

std::vector<Poly> mat_vec(const PolyMatrix& mat, const std::vector<Poly>& v) {
    std::vector<Poly> out(mat.rows);
    for (int r = 0; r < mat.rows; ++r)
        for (int c = 0; c < mat.cols; ++c)
            if (!mat.m[r][c].is_zero() && !v[c].is_zero()) out[r] += mat.m[r][c] * v[c];
    return out;
}

int min_valuation(const std::vector<Poly>& v) {
    int best = -1;
    for (const Poly& e : v) {
        int val = e.x_valuation();
        if (val < 0) continue;
        if (best < 0 || val < best) best = val;
    }
    return best;  // -1 for the zero vector
}

// Node-wise conjugators: Ginv[p+1] * A[p] * G[p] is the transformed step map.
struct Conjugation {
    std::vector<PolyMatrix> G, Ginv;
};

Conjugation identity_conjugation(int n, int k) {
    Conjugation out;
    out.G.assign(n, PolyMatrix::identity(k));
    out.Ginv.assign(n, PolyMatrix::identity(k));
    return out;
}

bool all_unit_x_diagonal(const std::vector<PolyMatrix>& mats) {
    for (const PolyMatrix& m : mats)
        if (!m.is_unit_x_diagonal()) return false;
    return true;
}

// Row-reduce v to e_0 by elementary operations; returns (C, Cinv) with
// C * e_0 = v and Cinv * v = e_0.  Requires v primitive (unit content).
std::pair<PolyMatrix, PolyMatrix> complete_to_basis(const std::vector<Poly>& v) {
    int k = static_cast<int>(v.size());
    PolyMatrix c = PolyMatrix::identity(k);
    PolyMatrix cinv = PolyMatrix::identity(k);
    std::vector<Poly> w = v;

    while (true) {
        int pivot = -1, live = 0;
        for (int i = 0; i < k; ++i) {
            if (w[i].is_zero()) continue;
            ++live;
            if (pivot < 0 || w[i].degree() < w[pivot].degree()) pivot = i;
        }
        if (pivot < 0) throw internal_error("PeelVector", "zero vector cannot be completed");
        if (live == 1) {
            if (!w[pivot].is_constant())
                throw internal_error("PeelVector", "non-primitive vector in strand peeling");
            mpq_class unit = w[pivot].coeff(0);
            for (int j = 0; j < k; ++j) {
                cinv.m[pivot][j] *= Poly(mpq_class(1 / unit));
                c.m[j][pivot] *= Poly(unit);
            }
            if (pivot != 0) {
                cinv.swap_rows(0, pivot);
                c.swap_cols(0, pivot);
            }
            return {c, cinv};
        }
        for (int i = 0; i < k; ++i) {
            if (i == pivot || w[i].is_zero()) continue;
            Poly q = Poly::divmod(w[i], w[pivot]).first;
            w[i] -= q * w[pivot];
            cinv.add_row(i, pivot, -q);
            c.add_col(pivot, i, q);
        }
    }
}

using LaurentScalar = std::map<int, mpq_class>;  // exponent -> coefficient

LaurentScalar laurent_of(const Poly& p) {
    LaurentScalar out;
    for (int d = 0; d <= p.degree(); ++d)
        if (p.coeff(d) != 0) out[d] = p.coeff(d);
    return out;
}

LaurentScalar laurent_shift(const LaurentScalar& a, int by) {
    LaurentScalar out;
    for (const auto& [e, c] : a) out[e + by] = c;
    return out;
}

void laurent_add(LaurentScalar& a, const LaurentScalar& b) {
    for (const auto& [e, c] : b) {
        a[e] += c;
        if (a[e] == 0) a.erase(e);
    }
}

Poly laurent_to_poly(const LaurentScalar& a) {
    int deg = a.empty() ? -1 : a.rbegin()->first;
    std::vector<mpq_class> coeffs(deg + 1, mpq_class(0));
    for (const auto& [e, c] : a) {
        if (e < 0) throw internal_error("SplittingObstruction", "negative exponent survived the splitting solve");
        coeffs[e] = c;
    }
    return Poly(coeffs);
}

Conjugation diagonalize_cycle(int n, const std::vector<PolyMatrix>& a);

// A primitive vector u with prod*u == 0 modulo x^2, found by rational
// elimination on the coefficient system; empty when none exists.
std::vector<Poly> mod_x2_kernel_seed(const PolyMatrix& prod) {
    int k = prod.rows;
    // Unknowns u = u0 + x*u1 stacked as (u0; u1); equations P0*u0 = 0 and
    // P1*u0 + P0*u1 = 0.
    int dim = 2 * k;
    std::vector<std::vector<mpq_class>> sys(dim, std::vector<mpq_class>(dim, mpq_class(0)));
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
            sys[r][c] = prod.m[r][c].coeff(0);
            sys[k + r][c] = prod.m[r][c].coeff(1);
            sys[k + r][k + c] = prod.m[r][c].coeff(0);
        }
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < dim && rank < dim; ++c) {
        int pr = -1;
        for (int r = rank; r < dim; ++r)
            if (sys[r][c] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(sys[rank], sys[pr]);
        mpq_class inv = mpq_class(1) / sys[rank][c];
        for (int j = c; j < dim; ++j) sys[rank][j] *= inv;
        for (int r = 0; r < dim; ++r) {
            if (r == rank || sys[r][c] == 0) continue;
            mpq_class f = sys[r][c];
            for (int j = c; j < dim; ++j) sys[r][j] -= f * sys[rank][j];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(dim, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        std::vector<mpq_class> sol(dim, mpq_class(0));
        sol[free] = 1;
        for (int r = rank - 1; r >= 0; --r) {
            int pc = pivot_col[r];
            mpq_class acc(0);
            for (int j = pc + 1; j < dim; ++j) acc += sys[r][j] * sol[j];
            sol[pc] = -acc;
        }
        bool low = false;
        for (int i = 0; i < k; ++i)
            if (sol[i] != 0) low = true;
        if (!low) continue;  // divisible by x, not primitive
        std::vector<Poly> seed(k);
        for (int i = 0; i < k; ++i)
            seed[i] = Poly(sol[i]) + Poly::monomial(1, sol[k + i]);
        return seed;
    }
    return {};
}

// Solve f[p+1]*d[p] = x^{eps[p]}*f[p] + l[p] around the cycle, one scalar
// unknown per companion column; d entries are 1 or x.
std::vector<std::vector<Poly>> solve_splitting(int n, const std::vector<int>& eps,
                                               const std::vector<std::vector<Poly>>& l,
                                               const std::vector<PolyMatrix>& delta) {
    int companions = delta.empty() ? 0 : delta[0].rows;
    std::vector<std::vector<Poly>> f(n, std::vector<Poly>(companions));
    for (int c = 0; c < companions; ++c) {
        // Transfer the general solution f[p] = x^{shift[p]}*phi + beta[p].
        std::vector<int> shift(n + 1, 0);
        std::vector<LaurentScalar> beta(n + 1);
        for (int p = 0; p < n; ++p) {
            bool dx = delta[p].m[c][c] == kX;
            if (!dx && delta[p].m[c][c] != Poly(1))
                throw internal_error("DiagonalizationFailure", "companion entry not 1 or x");
            shift[p + 1] = shift[p] + eps[p] - (dx ? 1 : 0);
            LaurentScalar next = laurent_shift(beta[p], eps[p]);
            laurent_add(next, laurent_of(l[p][c]));
            beta[p + 1] = laurent_shift(next, dx ? -1 : 0);
        }
        if (shift[n] != 0 || !beta[n].empty())
            throw internal_error("SplittingObstruction", "cycle monodromy does not close");

        LaurentScalar phi;
        for (int p = 0; p < n; ++p)
            for (const auto& [e, coef] : beta[p]) {
                if (e >= 0) continue;
                int idx = e - shift[p];
                if (idx < 0) throw internal_error("SplittingObstruction", "unliftable negative term");
                auto it = phi.find(idx);
                if (it != phi.end() && it->second != -coef)
                    throw internal_error("SplittingObstruction", "inconsistent splitting constraints");
                phi[idx] = -coef;
            }
        for (int p = 0; p < n; ++p) {
            LaurentScalar fp = laurent_shift(phi, shift[p]);
            laurent_add(fp, beta[p]);
            f[p][c] = laurent_to_poly(fp);
        }
    }
    return f;
}

Conjugation peel_strand(int n, const std::vector<PolyMatrix>& a) {
    int k = a[0].rows;

    // Smallest arc whose composite annihilates a direction modulo x^2; the
    // full cycle composes to x^2*Id, so the scan always succeeds.
    int arc_start = -1;
    std::vector<Poly> seed;
    std::vector<PolyMatrix> running(a);  // arc products, one per start node
    for (int m = 2; m <= n && arc_start < 0; ++m)
        for (int s = 0; s < n; ++s) {
            running[s] = a[(s + m - 1) % n] * running[s];
            if (arc_start >= 0) continue;
            seed = mod_x2_kernel_seed(running[s]);
            if (!seed.empty()) arc_start = s;
        }
    if (arc_start < 0) throw internal_error("PeelValuation", "no annihilated direction on any arc");

    // Push the direction once around the cycle, dividing out x where possible.
    std::vector<std::vector<Poly>> v(n);
    std::vector<int> eps(n, 0);
    v[arc_start] = seed;
    for (int off = 0; off < n; ++off) {
        int p = (arc_start + off) % n;
        std::vector<Poly> next = mat_vec(a[p], v[p]);
        int val = min_valuation(next);
        if (val < 0 || val > 1) throw internal_error("PeelValuation", "propagated vector degenerated");
        eps[p] = val;
        if (val == 1)
            for (Poly& e : next) e = Poly::exact_div(e, kX);
        int dst = (p + 1) % n;
        if (dst == arc_start) {
            if (next != v[arc_start])
                throw internal_error("PeelValuation", "strand did not close up");
        } else {
            v[dst] = next;
        }
    }

    // Complete each v[p] to a basis; the step maps become block triangular.
    std::vector<PolyMatrix> c(n, PolyMatrix(0, 0)), cinv(n, PolyMatrix(0, 0));
    for (int p = 0; p < n; ++p) {
        auto [cp, cip] = complete_to_basis(v[p]);
        c[p] = cp;
        cinv[p] = cip;
    }
    std::vector<PolyMatrix> quotient(n, PolyMatrix(k - 1, k - 1));
    std::vector<std::vector<Poly>> top(n);  // first-row tails
    for (int p = 0; p < n; ++p) {
        PolyMatrix t = cinv[(p + 1) % n] * a[p] * c[p];
        if (t.m[0][0] != Poly::monomial(eps[p]))
            throw internal_error("PeelValuation", "pivot entry mismatch after completion");
        for (int r = 1; r < k; ++r)
            if (!t.m[r][0].is_zero())
                throw internal_error("PeelValuation", "peeled column not triangular");
        top[p].assign(k - 1, Poly());
        for (int j = 1; j < k; ++j) top[p][j - 1] = t.m[0][j];
        for (int r = 1; r < k; ++r)
            for (int j = 1; j < k; ++j) quotient[p].m[r - 1][j - 1] = t.m[r][j];
    }

    Conjugation sub = diagonalize_cycle(n, quotient);

    // Rotate the tails into the sub-diagonal basis, then split them off.
    std::vector<PolyMatrix> delta(n, PolyMatrix(k - 1, k - 1));
    std::vector<std::vector<Poly>> tails(n);
    for (int p = 0; p < n; ++p) {
        delta[p] = sub.Ginv[(p + 1) % n] * quotient[p] * sub.G[p];
        PolyMatrix row(1, k - 1);
        row.m[0] = top[p];
        PolyMatrix rotated = row * sub.G[p];
        tails[p] = rotated.m[0];
    }
    std::vector<std::vector<Poly>> f = solve_splitting(n, eps, tails, delta);

    Conjugation out = identity_conjugation(n, k);
    for (int p = 0; p < n; ++p) {
        PolyMatrix block = PolyMatrix::identity(k);
        PolyMatrix blockinv = PolyMatrix::identity(k);
        for (int r = 1; r < k; ++r)
            for (int j = 1; j < k; ++j) {
                block.m[r][j] = sub.G[p].m[r - 1][j - 1];
                blockinv.m[r][j] = sub.Ginv[p].m[r - 1][j - 1];
            }
        PolyMatrix shear = PolyMatrix::identity(k);
        PolyMatrix shearinv = PolyMatrix::identity(k);
        for (int j = 1; j < k; ++j) {
            shear.m[0][j] = f[p][j - 1];
            shearinv.m[0][j] = -f[p][j - 1];
        }
        out.G[p] = c[p] * block * shear;
        out.Ginv[p] = shearinv * blockinv * cinv[p];
    }
    return out;
}

Conjugation diagonalize_cycle(int n, const std::vector<PolyMatrix>& a) {
    int k = a[0].rows;
    if (k == 0 || all_unit_x_diagonal(a)) return identity_conjugation(n, k);

    if (k == 1) {
        // Scalars: each entry is a monomial dividing x; strip the constants.
        Conjugation out = identity_conjugation(n, 1);
        mpq_class g(1);
        for (int p = 0; p < n; ++p) {
            const Poly& e = a[p].m[0][0];
            int val = e.x_valuation();
            if (val < 0 || val > 1 || e != Poly::monomial(val, e.lc()))
                throw internal_error("DiagonalizationFailure", "scalar step is not a monomial dividing x");
            out.G[p].m[0][0] = Poly(g);
            out.Ginv[p].m[0][0] = Poly(mpq_class(1 / g));
            g *= e.lc();
        }
        if (g != 1) throw internal_error("DiagonalizationFailure", "scalar cycle units do not cancel");
        return out;
    }

    return peel_strand(n, a);
}

Conjugation diagonalize_checked(const CycleRep& rep) {
    validate_cycle_rep(rep);
    Conjugation conj = diagonalize_cycle(rep.n, rep.A);
    for (int p = 0; p < rep.n; ++p) {
        int q = (p + 1) % rep.n;
        if (!(conj.Ginv[p] * conj.G[p]).is_identity() ||
            !(conj.Ginv[q] * rep.A[p] * conj.G[p]).is_unit_x_diagonal() ||
            !(conj.Ginv[p] * rep.B[p] * conj.G[q]).is_unit_x_diagonal())
            throw internal_error("DiagonalizationFailure", "postcondition check failed");
        Poly det = poly_det(conj.G[p]);
        if (det.is_zero() || !det.is_constant())
            throw internal_error("DiagonalizationFailure", "conjugator determinant is not a unit");
    }
    return conj;
}

}  // namespace

void validate_cycle_rep(const CycleRep& rep) {
    if (rep.n < 3 || static_cast<int>(rep.A.size()) != rep.n || static_cast<int>(rep.B.size()) != rep.n)
        throw input_error("PreconditionViolated", "cycle representation needs n >= 3 maps each way");
    int k = rep.rank();
    for (int p = 0; p < rep.n; ++p)
        if (rep.A[p].rows != k || rep.A[p].cols != k || rep.B[p].rows != k || rep.B[p].cols != k)
            throw input_error("PreconditionViolated", "all step matrices must be square of one size");
    PolyMatrix xid = x_identity(k);
    for (int p = 0; p < rep.n; ++p)
        if (rep.A[p] * rep.B[p] != xid || rep.B[p] * rep.A[p] != xid)
            throw input_error("PreconditionViolated",
                              "opposite steps at node " + std::to_string(p) + " do not compose to x");
    PolyMatrix around = PolyMatrix::identity(k);
    for (int p = 0; p < rep.n; ++p) around = rep.A[p] * around;
    PolyMatrix x2id = x_identity(k);
    for (int i = 0; i < k; ++i) x2id.m[i][i] = Poly::monomial(2);
    if (around != x2id)
        throw input_error("PreconditionViolated", "full clockwise composite is not x^2");
}

CycleRep strand_rep(const CMModule& m) {
    CycleRep rep;
    rep.n = m.n;
    rep.A.assign(m.n, PolyMatrix::identity(1));
    rep.B.assign(m.n, PolyMatrix::identity(1));
    for (int p = 0; p < m.n; ++p) {
        bool step = (p == m.i - 1) || (p == m.j - 1);
        rep.A[p].m[0][0] = step ? kX : Poly(1);
        rep.B[p].m[0][0] = step ? Poly(1) : kX;
    }
    return rep;
}

CycleRep direct_sum_rep(const std::vector<CMModule>& mods) {
    if (mods.empty()) throw input_error("EmptySet", "nothing to glue");
    int n = mods.front().n;
    int k = static_cast<int>(mods.size());
    CycleRep rep;
    rep.n = n;
    rep.A.assign(n, PolyMatrix(k, k));
    rep.B.assign(n, PolyMatrix(k, k));
    for (int c = 0; c < k; ++c) {
        if (mods[c].n != n) throw input_error("SizeMismatch", "summands live over different polygons");
        CycleRep strand = strand_rep(mods[c]);
        for (int p = 0; p < n; ++p) {
            rep.A[p].m[c][c] = strand.A[p].m[0][0];
            rep.B[p].m[c][c] = strand.B[p].m[0][0];
        }
    }
    return rep;
}

std::vector<PolyMatrix> cycle_diagonalize(const CycleRep& rep) {
    return diagonalize_checked(rep).G;
}

std::vector<CMModule> decompose_cm(const CycleRep& rep) {
    Conjugation conj = diagonalize_checked(rep);
    int k = rep.rank();
    std::vector<CMModule> out;
    for (int c = 0; c < k; ++c) {
        std::vector<int> steps;
        for (int p = 0; p < rep.n; ++p) {
            Poly entry = (conj.Ginv[(p + 1) % rep.n] * rep.A[p] * conj.G[p]).m[c][c];
            if (entry == kX) steps.push_back(p);
        }
        if (steps.size() != 2)
            throw internal_error("StrandPattern", "diagonal strand does not change degree exactly twice");
        out.emplace_back(steps[0] + 1, steps[1] + 1, rep.n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

CycleRep random_glue(const std::vector<CMModule>& mods, std::uint64_t seed) {
    CycleRep rep = direct_sum_rep(mods);
    int n = rep.n, k = rep.rank();
    std::mt19937_64 gen(seed);
    auto coeff = [&]() {
        int c = static_cast<int>(gen() % 4);  // {-2,-1,1,2}
        return mpq_class(c < 2 ? c - 2 : c - 1);
    };

    std::vector<PolyMatrix> u(n, PolyMatrix::identity(k));
    std::vector<PolyMatrix> uinv(n, PolyMatrix::identity(k));
    for (int p = 0; p < n; ++p) {
        if (k == 1) {
            mpq_class c = coeff();
            u[p].m[0][0] = Poly(c);
            uinv[p].m[0][0] = Poly(mpq_class(1 / c));
            continue;
        }
        int ops = k + 3;
        for (int t = 0; t < ops; ++t) {
            int r1 = static_cast<int>(gen() % k);
            int r2 = static_cast<int>(gen() % k);
            if (t % 3 == 2) {
                u[p].swap_rows(r1, r2);
                uinv[p].swap_cols(r1, r2);
                continue;
            }
            if (r1 == r2) r2 = (r2 + 1) % k;
            Poly q = Poly::monomial(static_cast<int>(gen() % 2), coeff());
            u[p].add_row(r2, r1, q);
            uinv[p].add_col(r1, r2, -q);
        }
        if (!(u[p] * uinv[p]).is_identity())
            throw internal_error("GlueTransform", "random conjugator inverse drifted");
    }

    CycleRep glued;
    glued.n = n;
    glued.A.reserve(n);
    glued.B.reserve(n);
    for (int p = 0; p < n; ++p) {
        glued.A.push_back(u[(p + 1) % n] * rep.A[p] * uinv[p]);
        glued.B.push_back(u[p] * rep.B[p] * uinv[(p + 1) % n]);
    }
    validate_cycle_rep(glued);
    return glued;
}

}  // namespace clusterforge
