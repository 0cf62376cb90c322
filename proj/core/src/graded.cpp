#include "clusterforge/graded.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "clusterforge/errors.hpp"

namespace clusterforge {

GradedCM::GradedCM(int i, int j, int n) : i(i), j(j), n(n) {
    if (n < 3 || j - i <= 0 || j - i >= n)
        throw input_error("IndexOutOfRange",
                          "graded label (" + std::to_string(i) + "," + std::to_string(j) +
                              ") out of range for n=" + std::to_string(n));
}

std::string GradedCM::str() const {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

bool is_projective_injective(const GradedCM& m) {
    return m.j - m.i == 1 || m.j - m.i == m.n - 1;
}

GradedCM shift(const GradedCM& m, int step) {
    int a = m.i, b = m.j;
    for (; step > 0; --step) {
        int t = a;
        a = b;
        b = t + m.n;
    }
    for (; step < 0; ++step) {
        int t = b;
        b = a;
        a = t - m.n;
    }
    return GradedCM(a, b, m.n);
}

GradedCM to_graded(const CMModule& m) { return GradedCM(m.i, m.j, m.n); }

CMModule forget_grading(const GradedCM& m) {
    GradedCM r = m;
    while (r.i < 1 || r.j > r.n) r = shift(r, r.j > r.n ? -1 : 1);
    return CMModule(r.i, r.j, r.n);
}

namespace {

void require_same_n(const GradedCM& m, const GradedCM& nmod) {
    if (m.n != nmod.n)
        throw input_error("SizeMismatch", m.str() + " lives in a different polygon than " + nmod.str());
}

int ceil_div(int a, int b) {  // b > 0
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace

int graded_ext_dim(const GradedCM& top, const GradedCM& sub) {
    require_same_n(top, sub);
    return (sub.i < top.i && top.i < sub.j && sub.j < top.j && top.j < sub.i + sub.n) ? 1 : 0;
}

GradedCM graded_syzygy(const GradedCM& m) { return GradedCM(m.j + 1 - m.n, m.i + 1, m.n); }

GradedCM graded_cosyzygy(const GradedCM& m) { return GradedCM(m.j - 1, m.i + m.n - 1, m.n); }

GradedCM omega_power(const GradedCM& m, int k) {
    int half = (k % 2 == 0) ? k / 2 : (k - 1) / 2;
    GradedCM r(m.i + (2 - m.n) * half, m.j + (2 - m.n) * half, m.n);
    if (k % 2 != 0) r = graded_syzygy(r);
    return r;
}

GradedCM ar_translate(const GradedCM& m) {
    if (is_projective_injective(m)) throw input_error("ProjectiveInput", m.str() + " is projective-injective");
    return GradedCM(m.i - 1, m.j - 1, m.n);
}

GradedCM graded_tau(const GradedCM& m) { return shift(ar_translate(m), 1); }

std::array<GradedCM, 2> graded_ar_middle(const GradedCM& m) {
    if (is_projective_injective(m)) throw input_error("ProjectiveInput", m.str() + " is projective-injective");
    return {GradedCM(m.i - 1, m.j, m.n), GradedCM(m.i, m.j - 1, m.n)};
}

int graded_stable_hom_dim(const GradedCM& m, const GradedCM& nmod) {
    require_same_n(m, nmod);
    if (is_projective_injective(m)) return 0;
    return graded_ext_dim(graded_tau(m), nmod);
}

std::vector<int> graded_column(const GradedCM& m) {
    std::vector<int> col(m.n);
    for (int r = 1; r <= m.n; ++r) col[r - 1] = ceil_div(r - m.i, m.n) + ceil_div(r - m.j, m.n);
    return col;
}

namespace {

bool degree_zero_hom(const GradedCM& m, const GradedCM& nmod) {
    std::vector<int> a = graded_column(m), b = graded_column(nmod);
    for (int r = 0; r < m.n; ++r)
        if (a[r] < b[r]) return false;
    return true;
}

}  // namespace

int graded_stable_hom_oracle(const GradedCM& m, const GradedCM& nmod) {
    require_same_n(m, nmod);
    if (!degree_zero_hom(m, nmod)) return 0;
    // Every degree-zero map into a cover summand yields a factorization, and
    // conversely (maps between these lattices are injections, so nonzero
    // composites stay nonzero).
    GradedCM p1(nmod.i, nmod.i + 1, nmod.n);
    GradedCM p2(nmod.j + 1 - nmod.n, nmod.j, nmod.n);
    if (degree_zero_hom(m, p1) || degree_zero_hom(m, p2)) return 0;
    return 1;
}

GradedTilting tilting_from_triangulation(const Triangulation& sigma) {
    int n = sigma.n();
    std::vector<bool> touched(n + 1, false);
    int max_start = 0;
    for (const Edge& d : sigma.diagonals()) {
        touched[d.s] = touched[d.t] = true;
        max_start = std::max(max_start, d.s);
    }
    int i0 = 0;
    for (int v = max_start + 1; v <= n; ++v)
        if (!touched[v]) {
            i0 = v;
            break;
        }
    if (i0 == 0) throw internal_error("NoEar", "no admissible ear vertex found");

    GradedTilting t;
    t.i0 = i0;
    for (const Edge& e : sigma.edges())
        t.summands.push_back(e.t < i0 ? GradedCM(e.s, e.t, n) : GradedCM(e.t - n, e.s, n));
    return t;
}

TiltingReport verify_tilting(const GradedTilting& t, int window) {
    if (t.summands.empty()) throw input_error("EmptySet", "tilting candidate has no summands");
    int n = t.summands.front().n;
    for (const GradedCM& m : t.summands)
        if (m.n != n) throw input_error("SizeMismatch", "summands of mixed polygon size");
    if (window < 2 * n)
        throw input_error("IndexOutOfRange", "rigidity window must be at least 2n");

    TiltingReport report;

    for (const GradedCM& x : t.summands)
        for (const GradedCM& y : t.summands)
            for (int k = -window; k <= window; ++k) {
                if (k == 0) continue;
                if (graded_stable_hom_dim(x, omega_power(y, k)) != 0) {
                    std::ostringstream os;
                    os << "stable hom " << x.str() << " -> syzygy^" << k << " " << y.str() << " is nonzero";
                    report.rigidity_failures.push_back(os.str());
                }
            }

    // Generation: close the non-projective summands under syzygy steps and
    // extension cones inside a bounded label window, then require the whole
    // fundamental strip i0-n < s < i0.
    const int lo = t.i0 - 3 * n, hi = t.i0 + 3 * n;
    auto in_grid = [&](const GradedCM& m) { return lo <= m.i && m.i <= hi; };
    auto key = [&](const GradedCM& m) { return std::pair<int, int>(m.i, m.j); };

    std::set<std::pair<int, int>> members;
    for (const GradedCM& m : t.summands)
        if (!is_projective_injective(m) && in_grid(m)) members.insert(key(m));

    auto available = [&](const GradedCM& m) {
        return is_projective_injective(m) || members.count(key(m)) > 0;
    };

    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<GradedCM> mods;
        for (auto& [a, b] : members) mods.push_back(GradedCM(a, b, n));
        auto add = [&](const GradedCM& m) {
            if (is_projective_injective(m) || !in_grid(m)) return;
            if (members.insert(key(m)).second) grew = true;
        };

        for (const GradedCM& m : mods) {
            add(graded_syzygy(m));
            add(graded_cosyzygy(m));
        }
        // Cones: for sub (s,t) and top (s',t') with s < s' < t < t' < s+n the
        // extension has middle (s,t') + (s',t).  Two members of the sequence
        // recover the third.
        for (const GradedCM& a : mods) {
            for (const GradedCM& c : mods) {
                if (a.i < c.i && c.i < a.j && a.j < c.j && c.j < a.i + n) {
                    add(GradedCM(a.i, c.j, n));
                    add(GradedCM(c.i, a.j, n));
                }
            }
            // a as top: subs (s,t) with s in (a.j-n, a.i), t in (a.i, a.j)
            for (int s = a.j - n + 1; s < a.i; ++s)
                for (int tt = a.i + 1; tt < a.j; ++tt) {
                    if (tt - s <= 0 || tt - s >= n) continue;
                    GradedCM sub(s, tt, n);
                    if (available(sub)) continue;
                    if (available(GradedCM(s, a.j, n)) && available(GradedCM(a.i, tt, n))) add(sub);
                }
            // a as sub: tops (s',t') with s' in (a.i, a.j), t' in (a.j, a.i+n)
            for (int s2 = a.i + 1; s2 < a.j; ++s2)
                for (int t2 = a.j + 1; t2 < a.i + n; ++t2) {
                    if (t2 - s2 <= 0 || t2 - s2 >= n) continue;
                    GradedCM top(s2, t2, n);
                    if (available(top)) continue;
                    if (available(GradedCM(a.i, t2, n)) && available(GradedCM(s2, a.j, n))) add(top);
                }
        }
    }

    for (int s = t.i0 - n + 1; s < t.i0; ++s)
        for (int gap = 2; gap <= n - 2; ++gap) {
            GradedCM want(s, s + gap, n);
            if (!members.count(key(want))) report.generation_missing.push_back(want);
        }

    return report;
}

ARWindow ar_quiver_window(int n, int i_min, int i_max) {
    if (n < 3) throw input_error("IndexOutOfRange", "n must be at least 3");
    if (i_min >= i_max) throw input_error("IndexOutOfRange", "window is empty");

    ARWindow w;
    w.n = n;
    w.i_min = i_min;
    w.i_max = i_max;
    std::map<std::pair<int, int>, int> index;
    for (int i = i_min; i < i_max; ++i)
        for (int j = i + 1; j <= std::min(i + n - 1, i_max); ++j) {
            index[{i, j}] = static_cast<int>(w.vertices.size());
            w.vertices.push_back(GradedCM(i, j, n));
        }
    for (const GradedCM& v : w.vertices) {
        auto from = index.at({v.i, v.j});
        auto right = index.find({v.i, v.j + 1});
        if (right != index.end()) w.arrows.push_back({from, right->second});
        auto down = index.find({v.i + 1, v.j});
        if (down != index.end()) w.arrows.push_back({from, down->second});
    }
    return w;
}

std::string ar_window_dot(const ARWindow& w) {
    std::ostringstream os;
    os << "digraph ar_window {\n  rankdir=LR;\n";
    for (size_t k = 0; k < w.vertices.size(); ++k) {
        const GradedCM& v = w.vertices[k];
        os << "  m" << k << " [label=\"(" << v.i << "," << v.j << ")\"";
        if (v.i == w.i_min || v.j == w.i_max) os << " style=dashed";  // window border: labels continue
        os << "];\n";
    }
    for (auto& [a, b] : w.arrows) os << "  m" << a << " -> m" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace clusterforge
