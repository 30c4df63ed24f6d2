#pragma once

#include "hopf.hpp"
#include "matched_pair.hpp"

namespace bicross {

// Index scheme for the bicrossproduct basis s (x) delta_u and its relatives.
struct BicrossBasis {
    int nM = 0, nG = 0;
    long index(int s, int u) const { return (long)s * nG + u; }
    std::pair<int, int> split(long i) const { return {int(i / nG), int(i % nG)}; }
    long dim() const { return (long)nM * nG; }
};

// ---------------------------------------------------------------------------
// H = kM |>.< k(G): smash product algebra by the action of M on G, smash
// coproduct by the coaction of G.
// ---------------------------------------------------------------------------
inline HopfPtr build_H(const MatchedPair& mp) {
    int nM = mp.nM(), nG = mp.nG();
    BicrossBasis B{nM, nG};
    auto H = std::make_shared<FinDimHopf>();
    H->dim = B.dim();
    H->labels.resize(H->dim);
    for (int s = 0; s < nM; ++s)
        for (int u = 0; u < nG; ++u)
            H->labels[B.index(s, u)] = mp.X->labels[mp.M.global(s)] + "(x)d[" +
                                       mp.X->labels[mp.G.global(u)] + "]";
    H->mult.assign(H->dim, std::vector<SVec>(H->dim));
    for (int s = 0; s < nM; ++s)
        for (int u = 0; u < nG; ++u)
            for (int t = 0; t < nM; ++t)
                for (int v = 0; v < nG; ++v) {
                    // (s x d_u)(t x d_v) = [u = t|>v] (st x d_v)
                    if (u == mp.left(t, v))
                        H->mult[B.index(s, u)][B.index(t, v)] =
                            sv_unit(B.index(mp.m_mul(s, t), v));
                }
    H->unit.clear();
    for (int u = 0; u < nG; ++u) H->unit.emplace_back(B.index(0, u), CycScalar::one());
    sv_normalize(H->unit);
    H->comult.assign(H->dim, {});
    for (int s = 0; s < nM; ++s)
        for (int u = 0; u < nG; ++u) {
            // Delta(s x d_u) = sum_{xy=u} (s x d_x) (x) (s<|x x d_y)
            SVec2 cp;
            for (int x = 0; x < nG; ++x) {
                int y = mp.g_mul(mp.g_inv(x), u);
                cp.push_back({B.index(s, x), B.index(mp.right(s, x), y), CycScalar::one()});
            }
            sv2_normalize(cp);
            H->comult[B.index(s, u)] = std::move(cp);
        }
    H->counit.assign(H->dim, CycScalar::zero());
    for (int s = 0; s < nM; ++s) H->counit[B.index(s, 0)] = CycScalar::one();
    H->antipode.assign(H->dim, {});
    for (int s = 0; s < nM; ++s)
        for (int u = 0; u < nG; ++u)
            H->antipode[B.index(s, u)] =
                sv_unit(B.index(mp.m_inv(mp.right(s, u)), mp.g_inv(mp.left(s, u))));
    H->has_star = true;
    H->star.assign(H->dim, {});
    for (int s = 0; s < nM; ++s)
        for (int u = 0; u < nG; ++u)
            H->star[B.index(s, u)] = sv_unit(B.index(mp.m_inv(s), mp.left(s, u)));
    return H;
}

// ---------------------------------------------------------------------------
// H^* = k(M) |>.< kG on the dual basis delta_s (x) u.
// ---------------------------------------------------------------------------
inline HopfPtr build_H_dual(const MatchedPair& mp) {
    int nM = mp.nM(), nG = mp.nG();
    BicrossBasis B{nM, nG};
    auto A = std::make_shared<FinDimHopf>();
    A->dim = B.dim();
    A->labels.resize(A->dim);
    for (int s = 0; s < nM; ++s)
        for (int u = 0; u < nG; ++u)
            A->labels[B.index(s, u)] = "d[" + mp.X->labels[mp.M.global(s)] + "](x)" +
                                       mp.X->labels[mp.G.global(u)];
    A->mult.assign(A->dim, std::vector<SVec>(A->dim));
    for (int s = 0; s < nM; ++s)
        for (int u = 0; u < nG; ++u)
            for (int t = 0; t < nM; ++t)
                for (int v = 0; v < nG; ++v) {
                    // (d_s x u)(d_t x v) = [s<|u = t] (d_s x uv)
                    if (mp.right(s, u) == t)
                        A->mult[B.index(s, u)][B.index(t, v)] =
                            sv_unit(B.index(s, mp.g_mul(u, v)));
                }
    A->unit.clear();
    for (int s = 0; s < nM; ++s) A->unit.emplace_back(B.index(s, 0), CycScalar::one());
    sv_normalize(A->unit);
    A->comult.assign(A->dim, {});
    for (int s = 0; s < nM; ++s)
        for (int u = 0; u < nG; ++u) {
            // Delta(d_s x u) = sum_{ab=s} (d_a x b|>u) (x) (d_b x u)
            SVec2 cp;
            for (int a = 0; a < nM; ++a) {
                int b = mp.m_mul(mp.m_inv(a), s);
                cp.push_back({B.index(a, mp.left(b, u)), B.index(b, u), CycScalar::one()});
            }
            sv2_normalize(cp);
            A->comult[B.index(s, u)] = std::move(cp);
        }
    A->counit.assign(A->dim, CycScalar::zero());
    for (int u = 0; u < nG; ++u) A->counit[B.index(0, u)] = CycScalar::one();
    A->antipode.assign(A->dim, {});
    for (int s = 0; s < nM; ++s)
        for (int u = 0; u < nG; ++u)
            A->antipode[B.index(s, u)] =
                sv_unit(B.index(mp.m_inv(mp.right(s, u)), mp.g_inv(mp.left(s, u))));
    A->has_star = true;
    A->star.assign(A->dim, {});
    for (int s = 0; s < nM; ++s)
        for (int u = 0; u < nG; ++u)
            A->star[B.index(s, u)] = sv_unit(B.index(mp.right(s, u), mp.g_inv(u)));
    return A;
}

// ---------------------------------------------------------------------------
// Quantum double D(H) on the basis d_s (x) u (x) t (x) d_v. Structure
// constants come from the closed-form cross relations; every product of basis
// elements is zero or a single basis element.
// ---------------------------------------------------------------------------
struct DoubleBasis {
    const MatchedPair* mp = nullptr;
    int nM = 0, nG = 0;

    explicit DoubleBasis(const MatchedPair& m) : mp(&m), nM(m.nM()), nG(m.nG()) {}

    long dim() const { return (long)nM * nG * nM * nG; }
    long index(int s, int u, int t, int v) const {
        return ((long)(s)*nG + u) * nM * nG + (long)t * nG + v;
    }
    struct Key {
        int s, u, t, v;
    };
    Key split(long i) const {
        int v = int(i % nG);
        i /= nG;
        int t = int(i % nM);
        i /= nM;
        int u = int(i % nG);
        i /= nG;
        return {int(i), u, t, v};
    }
    std::string label(long i) const {
        auto k = split(i);
        const auto& X = *mp->X;
        return "d[" + X.labels[mp->M.global(k.s)] + "](x)" + X.labels[mp->G.global(k.u)] +
               "(x)" + X.labels[mp->M.global(k.t)] + "(x)d[" + X.labels[mp->G.global(k.v)] + "]";
    }

    // (1 x t x d_v)(d_s x u x 1) = d_{s1} x u1 x t1 x d_{v1}
    Key cross(int t, int v, int s, int u) const {
        const MatchedPair& m = *mp;
        int vu = m.g_mul(v, m.g_inv(u));               // v u^-1
        int t1 = m.right(t, m.g_inv(m.left(s, u)));    // t <| (s|>u)^-1
        int u1 = m.left(m.right(t, vu), u);            // (t <| vu^-1) |> u
        int s1 = m.m_mul(m.m_mul(t1, s), m.m_inv(m.right(t, vu)));
        int v1 = m.g_mul(m.g_mul(m.left(s, u), v), m.g_inv(u));  // (s|>u) v u^-1
        return {s1, u1, t1, v1};
    }

    // Product of basis elements; empty SVec when the delta functions vanish.
    SVec product(long a, long b) const {
        const MatchedPair& m = *mp;
        auto A = split(a), B = split(b);
        Key c = cross(A.t, A.v, B.s, B.u);
        // H*op factor: (d_x x q) .op (d_s1 x u1) = [s1<|u1 = x] (d_s1 x u1 q)
        if (m.right(c.s, c.u) != A.s) return {};
        // H factor: (t1 x d_v1)(r x d_w) = [v1 = r|>w] (t1 r x d_w)
        if (c.v != m.left(B.t, B.v)) return {};
        return sv_unit(index(c.s, m.g_mul(c.u, A.u), m.m_mul(c.t, B.t), B.v));
    }

    SVec2 coproduct(long i) const {
        const MatchedPair& m = *mp;
        auto k = split(i);
        SVec2 cp;
        for (int a = 0; a < nM; ++a) {
            int b = m.m_mul(m.m_inv(a), k.s);
            for (int x = 0; x < nG; ++x) {
                int y = m.g_mul(m.g_inv(x), k.v);
                cp.push_back({index(a, m.left(b, k.u), k.t, x),
                              index(b, k.u, m.right(k.t, x), y), CycScalar::one()});
            }
        }
        sv2_normalize(cp);
        return cp;
    }

    SVec unit() const {
        SVec r;
        for (int s = 0; s < nM; ++s)
            for (int v = 0; v < nG; ++v) r.emplace_back(index(s, 0, 0, v), CycScalar::one());
        sv_normalize(r);
        return r;
    }

    CycScalar counit(long i) const {
        auto k = split(i);
        return (k.s == 0 && k.v == 0) ? CycScalar::one() : CycScalar::zero();
    }

    // S(f x h) = (1 x S_H(h)) (S_{H*}(f) x 1); both antipodes are involutive.
    long antipode(long i) const {
        const MatchedPair& m = *mp;
        auto k = split(i);
        int fs = m.m_inv(m.right(k.s, k.u)), fu = m.g_inv(m.left(k.s, k.u));
        int ht = m.m_inv(m.right(k.t, k.v)), hv = m.g_inv(m.left(k.t, k.v));
        Key c = cross(ht, hv, fs, fu);
        return index(c.s, c.u, c.t, c.v);
    }

    // (f x h)* = (1 x h*) (f* x 1).
    long star(long i) const {
        const MatchedPair& m = *mp;
        auto k = split(i);
        int fs = m.right(k.s, k.u), fu = m.g_inv(k.u);
        int ht = m.m_inv(k.t), hv = m.left(k.t, k.v);
        Key c = cross(ht, hv, fs, fu);
        return index(c.s, c.u, c.t, c.v);
    }
};

inline HopfPtr build_double(const MatchedPair& mp) {
    DoubleBasis B(mp);
    auto D = std::make_shared<FinDimHopf>();
    D->dim = B.dim();
    D->labels.resize(D->dim);
    for (long i = 0; i < D->dim; ++i) D->labels[i] = B.label(i);
    D->mult.assign(D->dim, std::vector<SVec>(D->dim));
    for (long a = 0; a < D->dim; ++a)
        for (long b = 0; b < D->dim; ++b) D->mult[a][b] = B.product(a, b);
    D->unit = B.unit();
    D->comult.resize(D->dim);
    D->counit.resize(D->dim);
    D->antipode.resize(D->dim);
    D->has_star = true;
    D->star.resize(D->dim);
    for (long i = 0; i < D->dim; ++i) {
        D->comult[i] = B.coproduct(i);
        D->counit[i] = B.counit(i);
        D->antipode[i] = sv_unit(B.antipode(i));
        D->star[i] = sv_unit(B.star(i));
    }
    return D;
}

// ---------------------------------------------------------------------------
// kX |>.< k(Y): the bicrossproduct of the dressing factorisation. Basis
// x (x) d_y with x in X and y in Y (both indexed by elements of X).
// ---------------------------------------------------------------------------
struct KxKyBasis {
    const DressingData* dd = nullptr;
    int n = 0;  // |X| = |Y|

    explicit KxKyBasis(const DressingData& d) : dd(&d), n(d.base.X->order) {}

    long dim() const { return (long)n * n; }
    long index(int x, int y) const { return (long)x * n + y; }
    std::pair<int, int> split(long i) const { return {int(i / n), int(i % n)}; }

    SVec product(long a, long b) const {
        auto [x1, y1] = split(a);
        auto [x2, y2] = split(b);
        if (y1 != dd->act_y[x2][y2]) return {};
        return sv_unit(index(dd->base.X->mul[x1][x2], y2));
    }
    SVec2 coproduct(long i) const {
        auto [x, y] = split(i);
        SVec2 cp;
        for (int y1 = 0; y1 < n; ++y1) {
            int y2 = dd->Y->mul[dd->Y->inv[y1]][y];
            cp.push_back({index(x, y1), index(dd->act_x[x][y1], y2), CycScalar::one()});
        }
        sv2_normalize(cp);
        return cp;
    }
    long antipode(long i) const {
        auto [x, y] = split(i);
        return index(dd->base.X->inv[dd->act_x[x][y]], dd->Y->inv[dd->act_y[x][y]]);
    }
    long star(long i) const {
        auto [x, y] = split(i);
        return index(dd->base.X->inv[x], dd->act_y[x][y]);
    }
    CycScalar counit(long i) const {
        auto [x, y] = split(i);
        return y == dd->base.X->identity ? CycScalar::one() : CycScalar::zero();
    }
};

inline HopfPtr build_kx_ky(const DressingData& dd) {
    KxKyBasis B(dd);
    auto H = std::make_shared<FinDimHopf>();
    H->dim = B.dim();
    H->labels.resize(H->dim);
    const auto& X = *dd.base.X;
    for (int x = 0; x < B.n; ++x)
        for (int y = 0; y < B.n; ++y)
            H->labels[B.index(x, y)] = X.labels[x] + "(x)d[" + X.labels[y] + "]";
    H->mult.assign(H->dim, std::vector<SVec>(H->dim));
    for (long a = 0; a < H->dim; ++a)
        for (long b = 0; b < H->dim; ++b) H->mult[a][b] = B.product(a, b);
    H->unit.clear();
    for (int y = 0; y < B.n; ++y) H->unit.emplace_back(B.index(X.identity, y), CycScalar::one());
    sv_normalize(H->unit);
    H->comult.resize(H->dim);
    H->counit.resize(H->dim);
    H->antipode.resize(H->dim);
    H->has_star = true;
    H->star.resize(H->dim);
    for (long i = 0; i < H->dim; ++i) {
        H->comult[i] = B.coproduct(i);
        H->counit[i] = B.counit(i);
        H->antipode[i] = sv_unit(B.antipode(i));
        H->star[i] = sv_unit(B.star(i));
    }
    return H;
}

// psi: D(H) -> kX |>.< k(Y),
//   d_s x u x t x d_v  |->  (s|>u)^-1 t (x) d_{v (t<|v)^-1 s^-1 t}.
inline long psi_image_index(const DressingData& dd, int s, int u, int t, int v) {
    const MatchedPair& mp = dd.base;
    const FiniteGroup& X = *mp.X;
    KxKyBasis B(dd);
    int x = X.mul[X.inv[mp.G.global(mp.left(s, u))]][mp.M.global(t)];
    int y = X.mul[X.mul[X.mul[mp.G.global(v)][X.inv[mp.M.global(mp.right(t, v))]]]
                       [X.inv[mp.M.global(s)]]][mp.M.global(t)];
    return B.index(x, y);
}

inline HopfMap build_psi(const DressingData& dd, HopfPtr D, HopfPtr KXY) {
    DoubleBasis DB(dd.base);
    HopfMap psi;
    psi.src = std::move(D);
    psi.dst = std::move(KXY);
    psi.cols.resize(DB.dim());
    for (long i = 0; i < DB.dim(); ++i) {
        auto k = DB.split(i);
        psi.cols[i] = sv_unit(psi_image_index(dd, k.s, k.u, k.t, k.v));
    }
    return psi;
}

// The quasitriangular structure of kX |>.< k(Y):
//   R = sum_{u,s,v,t} v^-1 (x) d_{us} (x) s^-1 (x) d_{(s|>v)t}.
inline SVec2 build_R(const DressingData& dd) {
    const MatchedPair& mp = dd.base;
    const FiniteGroup& X = *mp.X;
    KxKyBasis B(dd);
    SVec2 R;
    for (int u = 0; u < mp.nG(); ++u)
        for (int s = 0; s < mp.nM(); ++s)
            for (int v = 0; v < mp.nG(); ++v)
                for (int t = 0; t < mp.nM(); ++t) {
                    long a = B.index(X.inv[mp.G.global(v)], mp.compose(u, s));
                    long b = B.index(X.inv[mp.M.global(s)], mp.compose(mp.left(s, v), t));
                    R.push_back({a, b, CycScalar::one()});
                }
    sv2_normalize(R);
    return R;
}

// Closed form of the quantum inverse Killing form R21 R.
inline SVec2 build_Q_closed_form(const DressingData& dd) {
    const MatchedPair& mp = dd.base;
    const FiniteGroup& X = *mp.X;
    KxKyBasis B(dd);
    SVec2 Q;
    for (int u = 0; u < mp.nG(); ++u)
        for (int v = 0; v < mp.nG(); ++v)
            for (int s = 0; s < mp.nM(); ++s)
                for (int p = 0; p < mp.nM(); ++p) {
                    int gu = mp.G.global(u);
                    int x1 = X.mul[X.inv[mp.M.global(s)]][X.inv[gu]];
                    int y1 = X.mul[X.mul[X.mul[gu][mp.G.global(mp.left(s, v))]]
                                        [mp.M.global(mp.right(p, u))]][X.inv[gu]];
                    int x2 = X.mul[X.inv[mp.G.global(v)]][X.inv[mp.M.global(p)]];
                    int y2 = X.mul[X.mul[mp.M.global(p)][mp.compose(u, s)]][X.inv[mp.M.global(p)]];
                    Q.push_back({B.index(x1, y1), B.index(x2, y2), CycScalar::one()});
                }
    sv2_normalize(Q);
    return Q;
}

// The canonical element u = sum_x x (x) d_x.
inline SVec build_u_closed_form(const DressingData& dd) {
    KxKyBasis B(dd);
    SVec r;
    for (int x = 0; x < B.n; ++x) r.emplace_back(B.index(x, x), CycScalar::one());
    sv_normalize(r);
    return r;
}

// ---------------------------------------------------------------------------
// Y-graded X-modules = modules of kX |>.< k(Y).
// ---------------------------------------------------------------------------
struct YGradedModule {
    long dim = 0;
    std::vector<int> grade;   // basis -> element of Y (indexed by X elements)
    std::vector<Mat> action;  // one matrix per element of X
};

// The Schroedinger module k(Y): x |> d_y = d_{x |>~ y}, |d_y| = y.
inline YGradedModule schroedinger_module(const DressingData& dd) {
    int n = dd.base.X->order;
    YGradedModule m;
    m.dim = n;
    m.grade.resize(n);
    for (int y = 0; y < n; ++y) m.grade[y] = y;
    m.action.assign(n, Mat(n, n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) m.action[x].a[dd.act_y[x][y]][y] = CycScalar::one();
    return m;
}

// Action matrix of a kX |>.< k(Y) element on a Y-graded X-module.
inline Mat module_action(const DressingData& dd, const YGradedModule& m, const SVec& elem) {
    KxKyBasis B(dd);
    Mat r(m.dim, m.dim);
    for (const auto& [i, c] : elem) {
        auto [x, y] = B.split(i);
        for (long b = 0; b < m.dim; ++b) {
            if (m.grade[b] != y) continue;
            for (long a = 0; a < m.dim; ++a)
                if (!m.action[x].a[a][b].is_zero()) r.a[a][b] += c * m.action[x].a[a][b];
        }
    }
    return r;
}

// Quantum dimension: trace of the canonical element in the module. The
// second route sums trace_{V_y} pi(y) over the grading, per the cross
// product module description.
inline CycScalar quantum_dimension(const DressingData& dd, const YGradedModule& m) {
    CycScalar via_u = module_action(dd, m, build_u_closed_form(dd)).trace();
    CycScalar via_grading = CycScalar::zero();
    for (long b = 0; b < m.dim; ++b) via_grading += m.action[m.grade[b]].a[b][b];
    if (via_u != via_grading)
        throw InternalConsistencyError("quantum dimension routes disagree");
    return via_u;
}

}  // namespace bicross
