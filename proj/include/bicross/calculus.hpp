#pragma once

#include "bicross.hpp"
#include "chartab.hpp"

namespace bicross {

// ---------------------------------------------------------------------------
// The Schroedinger representation of H transferred to k(X) |x kX, in the
// phi basis phi_{vt} = (t^-1 <| v^-1) (x) d_v labelled by vt in X. There the
// X-action is the permutation action us |>~ vt = us vt (s <| v)^-1 and the
// k(X) part acts by evaluation against ||vt|| = v t v^-1.
// ---------------------------------------------------------------------------
struct SchroedingerData {
    MatchedPair mp;
    BicrossBasis hb;             // H basis (t, v) -> t*nG + v
    std::vector<long> phi_to_h;  // x -> H basis index of phi_x
    std::vector<int> h_to_phi;   // H basis index -> x
    std::vector<std::vector<int>> act;  // act[x][y] = x |>~ y on X indices
    std::vector<int> norm;              // ||y|| as an X element

    int n() const { return mp.X->order; }
};

// Lemma-level closed forms on the t (x) d_v basis, used as oracles.
inline long x_act_on_h_basis(const MatchedPair& mp, int x, long h_index) {
    BicrossBasis B{mp.nM(), mp.nG()};
    auto [t, v] = B.split(h_index);
    int u = mp.factor_g[x], s = mp.factor_m[x];
    int s2 = mp.right(s, mp.g_mul(v, mp.g_inv(mp.left(t, v))));  // s <| v (t|>v)^-1
    int mpart = mp.right(mp.m_mul(mp.m_mul(s2, t), mp.m_inv(s)), mp.g_inv(u));
    int gpart = mp.g_mul(u, mp.left(s, v));
    return B.index(mpart, gpart);
}

inline int h_basis_norm(const MatchedPair& mp, long h_index) {
    BicrossBasis B{mp.nM(), mp.nG()};
    auto [t, v] = B.split(h_index);
    const FiniteGroup& X = *mp.X;
    int gv = mp.G.global(v);
    return X.mul[X.mul[gv][X.inv[mp.M.global(mp.right(t, v))]]][X.inv[gv]];
}

inline SchroedingerData build_schroedinger_action(const MatchedPair& mp) {
    SchroedingerData sd;
    sd.mp = mp;
    sd.hb = BicrossBasis{mp.nM(), mp.nG()};
    const FiniteGroup& X = *mp.X;
    int n = X.order;
    sd.phi_to_h.resize(n);
    sd.h_to_phi.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        int v = mp.factor_g[x], t = mp.factor_m[x];
        long h = sd.hb.index(mp.right(mp.m_inv(t), mp.g_inv(v)), v);
        sd.phi_to_h[x] = h;
        sd.h_to_phi[h] = x;
    }
    for (int h = 0; h < n; ++h)
        if (sd.h_to_phi[h] < 0) throw InternalConsistencyError("phi labels do not cover the basis");
    sd.act.assign(n, std::vector<int>(n));
    sd.norm.resize(n);
    for (int y = 0; y < n; ++y) {
        // ||y|| = v t v^-1 = y v^-1 for y = v t
        int v = mp.factor_g[y];
        sd.norm[y] = X.mul[y][X.inv[mp.G.global(v)]];
    }
    for (int x = 0; x < n; ++x) {
        int s = mp.factor_m[x];
        for (int y = 0; y < n; ++y) {
            int v = mp.factor_g[y];
            sd.act[x][y] = X.mul[X.mul[x][y]][X.inv[mp.M.global(mp.right(s, v))]];
        }
    }
    // the action is a group action compatible with the grading
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (sd.act[X.identity][y] != y)
                throw InternalConsistencyError("identity does not act trivially");
            if (sd.norm[sd.act[x][y]] != X.conj(x, sd.norm[y]))
                throw InternalConsistencyError("grading is not conjugation-equivariant");
        }
    for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = 0; x2 < n; ++x2) {
            int x12 = X.mul[x1][x2];
            for (int y = 0; y < n; ++y)
                if (sd.act[x1][sd.act[x2][y]] != sd.act[x12][y])
                    throw InternalConsistencyError("phi action is not a group action");
        }
    // consistency with the closed form on the t (x) d_v basis
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x_act_on_h_basis(mp, x, sd.phi_to_h[y]) != sd.phi_to_h[sd.act[x][y]])
                throw InternalConsistencyError("phi action disagrees with the basis closed form");
    return sd;
}

// ---------------------------------------------------------------------------
// Orbits of the X action on X/~, where vt ~ us iff ||vt|| = ||us||.
// ---------------------------------------------------------------------------
struct OrbitDatum {
    int base_value = 0;                     // ||.|| value of the base point, an element of M
    std::vector<int> values;                // all ||.|| values in the orbit, sorted
    std::vector<std::vector<int>> classes;  // members of each value's class, sorted
    std::vector<int> leaf;                  // members of the base class
    Subgroup Xi;                            // centraliser of base_value in X
    std::vector<int> transversal;           // per value: x with x.base_value.x^-1 = value
};

inline std::vector<OrbitDatum> compute_orbits(const SchroedingerData& sd) {
    const FiniteGroup& X = *sd.mp.X;
    int n = X.order;
    std::map<int, std::vector<int>> fibers;  // ||.|| value -> class members
    for (int y = 0; y < n; ++y) fibers[sd.norm[y]].push_back(y);
    std::vector<OrbitDatum> orbits;
    std::set<int> used;
    // candidate base values: elements of M, in increasing X index
    for (int s : sd.mp.M.elements) {
        if (used.count(s)) continue;
        if (!fibers.count(s)) throw InternalConsistencyError("M element is not a ||.|| value");
        OrbitDatum o;
        o.base_value = s;
        std::map<int, int> clsof;  // value -> position
        std::vector<int> stack{s};
        used.insert(s);
        std::set<int> vals{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int x = 0; x < n; ++x) {
                int w = X.conj(x, v);
                if (!vals.count(w)) {
                    vals.insert(w);
                    used.insert(w);
                    stack.push_back(w);
                }
            }
        }
        o.values.assign(vals.begin(), vals.end());
        for (int v : o.values) {
            auto it = fibers.find(v);
            if (it == fibers.end())
                throw InternalConsistencyError("conjugate of a value is not a value");
            o.classes.push_back(it->second);
        }
        o.leaf = fibers[s];
        std::vector<int> cent;
        for (int x = 0; x < n; ++x)
            if (X.conj(x, s) == s) cent.push_back(x);
        o.Xi = subgroup_from_elements(sd.mp.X, cent);
        o.transversal.resize(o.values.size());
        for (size_t c = 0; c < o.values.size(); ++c) {
            int found = -1;
            for (int x = 0; x < n && found < 0; ++x)
                if (X.conj(x, s) == o.values[c]) found = x;
            o.transversal[c] = found;
        }
        orbits.push_back(std::move(o));
    }
    // every ||.|| value must be reached from an M base point
    for (auto& [v, f] : fibers)
        if (!used.count(v)) throw InternalConsistencyError("orbit without an M base point");
    return orbits;
}

// The permutation representation of Xi on the leaf of an orbit.
inline std::vector<Mat> leaf_representation(const SchroedingerData& sd, const OrbitDatum& o) {
    long l = (long)o.leaf.size();
    std::vector<int> pos(sd.n(), -1);
    for (long i = 0; i < l; ++i) pos[o.leaf[i]] = (int)i;
    std::vector<Mat> rho(o.Xi.size(), Mat(l, l));
    for (int q = 0; q < o.Xi.size(); ++q) {
        int x = o.Xi.global(q);
        for (long i = 0; i < l; ++i) {
            int img = sd.act[x][o.leaf[i]];
            if (pos[img] < 0) throw InternalConsistencyError("leaf is not Xi-invariant");
            rho[q].a[pos[img]][i] = CycScalar::one();
        }
    }
    return rho;
}

// Induce a subspace of the leaf across the orbit: M = sum over classes of
// x_c |> M0, as vectors on kX. Independence of the transversal choice is
// asserted.
inline std::vector<Vec> induce_module(const SchroedingerData& sd, const OrbitDatum& o,
                                      const std::vector<Vec>& m0_leaf) {
    const FiniteGroup& X = *sd.mp.X;
    int n = sd.n();
    auto lift = [&](int x, const Vec& w) {
        Vec v(n, CycScalar::zero());
        for (size_t i = 0; i < o.leaf.size(); ++i)
            if (!w[i].is_zero()) v[sd.act[x][o.leaf[i]]] = w[i];
        return v;
    };
    // well-definedness: any x moving the base class to class c gives the same span
    for (size_t c = 0; c < o.values.size(); ++c) {
        std::vector<Vec> ref;
        for (const auto& w : m0_leaf) ref.push_back(lift(o.transversal[c], w));
        for (int x = 0; x < n; ++x) {
            if (X.conj(x, o.base_value) != o.values[c]) continue;
            std::vector<Vec> alt;
            for (const auto& w : m0_leaf) alt.push_back(lift(x, w));
            if (!span_equal(ref, alt))
                throw InternalConsistencyError("induced module depends on the transversal");
        }
    }
    std::vector<Vec> out;
    for (size_t c = 0; c < o.values.size(); ++c)
        for (const auto& w : m0_leaf) out.push_back(lift(o.transversal[c], w));
    return out;
}

// Pi(phi_x) = phi_x - [x in M] sum_{u in G} phi_u, the projection onto ker eps.
inline Vec project_ker_eps(const SchroedingerData& sd, const Vec& v) {
    const MatchedPair& mp = sd.mp;
    Vec out = v;
    CycScalar msum = CycScalar::zero();
    for (int s : mp.M.elements) msum += v[s];
    if (!msum.is_zero())
        for (int u : mp.G.elements) out[u] -= msum;
    return out;
}

// A module in kX together with its image under Pi; the image is zero exactly
// for the trivial constituent on the orbit of [e].
struct ProjectedModule {
    std::vector<Vec> unprojected;
    std::vector<Vec> projected;  // row space basis of the Pi image; empty if killed
    bool killed = false;
};

inline ProjectedModule project_module(const SchroedingerData& sd, std::vector<Vec> m) {
    ProjectedModule pm;
    pm.unprojected = std::move(m);
    std::vector<Vec> img;
    for (const auto& v : pm.unprojected) img.push_back(project_ker_eps(sd, v));
    long r = span_rank(img);
    if (r == 0) {
        pm.killed = true;
        return pm;
    }
    if (r != (long)pm.unprojected.size())
        throw InternalConsistencyError("Pi is neither injective nor zero on an irreducible");
    pm.projected = std::move(img);
    return pm;
}

// ---------------------------------------------------------------------------
// The full classification of irreducible quantum tangent spaces.
// ---------------------------------------------------------------------------
struct TangentDescriptor {
    int orbit = 0;
    long char_index = 0;
    long degree = 0;        // dim of the isotropy irreducible M0
    long multiplicity = 0;  // n; moduli P(k^n) when n > 1
    long dim_L = 0;         // |orbit| * degree
    bool killed = false;    // the trivial constituent on the orbit of [e]
    std::vector<CycScalar> character;        // of M0 on the classes of Xi
    std::vector<std::vector<Vec>> M_copies;  // aligned unprojected induced copies
    std::vector<std::vector<Vec>> L_copies;  // their Pi images (coordinate representatives)
    std::vector<Vec> L_generic;              // all-ones moduli representative when n > 1
};

struct Classification {
    SchroedingerData sd;
    std::vector<OrbitDatum> orbits;
    std::vector<RepDecomposition> leaf_decompositions;
    std::vector<TangentDescriptor> entries;  // including the killed trivial

    long descriptor_count() const {
        long k = 0;
        for (const auto& e : entries)
            if (!e.killed) ++k;
        return k;
    }
};

inline Classification classify_tangent_spaces(const MatchedPair& mp) {
    Classification cl;
    cl.sd = build_schroedinger_action(mp);
    cl.orbits = compute_orbits(cl.sd);
    long accounted = 0;
    for (size_t oi = 0; oi < cl.orbits.size(); ++oi) {
        const auto& o = cl.orbits[oi];
        auto Xi_group = o.Xi.as_group();
        auto rho = leaf_representation(cl.sd, o);
        auto ct = character_table(Xi_group);
        auto dec = decompose_rep(Xi_group, rho, ct);
        for (const auto& con : dec.constituents) {
            TangentDescriptor td;
            td.orbit = (int)oi;
            td.char_index = con.char_index;
            td.degree = con.degree;
            td.multiplicity = con.multiplicity;
            td.dim_L = (long)o.values.size() * con.degree;
            td.character = ct.chi[con.char_index];
            bool saw_killed = false;
            for (const auto& copy : con.copies) {
                auto pm = project_module(cl.sd, induce_module(cl.sd, o, copy));
                if (pm.killed) {
                    saw_killed = true;
                    td.M_copies.push_back(pm.unprojected);
                    continue;
                }
                td.M_copies.push_back(pm.unprojected);
                td.L_copies.push_back(pm.projected);
            }
            if (saw_killed) {
                if (con.char_index != ct.trivial_index() || o.base_value != mp.X->identity ||
                    con.multiplicity != 1)
                    throw InternalConsistencyError("Pi killed a non-trivial constituent");
                td.killed = true;
                td.dim_L = 0;
            } else if (con.multiplicity > 1) {
                std::vector<CycScalar> ones(con.multiplicity, CycScalar::one());
                auto pm = project_module(cl.sd, induce_module(cl.sd, o, moduli_submodule(con, ones)));
                if (pm.killed) throw InternalConsistencyError("generic moduli representative killed");
                td.L_generic = pm.projected;
            }
            accounted += td.killed ? 1 : td.multiplicity * td.dim_L;
            cl.entries.push_back(std::move(td));
        }
        cl.leaf_decompositions.push_back(std::move(dec));
    }
    if (accounted != mp.X->order)
        throw InternalConsistencyError("dimension accounting does not reach |X|");
    return cl;
}

// ---------------------------------------------------------------------------
// Braided vector fields: partial_m(d_t x v) = sum_{ab=t} m[a, b|>v] d_b x v
// - eps_H(m) d_t x v, for m in kX coordinates (phi labels).
// ---------------------------------------------------------------------------
inline Mat partial_operator(const SchroedingerData& sd, const Vec& m_kx) {
    const MatchedPair& mp = sd.mp;
    int nM = mp.nM(), nG = mp.nG();
    BicrossBasis B{nM, nG};
    // m in H coordinates
    Vec mh(B.dim(), CycScalar::zero());
    for (int x = 0; x < sd.n(); ++x) mh[sd.phi_to_h[x]] = m_kx[x];
    CycScalar eps = CycScalar::zero();
    for (int s = 0; s < nM; ++s) eps += mh[B.index(s, 0)];
    Mat out(B.dim(), B.dim());
    for (int t = 0; t < nM; ++t)
        for (int v = 0; v < nG; ++v) {
            long col = B.index(t, v);
            for (int a = 0; a < nM; ++a) {
                int b = mp.m_mul(mp.m_inv(a), t);
                const CycScalar& c = mh[B.index(a, mp.left(b, v))];
                if (!c.is_zero()) out.a[B.index(b, v)][col] += c;
            }
            out.a[col][col] -= eps;
        }
    return out;
}

// ---------------------------------------------------------------------------
// First order differential calculus Omega^1 = V (x) A for V = L^*.
// ---------------------------------------------------------------------------
struct Omega1 {
    MatchedPair mp;
    HopfPtr A;              // k(M) |>.< kG, the coordinate algebra
    HopfPtr H;              // kM |>.< k(G)
    std::vector<Vec> L;     // basis of L in H coordinates (inside ker eps)
    std::vector<Mat> right_act;  // per A-basis a: matrix of <| a on L
    std::vector<Mat> left_act;   // per H-basis h: matrix of h |> on L
    long dimL() const { return (long)L.size(); }
    long dimA() const { return A->dim; }
};

inline Omega1 build_omega1(const SchroedingerData& sd, const std::vector<Vec>& L_kx) {
    Omega1 o;
    o.mp = sd.mp;
    o.A = build_H_dual(sd.mp);
    o.H = build_H(sd.mp);
    long d = o.H->dim;
    for (const auto& v : L_kx) {
        Vec h(d, CycScalar::zero());
        for (int x = 0; x < sd.n(); ++x)
            if (!v[x].is_zero()) h[sd.phi_to_h[x]] += v[x];
        // inside ker eps
        CycScalar eps = CycScalar::zero();
        for (long i = 0; i < d; ++i) eps += h[i] * o.H->counit[i];
        if (!eps.is_zero()) throw InternalConsistencyError("L basis vector not in ker eps");
        o.L.push_back(std::move(h));
    }
    auto as_svec = [&](const Vec& v) {
        SVec s;
        for (long i = 0; i < (long)v.size(); ++i)
            if (!v[i].is_zero()) s.emplace_back(i, v[i]);
        return s;
    };
    auto as_vec = [&](const SVec& s) {
        Vec v(d, CycScalar::zero());
        for (const auto& [i, c] : s) v[i] = c;
        return v;
    };
    // right H*-action x <| a = <a, x_(1)> x_(2) - <a, x> 1 (projected coregular)
    o.right_act.resize(o.A->dim);
    for (long a = 0; a < o.A->dim; ++a) {
        Mat m(o.dimL(), o.dimL());
        for (long j = 0; j < o.dimL(); ++j) {
            SVec img;
            SVec x = as_svec(o.L[j]);
            for (const auto& [i, c] : x) {
                for (const auto& t : o.H->comult[i])
                    if (t.i == a) img.emplace_back(t.j, c * t.c);
                if (i == a)
                    for (const auto& [k, ck] : o.H->unit) img.emplace_back(k, -c * ck);
            }
            sv_normalize(img);
            auto coords = express_in_span(o.L, as_vec(img));
            if (!coords) throw InternalConsistencyError("L is not invariant under the H* action");
            for (long i = 0; i < o.dimL(); ++i) m.a[i][j] = (*coords)[i];
        }
        o.right_act[a] = std::move(m);
    }
    // left H-action h |> x = h_(1) x S(h_(2))
    o.left_act.resize(d);
    for (long h = 0; h < d; ++h) {
        Mat m(o.dimL(), o.dimL());
        for (long j = 0; j < o.dimL(); ++j) {
            SVec img;
            SVec x = as_svec(o.L[j]);
            for (const auto& t : o.H->comult[h]) {
                SVec s2 = o.H->antipode[t.j];
                for (const auto& [xi, xc] : x)
                    for (const auto& [p, cp] : o.H->mult[t.i][xi])
                        for (const auto& [q, cq] : s2)
                            for (const auto& [r, cr] : o.H->mult[p][q])
                                img.emplace_back(r, t.c * xc * cp * cq * cr);
            }
            sv_normalize(img);
            auto coords = express_in_span(o.L, as_vec(img));
            if (!coords) throw InternalConsistencyError("L is not invariant under the H action");
            for (long i = 0; i < o.dimL(); ++i) m.a[i][j] = (*coords)[i];
        }
        o.left_act[h] = std::move(m);
    }
    return o;
}

// d a = sum pi(a_(1)) (x) a_(2) as a (dimL x dimA) coefficient matrix of
// V (x) A; pi(e^i) has V-coordinates (L_k[i])_k.
inline Mat omega1_d(const Omega1& o, long a) {
    Mat D(o.dimL(), o.dimA());
    for (const auto& t : o.A->comult[a])
        for (long k = 0; k < o.dimL(); ++k)
            if (!o.L[k][t.i].is_zero()) D.a[k][t.j] += t.c * o.L[k][t.i];
    return D;
}

// right module: (v (x) c) b = v (x) cb
inline Mat omega1_right(const Omega1& o, const Mat& w, long b) {
    Mat r(o.dimL(), o.dimA());
    for (long k = 0; k < o.dimL(); ++k)
        for (long j = 0; j < o.dimA(); ++j) {
            if (w.a[k][j].is_zero()) continue;
            for (const auto& [m, c] : o.A->mult[j][b]) r.a[k][m] += w.a[k][j] * c;
        }
    return r;
}

// left module: a (v (x) c) = sum (a_(1) |> v) (x) a_(2) c, with the V action
// a |> v_k = sum_m (right_act[a])_{k m} v_m.
inline Mat omega1_left(const Omega1& o, long a, const Mat& w) {
    Mat r(o.dimL(), o.dimA());
    for (const auto& t : o.A->comult[a]) {
        const Mat& R = o.right_act[t.i];
        for (long k = 0; k < o.dimL(); ++k)
            for (long j = 0; j < o.dimA(); ++j) {
                if (w.a[k][j].is_zero()) continue;
                for (long m = 0; m < o.dimL(); ++m) {
                    if (R.a[k][m].is_zero()) continue;
                    for (const auto& [q, c] : o.A->mult[t.j][j])
                        r.a[m][q] += t.c * R.a[k][m] * w.a[k][j] * c;
                }
            }
    }
    return r;
}

// Leibniz rule d(ab) = (da)b + a(db) on all basis pairs.
inline Report check_leibniz(const Omega1& o) {
    Report rep;
    bool ok = true;
    std::string w;
    for (long a = 0; a < o.dimA() && ok; ++a)
        for (long b = 0; b < o.dimA() && ok; ++b) {
            Mat lhs(o.dimL(), o.dimA());
            for (const auto& [m, c] : o.A->mult[a][b]) lhs = mat_add(lhs, mat_scale(c, omega1_d(o, m)));
            Mat rhs = mat_add(omega1_right(o, omega1_d(o, a), b), omega1_left(o, a, omega1_d(o, b)));
            if (!(lhs == rhs)) {
                ok = false;
                w = "fails at (" + o.A->label(a) + ", " + o.A->label(b) + ")";
            }
        }
    ok ? rep.add("Leibniz rule") : rep.fail("Leibniz rule", w);
    return rep;
}

// Bicovariance: d intertwines the right and left regular coactions.
inline Report check_bicovariance(const Omega1& o) {
    Report rep;
    {
        // right: (d x id) Delta a = delta_R(d a), triples (k, j1, j2)
        bool ok = true;
        std::string w;
        for (long a = 0; a < o.dimA() && ok; ++a) {
            SVec3 lhs, rhs;
            for (const auto& t : o.A->comult[a]) {
                Mat D = omega1_d(o, t.i);
                for (long k = 0; k < o.dimL(); ++k)
                    for (long j = 0; j < o.dimA(); ++j)
                        if (!D.a[k][j].is_zero()) lhs.push_back({k, j, t.j, t.c * D.a[k][j]});
            }
            Mat D = omega1_d(o, a);
            for (long k = 0; k < o.dimL(); ++k)
                for (long j = 0; j < o.dimA(); ++j) {
                    if (D.a[k][j].is_zero()) continue;
                    for (const auto& t : o.A->comult[j])
                        rhs.push_back({k, t.i, t.j, D.a[k][j] * t.c});
                }
            if (!sv3_equal(lhs, rhs)) {
                ok = false;
                w = "right covariance fails at " + o.A->label(a);
            }
        }
        ok ? rep.add("right covariance of d") : rep.fail("right covariance of d", w);
    }
    {
        // left: (id x d) Delta a = delta_L(d a), triples (h, k, j) in A x V x A
        // with the V coaction <h, c_{km}> = (left_act[h])_{km}.
        bool ok = true;
        std::string w;
        for (long a = 0; a < o.dimA() && ok; ++a) {
            SVec3 lhs, rhs;
            for (const auto& t : o.A->comult[a]) {
                Mat D = omega1_d(o, t.j);
                for (long k = 0; k < o.dimL(); ++k)
                    for (long j = 0; j < o.dimA(); ++j)
                        if (!D.a[k][j].is_zero()) lhs.push_back({t.i, k, j, t.c * D.a[k][j]});
            }
            // delta_L(v_k (x) e^j) = c_{km} (e^j)_(1) (x) v_m (x) (e^j)_(2)
            // with c_{km} = sum_h (left_act[h])_{km} e^h
            Mat D = omega1_d(o, a);
            for (long k = 0; k < o.dimL(); ++k)
                for (long j = 0; j < o.dimA(); ++j) {
                    if (D.a[k][j].is_zero()) continue;
                    for (long h = 0; h < (long)o.left_act.size(); ++h)
                        for (long m = 0; m < o.dimL(); ++m) {
                            const CycScalar& c = o.left_act[h].a[k][m];
                            if (c.is_zero()) continue;
                            for (const auto& t : o.A->comult[j])
                                for (const auto& [q, cq] : o.A->mult[h][t.i])
                                    rhs.push_back({q, m, t.j, D.a[k][j] * c * t.c * cq});
                        }
                }
            if (!sv3_equal(lhs, rhs)) {
                ok = false;
                w = "left covariance fails at " + o.A->label(a);
            }
        }
        ok ? rep.add("left covariance of d") : rep.fail("left covariance of d", w);
    }
    return rep;
}

}  // namespace bicross
