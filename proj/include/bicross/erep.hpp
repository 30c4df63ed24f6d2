#pragma once

#include "theta.hpp"

namespace bicross {

// The E representation of the quantum double: basis eta_{s,u} for s in M,
// u in G, with G-grading u, M-grading s, and the double acting by
//   (d_s x u x t x d_v) |> eta_{r,w}
//     = [v=w] [t^-1 s (t<|v) = r] eta_{s<|u, (s|>u)^-1 (t|>w) u}.
struct ERep {
    MatchedPair mp;
    BicrossBasis B;  // index (s, u) -> s*nG + u

    explicit ERep(MatchedPair m) : mp(std::move(m)), B{mp.nM(), mp.nG()} {}

    long dim() const { return B.dim(); }
    int grade_g(long i) const { return B.split(i).second; }
    int grade_m(long i) const { return B.split(i).first; }

    // t |> eta_{s,u} = eta_{t s (t<|u)^-1, t|>u}
    long act_m(int t, long i) const {
        auto [s, u] = B.split(i);
        return B.index(mp.m_mul(mp.m_mul(t, s), mp.m_inv(mp.right(t, u))), mp.left(t, u));
    }
    // eta_{s,u} <| v = eta_{s<|v, (s|>v)^-1 u v}
    long act_g(long i, int v) const {
        auto [s, u] = B.split(i);
        return B.index(mp.right(s, v), mp.g_mul(mp.g_mul(mp.g_inv(mp.left(s, v)), u), v));
    }

    // full double action on a basis vector: zero or one basis vector
    SVec act_double(long dbl, long i) const {
        DoubleBasis DB(mp);
        auto k = DB.split(dbl);
        auto [r, w] = B.split(i);
        if (k.v != w) return {};
        if (mp.m_mul(mp.m_mul(mp.m_inv(k.t), k.s), mp.right(k.t, k.v)) != r) return {};
        int s1 = mp.right(k.s, k.u);
        int u1 = mp.g_mul(mp.g_mul(mp.g_inv(mp.left(k.s, k.u)), mp.left(k.t, w)), k.u);
        return sv_unit(B.index(s1, u1));
    }

    // Delta_E(eta_{s,u}) = sum_{ab=s, wz=u} eta_{a,w} (x) eta_{b,z}
    SVec2 comult(long i) const {
        auto [s, u] = B.split(i);
        SVec2 cp;
        for (int a = 0; a < mp.nM(); ++a) {
            int b = mp.m_mul(mp.m_inv(a), s);
            for (int w = 0; w < mp.nG(); ++w) {
                int z = mp.g_mul(mp.g_inv(w), u);
                cp.push_back({B.index(a, w), B.index(b, z), CycScalar::one()});
            }
        }
        sv2_normalize(cp);
        return cp;
    }
    CycScalar counit(long i) const {
        auto [s, u] = B.split(i);
        return (s == 0 && u == 0) ? CycScalar::one() : CycScalar::zero();
    }

    std::string label(long i) const {
        auto [s, u] = B.split(i);
        return "eta[" + mp.X->labels[mp.M.global(s)] + "," + mp.X->labels[mp.G.global(u)] + "]";
    }
};

// Orthonormal-basis inner product, conjugate-linear in the first slot.
inline CycScalar e_inner(const SVec& a, const SVec& b) {
    CycScalar acc = CycScalar::zero();
    for (const auto& [i, c] : a) acc += c.conj() * sv_coeff(b, i);
    return acc;
}

inline CycScalar e_inner2(const SVec2& a, const SVec2& b) {
    CycScalar acc = CycScalar::zero();
    for (const auto& t : a)
        for (const auto& s : b)
            if (t.i == s.i && t.j == s.j) acc += t.c.conj() * s.c;
    return acc;
}

// Module law, unit action, and consistency of the closed form with the
// composite of the two group actions.
inline Report verify_e_module(const ERep& E) {
    Report rep;
    DoubleBasis DB(E.mp);
    long d = DB.dim(), de = E.dim();
    {
        bool ok = true;
        std::string w;
        SVec one = DB.unit();
        for (long i = 0; i < de && ok; ++i) {
            SVec acc;
            for (const auto& [a, c] : one)
                for (const auto& [j, cj] : E.act_double(a, i)) acc.emplace_back(j, c * cj);
            sv_normalize(acc);
            if (!sv_equal(acc, sv_unit(i))) {
                ok = false;
                w = "unit does not act as identity at " + E.label(i);
            }
        }
        ok ? rep.add("unit acts as identity") : rep.fail("unit acts as identity", w);
    }
    {
        bool ok = true;
        std::string w;
        for (long a = 0; a < d && ok; ++a)
            for (long b = 0; b < d && ok; ++b) {
                for (long i = 0; i < de && ok; ++i) {
                    SVec rhs;
                    for (const auto& [j, c] : E.act_double(b, i))
                        for (const auto& [k, ck] : E.act_double(a, j)) rhs.emplace_back(k, c * ck);
                    sv_normalize(rhs);
                    SVec lhs;
                    for (const auto& [m, c] : DB.product(a, b))
                        for (const auto& [k, ck] : E.act_double(m, i)) lhs.emplace_back(k, c * ck);
                    sv_normalize(lhs);
                    if (!sv_equal(lhs, rhs)) {
                        ok = false;
                        w = "module law fails at (" + DB.label(a) + ", " + DB.label(b) + ", " +
                            E.label(i) + ")";
                    }
                }
            }
        ok ? rep.add("module law") : rep.fail("module law", w);
    }
    {
        // closed form = composite of H* and H parts through
        // (a x h) |> w = (h |> w) <| a
        bool ok = true;
        std::string w;
        const MatchedPair& mp = E.mp;
        for (int s = 0; s < mp.nM() && ok; ++s)
            for (int u = 0; u < mp.nG() && ok; ++u)
                for (int t = 0; t < mp.nM() && ok; ++t)
                    for (int v = 0; v < mp.nG() && ok; ++v)
                        for (long i = 0; i < de && ok; ++i) {
                            auto [r, ww] = E.B.split(i);
                            SVec expect;
                            if (v == ww) {
                                long j = E.act_m(t, i);  // (t x d_v) |> eta
                                auto [rj, wj] = E.B.split(j);
                                if (rj == s) expect = sv_unit(E.act_g(j, u));
                            }
                            SVec got = E.act_double(DoubleBasis(mp).index(s, u, t, v), i);
                            if (!sv_equal(got, expect)) {
                                ok = false;
                                w = "composite disagrees at " + E.label(i);
                            }
                        }
        ok ? rep.add("closed form matches action composite")
           : rep.fail("closed form matches action composite", w);
    }
    return rep;
}

// (alpha |> eta, zeta) = (eta, alpha* |> zeta) for all basis triples.
inline Report check_star_rep(const ERep& E) {
    Report rep;
    DoubleBasis DB(E.mp);
    bool ok = true;
    std::string w;
    for (long a = 0; a < DB.dim() && ok; ++a) {
        long astar = DB.star(a);
        for (long i = 0; i < E.dim() && ok; ++i) {
            SVec ai = E.act_double(a, i);
            for (long j = 0; j < E.dim() && ok; ++j) {
                CycScalar lhs = e_inner(ai, sv_unit(j));
                CycScalar rhs = e_inner(sv_unit(i), E.act_double(astar, j));
                if (!(lhs == rhs)) {
                    ok = false;
                    w = "fails at alpha=" + DB.label(a) + ", eta=" + E.label(i) + ", zeta=" +
                        E.label(j);
                }
            }
        }
    }
    ok ? rep.add("star representation") : rep.fail("star representation", w);
    return rep;
}

// Delta_E(alpha |> eta) = Delta(alpha) |> Delta_E(eta) and the counit law.
inline Report check_module_coalgebra(const ERep& E) {
    Report rep;
    DoubleBasis DB(E.mp);
    bool ok = true;
    std::string w;
    for (long a = 0; a < DB.dim() && ok; ++a) {
        SVec2 da = DB.coproduct(a);
        for (long i = 0; i < E.dim() && ok; ++i) {
            SVec2 lhs;
            for (const auto& [j, c] : E.act_double(a, i))
                for (const auto& t : E.comult(j)) lhs.push_back({t.i, t.j, c * t.c});
            sv2_normalize(lhs);
            SVec2 rhs;
            for (const auto& al : da)
                for (const auto& et : E.comult(i)) {
                    for (const auto& [p, cp] : E.act_double(al.i, et.i))
                        for (const auto& [q, cq] : E.act_double(al.j, et.j))
                            rhs.push_back({p, q, al.c * et.c * cp * cq});
                }
            sv2_normalize(rhs);
            if (!sv2_equal(lhs, rhs)) {
                ok = false;
                w = "coproduct law fails at alpha=" + DB.label(a) + ", eta=" + E.label(i);
            }
        }
    }
    ok ? rep.add("module coalgebra: coproduct") : rep.fail("module coalgebra: coproduct", w);

    ok = true;
    for (long a = 0; a < DB.dim() && ok; ++a)
        for (long i = 0; i < E.dim() && ok; ++i) {
            CycScalar lhs = CycScalar::zero();
            for (const auto& [j, c] : E.act_double(a, i)) lhs += c * E.counit(j);
            if (!(lhs == DB.counit(a) * E.counit(i))) {
                ok = false;
                w = "counit law fails at alpha=" + DB.label(a) + ", eta=" + E.label(i);
            }
        }
    ok ? rep.add("module coalgebra: counit") : rep.fail("module coalgebra: counit", w);
    return rep;
}

// theta_hat(eta_{s,u}) = eta_{theta(u), theta(s)}, an antilinear map with
// theta_hat(alpha |> eta) = (*Theta alpha) |> theta_hat(eta).
inline long theta_hat_index(const ERep& E, const FactorReversingAut& th, long i) {
    auto [s, u] = E.B.split(i);
    return E.B.index(E.mp.M.local(th(E.mp.G.global(u))), E.mp.G.local(th(E.mp.M.global(s))));
}

inline Report check_theta_hat(const ERep& E, const FactorReversingAut& th) {
    Report rep;
    DoubleBasis DB(E.mp);
    bool ok = true;
    std::string w;
    if (th.involutive(*E.mp.X)) {
        for (long i = 0; i < E.dim() && ok; ++i)
            if (theta_hat_index(E, th, theta_hat_index(E, th, i)) != i) {
                ok = false;
                w = "theta_hat not involutive at " + E.label(i);
            }
        ok ? rep.add("theta_hat involutive") : rep.fail("theta_hat involutive", w);
    }
    ok = true;
    for (long a = 0; a < DB.dim() && ok; ++a) {
        long ta = star_theta_double_index(DB, th, a);
        for (long i = 0; i < E.dim() && ok; ++i) {
            SVec lhs;
            for (const auto& [j, c] : E.act_double(a, i))
                lhs.emplace_back(theta_hat_index(E, th, j), c.conj());
            sv_normalize(lhs);
            SVec rhs = E.act_double(ta, theta_hat_index(E, th, i));
            if (!sv_equal(lhs, rhs)) {
                ok = false;
                w = "intertwining fails at alpha=" + DB.label(a) + ", eta=" + E.label(i);
            }
        }
    }
    ok ? rep.add("theta_hat intertwines *Theta") : rep.fail("theta_hat intertwines *Theta", w);
    return rep;
}

// (Delta_E eta, Delta_E zeta) = |X| (eta, zeta) with the tensor inner product.
inline Report check_inner_coproduct(const ERep& E) {
    Report rep;
    bool ok = true;
    std::string w;
    CycScalar orderX((long)E.mp.X->order);
    for (long i = 0; i < E.dim() && ok; ++i)
        for (long j = 0; j < E.dim() && ok; ++j) {
            CycScalar lhs = e_inner2(E.comult(i), E.comult(j));
            CycScalar rhs = orderX * e_inner(sv_unit(i), sv_unit(j));
            if (!(lhs == rhs)) {
                ok = false;
                w = "fails at (" + E.label(i) + ", " + E.label(j) + ")";
            }
        }
    ok ? rep.add("coproduct inner product scaling") : rep.fail("coproduct inner product scaling", w);
    return rep;
}

}  // namespace bicross
