#pragma once

#include <functional>
#include <memory>

#include "linalg.hpp"
#include "report.hpp"
#include "sparse.hpp"

namespace bicross {

// Finite-dimensional Hopf algebra given by structure constants on a fixed
// basis. Structure maps are stored sparsely; for the algebras built here
// almost every entry is a single basis element with coefficient one.
struct FinDimHopf {
    long dim = 0;
    long conductor = 1;  // scalar field used for reports
    std::vector<std::string> labels;
    std::vector<std::vector<SVec>> mult;  // mult[i][j] = e_i e_j
    SVec unit;
    std::vector<SVec2> comult;  // comult[k] = Delta(e_k)
    Vec counit;                 // dense, length dim
    std::vector<SVec> antipode;
    bool has_star = false;
    std::vector<SVec> star;  // antilinear: star of sum conjugates coefficients

    const std::string& label(long i) const { return labels[i]; }
};

using HopfPtr = std::shared_ptr<const FinDimHopf>;

inline SVec hopf_mul(const FinDimHopf& H, const SVec& a, const SVec& b) {
    SVec r;
    for (const auto& [i, ca] : a)
        for (const auto& [j, cb] : b) {
            const SVec& m = H.mult[i][j];
            for (const auto& [k, cm] : m) r.emplace_back(k, ca * cb * cm);
        }
    sv_normalize(r);
    return r;
}

inline SVec2 hopf_comult(const FinDimHopf& H, const SVec& a) {
    SVec2 r;
    for (const auto& [i, c] : a)
        for (const auto& t : H.comult[i]) r.push_back({t.i, t.j, c * t.c});
    sv2_normalize(r);
    return r;
}

inline CycScalar hopf_counit(const FinDimHopf& H, const SVec& a) {
    CycScalar s = CycScalar::zero();
    for (const auto& [i, c] : a) s += c * H.counit[i];
    return s;
}

inline SVec hopf_antipode(const FinDimHopf& H, const SVec& a) {
    SVec r;
    for (const auto& [i, c] : a)
        for (const auto& [j, d] : H.antipode[i]) r.emplace_back(j, c * d);
    sv_normalize(r);
    return r;
}

inline SVec hopf_star(const FinDimHopf& H, const SVec& a) {
    SVec r;
    for (const auto& [i, c] : a)
        for (const auto& [j, d] : H.star[i]) r.emplace_back(j, c.conj() * d);
    sv_normalize(r);
    return r;
}

// Product in H (x) H of sparse two-tensors.
inline SVec2 hopf_mul2(const FinDimHopf& H, const SVec2& A, const SVec2& B) {
    SVec2 r;
    for (const auto& a : A)
        for (const auto& b : B) {
            const SVec& m1 = H.mult[a.i][b.i];
            if (m1.empty()) continue;
            const SVec& m2 = H.mult[a.j][b.j];
            if (m2.empty()) continue;
            CycScalar c = a.c * b.c;
            for (const auto& [p, cp] : m1)
                for (const auto& [q, cq] : m2) r.push_back({p, q, c * cp * cq});
        }
    sv2_normalize(r);
    return r;
}

inline SVec3 hopf_mul3(const FinDimHopf& H, const SVec3& A, const SVec3& B) {
    SVec3 r;
    for (const auto& a : A)
        for (const auto& b : B) {
            const SVec& m1 = H.mult[a.i][b.i];
            if (m1.empty()) continue;
            const SVec& m2 = H.mult[a.j][b.j];
            if (m2.empty()) continue;
            const SVec& m3 = H.mult[a.k][b.k];
            if (m3.empty()) continue;
            CycScalar c = a.c * b.c;
            for (const auto& [p, cp] : m1)
                for (const auto& [q, cq] : m2)
                    for (const auto& [s, cs] : m3) r.push_back({p, q, s, c * cp * cq * cs});
        }
    sv3_normalize(r);
    return r;
}

inline SVec2 unit_tensor_unit(const FinDimHopf& H) {
    SVec2 r;
    for (const auto& [i, ci] : H.unit)
        for (const auto& [j, cj] : H.unit) r.push_back({i, j, ci * cj});
    sv2_normalize(r);
    return r;
}

// Exhaustive Hopf axiom verification; reports the first witness per axiom.
inline Report verify_hopf(const FinDimHopf& H) {
    Report rep;
    long d = H.dim;
    auto basis = [&](long i) { return sv_unit(i); };

    {  // unitality
        bool ok = true;
        std::string w;
        for (long i = 0; i < d && ok; ++i) {
            if (!sv_equal(hopf_mul(H, H.unit, basis(i)), basis(i)) ||
                !sv_equal(hopf_mul(H, basis(i), H.unit), basis(i))) {
                ok = false;
                w = "1*a != a at a=" + H.label(i);
            }
        }
        ok ? rep.add("unitality") : rep.fail("unitality", w);
    }
    {  // associativity
        bool ok = true;
        std::string w;
        for (long i = 0; i < d && ok; ++i)
            for (long j = 0; j < d && ok; ++j) {
                const SVec& ij = H.mult[i][j];
                for (long k = 0; k < d && ok; ++k) {
                    SVec lhs;
                    for (const auto& [p, c] : ij)
                        for (const auto& [q, cq] : H.mult[p][k]) lhs.emplace_back(q, c * cq);
                    sv_normalize(lhs);
                    SVec rhs = hopf_mul(H, basis(i), hopf_mul(H, basis(j), basis(k)));
                    if (!sv_equal(lhs, rhs)) {
                        ok = false;
                        w = "(ab)c != a(bc) at (" + H.label(i) + "," + H.label(j) + "," +
                            H.label(k) + ")";
                    }
                }
            }
        ok ? rep.add("associativity") : rep.fail("associativity", w);
    }
    {  // counitality
        bool ok = true;
        std::string w;
        for (long i = 0; i < d && ok; ++i) {
            SVec left, right;
            for (const auto& t : H.comult[i]) {
                left.emplace_back(t.j, t.c * H.counit[t.i]);
                right.emplace_back(t.i, t.c * H.counit[t.j]);
            }
            sv_normalize(left);
            sv_normalize(right);
            if (!sv_equal(left, basis(i)) || !sv_equal(right, basis(i))) {
                ok = false;
                w = "counit fails at " + H.label(i);
            }
        }
        ok ? rep.add("counitality") : rep.fail("counitality", w);
    }
    {  // coassociativity
        bool ok = true;
        std::string w;
        for (long i = 0; i < d && ok; ++i) {
            SVec3 lhs, rhs;
            for (const auto& t : H.comult[i]) {
                for (const auto& s : H.comult[t.i]) lhs.push_back({s.i, s.j, t.j, t.c * s.c});
                for (const auto& s : H.comult[t.j]) rhs.push_back({t.i, s.i, s.j, t.c * s.c});
            }
            if (!sv3_equal(lhs, rhs)) {
                ok = false;
                w = "coassociativity fails at " + H.label(i);
            }
        }
        ok ? rep.add("coassociativity") : rep.fail("coassociativity", w);
    }
    {  // bialgebra compatibility
        bool ok = true;
        std::string w;
        if (!sv2_equal(hopf_comult(H, H.unit), unit_tensor_unit(H))) {
            ok = false;
            w = "Delta(1) != 1x1";
        }
        if (ok && !(hopf_counit(H, H.unit) == CycScalar::one())) {
            ok = false;
            w = "eps(1) != 1";
        }
        for (long i = 0; i < d && ok; ++i)
            for (long j = 0; j < d && ok; ++j) {
                SVec prod = H.mult[i][j];
                if (!sv2_equal(hopf_comult(H, prod),
                               hopf_mul2(H, H.comult[i], H.comult[j]))) {
                    ok = false;
                    w = "Delta(ab) != Delta(a)Delta(b) at (" + H.label(i) + "," + H.label(j) + ")";
                }
                if (ok) {
                    CycScalar lhs = hopf_counit(H, prod);
                    if (lhs != H.counit[i] * H.counit[j]) {
                        ok = false;
                        w = "eps(ab) != eps(a)eps(b) at (" + H.label(i) + "," + H.label(j) + ")";
                    }
                }
            }
        ok ? rep.add("bialgebra compatibility") : rep.fail("bialgebra compatibility", w);
    }
    {  // antipode axiom
        bool ok = true;
        std::string w;
        for (long i = 0; i < d && ok; ++i) {
            SVec lhs, rhs;
            for (const auto& t : H.comult[i]) {
                for (const auto& [p, c] : H.antipode[t.i])
                    for (const auto& [q, cq] : H.mult[p][t.j]) lhs.emplace_back(q, t.c * c * cq);
                for (const auto& [p, c] : H.antipode[t.j])
                    for (const auto& [q, cq] : H.mult[t.i][p]) rhs.emplace_back(q, t.c * c * cq);
            }
            sv_normalize(lhs);
            sv_normalize(rhs);
            SVec target = sv_scale(H.counit[i], H.unit);
            if (!sv_equal(lhs, target) || !sv_equal(rhs, target)) {
                ok = false;
                w = "antipode axiom fails at " + H.label(i);
            }
        }
        ok ? rep.add("antipode axiom") : rep.fail("antipode axiom", w);
    }
    if (H.has_star) {
        bool ok = true;
        std::string w;
        for (long i = 0; i < d && ok; ++i)
            if (!sv_equal(hopf_star(H, H.star[i]), basis(i))) {
                ok = false;
                w = "star not involutive at " + H.label(i);
            }
        ok ? rep.add("star involution") : rep.fail("star involution", w);

        ok = true;
        for (long i = 0; i < d && ok; ++i)
            for (long j = 0; j < d && ok; ++j) {
                SVec lhs = hopf_star(H, H.mult[i][j]);
                SVec rhs = hopf_mul(H, H.star[j], H.star[i]);
                if (!sv_equal(lhs, rhs)) {
                    ok = false;
                    w = "(ab)* != b* a* at (" + H.label(i) + "," + H.label(j) + ")";
                }
            }
        ok ? rep.add("star antimultiplicative") : rep.fail("star antimultiplicative", w);

        ok = true;
        for (long i = 0; i < d && ok; ++i) {
            SVec2 lhs = hopf_comult(H, H.star[i]);
            SVec2 rhs;
            for (const auto& t : H.comult[i])
                for (const auto& [p, cp] : H.star[t.i])
                    for (const auto& [q, cq] : H.star[t.j])
                        rhs.push_back({p, q, t.c.conj() * cp * cq});
            if (!sv2_equal(lhs, rhs)) {
                ok = false;
                w = "Delta(a*) != (* x *)Delta(a) at " + H.label(i);
            }
        }
        ok ? rep.add("star comultiplicative") : rep.fail("star comultiplicative", w);
    }
    return rep;
}

// Dual Hopf algebra on the dual basis.
inline FinDimHopf dual_hopf(const FinDimHopf& H) {
    FinDimHopf D;
    D.dim = H.dim;
    D.conductor = H.conductor;
    D.labels.resize(H.dim);
    for (long i = 0; i < H.dim; ++i) D.labels[i] = H.labels[i] + "^";
    D.mult.assign(H.dim, std::vector<SVec>(H.dim));
    for (long k = 0; k < H.dim; ++k)
        for (const auto& t : H.comult[k]) D.mult[t.i][t.j].emplace_back(k, t.c);
    for (auto& row : D.mult)
        for (auto& v : row) sv_normalize(v);
    D.unit.clear();
    for (long i = 0; i < H.dim; ++i)
        if (!(H.counit[i].is_zero())) D.unit.emplace_back(i, H.counit[i]);
    D.comult.assign(H.dim, {});
    for (long i = 0; i < H.dim; ++i)
        for (long j = 0; j < H.dim; ++j)
            for (const auto& [k, c] : H.mult[i][j]) D.comult[k].push_back({i, j, c});
    for (auto& v : D.comult) sv2_normalize(v);
    D.counit.assign(H.dim, CycScalar::zero());
    for (const auto& [i, c] : H.unit) D.counit[i] = c;
    D.antipode.assign(H.dim, {});
    for (long j = 0; j < H.dim; ++j)
        for (const auto& [i, c] : H.antipode[j]) D.antipode[i].emplace_back(j, c);
    for (auto& v : D.antipode) sv_normalize(v);
    if (H.has_star) {
        // <f*, h> = conj(<f, (S h)*>)
        D.has_star = true;
        D.star.assign(H.dim, {});
        std::vector<SVec> T(H.dim);  // T(e_j) = star(S(e_j)) as antilinear composite
        for (long j = 0; j < H.dim; ++j) {
            SVec acc;
            for (const auto& [k, c] : H.antipode[j])
                for (const auto& [l, cl] : H.star[k]) acc.emplace_back(l, c.conj() * cl);
            sv_normalize(acc);
            T[j] = std::move(acc);
        }
        for (long i = 0; i < H.dim; ++i) {
            SVec out;
            for (long j = 0; j < H.dim; ++j) {
                CycScalar t = sv_coeff(T[j], i);
                if (!t.is_zero()) out.emplace_back(j, t.conj());
            }
            sv_normalize(out);
            D.star[i] = std::move(out);
        }
    }
    return D;
}

inline bool hopf_equal(const FinDimHopf& A, const FinDimHopf& B) {
    if (A.dim != B.dim) return false;
    for (long i = 0; i < A.dim; ++i)
        for (long j = 0; j < A.dim; ++j)
            if (!sv_equal(A.mult[i][j], B.mult[i][j])) return false;
    if (!sv_equal(A.unit, B.unit)) return false;
    for (long i = 0; i < A.dim; ++i) {
        if (!sv2_equal(A.comult[i], B.comult[i])) return false;
        if (!(A.counit[i] == B.counit[i])) return false;
        if (!sv_equal(A.antipode[i], B.antipode[i])) return false;
    }
    if (A.has_star != B.has_star) return false;
    if (A.has_star)
        for (long i = 0; i < A.dim; ++i)
            if (!sv_equal(A.star[i], B.star[i])) return false;
    return true;
}

// Linear (or antilinear) map between based Hopf algebras, stored columnwise.
struct HopfMap {
    HopfPtr src, dst;
    std::vector<SVec> cols;  // image of each source basis element
    bool antilinear = false;
};

inline SVec map_apply(const HopfMap& f, const SVec& a) {
    SVec r;
    for (const auto& [i, c] : a) {
        CycScalar cc = f.antilinear ? c.conj() : c;
        for (const auto& [j, d] : f.cols[i]) r.emplace_back(j, cc * d);
    }
    sv_normalize(r);
    return r;
}

inline HopfMap compose(const HopfMap& g, const HopfMap& f) {
    HopfMap h;
    h.src = f.src;
    h.dst = g.dst;
    h.antilinear = f.antilinear != g.antilinear;
    h.cols.resize(f.cols.size());
    for (size_t i = 0; i < f.cols.size(); ++i) h.cols[i] = map_apply(g, f.cols[i]);
    return h;
}

inline Mat map_matrix(const HopfMap& f) {
    Mat m(f.dst->dim, f.src->dim);
    for (long j = 0; j < (long)f.cols.size(); ++j)
        for (const auto& [i, c] : f.cols[j]) m.a[i][j] = c;
    return m;
}

inline bool map_bijective(const HopfMap& f) {
    if (f.src->dim != f.dst->dim) return false;
    return rank(map_matrix(f)) == f.src->dim;
}

inline std::optional<HopfMap> map_invert(const HopfMap& f) {
    auto inv = inverse(map_matrix(f));
    if (!inv) return std::nullopt;
    HopfMap g;
    g.src = f.dst;
    g.dst = f.src;
    g.antilinear = f.antilinear;
    g.cols.resize(f.dst->dim);
    for (long j = 0; j < f.dst->dim; ++j) {
        SVec col;
        for (long i = 0; i < f.src->dim; ++i) {
            CycScalar c = inv->a[i][j];
            if (f.antilinear) c = c.conj();
            if (!c.is_zero()) col.emplace_back(i, c);
        }
        g.cols[j] = std::move(col);
    }
    return g;
}

struct MapFlags {
    bool algebra = false;
    bool antialgebra = false;
    bool coalgebra = false;
    bool unit_counit = false;
    bool antipode = false;
    bool star = false;
    bool bijective = false;
};

// Exhaustive verification of the flagged identities on basis pairs.
inline Report verify_map(const HopfMap& f, const MapFlags& flags) {
    Report rep;
    const FinDimHopf& S = *f.src;
    const FinDimHopf& D = *f.dst;
    long d = S.dim;
    auto basis = [&](long i) { return sv_unit(i); };

    if (flags.algebra || flags.antialgebra) {
        bool ok = true;
        std::string w;
        const char* name = flags.algebra ? "algebra map" : "antialgebra map";
        for (long i = 0; i < d && ok; ++i)
            for (long j = 0; j < d && ok; ++j) {
                SVec lhs = map_apply(f, S.mult[i][j]);
                SVec rhs = flags.algebra
                               ? hopf_mul(D, f.cols[i], f.cols[j])
                               : hopf_mul(D, f.cols[j], f.cols[i]);
                if (!sv_equal(lhs, rhs)) {
                    ok = false;
                    w = "fails at (" + S.label(i) + "," + S.label(j) + ")";
                }
            }
        if (ok && !sv_equal(map_apply(f, S.unit), D.unit)) {
            ok = false;
            w = "unit not preserved";
        }
        ok ? rep.add(name) : rep.fail(name, w);
    }
    if (flags.coalgebra) {
        bool ok = true;
        std::string w;
        for (long i = 0; i < d && ok; ++i) {
            SVec2 lhs;  // (f x f) Delta_S(e_i)
            for (const auto& t : S.comult[i]) {
                CycScalar c = f.antilinear ? t.c.conj() : t.c;
                for (const auto& [p, cp] : f.cols[t.i])
                    for (const auto& [q, cq] : f.cols[t.j]) lhs.push_back({p, q, c * cp * cq});
            }
            SVec2 rhs = hopf_comult(D, f.cols[i]);
            if (!sv2_equal(lhs, rhs)) {
                ok = false;
                w = "coproduct not intertwined at " + S.label(i);
            }
        }
        ok ? rep.add("coalgebra map") : rep.fail("coalgebra map", w);
    }
    if (flags.unit_counit) {
        bool ok = true;
        std::string w;
        for (long i = 0; i < d && ok; ++i) {
            CycScalar lhs = hopf_counit(D, f.cols[i]);
            CycScalar rhs = f.antilinear ? S.counit[i].conj() : S.counit[i];
            if (lhs != rhs) {
                ok = false;
                w = "counit not preserved at " + S.label(i);
            }
        }
        ok ? rep.add("counit preserved") : rep.fail("counit preserved", w);
    }
    if (flags.antipode) {
        bool ok = true;
        std::string w;
        for (long i = 0; i < d && ok; ++i)
            if (!sv_equal(map_apply(f, S.antipode[i]), hopf_antipode(D, f.cols[i]))) {
                ok = false;
                w = "f S != S f at " + S.label(i);
            }
        ok ? rep.add("antipode intertwined") : rep.fail("antipode intertwined", w);
    }
    if (flags.star) {
        bool ok = S.has_star && D.has_star;
        std::string w = ok ? "" : "star structure missing";
        for (long i = 0; i < d && ok; ++i)
            if (!sv_equal(map_apply(f, S.star[i]), hopf_star(D, f.cols[i]))) {
                ok = false;
                w = "f(a*) != f(a)* at " + S.label(i);
            }
        ok ? rep.add("star preserved") : rep.fail("star preserved", w);
    }
    if (flags.bijective) {
        map_bijective(f) ? rep.add("bijective") : rep.fail("bijective", "matrix rank deficient");
    }
    return rep;
}

// Quasitriangular structure R on a Hopf algebra.
struct QuasiStructure {
    HopfPtr H;
    SVec2 R;
};

inline SVec2 r_inverse(const QuasiStructure& Q) {
    // (S x id) R is the standard inverse of R.
    const FinDimHopf& H = *Q.H;
    SVec2 r;
    for (const auto& t : Q.R)
        for (const auto& [p, c] : H.antipode[t.i]) r.push_back({p, t.j, t.c * c});
    sv2_normalize(r);
    return r;
}

inline SVec u_element(const QuasiStructure& Q) {
    // u = sum (S R(2)) R(1); implements the square of the antipode.
    const FinDimHopf& H = *Q.H;
    SVec r;
    for (const auto& t : Q.R) {
        SVec s = hopf_antipode(H, sv_unit(t.j));
        for (const auto& [p, c] : s)
            for (const auto& [q, cq] : H.mult[p][t.i]) r.emplace_back(q, t.c * c * cq);
    }
    sv_normalize(r);
    return r;
}

inline Mat r_coefficient_matrix(const FinDimHopf& H, const SVec2& R) {
    Mat m(H.dim, H.dim);
    for (const auto& t : R) m.a[t.i][t.j] += t.c;
    return m;
}

inline Report verify_quasitriangular(const QuasiStructure& Q) {
    Report rep;
    const FinDimHopf& H = *Q.H;
    SVec2 rin = r_inverse(Q);
    SVec2 one2 = unit_tensor_unit(H);
    sv2_equal(hopf_mul2(H, Q.R, rin), one2) && sv2_equal(hopf_mul2(H, rin, Q.R), one2)
        ? rep.add("R invertible")
        : rep.fail("R invertible", "(S x id)R is not a two-sided inverse");

    {  // (Delta x id) R = R13 R23
        SVec3 lhs;
        for (const auto& t : Q.R)
            for (const auto& d : H.comult[t.i]) lhs.push_back({d.i, d.j, t.j, t.c * d.c});
        SVec3 r13, r23;
        for (const auto& t : Q.R) {
            for (const auto& [i, c] : H.unit) {
                r13.push_back({t.i, i, t.j, t.c * c});
                r23.push_back({i, t.i, t.j, t.c * c});
            }
        }
        sv3_equal(lhs, hopf_mul3(H, r13, r23))
            ? rep.add("hexagon (Delta x id)")
            : rep.fail("hexagon (Delta x id)", "(Delta x id)R != R13 R23");
    }
    {  // (id x Delta) R = R13 R12
        SVec3 lhs;
        for (const auto& t : Q.R)
            for (const auto& d : H.comult[t.j]) lhs.push_back({t.i, d.i, d.j, t.c * d.c});
        SVec3 r13, r12;
        for (const auto& t : Q.R)
            for (const auto& [i, c] : H.unit) {
                r13.push_back({t.i, i, t.j, t.c * c});
                r12.push_back({t.i, t.j, i, t.c * c});
            }
        sv3_equal(lhs, hopf_mul3(H, r13, r12))
            ? rep.add("hexagon (id x Delta)")
            : rep.fail("hexagon (id x Delta)", "(id x Delta)R != R13 R12");
    }
    {  // R Delta(h) = Delta^op(h) R for all basis h
        bool ok = true;
        std::string w;
        for (long k = 0; k < H.dim && ok; ++k) {
            SVec2 lhs = hopf_mul2(H, Q.R, H.comult[k]);
            SVec2 rhs = hopf_mul2(H, sv2_swap(H.comult[k]), Q.R);
            if (!sv2_equal(lhs, rhs)) {
                ok = false;
                w = "fails at h=" + H.label(k);
            }
        }
        ok ? rep.add("coproduct intertwining") : rep.fail("coproduct intertwining", w);
    }
    {  // quantum Yang-Baxter
        SVec3 r12, r13, r23;
        for (const auto& t : Q.R)
            for (const auto& [i, c] : H.unit) {
                r12.push_back({t.i, t.j, i, t.c * c});
                r13.push_back({t.i, i, t.j, t.c * c});
                r23.push_back({i, t.i, t.j, t.c * c});
            }
        SVec3 lhs = hopf_mul3(H, hopf_mul3(H, r12, r13), r23);
        SVec3 rhs = hopf_mul3(H, hopf_mul3(H, r23, r13), r12);
        sv3_equal(lhs, rhs) ? rep.add("quantum Yang-Baxter")
                            : rep.fail("quantum Yang-Baxter", "R12 R13 R23 != R23 R13 R12");
    }
    return rep;
}

// Antireality: (* x *)(R) = R^-1.
inline Report check_antireal(const QuasiStructure& Q) {
    Report rep;
    const FinDimHopf& H = *Q.H;
    if (!H.has_star) {
        rep.fail("antireal", "no star structure");
        return rep;
    }
    SVec2 lhs;
    for (const auto& t : Q.R) {
        CycScalar c = t.c.conj();
        for (const auto& [p, cp] : H.star[t.i])
            for (const auto& [q, cq] : H.star[t.j]) lhs.push_back({p, q, c * cp * cq});
    }
    sv2_equal(lhs, r_inverse(Q)) ? rep.add("antireal quasitriangular")
                                 : rep.fail("antireal quasitriangular", "(* x *)(R) != R^-1");
    return rep;
}

// [u, b] = 0 for every basis element b.
inline Report check_central(const FinDimHopf& H, const SVec& u, const std::string& what) {
    Report rep;
    bool ok = true;
    std::string w;
    for (long i = 0; i < H.dim && ok; ++i) {
        if (!sv_equal(hopf_mul(H, u, sv_unit(i)), hopf_mul(H, sv_unit(i), u))) {
            ok = false;
            w = "does not commute with " + H.label(i);
        }
    }
    ok ? rep.add(what + " central") : rep.fail(what + " central", w);
    return rep;
}

inline bool antipode_involutive(const FinDimHopf& H) {
    for (long i = 0; i < H.dim; ++i)
        if (!sv_equal(hopf_antipode(H, H.antipode[i]), sv_unit(i))) return false;
    return true;
}

}  // namespace bicross

#include "group.hpp"

namespace bicross {

// The group algebra kG: grouplike basis, S = inversion, x* = x^-1.
inline HopfPtr group_algebra(const GroupPtr& g) {
    auto H = std::make_shared<FinDimHopf>();
    H->dim = g->order;
    H->labels = g->labels;
    H->mult.assign(H->dim, std::vector<SVec>(H->dim));
    for (int a = 0; a < g->order; ++a)
        for (int b = 0; b < g->order; ++b) H->mult[a][b] = sv_unit(g->mul[a][b]);
    H->unit = sv_unit(g->identity);
    H->comult.resize(H->dim);
    H->counit.assign(H->dim, CycScalar::one());
    H->antipode.resize(H->dim);
    H->has_star = true;
    H->star.resize(H->dim);
    for (int a = 0; a < g->order; ++a) {
        H->comult[a] = SVec2{{a, a, CycScalar::one()}};
        H->antipode[a] = sv_unit(g->inv[a]);
        H->star[a] = sv_unit(g->inv[a]);
    }
    return H;
}

// The function algebra k(G) on the dual basis.
inline HopfPtr function_algebra(const GroupPtr& g) {
    return std::make_shared<FinDimHopf>(dual_hopf(*group_algebra(g)));
}

}  // namespace bicross
