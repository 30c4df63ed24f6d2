#pragma once

#include <set>

#include "bicross.hpp"
#include "chartab.hpp"

namespace bicross {

// ---------------------------------------------------------------------------
// Factor-reversing automorphisms theta of X: group automorphisms with
// theta(G) = M and theta(M) = G.
// ---------------------------------------------------------------------------
struct FactorReversingAut {
    std::vector<int> images;  // X index -> X index

    int operator()(int x) const { return images[x]; }
    bool involutive(const FiniteGroup& X) const {
        for (int x = 0; x < X.order; ++x)
            if (images[images[x]] != x) return false;
        return true;
    }
};

inline std::optional<std::string> validate_factor_reversing(const MatchedPair& mp,
                                                            const std::vector<int>& im) {
    const FiniteGroup& X = *mp.X;
    if ((int)im.size() != X.order) return "image list has wrong length";
    std::vector<bool> hit(X.order, false);
    for (int v : im) {
        if (v < 0 || v >= X.order || hit[v]) return "not a bijection";
        hit[v] = true;
    }
    for (int a = 0; a < X.order; ++a)
        for (int b = 0; b < X.order; ++b)
            if (im[X.mul[a][b]] != X.mul[im[a]][im[b]])
                return "not a homomorphism at (" + X.labels[a] + "," + X.labels[b] + ")";
    for (int a : mp.G.elements)
        if (!mp.M.contains(im[a])) return "theta(G) is not contained in M";
    for (int a : mp.M.elements)
        if (!mp.G.contains(im[a])) return "theta(M) is not contained in G";
    return std::nullopt;
}

inline FactorReversingAut make_factor_reversing(const MatchedPair& mp, std::vector<int> images) {
    if (auto bad = validate_factor_reversing(mp, images))
        throw std::invalid_argument("invalid factor-reversing automorphism: " + *bad);
    return FactorReversingAut{std::move(images)};
}

// theta(x) = c x c^-1 for a permutation-realized group.
inline FactorReversingAut theta_from_conjugation(const MatchedPair& mp, const Perm& c) {
    const FiniteGroup& X = *mp.X;
    if (X.perms.empty()) throw std::invalid_argument("group has no permutation realization");
    std::map<Perm, int> index;
    for (int i = 0; i < X.order; ++i) index[X.perms[i]] = i;
    Perm cinv = c.inverse();
    std::vector<int> images(X.order);
    for (int i = 0; i < X.order; ++i) {
        Perm img = perm_mul(perm_mul(c, X.perms[i]), cinv);
        auto it = index.find(img);
        if (it == index.end()) throw std::invalid_argument("conjugation does not preserve X");
        images[i] = it->second;
    }
    return make_factor_reversing(mp, std::move(images));
}

// Generator-image backtracking over order-matched candidates.
inline std::vector<FactorReversingAut> find_factor_reversing_auts(const MatchedPair& mp,
                                                                  bool involutive_only = false,
                                                                  long budget = 10'000'000) {
    const FiniteGroup& X = *mp.X;
    auto gens = small_generating_set(X);
    if (gens.empty()) {
        FactorReversingAut id{{0}};
        return validate_factor_reversing(mp, id.images) ? std::vector<FactorReversingAut>{}
                                                        : std::vector<FactorReversingAut>{id};
    }
    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        int o = X.element_order(gens[i]);
        for (int x = 0; x < X.order; ++x)
            if (X.element_order(x) == o) candidates[i].push_back(x);
    }
    std::vector<FactorReversingAut> found;
    std::vector<int> choice(gens.size());
    long spent = 0;
    auto attempt = [&]() {
        // grow the homomorphism by closure; detect conflicts
        std::vector<int> im(X.order, -1);
        im[X.identity] = X.identity;
        std::vector<int> frontier{X.identity};
        for (size_t h = 0; h < frontier.size(); ++h)
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                int src = X.mul[frontier[h]][gens[gi]];
                int dst = X.mul[im[frontier[h]]][choice[gi]];
                if (im[src] < 0) {
                    im[src] = dst;
                    frontier.push_back(src);
                } else if (im[src] != dst) {
                    return;
                }
            }
        if ((int)frontier.size() != X.order) return;  // proper subgroup image
        if (validate_factor_reversing(mp, im)) return;
        FactorReversingAut th{std::move(im)};
        if (involutive_only && !th.involutive(X)) return;
        found.push_back(std::move(th));
    };
    std::function<void(size_t)> dfs = [&](size_t level) {
        if (level == gens.size()) {
            attempt();
            return;
        }
        for (int cand : candidates[level]) {
            if (++spent > budget) throw SizeLimitError("automorphism search budget exceeded");
            choice[level] = cand;
            dfs(level + 1);
        }
    };
    dfs(0);
    return found;
}

// ---------------------------------------------------------------------------
// The induced semi-skew automorphism Theta of D(H) and the antilinear Hopf
// algebra automorphism *Theta of kX |>.< k(Y), both at the index level.
// ---------------------------------------------------------------------------
inline long theta_double_index(const DoubleBasis& B, const FactorReversingAut& th, long i) {
    const MatchedPair& mp = *B.mp;
    auto k = B.split(i);
    int s1 = mp.M.local(th(mp.G.global(mp.left(k.t, k.v))));
    int u1 = mp.G.local(th(mp.M.global(mp.right(k.t, k.v))));
    int t1 = mp.M.local(th(mp.G.global(mp.left(k.s, k.u))));
    int v1 = mp.G.local(th(mp.M.global(mp.right(k.s, k.u))));
    return B.index(s1, u1, t1, v1);
}

inline long star_theta_double_index(const DoubleBasis& B, const FactorReversingAut& th, long i) {
    return B.star(theta_double_index(B, th, i));
}

// *Theta(x (x) d_y) = theta(x) (x) d_{theta(y)^-1}, inverse taken in X.
inline long star_theta_kxy_index(const KxKyBasis& B, const FactorReversingAut& th, long i) {
    auto [x, y] = B.split(i);
    return B.index(th(x), B.dd->base.X->inv[th(y)]);
}

inline long theta_kxy_index(const KxKyBasis& B, const FactorReversingAut& th, long i) {
    return B.star(star_theta_kxy_index(B, th, i));
}

// Formula-level verification of the semi-skew property: Theta reverses
// products and preserves coproducts on the double, at any dimension.
inline Report verify_theta_double(const MatchedPair& mp, const FactorReversingAut& th) {
    Report rep;
    DoubleBasis B(mp);
    long d = B.dim();
    {
        bool ok = true;
        std::string w;
        for (long a = 0; a < d && ok; ++a)
            for (long b = 0; b < d && ok; ++b) {
                SVec lhs;  // Theta(ab)
                for (const auto& [i, c] : B.product(a, b))
                    lhs.emplace_back(theta_double_index(B, th, i), c);
                sv_normalize(lhs);
                SVec rhs = B.product(theta_double_index(B, th, b), theta_double_index(B, th, a));
                if (!sv_equal(lhs, rhs)) {
                    ok = false;
                    w = "Theta(ab) != Theta(b)Theta(a) at (" + B.label(a) + ", " + B.label(b) + ")";
                }
            }
        ok ? rep.add("Theta antialgebra") : rep.fail("Theta antialgebra", w);
    }
    {
        bool ok = true;
        std::string w;
        for (long a = 0; a < d && ok; ++a) {
            SVec2 lhs;  // (Theta x Theta) Delta(a)
            for (const auto& t : B.coproduct(a))
                lhs.push_back({theta_double_index(B, th, t.i), theta_double_index(B, th, t.j), t.c});
            sv2_normalize(lhs);
            if (!sv2_equal(lhs, B.coproduct(theta_double_index(B, th, a)))) {
                ok = false;
                w = "coproduct not preserved at " + B.label(a);
            }
        }
        ok ? rep.add("Theta coalgebra") : rep.fail("Theta coalgebra", w);
    }
    if (th.involutive(*mp.X)) {
        bool ok = true;
        std::string w;
        for (long a = 0; a < d && ok; ++a)
            if (theta_double_index(B, th, theta_double_index(B, th, a)) != a) {
                ok = false;
                w = "Theta^2 != id at " + B.label(a);
            }
        ok ? rep.add("Theta involutive") : rep.fail("Theta involutive", w);
        ok = true;
        for (long a = 0; a < d && ok; ++a)
            if (star_theta_double_index(B, th, star_theta_double_index(B, th, a)) != a) {
                ok = false;
                w = "(*Theta)^2 != id at " + B.label(a);
            }
        ok ? rep.add("*Theta involutive") : rep.fail("*Theta involutive", w);
    }
    return rep;
}

// *Theta on kX |>.< k(Y): antilinear algebra and coalgebra automorphism; also
// checks consistency with the double-side definition through psi.
inline Report verify_star_theta_kxy(const DressingData& dd, const FactorReversingAut& th) {
    Report rep;
    KxKyBasis B(dd);
    long d = B.dim();
    {
        bool ok = true;
        std::string w;
        for (long a = 0; a < d && ok; ++a)
            for (long b = 0; b < d && ok; ++b) {
                SVec lhs;
                for (const auto& [i, c] : B.product(a, b))
                    lhs.emplace_back(star_theta_kxy_index(B, th, i), c.conj());
                sv_normalize(lhs);
                SVec rhs = B.product(star_theta_kxy_index(B, th, a), star_theta_kxy_index(B, th, b));
                if (!sv_equal(lhs, rhs)) {
                    ok = false;
                    w = "*Theta(ab) != *Theta(a)*Theta(b)";
                }
            }
        ok ? rep.add("*Theta algebra automorphism") : rep.fail("*Theta algebra automorphism", w);
    }
    {
        bool ok = true;
        std::string w;
        for (long a = 0; a < d && ok; ++a) {
            SVec2 lhs;
            for (const auto& t : B.coproduct(a))
                lhs.push_back(
                    {star_theta_kxy_index(B, th, t.i), star_theta_kxy_index(B, th, t.j), t.c.conj()});
            sv2_normalize(lhs);
            if (!sv2_equal(lhs, B.coproduct(star_theta_kxy_index(B, th, a)))) {
                ok = false;
                w = "coproduct not preserved";
            }
        }
        ok ? rep.add("*Theta coalgebra automorphism") : rep.fail("*Theta coalgebra automorphism", w);
    }
    {
        // the transported double-side map agrees with the direct formula
        DoubleBasis DB(dd.base);
        bool ok = true;
        std::string w;
        for (long i = 0; i < DB.dim() && ok; ++i) {
            auto k = DB.split(i);
            auto kk = DB.split(star_theta_double_index(DB, th, i));
            long via_double = psi_image_index(dd, kk.s, kk.u, kk.t, kk.v);
            long direct = star_theta_kxy_index(B, th, psi_image_index(dd, k.s, k.u, k.t, k.v));
            if (via_double != direct) {
                ok = false;
                w = "psi *Theta_D psi^-1 != *Theta at " + DB.label(i);
            }
        }
        ok ? rep.add("*Theta transported through psi") : rep.fail("*Theta transported through psi", w);
    }
    return rep;
}

// (Theta x Theta)(R) = R21 and (*Theta x *Theta)(R) = R21^-1 as sparse sets.
inline Report check_theta_on_R(const DressingData& dd, const FactorReversingAut& th) {
    Report rep;
    KxKyBasis B(dd);
    SVec2 R = build_R(dd);
    {
        SVec2 lhs;
        for (const auto& t : R)
            lhs.push_back({theta_kxy_index(B, th, t.i), theta_kxy_index(B, th, t.j), t.c});
        sv2_normalize(lhs);
        sv2_equal(lhs, sv2_swap(R)) ? rep.add("(Theta x Theta)R = R21")
                                    : rep.fail("(Theta x Theta)R = R21", "sets differ");
    }
    {
        SVec2 lhs;
        for (const auto& t : R)
            lhs.push_back(
                {star_theta_kxy_index(B, th, t.i), star_theta_kxy_index(B, th, t.j), t.c.conj()});
        sv2_normalize(lhs);
        // R21^-1 = swap of (S x id) R
        SVec2 rinv;
        for (const auto& t : R) rinv.push_back({B.antipode(t.i), t.j, t.c});
        sv2_normalize(rinv);
        sv2_equal(lhs, sv2_swap(rinv)) ? rep.add("(*Theta x *Theta)R = R21^-1")
                                       : rep.fail("(*Theta x *Theta)R = R21^-1", "sets differ");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// The theta subfactorisation Y^theta |><| X^theta and its bicrossproduct.
// ---------------------------------------------------------------------------
struct ThetaSubfactorisation {
    FactorReversingAut aut;
    Subgroup X_theta;            // fixed points of theta, subgroup of X
    std::vector<int> Y_theta;    // sorted X-indices y with theta(y) = y^-1 in X
    std::vector<int> x_of_m;     // M-local s -> X(s) in X
    std::vector<int> y_of_g;     // G-local v -> Y(v) in X
    GroupPtr Z;                  // the group Y^theta |><| X^theta on pairs
    MatchedPair sub;             // Z factorised into (Y^theta, X^theta)
    std::vector<int> ytheta_pos;  // X index -> position in Y_theta or -1
};

inline ThetaSubfactorisation build_theta_subfactorisation(const DressingData& dd,
                                                          const FactorReversingAut& th) {
    const MatchedPair& mp = dd.base;
    const FiniteGroup& X = *mp.X;
    ThetaSubfactorisation ts;
    ts.aut = th;
    std::vector<int> fixed;
    for (int x = 0; x < X.order; ++x)
        if (th(x) == x) fixed.push_back(x);
    ts.X_theta = subgroup_from_elements(mp.X, fixed);
    for (int y = 0; y < X.order; ++y)
        if (th(y) == X.inv[y]) ts.Y_theta.push_back(y);
    std::sort(ts.Y_theta.begin(), ts.Y_theta.end());
    ts.ytheta_pos.assign(X.order, -1);
    for (int i = 0; i < (int)ts.Y_theta.size(); ++i) ts.ytheta_pos[ts.Y_theta[i]] = i;

    // Y^theta is closed under the Y multiplication
    for (int a : ts.Y_theta)
        for (int b : ts.Y_theta)
            if (ts.ytheta_pos[dd.Y->mul[a][b]] < 0)
                throw InternalConsistencyError("Y^theta not closed under the Y product");

    // X(s) = (s |> theta(s)^-1)^-1 s and Y(v) = v theta(v)^-1
    ts.x_of_m.resize(mp.nM());
    for (int s = 0; s < mp.nM(); ++s) {
        int gs = mp.M.global(s);
        int ths = th(gs);  // in G
        int g1 = mp.left(s, mp.G.local(X.inv[ths]));
        ts.x_of_m[s] = X.mul[X.inv[mp.G.global(g1)]][gs];
        if (!ts.X_theta.contains(ts.x_of_m[s]))
            throw InternalConsistencyError("X(s) is not a fixed point");
    }
    ts.y_of_g.resize(mp.nG());
    for (int v = 0; v < mp.nG(); ++v) {
        int gv = mp.G.global(v);
        ts.y_of_g[v] = X.mul[gv][X.inv[th(gv)]];
        if (ts.ytheta_pos[ts.y_of_g[v]] < 0)
            throw InternalConsistencyError("Y(v) is not theta-antisymmetric");
    }
    {
        // X: M -> X^theta is a bijection of sets; Y: G -> Y^theta a group iso
        std::set<int> xs(ts.x_of_m.begin(), ts.x_of_m.end());
        if ((int)xs.size() != mp.nM() || (int)xs.size() != ts.X_theta.size())
            throw InternalConsistencyError("X: M -> X^theta is not bijective");
        std::set<int> ys(ts.y_of_g.begin(), ts.y_of_g.end());
        if ((int)ys.size() != mp.nG() || ys.size() != ts.Y_theta.size())
            throw InternalConsistencyError("Y: G -> Y^theta is not bijective");
        for (int v = 0; v < mp.nG(); ++v)
            for (int w = 0; w < mp.nG(); ++w)
                if (dd.Y->mul[ts.y_of_g[v]][ts.y_of_g[w]] != ts.y_of_g[mp.g_mul(v, w)])
                    throw InternalConsistencyError("Y is not a group homomorphism");
    }
    // restriction identities: X(s) <|~ Y(v) = X(s <| v); actions restrict
    for (int s = 0; s < mp.nM(); ++s)
        for (int v = 0; v < mp.nG(); ++v)
            if (dd.act_x[ts.x_of_m[s]][ts.y_of_g[v]] != ts.x_of_m[mp.right(s, v)])
                throw InternalConsistencyError("X(s) <|~ Y(v) != X(s <| v)");
    for (int x : ts.X_theta.elements)
        for (int y : ts.Y_theta) {
            if (ts.ytheta_pos[dd.act_y[x][y]] < 0)
                throw InternalConsistencyError("|>~ does not restrict to Y^theta");
            if (!ts.X_theta.contains(dd.act_x[x][y]))
                throw InternalConsistencyError("<|~ does not restrict to X^theta");
        }

    // the double cross product group on pairs (y in Y^theta, x in X^theta)
    int ny = (int)ts.Y_theta.size(), nx = ts.X_theta.size();
    auto pidx = [&](int yi, int xi) { return yi * nx + xi; };
    std::vector<std::string> labels(ny * nx);
    for (int yi = 0; yi < ny; ++yi)
        for (int xi = 0; xi < nx; ++xi)
            labels[pidx(yi, xi)] = "(" + X.labels[ts.Y_theta[yi]] + ";" +
                                   X.labels[ts.X_theta.global(xi)] + ")";
    ts.Z = make_group(
        ny * nx,
        [&](int a, int b) {
            int y1 = ts.Y_theta[a / nx], x1 = ts.X_theta.global(a % nx);
            int y2 = ts.Y_theta[b / nx], x2 = ts.X_theta.global(b % nx);
            int y = dd.Y->mul[y1][dd.act_y[x1][y2]];
            int x = X.mul[dd.act_x[x1][y2]][x2];
            return pidx(ts.ytheta_pos[y], ts.X_theta.local(x));
        },
        labels);
    std::vector<int> ypart(ny), xpart(nx);
    for (int yi = 0; yi < ny; ++yi) ypart[yi] = pidx(yi, 0);
    for (int xi = 0; xi < nx; ++xi) xpart[xi] = pidx(0, xi);
    ts.sub = derive_matched_pair(ts.Z, subgroup_from_elements(ts.Z, ypart),
                                 subgroup_from_elements(ts.Z, xpart));
    return ts;
}

inline HopfPtr build_theta_bicross(const ThetaSubfactorisation& ts) { return build_H(ts.sub); }

// The coalgebra of kX^theta |>.< k(Y^theta) matches that of kM |>.< k(G)
// under the relabeling X(s) <-> s, Y(v) <-> v.
inline Report check_theta_coalgebra_match(const DressingData& dd, const ThetaSubfactorisation& ts) {
    Report rep;
    const MatchedPair& mp = dd.base;
    auto Hbase = build_H(mp);
    auto Hsub = build_theta_bicross(ts);
    BicrossBasis BB{mp.nM(), mp.nG()};
    BicrossBasis SB{ts.sub.nM(), ts.sub.nG()};
    // translate base basis (s, v) to sub basis (sub-local of X(s), sub-local of Y(v))
    auto tr = [&](long i) {
        auto [s, v] = BB.split(i);
        int xloc = ts.X_theta.local(ts.x_of_m[s]);
        int yloc = ts.ytheta_pos[ts.y_of_g[v]];
        return SB.index(xloc, yloc);
    };
    bool ok = true;
    std::string w;
    for (long i = 0; i < Hbase->dim && ok; ++i) {
        SVec2 lhs;
        for (const auto& t : Hbase->comult[i]) lhs.push_back({tr(t.i), tr(t.j), t.c});
        sv2_normalize(lhs);
        if (!sv2_equal(lhs, Hsub->comult[tr(i)])) {
            ok = false;
            w = "coproducts differ at " + Hbase->label(i);
        }
        if (ok && !(Hbase->counit[i] == Hsub->counit[tr(i)])) {
            ok = false;
            w = "counits differ at " + Hbase->label(i);
        }
    }
    ok ? rep.add("theta bicrossproduct coalgebra matches kM|>.<k(G)")
       : rep.fail("theta bicrossproduct coalgebra matches kM|>.<k(G)", w);
    return rep;
}

// Fixed-point characterisation: a basis element x (x) d_y is *Theta-invariant
// iff theta(x) = x and theta(y) = y^-1.
inline Report check_star_theta_fixed_points(const DressingData& dd, const FactorReversingAut& th) {
    Report rep;
    KxKyBasis B(dd);
    const FiniteGroup& X = *dd.base.X;
    bool ok = true;
    std::string w;
    for (long i = 0; i < B.dim() && ok; ++i) {
        auto [x, y] = B.split(i);
        bool inv = star_theta_kxy_index(B, th, i) == i;
        bool expect = th(x) == x && th(y) == X.inv[y];
        if (inv != expect) {
            ok = false;
            w = "mismatch at x=" + X.labels[x] + ", y=" + X.labels[y];
        }
    }
    ok ? rep.add("*Theta fixed basis elements are theta-symmetric pairs")
       : rep.fail("*Theta fixed basis elements are theta-symmetric pairs", w);
    return rep;
}

// ---------------------------------------------------------------------------
// Artin-Wedderburn block profile of a smash product algebra Q |x k(P): one
// block of size |orbit| * deg(chi) per orbit of Q on P and irreducible chi of
// the point stabilizer. The bicrossproduct algebra kM |>.< k(G) is of this
// form with Q = M acting on P = G by |>.
// ---------------------------------------------------------------------------
inline std::vector<long> block_profile_of_action(GroupPtr Q, int set_size,
                                                 const std::function<int(int, int)>& act) {
    std::vector<long> blocks;
    std::vector<bool> seen(set_size, false);
    for (int p0 = 0; p0 < set_size; ++p0) {
        if (seen[p0]) continue;
        // orbit of p0
        std::vector<int> orbit;
        {
            std::vector<bool> in(set_size, false);
            std::vector<int> stack{p0};
            in[p0] = true;
            while (!stack.empty()) {
                int p = stack.back();
                stack.pop_back();
                orbit.push_back(p);
                for (int q = 0; q < Q->order; ++q) {
                    int r = act(q, p);
                    if (!in[r]) {
                        in[r] = true;
                        stack.push_back(r);
                    }
                }
            }
        }
        for (int p : orbit) seen[p] = true;
        std::vector<int> stab;
        for (int q = 0; q < Q->order; ++q)
            if (act(q, p0) == p0) stab.push_back(q);
        auto stab_group = subgroup_from_elements(Q, stab).as_group();
        auto ct = character_table(stab_group);
        for (long r = 0; r < ct.num_classes(); ++r) blocks.push_back((long)orbit.size() * ct.degree[r]);
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

inline std::vector<long> matrix_block_profile(const MatchedPair& mp) {
    auto Q = mp.M.as_group();
    return block_profile_of_action(Q, mp.nG(), [&](int s, int u) { return mp.left(s, u); });
}

// Center dimension of an algebra from its structure constants; equals the
// number of Wedderburn blocks over a splitting field.
inline long center_dimension(const FinDimHopf& H) {
    long d = H.dim;
    Mat sys(d * d, d);
    for (long j = 0; j < d; ++j)
        for (long i = 0; i < d; ++i) {
            // row (j, k): sum_i z_i (e_i e_j - e_j e_i)_k = 0
            for (const auto& [k, c] : H.mult[i][j]) sys.a[j * d + k][i] += c;
            for (const auto& [k, c] : H.mult[j][i]) sys.a[j * d + k][i] -= c;
        }
    return d - rank(std::move(sys));
}

// ---------------------------------------------------------------------------
// The upper/lower triangular example over GF(p): G = T+, M = T- with actions
// s |> u = 1 + theta(s)(u - 1), s <| u = 1 + (s - 1) theta(u), where
// theta(a) = (a^T)^-1. Odd p is required so that (s+1)/2 makes sense.
// ---------------------------------------------------------------------------
struct TriangularExample {
    int n = 2, p = 3;
    GroupPtr Gg, Mg;                       // T+ and T- as standalone groups
    std::vector<std::vector<int>> g_mats;  // local index -> n*n matrix mod p
    std::vector<std::vector<int>> m_mats;
    MatchedPair mp;  // the abstract double cross product X = G M
    FactorReversingAut aut;

    std::vector<int> mat_mul(const std::vector<int>& A, const std::vector<int>& B) const {
        std::vector<int> C(n * n, 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (A[i * n + k] == 0) continue;
                for (int j = 0; j < n; ++j)
                    C[i * n + j] = (C[i * n + j] + A[i * n + k] * B[k * n + j]) % p;
            }
        return C;
    }
    std::vector<int> mat_id() const {
        std::vector<int> I(n * n, 0);
        for (int i = 0; i < n; ++i) I[i * n + i] = 1;
        return I;
    }
    std::vector<int> mat_transpose(const std::vector<int>& A) const {
        std::vector<int> T(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) T[j * n + i] = A[i * n + j];
        return T;
    }
    // inverse of a unitriangular matrix via the nilpotent part
    std::vector<int> mat_inv(const std::vector<int>& A) const {
        std::vector<int> N = A;
        for (int i = 0; i < n; ++i) N[i * n + i] = (N[i * n + i] + p - 1) % p;
        std::vector<int> acc = mat_id(), pw = mat_id();
        int sign = 1;
        for (int k = 1; k < n; ++k) {
            pw = mat_mul(pw, N);
            sign = -sign;
            for (int i = 0; i < n * n; ++i)
                acc[i] = ((acc[i] + sign * pw[i]) % p + p) % p;
        }
        return acc;
    }
    std::vector<int> theta_mat(const std::vector<int>& A) const { return mat_inv(mat_transpose(A)); }
};

inline TriangularExample build_triangular_example(int n, int p) {
    if (p == 2) throw std::invalid_argument("p must be odd: the correspondence needs 1/2");
    if (!modp::is_prime(p)) throw std::invalid_argument("p must be prime");
    if (n < 2) throw std::invalid_argument("matrix size must be at least 2");
    TriangularExample tri;
    tri.n = n;
    tri.p = p;

    // enumerate strictly-upper entry tuples; the all-zero tuple (identity) first
    int slots = n * (n - 1) / 2;
    long count = 1;
    for (int i = 0; i < slots; ++i) count *= p;
    auto fill = [&](long code, bool upper) {
        std::vector<int> A(n * n, 0);
        for (int i = 0; i < n; ++i) A[i * n + i] = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int digit = int(code % p);
                code /= p;
                if (upper)
                    A[i * n + j] = digit;
                else
                    A[j * n + i] = digit;
            }
        return A;
    };
    std::map<std::vector<int>, int> gidx, midx;
    for (long c = 0; c < count; ++c) {
        tri.g_mats.push_back(fill(c, true));
        gidx[tri.g_mats.back()] = (int)c;
        tri.m_mats.push_back(fill(c, false));
        midx[tri.m_mats.back()] = (int)c;
    }
    tri.Gg = make_group((int)count,
                        [&](int a, int b) { return gidx.at(tri.mat_mul(tri.g_mats[a], tri.g_mats[b])); });
    tri.Mg = make_group((int)count,
                        [&](int a, int b) { return midx.at(tri.mat_mul(tri.m_mats[a], tri.m_mats[b])); });

    // the defining actions as tables, checked for matching before any group
    // is assembled on top of them
    std::vector<std::vector<int>> actL_t((size_t)count, std::vector<int>((size_t)count));
    std::vector<std::vector<int>> actR_t((size_t)count, std::vector<int>((size_t)count));
    for (int s = 0; s < (int)count; ++s) {
        auto ths = tri.theta_mat(tri.m_mats[s]);
        for (int u = 0; u < (int)count; ++u) {
            {  // s |> u = 1 + theta(s)(u - 1)
                auto um1 = tri.g_mats[u];
                for (int i = 0; i < n; ++i) um1[i * n + i] = 0;
                auto res = tri.mat_mul(ths, um1);
                for (int i = 0; i < n; ++i) res[i * n + i] = (res[i * n + i] + 1) % p;
                auto it = gidx.find(res);
                if (it == gidx.end()) throw InternalConsistencyError("s|>u left T+");
                actL_t[s][u] = it->second;
            }
            {  // s <| u = 1 + (s - 1) theta(u)
                auto thu = tri.theta_mat(tri.g_mats[u]);
                auto sm1 = tri.m_mats[s];
                for (int i = 0; i < n; ++i) sm1[i * n + i] = 0;
                auto res = tri.mat_mul(sm1, thu);
                for (int i = 0; i < n; ++i) res[i * n + i] = (res[i * n + i] + 1) % p;
                auto it = midx.find(res);
                if (it == midx.end()) throw InternalConsistencyError("s<|u left T-");
                actR_t[s][u] = it->second;
            }
        }
    }
    auto actL = [&](int s, int u) { return actL_t[s][u]; };
    auto actR = [&](int s, int u) { return actR_t[s][u]; };
    if (auto bad = check_matching_tables(
            (int)count, (int)count, [&](int u, int v) { return tri.Gg->mul[u][v]; },
            [&](int s, int t) { return tri.Mg->mul[s][t]; }, actL, actR))
        throw InternalConsistencyError("triangular actions are not matched: " + *bad);

    // X as the double cross product on pairs (u, s)
    int nc = (int)count;
    auto pidx = [&](int u, int s) { return u * nc + s; };
    std::vector<std::string> labels(nc * nc);
    for (int u = 0; u < nc; ++u)
        for (int s = 0; s < nc; ++s) labels[pidx(u, s)] = "u" + std::to_string(u) + "s" + std::to_string(s);
    auto X = make_group(nc * nc,
                        [&](int a, int b) {
                            int u = a / nc, s = a % nc, v = b / nc, t = b % nc;
                            return pidx(tri.Gg->mul[u][actL(s, v)], tri.Mg->mul[actR(s, v)][t]);
                        },
                        labels);
    std::vector<int> gpart(nc), mpart(nc);
    for (int u = 0; u < nc; ++u) gpart[u] = pidx(u, 0);
    for (int s = 0; s < nc; ++s) mpart[s] = pidx(0, s);
    tri.mp = derive_matched_pair(X, subgroup_from_elements(X, gpart),
                                 subgroup_from_elements(X, mpart));

    // theta on X: theta(u s) = theta(u) theta(s) with the matrix map on parts
    std::vector<int> images(X->order);
    for (int u = 0; u < nc; ++u)
        for (int s = 0; s < nc; ++s) {
            int tm = midx.at(tri.theta_mat(tri.g_mats[u]));  // theta(u) in T-
            int tg = gidx.at(tri.theta_mat(tri.m_mats[s]));  // theta(s) in T+
            images[pidx(u, s)] = X->mul[mpart[tm]][gpart[tg]];
        }
    tri.aut = make_factor_reversing(tri.mp, std::move(images));
    return tri;
}

}  // namespace bicross
