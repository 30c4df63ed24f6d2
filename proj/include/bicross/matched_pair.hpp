#pragma once

#include <optional>
#include <sstream>

#include "group.hpp"

namespace bicross {

struct FactorisationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// A group factorisation X = GM together with the mutual actions determined by
// s u = (s|>u)(s<|u) for s in M, u in G. All action tables use local indices
// into G and M.
struct MatchedPair {
    GroupPtr X;
    Subgroup G;
    Subgroup M;
    std::vector<int> factor_g;               // x -> local G index of the left factor
    std::vector<int> factor_m;               // x -> local M index of the right factor
    std::vector<std::vector<int>> act_left;   // act_left[s][u] = s |> u   (G local)
    std::vector<std::vector<int>> act_right;  // act_right[s][u] = s <| u  (M local)

    int nG() const { return G.size(); }
    int nM() const { return M.size(); }

    int left(int s, int u) const { return act_left[s][u]; }
    int right(int s, int u) const { return act_right[s][u]; }

    // x = us with u in G, s in M (parent composition, u first).
    int compose(int u_local, int s_local) const {
        return X->mul[G.global(u_local)][M.global(s_local)];
    }

    int g_inv(int u) const { return G.inv_local(u); }
    int m_inv(int s) const { return M.inv_local(s); }
    int g_mul(int u, int v) const { return G.mul_local(u, v); }
    int m_mul(int s, int t) const { return M.mul_local(s, t); }
};

// Verifies the eight matching conditions exhaustively over raw tables;
// returns a witness string on failure. mulG/mulM are the factor group laws,
// actL(s,u) = s|>u, actR(s,u) = s<|u, all in local indices with identity 0.
template <class MulG, class MulM, class ActL, class ActR>
std::optional<std::string> check_matching_tables(int nM, int nG, MulG&& mulG, MulM&& mulM,
                                                 ActL&& actL, ActR&& actR) {
    for (int s = 0; s < nM; ++s) {
        if (actR(s, 0) != s) return "s <| e != s at s=" + std::to_string(s);
        if (actL(s, 0) != 0) return "s |> e != e at s=" + std::to_string(s);
    }
    for (int u = 0; u < nG; ++u) {
        if (actR(0, u) != 0) return "e <| u != e at u=" + std::to_string(u);
        if (actL(0, u) != u) return "e |> u != u at u=" + std::to_string(u);
    }
    for (int s = 0; s < nM; ++s)
        for (int u = 0; u < nG; ++u) {
            for (int v = 0; v < nG; ++v) {
                // (s <| u) <| v = s <| (uv)
                if (actR(actR(s, u), v) != actR(s, mulG(u, v)))
                    return "(s<|u)<|v != s<|(uv) at (s,u,v)=(" + std::to_string(s) + "," +
                           std::to_string(u) + "," + std::to_string(v) + ")";
                // s |> (uv) = (s|>u)((s<|u)|>v)
                if (actL(s, mulG(u, v)) != mulG(actL(s, u), actL(actR(s, u), v)))
                    return "s|>(uv) mismatch at (s,u,v)=(" + std::to_string(s) + "," +
                           std::to_string(u) + "," + std::to_string(v) + ")";
            }
            for (int t = 0; t < nM; ++t) {
                // (st) <| u = (s <| (t|>u)) (t <| u)
                if (actR(mulM(s, t), u) != mulM(actR(s, actL(t, u)), actR(t, u)))
                    return "(st)<|u mismatch at (s,t,u)=(" + std::to_string(s) + "," +
                           std::to_string(t) + "," + std::to_string(u) + ")";
                // s |> (t|>u) = (st) |> u
                if (actL(s, actL(t, u)) != actL(mulM(s, t), u))
                    return "s|>(t|>u) mismatch at (s,t,u)=(" + std::to_string(s) + "," +
                           std::to_string(t) + "," + std::to_string(u) + ")";
            }
        }
    return std::nullopt;
}

inline std::optional<std::string> check_matching_conditions(const MatchedPair& mp) {
    return check_matching_tables(
        mp.nM(), mp.nG(), [&](int u, int v) { return mp.g_mul(u, v); },
        [&](int s, int t) { return mp.m_mul(s, t); },
        [&](int s, int u) { return mp.left(s, u); }, [&](int s, int u) { return mp.right(s, u); });
}

// Builds the matched pair of a factorisation X = GM. Rejects non-unique
// factorisations with a witness element.
inline MatchedPair derive_matched_pair(GroupPtr X, Subgroup G, Subgroup M) {
    if (G.parent.get() != X.get() || M.parent.get() != X.get())
        throw std::invalid_argument("G and M must be subgroups of X");
    for (int a : G.elements)
        if (a != X->identity && M.contains(a))
            throw FactorisationError("G and M intersect beyond the identity at element " +
                                     X->labels[a]);
    if ((long)G.size() * M.size() != X->order)
        throw FactorisationError("|G| * |M| != |X| (" + std::to_string(G.size()) + "*" +
                                 std::to_string(M.size()) + " vs " + std::to_string(X->order) +
                                 ")");
    MatchedPair mp;
    mp.X = X;
    mp.G = std::move(G);
    mp.M = std::move(M);
    mp.factor_g.assign(X->order, -1);
    mp.factor_m.assign(X->order, -1);
    std::vector<int> count(X->order, 0);
    for (int u = 0; u < mp.nG(); ++u)
        for (int s = 0; s < mp.nM(); ++s) {
            int x = mp.compose(u, s);
            ++count[x];
            mp.factor_g[x] = u;
            mp.factor_m[x] = s;
        }
    for (int x = 0; x < X->order; ++x)
        if (count[x] != 1)
            throw FactorisationError("element " + X->labels[x] + " has " +
                                     std::to_string(count[x]) + " decompositions u*s");
    mp.act_left.assign(mp.nM(), std::vector<int>(mp.nG()));
    mp.act_right.assign(mp.nM(), std::vector<int>(mp.nG()));
    for (int s = 0; s < mp.nM(); ++s)
        for (int u = 0; u < mp.nG(); ++u) {
            int su = X->mul[mp.M.global(s)][mp.G.global(u)];
            mp.act_left[s][u] = mp.factor_g[su];
            mp.act_right[s][u] = mp.factor_m[su];
        }
    if (auto bad = check_matching_conditions(mp))
        throw InternalConsistencyError("matching conditions failed: " + *bad);
    return mp;
}

// The double cross product group on G x M with
// (u,s)(v,t) = (u (s|>v), (s<|v) t); reconstructs X up to isomorphism.
struct DoubleCrossGroup {
    GroupPtr group;            // pairs indexed u*|M|+s
    std::vector<int> to_x;     // pair index -> X element (u s)
};

inline DoubleCrossGroup build_double_cross_group(const MatchedPair& mp) {
    int nG = mp.nG(), nM = mp.nM();
    int n = nG * nM;
    auto idx = [&](int u, int s) { return u * nM + s; };
    std::vector<std::string> labels(n);
    for (int u = 0; u < nG; ++u)
        for (int s = 0; s < nM; ++s)
            labels[idx(u, s)] = "(" + mp.X->labels[mp.G.global(u)] + "," +
                                mp.X->labels[mp.M.global(s)] + ")";
    auto mul = [&](int a, int b) {
        int u = a / nM, s = a % nM, v = b / nM, t = b % nM;
        return idx(mp.g_mul(u, mp.left(s, v)), mp.m_mul(mp.right(s, v), t));
    };
    DoubleCrossGroup dc;
    dc.group = make_group(n, mul, labels);
    dc.to_x.resize(n);
    for (int u = 0; u < nG; ++u)
        for (int s = 0; s < nM; ++s) dc.to_x[idx(u, s)] = mp.compose(u, s);
    // (u,s) -> us must be a group isomorphism onto X.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mp.X->mul[dc.to_x[a]][dc.to_x[b]] != dc.to_x[dc.group->mul[a][b]])
                throw InternalConsistencyError("double cross product does not reconstruct X");
    return dc;
}

// The dressing-group factorisation. Y = G x M^op realized on the element set
// of X via (u,s) -> us; X acts on Y by conjugation and Y back-reacts on X.
struct DressingData {
    MatchedPair base;               // the original X = GM pair
    GroupPtr Y;                     // group law on the set X: (us).(vt) = uv ts
    std::vector<std::vector<int>> act_y;   // act_y[x][y] = x |>~ y (X conjugation, in Y)
    std::vector<std::vector<int>> act_x;   // act_x[x][y] = x <|~ y (in X)
    GroupPtr YX;                    // double cross product Y |><| X, pairs y*|X|+x
    MatchedPair big;                // Y |><| X factorised into (Y, X)

    int y_mul(int a, int b) const { return Y->mul[a][b]; }
    int y_inv(int a) const { return Y->inv[a]; }
    int pair_index(int y, int x) const { return y * base.X->order + x; }
};

inline DressingData build_y_bowtie_x(const MatchedPair& mp) {
    const auto& X = *mp.X;
    int n = X.order;
    DressingData d;
    d.base = mp;
    // Y multiplication: factor both operands and recombine as (uv)(ts).
    auto ymul = [&](int a, int b) {
        int u = mp.factor_g[a], s = mp.factor_m[a];
        int v = mp.factor_g[b], t = mp.factor_m[b];
        return mp.compose(mp.g_mul(u, v), mp.m_mul(t, s));
    };
    {
        std::vector<std::string> labels(n);
        for (int a = 0; a < n; ++a) labels[a] = X.labels[a];
        d.Y = make_group(n, ymul, labels);
    }
    d.act_y.assign(n, std::vector<int>(n));
    d.act_x.assign(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            d.act_y[x][y] = X.mul[X.mul[x][y]][X.inv[x]];
            // x <|~ y = ((s<|v) t s^-1 |> u^-1)^-1 (s<|v)  for x = us, y = vt
            int u = mp.factor_g[x], s = mp.factor_m[x];
            int v = mp.factor_g[y], t = mp.factor_m[y];
            int m1 = mp.m_mul(mp.m_mul(mp.right(s, v), t), mp.m_inv(s));
            int g1 = mp.left(m1, mp.g_inv(u));
            d.act_x[x][y] = X.mul[X.inv[mp.G.global(g1)]][mp.M.global(mp.right(s, v))];
        }
    // Double cross product group on pairs (y, x).
    auto pidx = [&](int y, int x) { return y * n + x; };
    auto bigmul = [&](int a, int b) {
        int y1 = a / n, x1 = a % n, y2 = b / n, x2 = b % n;
        return pidx(d.Y->mul[y1][d.act_y[x1][y2]], X.mul[d.act_x[x1][y2]][x2]);
    };
    {
        std::vector<std::string> labels((size_t)n * n);
        for (int y = 0; y < n; ++y)
            for (int x = 0; x < n; ++x)
                labels[pidx(y, x)] = "(" + X.labels[y] + ";" + X.labels[x] + ")";
        d.YX = make_group(n * n, bigmul, labels);
    }
    std::vector<int> ysub(n), xsub(n);
    for (int y = 0; y < n; ++y) ysub[y] = pidx(y, X.identity);
    for (int x = 0; x < n; ++x) xsub[x] = pidx(X.identity, x);
    d.big = derive_matched_pair(d.YX, subgroup_from_elements(d.YX, ysub),
                                subgroup_from_elements(d.YX, xsub));
    // The derived actions of the big factorisation must agree with the tables.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (d.big.G.global(d.big.left(x, y)) != pidx(d.act_y[x][y], X.identity) ||
                d.big.M.global(d.big.right(x, y)) != pidx(X.identity, d.act_x[x][y]))
                throw InternalConsistencyError("dressing actions disagree with derived matched pair");
        }
    return d;
}

}  // namespace bicross
