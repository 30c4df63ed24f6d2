#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cyclotomic.hpp"

namespace bicross {

// Sparse vector in a based space: sorted (basis index, coefficient) pairs with
// nonzero coefficients. The workhorse for structure constants, where almost
// every product of basis elements is zero or a single basis element.
using SVec = std::vector<std::pair<long, CycScalar>>;

// Sparse element of a two-fold tensor space, sorted by (i, j).
struct TPair {
    long i, j;
    CycScalar c;
};
using SVec2 = std::vector<TPair>;

// Three-fold tensors for the hexagon and Yang-Baxter checks.
struct TTriple {
    long i, j, k;
    CycScalar c;
};
using SVec3 = std::vector<TTriple>;

inline void sv_normalize(SVec& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SVec out;
    for (auto& [i, c] : v) {
        if (!out.empty() && out.back().first == i)
            out.back().second += c;
        else
            out.emplace_back(i, c);
    }
    std::erase_if(out, [](const auto& p) { return p.second.is_zero(); });
    v = std::move(out);
}

inline SVec sv_unit(long i, CycScalar c = CycScalar::one()) { return SVec{{i, std::move(c)}}; }

inline SVec sv_add(const SVec& a, const SVec& b) {
    SVec r = a;
    r.insert(r.end(), b.begin(), b.end());
    sv_normalize(r);
    return r;
}

inline SVec sv_scale(const CycScalar& c, const SVec& a) {
    if (c.is_zero()) return {};
    SVec r = a;
    for (auto& [i, x] : r) x *= c;
    return r;
}

inline SVec sv_neg(const SVec& a) {
    SVec r = a;
    for (auto& [i, x] : r) x = -x;
    return r;
}

inline SVec sv_conj(const SVec& a) {
    SVec r = a;
    for (auto& [i, x] : r) x = x.conj();
    return r;
}

inline bool sv_equal(SVec a, SVec b) {
    sv_normalize(a);
    sv_normalize(b);
    return a == b;
}

inline CycScalar sv_coeff(const SVec& a, long i) {
    for (const auto& [j, c] : a)
        if (j == i) return c;
    return CycScalar::zero();
}

inline void sv2_normalize(SVec2& v) {
    std::sort(v.begin(), v.end(), [](const TPair& a, const TPair& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    SVec2 out;
    for (auto& t : v) {
        if (!out.empty() && out.back().i == t.i && out.back().j == t.j)
            out.back().c += t.c;
        else
            out.push_back(t);
    }
    std::erase_if(out, [](const TPair& t) { return t.c.is_zero(); });
    v = std::move(out);
}

inline bool sv2_equal(SVec2 a, SVec2 b) {
    sv2_normalize(a);
    sv2_normalize(b);
    if (a.size() != b.size()) return false;
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k].i != b[k].i || a[k].j != b[k].j || a[k].c != b[k].c) return false;
    return true;
}

inline SVec2 sv2_conj(const SVec2& a) {
    SVec2 r = a;
    for (auto& t : r) t.c = t.c.conj();
    return r;
}

inline SVec2 sv2_swap(const SVec2& a) {
    SVec2 r;
    r.reserve(a.size());
    for (const auto& t : a) r.push_back({t.j, t.i, t.c});
    sv2_normalize(r);
    return r;
}

inline void sv3_normalize(SVec3& v) {
    std::sort(v.begin(), v.end(), [](const TTriple& a, const TTriple& b) {
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return a.k < b.k;
    });
    SVec3 out;
    for (auto& t : v) {
        if (!out.empty() && out.back().i == t.i && out.back().j == t.j && out.back().k == t.k)
            out.back().c += t.c;
        else
            out.push_back(t);
    }
    std::erase_if(out, [](const TTriple& t) { return t.c.is_zero(); });
    v = std::move(out);
}

inline bool sv3_equal(SVec3 a, SVec3 b) {
    sv3_normalize(a);
    sv3_normalize(b);
    if (a.size() != b.size()) return false;
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k].i != b[k].i || a[k].j != b[k].j || a[k].k != b[k].k || a[k].c != b[k].c)
            return false;
    return true;
}

}  // namespace bicross
