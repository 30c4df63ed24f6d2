#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bicross {

// Permutation of {0..n-1}. Composition convention throughout the library:
// (a * b) applies a first, then b. This matches cycle notation acting on
// objects written to the left of the permutation.
struct Perm {
    std::vector<int> map;

    int degree() const { return (int)map.size(); }
    int operator()(int i) const { return map[i]; }
    bool operator==(const Perm& o) const { return map == o.map; }
    bool operator<(const Perm& o) const { return map < o.map; }

    static Perm identity(int n) {
        Perm p;
        p.map.resize(n);
        std::iota(p.map.begin(), p.map.end(), 0);
        return p;
    }
    Perm inverse() const {
        Perm r;
        r.map.resize(map.size());
        for (int i = 0; i < (int)map.size(); ++i) r.map[map[i]] = i;
        return r;
    }
    bool is_valid() const {
        std::vector<bool> seen(map.size(), false);
        for (int v : map) {
            if (v < 0 || v >= (int)map.size() || seen[v]) return false;
            seen[v] = true;
        }
        return true;
    }
};

inline Perm perm_mul(const Perm& a, const Perm& b) {
    Perm r;
    r.map.resize(a.map.size());
    for (int i = 0; i < (int)a.map.size(); ++i) r.map[i] = b.map[a.map[i]];
    return r;
}

struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite group as a dense multiplication table over element indices
// 0..order-1. Identity is index 0 by construction everywhere in this library.
struct FiniteGroup {
    int order = 1;
    std::vector<std::vector<int>> mul;  // mul[a][b]
    int identity = 0;
    std::vector<int> inv;
    std::vector<std::string> labels;
    std::vector<Perm> perms;  // optional permutation realization, may be empty

    int op(int a, int b) const { return mul[a][b]; }
    int inverse_of(int a) const { return inv[a]; }
    int conj(int g, int x) const { return mul[mul[g][x]][inv[g]]; }  // g x g^-1

    int element_order(int a) const {
        int k = 1, x = a;
        while (x != identity) {
            x = mul[x][a];
            ++k;
        }
        return k;
    }

    long exponent() const {
        long e = 1;
        for (int a = 0; a < order; ++a) e = std::lcm(e, (long)element_order(a));
        return e;
    }

    bool is_abelian() const {
        for (int a = 0; a < order; ++a)
            for (int b = a + 1; b < order; ++b)
                if (mul[a][b] != mul[b][a]) return false;
        return true;
    }

    std::vector<int> center() const {
        std::vector<int> z;
        for (int a = 0; a < order; ++a) {
            bool central = true;
            for (int b = 0; b < order && central; ++b)
                if (mul[a][b] != mul[b][a]) central = false;
            if (central) z.push_back(a);
        }
        return z;
    }

    int power(int a, long k) const {
        int o = element_order(a);
        k %= o;
        if (k < 0) k += o;
        int r = identity;
        for (long i = 0; i < k; ++i) r = mul[r][a];
        return r;
    }

    const std::string& label(int a) const { return labels[a]; }

    // Exhaustive table validation; used by tests and for table input.
    void validate() const {
        if ((int)mul.size() != order) throw std::invalid_argument("bad mul table shape");
        for (int a = 0; a < order; ++a) {
            if ((int)mul[a].size() != order) throw std::invalid_argument("bad mul table shape");
            if (mul[identity][a] != a || mul[a][identity] != a)
                throw std::invalid_argument("identity table inconsistent");
            if (mul[a][inv[a]] != identity || mul[inv[a]][a] != identity)
                throw std::invalid_argument("inverse table inconsistent");
        }
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                for (int c = 0; c < order; ++c)
                    if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                        throw std::invalid_argument("multiplication not associative");
    }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Closure of a set of permutations under composition. Breadth-first, identity
// first; labels are reduced generator words in discovery order.
inline GroupPtr group_from_permutations(const std::vector<Perm>& generators, int max_order = 10000) {
    auto g = std::make_shared<FiniteGroup>();
    int degree = generators.empty() ? 1 : generators[0].degree();
    for (const auto& p : generators) {
        if (p.degree() != degree) throw std::invalid_argument("generators have mixed degrees");
        if (!p.is_valid()) throw std::invalid_argument("generator is not a permutation");
    }
    std::vector<Perm> elems{Perm::identity(degree)};
    std::map<Perm, int> index{{elems[0], 0}};
    std::vector<std::string> labels{"e"};
    for (size_t head = 0; head < elems.size(); ++head) {
        for (size_t gi = 0; gi < generators.size(); ++gi) {
            Perm q = perm_mul(elems[head], generators[gi]);
            if (index.count(q)) continue;
            if ((int)elems.size() >= max_order)
                throw SizeLimitError("group closure exceeds size cap " + std::to_string(max_order));
            index[q] = (int)elems.size();
            labels.push_back(head == 0 ? "g" + std::to_string(gi)
                                       : labels[head] + "*g" + std::to_string(gi));
            elems.push_back(std::move(q));
        }
    }
    int n = (int)elems.size();
    g->order = n;
    g->identity = 0;
    g->labels = std::move(labels);
    g->perms = elems;
    g->mul.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g->mul[a][b] = index.at(perm_mul(elems[a], elems[b]));
    g->inv.resize(n);
    for (int a = 0; a < n; ++a) g->inv[a] = index.at(elems[a].inverse());
    return g;
}

// Group from an explicit multiplication table. Relabels so the identity gets
// index 0 when necessary.
inline GroupPtr group_from_table(const std::vector<std::vector<int>>& mul,
                                 std::vector<std::string> labels = {}) {
    int n = (int)mul.size();
    if (n == 0) throw std::invalid_argument("empty table");
    int e = -1;
    for (int cand = 0; cand < n && e < 0; ++cand) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            if (mul[cand][a] != a || mul[a][cand] != a) ok = false;
        if (ok) e = cand;
    }
    if (e < 0) throw std::invalid_argument("table has no identity");
    std::vector<int> to_new(n), to_old(n);
    for (int i = 0; i < n; ++i) to_new[i] = i, to_old[i] = i;
    if (e != 0) {
        std::swap(to_new[e], to_new[0]);
        std::swap(to_old[e], to_old[0]);
    }
    auto g = std::make_shared<FiniteGroup>();
    g->order = n;
    g->identity = 0;
    g->mul.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g->mul[a][b] = to_new[mul[to_old[a]][to_old[b]]];
    g->inv.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g->mul[a][b] == 0) {
                g->inv[a] = b;
                break;
            }
    for (int a = 0; a < n; ++a)
        if (g->inv[a] < 0) throw std::invalid_argument("table has no inverse for some element");
    if (labels.empty()) {
        g->labels.resize(n);
        for (int a = 0; a < n; ++a) g->labels[a] = "x" + std::to_string(a);
    } else {
        g->labels.resize(n);
        for (int a = 0; a < n; ++a) g->labels[a] = labels[to_old[a]];
    }
    g->validate();
    return g;
}

// Build a group on 0..n-1 from a multiplication callback (used for product-set
// constructions whose associativity is established elsewhere).
inline GroupPtr make_group(int n, const std::function<int(int, int)>& f,
                           std::vector<std::string> labels = {}) {
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a][b] = f(a, b);
    int e = -1;
    for (int cand = 0; cand < n && e < 0; ++cand) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            if (mul[cand][a] != a || mul[a][cand] != a) ok = false;
        if (ok) e = cand;
    }
    if (e != 0) throw std::invalid_argument("make_group expects identity at index 0");
    auto g = std::make_shared<FiniteGroup>();
    g->order = n;
    g->identity = 0;
    g->mul = std::move(mul);
    g->inv.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g->mul[a][b] == 0 && g->mul[b][a] == 0) {
                g->inv[a] = b;
                break;
            }
    for (int a = 0; a < n; ++a)
        if (g->inv[a] < 0) throw std::invalid_argument("make_group: missing inverse");
    if (labels.empty()) {
        g->labels.resize(n);
        for (int a = 0; a < n; ++a) g->labels[a] = "x" + std::to_string(a);
    } else {
        g->labels = std::move(labels);
    }
    return g;
}

// Subgroup of a parent group: sorted parent indices plus a parent->local map.
struct Subgroup {
    GroupPtr parent;
    std::vector<int> elements;   // sorted parent indices
    std::vector<int> index_map;  // parent index -> local index, -1 if absent

    int size() const { return (int)elements.size(); }
    bool contains(int parent_index) const { return index_map[parent_index] >= 0; }
    int local(int parent_index) const {
        int l = index_map[parent_index];
        if (l < 0) throw std::invalid_argument("element not in subgroup");
        return l;
    }
    int global(int local_index) const { return elements[local_index]; }

    int mul_local(int a, int b) const {
        return local(parent->mul[elements[a]][elements[b]]);
    }
    int inv_local(int a) const { return local(parent->inv[elements[a]]); }
    int identity_local() const { return local(parent->identity); }

    // The subgroup as a standalone group; local index 0 is the identity
    // because parent identity has parent index 0 and elements are sorted.
    GroupPtr as_group() const {
        int n = size();
        auto g = std::make_shared<FiniteGroup>();
        g->order = n;
        g->identity = identity_local();
        if (g->identity != 0) throw std::logic_error("subgroup identity not at local index 0");
        g->mul.assign(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) g->mul[a][b] = mul_local(a, b);
        g->inv.resize(n);
        for (int a = 0; a < n; ++a) g->inv[a] = inv_local(a);
        g->labels.resize(n);
        for (int a = 0; a < n; ++a) g->labels[a] = parent->labels[elements[a]];
        if (!parent->perms.empty()) {
            g->perms.resize(n);
            for (int a = 0; a < n; ++a) g->perms[a] = parent->perms[elements[a]];
        }
        return g;
    }
};

inline Subgroup subgroup_from_elements(GroupPtr parent, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    Subgroup s;
    s.parent = std::move(parent);
    s.elements = std::move(elems);
    s.index_map.assign(s.parent->order, -1);
    for (int i = 0; i < (int)s.elements.size(); ++i) s.index_map[s.elements[i]] = i;
    // closure + identity + inverses
    if (!s.contains(s.parent->identity)) throw std::invalid_argument("subgroup misses identity");
    for (int a : s.elements) {
        if (!s.contains(s.parent->inv[a])) throw std::invalid_argument("subgroup not inverse-closed");
        for (int b : s.elements)
            if (!s.contains(s.parent->mul[a][b]))
                throw std::invalid_argument("subgroup not closed under multiplication");
    }
    return s;
}

inline Subgroup subgroup_generated(GroupPtr parent, const std::vector<int>& gens) {
    std::vector<int> elems{parent->identity};
    std::vector<bool> in(parent->order, false);
    in[parent->identity] = true;
    for (size_t head = 0; head < elems.size(); ++head)
        for (int gi : gens) {
            int x = parent->mul[elems[head]][gi];
            if (!in[x]) {
                in[x] = true;
                elems.push_back(x);
            }
        }
    return subgroup_from_elements(parent, std::move(elems));
}

inline Subgroup trivial_subgroup(GroupPtr parent) {
    return subgroup_generated(parent, {});
}

inline Subgroup full_subgroup(GroupPtr parent) {
    std::vector<int> all(parent->order);
    std::iota(all.begin(), all.end(), 0);
    return subgroup_from_elements(parent, std::move(all));
}

// Conjugacy classes, each sorted, ordered by minimal element index.
inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
    std::vector<std::vector<int>> classes;
    std::vector<bool> seen(g.order, false);
    for (int a = 0; a < g.order; ++a) {
        if (seen[a]) continue;
        std::vector<int> cls;
        for (int x = 0; x < g.order; ++x) {
            int c = g.conj(x, a);
            if (!seen[c]) {
                seen[c] = true;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

inline int count_elements_of_order(const FiniteGroup& g, int k) {
    int n = 0;
    for (int a = 0; a < g.order; ++a)
        if (g.element_order(a) == k) ++n;
    return n;
}

// A small generating set, greedily built in index order.
inline std::vector<int> small_generating_set(const FiniteGroup& g) {
    std::vector<int> gens;
    std::vector<bool> in(g.order, false);
    in[g.identity] = true;
    int covered = 1;
    auto grow = [&](int gen) {
        std::vector<int> frontier;
        for (int x = 0; x < g.order; ++x)
            if (in[x]) frontier.push_back(x);
        for (size_t h = 0; h < frontier.size(); ++h) {
            for (int y : gens) {
                int z = g.mul[frontier[h]][y];
                if (!in[z]) {
                    in[z] = true;
                    ++covered;
                    frontier.push_back(z);
                }
            }
            int z = g.mul[frontier[h]][gen];
            if (!in[z]) {
                in[z] = true;
                ++covered;
                frontier.push_back(z);
            }
        }
    };
    for (int a = 0; a < g.order && covered < g.order; ++a) {
        if (in[a]) continue;
        gens.push_back(a);
        grow(a);
    }
    return gens;
}

// Orders-of-elements profile, a cheap isomorphism invariant.
inline std::map<int, int> order_profile(const FiniteGroup& g) {
    std::map<int, int> prof;
    for (int a = 0; a < g.order; ++a) ++prof[g.element_order(a)];
    return prof;
}

}  // namespace bicross
