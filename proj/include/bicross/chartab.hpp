#pragma once

#include "group.hpp"
#include "linalg.hpp"
#include "matched_pair.hpp"

namespace bicross {

namespace modp {

inline long mulmod(long a, long b, long p) { return (a * b) % p; }

inline long powmod(long a, long e, long p) {
    a %= p;
    if (a < 0) a += p;
    long r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline long invmod(long a, long p) { return powmod(a, p - 2, p); }

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline long primitive_root(long p) {
    std::vector<long> fac;
    long m = p - 1;
    for (long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            fac.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) fac.push_back(m);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : fac)
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

using FpMat = std::vector<std::vector<long>>;

// Kernel basis of an m x n matrix over F_p.
inline std::vector<std::vector<long>> fp_kernel(FpMat m, long p, long ncols) {
    long rows = (long)m.size();
    std::vector<long> pivot_col;
    long r = 0;
    for (long c = 0; c < ncols && r < rows; ++c) {
        long piv = -1;
        for (long i = r; i < rows; ++i)
            if (m[i][c] % p != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[r]);
        long inv = invmod(m[r][c], p);
        for (long j = c; j < ncols; ++j) m[r][j] = mulmod(m[r][j], inv, p);
        for (long i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            long f = m[i][c];
            for (long j = c; j < ncols; ++j) {
                m[i][j] = (m[i][j] - mulmod(f, m[r][j], p)) % p;
                if (m[i][j] < 0) m[i][j] += p;
            }
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_piv(ncols, false);
    for (long c : pivot_col) is_piv[c] = true;
    std::vector<std::vector<long>> basis;
    for (long free = 0; free < ncols; ++free) {
        if (is_piv[free]) continue;
        std::vector<long> x(ncols, 0);
        x[free] = 1;
        for (long i = 0; i < (long)pivot_col.size(); ++i)
            x[pivot_col[i]] = (p - m[i][free]) % p;
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace modp

// Character table computed by the Dixon-Burnside method: class-sum matrices
// are simultaneously diagonalised over F_p for a prime p = 1 (mod exponent),
// then character values are lifted to Q(zeta_exponent) by discrete Fourier
// inversion of the eigenvalue multiplicities.
struct CharacterTable {
    GroupPtr g;
    std::vector<std::vector<int>> classes;  // sorted; class 0 = {identity}
    std::vector<int> class_of;
    std::vector<int> inverse_class;
    long exponent = 1;
    std::vector<std::vector<CycScalar>> chi;  // chi[r][classIndex]
    std::vector<long> degree;

    long num_classes() const { return (long)classes.size(); }
    const CycScalar& value(long r, int element) const { return chi[r][class_of[element]]; }
    long trivial_index() const {
        for (long r = 0; r < num_classes(); ++r) {
            bool triv = true;
            for (long c = 0; c < num_classes() && triv; ++c)
                if (!(chi[r][c] == CycScalar::one())) triv = false;
            if (triv) return r;
        }
        throw std::logic_error("no trivial character");
    }
};

inline CharacterTable character_table(GroupPtr gp) {
    const FiniteGroup& g = *gp;
    CharacterTable ct;
    ct.g = gp;
    ct.classes = conjugacy_classes(g);
    long k = (long)ct.classes.size();
    ct.class_of.assign(g.order, -1);
    for (long c = 0; c < k; ++c)
        for (int x : ct.classes[c]) ct.class_of[x] = (int)c;
    ct.inverse_class.resize(k);
    for (long c = 0; c < k; ++c) ct.inverse_class[c] = ct.class_of[g.inv[ct.classes[c][0]]];
    ct.exponent = g.exponent();
    long e = ct.exponent;

    // prime p = 1 (mod e), large enough to recover degrees and multiplicities
    long bound = 2;
    while (bound * bound <= 4 * g.order) ++bound;  // bound > 2 sqrt(|G|)
    long p = e + 1;
    while (!(modp::is_prime(p) && p > bound && (p - 1) % e == 0)) p += e;
    long t = modp::primitive_root(p);
    long ze = modp::powmod(t, (p - 1) / e, p);  // fixed e-th root of unity mod p

    // class multiplication matrices A_i[j][m] = #{x in C_i : x^-1 z_m in C_j}
    std::vector<modp::FpMat> A(k, modp::FpMat(k, std::vector<long>(k, 0)));
    for (long i = 0; i < k; ++i)
        for (long m = 0; m < k; ++m) {
            int zm = ct.classes[m][0];
            for (int x : ct.classes[i]) ++A[i][ct.class_of[g.mul[g.inv[x]][zm]]][m];
        }

    // split the coordinate space into common eigenvectors over F_p
    std::vector<std::vector<std::vector<long>>> spaces;  // list of bases
    {
        std::vector<std::vector<long>> full;
        for (long i = 0; i < k; ++i) {
            std::vector<long> v(k, 0);
            v[i] = 1;
            full.push_back(std::move(v));
        }
        spaces.push_back(std::move(full));
    }
    for (long i = 1; i < k; ++i) {
        std::vector<std::vector<std::vector<long>>> next;
        for (auto& basis : spaces) {
            if (basis.size() == 1) {
                next.push_back(std::move(basis));
                continue;
            }
            long dimv = (long)basis.size();
            // matrix of A_i on the subspace: A_i * b_j expressed in basis
            // by solving; instead compute kernels of (A_i - lambda) composed
            // with inclusion, for each candidate lambda in F_p.
            long found = 0;
            for (long lam = 0; lam < p && found < dimv; ++lam) {
                modp::FpMat m(k, std::vector<long>(dimv, 0));
                for (long j = 0; j < dimv; ++j)
                    for (long r = 0; r < k; ++r) {
                        long acc = 0;
                        for (long c = 0; c < k; ++c)
                            acc = (acc + modp::mulmod(A[i][r][c], basis[j][c], p)) % p;
                        acc = (acc - modp::mulmod(lam, basis[j][r], p)) % p;
                        if (acc < 0) acc += p;
                        m[r][j] = acc;
                    }
                auto ker = modp::fp_kernel(std::move(m), p, dimv);
                if (ker.empty()) continue;
                std::vector<std::vector<long>> sub;
                for (auto& coeffs : ker) {
                    std::vector<long> v(k, 0);
                    for (long j = 0; j < dimv; ++j)
                        for (long r = 0; r < k; ++r)
                            v[r] = (v[r] + modp::mulmod(coeffs[j], basis[j][r], p)) % p;
                    sub.push_back(std::move(v));
                }
                found += (long)sub.size();
                next.push_back(std::move(sub));
            }
            if (found != dimv)
                throw InternalConsistencyError("class matrix eigenspaces do not fill the space");
        }
        spaces = std::move(next);
        bool all1 = true;
        for (auto& b : spaces) all1 = all1 && b.size() == 1;
        if (all1) break;
    }
    if ((long)spaces.size() != k)
        throw InternalConsistencyError("character count != class count in Dixon splitting");

    // normalize eigenvectors to central characters, recover degrees and values
    std::vector<std::vector<long>> omegas;  // omega[r][class]
    for (auto& basis : spaces) {
        auto v = basis[0];
        if (v[0] % p == 0) throw InternalConsistencyError("central character vanishes at e");
        long inv0 = modp::invmod(v[0], p);
        for (auto& x : v) x = modp::mulmod(x, inv0, p);
        omegas.push_back(std::move(v));
    }
    std::vector<long> degrees_mod(k), degrees(k);
    std::vector<std::vector<long>> chi_mod(k, std::vector<long>(k));
    for (long r = 0; r < k; ++r) {
        long S = 0;
        for (long c = 0; c < k; ++c) {
            long term = modp::mulmod(omegas[r][c], omegas[r][ct.inverse_class[c]], p);
            S = (S + modp::mulmod(term, modp::invmod((long)ct.classes[c].size(), p), p)) % p;
        }
        long d2 = modp::mulmod(g.order % p, modp::invmod(S, p), p);
        long d = -1;
        for (long x = 1; 2 * x < p; ++x)
            if (modp::mulmod(x, x, p) == d2) {
                d = x;
                break;
            }
        if (d < 0) throw InternalConsistencyError("character degree is not a square mod p");
        degrees_mod[r] = d % p;
        degrees[r] = d;
        for (long c = 0; c < k; ++c)
            chi_mod[r][c] = modp::mulmod(modp::mulmod(degrees_mod[r], omegas[r][c], p),
                                         modp::invmod((long)ct.classes[c].size(), p), p);
    }

    // lift to Q(zeta_e) via eigenvalue multiplicities on each cyclic subgroup
    std::vector<std::vector<int>> power_class(k);
    std::vector<long> class_elt_order(k);
    for (long c = 0; c < k; ++c) {
        int rep = ct.classes[c][0];
        long n = g.element_order(rep);
        class_elt_order[c] = n;
        power_class[c].resize(n);
        int x = g.identity;
        for (long l = 0; l < n; ++l) {
            power_class[c][l] = ct.class_of[x];
            x = g.mul[x][rep];
        }
    }
    ct.chi.assign(k, std::vector<CycScalar>(k, CycScalar::zero()));
    ct.degree = degrees;
    for (long r = 0; r < k; ++r)
        for (long c = 0; c < k; ++c) {
            long n = class_elt_order[c];
            long zn = modp::powmod(ze, e / n, p);
            CycScalar val = CycScalar::zero();
            for (long j = 0; j < n; ++j) {
                long cj = 0;
                for (long l = 0; l < n; ++l) {
                    long zexp = modp::powmod(zn, (n - (j * l) % n) % n, p);
                    cj = (cj + modp::mulmod(chi_mod[r][power_class[c][l]], zexp, p)) % p;
                }
                cj = modp::mulmod(cj, modp::invmod(n, p), p);
                if (cj > degrees[r])
                    throw InternalConsistencyError("lifted multiplicity exceeds the degree");
                if (cj != 0)
                    val += CycScalar(cj) * CycScalar::zeta_pow(e, (e / n) * j);
            }
            ct.chi[r][c] = val;
        }

    // canonical order: by degree, then lexicographically by value strings
    std::vector<long> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    auto key = [&](long r) {
        std::string s;
        for (long c = 0; c < k; ++c) s += ct.chi[r][c].to_string() + "|";
        return s;
    };
    std::vector<std::string> keys(k);
    for (long r = 0; r < k; ++r) keys[r] = key(r);
    std::sort(perm.begin(), perm.end(), [&](long a, long b) {
        if (ct.degree[a] != ct.degree[b]) return ct.degree[a] < ct.degree[b];
        return keys[a] < keys[b];
    });
    {
        auto chi2 = ct.chi;
        auto deg2 = ct.degree;
        for (long r = 0; r < k; ++r) {
            ct.chi[r] = chi2[perm[r]];
            ct.degree[r] = deg2[perm[r]];
        }
    }
    // put the trivial character first
    for (long r = 0; r < k; ++r) {
        bool triv = true;
        for (long c = 0; c < k && triv; ++c) triv = ct.chi[r][c] == CycScalar::one();
        if (triv) {
            std::swap(ct.chi[0], ct.chi[r]);
            std::swap(ct.degree[0], ct.degree[r]);
            break;
        }
    }

    // exact verification: degrees, first column, row orthogonality
    long sum_sq = 0;
    for (long r = 0; r < k; ++r) {
        sum_sq += degrees[r] * degrees[r];
        if (!(ct.chi[r][0] == CycScalar(ct.degree[r])))
            throw InternalConsistencyError("character degree mismatch at identity");
    }
    if (sum_sq != g.order) throw InternalConsistencyError("sum of squared degrees != |G|");
    for (long r = 0; r < k; ++r)
        for (long s = 0; s < k; ++s) {
            CycScalar acc = CycScalar::zero();
            for (long c = 0; c < k; ++c)
                acc += CycScalar((long)ct.classes[c].size()) * ct.chi[r][c] *
                       ct.chi[s][ct.inverse_class[c]];
            CycScalar expect = r == s ? CycScalar(g.order) : CycScalar::zero();
            if (!(acc == expect))
                throw InternalConsistencyError("character row orthogonality fails");
        }
    return ct;
}

// ---------------------------------------------------------------------------
// Exact decomposition of a representation over Q(zeta) into isotypic pieces,
// with explicit irreducible copies and intertwiners for multiplicity > 1.
// ---------------------------------------------------------------------------
// The aligned `copies` bases realize the multiplicity space: copy i is the
// image of copy 1 under a module isomorphism sending basis vector k to
// basis vector k, so a moduli point lambda in P(k^n) corresponds to the
// submodule spanned by sum_i lambda_i copies[i][k] over k.
struct Constituent {
    long char_index = -1;
    long degree = 0;
    long multiplicity = 0;
    std::vector<Vec> isotypic_basis;        // ambient coordinates
    std::vector<std::vector<Vec>> copies;   // multiplicity-many aligned submodule bases
};

inline std::vector<Vec> moduli_submodule(const Constituent& con, const std::vector<CycScalar>& lambda) {
    if ((long)lambda.size() != con.multiplicity)
        throw std::invalid_argument("lambda length != multiplicity");
    std::vector<Vec> basis;
    for (long k = 0; k < con.degree; ++k) {
        Vec v(con.copies[0][k].size(), CycScalar::zero());
        for (long i = 0; i < con.multiplicity; ++i)
            for (size_t x = 0; x < v.size(); ++x) v[x] += lambda[i] * con.copies[i][k][x];
        basis.push_back(std::move(v));
    }
    return basis;
}

struct RepDecomposition {
    CharacterTable table;
    std::vector<Constituent> constituents;  // char_index increasing
};

namespace detail_rep {

// Matrix of the restriction of an ambient operator to span(basis), exact.
inline Mat restrict_to(const Mat& op, const std::vector<Vec>& basis) {
    long w = (long)basis.size();
    long n = (long)basis[0].size();
    Mat cols(n, w);
    for (long j = 0; j < w; ++j)
        for (long i = 0; i < n; ++i) cols.a[i][j] = basis[j][i];
    Mat r(w, w);
    for (long j = 0; j < w; ++j) {
        Vec img = mat_vec(op, basis[j]);
        auto coords = solve(cols, img);
        if (!coords) throw InternalConsistencyError("operator does not preserve the subspace");
        for (long i = 0; i < w; ++i) r.a[i][j] = (*coords)[i];
    }
    return r;
}

inline std::vector<Vec> image_basis(const Mat& op) {
    std::vector<Vec> cols;
    for (long j = 0; j < op.cols; ++j) {
        Vec c(op.rows);
        for (long i = 0; i < op.rows; ++i) c[i] = op.a[i][j];
        cols.push_back(std::move(c));
    }
    // row reduce the transposed collection to get an independent subset
    Mat m((long)cols.size(), op.rows);
    for (long i = 0; i < (long)cols.size(); ++i) m.a[i] = cols[i];
    auto pivots = row_echelon(m);
    std::vector<Vec> basis;
    for (long r = 0; r < (long)pivots.size(); ++r) basis.push_back(m.a[r]);
    return basis;
}

}  // namespace detail_rep

// rho: one matrix per group element (local index). Conductor of scalars must
// contain zeta_exponent; all arithmetic is exact.
inline RepDecomposition decompose_rep(GroupPtr gp, const std::vector<Mat>& rho,
                                      const CharacterTable& ct) {
    const FiniteGroup& g = *gp;
    long dim = rho.empty() ? 0 : rho[0].rows;
    RepDecomposition out;
    out.table = ct;
    long k = ct.num_classes();
    long e = ct.exponent;

    for (long r = 0; r < k; ++r) {
        // multiplicity from characters
        CycScalar m_acc = CycScalar::zero();
        for (int x = 0; x < g.order; ++x) m_acc += ct.value(r, g.inv[x]) * rho[x].trace();
        m_acc = m_acc * CycScalar(Rat(1, g.order));
        if (!m_acc.is_rational() || m_acc.rational_part().get_den() != 1)
            throw InternalConsistencyError("non-integral multiplicity");
        long mult = m_acc.rational_part().get_num().get_si();
        if (mult == 0) continue;

        Constituent con;
        con.char_index = r;
        con.degree = ct.degree[r];
        con.multiplicity = mult;

        // isotypic projector
        Mat P(dim, dim);
        for (int x = 0; x < g.order; ++x) {
            CycScalar c = ct.value(r, g.inv[x]);
            if (c.is_zero()) continue;
            P = mat_add(P, mat_scale(c, rho[x]));
        }
        P = mat_scale(CycScalar(Rat(ct.degree[r], g.order)), P);
        con.isotypic_basis = detail_rep::image_basis(P);
        if ((long)con.isotypic_basis.size() != mult * con.degree)
            throw InternalConsistencyError("isotypic dimension mismatch");

        if (mult == 1) {
            con.copies.push_back(con.isotypic_basis);
        } else {
            // Find a cyclic anchor (z, j) or a commuting pair whose joint
            // eigenspace meets the irreducible exactly once. All eigenvalue
            // multiplicities come from character values, so this is exact.
            const auto& basis = con.isotypic_basis;
            long w = (long)basis.size();
            std::vector<Mat> rrho(g.order);  // restriction of rho to W
            for (int x = 0; x < g.order; ++x) rrho[x] = detail_rep::restrict_to(rho[x], basis);

            auto irr_mult = [&](const std::vector<std::pair<int, long>>& zs) {
                // multiplicity of the joint eigenvalue prod zeta^{j_i} in the
                // irreducible character r for commuting elements z_i
                long total = 1;
                for (auto& [z, j] : zs) total *= g.element_order(z);
                CycScalar acc = CycScalar::zero();
                std::function<void(size_t, int, long)> rec = [&](size_t idx, int prod, long phase) {
                    if (idx == zs.size()) {
                        acc += ct.value(r, prod) * CycScalar::zeta_pow(e, phase % e);
                        return;
                    }
                    auto [z, j] = zs[idx];
                    long n = g.element_order(z);
                    int x = g.identity;
                    for (long l = 0; l < n; ++l) {
                        rec(idx + 1, g.mul[prod][x], phase + (e / n) * ((n - (j * l) % n) % n));
                        x = g.mul[x][z];
                    }
                };
                rec(0, g.identity, 0);
                acc = acc * CycScalar(Rat(1, total));
                if (!acc.is_rational() || acc.rational_part().get_den() != 1)
                    throw InternalConsistencyError("non-integral eigenvalue multiplicity");
                return acc.rational_part().get_num().get_si();
            };
            auto joint_projector = [&](const std::vector<std::pair<int, long>>& zs) {
                Mat E = Mat::identity(w);
                for (auto& [z, j] : zs) {
                    long n = g.element_order(z);
                    Mat acc(w, w);
                    Mat pw = Mat::identity(w);
                    for (long l = 0; l < n; ++l) {
                        acc = mat_add(acc, mat_scale(
                                               CycScalar::zeta_pow(e, (e / n) * ((n - (j * l) % n) % n)),
                                               pw));
                        pw = mat_mul(pw, rrho[z]);
                    }
                    acc = mat_scale(CycScalar(Rat(1, n)), acc);
                    E = mat_mul(E, acc);
                }
                return E;
            };

            std::vector<std::pair<int, long>> anchor;
            for (int z = 0; z < g.order && anchor.empty(); ++z) {
                long n = g.element_order(z);
                for (long j = 0; j < n && anchor.empty(); ++j)
                    if (irr_mult({{z, j}}) == 1) anchor = {{z, j}};
            }
            for (int z1 = 0; z1 < g.order && anchor.empty(); ++z1) {
                long n1 = g.element_order(z1);
                for (int z2 = z1 + 1; z2 < g.order && anchor.empty(); ++z2) {
                    if (g.mul[z1][z2] != g.mul[z2][z1]) continue;
                    long n2 = g.element_order(z2);
                    for (long j1 = 0; j1 < n1 && anchor.empty(); ++j1)
                        for (long j2 = 0; j2 < n2 && anchor.empty(); ++j2)
                            if (irr_mult({{z1, j1}, {z2, j2}}) == 1) anchor = {{z1, j1}, {z2, j2}};
                }
            }
            if (anchor.empty())
                throw InternalConsistencyError(
                    "no multiplicity-one cyclic eigenspace found for isotypic splitting");

            Mat E = joint_projector(anchor);
            auto anchor_basis = detail_rep::image_basis(E);  // in W coordinates
            if ((long)anchor_basis.size() != mult)
                throw InternalConsistencyError("anchor eigenspace dimension != multiplicity");

            // commutant of the restricted representation
            auto gens = small_generating_set(g);
            if (gens.empty()) gens.push_back(g.identity);
            long unknowns = w * w;
            Mat sys((long)gens.size() * w * w, unknowns);
            long row = 0;
            for (int zi : gens) {
                const Mat& R = rrho[zi];
                // R T - T R = 0
                for (long i = 0; i < w; ++i)
                    for (long j = 0; j < w; ++j) {
                        for (long l = 0; l < w; ++l) {
                            sys.a[row][l * w + j] += R.a[i][l];
                            sys.a[row][i * w + l] -= R.a[l][j];
                        }
                        ++row;
                    }
            }
            auto comm = kernel_basis(sys);
            if ((long)comm.size() != mult * mult)
                throw InternalConsistencyError("commutant dimension != multiplicity^2");

            // solve for c_i in the commutant: c_i w_1 = w_i, c_i w_a = 0 (a>1)
            Mat cond(w * mult, (long)comm.size());
            std::vector<Vec> rhs_cols(mult, Vec(w * mult, CycScalar::zero()));
            for (long b = 0; b < (long)comm.size(); ++b) {
                // apply commutant element b to each anchor vector
                for (long a = 0; a < mult; ++a) {
                    for (long i = 0; i < w; ++i) {
                        CycScalar acc = CycScalar::zero();
                        for (long j = 0; j < w; ++j) acc += comm[b][i * w + j] * anchor_basis[a][j];
                        cond.a[a * w + i][b] = acc;
                    }
                }
            }
            for (long i = 0; i < mult; ++i)
                for (long l = 0; l < w; ++l) rhs_cols[i][0 * w + l] = anchor_basis[i][l];

            std::vector<Mat> cmaps;
            for (long i = 0; i < mult; ++i) {
                auto sol = solve(cond, rhs_cols[i]);
                if (!sol) throw InternalConsistencyError("commutant interpolation failed");
                Mat ci(w, w);
                for (long b = 0; b < (long)comm.size(); ++b) {
                    if ((*sol)[b].is_zero()) continue;
                    for (long x = 0; x < w; ++x)
                        for (long y = 0; y < w; ++y) ci.a[x][y] += (*sol)[b] * comm[b][x * w + y];
                }
                cmaps.push_back(std::move(ci));
            }
            // c_1 is idempotent; its image is one irreducible copy
            if (!(mat_mul(cmaps[0], cmaps[0]) == cmaps[0]))
                throw InternalConsistencyError("splitting idempotent is not idempotent");
            auto u1 = detail_rep::image_basis(cmaps[0]);  // W coordinates
            if ((long)u1.size() != con.degree)
                throw InternalConsistencyError("irreducible copy has wrong dimension");

            auto to_ambient = [&](const Vec& wc) {
                Vec v(basis[0].size(), CycScalar::zero());
                for (long j = 0; j < w; ++j)
                    for (size_t i = 0; i < v.size(); ++i) v[i] += wc[j] * basis[j][i];
                return v;
            };
            for (long i = 0; i < mult; ++i) {
                std::vector<Vec> copy;
                for (const auto& ub : u1) copy.push_back(to_ambient(mat_vec(cmaps[i], ub)));
                con.copies.push_back(std::move(copy));
            }
        }
        out.constituents.push_back(std::move(con));
    }

    // completeness: dimensions add up
    long total = 0;
    for (const auto& c : out.constituents) total += c.multiplicity * c.degree;
    if (total != dim) throw InternalConsistencyError("decomposition dimensions do not add up");
    return out;
}

// A nonzero intertwiner T with rho_B(g) T = T rho_A(g) for all g, or nullopt.
// Inputs are two invariant subspaces given by bases in ambient coordinates.
inline std::optional<Mat> find_intertwiner(const FiniteGroup& g, const std::vector<Mat>& rho,
                                           const std::vector<Vec>& basisA,
                                           const std::vector<Vec>& basisB) {
    long a = (long)basisA.size(), b = (long)basisB.size();
    std::vector<Mat> ra, rb;
    auto gens = small_generating_set(g);
    if (gens.empty()) gens.push_back(g.identity);
    for (int z : gens) {
        ra.push_back(detail_rep::restrict_to(rho[z], basisA));
        rb.push_back(detail_rep::restrict_to(rho[z], basisB));
    }
    Mat sys((long)gens.size() * b * a, b * a);
    long row = 0;
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        for (long i = 0; i < b; ++i)
            for (long j = 0; j < a; ++j) {
                for (long l = 0; l < b; ++l) sys.a[row][l * a + j] += rb[gi].a[i][l];
                for (long l = 0; l < a; ++l) sys.a[row][i * a + l] -= ra[gi].a[l][j];
                ++row;
            }
    }
    auto ker = kernel_basis(sys);
    if (ker.empty()) return std::nullopt;
    Mat T(b, a);
    for (long i = 0; i < b; ++i)
        for (long j = 0; j < a; ++j) T.a[i][j] = ker[0][i * a + j];
    return T;
}

}  // namespace bicross
