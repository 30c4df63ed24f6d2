#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace bicross {

namespace detail {

// Dense polynomial helpers over Q, low degree first.
using Poly = std::vector<Rat>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

// Exact division, requires divisor to divide evenly.
inline Poly poly_div_exact(Poly num, const Poly& den) {
    Poly q(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, Rat(0));
    for (long i = (long)num.size() - 1; i >= (long)den.size() - 1; --i) {
        Rat c = num[i] / den.back();
        q[i - (den.size() - 1)] = c;
        if (c != 0)
            for (size_t j = 0; j < den.size(); ++j) num[i - (den.size() - 1) + j] -= c * den[j];
    }
    poly_trim(num);
    if (!num.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

inline int mobius(long n) {
    int mu = 1;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    if (n > 1) mu = -mu;
    return mu;
}

inline long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

// N-th cyclotomic polynomial by the Moebius product formula
//   Phi_N = prod_{d|N} (x^d - 1)^{mu(N/d)}.
inline Poly cyclotomic_poly(long n) {
    Poly num{Rat(1)};
    std::vector<Poly> dens;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) {
            int mu = mobius(n / d);
            if (mu == 0) continue;
            Poly f(d + 1, Rat(0));
            f[0] = -1;
            f[d] = 1;
            if (mu == 1)
                num = poly_mul(num, f);
            else
                dens.push_back(f);
        }
    for (const auto& f : dens) num = poly_div_exact(num, f);
    return num;
}

struct CycContext {
    long n = 1;
    long deg = 1;                         // phi(n)
    Poly phi;                             // monic, size deg+1
    std::vector<std::vector<Rat>> xpow;   // x^k mod phi for k = 0..2deg-2, dense length deg
    std::vector<long> conj_exp;           // (n-1)*i mod n for i = 0..n-1
    std::vector<std::vector<Rat>> zpow;   // x^k mod phi for k = 0..n-1
};

inline std::shared_ptr<const CycContext> cyc_context(long n) {
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const CycContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n <= 0) throw std::invalid_argument("conductor must be positive");
    auto ctx = std::make_shared<CycContext>();
    ctx->n = n;
    ctx->phi = cyclotomic_poly(n);
    ctx->deg = (long)ctx->phi.size() - 1;
    long d = ctx->deg;
    ctx->xpow.resize(std::max<long>(2 * d - 1, 1));
    for (long k = 0; k < (long)ctx->xpow.size(); ++k) {
        std::vector<Rat> v(d, Rat(0));
        if (k < d) {
            v[k] = 1;
        } else {
            // x^k = x * x^(k-1) reduced mod phi
            const auto& prev = ctx->xpow[k - 1];
            std::vector<Rat> shifted(d + 1, Rat(0));
            for (long i = 0; i < d; ++i) shifted[i + 1] = prev[i];
            Rat lead = shifted[d];
            for (long i = 0; i < d; ++i) v[i] = shifted[i] - lead * ctx->phi[i];
        }
        ctx->xpow[k] = std::move(v);
    }
    ctx->zpow.resize(n);
    for (long k = 0; k < n; ++k) {
        if (k < std::min<long>(d, (long)ctx->xpow.size())) {
            ctx->zpow[k] = ctx->xpow[k];
        } else {
            // z^k = z^(k-1) * z, shift and reduce mod phi
            const auto& prev = ctx->zpow[k - 1];
            std::vector<Rat> shifted(d + 1, Rat(0));
            for (long i = 0; i < d; ++i) shifted[i + 1] = prev[i];
            Rat lead = shifted[d];
            std::vector<Rat> v(d, Rat(0));
            for (long i = 0; i < d; ++i) v[i] = shifted[i] - lead * ctx->phi[i];
            ctx->zpow[k] = std::move(v);
        }
    }
    cache[n] = ctx;
    return ctx;
}

}  // namespace detail

// Element of the cyclotomic field Q(zeta_N), stored in the power basis
// 1, z, ..., z^(phi(N)-1) modulo the N-th cyclotomic polynomial. Conjugation
// is complex conjugation z -> z^(N-1). Values with distinct conductors are
// combined by embedding into Q(zeta_lcm).
class CycScalar {
  public:
    CycScalar() : n_(1), c_(1, Rat(0)) {}
    explicit CycScalar(const Rat& r) : n_(1), c_(1, r) {}
    explicit CycScalar(long v) : n_(1), c_(1, Rat(v)) {}
    CycScalar(long n, std::vector<Rat> coeffs) : n_(n), c_(std::move(coeffs)) {
        auto ctx = detail::cyc_context(n_);
        if ((long)c_.size() != ctx->deg) throw std::invalid_argument("coefficient count != phi(N)");
    }

    static CycScalar zero() { return CycScalar(); }
    static CycScalar one() { return CycScalar(Rat(1)); }

    // Primitive N-th root of unity.
    static CycScalar zeta(long n) { return zeta_pow(n, 1); }

    // zeta_N^k for any integer k.
    static CycScalar zeta_pow(long n, long k) {
        auto ctx = detail::cyc_context(n);
        k %= n;
        if (k < 0) k += n;
        return CycScalar(n, ctx->zpow[k]);
    }

    long conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_one() const { return *this == one(); }

    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    Rat rational_part() const {
        if (!is_rational()) throw std::logic_error("not a rational value");
        return c_[0];
    }

    // Reinterpret in Q(zeta_m); m must be a multiple of the conductor.
    CycScalar embedded(long m) const {
        if (m == n_) return *this;
        if (m % n_ != 0) throw std::invalid_argument("embedding needs conductor divisibility");
        auto ctx = detail::cyc_context(m);
        long step = m / n_;
        std::vector<Rat> out(ctx->deg, Rat(0));
        for (long i = 0; i < (long)c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const auto& b = ctx->zpow[(step * i) % m];
            for (long j = 0; j < ctx->deg; ++j) out[j] += c_[i] * b[j];
        }
        return CycScalar(m, std::move(out));
    }

    friend CycScalar operator+(const CycScalar& a, const CycScalar& b) {
        if (a.n_ != b.n_) return lifted_op(a, b, '+');
        CycScalar r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend CycScalar operator-(const CycScalar& a, const CycScalar& b) {
        if (a.n_ != b.n_) return lifted_op(a, b, '-');
        CycScalar r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
        return r;
    }
    CycScalar operator-() const {
        CycScalar r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend CycScalar operator*(const CycScalar& a, const CycScalar& b) {
        if (a.n_ != b.n_) return lifted_op(a, b, '*');
        auto ctx = detail::cyc_context(a.n_);
        long d = ctx->deg;
        std::vector<Rat> conv(2 * d - 1, Rat(0));
        for (long i = 0; i < d; ++i) {
            if (a.c_[i] == 0) continue;
            for (long j = 0; j < d; ++j) {
                if (b.c_[j] == 0) continue;
                conv[i + j] += a.c_[i] * b.c_[j];
            }
        }
        std::vector<Rat> out(d, Rat(0));
        for (long k = 0; k < 2 * d - 1; ++k) {
            if (conv[k] == 0) continue;
            if (k < d) {
                out[k] += conv[k];
            } else {
                const auto& b2 = ctx->xpow[k];
                for (long j = 0; j < d; ++j) out[j] += conv[k] * b2[j];
            }
        }
        return CycScalar(a.n_, std::move(out));
    }
    CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
    CycScalar& operator-=(const CycScalar& o) { return *this = *this - o; }
    CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }

    CycScalar inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        // Extended Euclid of the representative polynomial with Phi_N over Q.
        auto ctx = detail::cyc_context(n_);
        detail::Poly r0 = ctx->phi, r1(c_.begin(), c_.end());
        detail::poly_trim(r1);
        detail::Poly s0{}, s1{Rat(1)};  // coefficients of *this in the combination
        while (true) {
            // divide r0 by r1: r0 = q*r1 + r2
            detail::Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
            detail::Poly r2 = r0;
            for (long i = (long)r2.size() - 1; i >= (long)r1.size() - 1; --i) {
                if (r2[i] == 0) continue;
                Rat c = r2[i] / r1.back();
                q[i - (r1.size() - 1)] = c;
                for (size_t j = 0; j < r1.size(); ++j) r2[i - (r1.size() - 1) + j] -= c * r1[j];
            }
            detail::poly_trim(r2);
            // s2 = s0 - q*s1
            detail::Poly qs = detail::poly_mul(q, s1);
            detail::Poly s2 = s0;
            if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
            for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
            detail::poly_trim(s2);
            if (r2.empty()) {
                // r1 is the gcd; it must be a nonzero constant (Phi_N has no
                // roots in common with a nonzero reduced representative).
                if (r1.size() != 1) throw std::logic_error("cyclotomic inverse: nonunit gcd");
                std::vector<Rat> out(ctx->deg, Rat(0));
                for (size_t i = 0; i < s1.size(); ++i) out[i] = s1[i] / r1[0];
                return CycScalar(n_, std::move(out));
            }
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
    }
    friend CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inverse(); }

    // Complex conjugation, z -> z^(N-1). A field automorphism fixing Q.
    CycScalar conj() const {
        if (n_ <= 2) return *this;
        auto ctx = detail::cyc_context(n_);
        std::vector<Rat> out(ctx->deg, Rat(0));
        for (long i = 0; i < (long)c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const auto& b = ctx->zpow[((n_ - 1) * i) % n_];
            for (long j = 0; j < ctx->deg; ++j) out[j] += c_[i] * b[j];
        }
        return CycScalar(n_, std::move(out));
    }

    CycScalar pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        CycScalar r = one(), base = *this;
        while (k) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    friend bool operator==(const CycScalar& a, const CycScalar& b) {
        if (a.n_ == b.n_) return a.c_ == b.c_;
        long m = std::lcm(a.n_, b.n_);
        return a.embedded(m).c_ == b.embedded(m).c_;
    }
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0)
                os << rat_to_string(c_[i]);
            else if (c_[i] == 1)
                os << "z" << n_ << "^" << i;
            else
                os << rat_to_string(c_[i]) << "*z" << n_ << "^" << i;
        }
        return os.str();
    }

  private:
    static CycScalar lifted_op(const CycScalar& a, const CycScalar& b, char op) {
        long m = std::lcm(a.n_, b.n_);
        CycScalar x = a.embedded(m), y = b.embedded(m);
        switch (op) {
            case '+': return x + y;
            case '-': return x - y;
            default: return x * y;
        }
    }

    long n_;
    std::vector<Rat> c_;
};

inline CycScalar operator*(long a, const CycScalar& b) { return CycScalar(a) * b; }

}  // namespace bicross
