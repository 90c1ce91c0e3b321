#pragma once

#include "linear.hpp"

#include <optional>

namespace lie4 {

// Univariate polynomial, coefficients low to high.
using UPoly = std::vector<Q>;

inline void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline Q eval(const UPoly& p, const Q& x) {
    Q r = 0;
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

inline UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Q(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline UPoly sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Q(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

// Quotient and remainder of a by b (b nonzero).
inline std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
    trim(a);
    int db = degree(b);
    if (degree(a) < db) return {{}, a};
    UPoly q(a.size() - b.size() + 1, Q(0));
    while (degree(a) >= db && !a.empty()) {
        size_t shift = a.size() - b.size();
        Q f = a.back() / b.back();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

inline UPoly monic(UPoly p) {
    trim(p);
    if (p.empty()) return p;
    Q lc = p.back();
    for (auto& c : p) c /= lc;
    return p;
}

inline UPoly gcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return monic(a);
}

inline UPoly derivative(const UPoly& p) {
    UPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(Q(static_cast<long>(i)) * p[i]);
    trim(d);
    return d;
}

// det(tI - A) by Faddeev-LeVerrier.
inline UPoly charpoly(const Mat& a) {
    size_t n = a.rows();
    UPoly c(n + 1, Q(0));
    c[n] = 1;
    Mat M(n, n);
    for (size_t k = 1; k <= n; ++k) {
        Mat t = M;
        for (size_t i = 0; i < n; ++i) t(i, i) += c[n - k + 1];
        M = a * t;
        c[n - k] = -trace(M) / Q(static_cast<long>(k));
    }
    return c;
}

// Evaluate p at a matrix argument.
inline Mat eval(const UPoly& p, const Mat& a) {
    size_t n = a.rows();
    Mat r(n, n);
    for (size_t i = p.size(); i-- > 0;) {
        r = r * a;
        for (size_t d = 0; d < n; ++d) r(d, d) += p[i];
    }
    return r;
}

namespace detail {

inline std::vector<mpz_class> divisors(mpz_class m) {
    if (m < 0) m = -m;
    std::vector<mpz_class> out;
    if (m == 0) return out;
    for (mpz_class d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            if (d * d != m) out.push_back(m / d);
        }
    }
    return out;
}

// Some rational root of p, if any (rational root theorem on the integer scaling).
inline std::optional<Q> rational_root(const UPoly& p) {
    if (p.size() < 2) return std::nullopt;
    if (p[0] == 0) return Q(0);
    mpz_class l = 1;
    for (auto& c : p) l = lcm(l, c.get_den());
    std::vector<mpz_class> z;
    for (auto& c : p) z.push_back(mpz_class(c * l));
    auto num = divisors(z.front());
    auto den = divisors(z.back());
    std::vector<Q> cands;
    for (auto& a : num)
        for (auto& b : den) {
            Q q(a, b);
            q.canonicalize();
            cands.push_back(q);
            cands.push_back(-q);
        }
    std::sort(cands.begin(), cands.end());
    for (auto& q : cands)
        if (eval(p, q) == 0) return q;
    return std::nullopt;
}

}  // namespace detail

// One irreducible factor of the characteristic polynomial.
struct JordanFactor {
    int degree = 1;           // 1 or 2
    Q root;                   // degree 1: the eigenvalue
    Q re, im_sq;              // degree 2: roots re +- i sqrt(im_sq), im_sq > 0
    std::optional<Q> im;      // sqrt(im_sq) when rational
    int multiplicity = 0;
    std::vector<int> blocks;  // Jordan block sizes, descending
    UPoly poly() const {
        if (degree == 1) return {-root, Q(1)};
        return {re * re + im_sq, -2 * re, Q(1)};
    }
};

struct JordanData {
    UPoly charpoly;
    std::vector<JordanFactor> factors;  // linear factors by ascending root, then quadratics

    const JordanFactor* linear(const Q& r) const {
        for (auto& f : factors)
            if (f.degree == 1 && f.root == r) return &f;
        return nullptr;
    }
    bool all_linear() const {
        for (auto& f : factors)
            if (f.degree != 1) return false;
        return true;
    }
    bool diagonalizable() const {
        for (auto& f : factors)
            for (int b : f.blocks)
                if (b != 1) return false;
        return true;
    }
    UPoly reconstruct() const {
        UPoly p{Q(1)};
        for (auto& f : factors)
            for (int k = 0; k < f.multiplicity; ++k) p = mul(p, f.poly());
        return p;
    }
};

namespace detail {
inline std::vector<int> block_sizes(const Mat& a, const UPoly& factor, int mult) {
    size_t n = a.rows();
    int deg = degree(factor);
    Mat P = eval(factor, a);
    std::vector<int> kd{0};
    Mat pk = Mat::identity(n);
    for (int k = 1; k <= mult; ++k) {
        pk = pk * P;
        kd.push_back(static_cast<int>(n - rank(pk)) / deg);
    }
    // ge[k] = number of blocks of size >= k
    std::vector<int> ge(mult + 2, 0);
    for (int k = 1; k <= mult; ++k) ge[k] = kd[k] - kd[k - 1];
    std::vector<int> sizes;
    for (int k = mult; k >= 1; --k)
        for (int c = 0; c < ge[k] - ge[k + 1]; ++c) sizes.push_back(k);
    return sizes;
}
}  // namespace detail

// Rational Jordan data; refuses irreducible factors of degree >= 3 and real irrational pairs.
inline JordanData jordan_data(const Mat& a) {
    if (a.rows() != a.cols()) throw Error(Errc::DimensionMismatch, "jordan_data needs a square matrix");
    JordanData jd;
    jd.charpoly = charpoly(a);
    UPoly rest = jd.charpoly;
    std::vector<std::pair<Q, int>> roots;
    while (degree(rest) >= 1) {
        auto r = detail::rational_root(rest);
        if (!r) break;
        int m = 0;
        while (degree(rest) >= 1 && eval(rest, *r) == 0) {
            rest = divmod(rest, UPoly{-*r, Q(1)}).first;
            ++m;
        }
        roots.push_back({*r, m});
    }
    std::sort(roots.begin(), roots.end());
    for (auto& [r, m] : roots) {
        JordanFactor f;
        f.degree = 1;
        f.root = r;
        f.multiplicity = m;
        f.blocks = detail::block_sizes(a, f.poly(), m);
        jd.factors.push_back(f);
    }
    rest = monic(rest);
    if (degree(rest) <= 0) return jd;
    UPoly quad;
    int qmult = 0;
    if (degree(rest) == 2) {
        quad = rest;
        qmult = 1;
    } else if (degree(rest) == 4) {
        UPoly g = gcd(rest, derivative(rest));
        if (degree(g) == 2 && mul(g, g) == rest) {
            quad = g;
            qmult = 2;
        }
    }
    if (quad.empty()) throw Error(Errc::IrreducibleCubicOrWorse, "characteristic polynomial has an irreducible factor of degree >= 3");
    // t^2 + p t + q with roots re +- sqrt(re^2 - q)
    Q re = -quad[1] / 2;
    Q im_sq = quad[0] - re * re;
    if (im_sq <= 0)
        throw Error(Errc::IrrationalParameterPath, "real eigenvalues outside the rationals");
    JordanFactor f;
    f.degree = 2;
    f.re = re;
    f.im_sq = im_sq;
    Q s;
    if (rational_sqrt(im_sq, s)) f.im = s;
    f.multiplicity = qmult;
    f.blocks = detail::block_sizes(a, f.poly(), qmult);
    jd.factors.push_back(f);
    return jd;
}

}  // namespace lie4
