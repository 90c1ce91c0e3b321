#pragma once

#include "catalog.hpp"
#include "jordan.hpp"

namespace lie4 {

struct ClassificationResult {
    Instance instance;
    Mat witness;  // input basis -> catalog basis
    bool verified = false;
    std::string ideal;  // type of the codimension-one unimodular ideal used (dim 4)
};

// A family in raw (possibly out-of-region) parameters and the adapted basis in input coordinates.
struct Adapted {
    Family family;
    Vec params;
    std::vector<Vec> basis;
    std::string ideal;
};

namespace detail {

inline Mat shifted(const Mat& d, const Q& r) {
    Mat m = d;
    for (size_t i = 0; i < m.rows(); ++i) m(i, i) -= r;
    return m;
}

inline Vec combine(const std::vector<Vec>& basis, const Vec& c) {
    Vec v = zeros(basis[0].size());
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) v = v + c[i] * basis[i];
    return v;
}

inline std::vector<Vec> units(size_t n) {
    std::vector<Vec> u;
    for (size_t i = 0; i < n; ++i) u.push_back(unit(n, i));
    return u;
}

// First vector of the kernel of hi that is not in the kernel of lo.
inline Vec kernel_step(const Mat& hi, const Mat& lo) {
    Subspace klo = kernel_space(lo);
    for (auto& v : kernel(hi))
        if (!klo.contains(v)) return v;
    throw Error(Errc::InternalMismatch, "expected a generalized eigenvector");
}

// First kernel vector of m outside span(avoid).
inline Vec kernel_avoiding(const Mat& m, const std::vector<Vec>& avoid) {
    Subspace s = Subspace::span(avoid, m.cols());
    for (auto& v : kernel(m))
        if (!s.contains(v)) return v;
    throw Error(Errc::InternalMismatch, "kernel too small");
}

inline Q pick_sign_over(const Q& a, const Q& b) { return (a < 0 ? Q(-1) : Q(1)) / b; }

// Coordinates of ad(x) restricted to span(u), written in the basis u.
inline Mat restricted_ad(const LieAlgebra& g, const Vec& x, const std::vector<Vec>& u) {
    Mat U = Mat::from_cols(u, g.dim());
    Mat D(u.size(), u.size());
    for (size_t j = 0; j < u.size(); ++j) {
        auto c = solve(U, g.bracket(x, u[j]));
        if (!c) throw Error(Errc::InternalMismatch, "subspace is not ad-invariant");
        D.set_col(j, *c);
    }
    return D;
}

inline Adapted identify_dim_le3(const LieAlgebra& h) {
    size_t n = h.dim();
    if (!is_solvable(h)) throw Error(Errc::NotSolvable, "derived series does not terminate");
    if (n == 1) return {Family::R, {}, units(1), ""};
    auto d = derived(h);
    if (n == 2) {
        if (d.dim() == 0) return {Family::R2, {}, units(2), ""};
        Vec y = d.vector(0);
        Vec x = *first_outside(d, units(2));
        Q c = d.coords(h.bracket(x, y))[0];
        return {Family::AffR, {}, {Q(1) / c * x, y}, ""};
    }
    if (n != 3) throw Error(Errc::DimensionMismatch, "identify3 needs dim <= 3");
    if (d.dim() == 0) return {Family::R3, {}, units(3), ""};
    if (d.dim() == 1) {
        Vec z = d.vector(0);
        if (center(h).contains(z)) {
            for (size_t i = 0; i < 3; ++i)
                for (size_t j = i + 1; j < 3; ++j)
                    if (!is_zero(h.basis_bracket(i, j)))
                        return {Family::H3, {}, {unit(3, i), unit(3, j), h.basis_bracket(i, j)}, ""};
        }
        for (auto& e : units(3)) {
            Vec b = h.bracket(e, z);
            if (is_zero(b)) continue;
            Q c = d.coords(b)[0];
            auto zc = center(h);
            if (zc.dim() != 1) throw Error(Errc::InternalMismatch, "r3,0 center");
            return {Family::R3_lambda, {Q(0)}, {Q(1) / c * e, z, zc.vector(0)}, ""};
        }
        throw Error(Errc::InternalMismatch, "dim g' = 1 case");
    }
    if (d.dim() == 3) throw Error(Errc::NotSolvable, "g' = g");
    auto dv = d.vectors();
    Vec x = *first_outside(d, units(3));
    Mat T = restricted_ad(h, x, dv);
    auto jd = jordan_data(T);
    auto toH = [&](const Vec& c) { return combine(dv, c); };
    if (jd.all_linear()) {
        if (jd.factors.size() == 2) {
            Q r1 = jd.factors[0].root, r2 = jd.factors[1].root;
            Q big = r1, small = r2;
            if (abs(r1) < abs(r2) || (abs(r1) == abs(r2) && r1 < r2)) std::swap(big, small);
            Vec vb = kernel(shifted(T, big))[0], vs = kernel(shifted(T, small))[0];
            return {Family::R3_lambda, {small / big}, {Q(1) / big * x, toH(vb), toH(vs)}, ""};
        }
        Q r = jd.factors[0].root;
        if (r == 0) throw Error(Errc::InternalMismatch, "nilpotent action on g'");
        if (jd.diagonalizable()) return {Family::R3_lambda, {Q(1)}, {Q(1) / r * x, dv[0], dv[1]}, ""};
        Mat M = Q(1) / r * shifted(T, r);
        Vec w = kernel_step(M * M, M);
        return {Family::R3_gen, {}, {Q(1) / r * x, toH(M * w), toH(w)}, ""};
    }
    const auto& qf = jd.factors.back();
    if (!qf.im) throw Error(Errc::IrrationalParameterPath, "rotation speed " + to_string(qf.im_sq) + " is not a rational square");
    Q s = pick_sign_over(qf.re, *qf.im);
    Q lam = s * qf.re;
    Vec w = unit(2, 0);
    Vec f3 = lam * w - s * (T * w);
    return {Family::R3p_lambda, {lam}, {s * x, toH(w), toH(f3)}, ""};
}

inline Adapted case_abelian_ideal(const Vec& x0, const std::vector<Vec>& u, const Mat& D) {
    auto toG = [&](const Vec& c) { return combine(u, c); };
    auto jd = jordan_data(D);
    if (jd.all_linear()) {
        if (jd.factors.size() == 1) {
            Q r = jd.factors[0].root;
            auto blocks = jd.factors[0].blocks;
            Mat N = shifted(D, r);
            if (blocks.size() == 3) {
                if (r == 0) throw Error(Errc::InternalMismatch, "zero action on abelian ideal");
                return {Family::R4_mu_lambda, {Q(1), Q(1)}, {Q(1) / r * x0, u[0], u[1], u[2]}, "R^3"};
            }
            if (blocks.size() == 2) {
                Vec w = kernel_step(N * N, N);
                Vec nw = N * w;
                Vec k = kernel_avoiding(N, {nw});
                if (r == 0) return {Family::RxH3, {}, {toG(k), x0, toG(w), toG(nw)}, "R^3"};
                return {Family::R4_lambda, {Q(1)}, {Q(1) / r * x0, toG(k), toG(Q(1) / r * nw), toG(w)}, "R^3"};
            }
            Vec w = kernel_step(N * N * N, N * N);
            if (r == 0) return {Family::N4, {}, {x0, toG(w), toG(N * w), toG(N * (N * w))}, "R^3"};
            Mat M = Q(1) / r * N;
            return {Family::R4_gen, {}, {Q(1) / r * x0, toG(M * (M * w)), toG(M * w), toG(w)}, "R^3"};
        }
        // Non-diagonalizable with two distinct eigenvalues: simple l1, double l2 in one block.
        if (jd.factors.size() == 2 && !jd.diagonalizable()) {
            const auto& fa = jd.factors[0];
            const auto& fb = jd.factors[1];
            Q l1 = fa.multiplicity == 1 ? fa.root : fb.root;
            Q l2 = fa.multiplicity == 1 ? fb.root : fa.root;
            Mat N = shifted(D, l2);
            Vec w = kernel_step(N * N, N);
            Vec v1 = kernel(shifted(D, l1))[0];
            if (l1 == 0)
                return {Family::RxR3_gen, {}, {toG(v1), Q(1) / l2 * x0, toG(Q(1) / l2 * (N * w)), toG(w)}, "R^3"};
            return {Family::R4_lambda, {l2 / l1}, {Q(1) / l1 * x0, toG(v1), toG(Q(1) / l1 * (N * w)), toG(w)}, "R^3"};
        }
        std::vector<std::pair<Q, Vec>> eig;
        for (auto& f : jd.factors)
            for (auto& v : kernel(shifted(D, f.root))) eig.push_back({f.root, v});
        std::vector<std::pair<Q, Vec>> zero, nonzero;
        for (auto& e : eig) (e.first == 0 ? zero : nonzero).push_back(e);
        if (zero.size() == 2) {
            auto& [r, v] = nonzero[0];
            return {Family::RxR3_lambda, {Q(0)}, {toG(zero[0].second), Q(1) / r * x0, toG(v), toG(zero[1].second)}, "R^3"};
        }
        if (zero.size() == 1) {
            auto a = nonzero[0], b = nonzero[1];
            if (abs(a.first) < abs(b.first) || (abs(a.first) == abs(b.first) && a.first < b.first)) std::swap(a, b);
            return {Family::RxR3_lambda,
                    {b.first / a.first},
                    {toG(zero[0].second), Q(1) / a.first * x0, toG(a.second), toG(b.second)},
                    "R^3"};
        }
        if (zero.size() == 3) throw Error(Errc::InternalMismatch, "zero action on abelian ideal");
        Q r1 = nonzero[0].first;
        return {Family::R4_mu_lambda,
                {nonzero[1].first / r1, nonzero[2].first / r1},
                {Q(1) / r1 * x0, toG(nonzero[0].second), toG(nonzero[1].second), toG(nonzero[2].second)},
                "R^3"};
    }
    const auto& lf = jd.factors[0];
    const auto& qf = jd.factors[1];
    if (!qf.im) throw Error(Errc::IrrationalParameterPath, "rotation speed " + to_string(qf.im_sq) + " is not a rational square");
    Vec w = kernel(eval(qf.poly(), D))[0];
    Vec v1 = kernel(shifted(D, lf.root))[0];
    if (lf.root == 0) {
        Q s = pick_sign_over(qf.re, *qf.im);
        Q lam = s * qf.re;
        return {Family::RxR3p_lambda, {lam}, {toG(v1), s * x0, toG(w), toG(lam * w - s * (D * w))}, "R^3"};
    }
    Q s = Q(1) / *qf.im;
    Q lam = s * qf.re;
    return {Family::R4p_mu_lambda, {s * lf.root, lam}, {s * x0, toG(v1), toG(w), toG(lam * w - s * (D * w))}, "R^3"};
}

// Solve D - ad_v(w) = target(a) for w in v and the scalar a, where target(a) = a * shape.
inline std::pair<Vec, Q> normalize_outer(const LieAlgebra& g, const std::vector<Vec>& u, const Mat& D, const Mat& shape) {
    size_t k = u.size();
    std::vector<Mat> adu;
    for (size_t i = 0; i < k; ++i) {
        Mat m(k, k);
        Mat U = Mat::from_cols(u, g.dim());
        for (size_t j = 0; j < k; ++j) m.set_col(j, *solve(U, g.bracket(u[i], u[j])));
        adu.push_back(m);
    }
    Mat A(k * k, k + 1);
    Vec b(k * k);
    for (size_t r = 0; r < k; ++r)
        for (size_t c = 0; c < k; ++c) {
            size_t row = r * k + c;
            for (size_t i = 0; i < k; ++i) A(row, i) = adu[i](r, c);
            A(row, k) = shape(r, c);
            b[row] = D(r, c);
        }
    auto sol = solve(A, b);
    if (!sol) throw Error(Errc::InternalMismatch, "outer derivation normal form not reached");
    Vec w(sol->begin(), sol->begin() + static_cast<long>(k));
    return {w, (*sol)[k]};
}

inline Adapted case_heisenberg_ideal(const LieAlgebra& g, const Vec& x0, const std::vector<Vec>& u, const Mat& D) {
    // Clear the u3-components of D u1, D u2 by an inner correction.
    Q p = D(2, 1), q = -D(2, 0);
    Vec e0 = x0 - (p * u[0] + q * u[1]);
    Mat Dp = restricted_ad(g, e0, u);
    if (Dp(2, 0) != 0 || Dp(2, 1) != 0 || Dp(0, 2) != 0 || Dp(1, 2) != 0)
        throw Error(Errc::InternalMismatch, "h3 derivation normal form");
    Mat A(2, 2);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) A(i, j) = Dp(i, j);
    std::vector<Vec> uw{u[0], u[1]};
    auto toG = [&](const Vec& c) { return combine(uw, c); };
    if (A.is_zero()) return {Family::RxH3, {}, {e0, u[0], u[1], u[2]}, "h3"};
    auto jd = jordan_data(A);
    if (jd.all_linear()) {
        if (jd.factors.size() == 2) {
            Q ga = jd.factors[1].root, be = jd.factors[0].root;  // ga > be
            Vec w1 = toG(kernel(shifted(A, ga))[0]), w2 = toG(kernel(shifted(A, be))[0]);
            if (ga + be == 0) return {Family::D4, {}, {Q(1) / ga * e0, w1, w2, g.bracket(w1, w2)}, "h3"};
            return {Family::D4_lambda, {ga / (ga + be)}, {Q(1) / (ga + be) * e0, w1, w2, g.bracket(w1, w2)}, "h3"};
        }
        Q ga = jd.factors[0].root;
        if (jd.diagonalizable()) return {Family::D4_lambda, {Q(1, 2)}, {Q(1) / (2 * ga) * e0, u[0], u[1], u[2]}, "h3"};
        Mat N = shifted(A, ga);
        Vec w = kernel_step(N * N, N);
        if (ga == 0) {
            Vec f0 = toG(w), f2 = toG(-(A * w));
            return {Family::N4, {}, {f0, e0, f2, g.bracket(f0, f2)}, "h3"};
        }
        Vec f2 = toG(w), f1 = toG(Q(1) / ga * (N * w));
        return {Family::H4, {}, {Q(1) / ga * e0, f1, f2, g.bracket(f1, f2)}, "h3"};
    }
    const auto& qf = jd.factors[0];
    if (!qf.im) throw Error(Errc::IrrationalParameterPath, "rotation speed " + to_string(qf.im_sq) + " is not a rational square");
    Q s = pick_sign_over(qf.re, *qf.im);
    Q lam = s * qf.re;
    Vec w = unit(2, 0);
    Vec f1 = toG(w), f2 = toG(lam * w - s * (A * w));
    return {Family::D4p_lambda, {lam}, {s * e0, f1, f2, g.bracket(f1, f2)}, "h3"};
}

// chi kernel when chi != 0, else g' padded by basis vectors; either way an ideal with trace-free action.
inline Subspace choose_ideal(const LieAlgebra& g) {
    if (!is_zero(chi_form(g))) return unimodular_kernel(g);
    Subspace v = derived(g);
    for (auto& e : units(g.dim())) {
        if (v.dim() + 1 == g.dim()) break;
        if (!v.contains(e)) v = sum(v, Subspace::span({e}, g.dim()));
    }
    return v;
}

inline Adapted identify_dim4(const LieAlgebra& g) {
    if (!is_solvable(g)) throw Error(Errc::NotSolvable, "derived series does not terminate");
    if (derived(g).dim() == 0) return {Family::R4, {}, units(4), "R^3"};
    Subspace v = choose_ideal(g);
    Vec x0 = *first_outside(v, units(4));
    auto vb = v.vectors();
    LieAlgebra hv = restrict_to(g, vb);
    Adapted av = identify_dim_le3(hv);
    std::vector<Vec> u;
    for (auto& c : av.basis) u.push_back(combine(vb, c));
    Mat D = restricted_ad(g, x0, u);
    switch (av.family) {
    case Family::R3: return case_abelian_ideal(x0, u, D);
    case Family::H3: return case_heisenberg_ideal(g, x0, u, D);
    case Family::R3p_lambda: {
        if (av.params[0] != 0) break;
        Mat shape(3, 3);
        shape(1, 1) = 1;
        shape(2, 2) = 1;
        auto [w, a] = normalize_outer(g, u, D, shape);
        Vec e0 = x0 - combine(u, w);
        if (a == 0) return {Family::RxR3p_lambda, {Q(0)}, {e0, u[0], u[1], u[2]}, "e(2)"};
        return {Family::AffC, {}, {Q(1) / a * e0, u[0], u[2], u[1]}, "e(2)"};
    }
    case Family::R3_lambda: {
        if (av.params[0] != -1) break;
        Mat shape(3, 3);
        shape(2, 2) = 1;
        auto [w, t] = normalize_outer(g, u, D, shape);
        Vec e0 = x0 - combine(u, w);
        if (t == 0) return {Family::RxR3_lambda, {Q(-1)}, {e0, u[0], u[1], u[2]}, "e(1,1)"};
        Vec f0 = Q(1) / t * e0;
        return {Family::AffRxAffR, {}, {f0, u[0] + f0, u[1], u[2]}, "e(1,1)"};
    }
    default: break;
    }
    throw Error(Errc::InternalMismatch, "codimension-one ideal is not unimodular");
}

inline ClassificationResult finish(const LieAlgebra& g, const Adapted& a) {
    size_t n = g.dim();
    Mat P = Mat::from_cols(a.basis, n);
    if (det(P) == 0) throw Error(Errc::InternalMismatch, "adapted basis is singular for " + std::string(info(a.family).name));
    if (change_basis(g, P) != make_raw(a.family, a.params))
        throw Error(Errc::InternalMismatch, "adapted basis does not reproduce " + std::string(info(a.family).name));
    Canonical c = canonicalize(a.family, a.params);
    Mat psi = c.witness * inverse(P);
    if (!verify_isomorphism(g, make(c.instance), psi))
        throw Error(Errc::InternalMismatch, "composed witness fails for " + instance_name(c.instance));
    return {c.instance, psi, true, a.ideal};
}

}  // namespace detail

inline ClassificationResult identify3(const LieAlgebra& g) {
    if (g.dim() > 3 || g.dim() == 0) throw Error(Errc::DimensionMismatch, "identify3 needs 1 <= dim <= 3");
    return detail::finish(g, detail::identify_dim_le3(g));
}

// Codimension-one unimodular ideal and its isomorphism type.
inline std::pair<Subspace, std::string> codim1_unimodular_ideal(const LieAlgebra& g) {
    if (g.dim() != 4) throw Error(Errc::DimensionMismatch, "codim1_unimodular_ideal needs dim 4");
    Subspace v = detail::choose_ideal(g);
    return {v, detail::identify_dim4(g).ideal};
}

inline ClassificationResult identify(const LieAlgebra& g) {
    if (g.dim() <= 3) return identify3(g);
    if (g.dim() != 4) throw Error(Errc::DimensionMismatch, "identify supports dim <= 4");
    return detail::finish(g, detail::identify_dim4(g));
}

inline bool completely_solvable(Family f) {
    switch (f) {
    case Family::R3p_lambda:
    case Family::RxR3p_lambda:
    case Family::AffC:
    case Family::R4p_mu_lambda:
    case Family::D4p_lambda: return false;
    default: return true;
    }
}

struct Fingerprint {
    size_t dim_derived = 0;
    CommClass comm = CommClass::Zero;
    size_t dim_center = 0;
    size_t dim_center_derived = 0;
    bool nilpotent = false;
    std::optional<Instance> quotient;  // g / z(g') when g' is Heisenberg

    bool operator==(const Fingerprint& o) const {
        return dim_derived == o.dim_derived && comm == o.comm && dim_center == o.dim_center &&
               dim_center_derived == o.dim_center_derived && nilpotent == o.nilpotent && quotient == o.quotient;
    }
};

inline Fingerprint fingerprint(const LieAlgebra& g) {
    Fingerprint f;
    auto d = derived(g);
    auto z = center(g);
    f.dim_derived = d.dim();
    f.comm = computed_commutator_class(g);
    f.dim_center = z.dim();
    f.dim_center_derived = intersect(z, d).dim();
    f.nilpotent = is_nilpotent(g);
    if (f.comm == CommClass::Heisenberg) {
        LieAlgebra dg = restrict_to(g, d);
        auto zd = center(dg);
        Subspace zg = Subspace::span({detail::combine(d.vectors(), zd.vector(0))}, g.dim());
        f.quotient = identify3(quotient(g, zg)).instance;
    }
    return f;
}

struct ScalarConjugacy {
    Q gamma;
    Mat P;
};

namespace detail {

inline bool same_jordan(const JordanData& a, const JordanData& b) {
    if (a.factors.size() != b.factors.size()) return false;
    for (size_t i = 0; i < a.factors.size(); ++i) {
        const auto &x = a.factors[i], &y = b.factors[i];
        if (x.degree != y.degree || x.multiplicity != y.multiplicity || x.blocks != y.blocks) return false;
        if (x.degree == 1 && x.root != y.root) return false;
        if (x.degree == 2 && (x.re != y.re || x.im_sq != y.im_sq)) return false;
    }
    return true;
}

// k-th root of a rational when it is rational; both signs for even k.
inline std::vector<Q> rational_roots_of(const Q& v, int k) {
    std::vector<Q> out;
    if (k == 1) return {v};
    if (k == 2) {
        Q s;
        if (rational_sqrt(v, s)) {
            out.push_back(s);
            if (s != 0) out.push_back(-s);
        }
        return out;
    }
    // k == 3
    mpz_class n = v.get_num(), d = v.get_den();
    bool neg = n < 0;
    if (neg) n = -n;
    mpz_class rn, rd;
    mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 3);
    mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 3);
    if (rn * rn * rn == n && rd * rd * rd == d) {
        Q r(neg ? mpz_class(-rn) : rn, rd);
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

}  // namespace detail

// gamma != 0 and invertible P with gamma * B = P A P^{-1}, when both exist over Q.
inline std::optional<ScalarConjugacy> scalar_conjugate(const Mat& A, const Mat& B) {
    size_t n = A.rows();
    UPoly ca = charpoly(A), cb = charpoly(B);
    // char poly of gamma B has coefficient gamma^k c_{n-k}(B).
    std::vector<Q> cands;
    bool constrained = false;
    for (int k = 1; k <= static_cast<int>(n); ++k) {
        Q a = ca[n - k], b = cb[n - k];
        if ((a == 0) != (b == 0)) return std::nullopt;
        if (a == 0) continue;
        auto roots = detail::rational_roots_of(a / b, k);
        if (!constrained) {
            cands = roots;
            constrained = true;
        } else {
            std::vector<Q> keep;
            for (auto& c : cands)
                if (std::find(roots.begin(), roots.end(), c) != roots.end()) keep.push_back(c);
            cands = keep;
        }
    }
    if (!constrained) cands = {Q(1)};
    std::sort(cands.begin(), cands.end());
    for (auto& gam : cands) {
        if (gam == 0) continue;
        Mat gB = gam * B;
        JordanData ja, jb;
        try {
            ja = jordan_data(A);
            jb = jordan_data(gB);
        } catch (const Error&) {
            continue;
        }
        if (!detail::same_jordan(ja, jb)) continue;
        // P A - gB P = 0 as a linear system in the n^2 entries of P.
        size_t N = n * n;
        Mat S(N, N);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k) {
                    S(i * n + j, i * n + k) += A(k, j);
                    S(i * n + j, k * n + j) -= gB(i, k);
                }
        auto ker = kernel(S);
        for (long t = 1; t < 50; ++t) {
            Mat P(n, n);
            for (size_t b = 0; b < ker.size(); ++b) {
                Q c = Q(static_cast<long>((b * 7 + 3) * t % 11 + 1));
                for (size_t e = 0; e < N; ++e) P(e / n, e % n) += c * ker[b][e];
            }
            if (det(P) != 0) return ScalarConjugacy{gam, P};
        }
    }
    return std::nullopt;
}

// The semidirect product R e0 |x_A R^3 with ad(e0) = A.
inline LieAlgebra semidirect_line(const Mat& A) {
    std::vector<BracketEntry> br;
    for (size_t j = 0; j < 3; ++j) {
        Vec c = zeros(4);
        for (size_t i = 0; i < 3; ++i) c[i + 1] = A(i, j);
        if (!is_zero(c)) br.push_back({0, j + 1, c});
    }
    return LieAlgebra(4, br);
}

}  // namespace lie4
