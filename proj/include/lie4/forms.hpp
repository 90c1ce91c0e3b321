#pragma once

#include "product.hpp"

namespace lie4 {

// (x, y) = x^T B y
inline Q pair(const Mat& B, const Vec& x, const Vec& y) { return dot(x, B * y); }

inline bool is_symmetric(const Mat& B) { return B == transpose(B); }

// ([x,y],z) + (y,[x,z]) = 0 on all basis triples.
inline bool is_invariant(const LieAlgebra& g, const Mat& B) {
    if (!is_symmetric(B)) throw Error(Errc::PreconditionViolated, "form is not symmetric");
    size_t n = g.dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = j; k < n; ++k)
                if (pair(B, g.basis_bracket(i, j), unit(n, k)) + pair(B, unit(n, j), g.basis_bracket(i, k)) != 0)
                    return false;
    return true;
}

inline bool is_isotropic(const Mat& B, const Subspace& S) {
    auto vs = S.vectors();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i; j < vs.size(); ++j)
            if (pair(B, vs[i], vs[j]) != 0) return false;
    return true;
}

// Symmetric matrix from upper-triangular unknowns in row order.
inline Mat sym_from(const Vec& u, size_t n) {
    Mat B(n, n);
    size_t t = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            B(i, j) = u[t];
            B(j, i) = u[t++];
        }
    return B;
}

struct FormSpace {
    std::vector<Mat> basis;
    Poly det;  // determinant of sum t_k basis_k, variables t_k
    bool has_nondegenerate() const { return !det.is_zero(); }
};

namespace detail {

inline Poly det_poly(const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    if (n == 0) return Poly(Q(1));
    if (n == 1) return m[0][0];
    Poly r;
    for (size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[i][j]);
            minor.push_back(row);
        }
        Poly term = m[0][c] * det_poly(minor);
        r = c % 2 ? r - term : r + term;
    }
    return r;
}

}  // namespace detail

inline FormSpace invariant_form_space(const LieAlgebra& g) {
    size_t n = g.dim(), m = n * (n + 1) / 2;
    std::vector<Vec> rows;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = j; k < n; ++k) {
                // linear functional in the unknowns: ([ei,ej],ek) + (ej,[ei,ek])
                Vec row = zeros(m);
                for (size_t t = 0; t < m; ++t) {
                    Vec u = zeros(m);
                    u[t] = 1;
                    Mat B = sym_from(u, n);
                    row[t] = pair(B, g.basis_bracket(i, j), unit(n, k)) + pair(B, unit(n, j), g.basis_bracket(i, k));
                }
                if (!is_zero(row)) rows.push_back(row);
            }
    std::vector<Vec> ker;
    if (rows.empty())
        for (size_t t = 0; t < m; ++t) ker.push_back(unit(m, t));
    else
        ker = kernel(Mat::from_rows(rows, m));
    FormSpace fs;
    for (auto& k : ker) {
        Mat B = sym_from(k, n);
        if (!is_invariant(g, B)) throw Error(Errc::InternalMismatch, "kernel form is not invariant");
        fs.basis.push_back(B);
    }
    if (fs.basis.size() > kMaxVars) {
        // too many unknowns for the polynomial determinant; only R^4 gets here, where Id is invariant
        if (!is_invariant(g, Mat::identity(n))) throw Error(Errc::PreconditionViolated, "form space too large");
        fs.det = Poly(Q(1));
        return fs;
    }
    std::vector<std::vector<Poly>> G(n, std::vector<Poly>(n));
    for (size_t k = 0; k < fs.basis.size(); ++k)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (fs.basis[k](i, j) != 0) G[i][j] = G[i][j] + fs.basis[k](i, j) * Poly::var(k);
    fs.det = detail::det_poly(G);
    return fs;
}

inline bool in_form_space(const FormSpace& fs, const Mat& B) {
    size_t n = B.rows();
    std::vector<Vec> cols;
    for (auto& b : fs.basis) {
        Vec v;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) v.push_back(b(i, j));
        cols.push_back(v);
    }
    Vec target;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) target.push_back(B(i, j));
    if (cols.empty()) return is_zero(target);
    return solve(Mat::from_cols(cols, n * n), target).has_value();
}

// (positive, negative, zero) counts by symmetric congruence over Q.
struct Signature {
    size_t pos = 0, neg = 0, zero = 0;
};

inline Signature signature(Mat B) {
    size_t n = B.rows();
    Signature s;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && B(p, p) == 0) ++p;
        if (p == n) {
            // no diagonal pivot: use an off-diagonal entry, e_k <- e_k + e_j
            size_t j = n;
            for (size_t a = k; a < n && j == n; ++a)
                for (size_t b = a + 1; b < n; ++b)
                    if (B(a, b) != 0) {
                        p = a;
                        j = b;
                        break;
                    }
            if (j == n) {
                s.zero += n - k;
                return s;
            }
            for (size_t c = 0; c < n; ++c) B(p, c) += B(j, c);
            for (size_t r = 0; r < n; ++r) B(r, p) += B(r, j);
        }
        if (p != k) {
            for (size_t c = 0; c < n; ++c) std::swap(B(p, c), B(k, c));
            for (size_t r = 0; r < n; ++r) std::swap(B(r, p), B(r, k));
        }
        Q d = B(k, k);
        (d > 0 ? s.pos : s.neg)++;
        for (size_t r = k + 1; r < n; ++r) {
            Q f = B(r, k) / d;
            if (f == 0) continue;
            for (size_t c = k; c < n; ++c) B(r, c) -= f * B(k, c);
            for (size_t c = k; c < n; ++c) B(c, r) = B(r, c);
        }
        for (size_t r = k + 1; r < n; ++r) B(k, r) = B(r, k) = 0;
    }
    return s;
}

struct ManinTriple {
    Mat form;
    Subspace plus, minus;
    bool verified = false;
    std::vector<std::string> failures;
};

inline ManinTriple verify_manin(const LieAlgebra& g, const Mat& B, const std::vector<Vec>& plus,
                                const std::vector<Vec>& minus) {
    size_t n = g.dim();
    ManinTriple m{B, Subspace::span(plus, n), Subspace::span(minus, n), false, {}};
    if (!is_symmetric(B)) m.failures.push_back("not symmetric");
    else if (!is_invariant(g, B)) m.failures.push_back("not invariant");
    if (det(B) == 0) m.failures.push_back("degenerate");
    if (!is_subalgebra(g, m.plus)) m.failures.push_back("left side not a subalgebra");
    if (!is_subalgebra(g, m.minus)) m.failures.push_back("right side not a subalgebra");
    if (!is_isotropic(B, m.plus)) m.failures.push_back("left side not isotropic");
    if (!is_isotropic(B, m.minus)) m.failures.push_back("right side not isotropic");
    if (!complementary(m.plus, m.minus) || m.plus.dim() != m.minus.dim()) m.failures.push_back("not complementary");
    m.verified = m.failures.empty();
    return m;
}

inline std::string join_failures(const std::vector<std::string>& f) {
    std::string s;
    for (size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + f[i];
    return s.empty() ? "verified" : s;
}

// (e0,e3) = (e1,e2) = alpha
inline Mat d4_alpha_form(const Q& alpha) {
    Mat B(4, 4);
    B(0, 3) = B(3, 0) = alpha;
    B(1, 2) = B(2, 1) = alpha;
    return B;
}

inline std::vector<Vec> d4_aff_isotropic(const Q& mu) {
    return {unit(4, 0) + mu * unit(4, 2), unit(4, 1) - mu * unit(4, 3)};
}

inline TableReport verify_table_manin() {
    TableReport rep{"manin", {}};
    auto add = [&](const std::string& id, const std::string& subj, const std::string& claim, bool ok, const std::string& d) {
        rep.add({"manin/" + id, subj, claim, ok, d, ""});
    };
    LieAlgebra d4 = make(Family::D4, {});
    auto fs = invariant_form_space(d4);
    for (Q a : {Q(1), Q(-2), Q(1, 3)}) {
        Mat B = d4_alpha_form(a);
        bool ok = is_invariant(d4, B) && det(B) != 0 && in_form_space(fs, B);
        auto sg = signature(B);
        add("alpha/" + to_string(a), "d4", "alpha-form is an invariant metric", ok,
            "signature (" + std::to_string(sg.pos) + "," + std::to_string(sg.neg) + "), space dim " +
                std::to_string(fs.basis.size()));
    }
    Mat B = d4_alpha_form(1);
    std::vector<std::pair<Q, Q>> mn = {{0, 1}, {-2, 1}, {-1, Q(1, 3)}, {2, 0}, {Q(1, 3), -1}, {1, 2}};
    for (auto [mu, nu] : mn) {
        auto m = verify_manin(d4, B, d4_aff_isotropic(mu), d4_aff_isotropic(nu));
        bool para = false;
        if (m.verified) {
            auto ps = product_from_decomposition(d4, m.plus.vectors(), m.minus.vectors());
            para = ps.paracomplex && decomposition_type(d4, ps).kind == DecompKind::AffAff;
        }
        add("i/" + to_string(mu) + "," + to_string(nu), "d4", "family (i) is a Manin triple of type aff><aff",
            m.verified && para, join_failures(m.failures));
    }
    for (Q mu : {Q(-1), Q(0), Q(1, 2)}) {
        auto m = verify_manin(d4, B, d4_aff_isotropic(mu), d4_aff_isotropic(mu));
        bool only_compl = m.failures.size() == 1 && m.failures[0] == "not complementary";
        add("i-equal/" + to_string(mu), "d4", "family (i) with equal parameters fails complementarity only", only_compl,
            join_failures(m.failures));
    }
    for (Q mu : {Q(-2), Q(-1), Q(0), Q(1), Q(2), Q(1, 3)}) {
        auto m = verify_manin(d4, B, d4_aff_isotropic(mu), {unit(4, 2), unit(4, 3)});
        bool para = false;
        if (m.verified) {
            auto ps = product_from_decomposition(d4, m.plus.vectors(), m.minus.vectors());
            para = decomposition_type(d4, ps).kind == DecompKind::AffR2;
        }
        add("ii/" + to_string(mu), "d4", "family (ii) is a Manin triple of type aff><R2", m.verified && para,
            join_failures(m.failures));
    }
    {
        // phi(e0) = -e0, phi(e1) = e2, phi(e2) = e1, phi(e3) = -e3
        Mat phi(4, 4);
        phi(0, 0) = -1;
        phi(2, 1) = 1;
        phi(1, 2) = 1;
        phi(3, 3) = -1;
        bool aut = verify_isomorphism(d4, d4, phi);
        bool iso = transpose(phi) * B * phi == B;
        add("phi", "d4", "phi is an isometric automorphism", aut && iso,
            std::string("automorphism ") + (aut ? "yes" : "no") + ", isometry " + (iso ? "yes" : "no"));
    }
    {
        LieAlgebra g = make(Family::D4p_lambda, {Q(0)});
        auto f = invariant_form_space(g);
        auto r = paracomplex_search(g);
        bool empty = true;
        for (auto& x : r) empty = empty && x.status == SearchStatus::DecidedEmpty;
        add("d'4,0", "d'4,lambda (0)", "nondegenerate invariant form but no paracomplex structure",
            f.has_nondegenerate() && empty,
            "form space dim " + std::to_string(f.basis.size()) + ", det " + f.det.str({"t0", "t1", "t2", "t3"}) +
                ", paracomplex search " + (empty ? "decided-empty" : "not empty"));
    }
    {
        auto f = invariant_form_space(make(Family::H4, {}));
        add("h4", "h4", "no nondegenerate invariant form", !f.has_nondegenerate(),
            "form space dim " + std::to_string(f.basis.size()) + ", det identically zero: " +
                (f.det.is_zero() ? "yes" : "no"));
    }
    {
        // only d4 and d'4,0 among the non-abelian grid members carry an invariant metric
        std::string with;
        bool ok = true;
        for (auto& in : grid()) {
            if (info(in.family).dim != 4 || in.family == Family::R4) continue;
            bool nd = invariant_form_space(make(in)).has_nondegenerate();
            bool want = in.family == Family::D4 || (in.family == Family::D4p_lambda && in.params[0] == 0);
            if (nd) with += (with.empty() ? "" : ", ") + instance_name(in);
            ok = ok && nd == want;
        }
        add("grid", "grid", "invariant metrics exactly on d4 and d'4,0", ok, "nondegenerate on: " + with);
    }
    return rep;
}

}  // namespace lie4
