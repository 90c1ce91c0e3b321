#pragma once

#include "linear.hpp"

#include <map>
#include <string>
#include <tuple>

namespace lie4 {

struct BracketEntry {
    size_t i, j;
    Vec coeffs;
};

struct JacobiDefect {
    size_t i, j, k;
    Vec defect;
};

class LieAlgebra;
std::vector<JacobiDefect> validate(const LieAlgebra& g);

// Real Lie algebra given by structure constants [e_i, e_j] = sum_k c_ij^k e_k.
// Only i < j is stored; the full table is kept for fast evaluation.
class LieAlgebra {
public:
    LieAlgebra() = default;

    // Validating constructor; throws JacobiViolation with the first defect.
    LieAlgebra(size_t n, const std::vector<BracketEntry>& brackets, std::vector<std::string> labels = {})
        : LieAlgebra(unchecked(n, brackets, std::move(labels))) {
        auto d = validate(*this);
        if (!d.empty()) {
            const auto& f = d.front();
            throw Error(Errc::JacobiViolation, "Jacobi fails on triple (" + std::to_string(f.i) + "," +
                                                   std::to_string(f.j) + "," + std::to_string(f.k) +
                                                   ") with defect " + to_string(f.defect));
        }
    }

    // Skips validation; reserved for tamper tests and diagnostics.
    static LieAlgebra unchecked(size_t n, const std::vector<BracketEntry>& brackets,
                                std::vector<std::string> labels = {}) {
        LieAlgebra g;
        g.n_ = n;
        g.table_.assign(n * n, zeros(n));
        for (const auto& b : brackets) {
            if (b.i >= n || b.j >= n || b.coeffs.size() != n)
                throw Error(Errc::DimensionMismatch, "bracket entry out of range");
            if (b.i == b.j) {
                if (!is_zero(b.coeffs)) throw Error(Errc::Parse, "nonzero [e_i, e_i]");
                continue;
            }
            size_t i = std::min(b.i, b.j), j = std::max(b.i, b.j);
            Vec c = b.i < b.j ? b.coeffs : -b.coeffs;
            g.table_[i * n + j] = g.table_[i * n + j] + c;
            g.table_[j * n + i] = -g.table_[i * n + j];
        }
        if (labels.empty())
            for (size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
        if (labels.size() != n) throw Error(Errc::DimensionMismatch, "label count");
        g.labels_ = std::move(labels);
        return g;
    }

    size_t dim() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vec& basis_bracket(size_t i, size_t j) const { return table_[i * n_ + j]; }

    Vec bracket(const Vec& x, const Vec& y) const {
        if (x.size() != n_ || y.size() != n_) throw Error(Errc::DimensionMismatch, "bracket arguments");
        Vec r = zeros(n_);
        for (size_t i = 0; i < n_; ++i) {
            if (x[i] == 0) continue;
            for (size_t j = 0; j < n_; ++j) {
                if (i == j || y[j] == 0) continue;
                const Vec& c = table_[i * n_ + j];
                Q s = x[i] * y[j];
                for (size_t k = 0; k < n_; ++k)
                    if (c[k] != 0) r[k] += s * c[k];
            }
        }
        return r;
    }

    // Nonzero brackets with i < j, in lexicographic order.
    std::vector<BracketEntry> entries() const {
        std::vector<BracketEntry> out;
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = i + 1; j < n_; ++j)
                if (!is_zero(table_[i * n_ + j])) out.push_back({i, j, table_[i * n_ + j]});
        return out;
    }

    // Equality of structure constants; labels are presentation only.
    bool operator==(const LieAlgebra& o) const { return n_ == o.n_ && table_ == o.table_; }
    bool operator!=(const LieAlgebra& o) const { return !(*this == o); }

private:
    size_t n_ = 0;
    std::vector<std::string> labels_;
    std::vector<Vec> table_;
};

inline std::vector<JacobiDefect> validate(const LieAlgebra& g) {
    std::vector<JacobiDefect> out;
    size_t n = g.dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                Vec ei = unit(n, i), ej = unit(n, j), ek = unit(n, k);
                Vec s = g.bracket(ei, g.basis_bracket(j, k)) + g.bracket(ej, g.basis_bracket(k, i)) +
                        g.bracket(ek, g.basis_bracket(i, j));
                if (!is_zero(s)) out.push_back({i, j, k, s});
            }
    return out;
}

inline std::string describe(const LieAlgebra& g) {
    std::string s;
    for (const auto& b : g.entries()) {
        if (!s.empty()) s += ", ";
        s += "[" + g.labels()[b.i] + "," + g.labels()[b.j] + "]=";
        bool first = true;
        for (size_t k = 0; k < g.dim(); ++k) {
            if (b.coeffs[k] == 0) continue;
            Q c = b.coeffs[k];
            if (!first) s += c > 0 ? "+" : "-";
            else if (c < 0) s += "-";
            Q a = abs(c);
            if (a != 1) s += to_string(a);
            s += g.labels()[k];
            first = false;
        }
    }
    return s.empty() ? "abelian" : s;
}

// ad(x) as a matrix: column j is [x, e_j].
inline Mat ad(const LieAlgebra& g, const Vec& x) {
    size_t n = g.dim();
    Mat m(n, n);
    for (size_t j = 0; j < n; ++j) m.set_col(j, g.bracket(x, unit(n, j)));
    return m;
}

inline Q chi(const LieAlgebra& g, const Vec& x) { return trace(ad(g, x)); }

// Coefficients of the linear form chi in the dual basis.
inline Vec chi_form(const LieAlgebra& g) {
    Vec f(g.dim());
    for (size_t i = 0; i < g.dim(); ++i) f[i] = chi(g, unit(g.dim(), i));
    return f;
}

inline Subspace bracket_space(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
    std::vector<Vec> vs;
    for (auto& x : a.vectors())
        for (auto& y : b.vectors()) vs.push_back(g.bracket(x, y));
    return Subspace::span(vs, g.dim());
}

inline Subspace derived(const LieAlgebra& g) {
    auto w = Subspace::whole(g.dim());
    return bracket_space(g, w, w);
}

inline std::vector<Subspace> derived_series(const LieAlgebra& g) {
    std::vector<Subspace> s{Subspace::whole(g.dim())};
    while (true) {
        auto next = bracket_space(g, s.back(), s.back());
        if (next == s.back()) break;
        s.push_back(next);
        if (next.dim() == 0) break;
    }
    return s;
}

inline std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
    auto w = Subspace::whole(g.dim());
    std::vector<Subspace> s{w};
    while (true) {
        auto next = bracket_space(g, w, s.back());
        if (next == s.back()) break;
        s.push_back(next);
        if (next.dim() == 0) break;
    }
    return s;
}

inline bool is_solvable(const LieAlgebra& g) { return derived_series(g).back().dim() == 0; }
inline bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back().dim() == 0; }
inline bool is_abelian(const LieAlgebra& g) { return g.entries().empty(); }

// Centralizer of a subspace: all x with [x, s] = 0 for every s in S.
inline Subspace centralizer(const LieAlgebra& g, const Subspace& s) {
    size_t n = g.dim();
    std::vector<Vec> rows;
    for (auto& y : s.vectors()) {
        Mat m = ad(g, y);  // [y, x] = m x; need -m x = 0
        for (size_t r = 0; r < n; ++r) rows.push_back(m.row(r));
    }
    if (rows.empty()) return Subspace::whole(n);
    return kernel_space(Mat::from_rows(rows, n));
}

inline Subspace center(const LieAlgebra& g) { return centralizer(g, Subspace::whole(g.dim())); }

inline Subspace unimodular_kernel(const LieAlgebra& g) {
    Vec f = chi_form(g);
    if (is_zero(f)) return Subspace::whole(g.dim());
    return kernel_space(Mat::from_rows({f}, g.dim()));
}

inline bool is_subalgebra(const LieAlgebra& g, const Subspace& s) { return s.contains(bracket_space(g, s, s)); }

inline bool is_ideal(const LieAlgebra& g, const Subspace& s) {
    return s.contains(bracket_space(g, Subspace::whole(g.dim()), s));
}

inline bool is_abelian(const LieAlgebra& g, const Subspace& s) { return bracket_space(g, s, s).dim() == 0; }

// Structure constants in the basis given by the columns of P (new basis f_i = P e_i).
// The map x -> P^{-1} x is then an isomorphism g -> change_basis(g, P).
inline LieAlgebra change_basis(const LieAlgebra& g, const Mat& P) {
    size_t n = g.dim();
    Mat Pi = inverse(P);
    std::vector<BracketEntry> br;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Vec b = Pi * g.bracket(P.col(i), P.col(j));
            if (!is_zero(b)) br.push_back({i, j, b});
        }
    return LieAlgebra::unchecked(n, br);
}

// Restriction to a subalgebra, in the coordinates of the given basis vectors.
inline LieAlgebra restrict_to(const LieAlgebra& g, const std::vector<Vec>& basis) {
    size_t k = basis.size();
    Mat B = Mat::from_cols(basis, g.dim());
    std::vector<BracketEntry> br;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            auto c = solve(B, g.bracket(basis[i], basis[j]));
            if (!c) throw Error(Errc::NotSubalgebra, "span is not closed under the bracket");
            if (!is_zero(*c)) br.push_back({i, j, *c});
        }
    return LieAlgebra::unchecked(k, br);
}

inline LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& s) { return restrict_to(g, s.vectors()); }

// Quotient by an ideal, using standard basis vectors outside the ideal as representatives.
inline LieAlgebra quotient(const LieAlgebra& g, const Subspace& ideal) {
    size_t n = g.dim();
    std::vector<Vec> reps;
    Subspace acc = ideal;
    for (size_t i = 0; i < n; ++i) {
        Vec e = unit(n, i);
        if (!acc.contains(e)) {
            reps.push_back(e);
            acc = sum(acc, Subspace::span({e}, n));
        }
    }
    auto all = reps;
    for (auto& v : ideal.vectors()) all.push_back(v);
    Mat B = Mat::from_cols(all, n);
    size_t k = reps.size();
    std::vector<BracketEntry> br;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            auto c = solve(B, g.bracket(reps[i], reps[j]));
            Vec head(c->begin(), c->begin() + static_cast<long>(k));
            if (!is_zero(head)) br.push_back({i, j, head});
        }
    return LieAlgebra::unchecked(k, br);
}

// psi: g1 -> g2 is a Lie algebra isomorphism when psi[x,y] = [psi x, psi y] on basis pairs.
inline bool verify_isomorphism(const LieAlgebra& g1, const LieAlgebra& g2, const Mat& psi) {
    size_t n = g1.dim();
    if (g2.dim() != n || psi.rows() != n || psi.cols() != n)
        throw Error(Errc::DimensionMismatch, "isomorphism witness");
    if (det(psi) == 0) throw Error(Errc::SingularWitness, "witness is singular");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (psi * g1.basis_bracket(i, j) != g2.bracket(psi.col(i), psi.col(j))) return false;
    return true;
}

inline bool is_derivation(const LieAlgebra& g, const Mat& D) {
    size_t n = g.dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Vec lhs = D * g.basis_bracket(i, j);
            Vec rhs = g.bracket(D.col(i), unit(n, j)) + g.bracket(unit(n, i), D.col(j));
            if (lhs != rhs) return false;
        }
    return true;
}

// Basis of Der(g): D flattened row-major into n^2 unknowns d_{rc}.
inline std::vector<Mat> derivations(const LieAlgebra& g) {
    size_t n = g.dim(), N = n * n;
    std::vector<Vec> rows;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            // D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j] = 0, componentwise in k.
            const Vec& c = g.basis_bracket(i, j);
            for (size_t k = 0; k < n; ++k) {
                Vec row(N, Q(0));
                for (size_t m = 0; m < n; ++m)
                    if (c[m] != 0) row[k * n + m] += c[m];
                for (size_t m = 0; m < n; ++m) {
                    // D e_i = sum_m d_{m i} e_m
                    const Vec& bmj = g.basis_bracket(m, j);
                    if (bmj[k] != 0) row[m * n + i] -= bmj[k];
                    const Vec& bim = g.basis_bracket(i, m);
                    if (bim[k] != 0) row[m * n + j] -= bim[k];
                }
                rows.push_back(std::move(row));
            }
        }
    std::vector<Vec> sol;
    if (rows.empty()) {
        for (size_t t = 0; t < N; ++t) sol.push_back(unit(N, t));
    } else {
        sol = kernel(Mat::from_rows(rows, N));
    }
    // Canonical order: rref of the solution space.
    Subspace s = Subspace::span(sol, N);
    std::vector<Mat> out;
    for (auto& v : s.vectors()) {
        Mat D(n, n);
        for (size_t r = 0; r < n; ++r)
            for (size_t c2 = 0; c2 < n; ++c2) D(r, c2) = v[r * n + c2];
        out.push_back(D);
    }
    return out;
}

// Lie algebra spanned by matrices under the commutator bracket.
inline LieAlgebra from_matrices(const std::vector<Mat>& mats) {
    if (mats.empty()) throw Error(Errc::DimensionMismatch, "no matrices");
    size_t m = mats[0].rows();
    for (auto& a : mats)
        if (a.rows() != m || a.cols() != m) throw Error(Errc::DimensionMismatch, "matrices must be square of equal size");
    auto flat = [&](const Mat& a) {
        Vec v;
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) v.push_back(a(i, j));
        return v;
    };
    std::vector<Vec> cols;
    for (auto& a : mats) cols.push_back(flat(a));
    Mat B = Mat::from_cols(cols, m * m);
    if (rank(B) != mats.size()) throw Error(Errc::Dependent, "input matrices are linearly dependent");
    size_t n = mats.size();
    std::vector<BracketEntry> br;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            auto c = solve(B, flat(commutator(mats[i], mats[j])));
            if (!c)
                throw Error(Errc::NotClosed,
                            "commutator of generators " + std::to_string(i) + " and " + std::to_string(j) + " leaves the span");
            if (!is_zero(*c)) br.push_back({i, j, *c});
        }
    return LieAlgebra(n, br);
}

// Convenience: bracket list from (i, j, {k: coeff}) triples.
struct Br {
    size_t i, j;
    std::vector<std::pair<size_t, Q>> terms;
};

inline std::vector<BracketEntry> brackets(size_t n, const std::vector<Br>& bs) {
    std::vector<BracketEntry> out;
    for (const auto& b : bs) {
        Vec c = zeros(n);
        for (auto& [k, a] : b.terms) c[k] += a;
        out.push_back({b.i, b.j, c});
    }
    return out;
}

}  // namespace lie4
