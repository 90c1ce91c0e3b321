#pragma once

#include <functional>

#include "classify.hpp"
#include "report.hpp"
#include "solver.hpp"

namespace lie4 {

// ---------------------------------------------------------------------------
// Product structures

struct ProductStructure {
    Mat E;
    Subspace plus, minus;
    bool paracomplex = false;
    bool plus_ideal = false, minus_ideal = false;
};

inline std::string glyph(bool left_ideal, bool right_ideal) {
    if (left_ideal && right_ideal) return "×";
    if (right_ideal) return "⋉";
    return "⋈";
}

inline std::string glyph(const ProductStructure& p) { return glyph(p.plus_ideal, p.minus_ideal); }

// The integrability identity E[x,y] = [Ex,y] + [x,Ey] - E[Ex,Ey] on all basis pairs.
inline bool integrability_identity(const LieAlgebra& g, const Mat& E) {
    size_t n = g.dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Vec x = unit(n, i), y = unit(n, j);
            Vec ex = E * x, ey = E * y;
            Vec lhs = E * g.bracket(x, y);
            Vec rhs = g.bracket(ex, y) + g.bracket(x, ey) - E * g.bracket(ex, ey);
            if (lhs != rhs) return false;
        }
    return true;
}

inline void check_involution(const Mat& E) {
    size_t n = E.rows();
    if (E * E != Mat::identity(n)) throw Error(Errc::NotInvolutive, "E^2 != Id");
    if (E == Mat::identity(n) || E == Q(-1) * Mat::identity(n)) throw Error(Errc::TrivialInvolution, "E = +-Id");
}

inline bool is_integrable_product(const LieAlgebra& g, const Mat& E) {
    check_involution(E);
    return integrability_identity(g, E);
}

inline ProductStructure product_from_decomposition(const LieAlgebra& g, const std::vector<Vec>& plus,
                                                   const std::vector<Vec>& minus) {
    size_t n = g.dim();
    Subspace P = Subspace::span(plus, n), M = Subspace::span(minus, n);
    if (P.dim() != plus.size() || M.dim() != minus.size() || !complementary(P, M))
        throw Error(Errc::NotComplementary, "the two sides are not complementary");
    auto closed = [&](const Subspace& s, const char* side) {
        auto vs = s.vectors();
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                if (!s.contains(g.bracket(vs[i], vs[j])))
                    throw Error(Errc::NotSubalgebra, std::string(side) + " side is not closed: [" + to_string(vs[i]) +
                                                         ", " + to_string(vs[j]) + "] = " +
                                                         to_string(g.bracket(vs[i], vs[j])));
    };
    closed(P, "left");
    closed(M, "right");
    std::vector<Vec> cols = P.vectors();
    for (auto& v : M.vectors()) cols.push_back(v);
    Mat B = Mat::from_cols(cols, n);
    Mat D(n, n);
    for (size_t i = 0; i < n; ++i) D(i, i) = i < P.dim() ? 1 : -1;
    ProductStructure ps;
    ps.E = B * D * inverse(B);
    ps.plus = P;
    ps.minus = M;
    ps.paracomplex = P.dim() == M.dim();
    ps.plus_ideal = is_ideal(g, P);
    ps.minus_ideal = is_ideal(g, M);
    if (!integrability_identity(g, ps.E)) throw Error(Errc::InternalMismatch, "closed eigenspaces but E not integrable");
    return ps;
}

inline ProductStructure product_from_endomorphism(const LieAlgebra& g, const Mat& E) {
    check_involution(E);
    size_t n = g.dim();
    auto plus = kernel(E - Mat::identity(n));
    auto minus = kernel(E + Mat::identity(n));
    return product_from_decomposition(g, plus, minus);
}

enum class DecompKind { R2R2, AffR2, AffAff };

inline const char* kind_name(DecompKind k) {
    switch (k) {
    case DecompKind::R2R2: return "R2><R2";
    case DecompKind::AffR2: return "aff><R2";
    case DecompKind::AffAff: return "aff><aff";
    }
    return "?";
}

inline std::optional<DecompKind> kind_from_name(const std::string& s) {
    if (s == "r2r2") return DecompKind::R2R2;
    if (s == "affr2") return DecompKind::AffR2;
    if (s == "affaff") return DecompKind::AffAff;
    return std::nullopt;
}

struct DecompositionType {
    DecompKind kind;
    bool left_aff, right_aff;
    std::string glyph;
};

inline DecompositionType decomposition_type(const LieAlgebra& g, const ProductStructure& p) {
    if (!p.paracomplex || g.dim() != 4) throw Error(Errc::PreconditionViolated, "decomposition_type needs a 2+2 split");
    bool la = !is_abelian(g, p.plus), ra = !is_abelian(g, p.minus);
    DecompKind k = (la && ra) ? DecompKind::AffAff : (la || ra) ? DecompKind::AffR2 : DecompKind::R2R2;
    return {k, la, ra, glyph(p)};
}

// Both sides abelian implies g' abelian.
inline bool abelian_pair_two_step(const LieAlgebra& g, const ProductStructure& p) {
    if (!is_abelian(g, p.plus) || !is_abelian(g, p.minus))
        throw Error(Errc::PreconditionViolated, "a side is not abelian");
    return is_abelian(g, derived(g));
}

// ---------------------------------------------------------------------------
// Grassmannian cells and closure systems

enum class SubType { Abelian, Aff, Any };

inline const char* subtype_name(SubType t) {
    switch (t) {
    case SubType::Abelian: return "abelian";
    case SubType::Aff: return "aff";
    case SubType::Any: return "any";
    }
    return "?";
}

struct GrassCell {
    size_t k = 0, n = 0;
    std::vector<size_t> pivots;
    std::vector<std::pair<size_t, size_t>> free;  // (row, column) of free entries

    std::string label() const {
        std::string s = "pivots(";
        for (size_t i = 0; i < pivots.size(); ++i) s += (i ? "," : "") + std::to_string(pivots[i]);
        return s + ")";
    }
};

// Schubert cells of Gr(k, n) in lexicographic pivot order.
inline std::vector<GrassCell> grass_cells(size_t k, size_t n) {
    std::vector<GrassCell> out;
    std::vector<size_t> piv(k);
    std::function<void(size_t, size_t)> rec = [&](size_t r, size_t start) {
        if (r == k) {
            GrassCell c{k, n, piv, {}};
            for (size_t i = 0; i < k; ++i)
                for (size_t col = piv[i] + 1; col < n; ++col)
                    if (std::find(piv.begin(), piv.end(), col) == piv.end()) c.free.push_back({i, col});
            out.push_back(c);
            return;
        }
        for (size_t p = start; p < n; ++p) {
            piv[r] = p;
            rec(r + 1, p + 1);
        }
    };
    rec(0, 0);
    return out;
}

using PVec = std::vector<Poly>;

inline PVec pvec(const Vec& v) {
    PVec p;
    for (auto& x : v) p.push_back(Poly(x));
    return p;
}

inline PVec padd(const PVec& a, const PVec& b) {
    PVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline PVec pscale(const Poly& s, const PVec& a) {
    PVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline PVec pbracket(const LieAlgebra& g, const PVec& u, const PVec& v) {
    size_t n = g.dim();
    PVec w(n);
    for (size_t i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (i == j || v[j].is_zero()) continue;
            const Vec& c = g.basis_bracket(i, j);
            if (is_zero(c)) continue;
            Poly uv = u[i] * v[j];
            for (size_t k = 0; k < n; ++k)
                if (c[k] != 0) w[k] = w[k] + c[k] * uv;
        }
    }
    return w;
}

// Basis rows of a cell in cell coordinates, free entries as variables starting at var0,
// mapped into the ambient space by the columns of `frame` (ambient x cell-dim).
inline std::vector<PVec> cell_basis(const GrassCell& c, size_t var0, const std::vector<Vec>& frame) {
    size_t n = frame.empty() ? 0 : frame[0].size();
    std::vector<PVec> rows;
    for (size_t r = 0; r < c.k; ++r) {
        PVec row(n);
        auto put = [&](size_t col, const Poly& coef) {
            for (size_t a = 0; a < n; ++a)
                if (frame[col][a] != 0) row[a] = row[a] + frame[col][a] * coef;
        };
        put(c.pivots[r], Poly(Q(1)));
        for (size_t f = 0; f < c.free.size(); ++f)
            if (c.free[f].first == r) put(c.free[f].second, Poly::var(var0 + f));
        rows.push_back(row);
    }
    return rows;
}

inline std::string var_name(size_t i) {
    static const char* names[] = {"a", "b", "c", "d", "e", "f"};
    return i < 6 ? names[i] : "v" + std::to_string(i);
}

// [u, v] = alpha u + beta v for the requested type; variables beyond `names` are appended.
inline PolySystem closure_system(const LieAlgebra& g, const PVec& u, const PVec& v, std::vector<std::string> names,
                                 SubType t) {
    PolySystem s;
    PVec w = pbracket(g, u, v);
    if (t == SubType::Abelian) {
        s.names = names;
        for (auto& x : w) s.eqs.push_back(x);
        return s;
    }
    size_t ia = names.size(), ib = ia + 1;
    names.push_back("alpha");
    names.push_back("beta");
    s.names = names;
    Poly A = Poly::var(ia), B = Poly::var(ib);
    for (size_t k = 0; k < w.size(); ++k) s.eqs.push_back(w[k] - A * u[k] - B * v[k]);
    if (t == SubType::Aff) s.nonzero.push_back(A * A + B * B);
    return s;
}

struct CellFamily {
    std::string label;
    PolySystem sys;
    SolutionSet sol;
    PVec u, v;  // basis of the subspace in terms of the system variables
};

inline std::vector<Vec> standard_frame(size_t n) {
    std::vector<Vec> f;
    for (size_t i = 0; i < n; ++i) f.push_back(unit(n, i));
    return f;
}

// For each of the 6 cells of Gr(2,4): the closure system and its solution set.
inline std::vector<CellFamily> two_dim_subalgebra_cells(const LieAlgebra& g, SubType t, size_t budget = 20000) {
    if (g.dim() != 4) throw Error(Errc::DimensionMismatch, "two_dim_subalgebra_cells needs dim 4");
    std::vector<CellFamily> out;
    for (auto& c : grass_cells(2, 4)) {
        auto rows = cell_basis(c, 0, standard_frame(4));
        std::vector<std::string> names;
        for (size_t i = 0; i < c.free.size(); ++i) names.push_back(var_name(i));
        CellFamily f{c.label(), closure_system(g, rows[0], rows[1], names, t), {}, rows[0], rows[1]};
        f.sol = solve_small_system(f.sys, budget);
        out.push_back(f);
    }
    return out;
}

inline Vec peval(const PVec& p, const Vec& x) {
    Vec r;
    for (auto& c : p) r.push_back(c.eval(x));
    return r;
}

// Deterministic sample subspaces from every decided branch.
inline std::vector<Subspace> sample_subalgebras(const CellFamily& f, size_t per_branch) {
    std::vector<Subspace> out;
    for (auto& b : f.sol.branches) {
        if (!b.decided) continue;
        for (auto& x : sample_branch(f.sys, b, per_branch)) {
            Vec xx = x;
            xx.resize(kMaxVars, Q(0));
            out.push_back(Subspace::span({peval(f.u, xx), peval(f.v, xx)}, f.u.size()));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Certificates

enum class CertKind { ExplicitDecomposition, ForcedVector, Confinement, EmptySolutionSet, Undecided };

inline const char* cert_name(CertKind k) {
    switch (k) {
    case CertKind::ExplicitDecomposition: return "ExplicitDecomposition";
    case CertKind::ForcedVector: return "ForcedVector";
    case CertKind::Confinement: return "Confinement";
    case CertKind::EmptySolutionSet: return "EmptySolutionSet";
    case CertKind::Undecided: return "Undecided";
    }
    return "?";
}

struct CellTrace {
    std::string cell;
    SolveStatus status;
    std::vector<std::string> trace;
};

struct Certificate {
    CertKind kind = CertKind::Undecided;
    std::string scope;  // subalgebra type(s) the certificate speaks about
    Vec vector;          // ForcedVector
    std::vector<Vec> W;  // Confinement
    std::vector<CellTrace> cells;
    std::optional<ProductStructure> decomposition;

    std::string summary() const {
        switch (kind) {
        case CertKind::ForcedVector: return "ForcedVector(" + to_string(vector) + ", " + scope + ")";
        case CertKind::Confinement: {
            std::string s = "Confinement(span(";
            for (size_t i = 0; i < W.size(); ++i) s += (i ? ", " : "") + to_string(W[i]);
            return s + "), " + scope + ")";
        }
        case CertKind::EmptySolutionSet: return "EmptySolutionSet(" + scope + ")";
        case CertKind::ExplicitDecomposition:
            return "ExplicitDecomposition(" + to_string(decomposition->plus.vectors()[0]) + " ...)";
        case CertKind::Undecided: return "Undecided(" + scope + ")";
        }
        return "?";
    }
};

inline bool all_empty(const std::vector<CellTrace>& cs) {
    for (auto& c : cs)
        if (c.status != SolveStatus::Empty) return false;
    return true;
}

// Every 2-dim subalgebra of type t contains v: all subspaces avoiding v are graphs over
// Gr(2,3) cells of a coordinate complement of v, and each such closure system is empty.
inline Certificate forced_vector_certificate(const LieAlgebra& g, const Vec& v, SubType t = SubType::Any,
                                             size_t budget = 20000) {
    if (g.dim() != 4) throw Error(Errc::DimensionMismatch, "forced_vector_certificate needs dim 4");
    size_t j = 0;
    while (v[j] == 0) ++j;
    std::vector<Vec> frame;
    for (size_t i = 0; i < 4; ++i)
        if (i != j) frame.push_back(unit(4, i));
    Certificate cert;
    cert.vector = v;
    cert.scope = subtype_name(t);
    for (auto& c : grass_cells(2, 3)) {
        auto rows = cell_basis(c, 0, frame);
        std::vector<std::string> names;
        for (size_t i = 0; i < c.free.size(); ++i) names.push_back(var_name(i));
        size_t is = names.size();
        names.push_back("s");
        names.push_back("t");
        PVec u = padd(rows[0], pscale(Poly::var(is), pvec(v)));
        PVec w = padd(rows[1], pscale(Poly::var(is + 1), pvec(v)));
        auto sys = closure_system(g, u, w, names, t);
        auto sol = solve_small_system(sys, budget);
        cert.cells.push_back({"complement " + c.label(), sol.status, sol.trace});
    }
    cert.kind = all_empty(cert.cells) ? CertKind::ForcedVector : CertKind::Undecided;
    return cert;
}

// Every 2-dim subalgebra of type t lies in the hyperplane W.
inline Certificate confinement_certificate(const LieAlgebra& g, const std::vector<Vec>& Wv, SubType t = SubType::Any,
                                           size_t budget = 20000) {
    Subspace W = Subspace::span(Wv, 4);
    if (W.dim() != 3) throw Error(Errc::PreconditionViolated, "confinement needs a hyperplane");
    Vec d = *first_outside(W, standard_frame(4));
    auto frame = W.vectors();
    Certificate cert;
    cert.W = frame;
    cert.scope = subtype_name(t);
    for (auto& c : grass_cells(1, 3)) {
        auto rows = cell_basis(c, 0, frame);
        std::vector<std::string> names;
        for (size_t i = 0; i < c.free.size(); ++i) names.push_back(var_name(i));
        PVec u1 = pvec(d);
        size_t p = c.pivots[0];
        for (size_t q = 0; q < 3; ++q) {
            if (q == p) continue;
            size_t idx = names.size();
            names.push_back(var_name(idx));
            u1 = padd(u1, pscale(Poly::var(idx), pvec(frame[q])));
        }
        auto sys = closure_system(g, u1, rows[0], names, t);
        auto sol = solve_small_system(sys, budget);
        cert.cells.push_back({"line " + c.label(), sol.status, sol.trace});
    }
    cert.kind = all_empty(cert.cells) ? CertKind::Confinement : CertKind::Undecided;
    return cert;
}

// ---------------------------------------------------------------------------
// Brute-force oracle: scan the cells of Gr(2,4) over the grid k/m, |k| <= 3, m <= 3.

namespace detail {

inline const std::vector<long>& oracle_values() {
    // grid values scaled by 6
    static const std::vector<long> v = {0, 6, -6, 12, -12, 18, -18, 3, -3, 9, -9, 2, -2, 4, -4};
    return v;
}

using I128 = __int128;

inline I128 det3(const long a[3], const long b[3], const long c[3]) {
    return I128(a[0]) * (I128(b[1]) * c[2] - I128(b[2]) * c[1]) - I128(a[1]) * (I128(b[0]) * c[2] - I128(b[2]) * c[0]) +
           I128(a[2]) * (I128(b[0]) * c[1] - I128(b[1]) * c[0]);
}

inline bool rank_le2(const long u[4], const long v[4], const long w[4]) {
    static const int rows[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (auto& r : rows) {
        long a[3] = {u[r[0]], u[r[1]], u[r[2]]};
        long b[3] = {v[r[0]], v[r[1]], v[r[2]]};
        long c[3] = {w[r[0]], w[r[1]], w[r[2]]};
        if (det3(a, b, c) != 0) return false;
    }
    return true;
}

}  // namespace detail

// Calls visit(u, v) for every grid subspace span(u, v) that is a subalgebra of type t.
template <class F>
void oracle_scan(const LieAlgebra& g, SubType t, F&& visit) {
    mpz_class L = 1;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            for (auto& c : g.basis_bracket(i, j)) L = lcm(L, c.get_den());
    long C[4][4][4];
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            for (size_t k = 0; k < 4; ++k) C[i][j][k] = mpz_class(g.basis_bracket(i, j)[k] * L).get_si();
    const auto& vals = detail::oracle_values();
    for (auto& c : grass_cells(2, 4)) {
        size_t nf = c.free.size();
        std::vector<size_t> idx(nf, 0);
        for (;;) {
            long u[4] = {0, 0, 0, 0}, v[4] = {0, 0, 0, 0};
            u[c.pivots[0]] = 6;
            v[c.pivots[1]] = 6;
            for (size_t f = 0; f < nf; ++f) (c.free[f].first == 0 ? u : v)[c.free[f].second] = vals[idx[f]];
            long w[4] = {0, 0, 0, 0};
            for (size_t i = 0; i < 4; ++i) {
                if (!u[i]) continue;
                for (size_t j = 0; j < 4; ++j) {
                    if (!v[j]) continue;
                    for (size_t k = 0; k < 4; ++k) w[k] += u[i] * v[j] * C[i][j][k];
                }
            }
            bool zero = !w[0] && !w[1] && !w[2] && !w[3];
            bool ok = t == SubType::Abelian ? zero : (detail::rank_le2(u, v, w) && (t == SubType::Any || !zero));
            if (ok) visit(u, v);
            size_t f = 0;
            while (f < nf && ++idx[f] == vals.size()) idx[f++] = 0;
            if (f == nf) break;
        }
    }
}

// Scaled integer vectors back to rationals.
inline Vec oracle_vec(const long x[4]) {
    Vec v;
    for (int i = 0; i < 4; ++i) v.push_back(Q(x[i], 6));
    for (auto& q : v) q.canonicalize();
    return v;
}

struct OracleCheck {
    size_t visited = 0;
    size_t violations = 0;
    std::string first_violation;
};

// Re-verify a certificate by brute force: no grid subalgebra contradicts it.
inline OracleCheck oracle_recheck(const LieAlgebra& g, const Certificate& c, SubType t) {
    OracleCheck r;
    Subspace W = c.W.empty() ? Subspace::whole(4) : Subspace::span(c.W, 4);
    oracle_scan(g, t, [&](const long u[4], const long v[4]) {
        ++r.visited;
        Vec a = oracle_vec(u), b = oracle_vec(v);
        Subspace U = Subspace::span({a, b}, 4);
        bool bad = false;
        if (c.kind == CertKind::EmptySolutionSet) bad = true;
        if (c.kind == CertKind::ForcedVector) bad = !U.contains(c.vector);
        if (c.kind == CertKind::Confinement) bad = !W.contains(U);
        if (bad && r.violations++ == 0) r.first_violation = to_string(a) + ", " + to_string(b);
    });
    return r;
}

// ---------------------------------------------------------------------------
// Paracomplex search

inline std::pair<SubType, SubType> side_types(DecompKind k) {
    switch (k) {
    case DecompKind::R2R2: return {SubType::Abelian, SubType::Abelian};
    case DecompKind::AffR2: return {SubType::Aff, SubType::Abelian};
    case DecompKind::AffAff: return {SubType::Aff, SubType::Aff};
    }
    return {SubType::Any, SubType::Any};
}

enum class SearchStatus { Found, DecidedEmpty, Undecided };

inline const char* search_status_name(SearchStatus s) {
    switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::DecidedEmpty: return "decided-empty";
    case SearchStatus::Undecided: return "undecided";
    }
    return "?";
}

struct SearchResult {
    DecompKind kind;
    SearchStatus status = SearchStatus::Undecided;
    Certificate cert;
};

class ParacomplexSearch {
public:
    explicit ParacomplexSearch(const LieAlgebra& g, size_t budget = 20000) : g_(g), budget_(budget) {
        if (g.dim() != 4) throw Error(Errc::DimensionMismatch, "paracomplex search needs dim 4");
    }

    const std::vector<CellFamily>& cells(SubType t) {
        auto it = cells_.find(t);
        if (it == cells_.end()) it = cells_.emplace(t, two_dim_subalgebra_cells(g_, t, budget_)).first;
        return it->second;
    }

    std::vector<Subspace> samples(SubType t) {
        auto it = samples_.find(t);
        if (it != samples_.end()) return it->second;
        std::vector<Subspace> out;
        for (auto& f : cells(t))
            for (auto& s : sample_subalgebras(f, 24))
                if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        samples_[t] = out;
        return out;
    }

    bool type_empty(SubType t, std::vector<CellTrace>* traces = nullptr) {
        bool empty = true;
        for (auto& f : cells(t)) {
            if (traces) traces->push_back({f.label, f.sol.status, f.sol.trace});
            if (f.sol.status != SolveStatus::Empty) empty = false;
        }
        return empty;
    }

    bool type_has_undecided(SubType t) {
        for (auto& f : cells(t))
            if (f.sol.status == SolveStatus::Undecided) return true;
        return false;
    }

    const Certificate& forced(size_t i, SubType t) {
        auto key = std::make_pair(i, t);
        auto it = forced_.find(key);
        if (it == forced_.end()) it = forced_.emplace(key, forced_vector_certificate(g_, unit(4, i), t, budget_)).first;
        return it->second;
    }

    const Certificate& confined(const std::vector<Vec>& W, SubType t) {
        auto key = std::make_pair(to_string(Subspace::span(W, 4).basis_matrix()), t);
        auto it = confined_.find(key);
        if (it == confined_.end()) it = confined_.emplace(key, confinement_certificate(g_, W, t, budget_)).first;
        return it->second;
    }

    SearchResult run(DecompKind k) {
        auto [ta, tb] = side_types(k);
        SearchResult r{k, SearchStatus::Undecided, {}};
        // explicit pair from samples
        auto sa = samples(ta), sb = samples(tb);
        for (auto& a : sa)
            for (auto& b : sb)
                if (complementary(a, b)) {
                    r.status = SearchStatus::Found;
                    r.cert.kind = CertKind::ExplicitDecomposition;
                    r.cert.scope = kind_name(k);
                    r.cert.decomposition = product_from_decomposition(g_, a.vectors(), b.vectors());
                    return r;
                }
        for (SubType t : {ta, tb}) {
            std::vector<CellTrace> tr;
            if (type_empty(t, &tr)) {
                r.status = SearchStatus::DecidedEmpty;
                r.cert.kind = CertKind::EmptySolutionSet;
                r.cert.scope = subtype_name(t);
                r.cert.cells = tr;
                return r;
            }
        }
        for (size_t i = 0; i < 4; ++i) {
            const Certificate& any = forced(i, SubType::Any);
            if (any.kind == CertKind::ForcedVector) return decided(r, any);
        }
        for (size_t i = 0; i < 4; ++i) {
            const Certificate& a = forced(i, ta);
            if (a.kind != CertKind::ForcedVector) continue;
            if (ta == tb) return decided(r, a);
            const Certificate& b = forced(i, tb);
            if (b.kind == CertKind::ForcedVector) return decided(r, merge(a, b));
        }
        std::vector<std::vector<Vec>> hyper;
        auto gp = derived(g_);
        if (gp.dim() == 3) hyper.push_back(gp.vectors());
        for (size_t skip = 0; skip < 4; ++skip) {
            std::vector<Vec> w;
            for (size_t i = 0; i < 4; ++i)
                if (i != skip) w.push_back(unit(4, i));
            hyper.push_back(w);
        }
        for (auto& W : hyper) {
            const Certificate& a = confined(W, ta);
            if (a.kind != CertKind::Confinement) continue;
            if (ta == tb) return decided(r, a);
            const Certificate& b = confined(W, tb);
            if (b.kind == CertKind::Confinement) return decided(r, merge(a, b));
        }
        r.cert.kind = CertKind::Undecided;
        r.cert.scope = kind_name(k);
        return r;
    }

private:
    static SearchResult decided(SearchResult r, const Certificate& c) {
        r.status = SearchStatus::DecidedEmpty;
        r.cert = c;
        return r;
    }
    static Certificate merge(const Certificate& a, const Certificate& b) {
        Certificate c = a;
        c.scope = a.scope + "+" + b.scope;
        c.cells.insert(c.cells.end(), b.cells.begin(), b.cells.end());
        return c;
    }

    LieAlgebra g_;
    size_t budget_;
    std::map<SubType, std::vector<CellFamily>> cells_;
    std::map<SubType, std::vector<Subspace>> samples_;
    std::map<std::pair<size_t, SubType>, Certificate> forced_;
    std::map<std::pair<std::string, SubType>, Certificate> confined_;
};

inline std::vector<SearchResult> paracomplex_search(const LieAlgebra& g, std::optional<DecompKind> filter = std::nullopt,
                                                    size_t budget = 20000) {
    ParacomplexSearch s(g, budget);
    std::vector<SearchResult> out;
    for (DecompKind k : {DecompKind::R2R2, DecompKind::AffR2, DecompKind::AffAff})
        if (!filter || *filter == k) out.push_back(s.run(k));
    return out;
}

// All (u, v) spanning aff(R) subalgebras with [u,v] = v, one sample per decided branch.
struct AffSearch {
    SolveStatus status;
    std::vector<std::pair<Vec, Vec>> samples;
};

inline AffSearch aff_subalgebra_search(const LieAlgebra& g, size_t budget = 20000) {
    AffSearch out{SolveStatus::Empty, {}};
    if (g.dim() != 4) throw Error(Errc::DimensionMismatch, "aff_subalgebra_search needs dim 4");
    bool undecided = false;
    for (auto& f : two_dim_subalgebra_cells(g, SubType::Aff, budget)) {
        if (f.sol.status == SolveStatus::Undecided) undecided = true;
        for (auto& s : sample_subalgebras(f, 1)) {
            // normalize to [u, v] = v inside the sample plane
            auto vs = s.vectors();
            Vec w = g.bracket(vs[0], vs[1]);
            Vec u = *first_outside(Subspace::span({w}, 4), vs);
            Subspace Lw = Subspace::span({w}, 4);
            Q c = Lw.coords(g.bracket(u, w))[0] / Lw.coords(w)[0];
            out.samples.push_back({Q(1) / c * u, w});
        }
    }
    out.status = undecided ? SolveStatus::Undecided : out.samples.empty() ? SolveStatus::Empty : SolveStatus::Parametrized;
    return out;
}

// Brute-force recheck of a decided-empty search result against every side type it covers.
inline OracleCheck oracle_recheck_search(const LieAlgebra& g, const SearchResult& r, DecompKind k) {
    auto [ta, tb] = side_types(k);
    std::vector<SubType> types;
    if (r.cert.scope == "any") types = {SubType::Any};
    else if (r.cert.kind == CertKind::EmptySolutionSet) types = {r.cert.scope == "aff" ? SubType::Aff : SubType::Abelian};
    else types = ta == tb ? std::vector<SubType>{ta} : std::vector<SubType>{ta, tb};
    OracleCheck total;
    for (SubType t : types) {
        auto oc = oracle_recheck(g, r.cert, t);
        total.visited += oc.visited;
        if (oc.violations && !total.violations) total.first_violation = oc.first_violation;
        total.violations += oc.violations;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Table 2: paracomplex structures

using Split = std::pair<std::vector<Vec>, std::vector<Vec>>;

struct PcRow {
    std::string label;
    Family family;
    std::vector<Vec> samples;
};

struct PcCell {
    std::string row;
    DecompKind kind;
    std::string glyph;
    std::function<Split(const Vec&)> printed;
    std::function<bool(const Vec&)> erratum_when;  // parameters where the printed item is known to fail
    std::function<Split(const Vec&)> corrected;
    std::string erratum;
};

namespace t2 {
inline Vec e(size_t i) { return unit(4, i); }
}  // namespace t2

inline const std::vector<PcRow>& table2_rows() {
    static const std::vector<PcRow> rows = {
        {"R^4", Family::R4, {{}}},
        {"aff(R) x aff(R)", Family::AffRxAffR, {{}}},
        {"R x h3", Family::RxH3, {{}}},
        {"R x r3", Family::RxR3_gen, {{}}},
        {"R x r3,lambda (lambda != 0)", Family::RxR3_lambda, {{Q(1)}, {Q(1, 2)}, {Q(-1, 2)}, {Q(-1)}}},
        {"R x r3,0", Family::RxR3_lambda, {{Q(0)}}},
        {"R x r'3,lambda", Family::RxR3p_lambda, {{Q(0)}, {Q(1)}, {Q(2)}}},
        {"n4", Family::N4, {{}}},
        {"aff(C)", Family::AffC, {{}}},
        {"r4", Family::R4_gen, {{}}},
        {"r4,lambda (lambda != 0)", Family::R4_lambda, {{Q(1)}, {Q(-1)}, {Q(2)}, {Q(1, 2)}}},
        {"r4,0", Family::R4_lambda, {{Q(0)}}},
        {"r4,mu,lambda", Family::R4_mu_lambda,
         {{Q(1), Q(1)}, {Q(1, 2), Q(1)}, {Q(-1, 2), Q(1, 2)}, {Q(-1), Q(-1, 2)}, {Q(1, 3), Q(1, 2)}}},
        {"r'4,mu,lambda", Family::R4p_mu_lambda, {{Q(1), Q(0)}, {Q(2), Q(1)}, {Q(1, 2), Q(-1)}}},
        {"d4", Family::D4, {{}}},
        {"d4,lambda (lambda != 1)", Family::D4_lambda, {{Q(1, 2)}, {Q(3, 4)}, {Q(2)}}},
        {"d4,1", Family::D4_lambda, {{Q(1)}}},
        {"d'4,lambda", Family::D4p_lambda, {{Q(0)}, {Q(1, 2)}, {Q(1)}, {Q(2)}}},
        {"h4", Family::H4, {{}}},
    };
    return rows;
}

inline const std::vector<PcCell>& table2_cells() {
    using t2::e;
    auto S = [](std::vector<Vec> a, std::vector<Vec> b) { return Split{a, b}; };
    auto never = [](const Vec&) { return false; };
    static const std::vector<PcCell> cells = {
        {"R^4", DecompKind::R2R2, "×", [=](const Vec&) { return S({e(0), e(1)}, {e(2), e(3)}); }, never, {}, ""},
        {"aff(R) x aff(R)", DecompKind::R2R2, "⋉", [=](const Vec&) { return S({e(0), e(1)}, {e(2), e(3)}); }, never, {}, ""},
        {"aff(R) x aff(R)", DecompKind::AffR2, "⋈", [=](const Vec&) { return S({e(1) + e(3), e(2)}, {e(0), e(1)}); }, never, {}, ""},
        {"aff(R) x aff(R)", DecompKind::AffAff, "×", [=](const Vec&) { return S({e(0), e(3)}, {e(1), e(2)}); }, never, {}, ""},
        {"R x h3", DecompKind::R2R2, "⋉", [=](const Vec&) { return S({e(0), e(2)}, {e(1), e(3)}); }, never, {}, ""},
        {"R x r3", DecompKind::R2R2, "⋉", [=](const Vec&) { return S({e(0), e(1)}, {e(2), e(3)}); }, never, {}, ""},
        {"R x r3", DecompKind::AffR2, "⋈", [=](const Vec&) { return S({e(1), e(2)}, {e(0), e(3)}); }, never, {}, ""},
        {"R x r3,lambda (lambda != 0)", DecompKind::R2R2, "⋉", [=](const Vec&) { return S({e(0), e(1)}, {e(2), e(3)}); }, never, {}, ""},
        {"R x r3,lambda (lambda != 0)", DecompKind::AffR2, "⋉", [=](const Vec&) { return S({e(1), e(2)}, {e(0), e(3)}); }, never, {}, ""},
        {"R x r3,lambda (lambda != 0)", DecompKind::AffAff, "⋈",
         [=](const Vec& p) { return S({e(0) + e(1), e(2)}, {e(1) - p[0] * e(0), e(3)}); },
         [](const Vec& p) { return p[0] == -1; },
         [=](const Vec&) { return S({e(1), e(2)}, {e(0) - e(1), e(3)}); },
         "at lambda = -1 the printed sides share e0+e1; use <e1,e2> ⋈ <e0-e1,e3>"},
        {"R x r3,0", DecompKind::R2R2, "⋉", [=](const Vec&) { return S({e(0), e(1)}, {e(2), e(3)}); }, never, {}, ""},
        {"R x r3,0", DecompKind::AffR2, "×", [=](const Vec&) { return S({e(1), e(2)}, {e(0), e(3)}); }, never, {}, ""},
        {"R x r'3,lambda", DecompKind::R2R2, "⋉", [=](const Vec&) { return S({e(0), e(1)}, {e(2), e(3)}); }, never, {}, ""},
        {"n4", DecompKind::R2R2, "⋈", [=](const Vec&) { return S({e(0), e(3)}, {e(1), e(2)}); }, never, {}, ""},
        {"aff(C)", DecompKind::R2R2, "⋉", [=](const Vec&) { return S({e(0), e(1)}, {e(2), e(3)}); }, never, {}, ""},
        {"aff(C)", DecompKind::AffR2, "⋈", [=](const Vec&) { return S({e(0), e(2)}, {e(0) - e(3), e(1) + e(2)}); }, never, {}, ""},
        {"r4", DecompKind::AffR2, "⋈", [=](const Vec&) { return S({e(0), e(1)}, {e(2), e(3)}); }, never, {}, ""},
        {"r4,lambda (lambda != 0)", DecompKind::AffR2, "⋉", [=](const Vec&) { return S({e(0), e(1)}, {e(2), e(3)}); }, never, {}, ""},
        {"r4,lambda (lambda != 0)", DecompKind::AffAff, "⋈",
         [=](const Vec& p) { return S({e(0), e(1)}, {e(0) + p[0] * e(3), e(2)}); }, never, {}, ""},
        {"r4,0", DecompKind::R2R2, "⋈", [=](const Vec&) { return S({e(0), e(2)}, {e(1), e(3)}); }, never, {}, ""},
        {"r4,0", DecompKind::AffR2, "⋉", [=](const Vec&) { return S({e(0), e(1)}, {e(2), e(3)}); }, never, {}, ""},
        {"r4,mu,lambda", DecompKind::AffR2, "⋉", [=](const Vec&) { return S({e(0), e(1)}, {e(2), e(3)}); }, never, {}, ""},
        {"r4,mu,lambda", DecompKind::AffAff, "⋈", [=](const Vec&) { return S({e(0) - e(1), e(2)}, {e(0) + e(1), e(3)}); }, never, {}, ""},
        {"r'4,mu,lambda", DecompKind::AffR2, "⋉", [=](const Vec&) { return S({e(0), e(1)}, {e(2), e(3)}); }, never, {}, ""},
        {"d4", DecompKind::AffR2, "⋉", [=](const Vec&) { return S({e(0), e(1)}, {e(2), e(3)}); }, never, {}, ""},
        {"d4", DecompKind::AffAff, "⋈", [=](const Vec&) { return S({e(0) + e(2), e(1) - e(3)}, {e(0) - e(2), e(1) + e(3)}); }, never, {}, ""},
        {"d4,lambda (lambda != 1)", DecompKind::AffR2, "⋉", [=](const Vec&) { return S({e(0), e(1)}, {e(2), e(3)}); }, never, {}, ""},
        {"d4,lambda (lambda != 1)", DecompKind::AffAff, "⋈",
         [=](const Vec& p) { return S({e(0), e(3)}, {e(0) + p[0] * e(2), (1 - p[0]) * e(1) + p[0] * e(3)}); }, never, {}, ""},
        {"d4,1", DecompKind::R2R2, "⋉", [=](const Vec&) { return S({e(0), e(2)}, {e(1), e(3)}); }, never, {}, ""},
        {"d4,1", DecompKind::AffR2, "⋉", [=](const Vec&) { return S({e(0), e(1)}, {e(2), e(3)}); }, never, {}, ""},
        {"d4,1", DecompKind::AffAff, "⋈", [=](const Vec&) { return S({e(0), e(1)}, {e(0) + e(2), e(3)}); }, never, {}, ""},
        {"h4", DecompKind::AffR2, "⋈", [=](const Vec&) { return S({e(0), e(1)}, {e(2), e(3)}); }, never, {}, ""},
        {"h4", DecompKind::AffAff, "⋈", [=](const Vec&) { return S({e(0), e(3)}, {e(0) - e(2), e(1) - e(3)}); }, never, {}, ""},
    };
    return cells;
}

// Checks a printed split: complementary, closed, of the stated kind, with the stated glyph.
inline std::pair<bool, std::string> check_split(const LieAlgebra& g, const Split& s, DecompKind kind,
                                                const std::string& want_glyph) {
    try {
        auto ps = product_from_decomposition(g, s.first, s.second);
        auto ty = decomposition_type(g, ps);
        bool left_ok = ty.kind != DecompKind::AffR2 || ty.left_aff;
        if (ty.kind != kind || !left_ok)
            return {false, std::string("type ") + kind_name(ty.kind) + " (left aff: " + (ty.left_aff ? "yes" : "no") + ")"};
        if (ty.glyph != want_glyph) return {false, "decoration " + ty.glyph + " expected " + want_glyph};
        if (!is_integrable_product(g, ps.E)) return {false, "E not integrable"};
        return {true, std::string(kind_name(kind)) + " " + ty.glyph};
    } catch (const Error& e) {
        return {false, e.what()};
    }
}

inline TableReport verify_table_pc(bool recheck = false) {
    TableReport rep{"pc", {}};
    for (auto& row : table2_rows()) {
        for (auto& p : row.samples) {
            Instance in{row.family, p};
            LieAlgebra g = make(in);
            std::string subj = instance_name(in);
            std::optional<ParacomplexSearch> search;
            for (DecompKind k : {DecompKind::R2R2, DecompKind::AffR2, DecompKind::AffAff}) {
                const PcCell* cell = nullptr;
                for (auto& c : table2_cells())
                    if (c.row == row.label && c.kind == k) cell = &c;
                CheckItem it{"pc/" + row.label + "/" + kind_name(k) + "/" + subj, subj, "", false, "", ""};
                if (cell) {
                    it.claim = std::string(kind_name(k)) + " " + cell->glyph + " as printed";
                    auto [ok, det] = check_split(g, cell->printed(p), k, cell->glyph);
                    if (cell->erratum_when(p)) {
                        auto [cok, cdet] = check_split(g, cell->corrected(p), k, cell->glyph);
                        it = with_erratum(it, ok, det, cok, cdet, cell->erratum);
                    } else {
                        it.ok = ok;
                        it.detail = det;
                    }
                } else {
                    it.claim = std::string("no ") + kind_name(k);
                    if (!search) search.emplace(g);
                    auto r = search->run(k);
                    it.ok = r.status == SearchStatus::DecidedEmpty;
                    it.detail = std::string(search_status_name(r.status)) + " via " + r.cert.summary();
                    if (it.ok && recheck) {
                        auto oc = oracle_recheck_search(g, r, k);
                        it.detail += "; oracle " + std::to_string(oc.visited) + " grid subalgebras, " +
                                     std::to_string(oc.violations) + " violations";
                        if (oc.violations) it.ok = false;
                    }
                }
                rep.add(it);
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Table 3 and the one-plus-three decompositions

struct OneThree {
    Family family;
    Vec params;
    Vec line;
    std::vector<Vec> three;
    std::string glyph;
    Family three_family;
    std::function<Vec(const Vec&)> three_params;
};

inline std::vector<OneThree> table13_bullets() {
    using t2::e;
    auto none = [](const Vec&) { return Vec{}; };
    auto lam = [](Q l) { return [l](const Vec&) { return Vec{l}; }; };
    std::vector<OneThree> b;
    b.push_back({Family::R4_lambda, {Q(0)}, e(1), {e(0), e(2), e(3)}, "⋈", Family::H3, none});
    b.push_back({Family::R4_gen, {}, e(3), {e(0), e(1), e(2)}, "⋈", Family::R3_gen, none});
    for (Q l : {Q(1), Q(2), Q(-1, 2)})
        b.push_back({Family::R4_lambda, {l}, e(1), {e(0), e(2), e(3)}, "⋈", Family::R3_gen, none});
    b.push_back({Family::D4_lambda, {Q(1)}, e(0), {e(0) + e(2), e(1), e(3)}, "⋉", Family::R3_gen, none});
    b.push_back({Family::AffRxAffR, {}, e(0), {e(1), e(2), e(3)}, "⋉", Family::R3_lambda, lam(Q(0))});
    b.push_back({Family::R4_lambda, {Q(0)}, e(3), {e(0), e(1), e(2)}, "⋉", Family::R3_lambda, lam(Q(0))});
    b.push_back({Family::D4, {}, e(2), {e(0), e(1), e(3)}, "⋈", Family::R3_lambda, lam(Q(0))});
    b.push_back({Family::D4_lambda, {Q(1)}, e(1), {e(0), e(2), e(3)}, "⋈", Family::R3_lambda, lam(Q(0))});
    b.push_back({Family::AffC, {}, e(0), {e(1), e(2), e(3)}, "⋉", Family::R3p_lambda, lam(Q(0))});
    b.push_back({Family::H4, {}, e(2), {e(0), e(1), e(3)}, "⋈", Family::R3_lambda, lam(Q(1, 2))});
    b.push_back({Family::AffC, {}, e(1), {e(0), e(2), e(3)}, "⋉", Family::R3_lambda, lam(Q(1))});
    // r4,lambda: <e0,e1,e2> has [e0,e1]=e1, [e0,e2]=lambda e2
    for (Q l : {Q(1, 2), Q(2), Q(-1)})
        b.push_back({Family::R4_lambda, {l}, e(3), {e(0), e(1), e(2)}, "⋈", Family::R3_lambda,
                     [](const Vec& p) { return canonicalize(Family::R3_lambda, p).instance.params; }});
    for (auto mp : std::vector<Vec>{{Q(1, 2), Q(1)}, {Q(-1, 2), Q(1, 2)}}) {
        b.push_back({Family::R4_mu_lambda, mp, e(2), {e(0), e(1), e(3)}, "⋈", Family::R3_lambda,
                     [](const Vec& p) { return canonicalize(Family::R3_lambda, {p[1]}).instance.params; }});
        b.push_back({Family::R4_mu_lambda, mp, e(3), {e(0), e(1), e(2)}, "⋈", Family::R3_lambda,
                     [](const Vec& p) { return canonicalize(Family::R3_lambda, {p[0]}).instance.params; }});
    }
    for (Q l : {Q(1, 2), Q(3, 4), Q(2)}) {
        // <e0,e1,e3>: [e0,e1]=lambda e1, [e0,e3]=e3
        b.push_back({Family::D4_lambda, {l}, e(2), {e(0), e(1), e(3)}, "⋈", Family::R3_lambda,
                     [](const Vec& p) { return canonicalize(Family::R3_lambda, {p[0]}).instance.params; }});
        // <e0,e2,e3>: [e0,e2]=(1-lambda) e2, [e0,e3]=e3
        b.push_back({Family::D4_lambda, {l}, e(1), {e(0), e(2), e(3)}, "⋈", Family::R3_lambda,
                     [](const Vec& p) { return canonicalize(Family::R3_lambda, {1 - p[0]}).instance.params; }});
    }
    for (Q l : {Q(1), Q(-2), Q(1, 2)})
        b.push_back({Family::AffC, {}, e(0), {l * e(0) - e(1), e(2), e(3)}, "⋉", Family::R3p_lambda,
                     [l](const Vec&) { return Vec{abs(l)}; }});
    for (auto mp : std::vector<Vec>{{Q(1), Q(0)}, {Q(2), Q(1)}})
        b.push_back({Family::R4p_mu_lambda, mp, e(1), {e(0), e(2), e(3)}, "⋈", Family::R3p_lambda,
                     [](const Vec& p) { return Vec{abs(p[1])}; }});
    return b;
}

inline std::pair<bool, std::string> check_one_three(const OneThree& b) {
    LieAlgebra g = make(b.family, b.params);
    Subspace H = Subspace::span(b.three, 4), L = Subspace::span({b.line}, 4);
    if (H.dim() != 3 || !complementary(L, H)) return {false, "not complementary"};
    if (!is_subalgebra(g, H)) return {false, "3-dim part is not a subalgebra"};
    auto r = identify3(restrict_to(g, b.three));
    Instance want{b.three_family, b.three_params(b.params)};
    if (!(r.instance == want))
        return {false, "3-dim part is " + instance_name(r.instance) + ", expected " + instance_name(want)};
    std::string gl = glyph(is_ideal(g, L), is_ideal(g, H));
    if (gl != b.glyph) return {false, "decoration " + gl + " expected " + b.glyph};
    return {true, instance_name(r.instance) + " " + gl};
}

struct Table3Row {
    std::string label;
    Family three;
    std::function<bool(const Vec&)> param_ok;  // constraint on the 3-dim parameter
    std::vector<Instance> members;
};

inline std::vector<Table3Row> table3_rows() {
    auto any = [](const Vec&) { return true; };
    auto nonzero = [](const Vec& p) { return p[0] != 0; };
    auto zero = [](const Vec& p) { return p[0] == 0; };
    using F = Family;
    return {
        {"R><R^3", F::R3, any,
         {{F::R4, {}}, {F::RxH3, {}}, {F::RxR3_gen, {}}, {F::RxR3_lambda, {Q(1, 2)}}, {F::RxR3p_lambda, {Q(1)}}, {F::N4, {}},
          {F::R4_gen, {}}, {F::R4_lambda, {Q(2)}}, {F::R4_mu_lambda, {Q(1, 2), Q(1)}}, {F::R4p_mu_lambda, {Q(1), Q(1)}}}},
        {"R><h3", F::H3, any,
         {{F::RxH3, {}}, {F::N4, {}}, {F::R4_lambda, {Q(0)}}, {F::D4, {}}, {F::D4_lambda, {Q(3, 4)}}, {F::D4p_lambda, {Q(1)}},
          {F::H4, {}}}},
        {"R><r3", F::R3_gen, any, {{F::RxR3_gen, {}}, {F::R4_gen, {}}, {F::R4_lambda, {Q(2)}}, {F::D4_lambda, {Q(1)}}}},
        {"R><r3,0", F::R3_lambda, zero,
         {{F::RxR3_lambda, {Q(1, 2)}}, {F::AffRxAffR, {}}, {F::R4_lambda, {Q(0)}}, {F::D4, {}}, {F::D4_lambda, {Q(1)}}}},
        {"R><r'3,0", F::R3p_lambda, zero, {{F::RxR3p_lambda, {Q(0)}}, {F::AffC, {}}}},
        {"R><r3,lambda", F::R3_lambda, nonzero,
         {{F::RxR3_lambda, {Q(1, 2)}}, {F::AffRxAffR, {}}, {F::AffC, {}}, {F::R4_lambda, {Q(2)}}, {F::R4_mu_lambda, {Q(1, 2), Q(1)}},
          {F::H4, {}}, {F::D4_lambda, {Q(3, 4)}}}},
        {"R><r'3,lambda", F::R3p_lambda, nonzero, {{F::RxR3p_lambda, {Q(1)}}, {F::AffC, {}}, {F::R4p_mu_lambda, {Q(1), Q(1)}}}},
    };
}

// Some hyperplane subalgebra of the row's type, searched among kernels of small functionals.
inline std::optional<std::vector<Vec>> find_three_dim(const LieAlgebra& g, Family f, const std::function<bool(const Vec&)>& ok) {
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c)
                for (int d = -2; d <= 2; ++d) {
                    if (!a && !b && !c && !d) continue;
                    Mat phi = Mat::from_rows({vec({a, b, c, d})}, 4);
                    auto H = kernel(phi);
                    Subspace S = Subspace::span(H, 4);
                    if (!is_subalgebra(g, S)) continue;
                    auto r = identify3(restrict_to(g, H));
                    if (r.instance.family == f && ok(r.instance.params)) return H;
                }
    return std::nullopt;
}

inline TableReport verify_table_13() {
    TableReport rep{"13", {}};
    for (auto& b : table13_bullets()) {
        Instance in{b.family, b.params};
        std::string s = "<" + to_string(b.line) + "> " + b.glyph + " <";
        for (size_t i = 0; i < b.three.size(); ++i) s += (i ? ", " : "") + to_string(b.three[i]);
        s += ">";
        auto [ok, det] = check_one_three(b);
        rep.add({"13/bullet/" + instance_name(in) + "/" + s, instance_name(in), s, ok, det, ""});
    }
    for (auto& row : table3_rows())
        for (auto& m : row.members) {
            auto H = find_three_dim(make(m), row.three, row.param_ok);
            std::string det = "no hyperplane subalgebra of the row type found";
            if (H) {
                det = "hyperplane";
                for (auto& v : *H) det += " " + to_string(v);
            }
            rep.add({"13/row/" + row.label + "/" + instance_name(m), instance_name(m), "member of " + row.label, H.has_value(), det,
                     ""});
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Semidirect extensions

// h |x_rho V with basis (x, y, z, w); h = <x,y> with [x,y] = hxy * y, V = <z,w> with [z,w] = vzw * w.
inline LieAlgebra semidirect_2_2(const Mat& rx, const Mat& ry, const Q& hxy, const Q& vzw) {
    std::vector<BracketEntry> br;
    if (hxy != 0) br.push_back({0, 1, vec({0, hxy, 0, 0})});
    if (vzw != 0) br.push_back({2, 3, vec({0, 0, 0, vzw})});
    for (size_t a = 0; a < 2; ++a) {
        const Mat& r = a == 0 ? rx : ry;
        for (size_t j = 0; j < 2; ++j) {
            Vec c = zeros(4);
            c[2] = r(0, j);
            c[3] = r(1, j);
            if (!is_zero(c)) br.push_back({a, 2 + j, c});
        }
    }
    return LieAlgebra(4, br);
}

inline LieAlgebra make_g_alpha(const Q& alpha) {
    Mat rx = Mat::from_rows({vec({alpha + Q(1, 2), 0}), vec({0, alpha - Q(1, 2)})}, 2);
    Mat ry = Mat::from_rows({vec({0, 1}), vec({0, 0})}, 2);
    return semidirect_2_2(rx, ry, 1, 0);
}

// The printed table for g_alpha.
inline Instance g_alpha_expected(const Q& a) {
    if (a == Q(-1, 2)) return {Family::D4, {}};
    if (a == Q(1, 2)) return {Family::D4_lambda, {Q(1)}};
    Q lam = ((a > Q(-1, 2) && a < Q(1, 2)) || (a > Q(1, 2) && a <= Q(3, 2))) ? Q(Q(2) / (2 * a + 1)) : Q((a - Q(1, 2)) / (a + Q(1, 2)));
    return canonicalize(Family::D4_lambda, {lam}).instance;
}

inline TableReport verify_semidirect_props() {
    TableReport rep{"semidirect", {}};
    auto item = [&](const std::string& id, const std::string& subj, const std::string& claim, bool ok, const std::string& d) {
        rep.add({"semidirect/" + id, subj, claim, ok, d, ""});
    };
    // g_alpha table
    for (Q a : {Q(-1, 2), Q(1, 2), Q(1), Q(-1), Q(2), Q(3, 2)}) {
        auto r = identify(make_g_alpha(a));
        auto want = g_alpha_expected(a);
        item("g_alpha/" + to_string(a), "g_alpha, alpha=" + to_string(a), "identifies as " + instance_name(want), r.instance == want,
             instance_name(r.instance));
    }
    // (i): R^2 |x R^2 from the printed abelian splits with the right side an ideal
    for (auto& c : table2_cells()) {
        if (c.kind != DecompKind::R2R2 || c.glyph == "⋈") continue;
        for (auto& row : table2_rows()) {
            if (row.label != c.row) continue;
            Vec p = row.samples.front();
            LieAlgebra g = make(row.family, p);
            auto [ok, det] = check_split(g, c.printed(p), DecompKind::R2R2, c.glyph);
            item("i/" + row.label, instance_name({row.family, p}), "R^2 ⋉ R^2", ok, det);
        }
    }
    // (i) negative cases: n4 and r4,0 have no abelian complement to the abelian ideal g'
    for (Instance in : {Instance{Family::N4, {}}, Instance{Family::R4_lambda, {Q(0)}}}) {
        LieAlgebra g = make(in);
        auto gp = derived(g);
        std::vector<Vec> frame;
        Subspace acc = gp;
        for (size_t i = 0; i < 4; ++i)
            if (!acc.contains(unit(4, i))) {
                frame.push_back(unit(4, i));
                acc = sum(acc, Subspace::span({unit(4, i)}, 4));
            }
        // complements of g' are spans of c_k + (g' components)
        auto gv = gp.vectors();
        std::vector<std::string> names;
        PVec u = pvec(frame[0]), v = pvec(frame[1]);
        for (size_t k = 0; k < 2; ++k) {
            names.push_back(var_name(names.size()));
            u = padd(u, pscale(Poly::var(names.size() - 1), pvec(gv[k])));
        }
        for (size_t k = 0; k < 2; ++k) {
            names.push_back(var_name(names.size()));
            v = padd(v, pscale(Poly::var(names.size() - 1), pvec(gv[k])));
        }
        auto sol = solve_small_system(closure_system(g, u, v, names, SubType::Abelian));
        item("i/no/" + instance_name(in), instance_name(in), "no abelian complement to g'", sol.status == SolveStatus::Empty,
             status_name(sol.status));
    }
    // (ii): aff |x R^2 from the printed splits
    for (auto& c : table2_cells()) {
        if (c.kind != DecompKind::AffR2 || c.glyph != "⋉") continue;
        for (auto& row : table2_rows()) {
            if (row.label != c.row) continue;
            Vec p = row.samples.front();
            LieAlgebra g = make(row.family, p);
            auto [ok, det] = check_split(g, c.printed(p), DecompKind::AffR2, c.glyph);
            item("ii/" + row.label, instance_name({row.family, p}), "aff(R) ⋉ R^2", ok, det);
        }
    }
    // (ii) rho cases with one-dimensional image
    auto M = [](Q a, Q b, Q c, Q d) { return Mat::from_rows({vec({a, b}), vec({c, d})}, 2); };
    Mat Z = M(0, 0, 0, 0);
    struct RhoCase {
        std::string name;
        Mat rx;
        Instance want;
    };
    std::vector<RhoCase> rc = {
        {"diag(0,1/2)", M(0, 0, 0, Q(1, 2)), {Family::RxR3_lambda, {Q(1, 2)}}},
        {"diag(1/2,1)", M(Q(1, 2), 0, 0, 1), canonicalize(Family::R4_mu_lambda, {Q(1, 2), Q(1)}).instance},
        {"jordan(2)", M(2, 1, 0, 2), {Family::R4_lambda, {Q(2)}}},
        {"rotation(1,2)", M(1, 2, -2, 1), canonicalize(Family::R4p_mu_lambda, {Q(1, 2), Q(1, 2)}).instance},
    };
    for (auto& c : rc) {
        auto r = identify(semidirect_2_2(c.rx, Z, 1, 0));
        item("ii/rho/" + c.name, "aff(R) ⋉ R^2, rho(x)=" + c.name, "identifies as " + instance_name(c.want), r.instance == c.want,
             instance_name(r.instance));
    }
    // aff extensions: (i) over R^2, (ii) over aff(R)
    Instance rxaff{Family::RxR3_lambda, {Q(0)}}, affaff{Family::AffRxAffR, {}};
    for (auto ab : std::vector<std::pair<Q, Q>>{{0, 0}, {0, 1}, {1, 0}, {2, 3}}) {
        auto r = identify(semidirect_2_2(M(0, 0, ab.first, ab.second), Z, 0, 1));
        item("aff/i/" + to_string(ab.first) + "," + to_string(ab.second), "R^2 ⋉ aff(R)", "identifies as R^2 x aff(R)",
             r.instance == rxaff, instance_name(r.instance));
    }
    for (Q a : {Q(0), Q(1), Q(-2)}) {
        LieAlgebra g = semidirect_2_2(M(0, 0, a, 1), M(0, 0, 1, 0), 1, 1);
        auto r = identify(g);
        // <x - z + a w, y + w> and <z - a w, w> are complementary ideals isomorphic to aff(R)
        Vec x = unit(4, 0), y = unit(4, 1), z = unit(4, 2), w = unit(4, 3);
        bool split = false;
        try {
            auto ps = product_from_decomposition(g, {x - z + a * w, y + w}, {z - a * w, w});
            split = ps.plus_ideal && ps.minus_ideal && decomposition_type(g, ps).kind == DecompKind::AffAff;
        } catch (const Error&) {
        }
        item("aff/ii/first/" + to_string(a), "aff(R) ⋉ aff(R), first rho", "identifies as aff(R) x aff(R) with the stated ideals",
             r.instance == affaff && split, instance_name(r.instance) + (split ? ", ideals verified" : ", ideals fail"));
    }
    for (auto ab : std::vector<std::pair<Q, Q>>{{1, 0}, {0, 1}, {2, 3}}) {
        Q a = ab.first, b = ab.second;
        LieAlgebra g = semidirect_2_2(M(0, 0, a, b), Z, 1, 1);
        auto r = identify(g);
        Vec x = unit(4, 0), y = unit(4, 1), z = unit(4, 2), w = unit(4, 3);
        bool split = false;
        try {
            auto ps = product_from_decomposition(g, {x - b * z + a * w, y}, {z, w});
            split = ps.plus_ideal && ps.minus_ideal && decomposition_type(g, ps).kind == DecompKind::AffAff;
        } catch (const Error&) {
        }
        item("aff/ii/second/" + to_string(a) + "," + to_string(b), "aff(R) ⋉ aff(R), second rho",
             "identifies as aff(R) x aff(R) with the stated ideals", r.instance == affaff && split,
             instance_name(r.instance) + (split ? ", ideals verified" : ", ideals fail"));
    }
    return rep;
}

}  // namespace lie4
