#pragma once

#include "lie_algebra.hpp"

#include <array>
#include <functional>

namespace lie4 {

enum class Family {
    R,
    R2,
    AffR,
    R3,
    H3,
    R3_gen,
    R3_lambda,
    R3p_lambda,
    R4,
    AffRxAffR,
    RxH3,
    RxR3_gen,
    RxR3_lambda,
    RxR3p_lambda,
    N4,
    AffC,
    R4_gen,
    R4_lambda,
    R4_mu_lambda,
    R4p_mu_lambda,
    D4,
    D4_lambda,
    D4p_lambda,
    H4,
};

struct FamilyInfo {
    Family id;
    const char* tag;
    const char* name;
    size_t dim;
    size_t arity;
    const char* constraint;
    bool indecomposable;
};

inline const std::vector<FamilyInfo>& family_table() {
    static const std::vector<FamilyInfo> t = {
        {Family::R, "R", "R", 1, 0, "", false},
        {Family::R2, "R2", "R^2", 2, 0, "", false},
        {Family::AffR, "AffR", "aff(R)", 2, 0, "", true},
        {Family::R3, "R3", "R^3", 3, 0, "", false},
        {Family::H3, "H3", "h3", 3, 0, "", true},
        {Family::R3_gen, "R3_gen", "r3", 3, 0, "", true},
        {Family::R3_lambda, "R3_lambda", "r3,lambda", 3, 1, "|lambda| <= 1", true},
        {Family::R3p_lambda, "R3p_lambda", "r'3,lambda", 3, 1, "lambda >= 0", true},
        {Family::R4, "R4", "R^4", 4, 0, "", false},
        {Family::AffRxAffR, "AffRxAffR", "aff(R) x aff(R)", 4, 0, "", false},
        {Family::RxH3, "RxH3", "R x h3", 4, 0, "", false},
        {Family::RxR3_gen, "RxR3_gen", "R x r3", 4, 0, "", false},
        {Family::RxR3_lambda, "RxR3_lambda", "R x r3,lambda", 4, 1, "|lambda| <= 1", false},
        {Family::RxR3p_lambda, "RxR3p_lambda", "R x r'3,lambda", 4, 1, "lambda >= 0", false},
        {Family::N4, "N4", "n4", 4, 0, "", true},
        {Family::AffC, "AffC", "aff(C)", 4, 0, "", true},
        {Family::R4_gen, "R4_gen", "r4", 4, 0, "", true},
        {Family::R4_lambda, "R4_lambda", "r4,lambda", 4, 1, "", true},
        {Family::R4_mu_lambda, "R4_mu_lambda", "r4,mu,lambda", 4, 2,
         "mu*lambda != 0 and -1 < mu <= lambda <= 1, or -1 = mu <= lambda < 0", true},
        {Family::R4p_mu_lambda, "R4p_mu_lambda", "r'4,mu,lambda", 4, 2, "mu > 0", true},
        {Family::D4, "D4", "d4", 4, 0, "", true},
        {Family::D4_lambda, "D4_lambda", "d4,lambda", 4, 1, "lambda >= 1/2", true},
        {Family::D4p_lambda, "D4p_lambda", "d'4,lambda", 4, 1, "lambda >= 0", true},
        {Family::H4, "H4", "h4", 4, 0, "", true},
    };
    return t;
}

inline const FamilyInfo& info(Family f) { return family_table()[static_cast<size_t>(f)]; }

inline std::optional<Family> family_from_tag(const std::string& tag) {
    for (auto& fi : family_table())
        if (tag == fi.tag) return fi.id;
    return std::nullopt;
}

struct Instance {
    Family family;
    Vec params;
    bool operator==(const Instance& o) const { return family == o.family && params == o.params; }
    bool operator<(const Instance& o) const {
        if (family != o.family) return family < o.family;
        return params < o.params;
    }
};

inline std::string instance_name(const Instance& in) {
    std::string s = info(in.family).name;
    if (!in.params.empty()) {
        s += " (";
        for (size_t i = 0; i < in.params.size(); ++i) {
            if (i) s += ", ";
            s += to_string(in.params[i]);
        }
        s += ")";
    }
    return s;
}

namespace detail {

inline void check_arity(Family f, const Vec& p) {
    if (p.size() != info(f).arity)
        throw Error(Errc::ConstraintViolation, std::string(info(f).name) + " expects " +
                                                   std::to_string(info(f).arity) + " parameter(s)");
}

// 3-dimensional brackets placed on indices off, off+1, off+2.
inline std::vector<Br> three_dim(Family f, const Vec& p, size_t off) {
    size_t a = off, b = off + 1, c = off + 2;
    switch (f) {
    case Family::R3: return {};
    case Family::H3: return {{a, b, {{c, 1}}}};
    case Family::R3_gen: return {{a, b, {{b, 1}}}, {a, c, {{b, 1}, {c, 1}}}};
    case Family::R3_lambda: return {{a, b, {{b, 1}}}, {a, c, {{c, p[0]}}}};
    case Family::R3p_lambda: return {{a, b, {{b, p[0]}, {c, -1}}}, {a, c, {{b, 1}, {c, p[0]}}}};
    default: throw Error(Errc::UnknownName, "not a 3-dimensional family");
    }
}

}  // namespace detail

// Bracket table in the standard basis, without range checks (parameters may be outside the region).
inline LieAlgebra make_raw(Family f, const Vec& p) {
    detail::check_arity(f, p);
    size_t n = info(f).dim;
    std::vector<Br> bs;
    switch (f) {
    case Family::R:
    case Family::R2:
    case Family::R4: break;
    case Family::AffR: bs = {{0, 1, {{1, 1}}}}; break;
    case Family::R3:
    case Family::H3:
    case Family::R3_gen:
    case Family::R3_lambda:
    case Family::R3p_lambda: bs = detail::three_dim(f, p, 0); break;
    case Family::AffRxAffR: bs = {{0, 3, {{3, 1}}}, {1, 2, {{2, 1}}}}; break;
    case Family::RxH3: bs = detail::three_dim(Family::H3, p, 1); break;
    case Family::RxR3_gen: bs = detail::three_dim(Family::R3_gen, p, 1); break;
    case Family::RxR3_lambda: bs = detail::three_dim(Family::R3_lambda, p, 1); break;
    case Family::RxR3p_lambda: bs = detail::three_dim(Family::R3p_lambda, p, 1); break;
    case Family::N4: bs = {{0, 1, {{2, 1}}}, {0, 2, {{3, 1}}}}; break;
    case Family::AffC: bs = {{0, 2, {{2, 1}}}, {0, 3, {{3, 1}}}, {1, 2, {{3, 1}}}, {1, 3, {{2, -1}}}}; break;
    case Family::R4_gen: bs = {{0, 1, {{1, 1}}}, {0, 2, {{1, 1}, {2, 1}}}, {0, 3, {{2, 1}, {3, 1}}}}; break;
    case Family::R4_lambda: bs = {{0, 1, {{1, 1}}}, {0, 2, {{2, p[0]}}}, {0, 3, {{2, 1}, {3, p[0]}}}}; break;
    case Family::R4_mu_lambda: bs = {{0, 1, {{1, 1}}}, {0, 2, {{2, p[0]}}}, {0, 3, {{3, p[1]}}}}; break;
    case Family::R4p_mu_lambda:
        bs = {{0, 1, {{1, p[0]}}}, {0, 2, {{2, p[1]}, {3, -1}}}, {0, 3, {{2, 1}, {3, p[1]}}}};
        break;
    case Family::D4: bs = {{0, 1, {{1, 1}}}, {0, 2, {{2, -1}}}, {1, 2, {{3, 1}}}}; break;
    case Family::D4_lambda:
        bs = {{0, 1, {{1, p[0]}}}, {0, 2, {{2, 1 - p[0]}}}, {0, 3, {{3, 1}}}, {1, 2, {{3, 1}}}};
        break;
    case Family::D4p_lambda:
        bs = {{0, 1, {{1, p[0]}, {2, -1}}}, {0, 2, {{1, 1}, {2, p[0]}}}, {0, 3, {{3, 2 * p[0]}}}, {1, 2, {{3, 1}}}};
        break;
    case Family::H4: bs = {{0, 1, {{1, 1}}}, {0, 2, {{1, 1}, {2, 1}}}, {0, 3, {{3, 2}}}, {1, 2, {{3, 1}}}}; break;
    }
    std::vector<std::string> labels;
    size_t first = (n == 3) ? 1 : (n == 2 ? 1 : 0);
    for (size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(first + i));
    return LieAlgebra(n, brackets(n, bs), labels);
}

// Admissible parameter region, exactly as stated for each family.
inline bool in_region(Family f, const Vec& p) {
    if (p.size() != info(f).arity) return false;
    switch (f) {
    case Family::R3_lambda:
    case Family::RxR3_lambda: return abs(p[0]) <= 1;
    case Family::R3p_lambda:
    case Family::RxR3p_lambda:
    case Family::D4p_lambda: return p[0] >= 0;
    case Family::R4_mu_lambda: {
        const Q &mu = p[0], &la = p[1];
        if (mu * la == 0) return false;
        if (-1 < mu && mu <= la && la <= 1) return true;
        return mu == -1 && mu <= la && la < 0;
    }
    case Family::R4p_mu_lambda: return p[0] > 0;
    case Family::D4_lambda: return p[0] >= Q(1, 2);
    default: return true;
    }
}

inline LieAlgebra make(Family f, const Vec& p) {
    detail::check_arity(f, p);
    if (!in_region(f, p))
        throw Error(Errc::ConstraintViolation, std::string(info(f).name) + " requires " + info(f).constraint);
    return make_raw(f, p);
}

inline LieAlgebra make(const Instance& in) { return make(in.family, in.params); }

struct Canonical {
    Instance instance;
    Mat witness;  // isomorphism make_raw(input) -> make(instance)
};

namespace detail {

// Witness from new basis vectors written in old coordinates (columns).
inline Mat witness_from_basis(const std::vector<Vec>& f, size_t n) { return inverse(Mat::from_cols(f, n)); }

inline Canonical canon_r3(Family f, const Vec& p, size_t off, size_t n) {
    std::vector<Vec> b;
    for (size_t i = 0; i < n; ++i) b.push_back(unit(n, i));
    Vec q = p;
    if (f == Family::R3_lambda || f == Family::RxR3_lambda) {
        if (abs(p[0]) > 1) {
            b[off] = Q(1) / p[0] * unit(n, off);
            b[off + 1] = unit(n, off + 2);
            b[off + 2] = unit(n, off + 1);
            q[0] = Q(1) / p[0];
        }
    } else if (p[0] < 0) {
        b[off] = -unit(n, off);
        b[off + 2] = -unit(n, off + 2);
        q[0] = -p[0];
    }
    return {{f, q}, witness_from_basis(b, n)};
}

}  // namespace detail

// Representative inside the admissible region plus a basis-change witness.
// Accepts the extended region where the family is still defined.
inline Canonical canonicalize(Family f, const Vec& p) {
    detail::check_arity(f, p);
    size_t n = info(f).dim;
    if (in_region(f, p)) return {{f, p}, Mat::identity(n)};
    std::vector<Vec> b;
    for (size_t i = 0; i < n; ++i) b.push_back(unit(n, i));
    switch (f) {
    case Family::R3_lambda:
    case Family::R3p_lambda: return detail::canon_r3(f, p, 0, n);
    case Family::RxR3_lambda:
    case Family::RxR3p_lambda: return detail::canon_r3(f, p, 1, n);
    case Family::R4_mu_lambda: {
        if (p[0] == 0 || p[1] == 0)
            throw Error(Errc::ConstraintViolation, "r4,mu,lambda needs mu*lambda != 0");
        std::array<Q, 3> ev{Q(1), p[0], p[1]};
        for (size_t k = 0; k < 3; ++k) {
            std::vector<std::pair<Q, size_t>> rest;
            for (size_t j = 0; j < 3; ++j)
                if (j != k) rest.push_back({ev[j] / ev[k], j});
            std::stable_sort(rest.begin(), rest.end(),
                             [](const auto& x, const auto& y) { return x.first < y.first; });
            Vec q{rest[0].first, rest[1].first};
            if (!in_region(f, q)) continue;
            std::vector<Vec> nb{Q(1) / ev[k] * unit(4, 0), unit(4, 1 + k), unit(4, 1 + rest[0].second),
                                unit(4, 1 + rest[1].second)};
            return {{f, q}, detail::witness_from_basis(nb, 4)};
        }
        throw Error(Errc::InternalMismatch, "no admissible ordering for r4,mu,lambda");
    }
    case Family::R4p_mu_lambda: {
        if (p[0] == 0) throw Error(Errc::ConstraintViolation, "r'4,mu,lambda needs mu != 0");
        b[0] = -unit(4, 0);
        b[3] = -unit(4, 3);
        return {{f, {-p[0], -p[1]}}, detail::witness_from_basis(b, 4)};
    }
    case Family::D4_lambda: {
        b[1] = unit(4, 2);
        b[2] = unit(4, 1);
        b[3] = -unit(4, 3);
        return {{f, {1 - p[0]}}, detail::witness_from_basis(b, 4)};
    }
    case Family::D4p_lambda: {
        b[0] = -unit(4, 0);
        b[2] = -unit(4, 2);
        b[3] = -unit(4, 3);
        return {{f, {-p[0]}}, detail::witness_from_basis(b, 4)};
    }
    default: throw Error(Errc::ConstraintViolation, std::string(info(f).name) + " has no extended region");
    }
}

enum class CommClass { Zero, Line, PlaneNoCenter, PlaneCenter, Space, Heisenberg, Other };

inline const char* comm_class_name(CommClass c) {
    switch (c) {
    case CommClass::Zero: return "0";
    case CommClass::Line: return "R";
    case CommClass::PlaneNoCenter: return "R^2, z = 0";
    case CommClass::PlaneCenter: return "R^2, z != 0";
    case CommClass::Space: return "R^3";
    case CommClass::Heisenberg: return "h3";
    case CommClass::Other: return "other";
    }
    return "?";
}

// Table of commutator classes for the 4-dimensional families.
inline CommClass commutator_class(Family f, const Vec& p) {
    switch (f) {
    case Family::R4: return CommClass::Zero;
    case Family::RxH3: return CommClass::Line;
    case Family::RxR3_lambda: return p[0] == 0 ? CommClass::Line : CommClass::PlaneCenter;
    case Family::AffRxAffR:
    case Family::AffC: return CommClass::PlaneNoCenter;
    case Family::D4_lambda: return p[0] == 1 ? CommClass::PlaneNoCenter : CommClass::Heisenberg;
    case Family::RxR3_gen:
    case Family::RxR3p_lambda:
    case Family::N4: return CommClass::PlaneCenter;
    case Family::R4_lambda: return p[0] == 0 ? CommClass::PlaneCenter : CommClass::Space;
    case Family::R4_gen:
    case Family::R4_mu_lambda:
    case Family::R4p_mu_lambda: return CommClass::Space;
    case Family::D4:
    case Family::D4p_lambda:
    case Family::H4: return CommClass::Heisenberg;
    default: return CommClass::Other;
    }
}

// Same classification computed from the algebra itself.
inline CommClass computed_commutator_class(const LieAlgebra& g) {
    auto d = derived(g);
    switch (d.dim()) {
    case 0: return CommClass::Zero;
    case 1: return CommClass::Line;
    case 2: return center(g).dim() == 0 ? CommClass::PlaneNoCenter : CommClass::PlaneCenter;
    case 3: return is_abelian(g, d) ? CommClass::Space : CommClass::Heisenberg;
    default: return CommClass::Other;
    }
}

// Parameter grids used by tests and replays.
inline std::vector<Instance> grid() {
    std::vector<Instance> g;
    auto q = [](long a, long b = 1) { return make_q(a, b); };
    for (Family f : {Family::R4, Family::AffRxAffR, Family::RxH3, Family::RxR3_gen, Family::N4, Family::AffC,
                     Family::R4_gen, Family::D4, Family::H4})
        g.push_back({f, {}});
    for (auto l : {q(-1), q(-1, 2), q(0), q(1, 3), q(1)}) g.push_back({Family::RxR3_lambda, {l}});
    for (auto l : {q(0), q(1, 2), q(1), q(2), q(5)}) g.push_back({Family::RxR3p_lambda, {l}});
    for (auto l : {q(-2), q(-1), q(-1, 2), q(0), q(1, 2), q(1), q(3)}) g.push_back({Family::R4_lambda, {l}});
    for (auto [m, l] : std::vector<std::pair<Q, Q>>{{q(1, 3), q(1, 2)},
                                                    {q(-1, 2), q(1, 2)},
                                                    {q(1), q(1)},
                                                    {q(1, 2), q(1)},
                                                    {q(-1), q(-1)},
                                                    {q(-1), q(-1, 2)},
                                                    {q(-1, 2), q(-1, 2)},
                                                    {q(1, 4), q(3, 4)},
                                                    {q(-3, 4), q(1)}})
        g.push_back({Family::R4_mu_lambda, {m, l}});
    for (auto [m, l] : std::vector<std::pair<Q, Q>>{
             {q(1), q(0)}, {q(2), q(1)}, {q(1, 2), q(-1)}, {q(3), q(2)}, {q(2), q(3)}, {q(1), q(-1, 2)}})
        g.push_back({Family::R4p_mu_lambda, {m, l}});
    for (auto l : {q(1, 2), q(3, 4), q(1), q(2), q(5)}) g.push_back({Family::D4_lambda, {l}});
    for (auto l : {q(0), q(1, 2), q(1), q(2), q(3)}) g.push_back({Family::D4p_lambda, {l}});
    return g;
}

inline std::vector<Instance> grid3() {
    std::vector<Instance> g;
    auto q = [](long a, long b = 1) { return make_q(a, b); };
    g.push_back({Family::R, {}});
    g.push_back({Family::R2, {}});
    g.push_back({Family::AffR, {}});
    g.push_back({Family::R3, {}});
    g.push_back({Family::H3, {}});
    g.push_back({Family::R3_gen, {}});
    for (auto l : {q(-1), q(-1, 2), q(0), q(1, 3), q(1, 2), q(1)}) g.push_back({Family::R3_lambda, {l}});
    for (auto l : {q(0), q(1, 2), q(1), q(2), q(5)}) g.push_back({Family::R3p_lambda, {l}});
    return g;
}

// Appendix-style matrix realizations: one generator per free matrix parameter.
// Returns one or more realizations (d4 and d4,lambda have two).
inline std::vector<std::vector<Mat>> matrix_realizations(Family f, const Vec& p) {
    if (!info(f).indecomposable || info(f).dim != 4)
        throw Error(Errc::NoRealizationListed, std::string(info(f).name) + " is decomposable");
    // Each realization is a function of (x, y, z, w).
    using Fn = std::function<Mat(const Q&, const Q&, const Q&, const Q&)>;
    auto gens = [](size_t size, const Fn& fn) {
        std::vector<Mat> out;
        for (int k = 0; k < 4; ++k) {
            Q v[4] = {0, 0, 0, 0};
            v[k] = 1;
            Mat m = fn(v[0], v[1], v[2], v[3]);
            if (m.rows() != size) throw Error(Errc::InternalMismatch, "realization size");
            out.push_back(m);
        }
        return out;
    };
    auto M = [](size_t s, std::vector<Q> e) {
        Mat m(s, s);
        for (size_t i = 0; i < s * s; ++i) m(i / s, i % s) = e[i];
        return m;
    };
    const Q h(1, 2);
    std::vector<std::vector<Mat>> out;
    switch (f) {
    case Family::N4:
        out.push_back(gens(4, [&](const Q& x, const Q& y, const Q& z, const Q& w) {
            return M(4, {0, x, 0, w, 0, 0, x, y, 0, 0, 0, z, 0, 0, 0, 0});
        }));
        break;
    case Family::AffC:
        out.push_back(gens(3, [&](const Q& x, const Q& y, const Q& z, const Q& w) {
            return M(3, {x, z, y, -z, x, w, 0, 0, 0});
        }));
        break;
    case Family::R4_gen:
        out.push_back(gens(4, [&](const Q& x, const Q& y, const Q& z, const Q& w) {
            return M(4, {x, x, 0, y, 0, x, x, z, 0, 0, x, w, 0, 0, 0, 0});
        }));
        break;
    case Family::R4_lambda: {
        Q l = p[0];
        out.push_back(gens(4, [&](const Q& x, const Q& y, const Q& z, const Q& w) {
            return M(4, {x, 0, 0, y, 0, l * x, x, z, 0, 0, l * x, w, 0, 0, 0, 0});
        }));
        break;
    }
    case Family::R4_mu_lambda: {
        Q mu = p[0], l = p[1];
        out.push_back(gens(4, [&](const Q& x, const Q& y, const Q& z, const Q& w) {
            return M(4, {x, 0, 0, y, 0, mu * x, 0, z, 0, 0, l * x, w, 0, 0, 0, 0});
        }));
        break;
    }
    case Family::R4p_mu_lambda: {
        Q mu = p[0], l = p[1];
        out.push_back(gens(4, [&](const Q& x, const Q& y, const Q& z, const Q& w) {
            return M(4, {mu * x, 0, 0, y, 0, l * x, x, z, 0, -x, l * x, w, 0, 0, 0, 0});
        }));
        break;
    }
    case Family::D4:
        out.push_back(gens(3, [&](const Q& x, const Q& y, const Q& z, const Q& w) {
            return M(3, {0, x, z, 0, w, y, 0, 0, 0});
        }));
        out.push_back(gens(4, [&](const Q& x, const Q& y, const Q& z, const Q& w) {
            return M(4, {w, 0, 0, x, 0, -w, 0, y, -h * y, h * x, 0, z, 0, 0, 0, 0});
        }));
        break;
    case Family::D4_lambda: {
        Q l = p[0];
        out.push_back(gens(3, [&](const Q& x, const Q& y, const Q& z, const Q& w) {
            return M(3, {w, x, z, 0, (1 - l) * w, y, 0, 0, 0});
        }));
        out.push_back(gens(4, [&](const Q& x, const Q& y, const Q& z, const Q& w) {
            return M(4, {l * w, 0, 0, x, 0, (1 - l) * w, 0, y, -h * y, h * x, w, z, 0, 0, 0, 0});
        }));
        break;
    }
    case Family::D4p_lambda: {
        Q l = p[0];
        out.push_back(gens(4, [&](const Q& x, const Q& y, const Q& z, const Q& w) {
            return M(4, {l * w, w, 0, x, -w, l * w, 0, y, -h * y, h * x, 2 * l * w, z, 0, 0, 0, 0});
        }));
        break;
    }
    case Family::H4:
        out.push_back(gens(4, [&](const Q& x, const Q& y, const Q& z, const Q& w) {
            return M(4, {h * w, w, 0, x, 0, h * w, 0, y, -h * y, h * x, w, z, 0, 0, 0, 0});
        }));
        break;
    default: throw Error(Errc::NoRealizationListed, info(f).name);
    }
    return out;
}

}  // namespace lie4
