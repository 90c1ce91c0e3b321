#pragma once

#include <functional>

// Bounded solver for small polynomial systems over Q, decided over R.
// Moves: linear substitution, variable-factor splitting, univariate roots (Sturm for the
// irrational remainder), semidefinite quadratics, and pivot elimination on a polynomial
// coefficient with a zero/nonzero branch. Anything else is Undecided.

#include <array>
#include <map>
#include <set>

#include "jordan.hpp"

namespace lie4 {

constexpr size_t kMaxVars = 8;
using Mono = std::array<uint8_t, kMaxVars>;

class Poly {
public:
    Poly() = default;
    Poly(const Q& c) {
        if (c != 0) t_[Mono{}] = c;
    }
    static Poly var(size_t i) {
        Poly p;
        Mono m{};
        m[i] = 1;
        p.t_[m] = 1;
        return p;
    }
    const std::map<Mono, Q>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Mono{}); }
    Q constant() const {
        auto it = t_.find(Mono{});
        return it == t_.end() ? Q(0) : it->second;
    }
    int degree() const {
        int d = -1;
        for (auto& [m, c] : t_) {
            int s = 0;
            for (auto e : m) s += e;
            d = std::max(d, s);
        }
        return d;
    }
    int degree_in(size_t v) const {
        int d = -1;
        for (auto& [m, c] : t_) d = std::max(d, int(m[v]));
        return d;
    }
    std::set<size_t> vars() const {
        std::set<size_t> s;
        for (auto& [m, c] : t_)
            for (size_t i = 0; i < kMaxVars; ++i)
                if (m[i]) s.insert(i);
        return s;
    }
    // Coefficients as polynomials in the other variables: p = sum_k out[k] v^k.
    std::vector<Poly> coeffs_in(size_t v) const {
        std::vector<Poly> out(std::max(0, degree_in(v)) + 1);
        for (auto& [m, c] : t_) {
            Mono r = m;
            r[v] = 0;
            out[m[v]].add(r, c);
        }
        return out;
    }
    Q eval(const Vec& x) const {
        Q s = 0;
        for (auto& [m, c] : t_) {
            Q t = c;
            for (size_t i = 0; i < kMaxVars; ++i)
                for (int k = 0; k < m[i]; ++k) t *= x[i];
            s += t;
        }
        return s;
    }
    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (auto& [m, c] : o.t_) r.add(m, c);
        return r;
    }
    Poly operator-() const {
        Poly r;
        for (auto& [m, c] : t_) r.t_[m] = -c;
        return r;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        Poly r;
        for (auto& [m1, c1] : t_)
            for (auto& [m2, c2] : o.t_) {
                Mono m;
                for (size_t i = 0; i < kMaxVars; ++i) m[i] = uint8_t(m1[i] + m2[i]);
                r.add(m, c1 * c2);
            }
        return r;
    }
    bool operator==(const Poly& o) const { return t_ == o.t_; }
    bool operator<(const Poly& o) const { return t_ < o.t_; }

    // Largest variable factor x^k dividing every term, as exponents.
    Mono common_monomial() const {
        Mono g{};
        bool first = true;
        for (auto& [m, c] : t_) {
            if (first) {
                g = m;
                first = false;
            } else
                for (size_t i = 0; i < kMaxVars; ++i) g[i] = std::min(g[i], m[i]);
        }
        return g;
    }
    Poly divide_monomial(const Mono& d) const {
        Poly r;
        for (auto& [m, c] : t_) {
            Mono q = m;
            for (size_t i = 0; i < kMaxVars; ++i) q[i] = uint8_t(q[i] - d[i]);
            r.t_[q] = c;
        }
        return r;
    }
    Poly monic() const {
        if (t_.empty()) return *this;
        Q lc = t_.rbegin()->second;
        Poly r;
        for (auto& [m, c] : t_) r.t_[m] = c / lc;
        return r;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (t_.empty()) return "0";
        std::string s;
        // highest monomials first reads more naturally
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string mono;
            for (size_t i = 0; i < kMaxVars; ++i) {
                if (!m[i]) continue;
                if (!mono.empty()) mono += "*";
                mono += names[i];
                if (m[i] > 1) mono += "^" + std::to_string(m[i]);
            }
            Q a = abs(c);
            std::string coef = (a == 1 && !mono.empty()) ? "" : to_string(a) + (mono.empty() ? "" : "*");
            if (s.empty()) s += (c < 0 ? "-" : "");
            else s += (c < 0 ? " - " : " + ");
            s += coef + mono;
        }
        return s;
    }

private:
    void add(const Mono& m, const Q& c) {
        auto it = t_.find(m);
        if (it == t_.end()) {
            if (c != 0) t_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }
    std::map<Mono, Q> t_;
};

inline Poly operator*(const Q& s, const Poly& p) { return Poly(s) * p; }

inline Poly pow(const Poly& p, int k) {
    Poly r(Q(1));
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

// den^d * q(x = num/den) where d = deg_x q. Equivalent to q = 0 whenever den != 0.
inline Poly substitute_cleared(const Poly& q, size_t x, const Poly& num, const Poly& den) {
    auto cs = q.coeffs_in(x);
    int d = static_cast<int>(cs.size()) - 1;
    Poly r;
    for (int k = 0; k <= d; ++k) r = r + cs[k] * pow(num, k) * pow(den, d - k);
    return r;
}

// Number of distinct real roots of a univariate polynomial (Sturm).
inline int real_root_count(UPoly p) {
    trim(p);
    if (degree(p) < 1) return 0;
    std::vector<UPoly> seq{p, derivative(p)};
    while (degree(seq.back()) >= 1) {
        auto r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        seq.push_back(r);
    }
    auto changes = [&](int s) {
        // sign at +inf (s=1) or -inf (s=-1) is the leading coefficient times s^deg
        int v = 0, last = 0;
        for (auto& q : seq) {
            if (q.empty()) continue;
            int sg = sign(q.back()) * ((degree(q) % 2 && s < 0) ? -1 : 1);
            if (last != 0 && sg != last) ++v;
            last = sg;
        }
        return v;
    };
    return changes(-1) - changes(1);
}

enum class SolveStatus { Empty, Finite, Parametrized, Undecided };

inline const char* status_name(SolveStatus s) {
    switch (s) {
    case SolveStatus::Empty: return "Empty";
    case SolveStatus::Finite: return "Finite";
    case SolveStatus::Parametrized: return "Parametrized";
    case SolveStatus::Undecided: return "Undecided";
    }
    return "?";
}

struct PolySystem {
    std::vector<std::string> names;  // variable names, index order
    std::vector<Poly> eqs;
    std::vector<Poly> nonzero;  // each must not vanish
};

// var = num / den, in terms of variables eliminated later or left free.
struct Assignment {
    size_t var;
    Poly num, den;
};

struct Branch {
    std::vector<Assignment> assignments;  // in elimination order
    std::vector<Poly> nonzero;             // residual nonzero constraints on free variables
    std::vector<size_t> free;
    std::vector<Poly> residual;  // only for undecided branches
    bool decided = true;
};

struct SolutionSet {
    SolveStatus status = SolveStatus::Empty;
    std::vector<Branch> branches;  // decided nonempty branches and undecided residuals
    std::vector<std::string> trace;
    size_t nodes = 0;
    bool budget_exhausted = false;
};

namespace detail {

struct SolverState {
    std::vector<Poly> eqs, nonzero;
    std::vector<Assignment> assignments;
    int depth = 0;
};

class Solver {
public:
    Solver(const PolySystem& s, size_t budget) : sys_(s), budget_(budget) {}

    SolutionSet run() {
        SolverState st{sys_.eqs, sys_.nonzero, {}, 0};
        go(st);
        bool any_undecided = false, any_nonempty = false, any_free = false;
        for (auto& b : out_.branches) {
            if (!b.decided) any_undecided = true;
            else {
                any_nonempty = true;
                if (!b.free.empty()) any_free = true;
            }
        }
        if (any_undecided) out_.status = SolveStatus::Undecided;
        else if (!any_nonempty) out_.status = SolveStatus::Empty;
        else out_.status = any_free ? SolveStatus::Parametrized : SolveStatus::Finite;
        return out_;
    }

private:
    std::string indent(int d) const { return std::string(2 * size_t(d), ' '); }
    std::string P(const Poly& p) const { return p.str(sys_.names); }
    void log(const SolverState& st, const std::string& s) { out_.trace.push_back(indent(st.depth) + s); }

    // Drop zero equations, detect constants, clean nonzero list.
    bool normalize(SolverState& st) {
        std::vector<Poly> eqs;
        std::set<Poly> seen;
        for (auto& e : st.eqs) {
            if (e.is_zero()) continue;
            if (e.is_constant()) {
                log(st, "contradiction " + P(e) + " = 0");
                return false;
            }
            Poly m = e.monic();
            if (seen.insert(m).second) eqs.push_back(m);
        }
        st.eqs = eqs;
        std::vector<Poly> nz;
        std::set<Poly> nseen;
        for (auto& n : st.nonzero) {
            if (n.is_zero()) {
                log(st, "contradiction: required nonzero quantity vanishes");
                return false;
            }
            if (n.is_constant()) continue;
            // split monomial factors so that single variables are visible
            Mono cm = n.common_monomial();
            Poly rest = n.divide_monomial(cm).monic();
            for (size_t i = 0; i < kMaxVars; ++i)
                if (cm[i] && nseen.insert(Poly::var(i)).second) nz.push_back(Poly::var(i));
            if (!rest.is_constant() && nseen.insert(rest).second) nz.push_back(rest);
        }
        st.nonzero = nz;
        return true;
    }

    void substitute(SolverState& st, size_t x, const Poly& num, const Poly& den) {
        for (auto& e : st.eqs) e = substitute_cleared(e, x, num, den);
        for (auto& n : st.nonzero) n = substitute_cleared(n, x, num, den);
        st.assignments.push_back({x, num, den});
    }

    bool known_nonzero_var(const SolverState& st, size_t v) const {
        for (auto& n : st.nonzero)
            if (n == Poly::var(v)) return true;
        return false;
    }

    void finish_branch(const SolverState& st) {
        Branch b;
        b.assignments = st.assignments;
        b.nonzero = st.nonzero;
        std::set<size_t> assigned;
        for (auto& a : st.assignments) assigned.insert(a.var);
        for (size_t i = 0; i < sys_.names.size(); ++i)
            if (!assigned.count(i)) b.free.push_back(i);
        out_.branches.push_back(b);
    }

    void undecided(const SolverState& st, const std::string& why) {
        log(st, "undecided: " + why);
        Branch b;
        b.decided = false;
        b.assignments = st.assignments;
        b.nonzero = st.nonzero;
        b.residual = st.eqs;
        out_.branches.push_back(b);
    }

    void go(SolverState st) {
        if (++out_.nodes > budget_) {
            out_.budget_exhausted = true;
            undecided(st, "budget exhausted");
            return;
        }
        if (!normalize(st)) return;
        if (st.eqs.empty()) {
            log(st, "solved" + std::string(st.nonzero.empty() ? "" : " with open inequations"));
            finish_branch(st);
            return;
        }
        if (linear_step(st)) return;
        if (factor_step(st)) return;
        if (univariate_step(st)) return;
        if (quadratic_step(st)) return;
        if (pivot_step(st)) return;
        undecided(st, "no move applies");
    }

    // eq = c x + r with c constant and x absent from r.
    bool linear_step(SolverState& st) {
        size_t best_eq = SIZE_MAX, best_var = 0;
        for (size_t i = 0; i < st.eqs.size(); ++i) {
            auto& e = st.eqs[i];
            for (size_t v : e.vars()) {
                if (e.degree_in(v) != 1) continue;
                auto cs = e.coeffs_in(v);
                if (!cs[1].is_constant()) continue;
                if (best_eq == SIZE_MAX || e.terms().size() < st.eqs[best_eq].terms().size()) {
                    best_eq = i;
                    best_var = v;
                }
                break;
            }
        }
        if (best_eq == SIZE_MAX) return false;
        auto cs = st.eqs[best_eq].coeffs_in(best_var);
        Poly num = -cs[0], den = cs[1];
        Poly sol = Q(1) / den.constant() * num;
        log(st, sys_.names[best_var] + " := " + P(sol));
        st.eqs.erase(st.eqs.begin() + long(best_eq));
        substitute(st, best_var, sol, Poly(Q(1)));
        ++st.depth;
        go(st);
        return true;
    }

    // eq = x^k r: branch x = 0 or r = 0 (x = 0 dropped when x is known nonzero).
    bool factor_step(SolverState& st) {
        for (size_t i = 0; i < st.eqs.size(); ++i) {
            Mono cm = st.eqs[i].common_monomial();
            for (size_t v = 0; v < kMaxVars; ++v) {
                if (!cm[v]) continue;
                Mono one{};
                one[v] = 1;
                Poly rest = st.eqs[i].divide_monomial(one);
                if (known_nonzero_var(st, v)) {
                    log(st, "cancel nonzero factor " + sys_.names[v]);
                    st.eqs[i] = rest;
                    ++st.depth;
                    go(st);
                    return true;
                }
                log(st, "split on factor " + sys_.names[v] + " of " + P(st.eqs[i]));
                SolverState a = st, b = st;
                a.depth = b.depth = st.depth + 1;
                log(st, "case " + sys_.names[v] + " = 0");
                a.eqs[i] = Poly::var(v);
                go(a);
                log(st, "case " + sys_.names[v] + " != 0");
                b.eqs[i] = rest;
                b.nonzero.push_back(Poly::var(v));
                go(b);
                return true;
            }
        }
        return false;
    }

    bool univariate_step(SolverState& st) {
        for (size_t i = 0; i < st.eqs.size(); ++i) {
            auto vs = st.eqs[i].vars();
            if (vs.size() != 1) continue;
            size_t v = *vs.begin();
            auto cs = st.eqs[i].coeffs_in(v);
            UPoly u;
            for (auto& c : cs) u.push_back(c.constant());
            std::vector<Q> roots;
            UPoly rest = u;
            while (degree(rest) >= 1) {
                auto r = rational_root(rest);
                if (!r) break;
                roots.push_back(*r);
                while (degree(rest) >= 1 && lie4::eval(rest, *r) == 0) rest = divmod(rest, UPoly{-*r, Q(1)}).first;
            }
            if (degree(rest) >= 1 && real_root_count(rest) > 0) continue;  // irrational real roots
            std::sort(roots.begin(), roots.end());
            log(st, "univariate " + P(st.eqs[i]) + ": rational roots {" + join(roots) + "}, no other real roots");
            for (auto& r : roots) {
                SolverState a = st;
                a.depth = st.depth + 1;
                a.eqs[i] = Poly::var(v) - Poly(r);
                go(a);
            }
            return true;
        }
        return false;
    }

    static std::string join(const std::vector<Q>& xs) {
        std::string s;
        for (size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + to_string(xs[i]);
        return s;
    }
    static std::optional<Q> rational_root(const UPoly& p) { return detail::rational_root(p); }

    // Total degree 2: write q = z^T M z with z = (vars, 1). Semidefinite M turns q = 0 into M z = 0.
    bool quadratic_step(SolverState& st) {
        for (size_t i = 0; i < st.eqs.size(); ++i) {
            const Poly& e = st.eqs[i];
            if (e.degree() != 2) continue;
            auto vset = e.vars();
            std::vector<size_t> vs(vset.begin(), vset.end());
            size_t k = vs.size();
            Mat M(k + 1, k + 1);
            for (auto& [m, c] : e.terms()) {
                std::vector<size_t> idx;
                for (size_t a = 0; a < k; ++a)
                    for (int r = 0; r < m[vs[a]]; ++r) idx.push_back(a);
                if (idx.size() == 2) {
                    if (idx[0] == idx[1]) M(idx[0], idx[0]) += c;
                    else {
                        M(idx[0], idx[1]) += c / 2;
                        M(idx[1], idx[0]) += c / 2;
                    }
                } else if (idx.size() == 1) {
                    M(idx[0], k) += c / 2;
                    M(k, idx[0]) += c / 2;
                } else
                    M(k, k) += c;
            }
            int def = semidefinite(M);
            if (def == 0) continue;
            if (def == 2) {
                log(st, "definite quadratic " + P(e) + " has no real zero");
                return true;
            }
            log(st, "semidefinite quadratic " + P(e) + ": replace by its linear kernel equations");
            SolverState a = st;
            a.depth = st.depth + 1;
            a.eqs.erase(a.eqs.begin() + long(i));
            for (size_t r = 0; r <= k; ++r) {
                Poly l(M(r, k));
                for (size_t c = 0; c < k; ++c) l = l + M(r, c) * Poly::var(vs[c]);
                a.eqs.push_back(l);
            }
            go(a);
            return true;
        }
        return false;
    }

    // 2: definite (+ or -), 1: semidefinite, 0: indefinite.
    static int semidefinite(const Mat& M0) {
        for (int s : {1, -1}) {
            Mat M = Q(s) * M0;
            size_t n = M.rows();
            bool psd = true, pd = true;
            for (size_t i = 0; i < n && psd; ++i) {
                if (M(i, i) < 0) psd = false;
                else if (M(i, i) == 0) {
                    pd = false;
                    for (size_t j = i + 1; j < n; ++j)
                        if (M(i, j) != 0) psd = false;
                } else {
                    for (size_t r = i + 1; r < n; ++r) {
                        Q f = M(r, i) / M(i, i);
                        for (size_t c = i; c < n; ++c) M(r, c) -= f * M(i, c);
                    }
                }
            }
            if (psd) return pd ? 2 : 1;
        }
        return 0;
    }

    // eq = p x + r with p nonconstant: branch p = r = 0, or p != 0 and x = -r/p.
    bool pivot_step(SolverState& st) {
        size_t bi = SIZE_MAX, bv = 0;
        size_t best = SIZE_MAX;
        for (size_t i = 0; i < st.eqs.size(); ++i)
            for (size_t v : st.eqs[i].vars()) {
                if (st.eqs[i].degree_in(v) != 1) continue;
                size_t cost = st.eqs[i].coeffs_in(v)[1].terms().size();
                if (cost < best) {
                    best = cost;
                    bi = i;
                    bv = v;
                }
            }
        if (bi == SIZE_MAX) return false;
        auto cs = st.eqs[bi].coeffs_in(bv);
        const Poly& p = cs[1];
        Poly r = cs.size() > 0 ? cs[0] : Poly();
        log(st, "pivot on " + sys_.names[bv] + " with coefficient " + P(p));
        SolverState a = st, b = st;
        a.depth = b.depth = st.depth + 1;
        bool p_nonzero = std::find(st.nonzero.begin(), st.nonzero.end(), p.monic()) != st.nonzero.end();
        if (!p_nonzero) {
            log(st, "case " + P(p) + " = 0");
            a.eqs[bi] = r;
            a.eqs.push_back(p);
            go(a);
        }
        log(st, "case " + P(p) + " != 0, " + sys_.names[bv] + " := (" + P(-r) + ") / (" + P(p) + ")");
        b.eqs.erase(b.eqs.begin() + long(bi));
        b.nonzero.push_back(p);
        substitute(b, bv, -r, p);
        go(b);
        return true;
    }

    const PolySystem& sys_;
    size_t budget_;
    SolutionSet out_;
};

}  // namespace detail

inline SolutionSet solve_small_system(const PolySystem& s, size_t budget = 20000) {
    if (s.names.size() > kMaxVars) throw Error(Errc::PreconditionViolated, "too many variables");
    return detail::Solver(s, budget).run();
}

// Evaluate a decided branch at values for its free variables. Returns nullopt when a
// denominator or a residual inequation vanishes.
inline std::optional<Vec> realize(const PolySystem& s, const Branch& b, const Vec& free_values) {
    Vec x(kMaxVars, Q(0));
    for (size_t i = 0; i < b.free.size(); ++i) x[b.free[i]] = free_values[i];
    for (auto& n : b.nonzero)
        if (n.eval(x) == 0) return std::nullopt;
    for (auto it = b.assignments.rbegin(); it != b.assignments.rend(); ++it) {
        Q d = it->den.eval(x);
        if (d == 0) return std::nullopt;
        x[it->var] = it->num.eval(x) / d;
    }
    for (auto& e : s.eqs)
        if (e.eval(x) != 0) throw Error(Errc::InternalMismatch, "solver branch fails substitution check");
    for (auto& n : s.nonzero)
        if (n.eval(x) == 0) return std::nullopt;
    x.resize(s.names.size());
    return x;
}

// Deterministic sample points of a decided branch; values from a fixed small list, tuples in
// order of increasing total index so that every free variable moves early.
inline std::vector<Vec> sample_branch(const PolySystem& s, const Branch& b, size_t want) {
    static const std::vector<Q> vals = {Q(0), Q(1), Q(-1), Q(2), Q(1, 2), Q(-2), Q(3), Q(-1, 2)};
    std::vector<Vec> out;
    size_t k = b.free.size();
    size_t maxsum = k * (vals.size() - 1);
    std::vector<size_t> idx(k, 0);
    std::function<void(size_t, size_t)> rec = [&](size_t i, size_t left) {
        if (out.size() >= want) return;
        if (i == k) {
            if (left) return;
            Vec fv(k);
            for (size_t j = 0; j < k; ++j) fv[j] = vals[idx[j]];
            if (auto x = realize(s, b, fv)) out.push_back(*x);
            return;
        }
        for (size_t v = 0; v < vals.size() && v <= left; ++v) {
            idx[i] = v;
            rec(i + 1, left - v);
        }
    };
    for (size_t sum = 0; sum <= maxsum && out.size() < want; ++sum) rec(0, sum);
    return out;
}

}  // namespace lie4
