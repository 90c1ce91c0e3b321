#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace lie4 {

using Q = mpq_class;
using Vec = std::vector<Q>;

enum class Errc {
    DimensionMismatch,
    JacobiViolation,
    ConstraintViolation,
    NotSolvable,
    IrreducibleCubicOrWorse,
    IrrationalParameterPath,
    InternalMismatch,
    SingularWitness,
    NotClosed,
    Dependent,
    UnknownName,
    NotComplementary,
    NotSubalgebra,
    NotInvolutive,
    TrivialInvolution,
    NotAlmostComplex,
    Inconsistent,
    Parse,
    NoRealizationListed,
    PreconditionViolated,
    BudgetExceeded,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::JacobiViolation: return "JacobiViolation";
    case Errc::ConstraintViolation: return "ConstraintViolation";
    case Errc::NotSolvable: return "NotSolvable";
    case Errc::IrreducibleCubicOrWorse: return "IrreducibleCubicOrWorse";
    case Errc::IrrationalParameterPath: return "IrrationalParameterPath";
    case Errc::InternalMismatch: return "InternalMismatch";
    case Errc::SingularWitness: return "SingularWitness";
    case Errc::NotClosed: return "NotClosed";
    case Errc::Dependent: return "Dependent";
    case Errc::UnknownName: return "UnknownName";
    case Errc::NotComplementary: return "NotComplementary";
    case Errc::NotSubalgebra: return "NotSubalgebra";
    case Errc::NotInvolutive: return "NotInvolutive";
    case Errc::TrivialInvolution: return "TrivialInvolution";
    case Errc::NotAlmostComplex: return "NotAlmostComplex";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::Parse: return "Parse";
    case Errc::NoRealizationListed: return "NoRealizationListed";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    }
    return "Unknown";
}

struct Error : std::runtime_error {
    Errc code;
    Error(Errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code(c) {}
};

inline Q make_q(long num, long den = 1) {
    Q q(num, den);
    q.canonicalize();
    return q;
}

// "p" for integers, "p/q" otherwise; always lowest terms.
inline std::string to_string(const Q& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Vec& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + "]";
}

namespace detail {
inline bool is_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}
}  // namespace detail

// Strict parser: optional leading '-', digits, optional "/digits".
// Rejects non-canonical spellings (leading zeros, "-0", "2/4", "3/1").
inline Q parse_rational(const std::string& text) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && s[0] == '-') {
        neg = true;
        s = s.substr(1);
    }
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!detail::is_digits(num) || !detail::is_digits(den))
        throw Error(Errc::Parse, "malformed rational '" + text + "'");
    if ((num.size() > 1 && num[0] == '0') || (den.size() > 1 && den[0] == '0'))
        throw Error(Errc::Parse, "leading zero in rational '" + text + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw Error(Errc::Parse, "zero denominator in '" + text + "'");
    if (neg && n == 0) throw Error(Errc::Parse, "negative zero in '" + text + "'");
    if (slash != std::string::npos && d == 1)
        throw Error(Errc::Parse, "'" + text + "' should be written without '/1'");
    Q q(neg ? mpz_class(-n) : n, d);
    Q c = q;
    c.canonicalize();
    if (c.get_den() != d)
        throw Error(Errc::Parse, "'" + text + "' is not in lowest terms; use '" + to_string(c) + "'");
    return c;
}

inline int sign(const Q& q) { return sgn(q); }

// Exact square root when q is the square of a rational.
inline bool rational_sqrt(const Q& q, Q& out) {
    if (q < 0) return false;
    mpz_class n = q.get_num(), d = q.get_den();
    mpz_class rn = sqrt(n), rd = sqrt(d);
    if (rn * rn != n || rd * rd != d) return false;
    out = Q(rn, rd);
    out.canonicalize();
    return true;
}

inline Vec unit(size_t n, size_t i) {
    Vec v(n, Q(0));
    v[i] = 1;
    return v;
}

inline Vec zeros(size_t n) { return Vec(n, Q(0)); }

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator-(const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Vec operator*(const Q& s, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline Q dot(const Vec& a, const Vec& b) {
    Q s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Build a vector from small integer or rational literals.
inline Vec vec(std::initializer_list<Q> xs) { return Vec(xs); }

}  // namespace lie4
