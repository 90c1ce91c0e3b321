#pragma once

#include "rational.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace lie4 {

class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, Q(0)) {}

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Mat from_rows(const std::vector<Vec>& rows, size_t cols) {
        Mat m(rows.size(), cols);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        return m;
    }
    static Mat from_cols(const std::vector<Vec>& cols, size_t rows) {
        Mat m(rows, cols.size());
        for (size_t j = 0; j < cols.size(); ++j)
            for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    Q& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const Q& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    Vec row(size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }
    Vec col(size_t j) const {
        Vec v(r_);
        for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_col(size_t j, const Vec& v) {
        for (size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
    }

    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

private:
    size_t r_ = 0, c_ = 0;
    std::vector<Q> a_;
};

inline Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw Error(Errc::DimensionMismatch, "matrix product");
    Mat m(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (size_t j = 0; j < b.cols(); ++j) m(i, j) += a(i, k) * b(k, j);
        }
    return m;
}

inline Vec operator*(const Mat& a, const Vec& v) {
    if (a.cols() != v.size()) throw Error(Errc::DimensionMismatch, "matrix-vector product");
    Vec r(a.rows(), Q(0));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k)
            if (a(i, k) != 0 && v[k] != 0) r[i] += a(i, k) * v[k];
    return r;
}

inline Mat operator+(const Mat& a, const Mat& b) {
    Mat m(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j) + b(i, j);
    return m;
}

inline Mat operator-(const Mat& a, const Mat& b) {
    Mat m(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j) - b(i, j);
    return m;
}

inline Mat operator*(const Q& s, const Mat& a) {
    Mat m(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) m(i, j) = s * a(i, j);
    return m;
}

inline Mat transpose(const Mat& a) {
    Mat m(a.cols(), a.rows());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) m(j, i) = a(i, j);
    return m;
}

inline Q trace(const Mat& a) {
    Q t = 0;
    for (size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

struct Rref {
    Mat m;
    std::vector<size_t> pivots;
};

// Reduced row echelon form; pivot entries are 1, pivot columns otherwise zero.
inline Rref rref(Mat m) {
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Q inv = 1 / m(r, c);
        for (size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Q f = m(i, c);
            for (size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(piv)};
}

inline size_t rank(const Mat& m) { return rref(m).pivots.size(); }

inline size_t rank_of(const std::vector<Vec>& vs) {
    if (vs.empty()) return 0;
    return rank(Mat::from_rows(vs, vs[0].size()));
}

// Basis of the null space, one vector per free column, in column order.
inline std::vector<Vec> kernel(const Mat& a) {
    Rref R = rref(a);
    std::vector<bool> is_piv(a.cols(), false);
    for (auto p : R.pivots) is_piv[p] = true;
    std::vector<Vec> out;
    for (size_t f = 0; f < a.cols(); ++f) {
        if (is_piv[f]) continue;
        Vec v(a.cols(), Q(0));
        v[f] = 1;
        for (size_t i = 0; i < R.pivots.size(); ++i) v[R.pivots[i]] = -R.m(i, f);
        out.push_back(std::move(v));
    }
    return out;
}

// One solution of a x = b (free variables set to zero), or nullopt.
inline std::optional<Vec> solve(const Mat& a, const Vec& b) {
    Mat aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    Rref R = rref(aug);
    Vec x(a.cols(), Q(0));
    for (size_t i = 0; i < R.pivots.size(); ++i) {
        if (R.pivots[i] == a.cols()) return std::nullopt;
        x[R.pivots[i]] = R.m(i, a.cols());
    }
    return x;
}

inline Q det(Mat m) {
    if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "determinant of non-square matrix");
    size_t n = m.rows();
    Q d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        for (size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Q f = m(i, c) / m(c, c);
            for (size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

inline std::optional<Mat> try_inverse(const Mat& a) {
    size_t n = a.rows();
    if (n != a.cols()) return std::nullopt;
    Mat aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    Rref R = rref(aug);
    if (R.pivots.size() < n || R.pivots[n - 1] != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = R.m(i, n + j);
    return inv;
}

inline Mat inverse(const Mat& a) {
    auto inv = try_inverse(a);
    if (!inv) throw Error(Errc::SingularWitness, "matrix is not invertible");
    return *inv;
}

inline Mat power(const Mat& a, unsigned k) {
    Mat r = Mat::identity(a.rows());
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
}

inline std::string to_string(const Mat& m) {
    std::string s = "[";
    for (size_t i = 0; i < m.rows(); ++i) {
        if (i) s += ", ";
        s += to_string(m.row(i));
    }
    return s + "]";
}

// A linear subspace of Q^n stored as its unique reduced row echelon basis.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(size_t ambient) : n_(ambient), basis_(0, ambient) {}

    static Subspace span(const std::vector<Vec>& vs, size_t ambient) {
        Subspace s(ambient);
        if (vs.empty()) return s;
        Rref R = rref(Mat::from_rows(vs, ambient));
        s.pivots_ = R.pivots;
        s.basis_ = Mat(R.pivots.size(), ambient);
        for (size_t i = 0; i < R.pivots.size(); ++i)
            for (size_t j = 0; j < ambient; ++j) s.basis_(i, j) = R.m(i, j);
        return s;
    }
    static Subspace whole(size_t n) {
        std::vector<Vec> vs;
        for (size_t i = 0; i < n; ++i) vs.push_back(unit(n, i));
        return span(vs, n);
    }
    static Subspace zero(size_t n) { return Subspace(n); }

    size_t ambient() const { return n_; }
    size_t dim() const { return pivots_.size(); }
    const Mat& basis_matrix() const { return basis_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    std::vector<Vec> vectors() const {
        std::vector<Vec> out;
        for (size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
        return out;
    }
    Vec vector(size_t i) const { return basis_.row(i); }

    // Coordinates of v in the rref basis are its entries at the pivot columns.
    Vec coords(const Vec& v) const {
        Vec c(dim());
        for (size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
        return c;
    }
    Vec from_coords(const Vec& c) const {
        Vec v(n_, Q(0));
        for (size_t i = 0; i < dim(); ++i)
            if (c[i] != 0)
                for (size_t j = 0; j < n_; ++j) v[j] += c[i] * basis_(i, j);
        return v;
    }
    bool contains(const Vec& v) const {
        if (v.size() != n_) throw Error(Errc::DimensionMismatch, "subspace membership");
        return from_coords(coords(v)) == v;
    }
    bool contains(const Subspace& o) const {
        for (size_t i = 0; i < o.dim(); ++i)
            if (!contains(o.vector(i))) return false;
        return true;
    }

    bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    size_t n_ = 0;
    Mat basis_;
    std::vector<size_t> pivots_;
};

inline Subspace sum(const Subspace& a, const Subspace& b) {
    auto vs = a.vectors();
    for (auto& v : b.vectors()) vs.push_back(v);
    return Subspace::span(vs, a.ambient());
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
    size_t n = a.ambient();
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
    // Solve sum x_i a_i - sum y_j b_j = 0.
    Mat m(n, a.dim() + b.dim());
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t r = 0; r < n; ++r) m(r, i) = a.basis_matrix()(i, r);
    for (size_t j = 0; j < b.dim(); ++j)
        for (size_t r = 0; r < n; ++r) m(r, a.dim() + j) = -b.basis_matrix()(j, r);
    std::vector<Vec> vs;
    for (auto& k : kernel(m)) {
        Vec c(k.begin(), k.begin() + static_cast<long>(a.dim()));
        vs.push_back(a.from_coords(c));
    }
    return Subspace::span(vs, n);
}

inline bool complementary(const Subspace& a, const Subspace& b) {
    return a.dim() + b.dim() == a.ambient() && sum(a, b).dim() == a.ambient();
}

// Kernel of m as a subspace of its column space dimension.
inline Subspace kernel_space(const Mat& m) { return Subspace::span(kernel(m), m.cols()); }

// Image (column space) of m.
inline Subspace image_space(const Mat& m) {
    std::vector<Vec> cols;
    for (size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return Subspace::span(cols, m.rows());
}

// First vector of `candidates` not in `s`; used for deterministic completions.
inline std::optional<Vec> first_outside(const Subspace& s, const std::vector<Vec>& candidates) {
    for (const auto& v : candidates)
        if (!s.contains(v)) return v;
    return std::nullopt;
}

}  // namespace lie4
