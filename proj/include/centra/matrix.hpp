#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "centra/rational.hpp"

namespace centra {

// Dense matrix of exact rationals. Value type, immutable in spirit: all
// operations return fresh matrices.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(std::size_t(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
    }
    QMatrix(std::initializer_list<std::initializer_list<Rat>> init) {
        rows_ = int(init.size());
        cols_ = rows_ == 0 ? 0 : int(init.begin()->size());
        e_.reserve(std::size_t(rows_) * cols_);
        for (const auto& row : init) {
            if (int(row.size()) != cols_) throw std::invalid_argument("ragged initializer");
            for (const auto& x : row) e_.push_back(x);
        }
    }

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static QMatrix zero(int rows, int cols) { return QMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rat& operator()(int i, int j) { return e_[std::size_t(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }

    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const QMatrix& o) const { return !(*this == o); }

    QMatrix operator+(const QMatrix& o) const {
        check_same_shape(o);
        QMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
        return r;
    }
    QMatrix operator-(const QMatrix& o) const {
        check_same_shape(o);
        QMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
        return r;
    }
    QMatrix operator-() const {
        QMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
        return r;
    }
    QMatrix operator*(const QMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in product");
        QMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rat& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Rat& b = o(k, j);
                    if (!b.is_zero()) r(i, j) += a * b;
                }
            }
        return r;
    }
    QMatrix operator*(const Rat& s) const {
        QMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
        return r;
    }
    friend QMatrix operator*(const Rat& s, const QMatrix& m) { return m * s; }

    QMatrix transpose() const {
        QMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    // Non-negative integer power of a square matrix.
    QMatrix pow(int k) const {
        require_square();
        if (k < 0) throw std::invalid_argument("negative power");
        QMatrix acc = identity(rows_), base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = k > 1 ? base * base : base;
            k >>= 1;
        }
        return acc;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_identity() const {
        if (!is_square()) return false;
        return *this == identity(rows_);
    }
    bool is_integral() const {
        for (const auto& x : e_)
            if (!is_integer(x)) return false;
        return true;
    }

    QMatrix column(int j) const {
        QMatrix c(rows_, 1);
        for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
        return c;
    }

    void require_square() const {
        if (!is_square()) throw std::invalid_argument("square matrix required");
    }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < rows_; ++i) {
            s += i ? "; " : "";
            for (int j = 0; j < cols_; ++j) s += (j ? "," : "") + rat_to_string((*this)(i, j));
        }
        return s + "]";
    }

private:
    void check_same_shape(const QMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    }

    int rows_, cols_;
    std::vector<Rat> e_;
};

// Column-major vectorization: vec(X)[i + rows*j] = X(i,j).
inline std::vector<Rat> vec(const QMatrix& x) {
    std::vector<Rat> v(std::size_t(x.rows()) * x.cols());
    for (int j = 0; j < x.cols(); ++j)
        for (int i = 0; i < x.rows(); ++i) v[std::size_t(j) * x.rows() + i] = x(i, j);
    return v;
}

inline QMatrix unvec(const std::vector<Rat>& v, int rows, int cols) {
    if (int(v.size()) != rows * cols) throw std::invalid_argument("unvec size mismatch");
    QMatrix x(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) x(i, j) = v[std::size_t(j) * rows + i];
    return x;
}

// Kronecker product, blocks a(i,j)*B.
inline QMatrix kron(const QMatrix& a, const QMatrix& b) {
    QMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

inline QMatrix apply_to_vector(const QMatrix& m, const std::vector<Rat>& v) {
    QMatrix col(int(v.size()), 1);
    for (int i = 0; i < int(v.size()); ++i) col(i, 0) = v[i];
    return m * col;
}

namespace detail {

// Integer working copy with per-row denominators cleared. Row scaling by a
// nonzero rational preserves kernels, row spaces and rank.
inline std::vector<std::vector<Int>> integerize_rows(const QMatrix& a) {
    std::vector<std::vector<Int>> w(a.rows(), std::vector<Int>(a.cols()));
    for (int i = 0; i < a.rows(); ++i) {
        Int l = 1;
        for (int j = 0; j < a.cols(); ++j) l = lcm_int(l, den(a(i, j)));
        for (int j = 0; j < a.cols(); ++j) {
            const Rat& x = a(i, j);
            w[i][j] = num(x) * (l / den(x));
        }
    }
    return w;
}

// Fraction-free (Bareiss) forward elimination to row echelon form.
// Returns pivot columns; w is modified in place.
inline std::vector<int> bareiss_echelon(std::vector<std::vector<Int>>& w) {
    const int rows = int(w.size());
    const int cols = rows ? int(w[0].size()) : 0;
    std::vector<int> pivots;
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (w[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r) std::swap(w[p], w[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                w[i][j] = (w[r][c] * w[i][j] - w[i][c] * w[r][j]) / prev;
            w[i][c] = 0;
        }
        prev = w[r][c];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

struct Rref {
    QMatrix reduced;          // unique reduced row echelon form over Q
    std::vector<int> pivots;  // pivot column per pivot row
    int rank = 0;
};

// Reduced row echelon form: fraction-free elimination inside, one
// normalization pass at the end.
inline Rref rref(const QMatrix& a) {
    auto w = detail::integerize_rows(a);
    auto pivots = detail::bareiss_echelon(w);
    const int rank = int(pivots.size());
    QMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = Rat(w[i][j]);
    // Normalize pivots to one and clear entries above them.
    for (int pr = rank - 1; pr >= 0; --pr) {
        int pc = pivots[pr];
        Rat inv = Rat(1) / r(pr, pc);
        for (int j = pc; j < a.cols(); ++j) r(pr, j) *= inv;
        for (int i = 0; i < pr; ++i) {
            Rat f = r(i, pc);
            if (f.is_zero()) continue;
            for (int j = pc; j < a.cols(); ++j) r(i, j) -= f * r(pr, j);
        }
    }
    return Rref{std::move(r), std::move(pivots), rank};
}

inline int rank(const QMatrix& a) {
    auto w = detail::integerize_rows(a);
    return int(detail::bareiss_echelon(w).size());
}

// Exact determinant via fraction-free elimination on a denominator-cleared
// copy, undoing the row scaling at the end.
inline Rat det(const QMatrix& a) {
    a.require_square();
    const int n = a.rows();
    if (n == 0) return 1;
    Rat scale = 1;  // product of row multipliers applied while integerizing
    std::vector<std::vector<Int>> w(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i) {
        Int l = 1;
        for (int j = 0; j < n; ++j) l = lcm_int(l, den(a(i, j)));
        scale *= Rat(l);
        for (int j = 0; j < n; ++j) w[i][j] = num(a(i, j)) * (l / den(a(i, j)));
    }
    Int prev = 1;
    int signflip = 1;
    for (int k = 0; k < n - 1; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (w[i][k] != 0) {
                p = i;
                break;
            }
        if (p < 0) return 0;
        if (p != k) {
            std::swap(w[p], w[k]);
            signflip = -signflip;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                w[i][j] = (w[k][k] * w[i][j] - w[i][k] * w[k][j]) / prev;
            w[i][k] = 0;
        }
        prev = w[k][k];
    }
    return Rat(signflip * w[n - 1][n - 1]) / scale;
}

inline bool is_unimodular(const QMatrix& a) {
    if (!a.is_square() || !a.is_integral()) return false;
    Rat d = det(a);
    return d == 1 || d == -1;
}

// Solves A X = B exactly; empty result if inconsistent. Free variables are
// set to zero.
inline std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
    QMatrix aug(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
    }
    Rref rr = rref(aug);
    for (int p = 0; p < rr.rank; ++p)
        if (rr.pivots[p] >= a.cols()) return std::nullopt;
    QMatrix x(a.cols(), b.cols());
    for (int p = 0; p < rr.rank; ++p)
        for (int j = 0; j < b.cols(); ++j) x(rr.pivots[p], j) = rr.reduced(p, a.cols() + j);
    return x;
}

inline QMatrix inverse(const QMatrix& a) {
    a.require_square();
    auto x = solve(a, QMatrix::identity(a.rows()));
    if (!x || !((a * *x) == QMatrix::identity(a.rows())))
        throw std::invalid_argument("singular matrix");
    return *x;
}

}  // namespace centra
