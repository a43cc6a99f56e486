#pragma once

#include <stdexcept>
#include <vector>

#include "centra/matrix.hpp"

namespace centra {

// Canonical basis of the column span: reduced column echelon form, the
// transpose of the rref of the transpose. Unique per subspace, so Subspace
// equality is entrywise basis equality.
inline QMatrix reduced_column_basis(const QMatrix& cols) {
    Rref rr = rref(cols.transpose());
    QMatrix b(cols.rows(), rr.rank);
    for (int p = 0; p < rr.rank; ++p)
        for (int j = 0; j < cols.rows(); ++j) b(j, p) = rr.reduced(p, j);
    return b;
}

class Subspace {
public:
    explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}
    Subspace(int ambient_dim, const QMatrix& spanning_columns)
        : ambient_(ambient_dim), basis_(reduced_column_basis(spanning_columns)) {
        if (spanning_columns.rows() != ambient_dim)
            throw std::invalid_argument("spanning columns have wrong ambient dimension");
    }

    static Subspace full(int n) { return Subspace(n, QMatrix::identity(n)); }

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.cols(); }
    const QMatrix& basis() const { return basis_; }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    bool contains(const QMatrix& column_vector) const {
        if (column_vector.rows() != ambient_ || column_vector.cols() != 1)
            throw std::invalid_argument("contains: expected a column vector");
        if (dim() == 0) return column_vector.is_zero();
        return solve(basis_, column_vector).has_value();
    }

    // Does a linear map (given by its matrix) send this subspace into `other`?
    bool mapped_into(const QMatrix& map, const Subspace& other) const {
        QMatrix image = map * basis_;
        for (int j = 0; j < image.cols(); ++j)
            if (!other.contains(image.column(j))) return false;
        return true;
    }

private:
    int ambient_;
    QMatrix basis_;
};

inline Subspace kernel_basis(const QMatrix& a) {
    Rref rr = rref(a);
    const int n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (int p : rr.pivots) is_pivot[p] = true;
    QMatrix k(n, n - rr.rank);
    int col = 0;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        k(j, col) = 1;
        for (int p = 0; p < rr.rank; ++p) k(rr.pivots[p], col) = -rr.reduced(p, j);
        ++col;
    }
    return Subspace(n, k);
}

inline Subspace image_basis(const QMatrix& a) { return Subspace(a.rows(), a); }

inline Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("ambient mismatch");
    QMatrix joint(u.ambient_dim(), u.dim() + v.dim());
    for (int i = 0; i < u.ambient_dim(); ++i) {
        for (int j = 0; j < u.dim(); ++j) joint(i, j) = u.basis()(i, j);
        for (int j = 0; j < v.dim(); ++j) joint(i, u.dim() + j) = v.basis()(i, j);
    }
    return Subspace(u.ambient_dim(), joint);
}

// U ∩ V via the kernel of [U | -V]: a kernel vector (a, b) has Ua = Vb, and
// Ua runs over the intersection.
inline Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("ambient mismatch");
    const int n = u.ambient_dim();
    if (u.dim() == 0 || v.dim() == 0) return Subspace(n);
    QMatrix joint(n, u.dim() + v.dim());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < u.dim(); ++j) joint(i, j) = u.basis()(i, j);
        for (int j = 0; j < v.dim(); ++j) joint(i, u.dim() + j) = -v.basis()(i, j);
    }
    Subspace ker = kernel_basis(joint);
    QMatrix coeffs(u.dim(), ker.dim());
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < ker.dim(); ++j) coeffs(i, j) = ker.basis()(i, j);
    return Subspace(n, u.basis() * coeffs);
}

}  // namespace centra
