#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "centra/matrix.hpp"
#include "centra/rational.hpp"

namespace centra {

using IntMatrix = std::vector<std::vector<Int>>;  // row-major

inline IntMatrix int_identity(int n) {
    IntMatrix u(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) u[i][i] = 1;
    return u;
}

inline QMatrix to_qmatrix(const IntMatrix& m) {
    int rows = int(m.size()), cols = rows ? int(m[0].size()) : 0;
    QMatrix q(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) q(i, j) = Rat(m[i][j]);
    return q;
}

namespace detail {

inline void col_swap(IntMatrix& m, int a, int b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}
inline void col_axpy(IntMatrix& m, int dst, int src, const Int& q) {
    // col_dst -= q * col_src
    if (q == 0) return;
    for (auto& row : m) row[dst] -= q * row[src];
}
inline void col_negate(IntMatrix& m, int j) {
    for (auto& row : m) row[j] = -row[j];
}

}  // namespace detail

// Column Hermite normal form with transformation: A * U = [H | 0], U
// unimodular. H's pivot rows strictly increase, pivots are positive, and
// entries in a pivot row left of the pivot are reduced into [0, pivot).
// Returns the number of pivot columns; if `u` is non-null it receives U.
inline int hermite_columns(IntMatrix& w, IntMatrix* u) {
    const int rows = int(w.size());
    const int cols = rows ? int(w[0].size()) : 0;
    if (u) *u = int_identity(cols);
    int r = 0;
    std::vector<int> pivot_row;
    for (int i = 0; i < rows && r < cols; ++i) {
        // Euclidean reduction across columns r..cols-1 in row i.
        while (true) {
            int jmin = -1;
            for (int j = r; j < cols; ++j) {
                if (w[i][j] == 0) continue;
                if (jmin < 0 || abs_int(w[i][j]) < abs_int(w[i][jmin])) jmin = j;
            }
            if (jmin < 0) break;
            if (jmin != r) {
                detail::col_swap(w, r, jmin);
                if (u) detail::col_swap(*u, r, jmin);
            }
            bool done = true;
            for (int j = r + 1; j < cols; ++j) {
                if (w[i][j] == 0) continue;
                Int q = w[i][j] / w[i][r];  // truncated division
                detail::col_axpy(w, j, r, q);
                if (u) detail::col_axpy(*u, j, r, q);
                if (w[i][j] != 0) done = false;
            }
            if (done) break;
        }
        if (w[i][r] == 0) continue;
        if (w[i][r] < 0) {
            detail::col_negate(w, r);
            if (u) detail::col_negate(*u, r);
        }
        pivot_row.push_back(i);
        ++r;
    }
    // Canonical reduction of earlier columns against each pivot.
    for (int k = 0; k < r; ++k) {
        int i = pivot_row[k];
        for (int j = 0; j < k; ++j) {
            Int q = w[i][j] / w[i][k];
            if (w[i][j] - q * w[i][k] < 0) q -= 1;  // floor division
            detail::col_axpy(w, j, k, q);
            if (u) detail::col_axpy(*u, j, k, q);
        }
    }
    return r;
}

// Basis of {x in Z^N : A x = 0} for an integer matrix A, as the trailing
// columns of the Hermite transformation. Integer kernels of integer
// matrices are saturated by construction.
inline IntMatrix integer_kernel(IntMatrix a) {
    const int n = a.empty() ? 0 : int(a[0].size());
    IntMatrix u;
    int r = hermite_columns(a, &u);
    IntMatrix k(n, std::vector<Int>(n - r));
    for (int i = 0; i < n; ++i)
        for (int j = r; j < n; ++j) k[i][j - r] = u[i][j];
    return k;
}

// Integer lattice with a canonical column-Hermite basis.
struct IntLattice {
    int ambient = 0;
    int rank = 0;
    IntMatrix basis;  // ambient x rank, column Hermite form

    QMatrix basis_q() const { return to_qmatrix(basis); }
    // Integer combination of basis columns by coefficient vector c.
    std::vector<Int> point(const std::vector<Int>& c) const {
        if (int(c.size()) != rank) throw std::invalid_argument("coefficient size mismatch");
        std::vector<Int> p(ambient, Int(0));
        for (int j = 0; j < rank; ++j) {
            if (c[j] == 0) continue;
            for (int i = 0; i < ambient; ++i) p[i] += c[j] * basis[i][j];
        }
        return p;
    }
};

// Hermite-canonical basis of (Q-kernel of L) ∩ Z^N. Row denominators are
// cleared first; that changes neither the kernel nor its integer points.
inline IntLattice integer_solution_lattice(const QMatrix& l) {
    IntMatrix a = detail::integerize_rows(l);
    if (a.empty()) a.assign(1, std::vector<Int>(l.cols(), Int(0)));
    IntMatrix k = integer_kernel(std::move(a));
    const int n = int(k.size());
    int r = hermite_columns(k, nullptr);
    IntLattice lat;
    lat.ambient = n;
    lat.rank = r;
    lat.basis.assign(n, std::vector<Int>(r));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < r; ++j) lat.basis[i][j] = k[i][j];
    return lat;
}

// Visits nonzero coefficient vectors c with |c_i| <= bound in graded
// lexicographic order: by L1 norm, then lexicographically. Stops when the
// visitor returns false or max_candidates vectors have been visited.
// Returns true iff the whole bounded region was exhausted.
inline bool enumerate_graded(int rank, long long bound, long long max_candidates,
                             const std::function<bool(const std::vector<Int>&)>& visit) {
    if (rank == 0 || bound <= 0) return true;
    std::vector<Int> c(rank);
    long long seen = 0;
    bool stopped = false, truncated = false;

    std::function<void(int, long long)> rec = [&](int pos, long long rem) {
        if (stopped || truncated) return;
        if (pos == rank) {
            if (rem != 0) return;
            if (seen >= max_candidates) {
                truncated = true;
                return;
            }
            ++seen;
            if (!visit(c)) stopped = true;
            return;
        }
        long long tail_cap = (long long)(rank - pos - 1) * bound;
        long long lo_abs = rem > tail_cap ? rem - tail_cap : 0;
        long long hi = std::min(bound, rem);
        for (long long v = -hi; v <= hi && !stopped && !truncated; ++v) {
            if (v > -lo_abs && v < lo_abs) continue;  // |v| too small to finish the level
            c[pos] = v;
            rec(pos + 1, rem - (v < 0 ? -v : v));
        }
        c[pos] = 0;
    };

    long long max_level = (long long)rank * bound;
    for (long long s = 1; s <= max_level && !stopped && !truncated; ++s) rec(0, s);
    return !stopped && !truncated;
}

}  // namespace centra
