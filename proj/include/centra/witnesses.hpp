#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "centra/profile.hpp"

// Explicit algebraic witnesses for matrices with rational spectrum: the
// Jordan basis over Q, the centralizer-invariant flag for single-eigenvalue
// matrices with distinct block sizes, the non-commuting pair built from
// rectangular identity blocks, and the GL(2) embedding when two blocks of
// equal size share an eigenvalue.

namespace centra {

namespace detail {

struct EigenvalueChains {
    Rat lambda;
    std::vector<std::vector<QMatrix>> chains;  // each chain: [N^(r-1)v, ..., Nv, v]
};

// Greedy rank-extension helper: appends candidate columns independent of the
// current span.
class SpanBuilder {
public:
    explicit SpanBuilder(int ambient) : cols_(ambient, 0), rank_(0) {}
    void seed(const QMatrix& columns) {
        for (int j = 0; j < columns.cols(); ++j) try_add(columns.column(j));
    }
    bool try_add(const QMatrix& col) {
        QMatrix wider(cols_.rows(), cols_.cols() + 1);
        for (int i = 0; i < cols_.rows(); ++i) {
            for (int j = 0; j < cols_.cols(); ++j) wider(i, j) = cols_(i, j);
            wider(i, cols_.cols()) = col(i, 0);
        }
        if (rank(wider) == rank_) return false;
        cols_ = std::move(wider);
        ++rank_;
        return true;
    }

private:
    QMatrix cols_;
    int rank_;
};

// Jordan chains of T for one rational eigenvalue, sizes non-increasing.
inline EigenvalueChains jordan_chains(const QMatrix& t, const Rat& lambda) {
    const int n = t.rows();
    QMatrix nil = t - QMatrix::identity(n) * lambda;
    std::vector<Subspace> kernels;  // kernels[j] = ker(N^(j+1))
    QMatrix power = nil;
    while (true) {
        Subspace k = kernel_basis(power);
        if (!kernels.empty() && k.dim() == kernels.back().dim()) break;
        kernels.push_back(k);
        if (k.dim() == n) break;
        power = power * nil;
    }
    if (kernels.empty() || kernels[0].dim() == 0)
        throw std::invalid_argument("not an eigenvalue");
    const int s = int(kernels.size());
    std::vector<std::vector<QMatrix>> tops(s + 1);  // tops[j]: chain tops at level j
    std::vector<QMatrix> pushed;                    // higher tops mapped down to current level
    for (int j = s; j >= 1; --j) {
        SpanBuilder span(n);
        if (j >= 2) span.seed(kernels[j - 2].basis());
        std::vector<QMatrix> next_pushed;
        for (const QMatrix& v : pushed) {
            span.try_add(v);
            next_pushed.push_back(nil * v);
        }
        for (int c = 0; c < kernels[j - 1].dim(); ++c) {
            QMatrix cand = kernels[j - 1].basis().column(c);
            if (span.try_add(cand)) {
                tops[j].push_back(cand);
                next_pushed.push_back(nil * cand);
            }
        }
        pushed = std::move(next_pushed);
    }
    EigenvalueChains out;
    out.lambda = lambda;
    for (int j = s; j >= 1; --j) {
        for (const QMatrix& v : tops[j]) {
            std::vector<QMatrix> chain(j);
            QMatrix cur = v;
            for (int k = j - 1; k >= 0; --k) {
                chain[k] = cur;
                if (k > 0) cur = nil * cur;
            }
            out.chains.push_back(std::move(chain));
        }
    }
    return out;
}

inline std::vector<std::pair<Rat, int>> rational_eigenvalues(const QMatrix& t) {
    Factorization chi = factor_z(char_poly(t).prim);
    std::vector<std::pair<Rat, int>> eigs;  // (lambda, multiplicity)
    for (const auto& [pi, mult] : chi.factors) {
        if (pi.degree() != 1)
            throw std::invalid_argument("non-rational spectrum: witnesses unavailable");
        eigs.emplace_back(Rat(-pi.coeff(0), pi.coeff(1)), mult);
    }
    std::sort(eigs.begin(), eigs.end(), [](const auto& a, const auto& b) {
        if (num(a.first) != num(b.first)) return num(a.first) < num(b.first);
        return den(a.first) < den(b.first);
    });
    return eigs;
}

}  // namespace detail

inline QMatrix jordan_block(const Rat& lambda, int size) {
    QMatrix j(size, size);
    for (int i = 0; i < size; ++i) {
        j(i, i) = lambda;
        if (i + 1 < size) j(i, i + 1) = 1;
    }
    return j;
}

inline QMatrix block_diag(const std::vector<QMatrix>& blocks) {
    int n = 0;
    for (const auto& b : blocks) n += b.rows();
    QMatrix m(n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return m;
}

// V T V^-1 = diag of Jordan blocks; eigenvalues in (numerator, denominator)
// lexicographic order, sizes non-increasing within an eigenvalue.
struct RationalJordanBasis {
    QMatrix v;
    std::vector<std::pair<Rat, int>> layout;  // (eigenvalue, block size)

    QMatrix jordan_matrix() const {
        std::vector<QMatrix> blocks;
        for (const auto& [lambda, size] : layout) blocks.push_back(jordan_block(lambda, size));
        return block_diag(blocks);
    }
};

inline RationalJordanBasis rational_jordan_basis(const QMatrix& t) {
    t.require_square();
    const int n = t.rows();
    RationalJordanBasis out;
    QMatrix basis(n, n);  // columns of V^-1: the Jordan basis vectors
    int col = 0;
    for (const auto& [lambda, mult] : detail::rational_eigenvalues(t)) {
        auto chains = detail::jordan_chains(t, lambda);
        for (const auto& chain : chains.chains) {
            out.layout.emplace_back(lambda, int(chain.size()));
            for (const QMatrix& vcol : chain) {
                for (int i = 0; i < n; ++i) basis(i, col) = vcol(i, 0);
                ++col;
            }
        }
    }
    if (col != n) throw std::logic_error("jordan basis does not fill the space");
    out.v = inverse(basis);
    if (out.v * t * basis != out.jordan_matrix())
        throw std::logic_error("jordan conjugation identity failed");
    return out;
}

// Flag basis for a single rational eigenvalue with pairwise distinct block
// sizes, ordered by the lexicographic key (k_i, -r_i) over N = T - lambda I:
// span(f_1..f_i) = ker(N^(k_i)) ∩ im(N^(r_i)).
struct FlagBasis {
    QMatrix vectors;                       // columns f_1..f_n
    std::vector<std::pair<int, int>> keys;  // (k_i, r_i)
};

inline FlagBasis flag_basis(const QMatrix& t, const Rat& lambda) {
    t.require_square();
    const int n = t.rows();
    {
        auto eigs = detail::rational_eigenvalues(t);
        if (eigs.size() != 1 || eigs[0].first != lambda || eigs[0].second != n)
            throw std::invalid_argument("characteristic polynomial must be (x - lambda)^n");
    }
    auto chains = detail::jordan_chains(t, lambda).chains;
    {
        std::vector<std::size_t> sizes;
        for (const auto& c : chains) sizes.push_back(c.size());
        std::sort(sizes.begin(), sizes.end());
        if (std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end())
            throw std::invalid_argument("repeated Jordan block sizes: no invariant flag");
    }
    QMatrix nil = t - QMatrix::identity(n) * lambda;
    std::vector<Subspace> images = {Subspace::full(n)};  // images[j] = im(N^j)
    {
        QMatrix power = QMatrix::identity(n);
        for (int j = 1; j <= n; ++j) {
            power = power * nil;
            images.push_back(image_basis(power));
            if (images.back().dim() == 0) break;
        }
    }
    struct Entry {
        QMatrix v;
        int k, r;
    };
    std::vector<Entry> entries;
    for (const auto& chain : chains) {
        for (const QMatrix& v : chain) {
            int k = 0;
            QMatrix cur = v;
            while (!cur.is_zero()) {
                cur = nil * cur;
                ++k;
            }
            int r = 0;
            for (int j = 1; j < int(images.size()); ++j) {
                if (images[j].contains(v)) r = j;
                else break;
            }
            entries.push_back({v, k, r});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.k != b.k) return a.k < b.k;
        return -a.r < -b.r;
    });
    FlagBasis out;
    out.vectors = QMatrix(n, n);
    for (int i = 0; i < n; ++i) {
        for (int row = 0; row < n; ++row) out.vectors(row, i) = entries[i].v(row, 0);
        out.keys.emplace_back(entries[i].k, entries[i].r);
    }
    for (int i = 1; i < n; ++i) {
        auto prev = std::make_pair(out.keys[i - 1].first, -out.keys[i - 1].second);
        auto curr = std::make_pair(out.keys[i].first, -out.keys[i].second);
        if (!(prev < curr)) throw std::logic_error("flag keys are not strictly increasing");
    }
    return out;
}

// The rectangular identity block: p x q with an identity in the top (p >= q)
// or right (p <= q) corner.
inline QMatrix rect_identity(int p, int q) {
    QMatrix m(p, q);
    int s = std::min(p, q);
    int row0 = 0, col0 = p <= q ? q - p : 0;
    for (int i = 0; i < s; ++i) m(row0 + i, col0 + i) = 1;
    return m;
}

struct WitnessPair {
    QMatrix a, b;
};

// A and B commute with T, have determinant one, and do not commute with each
// other; built from two Jordan blocks of the same eigenvalue (sizes r >= k)
// transported out of the Jordan basis.
inline WitnessPair noncommuting_pair(const QMatrix& t) {
    t.require_square();
    const int n = t.rows();
    auto eigs = detail::rational_eigenvalues(t);
    // the first eigenvalue in canonical order with at least two blocks
    for (const auto& [lambda, mult] : eigs) {
        auto chains = detail::jordan_chains(t, lambda).chains;
        if (chains.size() < 2) continue;
        // rebuild the full Jordan basis with this eigenvalue's chains placed
        // at their canonical position; offsets of its first two chains
        RationalJordanBasis rjb = rational_jordan_basis(t);
        int offset = 0, o1 = -1, o2 = -1, r = 0, k = 0;
        for (const auto& [ev, size] : rjb.layout) {
            if (ev == lambda) {
                if (o1 < 0) {
                    o1 = offset;
                    r = size;
                } else if (o2 < 0) {
                    o2 = offset;
                    k = size;
                }
            }
            offset += size;
        }
        if (o2 < 0) throw std::logic_error("chain count disagrees with layout");
        QMatrix a1 = QMatrix::identity(n), b1 = QMatrix::identity(n);
        QMatrix irk = rect_identity(r, k), ikr = rect_identity(k, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < k; ++j) {
                a1(o1 + i, o2 + j) = irk(i, j);
                b1(o2 + j, o1 + i) = ikr(j, i);
            }
        QMatrix p = inverse(rjb.v);  // columns are the Jordan basis
        WitnessPair w{p * a1 * rjb.v, p * b1 * rjb.v};
        if (w.a * t != t * w.a || w.b * t != t * w.b)
            throw std::logic_error("witness pair does not centralize T");
        if (w.a * w.b == w.b * w.a) throw std::logic_error("witness pair commutes");
        if (det(w.a) != 1 || det(w.b) != 1) throw std::logic_error("witness pair determinant");
        return w;
    }
    throw std::invalid_argument("every eigenvalue has a single Jordan block");
}

// Embedding of GL(2, Q) into the centralizer when some eigenvalue has two
// Jordan blocks of equal size s: g -> V^-1 [[aI,bI,0],[cI,dI,0],[0,0,I]] V.
struct GL2Embedding {
    QMatrix v;        // conjugator: V T V^-1 = diag(J_s, J_s, rest)
    QMatrix v_inv;
    int block_size = 0;
    Rat eigenvalue;

    QMatrix embed(const QMatrix& g) const {
        if (g.rows() != 2 || g.cols() != 2) throw std::invalid_argument("expected a 2x2 matrix");
        if (det(g).is_zero()) throw std::invalid_argument("embedded matrix must be invertible");
        const int n = v.rows();
        const int s = block_size;
        QMatrix psi = QMatrix::identity(n);
        for (int bi = 0; bi < 2; ++bi)
            for (int bj = 0; bj < 2; ++bj)
                for (int i = 0; i < s; ++i) psi(bi * s + i, bj * s + i) = g(bi, bj);
        return v_inv * psi * v;
    }
};

inline GL2Embedding gl2_embedding(const QMatrix& t) {
    t.require_square();
    const int n = t.rows();
    auto eigs = detail::rational_eigenvalues(t);
    for (const auto& [lambda, mult] : eigs) {
        auto chains = detail::jordan_chains(t, lambda).chains;
        int first = -1;
        for (std::size_t i = 0; i + 1 < chains.size(); ++i)
            if (chains[i].size() == chains[i + 1].size()) {
                first = int(i);
                break;
            }
        if (first < 0) continue;
        const int s = int(chains[first].size());
        // Basis: the two equal chains first, then everything else in
        // canonical order.
        QMatrix basis(n, n);
        int col = 0;
        auto put_chain = [&](const std::vector<QMatrix>& chain) {
            for (const QMatrix& vcol : chain) {
                for (int i = 0; i < n; ++i) basis(i, col) = vcol(i, 0);
                ++col;
            }
        };
        put_chain(chains[first]);
        put_chain(chains[first + 1]);
        for (const auto& [ev, mult2] : eigs) {
            auto evchains = detail::jordan_chains(t, ev).chains;
            for (std::size_t i = 0; i < evchains.size(); ++i) {
                if (ev == lambda && (int(i) == first || int(i) == first + 1)) continue;
                put_chain(evchains[i]);
            }
        }
        if (col != n) throw std::logic_error("embedding basis does not fill the space");
        GL2Embedding emb;
        emb.v_inv = basis;
        emb.v = inverse(basis);
        emb.block_size = s;
        emb.eigenvalue = lambda;
        if (emb.embed(QMatrix::identity(2)) != QMatrix::identity(n))
            throw std::logic_error("embedding does not preserve the identity");
        return emb;
    }
    throw std::invalid_argument("no eigenvalue has two Jordan blocks of equal size");
}

}  // namespace centra

