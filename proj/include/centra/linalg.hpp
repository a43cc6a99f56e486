#pragma once

#include <stdexcept>
#include <vector>

#include "centra/matrix.hpp"
#include "centra/zpoly.hpp"

namespace centra {

// Characteristic polynomial, monic of degree n, by the Faddeev-LeVerrier
// recurrence. Exact over Q.
inline ZPolyScaled char_poly(const QMatrix& t) {
    t.require_square();
    const int n = t.rows();
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    QMatrix m = QMatrix::zero(n, n);
    for (int k = 1; k <= n; ++k) {
        m = t * (m + QMatrix::identity(n) * c[n - k + 1]);
        Rat tr = 0;
        for (int i = 0; i < n; ++i) tr += m(i, i);
        c[n - k] = -tr / Rat(k);
    }
    return scaled_from_rational(c);
}

// Minimal polynomial by the first linear dependence among I, T, T^2, ...
// (deterministic, over the full power sequence), then verified.
inline ZPolyScaled min_poly(const QMatrix& t) {
    t.require_square();
    const int n = t.rows();
    if (n == 0) return scaled_from_rational({Rat(1)});
    QMatrix powers(n * n, 1);  // grows column by column: vec(I), vec(T), ...
    QMatrix pk = QMatrix::identity(n);
    {
        auto v = vec(pk);
        for (int i = 0; i < n * n; ++i) powers(i, 0) = v[i];
    }
    for (int k = 1; k <= n; ++k) {
        pk = pk * t;
        auto v = vec(pk);
        QMatrix rhs(n * n, 1);
        for (int i = 0; i < n * n; ++i) rhs(i, 0) = v[i];
        if (auto a = solve(powers, rhs)) {
            std::vector<Rat> coeffs(k + 1);
            for (int i = 0; i < k; ++i) coeffs[i] = -(*a)(i, 0);
            coeffs[k] = 1;
            ZPolyScaled mu = scaled_from_rational(coeffs);
            if (!mu.prim.eval(t).is_zero())
                throw std::logic_error("min_poly verification failed");
            return mu;
        }
        QMatrix wider(n * n, k + 1);
        for (int i = 0; i < n * n; ++i) {
            for (int j = 0; j < k; ++j) wider(i, j) = powers(i, j);
            wider(i, k) = rhs(i, 0);
        }
        powers = std::move(wider);
    }
    throw std::logic_error("min_poly: no dependence up to degree n");
}

}  // namespace centra
