#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "centra/zpoly.hpp"

// Irreducible factorization over Z: Yun squarefree decomposition, Berlekamp
// factorization modulo a good prime, quadratic Hensel lifting to a
// Mignotte-style bound, subset recombination. Non-monic inputs are handled by
// the classical monicization g(x) -> lc^(d-1) g(x/lc).

namespace centra {

namespace gfp {

// Dense polynomials over F_p for small p, lowest degree first.
using Poly = std::vector<std::int64_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int deg(const Poly& a) { return int(a.size()) - 1; }

inline std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::invalid_argument("not invertible mod p");
    return t < 0 ? t + p : t;
}

inline Poly add(const Poly& a, const Poly& b, std::int64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int64_t x = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = x % p;
    }
    trim(r);
    return r;
}
inline Poly sub(const Poly& a, const Poly& b, std::int64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int64_t x = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        r[i] = ((x % p) + p) % p;
    }
    trim(r);
    return r;
}
inline Poly mul(const Poly& a, const Poly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}
inline Poly scalar_mul(const Poly& a, std::int64_t s, std::int64_t p) {
    Poly r = a;
    s = ((s % p) + p) % p;
    for (auto& x : r) x = x * s % p;
    trim(r);
    return r;
}
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::int64_t p) {
    if (b.empty()) throw std::invalid_argument("gfp division by zero");
    Poly rem = a, quo;
    std::int64_t inv = mod_inv(b.back(), p);
    if (deg(rem) >= deg(b)) quo.assign(rem.size() - b.size() + 1, 0);
    for (int i = deg(rem); i >= deg(b); --i) {
        std::int64_t q = rem[i] * inv % p;
        if (q == 0) continue;
        quo[i - deg(b)] = q;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::size_t k = i - deg(b) + j;
            rem[k] = ((rem[k] - q * b[j]) % p + p) % p;
        }
    }
    trim(rem);
    trim(quo);
    return {quo, rem};
}
inline Poly monic(const Poly& a, std::int64_t p) {
    if (a.empty()) return a;
    return scalar_mul(a, mod_inv(a.back(), p), p);
}
inline Poly gcd(Poly a, Poly b, std::int64_t p) {
    while (!b.empty()) {
        Poly r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}
inline Poly derivative(const Poly& a, std::int64_t p) {
    if (deg(a) < 1) return {};
    Poly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = std::int64_t(i) % p * a[i] % p;
    trim(r);
    return r;
}
inline Poly powmod(Poly base, Int e, const Poly& f, std::int64_t p) {
    Poly acc = {1};
    base = divmod(base, f, p).second;
    while (e > 0) {
        if ((e & 1) != 0) acc = divmod(mul(acc, base, p), f, p).second;
        base = divmod(mul(base, base, p), f, p).second;
        e >>= 1;
    }
    return acc;
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
inline std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b, std::int64_t p) {
    Poly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = sub(s0, mul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = sub(t0, mul(q, t1, p), p);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.empty()) {
        std::int64_t inv = mod_inv(r0.back(), p);
        r0 = scalar_mul(r0, inv, p);
        s0 = scalar_mul(s0, inv, p);
        t0 = scalar_mul(t0, inv, p);
    }
    return {r0, s0, t0};
}

// Deterministic Berlekamp factorization of a monic squarefree f over F_p.
inline std::vector<Poly> berlekamp(const Poly& f, std::int64_t p) {
    const int d = deg(f);
    if (d <= 1) return {f};
    // Q matrix: row i = x^(p*i) mod f.
    std::vector<std::vector<std::int64_t>> q(d, std::vector<std::int64_t>(d, 0));
    Poly xp = powmod({0, 1}, Int(p), f, p);
    Poly cur = {1};
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j <= deg(cur); ++j) q[i][j] = cur[j];
        cur = divmod(mul(cur, xp, p), f, p).second;
    }
    // Null space of Q - I by Gaussian elimination over F_p (rows as vectors).
    std::vector<std::vector<std::int64_t>> m(d, std::vector<std::int64_t>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m[i][j] = ((q[i][j] - (i == j ? 1 : 0)) % p + p) % p;
    // Work with the transpose so null vectors come out as combinations of rows.
    std::vector<std::vector<std::int64_t>> a(d, std::vector<std::int64_t>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a[i][j] = m[j][i];
    std::vector<int> pivot_col;
    int rr = 0;
    for (int c = 0; c < d && rr < d; ++c) {
        int pr = -1;
        for (int i = rr; i < d; ++i)
            if (a[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[pr], a[rr]);
        std::int64_t inv = mod_inv(a[rr][c], p);
        for (int j = 0; j < d; ++j) a[rr][j] = a[rr][j] * inv % p;
        for (int i = 0; i < d; ++i) {
            if (i == rr || a[i][c] == 0) continue;
            std::int64_t f0 = a[i][c];
            for (int j = 0; j < d; ++j) a[i][j] = ((a[i][j] - f0 * a[rr][j]) % p + p) % p;
        }
        pivot_col.push_back(c);
        ++rr;
    }
    std::vector<Poly> basis;
    std::vector<bool> is_pivot(d, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int c = 0; c < d; ++c) {
        if (is_pivot[c]) continue;
        Poly v(d, 0);
        v[c] = 1;
        for (int i = 0; i < rr; ++i) v[pivot_col[i]] = (p - a[i][c]) % p;
        trim(v);
        basis.push_back(std::move(v));
    }
    const std::size_t r = basis.size();  // number of irreducible factors
    std::vector<Poly> factors = {monic(f, p)};
    for (const Poly& v : basis) {
        if (factors.size() == r) break;
        if (deg(v) < 1) continue;  // constant null vectors split nothing
        std::vector<Poly> next;
        for (const Poly& g : factors) {
            if (deg(g) == 1) {
                next.push_back(g);
                continue;
            }
            Poly rest = g;
            Poly vr = divmod(v, g, p).second;
            std::vector<Poly> pieces;
            for (std::int64_t c = 0; c < p && deg(rest) > 0; ++c) {
                Poly shifted = vr;
                if (shifted.empty()) shifted = {0};
                shifted[0] = ((shifted[0] - c) % p + p) % p;
                trim(shifted);
                Poly h = gcd(rest, shifted, p);
                if (deg(h) > 0) {
                    pieces.push_back(h);
                    rest = divmod(rest, h, p).first;
                }
            }
            if (deg(rest) > 0) pieces.push_back(monic(rest, p));
            for (auto& piece : pieces) next.push_back(monic(piece, p));
        }
        factors = std::move(next);
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

}  // namespace gfp

namespace detail {

inline Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}
inline Int mod_sym(const Int& a, const Int& m) {
    Int r = mod_pos(a, m);
    if (2 * r > m) r -= m;
    return r;
}
inline ZPoly poly_mod(const ZPoly& a, const Int& m) {
    std::vector<Int> c(a.coeffs());
    for (auto& x : c) x = mod_pos(x, m);
    return ZPoly(std::move(c));
}
inline ZPoly poly_mod_sym(const ZPoly& a, const Int& m) {
    std::vector<Int> c(a.coeffs());
    for (auto& x : c) x = mod_sym(x, m);
    return ZPoly(std::move(c));
}
inline ZPoly from_gfp(const gfp::Poly& a) {
    std::vector<Int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    return ZPoly(std::move(c));
}
inline gfp::Poly to_gfp(const ZPoly& a, std::int64_t p) {
    gfp::Poly r(a.degree() + 1);
    for (int i = 0; i <= a.degree(); ++i)
        r[i] = std::int64_t(mod_pos(a.coeff(i), Int(p)));
    gfp::trim(r);
    return r;
}

// Remainder of a*b by monic m, all coefficients reduced mod q.
inline ZPoly mulmod(const ZPoly& a, const ZPoly& b, const ZPoly& m, const Int& q) {
    ZPoly prod = poly_mod(a * b, q);
    return poly_mod(prod.divmod_monic(m).second, q);
}

// One quadratic Hensel step (Zassenhaus): from f = g h (mod q) with Bezout
// s g + t h = 1 (mod q), g and h monic, to the same data mod q^2.
struct HenselPair {
    ZPoly g, h, s, t;
};

inline HenselPair hensel_step(const ZPoly& f, const HenselPair& in, const Int& q) {
    Int q2 = q * q;
    const ZPoly& g = in.g;
    const ZPoly& h = in.h;
    ZPoly e = poly_mod(f - g * h, q2);
    auto [qh, rh] = poly_mod(in.s * e, q2).divmod_monic(h);
    ZPoly g1 = poly_mod(g + in.t * e + qh * g, q2);
    ZPoly h1 = poly_mod(h + rh, q2);
    ZPoly b = poly_mod(in.s * g1 + in.t * h1 - ZPoly::constant(1), q2);
    auto [qc, rc] = poly_mod(in.s * b, q2).divmod_monic(h1);
    ZPoly s1 = poly_mod(in.s - rc, q2);
    ZPoly t1 = poly_mod(in.t - in.t * b - qc * g1, q2);
    return HenselPair{g1, h1, s1, t1};
}

// Lifts the factorization f = prod(leaves) (mod p), all monic, to modulus
// p^(2^levels). Recursive binary split, each pair lifted quadratically.
inline void hensel_tree(const ZPoly& f, const std::vector<gfp::Poly>& leaves,
                        std::int64_t p, int levels, const Int& final_modulus,
                        std::vector<ZPoly>& out) {
    if (leaves.size() == 1) {
        out.push_back(poly_mod(f, final_modulus));
        return;
    }
    std::size_t half = leaves.size() / 2;
    gfp::Poly uprod = {1}, vprod = {1};
    for (std::size_t i = 0; i < half; ++i) uprod = gfp::mul(uprod, leaves[i], p);
    for (std::size_t i = half; i < leaves.size(); ++i) vprod = gfp::mul(vprod, leaves[i], p);
    auto [gg, s0, t0] = gfp::xgcd(uprod, vprod, p);
    if (gfp::deg(gg) != 0) throw std::logic_error("hensel: factors not coprime mod p");
    HenselPair pair{from_gfp(uprod), from_gfp(vprod), from_gfp(s0), from_gfp(t0)};
    Int q = p;
    for (int l = 0; l < levels; ++l) {
        pair = hensel_step(f, pair, q);
        q *= q;
    }
    std::vector<gfp::Poly> left(leaves.begin(), leaves.begin() + half);
    std::vector<gfp::Poly> right(leaves.begin() + half, leaves.end());
    hensel_tree(pair.g, left, p, levels, final_modulus, out);
    hensel_tree(pair.h, right, p, levels, final_modulus, out);
}

// Coefficient bound for monic factors of monic G (Mignotte-style, using the
// 1-norm upper bound for the 2-norm).
inline Int factor_coeff_bound(const ZPoly& g) {
    Int norm1 = 0;
    for (const auto& c : g.coeffs()) norm1 += abs_int(c);
    return norm1 << unsigned(g.degree());
}

// Complete factorization of a primitive squarefree polynomial with positive
// leading coefficient, degree >= 1.
inline std::vector<ZPoly> factor_squarefree_primitive(const ZPoly& g) {
    if (g.degree() == 1) return {g};
    const Int l = g.leading();
    // Monicize: G(x) = l^(d-1) g(x/l). Factors of g are primitive parts of
    // factors of G evaluated back at l*x.
    const int d = g.degree();
    ZPoly big;
    {
        std::vector<Int> c(d + 1);
        c[d] = 1;
        Int pw = 1;  // l^(d-1-i)
        for (int i = d - 1; i >= 0; --i) {
            c[i] = g.coeff(i) * pw;
            pw *= l;
        }
        big = ZPoly(std::move(c));
    }
    // Smallest good prime: G must stay squarefree mod p.
    std::int64_t p = 0;
    {
        static const std::int64_t small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                                    31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                                                    73, 79, 83, 89, 97, 101, 103, 107, 109, 113};
        for (std::int64_t cand : small_primes) {
            gfp::Poly gp = to_gfp(big, cand);
            if (gfp::deg(gp) != d) continue;  // cannot happen for monic G; keep the guard
            if (gfp::deg(gfp::gcd(gp, gfp::derivative(gp, cand), cand)) == 0) {
                p = cand;
                break;
            }
        }
        if (p == 0) throw std::logic_error("no good prime below 113");
    }
    std::vector<gfp::Poly> modular = gfp::berlekamp(to_gfp(big, p), p);
    if (modular.size() == 1) return {g};

    // Lift to p^(2^levels) beyond twice the factor coefficient bound.
    Int bound = factor_coeff_bound(big);
    Int target = 2 * bound + 1;
    int levels = 0;
    Int q = p;
    while (q < target) {
        q *= q;
        ++levels;
    }
    std::vector<ZPoly> lifted;
    hensel_tree(poly_mod(big, q), modular, p, levels, q, lifted);

    // Subset recombination over the monic lifted factors, smallest subsets
    // first, so every emitted factor is irreducible.
    std::vector<ZPoly> result_big;
    std::vector<int> idx(lifted.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
    ZPoly rem_big = big;
    bool progress = true;
    while (progress && idx.size() > 1) {
        progress = false;
        for (std::size_t size = 1; size <= idx.size() / 2 && !progress; ++size) {
            std::vector<std::size_t> sel(size);
            for (std::size_t i = 0; i < size; ++i) sel[i] = i;
            while (true) {
                ZPoly cand = ZPoly::constant(1);
                for (std::size_t s : sel) cand = poly_mod(cand * lifted[idx[s]], q);
                cand = poly_mod_sym(cand, q);
                if (cand.divides(rem_big)) {
                    result_big.push_back(cand);
                    rem_big = rem_big.divide_exact(cand);
                    std::vector<int> keep;
                    for (std::size_t i = 0; i < idx.size(); ++i)
                        if (std::find(sel.begin(), sel.end(), i) == sel.end())
                            keep.push_back(idx[i]);
                    idx = std::move(keep);
                    progress = true;
                    break;
                }
                // next subset in lexicographic order
                int pos = int(size) - 1;
                while (pos >= 0 && sel[pos] == idx.size() - size + pos) --pos;
                if (pos < 0) break;
                ++sel[pos];
                for (std::size_t i = pos + 1; i < size; ++i) sel[i] = sel[i - 1] + 1;
            }
        }
    }
    if (rem_big.degree() >= 1) result_big.push_back(rem_big);

    // Map the factors of G back to factors of g.
    std::vector<ZPoly> result;
    for (const ZPoly& h : result_big) {
        std::vector<Int> c(h.degree() + 1);
        Int pw = 1;
        for (int i = 0; i <= h.degree(); ++i) {
            c[i] = h.coeff(i) * pw;
            pw *= l;
        }
        result.push_back(ZPoly(std::move(c)).primitive_part());
    }
    return result;
}

}  // namespace detail

// Primitive gcd with positive leading coefficient (declared in zpoly.hpp).

// Yun's squarefree decomposition of a nonzero polynomial: returns pairwise
// coprime primitive squarefree parts with multiplicities, ascending,
// reconstructing the primitive part of the input.
inline std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    ZPoly a = p.primitive_part();
    std::vector<std::pair<ZPoly, int>> parts;
    if (a.degree() < 1) return parts;
    ZPoly da = a.derivative();
    ZPoly g = poly_gcd(a, da);
    if (g.degree() == 0) {
        parts.emplace_back(a, 1);
        return parts;
    }
    // Standard Yun iteration.
    ZPoly c = a.divide_exact(g);
    ZPoly d = da.divide_exact(g) - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
        ZPoly gi = poly_gcd(c, d);
        if (gi.degree() > 0) parts.emplace_back(gi.primitive_part(), i);
        c = c.divide_exact(gi);
        d = d.divide_exact(gi) - c.derivative();
        ++i;
    }
    return parts;
}

struct Factorization {
    int unit = 1;                              // +-1
    Int content = 1;                           // positive integer content
    std::vector<std::pair<ZPoly, int>> factors;  // (irreducible primitive, multiplicity)

    ZPoly reconstruct() const {
        ZPoly r = ZPoly::constant(content * unit);
        for (const auto& [f, m] : factors)
            for (int i = 0; i < m; ++i) r = r * f;
        return r;
    }
};

// Complete irreducible factorization over Z of a nonzero polynomial.
inline Factorization factor_z(const ZPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("factor_z of zero polynomial");
    Factorization out;
    out.unit = p.leading() > 0 ? 1 : -1;
    out.content = abs_int(p.content());
    ZPoly prim = p.primitive_part();
    if (prim.degree() < 1) return out;
    for (const auto& [part, mult] : squarefree_decomposition(prim)) {
        for (const ZPoly& f : detail::factor_squarefree_primitive(part))
            out.factors.emplace_back(f, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace centra
