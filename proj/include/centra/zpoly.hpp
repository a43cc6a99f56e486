#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "centra/matrix.hpp"
#include "centra/rational.hpp"

namespace centra {

// Univariate polynomial over Z, coefficients lowest degree first.
// Zero polynomial is the empty coefficient vector.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    ZPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }

    static ZPoly x() { return ZPoly({Int(0), Int(1)}); }
    static ZPoly constant(const Int& a) { return ZPoly({a}); }
    static ZPoly monomial(const Int& a, int deg) {
        std::vector<Int> c(deg + 1);
        c[deg] = a;
        return ZPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }  // -1 for zero
    const Int& leading() const {
        static const Int zero = 0;
        return c_.empty() ? zero : c_.back();
    }
    const Int& coeff(int i) const {
        static const Int zero = 0;
        return i >= 0 && i < int(c_.size()) ? c_[i] : zero;
    }
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const ZPoly& o) const { return c_ == o.c_; }
    bool operator!=(const ZPoly& o) const { return !(*this == o); }

    ZPoly operator+(const ZPoly& o) const {
        std::vector<Int> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(int(i)) + o.coeff(int(i));
        return ZPoly(std::move(r));
    }
    ZPoly operator-(const ZPoly& o) const {
        std::vector<Int> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(int(i)) - o.coeff(int(i));
        return ZPoly(std::move(r));
    }
    ZPoly operator-() const {
        std::vector<Int> r(c_);
        for (auto& x : r) x = -x;
        return ZPoly(std::move(r));
    }
    ZPoly operator*(const ZPoly& o) const {
        if (is_zero() || o.is_zero()) return ZPoly();
        std::vector<Int> r(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        }
        return ZPoly(std::move(r));
    }
    ZPoly operator*(const Int& s) const {
        std::vector<Int> r(c_);
        for (auto& x : r) x *= s;
        return ZPoly(std::move(r));
    }

    ZPoly derivative() const {
        if (degree() < 1) return ZPoly();
        std::vector<Int> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(i);
        return ZPoly(std::move(r));
    }

    Int content() const {
        Int g = 0;
        for (const auto& x : c_) g = gcd_int(g, x);
        return g;
    }
    // Primitive part with positive leading coefficient; zero stays zero.
    ZPoly primitive_part() const {
        if (is_zero()) return ZPoly();
        Int g = content();
        if (leading() < 0) g = -g;
        std::vector<Int> r(c_);
        for (auto& x : r) x /= g;
        return ZPoly(std::move(r));
    }
    bool is_primitive() const { return !is_zero() && content() == 1 && leading() > 0; }
    bool is_monic() const { return !is_zero() && leading() == 1; }

    Rat eval(const Rat& x) const {
        Rat r = 0;
        for (int i = degree(); i >= 0; --i) r = r * x + Rat(c_[i]);
        return r;
    }
    QMatrix eval(const QMatrix& t) const {
        t.require_square();
        QMatrix r = QMatrix::zero(t.rows(), t.cols());
        for (int i = degree(); i >= 0; --i) {
            r = r * t;
            if (c_[i] != 0) r = r + QMatrix::identity(t.rows()) * Rat(c_[i]);
        }
        return r;
    }

    // Division by a monic divisor stays in Z[x]; remainder has smaller degree.
    std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& d) const {
        if (!d.is_monic()) throw std::invalid_argument("divmod_monic: divisor not monic");
        std::vector<Int> rem(c_);
        std::vector<Int> quo;
        int dd = d.degree();
        if (int(rem.size()) - 1 >= dd) quo.assign(rem.size() - dd, Int(0));
        for (int i = int(rem.size()) - 1; i >= dd; --i) {
            Int q = rem[i];
            if (q == 0) continue;
            quo[i - dd] = q;
            for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.coeff(j);
        }
        if (int(rem.size()) > dd) rem.resize(dd > 0 ? dd : 0);
        return {ZPoly(std::move(quo)), ZPoly(std::move(rem))};
    }

    // Exact quotient; throws if the division leaves a remainder.
    ZPoly divide_exact(const ZPoly& d) const {
        if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
        if (is_zero()) return ZPoly();
        std::vector<Int> rem(c_);
        int dd = d.degree();
        if (degree() < dd) throw std::invalid_argument("not divisible");
        std::vector<Int> quo(degree() - dd + 1, Int(0));
        for (int i = int(rem.size()) - 1; i >= dd; --i) {
            if (rem[i] == 0) continue;
            if (rem[i] % d.leading() != 0) throw std::invalid_argument("not divisible");
            Int q = rem[i] / d.leading();
            quo[i - dd] = q;
            for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.coeff(j);
        }
        for (const auto& x : rem)
            if (x != 0) throw std::invalid_argument("not divisible");
        return ZPoly(std::move(quo));
    }

    bool divides(const ZPoly& p) const {
        if (is_zero()) return p.is_zero();
        if (p.is_zero()) return true;
        if (p.degree() < degree()) return false;
        try {
            (void)p.divide_exact(*this);
            return true;
        } catch (const std::invalid_argument&) {
            return false;
        }
    }

    // Pseudo-remainder: lc(d)^(deg p - deg d + 1) * p mod d, exact over Z.
    ZPoly pseudo_rem(const ZPoly& d) const {
        if (d.is_zero()) throw std::invalid_argument("pseudo_rem by zero");
        ZPoly r = *this;
        int dd = d.degree();
        while (!r.is_zero() && r.degree() >= dd) {
            int shift = r.degree() - dd;
            ZPoly scaled = r * d.leading();
            ZPoly sub = d * r.leading();
            std::vector<Int> shifted(sub.c_.size() + shift);
            for (std::size_t i = 0; i < sub.c_.size(); ++i) shifted[i + shift] = sub.c_[i];
            r = scaled - ZPoly(std::move(shifted));
        }
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const Int& a = c_[i];
            if (a == 0) continue;
            if (!s.empty()) s += a > 0 ? "+" : "-";
            else if (a < 0) s += "-";
            Int m = abs_int(a);
            if (i == 0) s += m.str();
            else {
                if (m != 1) s += m.str();
                s += i == 1 ? "x" : "x^" + std::to_string(i);
            }
        }
        return s;
    }

    // Degree-then-coefficient ordering, used to keep factor lists canonical.
    bool operator<(const ZPoly& o) const {
        if (degree() != o.degree()) return degree() < o.degree();
        for (int i = degree(); i >= 0; --i)
            if (coeff(i) != o.coeff(i)) return coeff(i) < o.coeff(i);
        return false;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

// Primitive gcd with positive leading coefficient (primitive PRS).
inline ZPoly poly_gcd(const ZPoly& p, const ZPoly& q) {
    ZPoly a = p.primitive_part(), b = q.primitive_part();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly r = a.pseudo_rem(b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// A rational polynomial stored as content * primitive integer polynomial.
// char_poly and min_poly return this so factorization can run over Z.
struct ZPolyScaled {
    Rat content;  // positive for nonzero values
    ZPoly prim;   // primitive, positive leading coefficient

    bool is_zero() const { return prim.is_zero(); }
    int degree() const { return prim.degree(); }
    Rat coeff(int i) const { return content * Rat(prim.coeff(i)); }
    bool operator==(const ZPolyScaled& o) const {
        return content == o.content && prim == o.prim;
    }
    bool operator!=(const ZPolyScaled& o) const { return !(*this == o); }
    std::string to_string() const {
        if (is_zero()) return "0";
        if (content == 1) return prim.to_string();
        return "(" + rat_to_string(content) + ")*(" + prim.to_string() + ")";
    }
};

// Normalizes a rational-coefficient polynomial (lowest degree first).
inline ZPolyScaled scaled_from_rational(const std::vector<Rat>& coeffs) {
    Int l = 1;
    for (const auto& x : coeffs) l = lcm_int(l, den(x));
    std::vector<Int> ints(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        ints[i] = num(coeffs[i]) * (l / den(coeffs[i]));
    ZPoly p(std::move(ints));
    if (p.is_zero()) return ZPolyScaled{Rat(0), ZPoly()};
    Int g = p.content();
    if (p.leading() < 0) g = -g;
    return ZPolyScaled{Rat(g, l), p.primitive_part()};
}

// Does u divide v over Q? (Equivalent to pp(u) | pp(v) up to a rational unit,
// decided by pseudo-remainder.)
inline bool divides_over_q(const ZPolyScaled& u, const ZPolyScaled& v) {
    if (u.is_zero()) return v.is_zero();
    if (v.is_zero()) return true;
    if (v.degree() < u.degree()) return false;
    return v.prim.pseudo_rem(u.prim).is_zero();
}

}  // namespace centra
