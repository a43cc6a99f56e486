#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace centra {

// Exact arithmetic carriers for the whole library. No floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& x) { return numerator(x); }
inline Int den(const Rat& x) { return denominator(x); }

inline bool is_integer(const Rat& x) { return den(x) == 1; }

inline int sign(const Int& x) { return x.sign(); }
inline int sign(const Rat& x) { return x.sign(); }

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

// Canonical text form: "p" or "p/q" with q > 1, reduced, '-' prefix only.
inline std::string rat_to_string(const Rat& x) {
    std::string s = num(x).str();
    if (den(x) != 1) s += "/" + den(x).str();
    return s;
}

// Accepts exactly the canonical form produced by rat_to_string.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t slash = s.find('/');
    auto check_digits = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && t[0] == '-') {
            if (t.size() == 1) return false;
            i = 1;
        }
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
    if (!check_digits(ns, true)) throw std::invalid_argument("bad rational literal: " + s);
    Int n(ns);
    Int d(1);
    if (slash != std::string::npos) {
        std::string ds = s.substr(slash + 1);
        if (!check_digits(ds, false)) throw std::invalid_argument("bad rational literal: " + s);
        d = Int(ds);
        if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    }
    return Rat(n, d);
}

}  // namespace centra
