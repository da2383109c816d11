#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qk {

using Integer  = mpz_class;
using Rational = mpq_class;

/* Parse "p" or "p/q" (decimal, optional leading '-') into a canonical
   rational.  Throws on malformed input or zero denominator. */
inline Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

/* Canonical decimal form, "p" when the denominator is 1, else "p/q". */
inline std::string rat_to_string(const Rational& r) {
    return r.get_str(10);
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/* r^e for integer e; e < 0 requires r != 0. */
inline Rational rat_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0) {
        if (e < 0) throw std::domain_error("rat_pow: 0 to negative power");
        return Rational(0);
    }
    Rational base = r;
    bool inv = e < 0;
    unsigned long n = inv ? static_cast<unsigned long>(-e)
                          : static_cast<unsigned long>(e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    if (inv) acc = Rational(1) / acc;
    return acc;
}

inline Rational binomial(long n, long k) {
    if (k < 0) return Rational(0);
    if (n >= 0 && k > n) return Rational(0);
    Rational acc(1);
    for (long i = 0; i < k; ++i) {
        acc *= Rational(n - i);
        acc /= Rational(i + 1);
    }
    return acc;
}

inline Integer factorial(long n) {
    Integer acc(1);
    for (long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

}  // namespace qk
