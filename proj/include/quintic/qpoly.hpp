#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quintic/rational.hpp"

namespace qk {

/* Dense polynomial in q over the rationals.  Coefficients are stored in
   ascending order of degree with no trailing zeros, so the zero polynomial
   has an empty coefficient vector and degree() == -1. */
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const Rational& c) {
        if (c != 0) c_.push_back(c);
    }
    explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        trim();
    }
    static QPoly monomial(int deg, const Rational& c = Rational(1));
    static QPoly one() { return QPoly(Rational(1)); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    void set_coeff(int i, const Rational& v);

    bool operator==(const QPoly&) const = default;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly operator-() const;
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);

    QPoly scaled(const Rational& s) const;
    QPoly shifted_up(int k) const;           // multiply by q^k
    QPoly quotient_by_qpow(int k) const;     // exact division by q^k
    int low_degree() const;                  // order of vanishing at q = 0; -1 for zero

    /* Euclidean division: returns (quotient, remainder) with
       deg rem < deg divisor.  Divisor must be nonzero. */
    std::pair<QPoly, QPoly> divrem(const QPoly& divisor) const;
    /* Exact-division test; on success stores this/divisor in quo. */
    bool try_divide_exact(const QPoly& divisor, QPoly& quo) const;
    static QPoly gcd_monic(QPoly a, QPoly b);

    QPoly subst_power(int r) const;          // q -> q^r, r >= 1
    QPoly derivative() const;
    Rational eval(const Rational& x) const;
    Rational eval_zero() const { return coeff(0); }
    Rational eval_one() const;

    const Rational& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }
    /* this / leading(); optionally reports the leading coefficient. */
    QPoly monic_scaled(Rational* lead = nullptr) const;

    std::string str(const std::string& var = "q") const;

private:
    std::vector<Rational> c_;
    void trim();
};

/* k-th cyclotomic polynomial Phi_k, computed by the recursion
   q^k - 1 = prod_{d | k} Phi_d and cached for the life of the process. */
const QPoly& cyclotomic(int k);

/* Factorization helpers used by the rational-function layer:
   q^j - 1 = prod_{k | j} Phi_k, so 1 - q^j = - prod_{k | j} Phi_k. */
std::vector<int> divisors(int n);
int mobius(int n);

}  // namespace qk
