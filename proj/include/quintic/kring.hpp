#pragma once

#include <array>
#include <vector>

#include "quintic/qratfun.hpp"

namespace qk {

/* Element of K(X) = Q[x]/(x^4) for the quintic threefold, with
   rational-function scalars: coords[a] multiplies Phi_a = x^a. */
struct KElem {
    std::array<QRatFun, 4> coords;

    KElem() = default;
    explicit KElem(const QRatFun& scalar) { coords[0] = scalar; }
    static KElem basis(int a);

    bool is_zero() const;
    KElem& operator+=(const KElem& o);
    KElem& operator-=(const KElem& o);
    KElem operator-() const;
    friend KElem operator+(KElem a, const KElem& b) { return a += b; }
    friend KElem operator-(KElem a, const KElem& b) { return a -= b; }
    bool operator==(const KElem&) const = default;

    KElem scaled(const QRatFun& s) const;
    KElem scaled(const Rational& s) const;
    /* each coordinate multiplied by q^e */
    KElem q_shifted(int e) const;
    KElem subst_power(int r) const;
};

/* product modulo x^4 */
KElem k_mul(const KElem& a, const KElem& b);
/* multiplicative inverse mod x^4; requires an invertible scalar part */
KElem k_inverse(const KElem& a);
/* (1-x)^b mod x^4 for any b >= 0 */
KElem one_minus_x_pow(int b);

/* The pairing (Phi_a, Phi_b) of the quintic's K-ring. */
using PairingMatrix = std::array<std::array<Rational, 4>, 4>;
const PairingMatrix& pairing_matrix();
QRatFun pairing(const KElem& a, const KElem& b);
/* dual basis Phi^a with pairing(Phi^a, Phi_b) = delta_ab */
const std::array<KElem, 4>& dual_basis();

/* Series over Q with K-ring coefficients; same truncation discipline as
   QSeries. */
class KSeries {
public:
    explicit KSeries(int order);
    int order() const { return order_; }
    const KElem& coeff(int n) const;
    void set_coeff(int n, KElem v);
    bool is_zero() const;
    KSeries truncated(int m) const;

    KSeries& operator+=(const KSeries& o);
    KSeries& operator-=(const KSeries& o);
    KSeries operator-() const;
    friend KSeries operator+(KSeries a, const KSeries& b) { return a += b; }
    friend KSeries operator-(KSeries a, const KSeries& b) { return a -= b; }
    bool operator==(const KSeries&) const = default;

    KSeries scaled(const QRatFun& s) const;
    /* multiply every coefficient by one K-ring element */
    KSeries k_scaled(const KElem& e) const;
    /* E action: Q^n coefficient times q^n */
    KSeries e_shifted() const;

private:
    int order_ = 0;
    std::vector<KElem> c_;
};

}  // namespace qk
