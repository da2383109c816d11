#pragma once

#include <vector>

#include "quintic/qratfun.hpp"

namespace qk {

/* Power series in the Novikov variable Q, truncated at a fixed order N, with
   rational-function coefficients in q.  Operations between series require
   equal truncation orders; mixing orders throws rather than silently
   extending (that discipline catches wrong-order bugs in the
   degree-by-degree solves). */
class QSeries {
public:
    explicit QSeries(int order);
    static QSeries constant(const QRatFun& c, int order);
    static QSeries novikov(int order);  // the series Q

    int order() const { return order_; }
    const QRatFun& coeff(int n) const;
    void set_coeff(int n, QRatFun v);
    bool is_zero() const;

    QSeries truncated(int m) const;  // m <= order

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries operator-() const;
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    bool operator==(const QSeries&) const = default;

    QSeries scaled(const QRatFun& s) const;
    QSeries scaled(const Rational& s) const;

private:
    int order_ = 0;
    std::vector<QRatFun> c_;
    void check_same_order(const QSeries& o) const;
};

/* (Ef)(Q,q) = f(qQ,q): multiplies the Q^n coefficient by q^n. */
QSeries e_shift(const QSeries& a);
/* Delta = 1 - E */
QSeries delta_op(const QSeries& a);

/* Neumann inversion; requires an invertible (nonzero) constant term. */
QSeries series_invert(const QSeries& a);
/* exp of a series with zero constant term: sum a^m/m!, m <= N. */
QSeries series_exp(const QSeries& a);

}  // namespace qk
