#pragma once

#include <vector>

#include "quintic/qseries.hpp"

namespace qk {

/* Series sum c_{n,j} Q^n lambda^j where lambda = log Q / log q, so the shift
   operator acts by Q -> qQ and lambda -> lambda + 1.  Truncated at Q-order N
   and lambda-degree J. */
class LogSeries {
public:
    LogSeries(int order, int lambda_bound);
    static LogSeries from_series(const QSeries& s, int lambda_bound);
    static LogSeries lambda(int order, int lambda_bound);

    int order() const { return order_; }
    int lambda_bound() const { return lbound_; }
    const QRatFun& coeff(int n, int j) const;
    void set_coeff(int n, int j, QRatFun v);
    bool is_zero() const;
    /* the lambda^j part as a plain series */
    QSeries lambda_part(int j) const;

    LogSeries& operator+=(const LogSeries& o);
    LogSeries& operator-=(const LogSeries& o);
    LogSeries operator-() const;
    friend LogSeries operator+(LogSeries a, const LogSeries& b) { return a += b; }
    friend LogSeries operator-(LogSeries a, const LogSeries& b) { return a -= b; }
    /* product; throws if a lambda degree above the bound would be produced */
    friend LogSeries operator*(const LogSeries& a, const LogSeries& b);
    bool operator==(const LogSeries&) const = default;

    LogSeries scaled(const QRatFun& s) const;
    LogSeries scaled(const Rational& s) const;
    /* multiply by a lambda-free series of the same order */
    LogSeries times_series(const QSeries& s) const;

private:
    int order_ = 0;
    int lbound_ = 0;
    std::vector<std::vector<QRatFun>> c_;  // [n][j]
    void check_compatible(const LogSeries& o) const;
};

/* E with the log twist: Q^n lambda^j -> q^n Q^n (lambda+1)^j. */
LogSeries log_e_shift(const LogSeries& a);
/* E^s for s >= 0 (binomial expansion of (lambda+s)^j). */
LogSeries log_e_shift_pow(const LogSeries& a, int s);
LogSeries log_delta_op(const LogSeries& a);

/* Solve (1-E) y = rhs with the (n,j) = (0,0) coefficient of y pinned to
   zero.  For n >= 1 the leading term of (1-E) on Q^n lambda^j is
   (1-q^n) Q^n lambda^j, solved descending in j; at n = 0 the operator lowers
   lambda degree by exactly one, so the Q^0 part needs one spare lambda slot
   (throws if rhs has a nonzero top-degree Q^0 lambda coefficient). */
LogSeries solve_delta(const LogSeries& rhs);

}  // namespace qk
