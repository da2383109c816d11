#pragma once

#include <map>
#include <utility>

#include "quintic/logseries.hpp"
#include "quintic/qseries.hpp"

namespace qk {

/* Linear q-difference operator sum_s c_s(Q,q) E^s acting on series in Q,
   normal-ordered with all shifts to the right (EQ = qQE).  Coefficients
   share one truncation order. */
class QDiffOp {
public:
    explicit QDiffOp(int order) : order_(order) {}
    static QDiffOp identity(int order);

    int order() const { return order_; }
    const std::map<int, QSeries>& terms() const { return terms_; }
    /* adds c * E^s to the operator */
    void add_term(int s, const QSeries& c);
    bool has_term(int s) const { return terms_.count(s) != 0; }
    const QSeries& term(int s) const;
    int max_shift() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    QDiffOp& operator+=(const QDiffOp& o);
    QDiffOp operator-() const;
    friend QDiffOp operator+(QDiffOp a, const QDiffOp& b) { return a += b; }
    QDiffOp scaled(const QRatFun& s) const;
    bool operator==(const QDiffOp&) const = default;

private:
    int order_ = 0;
    std::map<int, QSeries> terms_;  // shift exponent -> coefficient series
};

QSeries op_apply(const QDiffOp& p, const QSeries& a);
LogSeries op_apply(const QDiffOp& p, const LogSeries& a);
/* operator product p . r, normal-ordered via E^s (Q^n .) = q^{sn} Q^n E^s */
QDiffOp op_compose(const QDiffOp& p, const QDiffOp& r);
/* scales the E^s coefficient by s^n (the n-th Euler-type derivative along
   the shift grading; n = 0 returns the operator unchanged) */
QDiffOp op_derivative(const QDiffOp& p, int n);
/* left division by 1 - E: returns {b, r} with p = (1-E) . b + r, where r is
   supported on the single shift max_shift(p); r == 0 iff p is exactly
   left-divisible */
std::pair<QDiffOp, QDiffOp> op_divide_delta(const QDiffOp& p);

}  // namespace qk
