#include "quintic/qseries.hpp"

#include <stdexcept>

namespace qk {

QSeries::QSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("QSeries: negative order");
    c_.assign(static_cast<size_t>(order) + 1, QRatFun());
}

QSeries QSeries::constant(const QRatFun& c, int order) {
    QSeries s(order);
    s.c_[0] = c;
    return s;
}

QSeries QSeries::novikov(int order) {
    QSeries s(order);
    if (order >= 1) s.c_[1] = QRatFun(Rational(1));
    return s;
}

const QRatFun& QSeries::coeff(int n) const {
    if (n < 0 || n > order_) throw std::out_of_range("QSeries::coeff: degree out of range");
    return c_[static_cast<size_t>(n)];
}

void QSeries::set_coeff(int n, QRatFun v) {
    if (n < 0 || n > order_) throw std::out_of_range("QSeries::set_coeff: degree out of range");
    c_[static_cast<size_t>(n)] = std::move(v);
}

bool QSeries::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

QSeries QSeries::truncated(int m) const {
    if (m < 0 || m > order_) throw std::invalid_argument("QSeries::truncated: bad order");
    QSeries s(m);
    for (int n = 0; n <= m; ++n) s.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n)];
    return s;
}

void QSeries::check_same_order(const QSeries& o) const {
    if (order_ != o.order_)
        throw std::invalid_argument("QSeries: mixed truncation orders");
}

QSeries& QSeries::operator+=(const QSeries& o) {
    check_same_order(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    check_same_order(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

QSeries QSeries::operator-() const {
    QSeries s(*this);
    for (auto& c : s.c_) c = -c;
    return s;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    a.check_same_order(b);
    QSeries r(a.order_);
    for (int n = 0; n <= a.order_; ++n) {
        QRatFun acc;
        for (int i = 0; i <= n; ++i) {
            if (a.c_[static_cast<size_t>(i)].is_zero()) continue;
            if (b.c_[static_cast<size_t>(n - i)].is_zero()) continue;
            acc += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(n - i)];
        }
        r.c_[static_cast<size_t>(n)] = std::move(acc);
    }
    return r;
}

QSeries QSeries::scaled(const QRatFun& s) const {
    QSeries r(order_);
    if (s.is_zero()) return r;
    for (int n = 0; n <= order_; ++n)
        if (!c_[static_cast<size_t>(n)].is_zero())
            r.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n)] * s;
    return r;
}

QSeries QSeries::scaled(const Rational& s) const {
    QSeries r(order_);
    for (int n = 0; n <= order_; ++n) r.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n)].scaled(s);
    return r;
}

QSeries e_shift(const QSeries& a) {
    QSeries r(a.order());
    for (int n = 0; n <= a.order(); ++n)
        if (!a.coeff(n).is_zero()) r.set_coeff(n, a.coeff(n).q_shifted(n));
    return r;
}

QSeries delta_op(const QSeries& a) { return a - e_shift(a); }

QSeries series_invert(const QSeries& a) {
    if (a.coeff(0).is_zero())
        throw std::domain_error("series_invert: constant term is zero");
    const int N = a.order();
    QSeries r(N);
    QRatFun c0inv = ratfun_reciprocal(a.coeff(0));
    r.set_coeff(0, c0inv);
    for (int n = 1; n <= N; ++n) {
        QRatFun acc;
        for (int i = 1; i <= n; ++i) {
            if (a.coeff(i).is_zero() || r.coeff(n - i).is_zero()) continue;
            acc += a.coeff(i) * r.coeff(n - i);
        }
        if (!acc.is_zero()) r.set_coeff(n, -(acc * c0inv));
    }
    return r;
}

QSeries series_exp(const QSeries& a) {
    if (!a.coeff(0).is_zero())
        throw std::domain_error("series_exp: constant term must vanish");
    const int N = a.order();
    QSeries r = QSeries::constant(QRatFun(Rational(1)), N);
    QSeries pw = QSeries::constant(QRatFun(Rational(1)), N);
    Integer fact(1);
    for (int m = 1; m <= N; ++m) {
        pw = pw * a;
        fact *= m;
        r += pw.scaled(Rational(1) / Rational(fact));
    }
    return r;
}

}  // namespace qk
