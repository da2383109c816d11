#include "quintic/logseries.hpp"

#include <stdexcept>

namespace qk {

LogSeries::LogSeries(int order, int lambda_bound) : order_(order), lbound_(lambda_bound) {
    if (order < 0 || lambda_bound < 0)
        throw std::invalid_argument("LogSeries: negative bound");
    c_.assign(static_cast<size_t>(order) + 1,
              std::vector<QRatFun>(static_cast<size_t>(lambda_bound) + 1));
}

LogSeries LogSeries::from_series(const QSeries& s, int lambda_bound) {
    LogSeries r(s.order(), lambda_bound);
    for (int n = 0; n <= s.order(); ++n) r.c_[static_cast<size_t>(n)][0] = s.coeff(n);
    return r;
}

LogSeries LogSeries::lambda(int order, int lambda_bound) {
    if (lambda_bound < 1)
        throw std::invalid_argument("LogSeries::lambda: bound must be >= 1");
    LogSeries r(order, lambda_bound);
    r.c_[0][1] = QRatFun(Rational(1));
    return r;
}

const QRatFun& LogSeries::coeff(int n, int j) const {
    if (n < 0 || n > order_ || j < 0 || j > lbound_)
        throw std::out_of_range("LogSeries::coeff: out of range");
    return c_[static_cast<size_t>(n)][static_cast<size_t>(j)];
}

void LogSeries::set_coeff(int n, int j, QRatFun v) {
    if (n < 0 || n > order_ || j < 0 || j > lbound_)
        throw std::out_of_range("LogSeries::set_coeff: out of range");
    c_[static_cast<size_t>(n)][static_cast<size_t>(j)] = std::move(v);
}

bool LogSeries::is_zero() const {
    for (const auto& row : c_)
        for (const auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}

QSeries LogSeries::lambda_part(int j) const {
    QSeries s(order_);
    for (int n = 0; n <= order_; ++n) s.set_coeff(n, coeff(n, j));
    return s;
}

void LogSeries::check_compatible(const LogSeries& o) const {
    if (order_ != o.order_ || lbound_ != o.lbound_)
        throw std::invalid_argument("LogSeries: mixed bounds");
}

LogSeries& LogSeries::operator+=(const LogSeries& o) {
    check_compatible(o);
    for (size_t n = 0; n < c_.size(); ++n)
        for (size_t j = 0; j < c_[n].size(); ++j) c_[n][j] += o.c_[n][j];
    return *this;
}

LogSeries& LogSeries::operator-=(const LogSeries& o) {
    check_compatible(o);
    for (size_t n = 0; n < c_.size(); ++n)
        for (size_t j = 0; j < c_[n].size(); ++j) c_[n][j] -= o.c_[n][j];
    return *this;
}

LogSeries LogSeries::operator-() const {
    LogSeries r(*this);
    for (auto& row : r.c_)
        for (auto& v : row) v = -v;
    return r;
}

LogSeries operator*(const LogSeries& a, const LogSeries& b) {
    a.check_compatible(b);
    LogSeries r(a.order_, a.lbound_);
    for (int n = 0; n <= a.order_; ++n)
        for (int i = 0; i <= n; ++i)
            for (int ja = 0; ja <= a.lbound_; ++ja) {
                const QRatFun& ca = a.coeff(i, ja);
                if (ca.is_zero()) continue;
                for (int jb = 0; jb <= b.lbound_; ++jb) {
                    const QRatFun& cb = b.coeff(n - i, jb);
                    if (cb.is_zero()) continue;
                    if (ja + jb > a.lbound_)
                        throw std::domain_error("LogSeries: lambda bound exceeded in product");
                    r.c_[static_cast<size_t>(n)][static_cast<size_t>(ja + jb)] += ca * cb;
                }
            }
    return r;
}

LogSeries LogSeries::scaled(const QRatFun& s) const {
    LogSeries r(order_, lbound_);
    if (s.is_zero()) return r;
    for (int n = 0; n <= order_; ++n)
        for (int j = 0; j <= lbound_; ++j)
            if (!coeff(n, j).is_zero()) r.c_[static_cast<size_t>(n)][static_cast<size_t>(j)] = coeff(n, j) * s;
    return r;
}

LogSeries LogSeries::scaled(const Rational& s) const {
    LogSeries r(order_, lbound_);
    for (int n = 0; n <= order_; ++n)
        for (int j = 0; j <= lbound_; ++j)
            r.c_[static_cast<size_t>(n)][static_cast<size_t>(j)] = coeff(n, j).scaled(s);
    return r;
}

LogSeries LogSeries::times_series(const QSeries& s) const {
    if (s.order() != order_) throw std::invalid_argument("LogSeries: mixed orders");
    LogSeries r(order_, lbound_);
    for (int n = 0; n <= order_; ++n)
        for (int i = 0; i <= n; ++i) {
            if (s.coeff(i).is_zero()) continue;
            for (int j = 0; j <= lbound_; ++j) {
                const QRatFun& cb = coeff(n - i, j);
                if (cb.is_zero()) continue;
                r.c_[static_cast<size_t>(n)][static_cast<size_t>(j)] += s.coeff(i) * cb;
            }
        }
    return r;
}

LogSeries log_e_shift_pow(const LogSeries& a, int s) {
    if (s < 0) throw std::invalid_argument("log_e_shift_pow: negative shift");
    LogSeries r(a.order(), a.lambda_bound());
    for (int n = 0; n <= a.order(); ++n)
        for (int j = 0; j <= a.lambda_bound(); ++j) {
            const QRatFun& c = a.coeff(n, j);
            if (c.is_zero()) continue;
            QRatFun base = (n > 0 && s > 0) ? c.q_shifted(n * s) : c;
            /* (lambda+s)^j = sum_i binom(j,i) s^{j-i} lambda^i */
            for (int i = 0; i <= j; ++i) {
                Rational coef = binomial(j, i) * rat_pow(Rational(s), j - i);
                if (coef == 0) continue;
                QRatFun cur = r.coeff(n, i);
                cur += base.scaled(coef);
                r.set_coeff(n, i, std::move(cur));
            }
        }
    return r;
}

LogSeries log_e_shift(const LogSeries& a) { return log_e_shift_pow(a, 1); }

LogSeries log_delta_op(const LogSeries& a) { return a - log_e_shift(a); }

LogSeries solve_delta(const LogSeries& rhs) {
    const int N = rhs.order();
    const int J = rhs.lambda_bound();
    LogSeries y(N, J);
    /* Q^0: (1-E) lambda^t = -sum_{i<t} binom(t,i) lambda^i, leading term
       -t lambda^{t-1}; solve descending, raising the degree by one. */
    if (!rhs.coeff(0, J).is_zero())
        throw std::domain_error("solve_delta: lambda bound too small at Q-degree 0");
    std::vector<QRatFun> resid(static_cast<size_t>(J) + 1);
    for (int j = 0; j <= J; ++j) resid[static_cast<size_t>(j)] = rhs.coeff(0, j);
    for (int t = J; t >= 1; --t) {
        QRatFun yt = resid[static_cast<size_t>(t - 1)].scaled(Rational(-1, t));
        if (yt.is_zero()) continue;
        y.set_coeff(0, t, yt);
        for (int i = 0; i < t; ++i)
            resid[static_cast<size_t>(i)] += yt.scaled(binomial(t, i));
    }
    /* for n >= 1 the lambda^j coefficient equation reads
       (1-q^n) y_{n,j} - q^n sum_{t>j} binom(t,j) y_{n,t} = rhs_{n,j} */
    for (int n = 1; n <= N; ++n) {
        QRatFun qn(QPoly::monomial(n));
        QRatFun one_minus_qn = QRatFun(Rational(1)) - qn;
        QRatFun inv = ratfun_reciprocal(one_minus_qn);
        for (int j = J; j >= 0; --j) {
            QRatFun acc = rhs.coeff(n, j);
            for (int t = j + 1; t <= J; ++t) {
                const QRatFun& yt = y.coeff(n, t);
                if (yt.is_zero()) continue;
                acc += qn * yt.scaled(binomial(t, j));
            }
            if (!acc.is_zero()) y.set_coeff(n, j, acc * inv);
        }
    }
    return y;
}

}  // namespace qk
