#include "quintic/frobenius.hpp"

#include <stdexcept>

#include "quintic/kring.hpp"

namespace qk {

namespace {

QRatFun qpow(int e) { return QRatFun(QPoly::monomial(e)); }

/* 1 - q^j e^{ax} in Q(q)[x]/(x^4): coords are 1 - q^j, then -q^j a^k/k! */
KElem pochhammer_factor(int j, long a) {
    KElem f{QRatFun(Rational(1))};
    Rational pw(1);
    for (int k = 0; k < 4; ++k) {
        f.coords[k] -= qpow(j).scaled(pw);
        pw *= Rational(a);
        pw /= Rational(k + 1);
    }
    return f;
}

}  // namespace

QRatFun q_harmonic(int n) {
    QRatFun acc;
    for (int j = 1; j <= n; ++j) {
        QPoly den;
        den.set_coeff(0, Rational(1));
        den.set_coeff(j, Rational(-1));
        acc += QRatFun(QPoly::monomial(j), den);
    }
    return acc;
}

FrobeniusData frobenius_data(int order) {
    FrobeniusData data(order);
    KElem acc{QRatFun(Rational(1))};
    auto collect = [&](int n) {
        Rational fact(1);
        for (int k = 0; k < 4; ++k) {
            data.j[k].set_coeff(n, acc.coords[k].scaled(fact));
            fact *= Rational(k + 1);
        }
    };
    collect(0);
    for (int n = 1; n <= order; ++n) {
        for (int j = 5 * n - 4; j <= 5 * n; ++j) acc = k_mul(acc, pochhammer_factor(j, 5));
        KElem g = k_inverse(pochhammer_factor(n, 1));
        KElem g2 = k_mul(g, g);
        acc = k_mul(acc, k_mul(k_mul(g2, g2), g));
        collect(n);
    }
    return data;
}

QDiffOp l5_operator(int order) {
    QDiffOp p(order);
    for (int s = 0; s <= 5; ++s) {
        Rational c = binomial(5, s) * rat_pow(Rational(-1), s);
        p.add_term(s, QSeries::constant(QRatFun(c), order));
    }
    /* -Q prod_j (1 - q^j E^5): E^{5m} coefficient is (-1)^{m+1} e_m(q..q^5) Q
       with e_m the elementary symmetric polynomial */
    std::array<QRatFun, 6> elem;
    elem[0] = QRatFun(Rational(1));
    for (int j = 1; j <= 5; ++j)
        for (int m = j; m >= 1; --m) elem[m] += elem[m - 1] * qpow(j);
    if (order >= 1)
        for (int m = 0; m <= 5; ++m) {
            QSeries c(order);
            c.set_coeff(1, elem[m].scaled(rat_pow(Rational(-1), m + 1)));
            p.add_term(5 * m, c);
        }
    return p;
}

QSeries frobenius_residual(int n, const FrobeniusData& data) {
    if (n < 0 || n > 3) throw std::invalid_argument("frobenius_residual: n out of range");
    if (data.order < 1) throw std::invalid_argument("frobenius_residual: order must be positive");
    QDiffOp l5 = l5_operator(data.order);
    QSeries acc(data.order);
    for (int k = 0; k <= n; ++k)
        acc += op_apply(op_derivative(l5, k), data.j[n - k]).scaled(binomial(n, k));
    return acc.truncated(data.order - 1);
}

std::vector<LogSeries> frobenius_solutions(const FrobeniusData& data, int lambda_bound) {
    if (lambda_bound < 3)
        throw std::invalid_argument("frobenius_solutions: lambda bound must be at least 3");
    LogSeries lam = LogSeries::lambda(data.order, lambda_bound);
    std::vector<LogSeries> out;
    for (int n = 0; n <= 3; ++n) {
        LogSeries f(data.order, lambda_bound);
        for (int k = 0; k <= n; ++k) {
            LogSeries t = LogSeries::from_series(data.j[k].scaled(binomial(n, k)), lambda_bound);
            for (int m = 0; m < n - k; ++m) t = t * lam;
            f += t;
        }
        out.push_back(f);
    }
    return out;
}

}  // namespace qk
