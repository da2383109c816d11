#include "quintic/kring.hpp"

#include <stdexcept>

namespace qk {

KElem KElem::basis(int a) {
    if (a < 0 || a > 3) throw std::out_of_range("KElem::basis: index out of range");
    KElem e;
    e.coords[static_cast<size_t>(a)] = QRatFun(Rational(1));
    return e;
}

bool KElem::is_zero() const {
    for (const auto& c : coords)
        if (!c.is_zero()) return false;
    return true;
}

KElem& KElem::operator+=(const KElem& o) {
    for (size_t a = 0; a < 4; ++a) coords[a] += o.coords[a];
    return *this;
}

KElem& KElem::operator-=(const KElem& o) {
    for (size_t a = 0; a < 4; ++a) coords[a] -= o.coords[a];
    return *this;
}

KElem KElem::operator-() const {
    KElem e;
    for (size_t a = 0; a < 4; ++a) e.coords[a] = -coords[a];
    return e;
}

KElem KElem::scaled(const QRatFun& s) const {
    KElem e;
    if (s.is_zero()) return e;
    for (size_t a = 0; a < 4; ++a)
        if (!coords[a].is_zero()) e.coords[a] = coords[a] * s;
    return e;
}

KElem KElem::scaled(const Rational& s) const {
    KElem e;
    for (size_t a = 0; a < 4; ++a) e.coords[a] = coords[a].scaled(s);
    return e;
}

KElem KElem::q_shifted(int e) const {
    KElem r;
    for (size_t a = 0; a < 4; ++a) r.coords[a] = coords[a].q_shifted(e);
    return r;
}

KElem KElem::subst_power(int r) const {
    KElem e;
    for (size_t a = 0; a < 4; ++a) e.coords[a] = coords[a].subst_power(r);
    return e;
}

KElem k_mul(const KElem& a, const KElem& b) {
    KElem r;
    for (size_t i = 0; i < 4; ++i) {
        if (a.coords[i].is_zero()) continue;
        for (size_t j = 0; i + j < 4; ++j) {
            if (b.coords[j].is_zero()) continue;
            r.coords[i + j] += a.coords[i] * b.coords[j];
        }
    }
    return r;
}

KElem k_inverse(const KElem& a) {
    if (a.coords[0].is_zero())
        throw std::domain_error("k_inverse: scalar part is zero");
    /* a = c (1 + u) with u nilpotent: a^{-1} = c^{-1} (1 - u + u^2 - u^3) */
    QRatFun cinv = ratfun_reciprocal(a.coords[0]);
    KElem u = a.scaled(cinv);
    u.coords[0] = QRatFun();
    KElem acc(QRatFun(Rational(1)));
    KElem upow(QRatFun(Rational(1)));
    for (int m = 1; m <= 3; ++m) {
        upow = k_mul(upow, u);
        if (m % 2)
            acc -= upow;
        else
            acc += upow;
    }
    return acc.scaled(cinv);
}

KElem one_minus_x_pow(int b) {
    if (b < 0) throw std::invalid_argument("one_minus_x_pow: negative power");
    KElem e;
    for (int a = 0; a < 4; ++a) {
        Rational c = binomial(b, a);
        if (a % 2) c = -c;
        e.coords[static_cast<size_t>(a)] = QRatFun(c);
    }
    return e;
}

const PairingMatrix& pairing_matrix() {
    static const PairingMatrix m = {{{{Rational(0), Rational(5), Rational(-5), Rational(5)}},
                                     {{Rational(5), Rational(-5), Rational(5), Rational(0)}},
                                     {{Rational(-5), Rational(5), Rational(0), Rational(0)}},
                                     {{Rational(5), Rational(0), Rational(0), Rational(0)}}}};
    return m;
}

QRatFun pairing(const KElem& a, const KElem& b) {
    const PairingMatrix& g = pairing_matrix();
    QRatFun acc;
    for (size_t i = 0; i < 4; ++i) {
        if (a.coords[i].is_zero()) continue;
        for (size_t j = 0; j < 4; ++j) {
            if (g[i][j] == 0 || b.coords[j].is_zero()) continue;
            acc += (a.coords[i] * b.coords[j]).scaled(g[i][j]);
        }
    }
    return acc;
}

const std::array<KElem, 4>& dual_basis() {
    static const std::array<KElem, 4> duals = [] {
        std::array<KElem, 4> d;
        const Rational fifth(1, 5);
        d[0] = KElem::basis(3).scaled(fifth);
        d[1] = (KElem::basis(2) + KElem::basis(3)).scaled(fifth);
        d[2] = (KElem::basis(1) + KElem::basis(2)).scaled(fifth);
        d[3] = (KElem::basis(0) + KElem::basis(1) - KElem::basis(3)).scaled(fifth);
        return d;
    }();
    return duals;
}

KSeries::KSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("KSeries: negative order");
    c_.assign(static_cast<size_t>(order) + 1, KElem());
}

const KElem& KSeries::coeff(int n) const {
    if (n < 0 || n > order_) throw std::out_of_range("KSeries::coeff: degree out of range");
    return c_[static_cast<size_t>(n)];
}

void KSeries::set_coeff(int n, KElem v) {
    if (n < 0 || n > order_) throw std::out_of_range("KSeries::set_coeff: degree out of range");
    c_[static_cast<size_t>(n)] = std::move(v);
}

bool KSeries::is_zero() const {
    for (const auto& e : c_)
        if (!e.is_zero()) return false;
    return true;
}

KSeries KSeries::truncated(int m) const {
    if (m < 0 || m > order_) throw std::invalid_argument("KSeries::truncated: bad order");
    KSeries s(m);
    for (int n = 0; n <= m; ++n) s.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n)];
    return s;
}

KSeries& KSeries::operator+=(const KSeries& o) {
    if (order_ != o.order_) throw std::invalid_argument("KSeries: mixed truncation orders");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

KSeries& KSeries::operator-=(const KSeries& o) {
    if (order_ != o.order_) throw std::invalid_argument("KSeries: mixed truncation orders");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

KSeries KSeries::operator-() const {
    KSeries s(order_);
    for (size_t i = 0; i < c_.size(); ++i) s.c_[i] = -c_[i];
    return s;
}

KSeries KSeries::scaled(const QRatFun& s) const {
    KSeries r(order_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i].scaled(s);
    return r;
}

KSeries KSeries::k_scaled(const KElem& e) const {
    KSeries r(order_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = k_mul(c_[i], e);
    return r;
}

KSeries KSeries::e_shifted() const {
    KSeries r(order_);
    for (int n = 0; n <= order_; ++n) r.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n)].q_shifted(n);
    return r;
}

}  // namespace qk
