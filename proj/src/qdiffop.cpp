#include "quintic/qdiffop.hpp"

#include <stdexcept>

namespace qk {

QDiffOp QDiffOp::identity(int order) {
    QDiffOp p(order);
    p.add_term(0, QSeries::constant(QRatFun(Rational(1)), order));
    return p;
}

void QDiffOp::add_term(int s, const QSeries& c) {
    if (s < 0) throw std::invalid_argument("QDiffOp: negative shift");
    if (c.order() != order_) throw std::invalid_argument("QDiffOp: mixed truncation orders");
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(s, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

const QSeries& QDiffOp::term(int s) const {
    auto it = terms_.find(s);
    if (it == terms_.end()) throw std::out_of_range("QDiffOp::term: absent shift");
    return it->second;
}

QDiffOp& QDiffOp::operator+=(const QDiffOp& o) {
    if (order_ != o.order_) throw std::invalid_argument("QDiffOp: mixed truncation orders");
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
}

QDiffOp QDiffOp::operator-() const {
    QDiffOp p(order_);
    for (const auto& [s, c] : terms_) p.terms_.emplace(s, -c);
    return p;
}

QDiffOp QDiffOp::scaled(const QRatFun& f) const {
    QDiffOp p(order_);
    if (f.is_zero()) return p;
    for (const auto& [s, c] : terms_) p.terms_.emplace(s, c.scaled(f));
    return p;
}

namespace {
QSeries e_shift_pow(const QSeries& a, int s) {
    QSeries r(a.order());
    for (int n = 0; n <= a.order(); ++n)
        if (!a.coeff(n).is_zero()) r.set_coeff(n, a.coeff(n).q_shifted(n * s));
    return r;
}
}  // namespace

QSeries op_apply(const QDiffOp& p, const QSeries& a) {
    if (p.order() != a.order()) throw std::invalid_argument("op_apply: mixed truncation orders");
    QSeries out(a.order());
    for (const auto& [s, c] : p.terms()) out += c * e_shift_pow(a, s);
    return out;
}

LogSeries op_apply(const QDiffOp& p, const LogSeries& a) {
    if (p.order() != a.order()) throw std::invalid_argument("op_apply: mixed truncation orders");
    LogSeries out(a.order(), a.lambda_bound());
    for (const auto& [s, c] : p.terms()) out += log_e_shift_pow(a, s).times_series(c);
    return out;
}

QDiffOp op_compose(const QDiffOp& p, const QDiffOp& r) {
    if (p.order() != r.order()) throw std::invalid_argument("op_compose: mixed truncation orders");
    QDiffOp out(p.order());
    for (const auto& [s1, c1] : p.terms())
        for (const auto& [s2, c2] : r.terms())
            out.add_term(s1 + s2, c1 * e_shift_pow(c2, s1));
    return out;
}

QDiffOp op_derivative(const QDiffOp& p, int n) {
    if (n < 0) throw std::invalid_argument("op_derivative: negative order");
    if (n == 0) return p;
    QDiffOp out(p.order());
    for (const auto& [s, c] : p.terms()) {
        Rational f = rat_pow(Rational(s), n);
        if (f != 0) out.add_term(s, c.scaled(f));
    }
    return out;
}

std::pair<QDiffOp, QDiffOp> op_divide_delta(const QDiffOp& p) {
    /* (1-E) . sum b_s E^s has E^s coefficient b_s - b_{s-1}(qQ), so the
       quotient is b_0 = c_0, b_s = c_s + b_{s-1}(qQ), and what is left over
       at the top shift S is (c_S + b_{S-1}(qQ)) E^S. */
    const int S = p.max_shift();
    QDiffOp b(p.order());
    QSeries prev(p.order());
    for (int s = 0; s < S; ++s) {
        QSeries bs = e_shift(prev);
        if (p.has_term(s)) bs += p.term(s);
        b.add_term(s, bs);
        prev = bs;
    }
    QSeries top = e_shift(prev);
    if (p.has_term(S)) top += p.term(S);
    QDiffOp r(p.order());
    r.add_term(S, top);
    return {b, r};
}

}  // namespace qk
