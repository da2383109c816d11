#include "quintic/gv.hpp"

#include <stdexcept>

namespace qk {

namespace {

const QRatFun kOneRF{Rational(1)};

/* 1/(1-q)^k */
QRatFun inv_one_minus_q(int k) {
    QPoly den = QPoly::one();
    QPoly lin;
    lin.set_coeff(0, Rational(1));
    lin.set_coeff(1, Rational(-1));
    for (int i = 0; i < k; ++i) den = den * lin;
    return QRatFun(QPoly::one(), den);
}

/* q^e as a rational function */
QRatFun qpow(int e) { return QRatFun(QPoly::monomial(e)); }

}  // namespace

const Integer& GVTable::at(int d) const {
    auto it = v_.find(d);
    if (it == v_.end()) throw std::out_of_range("GVTable: no entry at degree " + std::to_string(d));
    return it->second;
}

const GVTable& GVTable::quintic() {
    static const GVTable t{std::map<int, Integer>{
        {1, Integer("2875")},
        {2, Integer("609250")},
        {3, Integer("317206375")},
        {4, Integer("242467530000")},
        {5, Integer("229305888887625")},
        {6, Integer("248249742118022000")},
    }};
    return t;
}

GWTable gw_from_gv(const GVTable& gv, int max_degree) {
    GWTable r;
    for (int n = 1; n <= max_degree; ++n) {
        Rational acc(0);
        for (int d : divisors(n)) acc += Rational(gv.at(n / d)) / Rational(Integer(d) * d * d);
        r[n] = acc;
    }
    return r;
}

GVTable gv_from_gw(const GWTable& gw, int max_degree) {
    GVTable r;
    for (int n = 1; n <= max_degree; ++n) {
        Rational acc(0);
        for (int d : divisors(n)) {
            int mu = mobius(d);
            if (mu == 0) continue;
            acc += Rational(mu) * gw.at(n / d) / Rational(Integer(d) * d * d);
        }
        if (acc.get_den() != 1)
            throw std::domain_error("gv_from_gw: non-integral value at degree " + std::to_string(n));
        r.set(n, acc.get_num());
    }
    return r;
}

Rational gv_gamma(const GVTable& gv, int gamma, int n) {
    Rational acc(0);
    for (int d : divisors(n)) acc += rat_pow(Rational(d), gamma) * Rational(gv.at(d));
    return acc;
}

QRatFun kernel_eval(KernelKind k, int d, int r) {
    const Rational dd(d), rr(r);
    auto base_a = [&] {
        return (inv_one_minus_q(1).scaled(dd * rr) + inv_one_minus_q(2) * qpow(1).scaled(dd))
            .scaled(Rational(1, 5));
    };
    auto base_b = [&] {
        return (inv_one_minus_q(1).scaled(rr * dd + rr * rr - dd) + inv_one_minus_q(2).scaled(dd) -
                inv_one_minus_q(3) * (qpow(1) + qpow(2)))
            .scaled(Rational(1, 5));
    };
    auto base_c = [&] { return inv_one_minus_q(1).scaled(dd * dd * Rational(1, 5)); };
    auto base_e = [&] {
        QRatFun lin(QPoly{std::vector<Rational>{-dd, dd + 1}});  // dq + q - d
        return (inv_one_minus_q(1).scaled(dd * rr) - inv_one_minus_q(2) * lin.scaled(dd))
            .scaled(Rational(1, 5));
    };
    auto shift = [&](const QRatFun& f) { return f * qpow(d); };
    switch (k) {
        case KernelKind::A: return base_a();
        case KernelKind::B: return base_b();
        case KernelKind::C: return base_c();
        case KernelKind::E: return base_e();
        case KernelKind::D13: return base_a() - base_c() - shift(base_a());
        case KernelKind::D14: return base_b() - base_e() + shift(base_a()) - shift(base_b());
        case KernelKind::D23: return base_c() - shift(base_c());
        case KernelKind::D24: return base_e() + shift(base_c()) - shift(base_e());
    }
    throw std::invalid_argument("kernel_eval: unknown kind");
}

QSeries bracket(KernelKind k, const GVTable& gv, int order) {
    QSeries s(order);
    for (int d = 1; d <= order; ++d) {
        if (!gv.has(d)) {
            /* all terms with this d lie beyond the truncation only if d > N */
            throw std::out_of_range("bracket: GV table is missing degree " + std::to_string(d));
        }
        QRatFun weight{Rational(gv.at(d))};
        for (int r = 1; d * r <= order; ++r) {
            QRatFun term = kernel_eval(k, d, r).subst_power(r) * weight;
            s.set_coeff(d * r, s.coeff(d * r) + term);
        }
    }
    return s;
}

KSeries conjectural_small_j(const GVTable& gv, int order) {
    QSeries a = bracket(KernelKind::A, gv, order);
    QSeries b = bracket(KernelKind::B, gv, order);
    QRatFun omq = kOneRF - qpow(1);
    KSeries j(order);
    KElem lead;
    lead.coords[0] = omq;
    j.set_coeff(0, lead);
    for (int n = 1; n <= order; ++n) {
        KElem e;
        e.coords[2] = a.coeff(n) * omq;
        e.coords[3] = b.coeff(n) * omq;
        j.set_coeff(n, e);
    }
    return j;
}

std::vector<Integer> qk_invariants(const KSeries& j, int alpha) {
    if (alpha < 0 || alpha > 3) throw std::invalid_argument("qk_invariants: alpha out of range");
    std::vector<Integer> out;
    for (int n = 1; n <= j.order(); ++n) {
        Rational v(0);
        if (alpha == 0)
            v = Rational(-5) * j.coeff(n).coords[2].eval(Rational(0)) +
                Rational(5) * j.coeff(n).coords[3].eval(Rational(0));
        else if (alpha == 1)
            v = Rational(5) * j.coeff(n).coords[2].eval(Rational(0));
        if (v.get_den() != 1)
            throw std::domain_error("qk_invariants: non-integral value at degree " +
                                    std::to_string(n));
        out.push_back(v.get_num());
    }
    return out;
}

namespace {

QPoly one_minus_qpow(int r) {
    QPoly p;
    p.set_coeff(0, Rational(1));
    p.set_coeff(r, Rational(-1));
    return p;
}

}  // namespace

QSeries jm_p11(const GVTable& gv, int order) {
    QSeries s(order);
    for (int n = 1; n <= order; ++n) {
        QRatFun acc;
        for (int r : divisors(n)) {
            QPoly num;
            num.set_coeff(0, Rational(n));
            num.set_coeff(r, Rational(n / r) - Rational(n));
            QPoly omr = one_minus_qpow(r);
            acc += QRatFun(num, omr * omr).scaled(Rational(gv.at(n / r)));
        }
        s.set_coeff(n, acc);
    }
    return s;
}

QSeries jm_p2(const GVTable& gv, int order) {
    QSeries s(order);
    for (int n = 1; n <= order; ++n) {
        QRatFun acc;
        for (int r : divisors(n)) {
            QPoly omr = one_minus_qpow(r);
            QPoly num = omr * omr;
            num = num.scaled(Rational(Integer(r) * r));
            QPoly corr;
            corr.set_coeff(r, Rational(1));
            corr.set_coeff(2 * r, Rational(1));
            num -= corr;
            acc += QRatFun(num, omr * omr * omr).scaled(Rational(gv.at(n / r)));
        }
        s.set_coeff(n, acc);
    }
    return s;
}

}  // namespace qk
