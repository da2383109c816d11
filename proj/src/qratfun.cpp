#include "quintic/qratfun.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qk {

namespace {

int euler_phi(int n) {
    int result = n;
    for (int p = 2; static_cast<long>(p) * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

/* Cancel common factors of num against the factored denominator in place.
   Complete for the q-power and cyclotomic parts (irreducible factors, so
   trial division decides divisibility); the rest part is handled by a gcd
   loop. */
void cancel_core(QPoly& num, DenFactors& den) {
    if (num.is_zero()) return;
    if (den.q_exp > 0) {
        int t = num.low_degree();
        int c = std::min(t, den.q_exp);
        if (c > 0) {
            num = num.quotient_by_qpow(c);
            den.q_exp -= c;
        }
    }
    for (auto it = den.cyc.begin(); it != den.cyc.end();) {
        const QPoly& phi = cyclotomic(it->first);
        QPoly quo;
        while (it->second > 0 && num.try_divide_exact(phi, quo)) {
            num = std::move(quo);
            --it->second;
        }
        it = it->second == 0 ? den.cyc.erase(it) : std::next(it);
    }
    if (den.rest.degree() > 0) {
        for (;;) {
            QPoly g = QPoly::gcd_monic(num, den.rest);
            if (g.degree() <= 0) break;
            QPoly quo;
            if (!num.try_divide_exact(g, quo) )
                throw std::logic_error("cancel_core: gcd division failed");
            num = std::move(quo);
            if (!den.rest.try_divide_exact(g, quo))
                throw std::logic_error("cancel_core: gcd division failed");
            den.rest = std::move(quo);
        }
    }
}

DenFactors merge_dens(const DenFactors& a, const DenFactors& b) {
    DenFactors d;
    d.q_exp = a.q_exp + b.q_exp;
    d.cyc = a.cyc;
    for (const auto& [k, m] : b.cyc) d.cyc[k] += m;
    d.rest = a.rest * b.rest;
    return d;
}

/* Factors of Phi_k(q^r): the product of Phi_m over m = k*t with t | r and
   gcd(k*t, r) = t. */
std::vector<int> cyc_subst_factors(int k, int r) {
    std::vector<int> ms;
    for (int t : divisors(r))
        if (std::gcd(k * t, r) == t) ms.push_back(k * t);
    return ms;
}

}  // namespace

/* ---------- QLaurent ---------- */

QLaurent::QLaurent(QPoly p, int low_power) : low(low_power), poly(std::move(p)) {
    if (poly.is_zero()) {
        low = 0;
        return;
    }
    int t = poly.low_degree();
    if (t > 0) {
        poly = poly.quotient_by_qpow(t);
        low += t;
    }
}

QPoly QLaurent::to_poly() const {
    if (!is_polynomial()) throw std::domain_error("QLaurent::to_poly: negative powers");
    return poly.shifted_up(low);
}

QLaurent QLaurent::subst_power(int r) const {
    return QLaurent(poly.subst_power(r), low * r);
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    int nl = std::min(low, o.low);
    QPoly p = poly.shifted_up(low - nl);
    p += o.poly.shifted_up(o.low - nl);
    *this = QLaurent(std::move(p), nl);
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) { return *this += -o; }

QLaurent QLaurent::operator-() const { return QLaurent(-poly, low); }

QLaurent QLaurent::scaled(const Rational& s) const {
    if (s == 0) return QLaurent();
    return QLaurent(poly.scaled(s), low);
}

std::string QLaurent::str(const std::string& var) const {
    if (is_zero()) return "0";
    if (low >= 0) return to_poly().str(var);
    std::ostringstream os;
    os << "(" << poly.str(var) << ")*" << var << "^(" << low << ")";
    return os.str();
}

/* ---------- DenFactors ---------- */

QPoly DenFactors::expanded() const {
    QPoly p = rest;
    for (const auto& [k, m] : cyc) {
        const QPoly& phi = cyclotomic(k);
        for (int i = 0; i < m; ++i) p = p * phi;
    }
    return p.shifted_up(q_exp);
}

Rational DenFactors::eval(const Rational& x) const {
    Rational v(1);
    if (q_exp > 0) {
        if (x == 0) return Rational(0);
        v = rat_pow(x, q_exp);
    }
    for (const auto& [k, m] : cyc) {
        Rational f = cyclotomic(k).eval(x);
        if (f == 0) return Rational(0);
        for (int i = 0; i < m; ++i) v *= f;
    }
    Rational rv = rest.eval(x);
    if (rv == 0) return Rational(0);
    return v * rv;
}

/* ---------- factoring ---------- */

std::pair<Rational, DenFactors> factor_poly(const QPoly& p) {
    if (p.is_zero()) throw std::domain_error("factor_poly: zero polynomial");
    DenFactors d;
    Rational lead;
    QPoly m = p.monic_scaled(&lead);
    d.q_exp = std::max(m.low_degree(), 0);
    if (d.q_exp > 0) m = m.quotient_by_qpow(d.q_exp);
    const int bound = std::max(64, 2 * m.degree());
    for (int k = 1; k <= bound && m.degree() > 0; ++k) {
        if (euler_phi(k) > m.degree()) continue;
        const QPoly& phi = cyclotomic(k);
        QPoly quo;
        while (m.degree() >= phi.degree() && m.try_divide_exact(phi, quo)) {
            ++d.cyc[k];
            m = std::move(quo);
        }
    }
    d.rest = std::move(m);
    return {lead, d};
}

/* ---------- QRatFun ---------- */

QRatFun::QRatFun(const QLaurent& l) {
    if (l.low >= 0) {
        num_ = l.poly.shifted_up(l.low);
    } else {
        num_ = l.poly;
        den_.q_exp = -l.low;
    }
}

QRatFun::QRatFun(const QPoly& num, const QPoly& den) {
    auto [lead, factors] = factor_poly(den);
    num_ = num.scaled(Rational(1) / lead);
    den_ = std::move(factors);
    reduce();
}

QRatFun QRatFun::from_factored(QPoly num, DenFactors den) {
    if (den.rest.is_zero()) throw std::domain_error("from_factored: zero denominator");
    if (!den.rest.is_monic() && den.rest.degree() >= 0) {
        Rational lead;
        den.rest = den.rest.monic_scaled(&lead);
        num = num.scaled(Rational(1) / lead);
    }
    QRatFun f;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    f.reduce();
    return f;
}

QRatFun QRatFun::q_power(int e) {
    QRatFun f;
    if (e >= 0) {
        f.num_ = QPoly::monomial(e);
    } else {
        f.num_ = QPoly::one();
        f.den_.q_exp = -e;
    }
    return f;
}

void QRatFun::reduce() {
    if (num_.is_zero()) {
        den_ = DenFactors{};
        return;
    }
    cancel_core(num_, den_);
}

QPoly QRatFun::to_poly() const {
    if (!is_polynomial()) throw std::domain_error("QRatFun::to_poly:nontrivial denominator");
    return num_;
}

QLaurent QRatFun::to_laurent() const {
    if (!is_laurent()) throw std::domain_error("QRatFun::to_laurent: nontrivial denominator");
    return QLaurent(num_, -den_.q_exp);
}

QRatFun& QRatFun::operator+=(const QRatFun& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    DenFactors common;
    common.q_exp = std::max(den_.q_exp, o.den_.q_exp);
    common.cyc = den_.cyc;
    for (const auto& [k, m] : o.den_.cyc) {
        int& c = common.cyc[k];
        c = std::max(c, m);
    }
    QPoly sa = QPoly::one().shifted_up(common.q_exp - den_.q_exp);
    QPoly sb = QPoly::one().shifted_up(common.q_exp - o.den_.q_exp);
    for (const auto& [k, m] : common.cyc) {
        const QPoly& phi = cyclotomic(k);
        auto ita = den_.cyc.find(k);
        auto itb = o.den_.cyc.find(k);
        int ma = ita == den_.cyc.end() ? 0 : ita->second;
        int mb = itb == o.den_.cyc.end() ? 0 : itb->second;
        for (int i = ma; i < m; ++i) sa = sa * phi;
        for (int i = mb; i < m; ++i) sb = sb * phi;
    }
    if (den_.rest == o.den_.rest) {
        common.rest = den_.rest;
    } else {
        QPoly g = QPoly::gcd_monic(den_.rest, o.den_.rest);
        QPoly qa, qb;
        if (!den_.rest.try_divide_exact(g, qa) || !o.den_.rest.try_divide_exact(g, qb))
            throw std::logic_error("QRatFun::operator+=: gcd division failed");
        common.rest = den_.rest * qb;
        sa = sa * qb;
        sb = sb * qa;
    }
    num_ = num_ * sa + o.num_ * sb;
    den_ = std::move(common);
    reduce();
    return *this;
}

QRatFun& QRatFun::operator-=(const QRatFun& o) { return *this += -o; }

QRatFun& QRatFun::operator*=(const QRatFun& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) {
        *this = QRatFun();
        return *this;
    }
    if (this == &o) {
        QRatFun copy(o);
        return *this *= copy;
    }
    QPoly na = std::move(num_);
    QPoly nb = o.num_;
    DenFactors da = std::move(den_);
    DenFactors db = o.den_;
    /* Cross-cancellation: the factors of each denominator are irreducible
       (or handled by gcd for the rest part), so after cancelling the
       opposite numerators the product needs no further reduction. */
    cancel_core(na, db);
    cancel_core(nb, da);
    num_ = na * nb;
    den_ = merge_dens(da, db);
    return *this;
}

QRatFun& QRatFun::operator/=(const QRatFun& o) { return *this *= ratfun_reciprocal(o); }

QRatFun QRatFun::operator-() const {
    QRatFun f(*this);
    f.num_ = -f.num_;
    return f;
}

bool QRatFun::operator==(const QRatFun& o) const {
    if (num_ == o.num_ && den_ == o.den_) return true;
    /* Canonical forms are unique, but the factored split of an equal
       denominator can differ when factors exceed the extraction bound. */
    return num_ == o.num_ && den_.expanded() == o.den_.expanded();
}

QRatFun QRatFun::scaled(const Rational& s) const {
    if (s == 0) return QRatFun();
    QRatFun f(*this);
    f.num_ = f.num_.scaled(s);
    return f;
}

QRatFun QRatFun::q_shifted(int e) const {
    if (is_zero() || e == 0) return *this;
    QRatFun f(*this);
    if (e > 0) {
        int c = std::min(e, f.den_.q_exp);
        f.den_.q_exp -= c;
        f.num_ = f.num_.shifted_up(e - c);
    } else {
        int t = f.num_.low_degree();
        int c = std::min(-e, t);
        if (c > 0) f.num_ = f.num_.quotient_by_qpow(c);
        f.den_.q_exp += (-e) - c;
    }
    return f;
}

QRatFun QRatFun::pow(int e) const {
    if (e == 0) return QRatFun(Rational(1));
    QRatFun base = e < 0 ? ratfun_reciprocal(*this) : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-static_cast<long>(e))
                            : static_cast<unsigned long>(e);
    QRatFun acc(Rational(1));
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

QRatFun ratfun_reciprocal(const QRatFun& f) {
    if (f.is_zero()) throw std::domain_error("ratfun_reciprocal: division by zero");
    auto [lead, factors] = factor_poly(f.num_);
    QRatFun r;
    r.num_ = f.den_.expanded().scaled(Rational(1) / lead);
    r.den_ = std::move(factors);
    /* num and den are coprime by canonicality of f, so no reduce needed. */
    return r;
}

/* Decompose f = P/q^e + quo + rem/B where the denominator is q^e * B with
   B(0) != 0: P is the principal part at q = 0 (computed with the power-series
   inverse of B mod q^e) and quo, rem come from Euclidean division. */
namespace {
struct PolSplit {
    QLaurent pol;
    QPoly rem;       // deg rem < deg B
    DenFactors bden; // the B part of the denominator
};

PolSplit proj_split(const QPoly& num, const DenFactors& den) {
    PolSplit out;
    out.bden = den;
    out.bden.q_exp = 0;
    if (num.is_zero()) return out;
    const int e = den.q_exp;
    QPoly B = out.bden.expanded();
    QPoly A = num;
    QPoly principal;
    if (e > 0) {
        /* binv = B^{-1} mod q^e */
        std::vector<Rational> binv(static_cast<size_t>(e));
        Rational b0inv = Rational(1) / B.coeff(0);
        binv[0] = b0inv;
        for (int i = 1; i < e; ++i) {
            Rational s(0);
            int jmax = std::min(i, B.degree());
            for (int j = 1; j <= jmax; ++j) s += B.coeff(j) * binv[static_cast<size_t>(i - j)];
            binv[static_cast<size_t>(i)] = -s * b0inv;
        }
        std::vector<Rational> pc(static_cast<size_t>(e), Rational(0));
        int imax = std::min(e - 1, A.degree());
        for (int i = 0; i <= imax; ++i) {
            if (A.coeff(i) == 0) continue;
            for (int j = 0; i + j < e; ++j) pc[static_cast<size_t>(i + j)] += A.coeff(i) * binv[static_cast<size_t>(j)];
        }
        principal = QPoly(std::move(pc));
        A = (A - principal * B).quotient_by_qpow(e);
    }
    auto [quo, rem] = A.divrem(B);
    out.pol = QLaurent(principal + quo.shifted_up(e), -e);
    out.rem = std::move(rem);
    return out;
}
}  // namespace

QLaurent QRatFun::proj_pol() const {
    if (is_zero()) return QLaurent();
    return proj_split(num_, den_).pol;
}

QRatFun QRatFun::proj_red() const {
    if (is_zero()) return QRatFun();
    PolSplit s = proj_split(num_, den_);
    return QRatFun::from_factored(std::move(s.rem), std::move(s.bden));
}

QRatFun QRatFun::subst_power(int r) const {
    if (r < 1) throw std::invalid_argument("QRatFun::subst_power: power must be >= 1");
    if (r == 1 || is_zero()) return *this;
    QRatFun f;
    f.num_ = num_.subst_power(r);
    f.den_.q_exp = den_.q_exp * r;
    for (const auto& [k, m] : den_.cyc)
        for (int j : cyc_subst_factors(k, r)) f.den_.cyc[j] += m;
    if (den_.rest.degree() > 0) {
        auto [lead, factors] = factor_poly(den_.rest.subst_power(r));
        /* monic substitution keeps the leading coefficient 1 */
        f.den_.q_exp += factors.q_exp;
        for (const auto& [k, m] : factors.cyc) f.den_.cyc[k] += m;
        f.den_.rest = std::move(factors.rest);
        if (lead != 1) f.num_ = f.num_.scaled(Rational(1) / lead);
    }
    /* coprimality is preserved under q -> q^r, so no reduce needed */
    return f;
}

Rational QRatFun::limit_q1(int k) const {
    if (k < 0) throw std::invalid_argument("limit_q1: negative multiplier");
    QPoly one_minus_q{std::vector<Rational>{Rational(1), Rational(-1)}};
    QRatFun g = *this;
    for (int i = 0; i < k; ++i) g *= QRatFun(one_minus_q);
    if (g.den_.cyc.count(1))
        throw std::domain_error("limit_q1: pole at q = 1 persists");
    Rational dv = g.den_.eval(Rational(1));
    if (dv == 0) throw std::logic_error("limit_q1: unexpected vanishing denominator");
    return g.num_.eval(Rational(1)) / dv;
}

Rational QRatFun::eval(const Rational& x) const {
    Rational dv = den_.eval(x);
    if (dv == 0) throw std::domain_error("QRatFun::eval: pole at evaluation point");
    return num_.eval(x) / dv;
}

std::string QRatFun::str(const std::string& var) const {
    if (is_zero()) return "0";
    if (is_polynomial()) return num_.str(var);
    std::ostringstream os;
    os << "(" << num_.str(var) << ")/(" << den_.expanded().str(var) << ")";
    return os.str();
}

}  // namespace qk
