#include "quintic/flow.hpp"

#include <stdexcept>

namespace qk {

namespace {

const QRatFun kOneRF(Rational(1));

/* KElem for 1 - q^j (1-x)^5 = (1-q^j) + 5q^j x - 10q^j x^2 + 10q^j x^3 */
KElem numerator_factor(int j) {
    KElem e;
    QRatFun qj(QPoly::monomial(j));
    e.coords[0] = kOneRF - qj;
    e.coords[1] = qj.scaled(Rational(5));
    e.coords[2] = qj.scaled(Rational(-10));
    e.coords[3] = qj.scaled(Rational(10));
    return e;
}

/* KElem for 1 - q^d (1-x) = (1-q^d) + q^d x */
KElem denominator_factor(int d) {
    KElem e;
    QRatFun qd(QPoly::monomial(d));
    e.coords[0] = kOneRF - qd;
    e.coords[1] = qd;
    return e;
}

QRatFun one_minus_q_ratfun() {
    return QRatFun(QPoly{std::vector<Rational>{Rational(1), Rational(-1)}});
}

/* 1/(1-q^r) with the denominator assembled directly from its cyclotomic
   factors: 1-q^r = -prod_{j|r} Phi_j. */
QRatFun inv_one_minus_q_pow(int r) {
    DenFactors d;
    for (int j : divisors(r)) d.cyc[j] = 1;
    return QRatFun::from_factored(QPoly(Rational(-1)), std::move(d));
}

KSeries apply_monomial(const FlowMonomial& m, const KSeries& s) {
    const int N = s.order();
    KSeries out(N);
    const KElem xfac = one_minus_x_pow(m.x_power);
    for (int n = 0; n + m.q_degree <= N; ++n) {
        if (s.coeff(n).is_zero()) continue;
        KElem e = s.coeff(n);
        if (m.shift_power > 0 && n > 0) e = e.q_shifted(m.shift_power * n);
        e = k_mul(e, xfac).scaled(m.scale);
        out.set_coeff(n + m.q_degree, out.coeff(n + m.q_degree) + e);
    }
    return out;
}

KSeries apply_operator(const std::vector<FlowMonomial>& ops, const KSeries& s) {
    KSeries out(s.order());
    for (const auto& m : ops) out += apply_monomial(m, s);
    return out;
}

}  // namespace

int EpsilonTable::max_order() const {
    int m = 0;
    for (const auto& [key, val] : entries) m = std::max(m, key.first);
    return m;
}

KSeries i_function(int order) {
    if (order < 0) throw std::invalid_argument("i_function: negative order");
    KSeries j(order);
    KElem acc(kOneRF);
    j.set_coeff(0, acc);
    for (int d = 1; d <= order; ++d) {
        for (int jj = 5 * d - 4; jj <= 5 * d; ++jj) acc = k_mul(acc, numerator_factor(jj));
        KElem dinv = k_inverse(denominator_factor(d));
        KElem dinv5 = k_mul(k_mul(dinv, dinv), k_mul(dinv, dinv));
        dinv5 = k_mul(dinv5, dinv);
        acc = k_mul(acc, dinv5);
        j.set_coeff(d, acc);
    }
    QRatFun one_minus_q = one_minus_q_ratfun();
    return j.scaled(one_minus_q);
}

KSeries adams(int r, const KSeries& s) {
    if (r < 1) throw std::invalid_argument("adams: power must be >= 1");
    if (r == 1) return s;
    const int N = s.order();
    KSeries out(N);
    for (int n = 0; r * n <= N; ++n) {
        const KElem& e = s.coeff(n);
        if (e.is_zero()) continue;
        /* to the (1-x) basis: x^a = sum_i binom(a,i)(-1)^i (1-x)^i */
        std::array<QRatFun, 4> w;
        for (int i = 0; i < 4; ++i)
            for (int a = i; a < 4; ++a) {
                Rational c = binomial(a, i);
                if (i % 2) c = -c;
                if (c != 0 && !e.coords[static_cast<size_t>(a)].is_zero())
                    w[static_cast<size_t>(i)] += e.coords[static_cast<size_t>(a)].scaled(c);
            }
        KElem target;
        for (int i = 0; i < 4; ++i) {
            if (w[static_cast<size_t>(i)].is_zero()) continue;
            target += one_minus_x_pow(r * i).scaled(w[static_cast<size_t>(i)].subst_power(r));
        }
        out.set_coeff(r * n, out.coeff(r * n) + target);
    }
    return out;
}

std::vector<FlowMonomial> flow_monomials(const EpsilonTable& eps, int order) {
    std::vector<FlowMonomial> ops;
    for (const auto& [key, val] : eps.entries) {
        const auto& [k, l] = key;
        if (val.is_zero()) continue;
        if (!val.is_polynomial())
            throw std::domain_error("flow_monomials: epsilon entry is not polynomial");
        const QPoly p = val.to_poly();
        for (int r = 1; r * k <= order; ++r) {
            FlowMonomial m;
            m.scale = QRatFun(p.subst_power(r)).scaled(Rational(1, r)) * inv_one_minus_q_pow(r);
            m.shift_power = l * r;
            m.q_degree = r * k;
            m.x_power = l * r;
            ops.push_back(std::move(m));
        }
    }
    return ops;
}

KSeries flow_apply(const EpsilonTable& eps, const KSeries& s, int order) {
    if (s.order() != order) throw std::invalid_argument("flow_apply: mixed truncation orders");
    std::vector<FlowMonomial> ops = flow_monomials(eps, order);
    KSeries result = s;
    KSeries power = s;
    Integer fact(1);
    for (int m = 1; m <= order; ++m) {
        power = apply_operator(ops, power);
        if (power.is_zero()) break;
        fact *= m;
        result += power.scaled(QRatFun(Rational(1) / Rational(fact)));
    }
    return result;
}

std::array<QLaurent, 4> eliminate_epsilon(const std::array<QLaurent, 4>& proj) {
    /* Solve B eps = g with g_i = -proj_i and B[i][l] = (-1)^i binom(l,i) by
       back-substitution from l = 3 down. */
    std::array<QLaurent, 4> eps;
    eps[3] = proj[3];
    eps[2] = -proj[2] - eps[3].scaled(Rational(3));
    eps[1] = proj[1] - eps[2].scaled(Rational(2)) - eps[3].scaled(Rational(3));
    eps[0] = -proj[0] - eps[1] - eps[2] - eps[3];
    return eps;
}

std::array<QLaurent, 4> eliminate_epsilon_reversed(const std::array<QLaurent, 4>& proj) {
    /* The elimination matrix is an involution, so applying it forward to the
       right-hand side solves the system without back-substitution; this
       exercises an independent order of operations. */
    std::array<QLaurent, 4> g;
    for (int i = 0; i < 4; ++i) g[static_cast<size_t>(i)] = -proj[static_cast<size_t>(i)];
    std::array<QLaurent, 4> eps;
    eps[0] = g[0] + g[1] + g[2] + g[3];
    eps[1] = -g[1] - g[2].scaled(Rational(2)) - g[3].scaled(Rational(3));
    eps[2] = g[2] + g[3].scaled(Rational(3));
    eps[3] = -g[3];
    return eps;
}

std::pair<EpsilonTable, KSeries> solve_epsilon(int order) {
    if (order < 0) throw std::invalid_argument("solve_epsilon: order must be >= 0");
    const KSeries i_full = i_function(order);
    EpsilonTable eps;
    for (int n = 1; n <= order; ++n) {
        KSeries truncated = i_full.truncated(n);
        KSeries g = flow_apply(eps, truncated, n);
        const KElem& gn = g.coeff(n);
        std::array<QLaurent, 4> proj;
        for (int i = 0; i < 4; ++i) proj[static_cast<size_t>(i)] = gn.coords[static_cast<size_t>(i)].proj_pol();
        std::array<QLaurent, 4> e = eliminate_epsilon(proj);
        for (int l = 0; l < 4; ++l) {
            if (!e[static_cast<size_t>(l)].is_polynomial())
                throw std::domain_error("solve_epsilon: epsilon has negative q-powers");
            eps.entries[{n, l}] = e[static_cast<size_t>(l)];
        }
    }
    KSeries j = flow_apply(eps, i_full, order);
    return {std::move(eps), std::move(j)};
}

KSeries quintic_cone_residual(const KSeries& i_series) {
    const int N = i_series.order();
    /* lhs: (1-(1-x)E)^5 applied to I - (1-q)Phi_0 */
    KSeries body = i_series;
    KElem c0 = body.coeff(0);
    c0.coords[0] -= one_minus_q_ratfun();
    body.set_coeff(0, c0);
    KSeries lhs(N);
    for (int i = 0; i <= 5; ++i) {
        Rational c = binomial(5, i);
        if (i % 2) c = -c;
        KSeries term(N);
        for (int n = 0; n <= N; ++n) {
            KElem e = body.coeff(n);
            if (e.is_zero()) continue;
            if (i > 0) e = k_mul(e.q_shifted(i * n), one_minus_x_pow(i));
            term.set_coeff(n, e.scaled(c));
        }
        lhs += term;
    }
    /* rhs: Q prod_{j=1}^5 (1 - q^j W) I with W = (1-x)^5 E^5, expanded as a
       polynomial in W with scalar coefficients. */
    std::vector<QRatFun> wcoef{kOneRF};
    for (int j = 1; j <= 5; ++j) {
        std::vector<QRatFun> next(wcoef.size() + 1);
        QRatFun qj(QPoly::monomial(j));
        for (size_t m = 0; m < wcoef.size(); ++m) {
            next[m] += wcoef[m];
            next[m + 1] -= wcoef[m] * qj;
        }
        wcoef = std::move(next);
    }
    KSeries rhs_body(N);
    for (size_t m = 0; m < wcoef.size(); ++m) {
        if (wcoef[m].is_zero()) continue;
        KElem xfac = one_minus_x_pow(5 * static_cast<int>(m));
        for (int n = 0; n <= N; ++n) {
            KElem e = i_series.coeff(n);
            if (e.is_zero()) continue;
            e = k_mul(e.q_shifted(5 * static_cast<int>(m) * n), xfac).scaled(wcoef[m]);
            rhs_body.set_coeff(n, rhs_body.coeff(n) + e);
        }
    }
    KSeries rhs(N);
    for (int n = 1; n <= N; ++n) rhs.set_coeff(n, rhs_body.coeff(n - 1));
    return lhs - rhs;
}

/* ---------- projective-space warm-up ---------- */

namespace {

std::vector<QRatFun> cpn_mul(const std::vector<QRatFun>& a, const std::vector<QRatFun>& b,
                             int dim) {
    std::vector<QRatFun> r(static_cast<size_t>(dim) + 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; i + j < r.size() && j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

/* inverse of (1-q^d) + q^d x in Q[x]/(x^{dim+1}) */
std::vector<QRatFun> cpn_den_inverse(int d, int dim) {
    QRatFun a = kOneRF - QRatFun(QPoly::monomial(d));
    QRatFun ainv = ratfun_reciprocal(a);
    QRatFun w = QRatFun(QPoly::monomial(d)) * ainv;  // q^d/(1-q^d)
    std::vector<QRatFun> r(static_cast<size_t>(dim) + 1);
    QRatFun pw = ainv;
    for (int i = 0; i <= dim; ++i) {
        r[static_cast<size_t>(i)] = pw;
        if (i < dim) pw = -(pw * w);
    }
    return r;
}

}  // namespace

CpnSeries cpn_small_j(int dim, int order) {
    if (dim < 1) throw std::invalid_argument("cpn_small_j: dimension must be >= 1");
    if (order < 0) throw std::invalid_argument("cpn_small_j: negative order");
    CpnSeries j;
    j.dim = dim;
    j.order = order;
    j.coords.assign(static_cast<size_t>(order) + 1,
                    std::vector<QRatFun>(static_cast<size_t>(dim) + 1));
    QRatFun one_minus_q = one_minus_q_ratfun();
    std::vector<QRatFun> acc(static_cast<size_t>(dim) + 1);
    acc[0] = kOneRF;
    j.coords[0][0] = one_minus_q;
    for (int d = 1; d <= order; ++d) {
        std::vector<QRatFun> inv = cpn_den_inverse(d, dim);
        for (int rep = 0; rep <= dim; ++rep) acc = cpn_mul(acc, inv, dim);
        for (int i = 0; i <= dim; ++i)
            j.coords[static_cast<size_t>(d)][static_cast<size_t>(i)] =
                acc[static_cast<size_t>(i)] * one_minus_q;
    }
    return j;
}

CpnSeries cpn_recursion_residual(const CpnSeries& j) {
    const int dim = j.dim;
    const int N = j.order;
    CpnSeries r;
    r.dim = dim;
    r.order = N;
    r.coords.assign(static_cast<size_t>(N) + 1,
                    std::vector<QRatFun>(static_cast<size_t>(dim) + 1));
    /* (1-x)^i mod x^{dim+1} */
    auto one_minus_x = [&](int p) {
        std::vector<QRatFun> v(static_cast<size_t>(dim) + 1);
        for (int a = 0; a <= dim; ++a) {
            Rational c = binomial(p, a);
            if (a % 2) c = -c;
            if (c != 0) v[static_cast<size_t>(a)] = QRatFun(c);
        }
        return v;
    };
    for (int i = 0; i <= dim + 1; ++i) {
        Rational c = binomial(dim + 1, i);
        if (i % 2) c = -c;
        std::vector<QRatFun> xfac = one_minus_x(i);
        for (int n = 0; n <= N; ++n) {
            std::vector<QRatFun> e = j.coords[static_cast<size_t>(n)];
            bool zero = true;
            for (auto& v : e)
                if (!v.is_zero()) zero = false;
            if (zero) continue;
            if (i > 0 && n > 0)
                for (auto& v : e) v = v.q_shifted(i * n);
            if (i > 0) e = cpn_mul(e, xfac, dim);
            for (int a = 0; a <= dim; ++a)
                r.coords[static_cast<size_t>(n)][static_cast<size_t>(a)] +=
                    e[static_cast<size_t>(a)].scaled(c);
        }
    }
    for (int n = N; n >= 1; --n)
        for (int a = 0; a <= dim; ++a)
            r.coords[static_cast<size_t>(n)][static_cast<size_t>(a)] -=
                j.coords[static_cast<size_t>(n - 1)][static_cast<size_t>(a)];
    return r;
}

bool cpn_is_zero(const CpnSeries& s) {
    for (const auto& row : s.coords)
        for (const auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}

}  // namespace qk
