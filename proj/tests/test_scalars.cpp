#include <random>
#include <vector>

#include "doctest.h"
#include "quintic/qratfun.hpp"

using namespace qk;

namespace {

QPoly qp(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return QPoly(std::move(v));
}

QRatFun rf(std::initializer_list<long> num, std::initializer_list<long> den) {
    return QRatFun(qp(num), qp(den));
}

const QRatFun kOne(Rational(1));

/* 1/(1-q)^k */
QRatFun inv_one_minus_q(int k) {
    QRatFun base = rf({1}, {1, -1});
    return base.pow(k);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == qp({-1, 1}));
    CHECK(cyclotomic(2) == qp({1, 1}));
    CHECK(cyclotomic(3) == qp({1, 1, 1}));
    CHECK(cyclotomic(4) == qp({1, 0, 1}));
    CHECK(cyclotomic(6) == qp({1, -1, 1}));
    CHECK(cyclotomic(12) == qp({1, 0, -1, 0, 1}));
    /* q^j - 1 = prod_{k | j} Phi_k */
    for (int j = 1; j <= 12; ++j) {
        QPoly prod = QPoly::one();
        for (int k : divisors(j)) prod = prod * cyclotomic(k);
        QPoly target = QPoly::monomial(j) - QPoly::one();
        CHECK(prod == target);
    }
    /* Phi_k(1) is p for prime powers p^e, else 1 (k >= 2) */
    CHECK(cyclotomic(2).eval_one() == 2);
    CHECK(cyclotomic(9).eval_one() == 3);
    CHECK(cyclotomic(8).eval_one() == 2);
    CHECK(cyclotomic(6).eval_one() == 1);
    CHECK(cyclotomic(12).eval_one() == 1);
    CHECK(cyclotomic(15).eval_one() == 1);
}

TEST_CASE("polynomial division and gcd") {
    QPoly a = qp({-1, 0, 0, 1});  // q^3 - 1
    QPoly b = qp({-1, 1});        // q - 1
    auto [quo, rem] = a.divrem(b);
    CHECK(quo == qp({1, 1, 1}));
    CHECK(rem.is_zero());
    QPoly g = QPoly::gcd_monic(qp({-1, 0, 1}), qp({1, 2, 1}));  // (q^2-1, (q+1)^2)
    CHECK(g == qp({1, 1}));
    QPoly q2;
    CHECK(qp({0, 0, 2, 2}).try_divide_exact(qp({0, 1}), q2));
    CHECK(q2 == qp({0, 2, 2}));
    CHECK_FALSE(qp({1, 1, 1}).try_divide_exact(qp({-1, 1}), q2));
}

TEST_CASE("factor_poly splits q-powers and cyclotomics") {
    /* 3 q^2 (1-q)^2 (1-q^3) = lead * q^2 * Phi_1^3 * Phi_3 */
    QPoly p = qp({3}).shifted_up(2) * qp({1, -1}) * qp({1, -1}) * qp({1, 0, 0, -1});
    auto [lead, d] = factor_poly(p);
    CHECK(lead == Rational(-3));  // monic normalization flips (1-q) factors
    CHECK(d.q_exp == 2);
    CHECK(d.cyc.at(1) == 3);
    CHECK(d.cyc.at(3) == 1);
    CHECK(d.rest == QPoly::one());
    CHECK(d.expanded().scaled(lead) == p);
}

TEST_CASE("ratfun arithmetic examples") {
    QRatFun f = inv_one_minus_q(1);
    QRatFun g = QRatFun(qp({0, 1}), qp({1, -2, 1}));  // q/(1-q)^2
    CHECK(f + g == inv_one_minus_q(2));
    CHECK(f + QRatFun() == f);
    CHECK(f / f == kOne);
    /* round trips */
    CHECK((f * g) / g == f);
    CHECK(f - f == QRatFun());
    CHECK(rf({0, 0, 4}, {2, -2}) == rf({0, 0, 2}, {1, -1}));
}

TEST_CASE("proj_pol examples") {
    CHECK(inv_one_minus_q(1).proj_pol() == QLaurent());
    CHECK(rf({0, 0, 1}, {1, -1}).proj_pol() == QLaurent(qp({-1, -1})));
    CHECK(rf({2, 2}, {1, -1}).proj_pol() == QLaurent(qp({-2})));
    /* principal part at q = 0: 1/(q^2(1-q)) = q^-2 + q^-1 + 1/(1-q) */
    QRatFun h = QRatFun(qp({1}), qp({0, 0, 1, -1}));
    CHECK(h.proj_pol() == QLaurent(qp({1, 1}), -2));
    CHECK(h.proj_red() == inv_one_minus_q(1));
}

TEST_CASE("proj_red examples") {
    CHECK(rf({0, 0, 1}, {1, -2, 1}).proj_red() == rf({-1, 2}, {1, -2, 1}));
    QRatFun already = QRatFun(qp({0, 1, -3}), qp({1, -3, 3, -1}));
    CHECK(already.proj_red() == already);
    CHECK(already.proj_pol() == QLaurent());
    CHECK(QRatFun(qp({-1, -1})).proj_red() == QRatFun());
    /* q^2/(1-q): polynomial part -1-q, reduced part 1/(1-q) */
    QRatFun f = rf({0, 0, 1}, {1, -1});
    CHECK(f.proj_red() == inv_one_minus_q(1));
}

TEST_CASE("subst_power examples") {
    CHECK(inv_one_minus_q(1).subst_power(2) == rf({1}, {1, 0, -1}));
    QRatFun g = QRatFun(qp({0, 1}), qp({1, -2, 1}));
    CHECK(g.subst_power(1) == g);
    QPoly den3 = qp({1, 0, 0, -1}) * qp({1, 0, 0, -1});
    CHECK(g.subst_power(3) == QRatFun(qp({0, 0, 0, 1}), den3));
}

TEST_CASE("limit_q1 examples") {
    CHECK(rf({1, 0, 0, -1}, {1, -1}).limit_q1(0) == 3);
    /* d^2 (1-q^d)/(1-q) at d = 2 */
    CHECK(rf({4, 0, -4}, {1, -1}).limit_q1(0) == 8);
    CHECK(inv_one_minus_q(1).limit_q1(1) == 1);
    CHECK(inv_one_minus_q(2).limit_q1(2) == 1);
    CHECK_THROWS_AS(inv_one_minus_q(2).limit_q1(1), std::domain_error);
}

TEST_CASE("evaluation and poles") {
    QRatFun f = rf({1}, {1, -1});
    CHECK(f.eval(Rational(0)) == 1);
    CHECK(f.eval(Rational(1, 2)) == 2);
    CHECK_THROWS_AS(f.eval(Rational(1)), std::domain_error);
    CHECK_THROWS_AS(QRatFun::q_power(-1).eval(Rational(0)), std::domain_error);
}

TEST_CASE("projection properties on random inputs") {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> deg(0, 6);
    auto rand_poly = [&](bool nonzero) {
        for (;;) {
            std::vector<Rational> v(static_cast<size_t>(deg(rng)) + 1);
            for (auto& c : v) c = Rational(coef(rng));
            QPoly p{std::move(v)};
            if (!nonzero || !p.is_zero()) return p;
        }
    };
    for (int trial = 0; trial < 40; ++trial) {
        QRatFun f(rand_poly(false), rand_poly(true).shifted_up(trial % 3));
        QRatFun g(rand_poly(false), rand_poly(true));
        /* decomposition and idempotence */
        QLaurent pol = f.proj_pol();
        QRatFun red = f.proj_red();
        CHECK(QRatFun(pol) + red == f);
        CHECK(QRatFun(pol).proj_pol() == pol);
        CHECK(QRatFun(pol).proj_red() == QRatFun());
        CHECK(red.proj_red() == red);
        CHECK(red.proj_pol() == QLaurent());
        /* linearity */
        QRatFun sum = f + g;
        QLaurent pol_sum = f.proj_pol() + g.proj_pol();
        CHECK(sum.proj_pol() == pol_sum);
        CHECK(sum.proj_red() == f.proj_red() + g.proj_red());
        /* Adams composition on scalars */
        CHECK(f.subst_power(2).subst_power(3) == f.subst_power(6));
        /* canonical denominator is monic with coprime numerator */
        if (!f.is_zero()) {
            QPoly d = f.den_expanded();
            CHECK(d.is_monic());
            CHECK(QPoly::gcd_monic(f.num(), d).degree() <= 0);
        }
    }
}

TEST_CASE("proj_pol vanishes exactly on reduced regular functions") {
    /* deg num < deg den and den(0) != 0 */
    CHECK(rf({1, 5}, {1, 0, 0, -1}).proj_pol() == QLaurent());
    /* improper */
    CHECK(rf({1, 0, 0, 0, 2}, {1, 0, 0, -1}).proj_pol() != QLaurent());
    /* den vanishing at 0 */
    CHECK(QRatFun(qp({1}), qp({0, 1, -1})).proj_pol() != QLaurent());
}

TEST_CASE("displayed projection identities for all small d, r") {
    const QRatFun inv1 = inv_one_minus_q(1);
    const QRatFun inv2 = inv_one_minus_q(2);
    const QRatFun inv3 = inv_one_minus_q(3);
    for (int d = 1; d <= 10; ++d) {
        const QRatFun qd = QRatFun::q_power(d);
        for (int r = 1; r <= 10; ++r) {
            const Rational rd(d), rr(r);
            /* q^d (r^2/(1-q) - (q+q^2)/(1-q)^3)
               -> (-1+3q-4q^2)/(1-q)^3 + (-1+d)(-1-d+3q+dq)/(1-q)^2 + r^2/(1-q) */
            QRatFun lhs1 = qd * (inv1.scaled(rr * rr) - QRatFun(qp({0, 1, 1})) * inv3);
            QPoly lin1;
            lin1.set_coeff(0, (rd - 1) * (-1 - rd));
            lin1.set_coeff(1, (rd - 1) * (rd + 3));
            QRatFun rhs1 = QRatFun(qp({-1, 3, -4})) * inv3 + QRatFun(lin1) * inv2 +
                           inv1.scaled(rr * rr);
            CHECK(lhs1.proj_red() == rhs1);
            /* q^d (r/(1-q) + q/(1-q)^2) -> (-d+q+dq)/(1-q)^2 + r/(1-q) */
            QRatFun lhs2 = qd * (inv1.scaled(rr) + QRatFun(qp({0, 1})) * inv2);
            QPoly lin2;
            lin2.set_coeff(0, -rd);
            lin2.set_coeff(1, rd + 1);
            QRatFun rhs2 = QRatFun(lin2) * inv2 + inv1.scaled(rr);
            CHECK(lhs2.proj_red() == rhs2);
        }
    }
}
