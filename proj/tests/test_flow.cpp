#include <random>

#include "doctest.h"
#include "quintic/flow.hpp"

using namespace qk;

namespace {

QPoly qp(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return QPoly(std::move(v));
}

const QRatFun kOne(Rational(1));

QRatFun one_minus_q() { return QRatFun(qp({1, -1})); }

QLaurent lp(std::initializer_list<long> cs) { return QLaurent(qp(cs)); }

/* (1-q)^a (1+q)^b (1+q+q^2)^c (1+q^2)^d (1+q+q^2+q^3+q^4)^e */
QPoly den_prod(int a, int b, int c, int d, int e) {
    QPoly r = QPoly::one();
    auto mul_pow = [&](const QPoly& f, int n) {
        for (int i = 0; i < n; ++i) r = r * f;
    };
    mul_pow(qp({1, -1}), a);
    mul_pow(qp({1, 1}), b);
    mul_pow(qp({1, 1, 1}), c);
    mul_pow(qp({1, 0, 1}), d);
    mul_pow(qp({1, 1, 1, 1, 1}), e);
    return r;
}

}  // namespace

TEST_CASE("i-function leading coefficients") {
    KSeries i = i_function(2);
    KElem expect0;
    expect0.coords[0] = one_minus_q();
    CHECK(i.coeff(0) == expect0);
    /* degree-1, x^0 coordinate: (1-q) prod_{j=1}^5 (1-q^j) / (1-q)^5 */
    QRatFun x0 = i.coeff(1).coords[0];
    CHECK(x0 == QRatFun(den_prod(1, 2, 1, 1, 1)));
    /* all coordinates of every coefficient are regular at q = 0 except for
       poles coming only from the (w q;q)_d^5 denominator */
    for (int n = 0; n <= 2; ++n)
        for (int a = 0; a < 4; ++a) CHECK_NOTHROW(i.coeff(n).coords[a].eval(Rational(0)));
}

TEST_CASE("adams operations") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> coef(-3, 3);
    KSeries s(2);
    for (int n = 0; n <= 2; ++n) {
        KElem e;
        for (int a = 0; a < 4; ++a) e.coords[a] = QRatFun(qp({coef(rng), coef(rng)}));
        s.set_coeff(n, e);
    }
    CHECK(adams(1, s) == s);
    /* psi^2 on (1-x) f(q) Q: (1-x)^2 f(q^2) Q^2 */
    QRatFun f(qp({2, 0, 3}));
    KSeries in(2);
    in.set_coeff(1, one_minus_x_pow(1).scaled(f));
    KSeries out = adams(2, in);
    CHECK(out.coeff(0).is_zero());
    CHECK(out.coeff(1).is_zero());
    CHECK(out.coeff(2) == one_minus_x_pow(2).scaled(f.subst_power(2)));
    /* psi^2(x Q) = (2x - x^2) Q^2 */
    KSeries xq(2);
    xq.set_coeff(1, KElem::basis(1));
    KElem expect = KElem::basis(1).scaled(Rational(2)) - KElem::basis(2);
    CHECK(adams(2, xq).coeff(2) == expect);
    /* psi^r psi^s = psi^{rs} on inputs surviving truncation */
    KSeries low(4);
    KElem e;
    e.coords[1] = QRatFun(qp({1, -2}));
    e.coords[3] = kOne;
    low.set_coeff(1, e);
    CHECK(adams(2, adams(2, low)) == adams(4, low));
}

TEST_CASE("flow exponential") {
    /* empty table: identity */
    KSeries probe(2);
    probe.set_coeff(0, KElem::basis(0));
    probe.set_coeff(1, KElem::basis(2).scaled(QRatFun(qp({0, 1}))));
    CHECK(flow_apply(EpsilonTable{}, probe, 2) == probe);
    /* single entry eps_{1,0} = c: exp(A) 1 =
       1 + c Q/(1-q) + [c^2/(2(1-q)^2) + c(q^2)/(2(1-q^2))] Q^2 */
    QRatFun c(qp({1, 1}));
    EpsilonTable eps;
    eps.entries[{1, 0}] = QLaurent(qp({1, 1}));
    KSeries one(2);
    one.set_coeff(0, KElem::basis(0));
    KSeries out = flow_apply(eps, one, 2);
    QRatFun inv1 = ratfun_reciprocal(one_minus_q());
    QRatFun inv2 = ratfun_reciprocal(kOne - QRatFun(QPoly::monomial(2)));
    QRatFun expect1 = c * inv1;
    QRatFun expect2 = (c * c * inv1 * inv1 + c.subst_power(2) * inv2).scaled(Rational(1, 2));
    CHECK(out.coeff(0) == KElem::basis(0));
    CHECK(out.coeff(1) == KElem(expect1));
    CHECK(out.coeff(2) == KElem(expect2));
    /* an entry with l > 0 twists by (1-x)^l and shifts the argument */
    EpsilonTable eps2;
    eps2.entries[{1, 2}] = QLaurent(QPoly::one());
    KSeries lin(1);
    lin.set_coeff(0, KElem::basis(0));
    lin.set_coeff(1, KElem::basis(1));
    KSeries out2 = flow_apply(eps2, lin, 1);
    /* A(lin) at Q^1: (1/(1-q)) (1-x)^2 [coeff_0 of lin](q Q shift irrelevant
       on constants), so coords pick up (1-x)^2/(1-q) */
    KElem got = out2.coeff(1);
    KElem expect = KElem::basis(1) + one_minus_x_pow(2).scaled(inv1);
    CHECK(got == expect);
}

TEST_CASE("elimination is an involution and order-independent") {
    std::mt19937 rng(515);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int t = 0; t < 20; ++t) {
        std::array<QLaurent, 4> proj;
        for (auto& p : proj) p = QLaurent(qp({coef(rng), coef(rng), coef(rng)}));
        auto a = eliminate_epsilon(proj);
        auto b = eliminate_epsilon_reversed(proj);
        for (int i = 0; i < 4; ++i) CHECK(a[i] == b[i]);
        /* residual: sum_l binom(l, i) eps_l = (-1)^{i+1} proj_i */
        for (int i = 0; i < 4; ++i) {
            QLaurent acc;
            for (int l = i; l < 4; ++l) acc += a[l].scaled(binomial(l, i));
            CHECK(acc == (i % 2 ? proj[i] : -proj[i]));
        }
    }
}

TEST_CASE("deformation at degree one matches the closed display") {
    auto [eps, j] = solve_epsilon(1);
    CHECK(eps.at(1, 0) == lp({1724, 572, -625, -1941, -3430, -4952, -6223, -6755, -6184,
                              -4690, -2747, -969}));
    CHECK(eps.at(1, 1) == lp({-4600, -1140, 2485, 6520, 11140, 15890, 19860, 21490, 19630,
                              14860, 8690, 3060}));
    CHECK(eps.at(1, 2) == lp({4025, 555, -3115, -7255, -12055, -17020, -21175, -22850,
                              -20830, -15740, -9190, -3230}));
    CHECK(eps.at(1, 3) == lp({-1150, 10, 1250, 2670, 4340, 6080, 7540, 8120, 7390, 5575,
                              3250, 1140}));
    /* J_0 = (1-q) Phi_0 and the degree-1 coefficient has only x^2, x^3 parts */
    KElem expect0;
    expect0.coords[0] = one_minus_q();
    CHECK(j.coeff(0) == expect0);
    CHECK(j.coeff(1).coords[0].is_zero());
    CHECK(j.coeff(1).coords[1].is_zero());
    CHECK(j.coeff(1).coords[2] == QRatFun(qp({575}), qp({1, -1})));
    CHECK(j.coeff(1).coords[3] == QRatFun(qp({1150, -2300}), den_prod(2, 0, 0, 0, 0)));
}

TEST_CASE("small j-function through degree three") {
    auto [eps, j] = solve_epsilon(3);
    /* earlier entries are unchanged by later degrees */
    CHECK(eps.at(1, 0) == lp({1724, 572, -625, -1941, -3430, -4952, -6223, -6755, -6184,
                              -4690, -2747, -969}));
    /* eps_{n,l} is a polynomial of degree 10 n^2 + 1 */
    for (int n = 1; n <= 3; ++n)
        for (int l = 0; l < 4; ++l) {
            const QLaurent& e = eps.at(n, l);
            CHECK(e.low >= 0);
            CHECK(e.high_degree() == 10 * n * n + 1);
        }
    /* every positive-degree coefficient of J is a reduced rational function:
       vanishing Laurent-polynomial projection */
    for (int n = 1; n <= 3; ++n)
        for (int a = 0; a < 4; ++a) {
            CHECK(j.coeff(n).coords[a].proj_pol().is_zero());
            if (a < 2) CHECK(j.coeff(n).coords[a].is_zero());
        }
    /* degree two */
    CHECK(j.coeff(2).coords[2] ==
          QRatFun(qp({244850, 487400, 243125}), den_prod(1, 2, 0, 0, 0)));
    CHECK(j.coeff(2).coords[3] == QRatFun(qp({369000, 487400, -738000, -1462200, -606950}),
                                          den_prod(2, 3, 0, 0, 0)));
    /* degree three */
    CHECK(j.coeff(3).coords[2] ==
          QRatFun(qp({190325550, 380647650, 570971475, 380646500, 190323825}),
                  den_prod(1, 0, 2, 0, 0)));
    CHECK(j.coeff(3).coords[3] ==
          QRatFun(qp({253772000, 380647650, 380647650, -507544000, -1141942950,
                      -1522590600, -888172100, -380647650}),
                  den_prod(2, 0, 3, 0, 0)));
}

TEST_CASE("cone identity for the i-function") {
    KSeries i = i_function(3);
    KSeries r = quintic_cone_residual(i);
    for (int n = 0; n <= 3; ++n) CHECK(r.coeff(n).is_zero());
}

TEST_CASE("projective-space small j-function") {
    CpnSeries j1 = cpn_small_j(1, 3);
    CHECK(j1.coords[0][0] == one_minus_q());
    CHECK(j1.coords[0][1].is_zero());
    QRatFun inv1 = ratfun_reciprocal(one_minus_q());
    CHECK(j1.coords[1][0] == inv1);
    CHECK(j1.coords[1][1] == -QRatFun(QPoly::monomial(1), den_prod(2, 0, 0, 0, 0)).scaled(
                                 Rational(2)));
    for (int dim = 1; dim <= 3; ++dim) {
        CpnSeries j = cpn_small_j(dim, 5);
        CHECK(cpn_is_zero(cpn_recursion_residual(j)));
    }
}
