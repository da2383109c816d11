#include <random>

#include "doctest.h"
#include "quintic/qdiff.hpp"

using namespace qk;

namespace {

QPoly qp(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return QPoly(std::move(v));
}

const QRatFun kOne(Rational(1));

GVTable two_values(long a, long b) {
    GVTable t;
    t.set(1, Integer(a));
    t.set(2, Integer(b));
    return t;
}

GVTable zero_counts(int n) {
    GVTable t;
    for (int d = 1; d <= n; ++d) t.set(d, Integer(0));
    return t;
}

}  // namespace

TEST_CASE("shifted frame of the small j-function") {
    KSeries j = conjectural_small_j(GVTable::quintic(), 2);
    Matrix4Series m = shifted_matrix(j);
    const long expect[4][4] = {{1, 1, 1, 1}, {0, -1, -2, -3}, {0, 0, 1, 3}, {0, 0, 0, -1}};
    for (int i = 0; i < 4; ++i)
        for (int c = 0; c < 4; ++c)
            CHECK(m.at(i, c).coeff(0) == QRatFun(Rational(expect[i][c])));
}

TEST_CASE("birkhoff factorization") {
    CHECK_THROWS_AS(birkhoff(Matrix4Series(2)), std::domain_error);
    Matrix4Series id = Matrix4Series::identity(3);
    BirkhoffFactors trivial = birkhoff(id);
    CHECK(trivial.t == id);
    CHECK(trivial.u == id);

    const int N = 6;
    const GVTable& gv = GVTable::quintic();
    Matrix4Series m = shifted_matrix(conjectural_small_j(gv, N));
    BirkhoffFactors f = birkhoff(m);
    CHECK(f.t == t_matrix_closed(gv, N));
    CHECK(mat_mul(f.t, f.u) == m);
    for (int i = 0; i < 4; ++i)
        for (int c = 0; c < 4; ++c)
            for (int n = 0; n <= N; ++n) {
                CHECK(f.u.at(i, c).coeff(n).is_laurent());
                if (n > 0) CHECK(f.t.at(i, c).coeff(n).proj_pol().is_zero());
            }
}

TEST_CASE("closed connection matrices") {
    const int N = 6;
    const GVTable& gv = GVTable::quintic();
    Matrix4Series d = d_matrix_closed(gv, N);
    /* upper triangular with the stated support */
    for (int i = 0; i < 4; ++i)
        for (int c = 0; c < 4; ++c) {
            bool nonzero = (i == 0 && c >= 1) || (i == 1 && c >= 2) || (i == 2 && c == 3);
            if (!nonzero) CHECK(d.at(i, c).is_zero());
        }
    CHECK(d.at(1, 2).coeff(1).scaled(Rational(5)) == QRatFun(Rational(2875)));
    /* entries of 5D are polynomials in q with integer coefficients */
    for (int i = 0; i < 2; ++i)
        for (int c = 2; c < 4; ++c)
            for (int n = 1; n <= N; ++n) {
                QRatFun v = d.at(i, c).coeff(n).scaled(Rational(5));
                REQUIRE(v.is_polynomial());
                QPoly p = v.to_poly();
                for (const Rational& coef : p.coeffs()) CHECK(coef.get_den() == 1);
            }
    /* A = I - D^T */
    Matrix4Series a = a_matrix_closed(gv, N);
    Matrix4Series sum = mat_mul(Matrix4Series::identity(N), Matrix4Series::identity(N));
    for (int i = 0; i < 4; ++i)
        for (int c = 0; c < 4; ++c) sum.at(i, c) = a.at(i, c) + mat_transpose(d).at(i, c);
    CHECK(sum == Matrix4Series::identity(N));
    /* GV-linearity of the bracket entries */
    Matrix4Series da = d_matrix_closed(two_values(7, 11), 2);
    Matrix4Series db = d_matrix_closed(two_values(5, 3), 2);
    Matrix4Series d0 = d_matrix_closed(two_values(0, 0), 2);
    Matrix4Series dsum = d_matrix_closed(two_values(12, 14), 2);
    for (int i = 0; i < 4; ++i)
        for (int c = 0; c < 4; ++c)
            CHECK(da.at(i, c) + db.at(i, c) - d0.at(i, c) == dsum.at(i, c));
}

TEST_CASE("q-deformed yukawa coupling") {
    const int N = 6;
    const GVTable& gv = GVTable::quintic();
    YukawaSeries y = yukawa(gv, N);
    CHECK(y.quantum.coeff(0) == QRatFun(Rational(5)));
    CHECK(y.quantum.coeff(1) == QRatFun(Rational(2875)));
    CHECK(y.quantum.coeff(2) == QRatFun(qp({2439875, 2437000})));
    CHECK(y.classical.coeff(2) == QRatFun(Rational(4876875)));
    GWTable gw = gw_from_gv(gv, N);
    for (int n = 1; n <= N; ++n) {
        /* classical coefficient is n^3 GW_n; quantum degenerates to it at q=1 */
        CHECK(y.classical.coeff(n) ==
              QRatFun(gw.at(n) * Rational(n) * Rational(n) * Rational(n)));
        CHECK(y.quantum.coeff(n).limit_q1(0) == y.classical.coeff(n).limit_q1(0));
    }
}

TEST_CASE("scalar chain with vanishing counts is the fourth difference power") {
    const int N = 4, J = 3;
    Matrix4Series d0 = d_matrix_closed(zero_counts(N), N);
    ScalarOperatorChain chain = scalar_operator(d0);
    std::mt19937 rng(808);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int t = 0; t < 5; ++t) {
        LogSeries y(N, J);
        for (int n = 0; n <= N; ++n)
            for (int j = 0; j <= J; ++j) y.set_coeff(n, j, QRatFun(Rational(coef(rng))));
        LogSeries expect = log_delta_op(log_delta_op(log_delta_op(log_delta_op(y))));
        CHECK(chain.apply(y) == expect);
    }
    LogSeries one = LogSeries::from_series(QSeries::constant(kOne, N), J);
    CHECK(chain.apply(one).is_zero());
}

TEST_CASE("log-extended solution space of the connection system") {
    const int N = 6, J = 3;
    Matrix4Series d = d_matrix_closed(GVTable::quintic(), N);
    std::vector<LogTuple4> sols = solution_space(d, J);
    REQUIRE(sols.size() == 4);
    LogSeries lambda = LogSeries::lambda(N, J);
    CHECK(sols[1][0] == -lambda);
    CHECK(sols[3][2] == -lambda);
    ScalarOperatorChain chain = scalar_operator(d);
    for (const LogTuple4& y : sols) {
        for (const LogSeries& r : system_residual(d, y)) CHECK(r.is_zero());
        CHECK(chain.apply(y[0]).is_zero());
    }
}
