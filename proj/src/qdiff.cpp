#include "quintic/qdiff.hpp"

#include <stdexcept>

namespace qk {

namespace {

const QRatFun kOneRF{Rational(1)};

QRatFun one_minus_q_rf() {
    QPoly p;
    p.set_coeff(0, Rational(1));
    p.set_coeff(1, Rational(-1));
    return QRatFun(p);
}

using RatMat = std::array<std::array<QRatFun, 4>, 4>;

RatMat rat_mat_mul(const RatMat& a, const RatMat& b) {
    RatMat r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            QRatFun acc;
            for (int k = 0; k < 4; ++k) {
                if (a[i][k].is_zero() || b[k][j].is_zero()) continue;
                acc += a[i][k] * b[k][j];
            }
            r[i][j] = acc;
        }
    return r;
}

/* Gaussian inversion over the rational-function field. */
RatMat rat_mat_inverse(const RatMat& m) {
    RatMat a = m;
    RatMat inv;
    for (int i = 0; i < 4; ++i) inv[i][i] = kOneRF;
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int row = col; row < 4; ++row)
            if (!a[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw std::domain_error("rat_mat_inverse: singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        QRatFun lead = a[col][col];
        for (int j = 0; j < 4; ++j) {
            a[col][j] = a[col][j] / lead;
            inv[col][j] = inv[col][j] / lead;
        }
        for (int row = 0; row < 4; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            QRatFun f = a[row][col];
            for (int j = 0; j < 4; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace

Matrix4Series::Matrix4Series(int order) : order_(order), e_(16, QSeries(order)) {}

Matrix4Series Matrix4Series::identity(int order) {
    Matrix4Series m(order);
    for (int i = 0; i < 4; ++i) m.at(i, i).set_coeff(0, kOneRF);
    return m;
}

Matrix4Series mat_mul(const Matrix4Series& a, const Matrix4Series& b) {
    if (a.order() != b.order()) throw std::invalid_argument("mat_mul: mixed truncation orders");
    Matrix4Series r(a.order());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            QSeries acc(a.order());
            for (int k = 0; k < 4; ++k) acc += a.at(i, k) * b.at(k, j);
            r.at(i, j) = std::move(acc);
        }
    return r;
}

Matrix4Series mat_transpose(const Matrix4Series& a) {
    Matrix4Series r(a.order());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.at(i, j) = a.at(j, i);
    return r;
}

Matrix4Series shifted_matrix(const KSeries& j) {
    const int N = j.order();
    Matrix4Series m(N);
    QRatFun inv = ratfun_reciprocal(one_minus_q_rf());
    KSeries col = j;
    for (int c = 0; c < 4; ++c) {
        KSeries scaled = col.scaled(inv);
        for (int i = 0; i < 4; ++i)
            for (int n = 0; n <= N; ++n) m.at(i, c).set_coeff(n, scaled.coeff(n).coords[i]);
        if (c < 3) col = col.e_shifted().k_scaled(one_minus_x_pow(1));
    }
    return m;
}

BirkhoffFactors birkhoff(const Matrix4Series& m) {
    const int N = m.order();
    RatMat u0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const QRatFun& v = m.at(i, j).coeff(0);
            if (!v.is_laurent())
                throw std::domain_error("birkhoff: leading matrix is not Laurent-polynomial");
            u0[i][j] = v;
        }
    RatMat u0inv = rat_mat_inverse(u0);

    BirkhoffFactors f{Matrix4Series::identity(N), Matrix4Series(N)};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) f.u.at(i, j).set_coeff(0, u0[i][j]);

    for (int n = 1; n <= N; ++n) {
        RatMat k;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) k[i][j] = m.at(i, j).coeff(n);
        for (int j = 1; j < n; ++j) {
            /* K_n -= T_j U_{n-j} */
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) {
                    QRatFun acc;
                    for (int s = 0; s < 4; ++s) {
                        const QRatFun& t = f.t.at(r, s).coeff(j);
                        const QRatFun& u = f.u.at(s, c).coeff(n - j);
                        if (t.is_zero() || u.is_zero()) continue;
                        acc += t * u;
                    }
                    k[r][c] -= acc;
                }
        }
        RatMat g = rat_mat_mul(k, u0inv);
        RatMat tn;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                tn[i][j] = g[i][j].proj_red();
                f.t.at(i, j).set_coeff(n, tn[i][j]);
            }
        RatMat un = rat_mat_mul(tn, u0);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                QRatFun u = k[i][j] - un[i][j];
                if (!u.is_laurent())
                    throw std::domain_error("birkhoff: factor entry is not Laurent-polynomial");
                f.u.at(i, j).set_coeff(n, u);
            }
    }
    return f;
}

Matrix4Series t_matrix_closed(const GVTable& gv, int order) {
    Matrix4Series t = Matrix4Series::identity(order);
    t.at(2, 0) = bracket(KernelKind::A, gv, order);
    t.at(3, 0) = bracket(KernelKind::B, gv, order);
    t.at(2, 1) = bracket(KernelKind::C, gv, order);
    t.at(3, 1) = bracket(KernelKind::E, gv, order);
    return t;
}

Matrix4Series d_matrix_closed(const GVTable& gv, int order) {
    Matrix4Series d(order);
    d.at(0, 1).set_coeff(0, kOneRF);
    d.at(2, 3).set_coeff(0, kOneRF);
    d.at(0, 2) = bracket(KernelKind::D13, gv, order);
    d.at(0, 3) = bracket(KernelKind::D14, gv, order);
    d.at(1, 2) = QSeries::constant(kOneRF, order) + bracket(KernelKind::D23, gv, order);
    d.at(1, 3) = bracket(KernelKind::D24, gv, order);
    return d;
}

Matrix4Series a_matrix_closed(const GVTable& gv, int order) {
    Matrix4Series a = Matrix4Series::identity(order);
    Matrix4Series dt = mat_transpose(d_matrix_closed(gv, order));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a.at(i, j) -= dt.at(i, j);
    return a;
}

YukawaSeries yukawa(const GVTable& gv, int order) {
    YukawaSeries y{QSeries(order), QSeries(order)};
    y.quantum =
        (QSeries::constant(kOneRF, order) + bracket(KernelKind::D23, gv, order)).scaled(Rational(5));
    for (int n = 0; n <= order; ++n)
        if (!y.quantum.coeff(n).is_polynomial())
            throw std::domain_error("yukawa: coefficient is not polynomial in q");
    y.classical.set_coeff(0, QRatFun(Rational(5)));
    for (int n = 1; n <= order; ++n)
        y.classical.set_coeff(n, QRatFun(gv_gamma(gv, 3, n)));
    return y;
}

ScalarOperatorChain::ScalarOperatorChain(const Matrix4Series& d)
    : inv_inner_(d.order()), inv_outer_(d.order()) {
    const QSeries& alpha = d.at(0, 2);
    const QSeries& beta = d.at(0, 3);
    const QSeries& gamma = d.at(1, 2);
    const QSeries& delta = d.at(1, 3);
    QSeries inner = gamma + delta_op(alpha);
    if (!(inner.coeff(0) == kOneRF))
        throw std::domain_error("scalar_operator: gamma + Delta alpha is not a unit series");
    inv_inner_ = series_invert(inner);
    QSeries h = (delta + e_shift(alpha) + delta_op(beta)) * inv_inner_;
    inv_outer_ = series_invert(QSeries::constant(kOneRF, d.order()) + delta_op(h));
}

LogSeries ScalarOperatorChain::apply(const LogSeries& y0) const {
    LogSeries z = log_delta_op(log_delta_op(y0));
    z = log_delta_op(z.times_series(inv_inner_));
    return log_delta_op(z.times_series(inv_outer_));
}

ScalarOperatorChain scalar_operator(const Matrix4Series& d) { return ScalarOperatorChain(d); }

std::vector<LogTuple4> solution_space(const Matrix4Series& d, int lambda_bound) {
    const int N = d.order();
    const int J = lambda_bound;
    const QSeries& alpha = d.at(0, 2);
    const QSeries& beta = d.at(0, 3);
    const QSeries& gamma = d.at(1, 2);
    const QSeries& delta = d.at(1, 3);
    auto lift = [&](const QSeries& s) { return LogSeries::from_series(s, J); };
    LogSeries zero(N, J);
    LogSeries one = lift(QSeries::constant(kOneRF, N));

    std::vector<LogTuple4> sols;
    /* y = (1, 0, 0, 0) */
    sols.push_back({one, zero, zero, zero});
    /* y1 = 1, y0 = solve(1) = -lambda */
    sols.push_back({solve_delta(one), one, zero, zero});
    /* y2 = 1, y1 = solve(gamma), y0 = solve(y1 + alpha) */
    {
        LogSeries y1 = solve_delta(lift(gamma));
        LogSeries y0 = solve_delta(y1 + lift(alpha));
        sols.push_back({y0, y1, one, zero});
    }
    /* y3 = 1, y2 = -lambda, y1 = solve(gamma y2 + delta),
       y0 = solve(y1 + alpha y2 + beta) */
    {
        LogSeries y2 = solve_delta(one);
        LogSeries y1 = solve_delta(y2.times_series(gamma) + lift(delta));
        LogSeries y0 = solve_delta(y1 + y2.times_series(alpha) + lift(beta));
        sols.push_back({y0, y1, y2, one});
    }
    return sols;
}

LogTuple4 system_residual(const Matrix4Series& d, const LogTuple4& y) {
    if (y.size() != 4) throw std::invalid_argument("system_residual: expected a 4-tuple");
    LogTuple4 r;
    for (int i = 0; i < 4; ++i) {
        LogSeries acc = log_delta_op(y[static_cast<size_t>(i)]);
        for (int j = 0; j < 4; ++j) {
            const QSeries& dij = d.at(i, j);
            if (dij.is_zero()) continue;
            acc -= y[static_cast<size_t>(j)].times_series(dij);
        }
        r.push_back(std::move(acc));
    }
    return r;
}

}  // namespace qk
