#pragma once

#include <vector>

#include "quintic/gv.hpp"
#include "quintic/logseries.hpp"

namespace qk {

/* 4x4 matrix of Q-series sharing one truncation order, row-major. */
class Matrix4Series {
public:
    explicit Matrix4Series(int order);
    static Matrix4Series identity(int order);

    int order() const { return order_; }
    QSeries& at(int i, int j) { return e_[static_cast<size_t>(4 * i + j)]; }
    const QSeries& at(int i, int j) const { return e_[static_cast<size_t>(4 * i + j)]; }
    bool operator==(const Matrix4Series&) const = default;

private:
    int order_ = 0;
    std::vector<QSeries> e_;
};

Matrix4Series mat_mul(const Matrix4Series& a, const Matrix4Series& b);
Matrix4Series mat_transpose(const Matrix4Series& a);

/* Column j holds the coordinates of ((1-x)E)^j J / (1-q) in the basis
   {1, x, x^2, x^3}. */
Matrix4Series shifted_matrix(const KSeries& j);

/* M = T U with T = I + O(Q), every q-coefficient of T - I reduced (vanishing
   Laurent projection), and every entry of U a Laurent polynomial per
   Q-degree.  Degree-by-degree: K_n = M_n - sum_{0<j<n} T_j U_{n-j},
   T_n = entrywise proj_red(K_n U_0^{-1}), U_n = K_n - T_n U_0.  Throws if a
   U entry fails the Laurent membership check. */
struct BirkhoffFactors {
    Matrix4Series t, u;
};
BirkhoffFactors birkhoff(const Matrix4Series& m);

/* Closed forms of the fundamental and connection matrices:
   T = I with [a],[b] in column 0 rows 2,3 and [c],[e] in column 1 rows 2,3;
   D has nonzero entries D12 = 1, D13 = [a-c-Ea], D14 = [b-e+Ea-Eb],
   D23 = 1+[c-Ec], D24 = [e+Ec-Ee], D34 = 1; and A = I - D^T. */
Matrix4Series t_matrix_closed(const GVTable& gv, int order);
Matrix4Series d_matrix_closed(const GVTable& gv, int order);
Matrix4Series a_matrix_closed(const GVTable& gv, int order);

/* c_ttt(Q,q) = 5(1 + [c-Ec]) and its q-free limit with Q^n coefficient
   sum_{d|n} d^3 GV_d (constant term 5 in both).  Every quantum coefficient
   is asserted to be a polynomial in q. */
struct YukawaSeries {
    QSeries quantum, classical;
};
YukawaSeries yukawa(const GVTable& gv, int order);

/* The scalar elimination of the rank-4 first-order system
   Delta y = D y (Delta = 1-E) down to one equation L y0 = 0 with
   L = Delta (1 + Delta h)^{-1} Delta (gamma + Delta alpha)^{-1} Delta^2,
   h = (delta + E alpha + Delta beta)(gamma + Delta alpha)^{-1},
   where alpha = D13, beta = D14, gamma = D23, delta = D24 and Delta/E act
   on the entry series coefficient-wise. */
class ScalarOperatorChain {
public:
    explicit ScalarOperatorChain(const Matrix4Series& d);
    LogSeries apply(const LogSeries& y0) const;

private:
    QSeries inv_inner_;  // (gamma + Delta alpha)^{-1}
    QSeries inv_outer_;  // (1 + Delta h)^{-1}
};
ScalarOperatorChain scalar_operator(const Matrix4Series& d);

/* A basis of four solutions of Delta y = D y over the log extension, each a
   4-tuple (y0, y1, y2, y3), built by downward substitution with
   solve_delta. */
using LogTuple4 = std::vector<LogSeries>;
std::vector<LogTuple4> solution_space(const Matrix4Series& d, int lambda_bound);
/* residual components Delta y_i - (D y)_i */
LogTuple4 system_residual(const Matrix4Series& d, const LogTuple4& y);

}  // namespace qk
