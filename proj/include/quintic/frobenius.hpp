#pragma once

#include <array>
#include <vector>

#include "quintic/qdiffop.hpp"

namespace qk {

/* x-Taylor data of the deformed hypergeometric series
     J(Q,q,x) = sum_n a_n(q,x) Q^n,  a_n = (e^{5x}q; q)_{5n} / (e^x q; q)_n^5,
   computed in the x-truncated ring Q(q)[x]/(x^4) with e^{ax} expanded as its
   degree-3 Taylor polynomial.  j[k] stores the k-th x-derivative at x = 0,
   i.e. k! times the x^k coefficient; the derivative normalization is what
   makes the binomial identities below come out with plain binomials. */
struct FrobeniusData {
    int order;
    std::array<QSeries, 4> j;

    explicit FrobeniusData(int order_)
        : order(order_),
          j{QSeries(order_), QSeries(order_), QSeries(order_), QSeries(order_)} {}
};

/* n-th q-harmonic number H_n = sum_{j=1}^n q^j/(1-q^j) */
QRatFun q_harmonic(int n);

FrobeniusData frobenius_data(int order);

/* the 25th-order operator (1-E)^5 - Q prod_{j=1}^5 (1 - q^j E^5), fully
   expanded: Laurent-polynomial coefficients of Q-degree <= 1 on the shifts
   {0..5} union {10,15,20,25} */
QDiffOp l5_operator(int order);

/* sum_{k=0}^n binom(n,k) L5^{(k)} J_{n-k} for n = 0..3, truncated to
   order - 1, through which the identity is exact (the operator's Q-linear
   part consumes one order of the data) */
QSeries frobenius_residual(int n, const FrobeniusData& data);

/* the four distinguished log solutions f_n = sum_k binom(n,k) lambda^{n-k} J_k;
   each is annihilated by L5 through Q^{order-1} */
std::vector<LogSeries> frobenius_solutions(const FrobeniusData& data, int lambda_bound);

}  // namespace qk
