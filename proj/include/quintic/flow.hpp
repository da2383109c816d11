#pragma once

#include <map>
#include <utility>
#include <vector>

#include "quintic/kring.hpp"

namespace qk {

/* Solved coefficients of the deformation: (k, l) -> epsilon_{k,l}(q), a
   polynomial in q (stored as Laurent; polynomiality is asserted at solve
   time). */
struct EpsilonTable {
    std::map<std::pair<int, int>, QLaurent> entries;

    bool has(int k, int l) const { return entries.count({k, l}) != 0; }
    const QLaurent& at(int k, int l) const { return entries.at({k, l}); }
    /* highest Novikov degree k present among the entries */
    int max_order() const;
};

/* One summand of the flow exponent: acts on a series by
   f -> scale * (1-x)^x_power Q^q_degree f(q^shift_power Q). */
struct FlowMonomial {
    QRatFun scale;
    int shift_power = 0;  // b in f(q^b Q)
    int q_degree = 1;     // a >= 1, the Q-degree raise
    int x_power = 0;      // power of (1-x) multiplied in
};

/* J(Q,q,t*): (1-q) sum_d [(w^5 q;q)_{5d} / (w q;q)_d^5] Q^d with w = 1-x,
   all K-ring arithmetic mod x^4. */
KSeries i_function(int order);

/* Adams operation psi^r: (1-x)^i f(q) Q^j -> (1-x)^{ri} f(q^r) Q^{rj},
   re-truncated to the input order. */
KSeries adams(int r, const KSeries& s);

/* exp(A) s for the operator A assembled from the table:
   A = sum_{r>=1} sum_{l} sum_{k>=1, rk<=N}
         [eps_{k,l}(q^r) / (r(1-q^r))] (1-x)^{lr} Q^{rk} E^{lr}-twist. */
KSeries flow_apply(const EpsilonTable& eps, const KSeries& s, int order);
std::vector<FlowMonomial> flow_monomials(const EpsilonTable& eps, int order);

/* Degree-by-degree fixed-point solve: determines eps_{n,l} so that every
   Q^n (n >= 1) coefficient of exp(A) J(Q,q,t*) has vanishing Laurent
   projection, and returns the table with the resulting series J(Q,q,0). */
std::pair<EpsilonTable, KSeries> solve_epsilon(int order);

/* Elimination applied in the opposite order; must agree with solve_epsilon
   (uniqueness of the linear system's solution). */
std::array<QLaurent, 4> eliminate_epsilon_reversed(const std::array<QLaurent, 4>& proj);
std::array<QLaurent, 4> eliminate_epsilon(const std::array<QLaurent, 4>& proj);

/* Residual of the cone identity for the quintic I-function:
   (1-(1-x)E)^5 (I - (1-q)Phi_0) - Q prod_{j=1}^5 (1-q^j(1-x)^5 E^5) I. */
KSeries quintic_cone_residual(const KSeries& i_series);

/* Small J-function of complex projective space of dimension `dim`, living in
   Q[x]/(x^{dim+1}): coefficient vectors in ascending powers of x. */
struct CpnSeries {
    int dim = 0;
    int order = 0;
    std::vector<std::vector<QRatFun>> coords;  // [n][x-power]
};

CpnSeries cpn_small_j(int dim, int order);
/* (1-(1-x)E)^{dim+1} J - Q J, which must vanish identically. */
CpnSeries cpn_recursion_residual(const CpnSeries& j);
bool cpn_is_zero(const CpnSeries& s);

}  // namespace qk
