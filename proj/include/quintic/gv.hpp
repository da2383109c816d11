#pragma once

#include <map>
#include <vector>

#include "quintic/kring.hpp"
#include "quintic/qseries.hpp"

namespace qk {

/* Integer curve counts indexed by degree.  The built-in quintic table
   carries degrees 1..6; higher entries can be appended when a computation
   needs them. */
class GVTable {
public:
    GVTable() = default;
    explicit GVTable(std::map<int, Integer> values) : v_(std::move(values)) {}
    static const GVTable& quintic();

    bool has(int d) const { return v_.count(d) != 0; }
    const Integer& at(int d) const;
    int max_degree() const { return v_.empty() ? 0 : v_.rbegin()->first; }
    void set(int d, Integer v) { v_[d] = std::move(v); }

private:
    std::map<int, Integer> v_;
};

using GWTable = std::map<int, Rational>;

/* GW_n = sum_{d|n} GV_{n/d} / d^3 */
GWTable gw_from_gv(const GVTable& gv, int max_degree);
/* GV_n = sum_{d|n} mu(d)/d^3 GW_{n/d} */
GVTable gv_from_gw(const GWTable& gw, int max_degree);
/* sum_{d|n} d^gamma GV_d (gamma may be negative) */
Rational gv_gamma(const GVTable& gv, int gamma, int n);

/* The scalar kernels f(d,r,q) whose weighted multi-cover sums assemble the
   small J-function and its connection matrices:
     5a = dr/(1-q) + dq/(1-q)^2
     5b = (rd+r^2-d)/(1-q) + d/(1-q)^2 - (q+q^2)/(1-q)^3
     5c = d^2/(1-q)                      (Laurent part of (1-E)a)
     5e = dr/(1-q) - d(dq+q-d)/(1-q)^2   (Laurent part of Ea+(1-E)b)
   with (Ef)(d,r,q) = q^d f(d,r,q), and the differences entering the
   connection matrix D:
     D13 = a-c-Ea, D14 = b-e+Ea-Eb, D23 = c-Ec, D24 = e+Ec-Ee. */
enum class KernelKind { A, B, C, E, D13, D14, D23, D24 };

QRatFun kernel_eval(KernelKind k, int d, int r);

/* [f] = sum_{d,r >= 1, dr <= N} f(d,r,q^r) GV_d Q^{dr} */
QSeries bracket(KernelKind k, const GVTable& gv, int order);

/* (1-q)(Phi_0 + [a] x^2 + [b] x^3) */
KSeries conjectural_small_j(const GVTable& gv, int order);

/* Coefficient list (n = 1..order) of sum_n <Phi_alpha/(1-qL)>_{0,1,n} Q^n,
   read off a small J-function as the q = 0 value of
   -5 [J]_{x^2} + 5 [J]_{x^3}  (alpha = 0),
    5 [J]_{x^2}                (alpha = 1),
   and 0 for alpha = 2, 3.  Throws if a value fails to be an integer. */
std::vector<Integer> qk_invariants(const KSeries& j, int alpha);

/* Divisor-indexed forms of the two permutation-equivariant potentials
   restricted to t = 0 (and divided by 1-q):
     p11: Q^n coefficient sum_{r|n} GV_{n/r} [n(1-q^r) + (n/r) q^r]/(1-q^r)^2
     p2:  Q^n coefficient sum_{r|n} GV_{n/r}
                            [r^2(1-q^r)^2 - q^r(1+q^r)]/(1-q^r)^3
   They must agree with 5[a] and 5([b]-[a]). */
QSeries jm_p11(const GVTable& gv, int order);
QSeries jm_p2(const GVTable& gv, int order);

}  // namespace qk
