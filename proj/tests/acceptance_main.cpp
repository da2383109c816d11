/* Acceptance gate: one line per criterion, nonzero exit on any failure.
   Every expected value and runtime budget is pinned in this file; a budget
   of 0 means unbounded. */

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "quintic/flow.hpp"
#include "quintic/verify.hpp"

using namespace qk;

namespace {

int g_failures = 0;

template <class F>
void criterion(int number, const char* label, double budget_seconds, F body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& ex) {
        detail = std::string("exception: ") + ex.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (detail.empty() && budget_seconds > 0 && secs > budget_seconds)
        detail = "time budget exceeded";
    bool pass = detail.empty();
    if (!pass) ++g_failures;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " " << std::setw(2) << number << " " << label << " ["
         << std::fixed << std::setprecision(1) << secs << "s";
    if (budget_seconds > 0) line << " / " << std::setprecision(0) << budget_seconds << "s";
    line << "]";
    if (!pass) line << ": " << detail;
    std::cout << line.str() << "\n";
}

QPoly qp(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return QPoly(std::move(v));
}

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

std::string first_failure(const std::vector<CheckResult>& results) {
    for (const CheckResult& c : results)
        if (!c.pass) return c.name + ": " + c.detail;
    return {};
}

std::string check_j_pins(const KSeries& j) {
    KElem expect0;
    expect0.coords[0] = QRatFun(qp({1, -1}));
    if (!(j.coeff(0) == expect0)) return "Q^0 is not (1-q) Phi_0";
    for (int n = 1; n <= 3; ++n)
        for (int a = 0; a < 2; ++a)
            if (!j.coeff(n).coords[static_cast<size_t>(a)].is_zero())
                return "Q^" + std::to_string(n) + " x^" + std::to_string(a) + " is nonzero";
    struct Pin {
        int n, a;
        QRatFun value;
    };
    const Pin pins[] = {
        {1, 2, QRatFun(qp({575}), qp({1, -1}))},
        {1, 3, QRatFun(qp({1150, -2300}), den_prod(2, 0, 0, 0, 0))},
        {2, 2, QRatFun(qp({244850, 487400, 243125}), den_prod(1, 2, 0, 0, 0))},
        {2, 3, QRatFun(qp({369000, 487400, -738000, -1462200, -606950}),
                       den_prod(2, 3, 0, 0, 0))},
        {3, 2, QRatFun(qp({190325550, 380647650, 570971475, 380646500, 190323825}),
                       den_prod(1, 0, 2, 0, 0))},
        {3, 3, QRatFun(qp({253772000, 380647650, 380647650, -507544000, -1141942950,
                           -1522590600, -888172100, -380647650}),
                       den_prod(2, 0, 3, 0, 0))},
    };
    for (const Pin& p : pins)
        if (!(j.coeff(p.n).coords[static_cast<size_t>(p.a)] == p.value))
            return "Q^" + std::to_string(p.n) + " x^" + std::to_string(p.a) + ": got " +
                   j.coeff(p.n).coords[static_cast<size_t>(p.a)].str() + ", expected " +
                   p.value.str();
    return {};
}

/* the log-solution checks of one connection matrix built from `gv` */
std::string check_solutions(const GVTable& gv, int order, int lambda_bound) {
    Matrix4Series d = d_matrix_closed(gv, order);
    std::vector<LogTuple4> sols = solution_space(d, lambda_bound);
    if (sols.size() != 4) return "expected four solution tuples";
    ScalarOperatorChain chain = scalar_operator(d);
    for (size_t s = 0; s < sols.size(); ++s) {
        LogTuple4 res = system_residual(d, sols[s]);
        for (size_t i = 0; i < res.size(); ++i)
            if (!res[i].is_zero())
                return "tuple " + std::to_string(s) + " component " + std::to_string(i) +
                       " fails the system at order " + std::to_string(order);
        if (!chain.apply(sols[s][0]).is_zero())
            return "tuple " + std::to_string(s) +
                   " is not annihilated by the scalar chain at order " +
                   std::to_string(order);
    }
    return {};
}

}  // namespace

int main() {
    const GVTable& gv = GVTable::quintic();

    criterion(1, "degree-one deformation coefficients match the pinned polynomials", 10,
              [] {
                  EpsilonTable eps = solve_epsilon(1).first;
                  const QLaurent expect[4] = {
                      lp({1724, 572, -625, -1941, -3430, -4952, -6223, -6755, -6184, -4690,
                          -2747, -969}),
                      lp({-4600, -1140, 2485, 6520, 11140, 15890, 19860, 21490, 19630,
                          14860, 8690, 3060}),
                      lp({4025, 555, -3115, -7255, -12055, -17020, -21175, -22850, -20830,
                          -15740, -9190, -3230}),
                      lp({-1150, 10, 1250, 2670, 4340, 6080, 7540, 8120, 7390, 5575, 3250,
                          1140}),
                  };
                  for (int l = 0; l < 4; ++l)
                      if (!(eps.at(1, l) == expect[static_cast<size_t>(l)]))
                          return "eps(1," + std::to_string(l) + "): got " +
                                 eps.at(1, l).str();
                  return std::string();
              });

    criterion(2, "small J-function through degree three matches the pinned values", 120,
              [] { return check_j_pins(solve_epsilon(3).second); });

    criterion(3, "flow J-function equals the closed form through Q^6", 1800,
              [&gv] { return first_failure(verify_conjecture(gv, 6)); });

    criterion(4, "integer invariants at q = 0 match the pinned tables", 0, [&gv] {
        KSeries j = conjectural_small_j(gv, 6);
        const char* alpha0[] = {"2875",         "620750",          "317232250",
                                "242470013000", "229305888959500", "248249743392434250"};
        const char* alpha1[] = {"2875", "1224250", "951627750", "969872568500"};
        std::vector<Integer> inv0 = qk_invariants(j, 0);
        std::vector<Integer> inv1 = qk_invariants(j, 1);
        for (int n = 1; n <= 6; ++n)
            if (inv0[static_cast<size_t>(n - 1)] != Integer(alpha0[n - 1]))
                return "alpha 0, Q^" + std::to_string(n) + ": got " +
                       inv0[static_cast<size_t>(n - 1)].get_str(10);
        for (int n = 1; n <= 4; ++n)
            if (inv1[static_cast<size_t>(n - 1)] != Integer(alpha1[n - 1]))
                return "alpha 1, Q^" + std::to_string(n) + ": got " +
                       inv1[static_cast<size_t>(n - 1)].get_str(10);
        return std::string();
    });

    criterion(5, "yukawa q = 1 limits equal the cubed-degree divisor sums", 0, [&gv] {
        YukawaSeries y = yukawa(gv, 6);
        GWTable gw = gw_from_gv(gv, 6);
        for (int n = 1; n <= 6; ++n) {
            Rational divisor_sum = gv_gamma(gv, 3, n);
            Rational nnn = Rational(n) * Rational(n) * Rational(n);
            if (y.quantum.coeff(n).limit_q1(0) != divisor_sum)
                return "Q^" + std::to_string(n) + ": quantum limit " +
                       rat_to_string(y.quantum.coeff(n).limit_q1(0)) + " != divisor sum " +
                       rat_to_string(divisor_sum);
            if (divisor_sum != nnn * gw.at(n))
                return "Q^" + std::to_string(n) + ": divisor sum differs from n^3 GW_n";
            if (!(y.classical.coeff(n) == QRatFun(divisor_sum)))
                return "Q^" + std::to_string(n) + ": classical coefficient mismatch";
        }
        if (y.quantum.coeff(2).limit_q1(0) != Rational(Integer("4876875")))
            return std::string("Q^2 limit is not 4876875");
        return std::string();
    });

    criterion(6, "factorization of the shifted frame through Q^6", 0,
              [&gv] { return first_failure(verify_birkhoff(gv, 6)); });

    criterion(7, "log-extended solutions satisfy the connection system through Q^10", 0,
              [&gv] {
                  /* synthetic counts above the built-in range: the identities
                     are linear in the table, so any fixed values exercise
                     them */
                  GVTable extended = gv;
                  extended.set(7, Integer(101));
                  extended.set(8, Integer(103));
                  extended.set(9, Integer(107));
                  extended.set(10, Integer(109));
                  std::string bad = check_solutions(extended, 10, 3);
                  if (!bad.empty()) return bad;
                  return check_solutions(gv, 6, 3);
              });

    criterion(8, "binomial residuals vanish through Q^19 and the operator splits off 1 - E",
              60, [] { return first_failure(verify_frobenius(19)); });

    criterion(9, "kernel identities for d, r <= 10 and q = 1 limits", 0,
              [] { return first_failure(verify_kernels(10)); });

    criterion(10, "curve-count transforms and divisor-form potentials", 0, [&gv] {
        GWTable gw = gw_from_gv(gv, 6);
        const char* expect[] = {"2875",           "4876875/8",
                                "8564575000/27",  "15517926796875/64",
                                "229305888887648", "248249742157695375"};
        for (int n = 1; n <= 6; ++n)
            if (gw.at(n) != rat_from_string(expect[n - 1]))
                return "GW_" + std::to_string(n) + ": got " + rat_to_string(gw.at(n));
        GVTable back = gv_from_gw(gw, 6);
        for (int d = 1; d <= 6; ++d)
            if (back.at(d) != gv.at(d))
                return "roundtrip GV_" + std::to_string(d) + ": got " +
                       back.at(d).get_str(10);
        QSeries a = bracket(KernelKind::A, gv, 6);
        QSeries b = bracket(KernelKind::B, gv, 6);
        if (!(jm_p11(gv, 6) == a.scaled(Rational(5))))
            return std::string("p11 differs from 5[a]");
        if (!(jm_p2(gv, 6) == (b - a).scaled(Rational(5))))
            return std::string("p2 differs from 5([b]-[a])");
        return std::string();
    });

    criterion(11, "projective-space recursion through Q^10", 0, [] {
        for (int dim = 1; dim <= 4; ++dim)
            if (!cpn_is_zero(cpn_recursion_residual(cpn_small_j(dim, 10))))
                return "dimension " + std::to_string(dim) + " residual is nonzero";
        return std::string();
    });

    std::cout << "acceptance: 11 criteria, " << g_failures << " failures\n";
    return g_failures == 0 ? 0 : 1;
}
