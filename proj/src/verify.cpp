#include "quintic/verify.hpp"

#include <algorithm>
#include <utility>

#include "quintic/flow.hpp"

namespace qk {

namespace {

std::string q_label(int n) { return "Q^" + std::to_string(n); }

std::string entry_label(int i, int j, int n) {
    return "entry (" + std::to_string(i) + "," + std::to_string(j) + ") " + q_label(n);
}

std::string pair_label(int d, int r) {
    return "(d,r) = (" + std::to_string(d) + "," + std::to_string(r) + ")";
}

CheckResult compare_kseries(std::string name, const KSeries& got, const KSeries& want,
                            const char* got_tag, const char* want_tag) {
    CheckResult r;
    r.name = std::move(name);
    r.pass = true;
    int order = std::min(got.order(), want.order());
    for (int n = 0; n <= order; ++n)
        for (int a = 0; a < 4; ++a) {
            const QRatFun& g = got.coeff(n).coords[static_cast<size_t>(a)];
            const QRatFun& w = want.coeff(n).coords[static_cast<size_t>(a)];
            if (g == w) continue;
            r.pass = false;
            r.detail = q_label(n) + " x^" + std::to_string(a) + ": " + got_tag + " = " + g.str() +
                       ", " + want_tag + " = " + w.str();
            return r;
        }
    return r;
}

CheckResult compare_matrix(std::string name, const Matrix4Series& got, const Matrix4Series& want,
                           const char* got_tag, const char* want_tag) {
    CheckResult r;
    r.name = std::move(name);
    r.pass = true;
    int order = std::min(got.order(), want.order());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int n = 0; n <= order; ++n) {
                const QRatFun& g = got.at(i, j).coeff(n);
                const QRatFun& w = want.at(i, j).coeff(n);
                if (g == w) continue;
                r.pass = false;
                r.detail = entry_label(i, j, n) + ": " + got_tag + " = " + g.str() + ", " +
                           want_tag + " = " + w.str();
                return r;
            }
    return r;
}

CheckResult series_is_zero(std::string name, const QSeries& s) {
    CheckResult r;
    r.name = std::move(name);
    r.pass = true;
    for (int n = 0; n <= s.order(); ++n)
        if (!s.coeff(n).is_zero()) {
            r.pass = false;
            r.detail = q_label(n) + ": " + s.coeff(n).str();
            return r;
        }
    return r;
}

/* run f over all 1 <= d, r <= bound; f returns an empty string on success
   and the failing detail otherwise */
template <class F>
CheckResult scan_pairs(std::string name, int bound, F f) {
    CheckResult r;
    r.name = std::move(name);
    r.pass = true;
    for (int d = 1; d <= bound && r.pass; ++d)
        for (int rr = 1; rr <= bound && r.pass; ++rr)
            if (std::string bad = f(d, rr); !bad.empty()) {
                r.pass = false;
                r.detail = std::move(bad);
            }
    return r;
}

QPoly qlin(const Rational& c0, const Rational& c1) {
    QPoly p;
    p.set_coeff(0, c0);
    p.set_coeff(1, c1);
    return p;
}

QPoly one_minus_q_pow(int k) {
    QPoly f;
    f.set_coeff(0, Rational(1));
    f.set_coeff(1, Rational(-1));
    QPoly r = QPoly::one();
    for (int i = 0; i < k; ++i) r = r * f;
    return r;
}

std::string mismatch(const char* tag, int d, int r, const QRatFun& got, const QRatFun& want) {
    if (got == want) return {};
    return pair_label(d, r) + " " + tag + ": got " + got.str() + ", expected " + want.str();
}

std::string mismatch_value(const char* tag, int d, int r, const Rational& got,
                           const Rational& want) {
    if (got == want) return {};
    return pair_label(d, r) + " " + tag + ": got " + rat_to_string(got) + ", expected " +
           rat_to_string(want);
}

}  // namespace

std::vector<CheckResult> verify_conjecture(const GVTable& gv, int order) {
    KSeries flow_j = solve_epsilon(order).second;
    KSeries closed = conjectural_small_j(gv, order);
    std::vector<CheckResult> out;
    out.push_back(compare_kseries("flow J-function matches the closed form", flow_j, closed,
                                  "flow", "closed"));
    return out;
}

std::vector<CheckResult> verify_birkhoff(const GVTable& gv, int order) {
    std::vector<CheckResult> out;
    Matrix4Series m = shifted_matrix(conjectural_small_j(gv, order));
    try {
        BirkhoffFactors f = birkhoff(m);
        out.push_back(compare_matrix("factor T matches its closed form", f.t,
                                     t_matrix_closed(gv, order), "computed", "closed"));
        out.push_back(compare_matrix("product T U reproduces the shifted frame",
                                     mat_mul(f.t, f.u), m, "T U", "frame"));
        CheckResult laurent;
        laurent.name = "factor U is Laurent in every degree";
        laurent.pass = true;
        CheckResult reduced;
        reduced.name = "factor T - I has no Laurent part";
        reduced.pass = true;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int n = 0; n <= order; ++n) {
                    const QRatFun& u = f.u.at(i, j).coeff(n);
                    if (laurent.pass && !u.is_laurent()) {
                        laurent.pass = false;
                        laurent.detail = entry_label(i, j, n) + ": " + u.str();
                    }
                    if (n == 0) continue;
                    QLaurent pol = f.t.at(i, j).coeff(n).proj_pol();
                    if (reduced.pass && !pol.is_zero()) {
                        reduced.pass = false;
                        reduced.detail = entry_label(i, j, n) + ": Laurent part " + pol.str();
                    }
                }
        out.push_back(std::move(laurent));
        out.push_back(std::move(reduced));
    } catch (const std::exception& ex) {
        CheckResult failed;
        failed.name = "factorization of the shifted frame";
        failed.pass = false;
        failed.detail = ex.what();
        out.push_back(std::move(failed));
    }
    return out;
}

std::vector<CheckResult> verify_frobenius(int q_order) {
    std::vector<CheckResult> out;
    FrobeniusData data = frobenius_data(q_order + 1);
    for (int n = 0; n <= 3; ++n)
        out.push_back(series_is_zero(
            "binomial residual vanishes at weight " + std::to_string(n),
            frobenius_residual(n, data)));
    QDiffOp l5 = l5_operator(q_order + 1);
    auto [quot, rem] = op_divide_delta(l5);
    QDiffOp delta(q_order + 1);
    delta.add_term(0, QSeries::constant(QRatFun(Rational(1)), q_order + 1));
    delta.add_term(1, QSeries::constant(QRatFun(Rational(-1)), q_order + 1));
    CheckResult div;
    div.name = "operator is left-divisible by 1 - E";
    div.pass = rem.terms().empty() && op_compose(delta, quot) == l5;
    if (!div.pass)
        div.detail = rem.terms().empty()
                         ? std::string("recomposition does not reproduce the operator")
                         : "nonzero remainder at shift " + std::to_string(rem.max_shift());
    out.push_back(std::move(div));
    return out;
}

std::vector<CheckResult> verify_kernels(int bound) {
    std::vector<CheckResult> out;

    out.push_back(scan_pairs(
        "regular projections produce the c and e kernels", bound, [](int d, int r) {
            QRatFun a = kernel_eval(KernelKind::A, d, r);
            QRatFun b = kernel_eval(KernelKind::B, d, r);
            QRatFun qd(QPoly::monomial(d));
            std::string bad =
                mismatch("pi_+((1-E)a)", d, r, (a - qd * a).proj_red(),
                         kernel_eval(KernelKind::C, d, r));
            if (!bad.empty()) return bad;
            return mismatch("pi_+(Ea+(1-E)b)", d, r, (qd * a + b - qd * b).proj_red(),
                            kernel_eval(KernelKind::E, d, r));
        }));

    out.push_back(scan_pairs("connection kernels match their closed forms", bound,
                             [](int d, int r) {
        Rational dd(d), rr(r);
        auto five = [&](KernelKind k) { return kernel_eval(k, d, r).scaled(Rational(5)); };
        QPoly n13 = (qlin(rr - dd, 1 + dd - rr) + qlin(-rr, rr - 1).shifted_up(d)).scaled(dd);
        std::string bad = mismatch("5 D13", d, r, five(KernelKind::D13),
                                   QRatFun(n13, one_minus_q_pow(2)));
        if (!bad.empty()) return bad;
        QPoly p14;
        p14.set_coeff(0, rr * rr - dd * dd);
        p14.set_coeff(1, -(1 - 2 * dd - 2 * dd * dd + 2 * rr * rr));
        p14.set_coeff(2, -(1 + 2 * dd + dd * dd - rr * rr));
        QPoly s14;
        s14.set_coeff(0, -(rr * rr));
        s14.set_coeff(1, 1 + 2 * rr * rr);
        s14.set_coeff(2, 1 - rr * rr);
        bad = mismatch("5 D14", d, r, five(KernelKind::D14),
                       QRatFun(p14 + s14.shifted_up(d), one_minus_q_pow(3)));
        if (!bad.empty()) return bad;
        QPoly n23 = (QPoly::one() - QPoly::monomial(d)).scaled(dd * dd);
        bad = mismatch("5 D23", d, r, five(KernelKind::D23), QRatFun(n23, one_minus_q_pow(1)));
        if (!bad.empty()) return bad;
        QPoly n24 =
            (qlin(-dd - rr, 1 + dd + rr) + qlin(rr, -rr - 1).shifted_up(d)).scaled(-dd);
        return mismatch("5 D24", d, r, five(KernelKind::D24),
                        QRatFun(n24, one_minus_q_pow(2)));
    }));

    out.push_back(scan_pairs("kernel values at q = 1", bound, [](int d, int r) {
        Rational dd(d), rr(r);
        auto at_one = [&](KernelKind k) {
            return kernel_eval(k, d, r).scaled(Rational(5)).eval(Rational(1));
        };
        std::string bad = mismatch_value("5 D13", d, r, at_one(KernelKind::D13),
                                         -dd * dd * (1 + dd - 2 * rr) / 2);
        if (!bad.empty()) return bad;
        bad = mismatch_value("5 D14", d, r, at_one(KernelKind::D14),
                             -dd * (1 + 3 * dd + 2 * dd * dd - 6 * rr * rr) / 6);
        if (!bad.empty()) return bad;
        bad = mismatch_value("5 D23", d, r, at_one(KernelKind::D23), dd * dd * dd);
        if (!bad.empty()) return bad;
        return mismatch_value("5 D24", d, r, at_one(KernelKind::D24),
                              dd * dd * (1 + dd + 2 * rr) / 2);
    }));

    return out;
}

std::vector<CheckResult> verify_all(const GVTable& gv, int order) {
    std::vector<CheckResult> out;
    auto append = [&out](std::vector<CheckResult> v) {
        for (CheckResult& c : v) out.push_back(std::move(c));
    };
    int positive = std::max(order, 1);
    append(verify_conjecture(gv, order));
    append(verify_birkhoff(gv, order));
    append(verify_frobenius(positive));
    append(verify_kernels(positive));
    return out;
}

}  // namespace qk
