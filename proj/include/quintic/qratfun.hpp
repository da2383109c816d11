#pragma once

#include <map>
#include <string>

#include "quintic/qpoly.hpp"

namespace qk {

/* Laurent polynomial in q: value = q^low * poly with poly(0) != 0 unless the
   value is zero (then low == 0 and poly empty). */
struct QLaurent {
    int low = 0;
    QPoly poly;

    QLaurent() = default;
    explicit QLaurent(const Rational& c) : poly(c) {}
    explicit QLaurent(QPoly p, int low_power = 0);

    bool is_zero() const { return poly.is_zero(); }
    bool is_polynomial() const { return is_zero() || low >= 0; }
    int high_degree() const { return low + poly.degree(); }
    /* coefficient of q^i */
    const Rational& coeff(int i) const { return poly.coeff(i - low); }

    QPoly to_poly() const;  // requires is_polynomial()
    QLaurent subst_power(int r) const;

    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    QLaurent operator-() const;
    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
    QLaurent scaled(const Rational& s) const;
    bool operator==(const QLaurent&) const = default;

    std::string str(const std::string& var = "q") const;
};

/* Denominator kept in factored form: q^q_exp * prod_k Phi_k^cyc[k] * rest,
   where rest is monic with rest(0) != 0 and no cyclotomic factor below the
   extraction bound.  Every denominator produced by the pipeline itself is a
   product of q-powers and cyclotomics, so rest stays 1 outside of
   user-supplied input. */
struct DenFactors {
    int q_exp = 0;
    std::map<int, int> cyc;
    QPoly rest = QPoly::one();

    bool is_one() const { return q_exp == 0 && cyc.empty() && rest == QPoly::one(); }
    QPoly expanded() const;
    Rational eval(const Rational& x) const;  // throws if a factor vanishes
    bool operator==(const DenFactors&) const = default;
};

/* Rational function in q, canonical: numerator coprime to the denominator,
   denominator monic (implicit in the factored form).  Zero is 0/1. */
class QRatFun {
public:
    QRatFun() = default;
    explicit QRatFun(const Rational& c) : num_(c) {}
    explicit QRatFun(QPoly p) : num_(std::move(p)) {}
    explicit QRatFun(const QLaurent& l);
    QRatFun(const QPoly& num, const QPoly& den);  // den != 0; factors and reduces
    static QRatFun from_factored(QPoly num, DenFactors den);
    /* q^e for e of either sign */
    static QRatFun q_power(int e);

    bool is_zero() const { return num_.is_zero(); }
    const QPoly& num() const { return num_; }
    const DenFactors& den() const { return den_; }
    QPoly den_expanded() const { return den_.expanded(); }

    bool is_polynomial() const { return den_.is_one() || is_zero(); }
    bool is_laurent() const {
        return is_zero() || (den_.cyc.empty() && den_.rest == QPoly::one());
    }
    QPoly to_poly() const;        // requires is_polynomial()
    QLaurent to_laurent() const;  // requires is_laurent()

    QRatFun& operator+=(const QRatFun& o);
    QRatFun& operator-=(const QRatFun& o);
    QRatFun& operator*=(const QRatFun& o);
    QRatFun& operator/=(const QRatFun& o);
    friend QRatFun operator+(QRatFun a, const QRatFun& b) { return a += b; }
    friend QRatFun operator-(QRatFun a, const QRatFun& b) { return a -= b; }
    friend QRatFun operator*(QRatFun a, const QRatFun& b) { return a *= b; }
    friend QRatFun operator/(QRatFun a, const QRatFun& b) { return a /= b; }
    QRatFun operator-() const;
    bool operator==(const QRatFun& o) const;

    QRatFun scaled(const Rational& s) const;
    QRatFun q_shifted(int e) const;  // multiply by q^e
    QRatFun pow(int e) const;        // integer exponent; e < 0 inverts

    /* Splits f = pol + red with pol a Laurent polynomial and red a strictly
       proper fraction regular at q = 0.  pol is the projection used for the
       flow normalization; red is the projection onto fractions vanishing
       appropriately at q = 0 and q = infinity. */
    QLaurent proj_pol() const;
    QRatFun proj_red() const;

    QRatFun subst_power(int r) const;  // q -> q^r, r >= 1

    /* Multiplies by (1-q)^k and evaluates at q = 1; throws if a pole
       remains. */
    Rational limit_q1(int k) const;
    Rational eval(const Rational& x) const;  // throws on pole

    std::string str(const std::string& var = "q") const;

private:
    QPoly num_;
    DenFactors den_;
    void reduce();
    friend QRatFun ratfun_reciprocal(const QRatFun&);
};

/* Factor a nonzero polynomial as lead * q^e * prod Phi_k^m * rest with rest
   monic; cyclotomic extraction is tried for all k up to
   max(64, 2 deg) (complete for every denominator the pipeline produces). */
std::pair<Rational, DenFactors> factor_poly(const QPoly& p);

QRatFun ratfun_reciprocal(const QRatFun& f);

}  // namespace qk
