#include "quintic/qpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qk {

namespace {

const Rational kZero(0);

/* Modular pre-filter for exact-division attempts.  Trial division dominates
   the denominator bookkeeping, and most attempts fail; testing divisibility
   mod a word-sized prime first turns a failing mpq long division into a
   word-arithmetic one.  A zero remainder mod p is only a hint; a nonzero one
   is proof, because an exact factorization over Q maps to one over GF(p)
   whenever every coefficient denominator and the divisor's leading
   coefficient stay invertible. */
constexpr unsigned long long kFilterP = 2305843009213693951ull;  // 2^61 - 1

unsigned long long mulmod_p(unsigned long long a, unsigned long long b) {
    return static_cast<unsigned long long>(static_cast<__uint128_t>(a) * b % kFilterP);
}

unsigned long long powmod_p(unsigned long long a, unsigned long long e) {
    unsigned long long acc = 1;
    while (e) {
        if (e & 1) acc = mulmod_p(acc, a);
        a = mulmod_p(a, a);
        e >>= 1;
    }
    return acc;
}

bool coeff_mod_p(const Rational& c, unsigned long long& out) {
    unsigned long long den = mpz_fdiv_ui(c.get_den().get_mpz_t(), kFilterP);
    if (den == 0) return false;
    unsigned long long num = mpz_fdiv_ui(c.get_num().get_mpz_t(), kFilterP);
    out = den == 1 ? num : mulmod_p(num, powmod_p(den, kFilterP - 2));
    return true;
}

/* true when the remainder of a by b is provably nonzero; false means
   divisibility is still possible and exact division must decide */
bool division_ruled_out(const std::vector<Rational>& a_coeffs,
                        const std::vector<Rational>& b_coeffs) {
    const size_t na = a_coeffs.size(), nb = b_coeffs.size();
    std::vector<unsigned long long> a(na), b(nb);
    for (size_t i = 0; i < nb; ++i)
        if (!coeff_mod_p(b_coeffs[i], b[i])) return false;
    if (b[nb - 1] == 0) return false;
    for (size_t i = 0; i < na; ++i)
        if (!coeff_mod_p(a_coeffs[i], a[i])) return false;
    unsigned long long lead_inv = powmod_p(b[nb - 1], kFilterP - 2);
    for (size_t i = na; i-- >= nb;) {
        unsigned long long f = mulmod_p(a[i], lead_inv);
        if (f == 0) continue;
        unsigned long long neg = kFilterP - f;
        for (size_t j = 0; j < nb; ++j) {
            unsigned long long t = a[i - nb + 1 + j] + mulmod_p(neg, b[j]);
            a[i - nb + 1 + j] = t >= kFilterP ? t - kFilterP : t;
        }
    }
    for (size_t i = 0; i + 1 < nb; ++i)
        if (a[i] != 0) return true;
    return false;
}

}  // namespace

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::monomial(int deg, const Rational& c) {
    if (deg < 0) throw std::invalid_argument("monomial: negative degree");
    QPoly p;
    if (c != 0) {
        p.c_.assign(static_cast<size_t>(deg) + 1, Rational(0));
        p.c_.back() = c;
    }
    return p;
}

const Rational& QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

void QPoly::set_coeff(int i, const Rational& v) {
    if (i < 0) throw std::invalid_argument("set_coeff: negative degree");
    if (i >= static_cast<int>(c_.size())) {
        if (v == 0) return;
        c_.resize(static_cast<size_t>(i) + 1, Rational(0));
    }
    c_[static_cast<size_t>(i)] = v;
    trim();
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly QPoly::operator-() const {
    QPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    QPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

QPoly QPoly::scaled(const Rational& s) const {
    if (s == 0) return QPoly();
    QPoly r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

QPoly QPoly::shifted_up(int k) const {
    if (k < 0) throw std::invalid_argument("shifted_up: negative shift");
    if (is_zero() || k == 0) return *this;
    QPoly r;
    r.c_.assign(c_.size() + static_cast<size_t>(k), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
    return r;
}

QPoly QPoly::quotient_by_qpow(int k) const {
    if (k < 0) throw std::invalid_argument("quotient_by_qpow: negative power");
    if (is_zero() || k == 0) return *this;
    if (low_degree() < k)
        throw std::domain_error("quotient_by_qpow: division not exact");
    QPoly r;
    r.c_.assign(c_.begin() + k, c_.end());
    return r;
}

int QPoly::low_degree() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

std::pair<QPoly, QPoly> QPoly::divrem(const QPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("divrem: division by zero");
    const int dd = divisor.degree();
    if (degree() < dd) return {QPoly(), *this};
    std::vector<Rational> rem = c_;
    std::vector<Rational> quo(static_cast<size_t>(degree() - dd) + 1, Rational(0));
    const Rational lead_inv = Rational(1) / divisor.leading();
    for (int i = degree(); i >= dd; --i) {
        Rational f = rem[static_cast<size_t>(i)] * lead_inv;
        if (f == 0) continue;
        quo[static_cast<size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(i - dd + j)] -= f * divisor.c_[static_cast<size_t>(j)];
    }
    rem.resize(static_cast<size_t>(dd) >= 1 ? static_cast<size_t>(dd) : 0);
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

bool QPoly::try_divide_exact(const QPoly& divisor, QPoly& quo) const {
    if (divisor.is_zero()) return false;
    if (is_zero()) {
        quo = QPoly();
        return true;
    }
    if (degree() < divisor.degree()) return false;
    if (division_ruled_out(c_, divisor.c_)) return false;
    auto [q, r] = divrem(divisor);
    if (!r.is_zero()) return false;
    quo = std::move(q);
    return true;
}

QPoly QPoly::gcd_monic(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic_scaled();
}

QPoly QPoly::subst_power(int r) const {
    if (r < 1) throw std::invalid_argument("subst_power: power must be >= 1");
    if (is_zero() || r == 1) return *this;
    QPoly out;
    out.c_.assign((c_.size() - 1) * static_cast<size_t>(r) + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i * static_cast<size_t>(r)] = c_[i];
    return out;
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return QPoly();
    QPoly r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rational(static_cast<long>(i));
    r.trim();
    return r;
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

Rational QPoly::eval_one() const {
    Rational acc(0);
    for (const auto& c : c_) acc += c;
    return acc;
}

const Rational& QPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading: zero polynomial");
    return c_.back();
}

QPoly QPoly::monic_scaled(Rational* lead) const {
    if (is_zero()) throw std::domain_error("monic_scaled: zero polynomial");
    if (lead) *lead = leading();
    return scaled(Rational(1) / leading());
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        Rational a = c > 0 ? c : Rational(-c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const bool unit = a == 1;
        if (i == 0) {
            os << rat_to_string(a);
        } else {
            if (!unit) os << rat_to_string(a) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::vector<int> divisors(int n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<int> small, large;
    for (int d = 1; static_cast<long>(d) * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    for (size_t i = large.size(); i-- > 0;) small.push_back(large[i]);
    return small;
}

int mobius(int n) {
    if (n < 1) throw std::invalid_argument("mobius: n must be positive");
    int sign = 1;
    for (int p = 2; static_cast<long>(p) * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

namespace {

/* Phi_k = (q^k - 1) / prod_{d | k, d < k} Phi_d; the divisors are visited in
   increasing order so the recursion bottoms out at Phi_1 = q - 1. */
const QPoly& cyclotomic_locked(int k, std::map<int, QPoly>& cache) {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    std::vector<Rational> xk(static_cast<size_t>(k) + 1, Rational(0));
    xk[0] = -1;
    xk.back() = 1;
    QPoly acc{std::move(xk)};
    for (int d : divisors(k)) {
        if (d == k) continue;
        QPoly quo;
        if (!acc.try_divide_exact(cyclotomic_locked(d, cache), quo))
            throw std::logic_error("cyclotomic: inexact division");
        acc = std::move(quo);
    }
    return cache.emplace(k, std::move(acc)).first->second;
}

}  // namespace

const QPoly& cyclotomic(int k) {
    if (k < 1) throw std::invalid_argument("cyclotomic: index must be positive");
    static std::map<int, QPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return cyclotomic_locked(k, cache);
}

}  // namespace qk
