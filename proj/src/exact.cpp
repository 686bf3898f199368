#include "selmat/exact.hpp"

#include <cmath>
#include <limits>

namespace selmat {

Rational make_rational(long num, long den)
{
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    auto valid_int = [](const std::string& s) {
        if (s.empty()) return false;
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
    if (slash == std::string::npos) {
        if (!valid_int(text)) throw std::invalid_argument("not a rational: " + text);
        return Rational(Integer(strip_plus(text)));
    }
    std::string p = text.substr(0, slash), q = text.substr(slash + 1);
    if (!valid_int(p) || !valid_int(q)) throw std::invalid_argument("not a rational: " + text);
    Integer den(strip_plus(q));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    Rational r(Integer(strip_plus(p)), den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) { return r.get_d(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational pochhammer(const Rational& x, unsigned m)
{
    Rational out(1);
    for (unsigned i = 0; i < m; ++i) out *= x + i;
    return out;
}

Rational factorial(unsigned m)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), m);
    return Rational(f);
}

Rational binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return Rational(0);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational power(const Rational& x, int e)
{
    if (e < 0) {
        if (x == 0) throw std::domain_error("zero to a negative power");
        return power(Rational(1) / x, -e);
    }
    Rational out(1), base = x;
    for (unsigned u = static_cast<unsigned>(e); u; u >>= 1) {
        if (u & 1u) out *= base;
        if (u > 1) base *= base;
    }
    return out;
}

GammaProduct GammaProduct::gamma(const Rational& arg, int exponent)
{
    GammaProduct g;
    g.add_factor(arg, exponent);
    return g;
}

void GammaProduct::add_factor(const Rational& arg, int exponent)
{
    if (exponent == 0) return;
    auto it = factors_.find(arg);
    if (it == factors_.end()) {
        factors_.emplace(arg, exponent);
    } else {
        it->second += exponent;
        if (it->second == 0) factors_.erase(it);
    }
}

GammaProduct& GammaProduct::operator*=(const GammaProduct& other)
{
    prefactor_ *= other.prefactor_;
    for (const auto& [arg, e] : other.factors_) add_factor(arg, e);
    return *this;
}

GammaProduct& GammaProduct::operator/=(const GammaProduct& other)
{
    if (other.prefactor_ == 0) throw std::domain_error("division by a zero Gamma product");
    prefactor_ /= other.prefactor_;
    for (const auto& [arg, e] : other.factors_) add_factor(arg, -e);
    return *this;
}

GammaProduct& GammaProduct::operator*=(const Rational& r)
{
    prefactor_ *= r;
    return *this;
}

GammaProduct GammaProduct::inverse() const
{
    GammaProduct g;
    g /= *this;
    return g;
}

namespace {

bool nonpositive_integer(const Rational& x) { return is_integer(x) && x <= 0; }

void check_poles(const std::map<Rational, int>& factors)
{
    for (const auto& [arg, e] : factors)
        if (e > 0 && nonpositive_integer(arg))
            throw Pole("Gamma pole at argument " + to_string(arg));
}

bool has_zero_factor(const std::map<Rational, int>& factors)
{
    for (const auto& [arg, e] : factors)
        if (e < 0 && nonpositive_integer(arg)) return true;
    return false;
}

}  // namespace

GammaProduct GammaProduct::normalized() const
{
    check_poles(factors_);
    if (prefactor_ == 0 || has_zero_factor(factors_)) return GammaProduct(Rational(0));

    GammaProduct out(prefactor_);
    for (const auto& [arg, e] : factors_) {
        Rational x = arg;
        Rational shift(1);
        if (x > 1) {
            while (x > 1) {
                x -= 1;
                shift *= x;
            }
            out.prefactor_ *= power(shift, e);
        } else if (x <= 0) {
            while (x <= 0) {
                shift *= x;
                x += 1;
            }
            out.prefactor_ *= power(shift, -e);
        }
        if (x != 1) out.add_factor(x, e);
    }
    return out;
}

bool GammaProduct::operator==(const GammaProduct& other) const
{
    return prefactor_ == other.prefactor_ && factors_ == other.factors_;
}

GammaProduct operator*(GammaProduct a, const GammaProduct& b) { return a *= b; }
GammaProduct operator/(GammaProduct a, const GammaProduct& b) { return a /= b; }

Exact gamma_product_ratio(const GammaProduct& num, const GammaProduct& den)
{
    GammaProduct n = num.normalized();
    GammaProduct d = den.normalized();
    if (d.prefactor() == 0) throw std::domain_error("division by a zero Gamma product");
    GammaProduct q = (n / d).normalized();
    if (q.is_rational()) return q.prefactor();
    return q;
}

GammaProduct pochhammer_gamma(const Rational& x, const Rational& m)
{
    GammaProduct g = GammaProduct::gamma(x + m);
    g /= GammaProduct::gamma(x);
    return g;
}

namespace {

long double log_abs(const Integer& z)
{
    long e = 0;
    double d = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(std::fabs(static_cast<long double>(d))) + static_cast<long double>(e) * std::log(2.0L);
}

// integer part and fraction separately, so large arguments keep their fractional digits
long double long_double_of(const Rational& r)
{
    Integer whole;
    mpz_fdiv_q(whole.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    Rational frac = r - Rational(whole);
    return static_cast<long double>(whole.get_d()) + static_cast<long double>(frac.get_d());
}

Approx from_log(long double log_value, int sign)
{
    Approx a;
    a.sign = sign;
    a.log_value = static_cast<double>(log_value);
    a.value = sign * static_cast<double>(std::exp(log_value));
    return a;
}

Approx zero_approx()
{
    Approx a;
    a.sign = 0;
    a.value = 0.0;
    a.log_value = -std::numeric_limits<double>::infinity();
    return a;
}

}  // namespace

Approx to_float(const Rational& r)
{
    if (r == 0) return zero_approx();
    return from_log(log_abs(r.get_num()) - log_abs(r.get_den()), sgn(r));
}

Approx to_float(const GammaProduct& g)
{
    check_poles(g.factors());
    if (g.prefactor() == 0 || has_zero_factor(g.factors())) return zero_approx();

    long double log_value = log_abs(g.prefactor().get_num()) - log_abs(g.prefactor().get_den());
    int sign = sgn(g.prefactor());
    for (const auto& [arg, e] : g.factors()) {
        long double x = long_double_of(arg);
        if (!is_integer(arg) && arg < 0) {
            // Gamma is negative on (-1,0), (-3,-2), ...
            Integer fl;
            Rational neg = -arg;
            mpz_fdiv_q(fl.get_mpz_t(), neg.get_num_mpz_t(), neg.get_den_mpz_t());
            if (mpz_even_p(fl.get_mpz_t()) && (e % 2 != 0)) sign = -sign;
        }
        log_value += e * std::lgamma(x);
    }
    return from_log(log_value, sign);
}

Approx to_float(const Exact& e)
{
    return std::visit([](const auto& v) { return to_float(v); }, e);
}

}  // namespace selmat
