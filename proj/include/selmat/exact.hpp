#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <variant>

namespace selmat {

using Rational = mpq_class;
using Integer = mpz_class;

struct Pole : std::domain_error {
    using std::domain_error::domain_error;
};

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

bool is_integer(const Rational& r);

// x (x+1) ... (x+m-1); 1 when m == 0
Rational pochhammer(const Rational& x, unsigned m);
Rational factorial(unsigned m);
Rational binomial(long n, long k);
Rational power(const Rational& x, int e);

struct Approx {
    double value = 0.0;
    double log_value = 0.0;  // log|value|
    int sign = 1;            // 0 for exact zero
};

// prefactor * prod Gamma(arg)^exponent
class GammaProduct {
public:
    GammaProduct() : prefactor_(1) {}
    explicit GammaProduct(const Rational& prefactor) : prefactor_(prefactor) {}

    static GammaProduct gamma(const Rational& arg, int exponent = 1);

    const Rational& prefactor() const { return prefactor_; }
    const std::map<Rational, int>& factors() const { return factors_; }
    bool is_rational() const { return factors_.empty(); }

    GammaProduct& operator*=(const GammaProduct& other);
    GammaProduct& operator/=(const GammaProduct& other);
    GammaProduct& operator*=(const Rational& r);
    GammaProduct inverse() const;

    // Shifts every argument into (0, 1] with Gamma(x+1) = x Gamma(x).
    // Throws Pole for a non-positive integer argument with positive exponent.
    GammaProduct normalized() const;

    bool operator==(const GammaProduct& other) const;

private:
    void add_factor(const Rational& arg, int exponent);

    Rational prefactor_;
    std::map<Rational, int> factors_;
};

GammaProduct operator*(GammaProduct a, const GammaProduct& b);
GammaProduct operator/(GammaProduct a, const GammaProduct& b);

using Exact = std::variant<Rational, GammaProduct>;

// num / den after normalization; a Rational when every Gamma factor cancels.
Exact gamma_product_ratio(const GammaProduct& num, const GammaProduct& den);

// Gamma(x + m) / Gamma(x) for rational m, as a Gamma product
GammaProduct pochhammer_gamma(const Rational& x, const Rational& m);

Approx to_float(const Rational& r);
Approx to_float(const GammaProduct& g);
Approx to_float(const Exact& e);

}  // namespace selmat
