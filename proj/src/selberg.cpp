#include "selmat/selberg.hpp"

namespace selmat {

void validate(const SelbergParams& p)
{
    if (p.n < 1) throw ParamOutOfRange("n must be positive");
    if (p.u <= 0) throw ParamOutOfRange("u must be positive");
    if (p.w <= 0) throw ParamOutOfRange("w must be positive");
    Rational bound = Rational(1) / p.n;
    if (p.n > 1) {
        Rational un = p.u / (p.n - 1), wn = p.w / (p.n - 1);
        if (un < bound) bound = un;
        if (wn < bound) bound = wn;
    }
    if (p.kappa <= -bound) throw ParamOutOfRange("kappa below the Selberg bound");
}

GammaProduct selberg_I0(const SelbergParams& p)
{
    validate(p);
    const Rational& u = p.u;
    const Rational& w = p.w;
    const Rational& k = p.kappa;
    GammaProduct g;
    for (long i = 1; i <= p.n; ++i) {
        g *= GammaProduct::gamma(1 + (p.n - i + 1) * k);
        g /= GammaProduct::gamma(1 + k);
        g *= GammaProduct::gamma(u + (p.n - i) * k);
        g *= GammaProduct::gamma(w + (p.n - i) * k);
        g /= GammaProduct::gamma(u + w + (2 * p.n - i - 1) * k);
    }
    return g;
}

Rational aomoto_ratio(const SelbergParams& p, long m)
{
    validate(p);
    if (m < 0 || m > p.n) throw IndexConstraint("aomoto_ratio needs 0 <= m <= n");
    Rational r = binomial(p.n, m);
    for (long i = 1; i <= m; ++i)
        r *= (p.u + (p.n - i) * p.kappa) / (p.u + p.w + (2 * p.n - i - 1) * p.kappa);
    return r;
}

Rational aomoto_general_ratio(const SelbergParams& p, long m1, long m2, long m3)
{
    validate(p);
    if (m1 < 0 || m2 < 0 || m3 < 0) throw IndexConstraint("negative Aomoto index");
    if (m3 > m1) throw IndexConstraint("m3 must not exceed m1");
    if (m1 + m2 - m3 > p.n) throw IndexConstraint("m1 + m2 - m3 exceeds n");
    const Rational& u = p.u;
    const Rational& w = p.w;
    const Rational& k = p.kappa;
    long n = p.n;
    Rational r(1);
    for (long i = 1; i <= m3; ++i) r *= (u + w + (n - i - 1) * k) / (u + w + 1 + (2 * n - i - 1) * k);
    for (long i = 1; i <= m1; ++i) r *= u + (n - i) * k;
    for (long i = 1; i <= m2; ++i) r *= w + (n - i) * k;
    for (long i = 1; i <= m1 + m2; ++i) r /= u + w + (2 * n - i - 1) * k;
    return r;
}

}  // namespace selmat
