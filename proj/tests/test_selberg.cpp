#include "doctest.h"

#include "selmat/selberg.hpp"

using namespace selmat;

namespace {

Rational r(long a, long b = 1) { return make_rational(a, b); }

Rational as_rational(const GammaProduct& g)
{
    Exact e = gamma_product_ratio(g, GammaProduct());
    REQUIRE(std::holds_alternative<Rational>(e));
    return std::get<Rational>(e);
}

}  // namespace

TEST_CASE("Selberg integral examples")
{
    CHECK(as_rational(selberg_I0({1, r(2), r(1), r(7, 3)})) == r(1, 2));
    CHECK(as_rational(selberg_I0({2, r(1), r(1), r(1)})) == r(1, 6));
    CHECK(as_rational(selberg_I0({2, r(1), r(1), r(1, 2)})) == r(1, 3));
    CHECK(to_float(selberg_I0({3, r(3, 2), r(2), r(1, 2)})).value == doctest::Approx(3.628117e-4).epsilon(1e-6));
}

TEST_CASE("Selberg integral symmetries")
{
    for (long n = 1; n <= 5; ++n)
        for (const auto& u : {r(1), r(3, 2), r(7, 3)})
            for (const auto& w : {r(1, 2), r(2), r(5, 4)})
                for (const auto& kappa : {r(1, 2), r(1), r(2), r(1, 3)}) {
                    SelbergParams a{n, u, w, kappa}, b{n, w, u, kappa};
                    CHECK(selberg_I0(a).normalized() == selberg_I0(b).normalized());
                }
    for (long n = 1; n <= 5; ++n) {
        Rational u = r(3, 2), w = r(5, 3);
        GammaProduct beta = GammaProduct::gamma(u) * GammaProduct::gamma(w) / GammaProduct::gamma(u + w);
        GammaProduct power;
        for (long i = 0; i < n; ++i) power *= beta;
        CHECK(selberg_I0({n, u, w, r(0)}).normalized() == power.normalized());
    }
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(validate({2, r(0), r(1), r(1)}), ParamOutOfRange);
    CHECK_THROWS_AS(validate({2, r(1), r(-1), r(1)}), ParamOutOfRange);
    CHECK_THROWS_AS(validate({2, r(1), r(1), r(-1, 2)}), ParamOutOfRange);
    CHECK_NOTHROW(validate({2, r(1), r(1), r(-1, 3)}));
    CHECK_THROWS_AS(validate({3, r(1, 2), r(1), r(-1, 4)}), ParamOutOfRange);
    CHECK_THROWS_AS(selberg_I0({0, r(1), r(1), r(1)}), ParamOutOfRange);
}

TEST_CASE("Aomoto examples")
{
    SelbergParams p{2, r(1), r(1), r(1)};
    CHECK(aomoto_ratio(p, 1) == 1);
    CHECK(aomoto_ratio(p, 2) == r(1, 6));
    CHECK(aomoto_general_ratio({1, r(1), r(1), r(5, 2)}, 1, 1, 1) == r(1, 6));
    CHECK(aomoto_general_ratio(p, 1, 1, 0) == r(1, 3));
    CHECK_THROWS_AS(aomoto_general_ratio(p, 2, 2, 0), IndexConstraint);
    CHECK_THROWS_AS(aomoto_general_ratio(p, 1, 1, 2), IndexConstraint);
    CHECK_THROWS_AS(aomoto_ratio(p, 3), IndexConstraint);
}

TEST_CASE("Aomoto special cases")
{
    for (long n = 1; n <= 6; ++n)
        for (const auto& kappa : {r(1, 2), r(1), r(2), r(3)}) {
            SelbergParams p{n, r(3, 2), r(2), kappa};
            for (long m = 0; m <= n; ++m)
                CHECK(aomoto_general_ratio(p, m, 0, 0) == aomoto_ratio(p, m) / binomial(n, m));
            for (long m1 = 0; m1 <= 4; ++m1)
                for (long m2 = 0; m1 + m2 <= std::min(4L, n); ++m2) {
                    Rational num(1), den(1);
                    for (long i = 1; i <= m1; ++i) num *= p.u + (n - i) * kappa;
                    for (long j = 1; j <= m2; ++j) num *= p.w + (n - j) * kappa;
                    for (long k = 1; k <= m1 + m2; ++k) den *= p.u + p.w + (2 * n - k - 1) * kappa;
                    CHECK(aomoto_general_ratio(p, m1, m2, 0) == num / den);
                }
        }
}

TEST_CASE("Aomoto ratios at kappa 0 factorize")
{
    SelbergParams p{4, r(2), r(3), r(0)};
    Rational t = p.u / (p.u + p.w), s = p.w / (p.u + p.w);
    CHECK(aomoto_general_ratio(p, 2, 1, 0) == t * t * s);
    CHECK(aomoto_general_ratio(p, 2, 2, 1) == t * (p.u * p.w / ((p.u + p.w) * (p.u + p.w + 1))) * s);
}
