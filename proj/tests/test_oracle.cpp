#include "doctest.h"

#include "selmat/moments.hpp"
#include "selmat/oracle.hpp"
#include "selmat/weingarten.hpp"

#include <cmath>
#include <cstdlib>

using namespace selmat;
using namespace selmat::oracle;

namespace {

bool within(const SampleEstimate& e, double exact, double sigmas = 4)
{
    return std::abs(e.mean - exact) <= sigmas * e.std_error;
}

}  // namespace

TEST_CASE("random streams")
{
    Rng a(42), b(42), c(42, 1);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        auto x = a.next();
        CHECK(x == b.next());
        differs |= x != c.next();
    }
    CHECK(differs);
    Rng u(7);
    double sum = 0, sq = 0;
    for (int i = 0; i < 200000; ++i) {
        double z = u.normal();
        sum += z;
        sq += z * z;
    }
    CHECK(std::abs(sum / 200000) < 0.01);
    CHECK(std::abs(sq / 200000 - 1) < 0.02);
}

TEST_CASE("Gauss-Legendre rules are exact for low degree")
{
    for (int p : {1, 2, 5, 12, 24}) {
        GaussRule g = gauss_legendre(p);
        double wsum = 0;
        for (double w : g.weights) wsum += w;
        CHECK(wsum == doctest::Approx(1).epsilon(1e-14));
        for (int k = 0; k < 2 * p; ++k) {
            double s = 0;
            for (int i = 0; i < p; ++i) s += g.weights[i] * std::pow(g.nodes[i], k);
            CHECK(s == doctest::Approx(1.0 / (k + 1)).epsilon(1e-13));
        }
    }
}

TEST_CASE("quadrature examples")
{
    QuadratureSpec s;
    s.n = 2;
    CHECK(std::abs(quadrature(s).value - 1.0 / 6) <= 1e-10);
    s.kappa = 0.5;
    CHECK(std::abs(quadrature(s).value - 1.0 / 3) <= 1e-8);
    s.kappa = 1;
    double i0 = quadrature(s).value;
    s.payload = [](const std::vector<double>& t) { return t[0] * t[1]; };
    s.symmetric_payload = true;
    CHECK(std::abs(quadrature(s).value / i0 - 1.0 / 6) <= 1e-9);
    QuadratureResult r = quadrature(s);
    CHECK(r.error <= 1e-12);
    CHECK(r.points_per_axis == 24);
    s.n = 5;
    CHECK_THROWS_AS(quadrature(s), UnsupportedDimension);
}

TEST_CASE("operator ball membership")
{
    SmallMatrix m;
    m.n = 2;
    m.a[0] = 0.5;
    m.a[3] = -0.9;
    CHECK(in_operator_ball(m, true));
    CHECK(in_operator_ball(m, false));
    m.a[1] = m.a[2] = 0.6;
    CHECK_FALSE(in_operator_ball(m, true));
    m.a[1] = m.a[2] = 0;
    m.a[3] = 1.1;
    CHECK_FALSE(in_operator_ball(m, true));
}

TEST_CASE("rejection sampling")
{
    auto sq11 = [](const SmallMatrix& m) { return std::norm(m(1, 1)); };
    auto e1 = rejection_estimate(BallEnsemble::Hermitian, 1, 100000, 3, {sq11});
    CHECK(within(e1[0], 1.0 / 3));
    auto rf = rejection_estimate(BallEnsemble::RealFull, 2, 200000, 4, {sq11});
    CHECK(within(rf[0], 1.0 / 5));
    CHECK(rf[0].n_samples == 200000);
    CHECK(rf[0].seed == 4);
    CHECK(rf[0].acceptance_rate > 0);
    CHECK(rf[0].acceptance_rate < 1);

    CovarianceReport c = covariance_report(SelfAdjointField::Hermitian, 3);
    auto h = rejection_estimate(BallEnsemble::Hermitian, 3, 100000, 5,
                                {[](const SmallMatrix& m) { return (m(1, 1) * m(2, 2)).real(); }});
    CHECK(within(h[0], to_double(c.diag_diag_covariance)));
    CHECK_THROWS_AS(rejection_estimate(BallEnsemble::Hermitian, 5, 10, 1, {sq11}), UnsupportedDimension);
}

TEST_CASE("rejection samples are conjugation invariant")
{
    auto samples = rejection_sample_ball(BallEnsemble::RealSymmetric, 3, 200000, 8);
    CHECK(samples.size() == 200000);
    // P swaps coordinates 1 and 3, so (P T P^t)_{11} = T_{33} and (P T P^t)_{12} = T_{32}
    double a = 0, b = 0, aa = 0, bb = 0, c = 0, d = 0, cc = 0, dd = 0;
    for (const auto& m : samples) {
        double x = std::norm(m(1, 1)), y = std::norm(m(3, 3));
        double u = (m(1, 1) * m(1, 2)).real(), v = (m(3, 3) * m(3, 2)).real();
        a += x, aa += x * x, b += y, bb += y * y, c += u, cc += u * u, d += v, dd += v * v;
    }
    double N = static_cast<double>(samples.size());
    auto se = [N](double s, double ss) { return std::sqrt((ss / N - (s / N) * (s / N)) / N); };
    CHECK(std::abs(a / N - b / N) <= 4 * std::hypot(se(a, aa), se(b, bb)));
    CHECK(std::abs(c / N - d / N) <= 4 * std::hypot(se(c, cc), se(d, dd)));
}

TEST_CASE("estimates are deterministic across thread counts")
{
    auto stat = [](const SmallMatrix& m) { return std::norm(m(1, 2)); };
    setenv("SELMAT_THREADS", "1", 1);
    auto a = rejection_estimate(BallEnsemble::ComplexFull, 2, 20000, 9, {stat});
    setenv("SELMAT_THREADS", "3", 1);
    auto b = rejection_estimate(BallEnsemble::ComplexFull, 2, 20000, 9, {stat});
    unsetenv("SELMAT_THREADS");
    CHECK(a[0].mean == b[0].mean);
    CHECK(a[0].std_error == b[0].std_error);
    CHECK(a[0].acceptance_rate == b[0].acceptance_rate);
    auto c = rejection_estimate(BallEnsemble::ComplexFull, 2, 20000, 10, {stat});
    CHECK(c[0].mean != a[0].mean);
}

TEST_CASE("Metropolis eigenvalue sampler")
{
    auto sum_sq = [](const std::vector<double>& x) {
        double s = 0;
        for (double v : x) s += v * v;
        return s;
    };
    auto sum_4 = [](const std::vector<double>& x) {
        double s = 0;
        for (double v : x) s += v * v * v * v;
        return s;
    };
    McmcSpec h;
    h.n = 10;
    auto eh = mcmc_eigenvalue_sample(h, {sum_sq});
    CHECK(eh[0].warning.empty());
    CHECK(within(eh[0], 10 * to_double(ensemble_moments(parse_ensemble("hermitian"), 10).M2)));

    McmcSpec f;
    f.a = 2;
    f.b = 1;
    f.n = 8;
    f.seed = 2;
    auto ef = mcmc_eigenvalue_sample(f, {sum_sq});
    CHECK(within(ef[0], 64.0 / 17));

    McmcSpec q;
    q.b = 4;
    q.n = 6;
    q.seed = 3;
    auto eq = mcmc_eigenvalue_sample(q, {sum_4});
    CHECK(within(eq[0], 6 * to_double(ensemble_moments(parse_ensemble("quaternionic"), 6).M4)));

    auto again = mcmc_eigenvalue_sample(q, {sum_4});
    CHECK(again[0].mean == eq[0].mean);
}

TEST_CASE("Haar sampling")
{
    auto u11 = [](const std::vector<std::complex<double>>& u, int) { return std::norm(u[0]); };
    auto u11u22 = [](const std::vector<std::complex<double>>& u, int n) { return std::norm(u[0] * u[n + 1]); };
    auto eu = haar_estimate(HaarGroup::Unitary, 3, 200000, 1, {u11, u11u22});
    CHECK(within(eu[0], 1.0 / 3));
    CHECK(within(eu[1], to_double(wg_unitary(Partition{1, 1}, Rational(3)))));
    auto eo = haar_estimate(HaarGroup::Orthogonal, 4, 200000, 2, {u11});
    CHECK(within(eo[0], 1.0 / 4));

    Rng rng(3);
    auto m = haar_sample(HaarGroup::Unitary, 5, rng);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            std::complex<double> s = 0;
            for (int k = 0; k < 5; ++k) s += m[i * 5 + k] * std::conj(m[j * 5 + k]);
            CHECK(std::abs(s - (i == j ? 1.0 : 0.0)) < 1e-12);
        }
}

TEST_CASE("batch means")
{
    SampleEstimate e = batch_means({1, 3}, {1, 5}, 2);
    CHECK(e.mean == doctest::Approx(1));
    CHECK(e.n_samples == 4);
    CHECK(e.batches == 2);
    CHECK(e.std_error == doctest::Approx(0.5));
}
