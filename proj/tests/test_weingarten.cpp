#include "doctest.h"

#include "selmat/moments.hpp"
#include "selmat/weingarten.hpp"

using namespace selmat;

namespace {

Rational r(long a, long b = 1) { return make_rational(a, b); }

RationalFunction fit(const std::function<Rational(long)>& f)
{
    std::vector<std::pair<long, Rational>> samples;
    for (long n = 4; n <= 40; ++n) samples.emplace_back(n, f(n));
    return reconstruct_rational(samples);
}

}  // namespace

TEST_CASE("C_lambda products")
{
    CHECK(c_lambda(Partition{2}, r(3)) == 12);
    CHECK(c_lambda(Partition{1, 1}, r(3)) == 6);
    CHECK(c_lambda_prime(Partition{1}, r(5)) == 5);
    for (long n = 1; n <= 10; ++n) {
        Rational z(n);
        CHECK(c_lambda(Partition{2}, z) == z * (z + 1));
        CHECK(c_lambda_prime(Partition{2}, z) == z * (z + 2));
        CHECK(c_lambda_prime(Partition{1, 1}, z) == z * (z - 1));
    }
}

TEST_CASE("Weingarten values")
{
    for (long n = 2; n <= 20; ++n) {
        Rational z(n);
        CHECK(wg_unitary(Partition{1}, z) == 1 / z);
        CHECK(wg_orthogonal(Partition{1}, z) == 1 / z);
        CHECK(wg_unitary(Partition{1, 1}, z) == 1 / (z * z - 1));
        CHECK(wg_unitary(Partition{2}, z) == -1 / (z * (z * z - 1)));
        CHECK(wg_unitary(Partition{1}, z, z + 1) == 1 / (z * (z + 1)));
    }
    for (long n = 3; n <= 20; ++n) {
        Rational z(n);
        CHECK(wg_orthogonal(Partition{1, 1}, z) == (z + 1) / (z * (z - 1) * (z + 2)));
        CHECK(wg_orthogonal(Partition{2}, z) == -1 / (z * (z - 1) * (z + 2)));
    }
    CHECK(wg_orthogonal(Partition{2}, r(5)) == r(-1, 140));
}

TEST_CASE("pole policy")
{
    CHECK_THROWS_AS(wg_unitary(Partition{1, 1}, r(1), PolePolicy::Strict), PoleAtInteger);
    CHECK_NOTHROW(wg_unitary(Partition{1, 1}, r(1)));
    CHECK(wg_unitary(Partition{1, 1}, r(1)) == r(1, 4));
    CHECK_THROWS_AS(wg_orthogonal(Partition{1, 1}, r(1), PolePolicy::Strict), PoleAtInteger);
}

TEST_CASE("unitary Weingarten inverts the Gram matrix")
{
    for (int k = 2; k <= 4; ++k) {
        Rational z(7);
        auto perms = all_permutations(k);
        for (const auto& s : perms) {
            Rational sum(0);
            for (const auto& t : perms)
                sum += wg_unitary(s * t.inverse(), z) * power(z, cycle_type(t).length());
            CHECK(sum == (s == Permutation::identity(k) ? 1 : 0));
        }
    }
}

TEST_CASE("zonal spherical functions")
{
    for (const auto& s : all_permutations(4)) {
        CHECK(zonal_spherical(Partition{2}, s) == 1);
        CHECK(zonal_spherical(Partition{1, 1}, s) == (coset_type(s) == Partition{1, 1} ? r(1) : r(-1, 2)));
    }
    CHECK(zonal_spherical(Partition{1, 1}, Permutation::from_cycles(4, {{2, 3}})) == r(-1, 2));
}

TEST_CASE("orthogonal Weingarten is constant on double cosets")
{
    for (int k = 1; k <= 3; ++k) {
        std::map<Partition, Rational> seen;
        for (const auto& s : all_permutations(2 * k)) {
            Rational v = wg_orthogonal(s, r(6));
            auto [it, fresh] = seen.emplace(coset_type(s), v);
            CHECK(it->second == v);
            CHECK(v == wg_orthogonal(coset_type(s), r(6)));
        }
    }
}

TEST_CASE("conjugation-invariant moments")
{
    for (long n = 2; n <= 12; ++n) {
        MomentReport h = ensemble_moments(parse_ensemble("hermitian"), n);
        auto t = trace_moments(h);
        Rational z(n);
        CHECK(conj_invariant_moment_unitary({1, 2}, {1, 2}, n, t) == (h.M2 + z * *h.M11) / (z + 1));
        CHECK(conj_invariant_moment_unitary({1, 1}, {2, 2}, n, t) == 0);
        CHECK(conj_invariant_moment_unitary({1, 2}, {1, 1}, n, t) == 0);
        CHECK(conj_invariant_moment_unitary({1, 2}, {2, 1}, n, t) > 0);

        MomentReport s = ensemble_moments(parse_ensemble("real-symmetric"), n);
        auto ts = trace_moments(s);
        CHECK(conj_invariant_moment_orthogonal({1, 1, 2, 2}, n, ts) == s.M2 / (z + 2) + (z + 1) / (z + 2) * *s.M11);
        CHECK(conj_invariant_moment_orthogonal({1, 2, 1, 2}, n, ts) == (s.M2 - *s.M11) / (z + 2));
        CHECK(conj_invariant_moment_orthogonal({1, 2, 1, 1}, n, ts) == 0);
    }
}

TEST_CASE("covariance structure")
{
    for (auto field : {SelfAdjointField::Hermitian, SelfAdjointField::RealSymmetric})
        for (auto conv : {Convention::Forced, Convention::Paper}) {
            Rational previous(1000);  // distance to 2
            for (long n = 2; n <= 30; ++n) {
                CovarianceReport c = covariance_report(field, n, conv);
                CHECK(c.zero_pattern_exact);
                CHECK(c.structural_identity);
                CHECK(c.eig_trace_direction == c.diag_variance + (n - 1) * c.diag_diag_covariance);
                CHECK(c.eig_bulk == c.diag_variance - c.diag_diag_covariance);
                CHECK(c.condition_number <= 3);
                Rational gap = abs(c.condition_number - 2);
                CHECK(gap <= previous);
                previous = gap;
            }
        }
}

TEST_CASE("covariance expansions in the printed convention")
{
    auto her = [](long n) { return covariance_report(SelfAdjointField::Hermitian, n, Convention::Paper); };
    auto sym = [](long n) { return covariance_report(SelfAdjointField::RealSymmetric, n, Convention::Paper); };
    auto b = expand_at_infinity(fit([&](long n) { return her(n).diag_diag_covariance; }), 2);
    CHECK(b.at_power(0) == 0);
    CHECK(b.at_power(-1) == 0);
    CHECK(b.at_power(-2) == r(-1, 8));
    CHECK(expand_at_infinity(fit([&](long n) { return her(n).eig_trace_direction; }), 1).at_power(-1) == r(1, 8));
    CHECK(expand_at_infinity(fit([&](long n) { return her(n).eig_bulk; }), 1).at_power(-1) == r(1, 4));
    auto bs = expand_at_infinity(fit([&](long n) { return sym(n).diag_diag_covariance; }), 2);
    CHECK(bs.at_power(-1) == 0);
    CHECK(bs.at_power(-2) == r(-1, 4));
    CHECK(expand_at_infinity(fit([&](long n) { return sym(n).diag_variance; }), 1).at_power(-1) == r(1, 2));
    CHECK(expand_at_infinity(fit([&](long n) { return sym(n).offdiag_variance; }), 1).at_power(-1) == r(1, 2));
}

TEST_CASE("full-matrix entry correlations")
{
    CorrelationReport c = correlation_report(FullField::Complex, 10);
    CHECK(c.cross == r(1, 399));
    CHECK(c.same_row == r(1, 420));
    CHECK(c.second_moment_sq == r(1, 400));
    for (long n = 2; n <= 20; ++n) {
        Rational z(n);
        CorrelationReport x = correlation_report(FullField::Real, n);
        CHECK(x.second_moment == 1 / (2 * z + 1));
        CHECK(x.cross == (z + 1) / (z * (2 * z + 1) * (2 * z + 3)));
        CHECK(x.same_row == 1 / ((2 * z + 1) * (2 * z + 3)));
        CHECK(x.same_column == x.same_row);
        CHECK(x.cross > x.second_moment_sq);
        CHECK(x.second_moment_sq > x.same_row);
    }
}
