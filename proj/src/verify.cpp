#include "selmat/verify.hpp"

#include "selmat/combinat.hpp"
#include "selmat/exact.hpp"
#include "selmat/jack.hpp"
#include "selmat/moments.hpp"
#include "selmat/oracle.hpp"
#include "selmat/selberg.hpp"
#include "selmat/weingarten.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace selmat {

namespace {

constexpr double kQuadTolSmooth = 1e-6;   // kappa in {1, 2}
constexpr double kQuadTolCusp = 1e-3;     // kappa = 1/2
constexpr double kQuadBoundShare = 0.95;  // error estimate must bound the true error this often
constexpr double kQuadRoundoff = 1e-13;   // relative floor added to the estimate
constexpr int kQuadPoints = 24;
constexpr double kQuadSeconds = 120;
constexpr double kJackSeconds = 1;
constexpr double kLaurentSeconds = 10;
constexpr long kLaurentLastSample = 16;
constexpr double kRichardsonTol = 1e-8;
constexpr long kRichardsonStart = 25;
constexpr int kRichardsonLevels = 6;
constexpr double kSigmaLimitTol = 0.01;
constexpr long kSampleMinimum = 1000000;
constexpr double kSampleSigmas = 4;
constexpr double kSampleSeconds = 300;

std::string sci(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

std::string fixed2(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

Rational q(long a, long b = 1) { return make_rational(a, b); }

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double monomial_value(const Partition& mu, const std::vector<double>& t)
{
    int n = static_cast<int>(t.size());
    int l = mu.length();
    if (l > n) return 0;
    std::vector<bool> used(n, false);
    double total = 0;
    auto rec = [&](auto&& self, int k, double acc) -> void {
        if (k == l) {
            total += acc;
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (used[i]) continue;
            used[i] = true;
            self(self, k + 1, acc * std::pow(t[i], mu[k]));
            used[i] = false;
        }
    };
    rec(rec, 0, 1.0);
    double denom = 1;
    for (int part : std::set<int>(mu.parts().begin(), mu.parts().end()))
        for (int m = 2; m <= mu.multiplicity(part); ++m) denom *= m;
    return total / denom;
}

oracle::Payload jack_payload(const Partition& lambda, const Rational& kappa)
{
    std::vector<std::pair<Partition, double>> terms;
    for (const auto& [mu, c] : jack_in_monomials(lambda, kappa).coeffs) terms.emplace_back(mu, to_double(c));
    return [terms](const std::vector<double>& t) {
        double s = 0;
        for (const auto& [mu, c] : terms) s += c * monomial_value(mu, t);
        return s;
    };
}

oracle::Payload aomoto_payload(long m1, long m2, long m3)
{
    return [=](const std::vector<double>& t) {
        double s = 1;
        for (long i = 0; i < m1; ++i) s *= t[i];
        for (long j = m1 + 1 - m3; j <= m1 + m2 - m3; ++j) s *= 1 - t[j - 1];
        return s;
    };
}

CriterionResult criterion_quadrature()
{
    CriterionResult r{1, true, "Selberg/Aomoto/Kadell vs quadrature", "", 0};
    auto start = std::chrono::steady_clock::now();
    const std::vector<Rational> kappas = {q(1, 2), q(1), q(2)};
    const std::vector<Rational> uw = {q(1), q(3, 2), q(2)};
    double worst_smooth = 0, worst_cusp = 0;
    long configs = 0, integrals = 0, bounded = 0;
    for (long n : {2L, 3L}) {
        for (const auto& kappa : kappas) {
            for (const auto& u : uw) {
                for (const auto& w : uw) {
                    SelbergParams p{n, u, w, kappa};
                    std::vector<oracle::Payload> payloads{oracle::Payload{}};
                    std::vector<bool> symmetric{true};
                    std::vector<Rational> exact{q(1)};
                    for (int k = 1; k <= 4; ++k) {
                        for (const auto& lambda : partitions_of(k)) {
                            if (lambda.length() > n) continue;
                            payloads.push_back(jack_payload(lambda, kappa));
                            symmetric.push_back(true);
                            exact.push_back(kadell_ratio(lambda, n, u, w, kappa));
                        }
                    }
                    for (long m1 = 0; m1 <= 3; ++m1) {
                        for (long m2 = 0; m1 + m2 <= 3; ++m2) {
                            for (long m3 = 0; m3 <= std::min(m1, m2); ++m3) {
                                if (m1 + m2 - m3 > n) continue;
                                payloads.push_back(aomoto_payload(m1, m2, m3));
                                symmetric.push_back(m1 == 0 && m2 == 0);
                                exact.push_back(aomoto_general_ratio(p, m1, m2, m3));
                            }
                        }
                    }
                    oracle::QuadratureSpec spec;
                    spec.n = static_cast<int>(n);
                    spec.points_per_axis = kQuadPoints;
                    spec.u = to_double(u);
                    spec.w = to_double(w);
                    spec.kappa = to_double(kappa);
                    auto results = oracle::quadrature_many(spec, payloads, symmetric);
                    double i0 = to_float(selberg_I0(p)).value;
                    bool cusp = kappa == q(1, 2);
                    double tol = cusp ? kQuadTolCusp : kQuadTolSmooth;
                    double& worst = cusp ? worst_cusp : worst_smooth;
                    for (size_t k = 0; k < results.size(); ++k) {
                        double truth = to_double(exact[k]) * i0;
                        double dev = k == 0 ? std::abs(results[0].value - i0) / i0
                                            : std::abs(results[k].value / results[0].value - to_double(exact[k]));
                        worst = std::max(worst, dev);
                        if (dev > tol) r.pass = false;
                        double true_err = std::abs(results[k].value - truth);
                        if (true_err <= results[k].error + kQuadRoundoff * std::abs(truth)) ++bounded;
                        ++integrals;
                    }
                    ++configs;
                }
            }
        }
    }
    double share = static_cast<double>(bounded) / static_cast<double>(integrals);
    if (share < kQuadBoundShare) r.pass = false;
    r.seconds = seconds_since(start);
    if (r.seconds > kQuadSeconds) r.pass = false;
    r.detail = std::to_string(configs) + " configs, " + std::to_string(integrals) +
               " integrals; max deviation " + sci(worst_smooth) + " (kappa 1,2; tol " + sci(kQuadTolSmooth) +
               "), " + sci(worst_cusp) + " (kappa 1/2; tol " + sci(kQuadTolCusp) + "); error estimate bounds " +
               std::to_string(bounded) + "/" + std::to_string(integrals);
    return r;
}

using Table = std::vector<std::vector<Rational>>;

Table p_table(int degree, const Rational& k)
{
    switch (degree) {
    case 1:
        return {{q(1)}};
    case 2:
        return {{q(1), 2 * k / (k + 1)}, {q(0), q(1)}};
    case 3:
        return {{q(1), 3 * k / (k + 2), 6 * k * k / ((k + 1) * (k + 2))},
                {q(0), q(1), 6 * k / (2 * k + 1)},
                {q(0), q(0), q(1)}};
    default:
        return {{q(1), 4 * k / (k + 3), 6 * k * (k + 1) / ((k + 2) * (k + 3)), 12 * k * k / ((k + 2) * (k + 3)),
                 24 * k * k * k / ((k + 1) * (k + 2) * (k + 3))},
                {q(0), q(1), 2 * k / (k + 1), (5 * k + 3) * k / ((k + 1) * (k + 1)), 12 * k * k / ((k + 1) * (k + 1))},
                {q(0), q(0), q(1), 2 * k / (k + 1), 12 * k * k / ((k + 1) * (2 * k + 1))},
                {q(0), q(0), q(0), q(1), 12 * k / (3 * k + 1)},
                {q(0), q(0), q(0), q(0), q(1)}};
    }
}

Table m_table(int degree, const Rational& k)
{
    switch (degree) {
    case 1:
        return {{q(1)}};
    case 2:
        return {{q(1), -2 * k / (k + 1)}, {q(0), q(1)}};
    case 3:
        return {{q(1), -3 * k / (k + 2), 6 * k * k / ((k + 1) * (2 * k + 1))},
                {q(0), q(1), -6 * k / (2 * k + 1)},
                {q(0), q(0), q(1)}};
    default:
        return {{q(1), -4 * k / (k + 3), 2 * k * (k - 1) / ((k + 1) * (k + 2)), 4 * k * k / ((k + 1) * (k + 1)),
                 -24 * k * k * k / ((k + 1) * (2 * k + 1) * (3 * k + 1))},
                {q(0), q(1), -2 * k / (k + 1), -k * (k + 3) / ((k + 1) * (k + 1)),
                 24 * k * k / ((2 * k + 1) * (3 * k + 1))},
                {q(0), q(0), q(1), -2 * k / (k + 1), 12 * k * k / ((2 * k + 1) * (3 * k + 1))},
                {q(0), q(0), q(0), q(1), -12 * k / (3 * k + 1)},
                {q(0), q(0), q(0), q(0), q(1)}};
    }
}

std::vector<Partition> table_order(int degree)
{
    switch (degree) {
    case 1:
        return {Partition{1}};
    case 2:
        return {Partition{2}, Partition{1, 1}};
    case 3:
        return {Partition{3}, Partition{2, 1}, Partition{1, 1, 1}};
    default:
        return {Partition{4}, Partition{3, 1}, Partition{2, 2}, Partition{2, 1, 1}, Partition{1, 1, 1, 1}};
    }
}

CriterionResult criterion_jack_tables()
{
    CriterionResult r{2, true, "Jack tables", "", 0};
    auto start = std::chrono::steady_clock::now();
    long checked = 0, mismatched = 0;
    for (const auto& kappa : {q(1, 2), q(1), q(2), q(3)}) {
        for (int degree = 1; degree <= 4; ++degree) {
            auto order = table_order(degree);
            Table P = p_table(degree, kappa), M = m_table(degree, kappa);
            for (size_t a = 0; a < order.size(); ++a) {
                SymPoly jack = jack_in_monomials(order[a], kappa);
                auto inverse = monomial_to_jack(order[a], kappa);
                for (size_t b = 0; b < order.size(); ++b) {
                    Rational from_jack = jack.coeff(order[b]);
                    auto it = inverse.find(order[b]);
                    Rational from_monomial = it == inverse.end() ? Rational(0) : it->second;
                    if (from_jack != P[a][b]) ++mismatched;
                    if (from_monomial != M[a][b]) ++mismatched;
                    checked += 2;
                }
            }
        }
    }
    r.seconds = seconds_since(start);
    r.pass = mismatched == 0 && r.seconds < kJackSeconds;
    r.detail = std::to_string(checked) + " entries at kappa 1/2,1,2,3; " + std::to_string(mismatched) + " mismatches";
    return r;
}

struct LaurentCase {
    std::string label;
    ShiftedPayload payload;
    Rational kappa;
    std::vector<Rational> expected;  // n^0, n^-1, ...
};

long first_sample(ShiftedPayload p)
{
    return p == ShiftedPayload::CrossSquare || p == ShiftedPayload::Fourth ? 4 : 2;
}

CriterionResult criterion_laurent()
{
    CriterionResult r{3, true, "J-level Laurent coefficients", "", 0};
    auto start = std::chrono::steady_clock::now();
    using S = ShiftedPayload;
    const std::vector<LaurentCase> cases = {
        {"P2 k=1", S::Square, q(1), {q(1, 8), q(0), q(-1, 32)}},
        {"P11 k=1", S::CrossLinear, q(1), {q(0), q(-1, 8), q(-1, 16), q(-1, 32)}},
        {"P22 k=1", S::CrossSquare, q(1), {q(1, 64), q(-1, 128), q(-1, 128)}},
        {"P4 k=1", S::Fourth, q(1), {q(3, 128), q(0)}},
        {"P2 k=1/2", S::Square, q(1, 2), {q(1, 8), q(-1, 16), q(1, 32)}},
        {"P11 k=1/2", S::CrossLinear, q(1, 2), {q(0), q(-1, 8), q(1, 16), q(-1, 32)}},
        {"P22 k=1/2", S::CrossSquare, q(1, 2), {q(1, 64), q(-3, 128), q(3, 128)}},
        {"P4 k=1/2", S::Fourth, q(1, 2), {q(3, 128), q(-5, 256)}},
        {"P2 k=2", S::Square, q(2), {q(1, 8), q(1, 32), q(1, 128)}},
        {"P22 k=2", S::CrossSquare, q(2), {q(1, 64), q(0), q(-3, 1024)}},
        {"P4 k=2", S::Fourth, q(2), {q(3, 128), q(5, 512)}},
    };
    long coefficients = 0;
    std::vector<std::string> failed;
    for (const auto& c : cases) {
        std::vector<std::pair<long, Rational>> samples;
        for (long n = first_sample(c.payload); n <= kLaurentLastSample; ++n)
            samples.emplace_back(n, shifted_moment_ratio(c.payload, n, c.kappa));
        bool ok = true;
        try {
            RationalFunction f = reconstruct_rational(samples);
            Expansion e = expand_at_infinity(f, static_cast<int>(c.expected.size()) - 1);
            for (int p = 1; p <= e.top; ++p)
                if (e.at_power(p) != 0) ok = false;
            for (size_t k = 0; k < c.expected.size(); ++k) {
                if (e.at_power(-static_cast<int>(k)) != c.expected[k]) ok = false;
                ++coefficients;
            }
        } catch (const InconsistentSamples&) {
            ok = false;
        }
        if (!ok) failed.push_back(c.label);
    }
    r.seconds = seconds_since(start);
    r.pass = failed.empty() && r.seconds < kLaurentSeconds;
    r.detail = std::to_string(cases.size()) + " quantities, " + std::to_string(coefficients) + " coefficients";
    if (failed.empty()) {
        r.detail += ", all exact";
    } else {
        r.detail += "; mismatched:";
        for (const auto& f : failed) r.detail += " [" + f + "]";
    }
    return r;
}

CriterionResult criterion_variance()
{
    CriterionResult r{4, true, "Variance constants", "", 0};
    auto start = std::chrono::steady_clock::now();
    std::ostringstream detail;
    double worst_richardson = 0;
    long chain_checked = 0;
    for (const auto& e : all_ensembles()) {
        Rational beta(e.beta);
        Rational c = e.family == Family::SelfAdjoint ? Rational(1 / (16 * beta)) : Rational(1 / (8 * beta));
        for (long n = 20; n <= 200; ++n) {
            Rational var = ensemble_moments(e, n, Convention::Paper).var;
            if (abs(var - c) > q(2, n)) {
                r.pass = false;
                detail << " band fails " << e.name() << " n=" << n << ";";
            }
        }
        Rational limit = richardson_limit(
            [&](long n) { return ensemble_moments(e, n, Convention::Paper).var; }, kRichardsonStart,
            kRichardsonLevels);
        double gap = to_double(abs(limit - c));
        worst_richardson = std::max(worst_richardson, gap);
        if (gap > kRichardsonTol) {
            r.pass = false;
            detail << " extrapolation misses " << e.name() << ";";
        }
        if (e.family == Family::FullMatrix) {
            for (long n = 2; n <= 200; ++n) {
                if (full_matrix_variance_closed_form(n, beta) != ensemble_moments(e, n).var) {
                    r.pass = false;
                    detail << " chain differs " << e.name() << " n=" << n << ";";
                }
                ++chain_checked;
            }
        }
    }
    r.seconds = seconds_since(start);
    r.detail = "6 ensembles, |var-c| <= 2/n on n=20..200; Richardson gap max " + sci(worst_richardson) + " (tol " +
               sci(kRichardsonTol) + "); closed-form chain equal at " + std::to_string(chain_checked) + " points" +
               detail.str();
    return r;
}

CriterionResult criterion_remark()
{
    CriterionResult r{5, true, "General-beta constant", "", 0};
    auto start = std::chrono::steady_clock::now();
    std::ostringstream detail;
    for (int b : {1, 2, 4, 6}) {
        Rational beta(b);
        std::vector<std::pair<long, Rational>> samples;
        for (long n = 4; n <= 40; ++n) samples.emplace_back(n, beta_remark_combination(n, beta));
        try {
            RationalFunction f = reconstruct_rational(samples);
            Expansion e = expand_at_infinity(f, 1);
            bool ok = e.at_power(0) == 1 / (64 * beta);
            for (int p = 1; p <= e.top; ++p)
                if (e.at_power(p) != 0) ok = false;
            detail << " beta=" << b << ": " << to_string(e.at_power(0)) << (ok ? "" : " (expected 1/" + std::to_string(64 * b) + ")") << ";";
            if (!ok) r.pass = false;
        } catch (const InconsistentSamples&) {
            r.pass = false;
            detail << " beta=" << b << ": no rational fit;";
        }
    }
    long cross = 0;
    for (const auto& e : all_ensembles()) {
        if (e.family != Family::SelfAdjoint) continue;
        for (long n = 2; n <= 50; ++n) {
            if (ensemble_moments(e, n, Convention::Forced).var != 16 * beta_remark_combination(n, Rational(e.beta))) {
                r.pass = false;
                detail << " forced var differs " << e.name() << " n=" << n << ";";
            }
            ++cross;
        }
    }
    r.seconds = seconds_since(start);
    r.detail = "constant terms" + detail.str() + " forced var = 16x combination at " + std::to_string(cross) + " points";
    return r;
}

CriterionResult criterion_sigma()
{
    CriterionResult r{6, true, "Thin-shell constant", "", 0};
    auto start = std::chrono::steady_clock::now();
    std::ostringstream detail;
    Rational lo = q(1, 10), hi = q(10);
    double worst = 0;
    for (const auto& e : all_ensembles()) {
        Rational smin = hi, smax = lo;
        for (long n = 2; n <= 200; ++n) {
            Rational s = ensemble_moments(e, n, Convention::Forced).sigma2;
            if (s != ensemble_moments(e, n, Convention::Paper).sigma2) {
                r.pass = false;
                detail << " convention dependent " << e.name() << " n=" << n << ";";
            }
            smin = std::min(smin, s);
            smax = std::max(smax, s);
        }
        if (smin < lo || smax > hi) r.pass = false;
        Rational limit = richardson_limit([&](long n) { return ensemble_moments(e, n).sigma2; }, kRichardsonStart,
                                          kRichardsonLevels);
        double gap = std::abs(to_double(limit) - 0.5);
        worst = std::max(worst, gap);
        if (gap > kSigmaLimitTol) r.pass = false;
        detail << " " << e.name() << " [" << fixed2(to_double(smin)) << "," << fixed2(to_double(smax)) << "] -> "
               << to_double(limit) << ";";
    }
    r.seconds = seconds_since(start);
    r.detail = "n=2..200 range and limit" + detail.str() + " max |limit-1/2| " + sci(worst);
    return r;
}

CriterionResult criterion_weingarten()
{
    CriterionResult r{7, true, "Weingarten and zonal values", "", 0};
    auto start = std::chrono::steady_clock::now();
    long checked = 0;
    for (long n = 3; n <= 20; ++n) {
        Rational z(n);
        bool ok = wg_unitary(Partition{1, 1}, z) == 1 / (z * z - 1) &&
                  wg_unitary(Partition{2}, z) == -1 / (z * (z * z - 1)) &&
                  wg_orthogonal(Partition{1, 1}, z) == (z + 1) / (z * (z - 1) * (z + 2)) &&
                  wg_orthogonal(Partition{2}, z) == -1 / (z * (z - 1) * (z + 2));
        if (!ok) r.pass = false;
        checked += 4;
    }
    for (const auto& sigma : all_permutations(4)) {
        if (zonal_spherical(Partition{2}, sigma) != 1) r.pass = false;
        ++checked;
    }
    if (zonal_spherical(Partition{1, 1}, Permutation::identity(4)) != 1) r.pass = false;
    if (zonal_spherical(Partition{1, 1}, Permutation::from_cycles(4, {{2, 3}})) != q(-1, 2)) r.pass = false;
    checked += 2;
    r.seconds = seconds_since(start);
    r.detail = std::to_string(checked) + " exact identities over n=3..20 and S_4";
    return r;
}

CriterionResult criterion_covariance()
{
    CriterionResult r{8, true, "Covariance structure", "", 0};
    auto start = std::chrono::steady_clock::now();
    std::ostringstream detail;
    long reports = 0;
    Rational worst_condition(0);
    for (auto field : {SelfAdjointField::Hermitian, SelfAdjointField::RealSymmetric}) {
        for (auto convention : {Convention::Forced, Convention::Paper}) {
            for (long n = 2; n <= 100; ++n) {
                CovarianceReport c = covariance_report(field, n, convention);
                ++reports;
                if (n <= 50 && !(c.zero_pattern_exact && c.structural_identity)) {
                    r.pass = false;
                    detail << " structure fails n=" << n << ";";
                }
                worst_condition = std::max(worst_condition, c.condition_number);
                if (c.condition_number > 3) r.pass = false;
                if (n == 100) {
                    if (abs(c.condition_number - 2) > q(1, 20)) r.pass = false;
                    detail << " " << (field == SelfAdjointField::Hermitian ? "hermitian" : "real-symmetric") << "/"
                           << to_string(convention) << " cond(100)=" << to_double(c.condition_number) << ";";
                }
            }
        }
    }
    r.seconds = seconds_since(start);
    r.detail = std::to_string(reports) + " reports; max condition " + std::to_string(to_double(worst_condition)) + ";" +
               detail.str();
    return r;
}

CriterionResult criterion_correlations()
{
    CriterionResult r{9, true, "Entry correlations", "", 0};
    auto start = std::chrono::steady_clock::now();
    long checked = 0;
    for (long n = 2; n <= 50; ++n) {
        Rational z(n);
        CorrelationReport c = correlation_report(FullField::Complex, n);
        bool ok = c.cross == 1 / (4 * z * z - 1) && c.same_row == 1 / (2 * z * (2 * z + 1)) &&
                  c.same_column == c.same_row && c.second_moment_sq == 1 / (4 * z * z) &&
                  c.cross > c.second_moment_sq && c.second_moment_sq > c.same_row;
        CorrelationReport rr = correlation_report(FullField::Real, n);
        ok = ok && rr.cross == (z + 1) / (z * (2 * z + 1) * (2 * z + 3)) &&
             rr.same_row == 1 / ((2 * z + 1) * (2 * z + 3)) && rr.same_column == rr.same_row &&
             rr.second_moment == 1 / (2 * z + 1) && rr.second_moment_sq == 1 / ((2 * z + 1) * (2 * z + 1)) &&
             rr.cross > rr.second_moment_sq && rr.second_moment_sq > rr.same_row;
        if (!ok) r.pass = false;
        checked += 2;
    }
    r.seconds = seconds_since(start);
    r.detail = std::to_string(checked) + " reports over n=2..50, values and orderings exact";
    return r;
}

CriterionResult criterion_sampling(const VerifyOptions& options)
{
    CriterionResult r{10, true, "Rejection-sampling concordance", "", 0};
    auto start = std::chrono::steady_clock::now();
    std::ostringstream detail;
    detail << "n=3, " << options.accepted << " accepted per ensemble, seed " << options.seed << ";";
    if (options.accepted < kSampleMinimum) r.pass = false;
    const std::vector<oracle::MatrixStatistic> stats = {
        [](const oracle::SmallMatrix& m) { return (m(1, 1) * m(2, 2)).real(); },
        [](const oracle::SmallMatrix& m) { return std::norm(m(1, 2)); },
        [](const oracle::SmallMatrix& m) { return std::norm(m(1, 1)); },
    };
    for (auto field : {SelfAdjointField::Hermitian, SelfAdjointField::RealSymmetric}) {
        auto ball = field == SelfAdjointField::Hermitian ? oracle::BallEnsemble::Hermitian
                                                         : oracle::BallEnsemble::RealSymmetric;
        auto est = oracle::rejection_estimate(ball, 3, options.accepted, options.seed, stats);
        CovarianceReport c = covariance_report(field, 3, Convention::Forced);
        const Rational exact[3] = {c.diag_diag_covariance, c.entry_square_mean, c.diag_variance};
        detail << " " << (field == SelfAdjointField::Hermitian ? "hermitian" : "real-symmetric") << " z=";
        for (int k = 0; k < 3; ++k) {
            double z = (est[k].mean - to_double(exact[k])) / est[k].std_error;
            if (!(std::abs(z) <= kSampleSigmas)) r.pass = false;
            detail << (k ? "," : "") << fixed2(z);
        }
        detail << " acceptance " << sci(est[0].acceptance_rate) << ";";
    }
    r.seconds = seconds_since(start);
    if (r.seconds > kSampleSeconds) r.pass = false;
    r.detail = detail.str();
    return r;
}

CriterionResult run_one(int id, const VerifyOptions& options)
{
    switch (id) {
    case 1: return criterion_quadrature();
    case 2: return criterion_jack_tables();
    case 3: return criterion_laurent();
    case 4: return criterion_variance();
    case 5: return criterion_remark();
    case 6: return criterion_sigma();
    case 7: return criterion_weingarten();
    case 8: return criterion_covariance();
    case 9: return criterion_correlations();
    case 10: return criterion_sampling(options);
    default: throw std::invalid_argument("unknown criterion " + std::to_string(id));
    }
}

}  // namespace

std::string format_line(const CriterionResult& r)
{
    return std::string(r.pass ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.title + ": " + r.detail;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options, const CriterionSink& sink)
{
    std::set<int> selected(options.criteria.begin(), options.criteria.end());
    if (selected.empty())
        for (int id = 1; id <= kCriterionCount; ++id) selected.insert(id);
    for (int id : selected)
        if (id < 1 || id > kCriterionCount) throw std::invalid_argument("unknown criterion " + std::to_string(id));

    std::vector<CriterionResult> results;
    std::vector<int> replay;
    for (int id : selected) {
        if (id == kCriterionCount) break;
        results.push_back(run_one(id, options));
        replay.push_back(id);
        if (sink) sink(results.back());
    }
    if (selected.count(kCriterionCount)) {
        auto start = std::chrono::steady_clock::now();
        CriterionResult r{kCriterionCount, true, "Determinism", "", 0};
        std::vector<std::string> first;
        if (replay.empty()) {
            for (int id = 1; id < kCriterionCount; ++id) replay.push_back(id);
            for (int id : replay) first.push_back(format_line(run_one(id, options)));
        } else {
            for (const auto& res : results) first.push_back(format_line(res));
        }
        long differing = 0;
        for (size_t k = 0; k < replay.size(); ++k)
            if (format_line(run_one(replay[k], options)) != first[k]) ++differing;
        r.pass = differing == 0;
        r.detail = "second run of " + std::to_string(replay.size()) + " criteria with seed " +
                   std::to_string(options.seed) + ": " + std::to_string(differing) + " lines differ";
        r.seconds = seconds_since(start);
        results.push_back(r);
        if (sink) sink(r);
    }
    return results;
}

}  // namespace selmat
