#include "selmat/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace selmat::oracle {

namespace {

std::uint64_t splitmix64(std::uint64_t& x)
{
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

constexpr double kPi = 3.14159265358979323846;

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t x = seed;
    std::uint64_t mix = splitmix64(x) ^ (stream * 0xD1B54A32D192ED03ull);
    for (auto& s : s_) s = splitmix64(mix);
}

std::uint64_t Rng::next()
{
    std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal()
{
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2 * kPi * u2);
    have_spare_ = true;
    return r * std::cos(2 * kPi * u2);
}

int worker_threads()
{
    if (const char* env = std::getenv("SELMAT_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void parallel_for(int count, const std::function<void(int)>& body)
{
    int threads = std::min(worker_threads(), count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) body(i);
        });
    for (auto& th : pool) th.join();
}

GaussRule gauss_legendre(int points)
{
    if (points < 1) throw std::invalid_argument("need at least one node");
    GaussRule rule;
    rule.nodes.resize(points);
    rule.weights.resize(points);
    for (int i = 0; i < points; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (points + 0.5));
        double dp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= points; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = points * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        double p0 = 1, p1 = x;
        for (int k = 2; k <= points; ++k) {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = points * (x * p1 - p0) / (x * x - 1);
        // map [-1,1] -> [0,1]
        rule.nodes[points - 1 - i] = 0.5 * (x + 1);
        rule.weights[points - 1 - i] = 1.0 / ((1 - x * x) * dp * dp);
    }
    return rule;
}

namespace {

std::vector<double> sector_integrals(const QuadratureSpec& spec, int points, const std::vector<Payload>& payloads,
                                     const std::vector<bool>& symmetric)
{
    int n = spec.n;
    GaussRule rule = gauss_legendre(points);
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    double nfact = static_cast<double>(perms.size());
    size_t P = payloads.size();
    long total = 1;
    for (int i = 0; i < n; ++i) total *= points;

    std::vector<double> acc(P, 0.0);
    std::vector<int> idx(n, 0);
    std::vector<double> x(n), t(n), tp(n);
    for (long count = 0; count < total; ++count) {
        long rem = count;
        double wgt = 1;
        for (int i = 0; i < n; ++i) {
            idx[i] = static_cast<int>(rem % points);
            rem /= points;
            wgt *= rule.weights[idx[i]];
        }
        // collapsed cube onto 0 < x_1 < ... < x_n < 1
        x[n - 1] = rule.nodes[idx[n - 1]];
        for (int i = n - 2; i >= 0; --i) x[i] = rule.nodes[idx[i]] * x[i + 1];
        for (int i = 1; i < n; ++i) wgt *= x[i];
        for (int i = 0; i < n; ++i) {
            double s = std::sin(kPi * x[i] / 2), c = std::cos(kPi * x[i] / 2);
            t[i] = s * s;
            // t^(u-1) (1-t)^(w-1) dt/dx
            wgt *= kPi * std::pow(s, 2 * spec.u - 1) * std::pow(c, 2 * spec.w - 1);
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) wgt *= std::pow(t[j] - t[i], 2 * spec.kappa);
        if (wgt == 0) continue;
        for (size_t p = 0; p < P; ++p) {
            double f;
            if (!payloads[p]) {
                f = nfact;
            } else if (symmetric[p]) {
                f = nfact * payloads[p](t);
            } else {
                f = 0;
                for (const auto& perm : perms) {
                    for (int i = 0; i < n; ++i) tp[i] = t[perm[i]];
                    f += payloads[p](tp);
                }
            }
            acc[p] += wgt * f;
        }
    }
    return acc;
}

}  // namespace

std::vector<QuadratureResult> quadrature_many(const QuadratureSpec& spec, const std::vector<Payload>& payloads,
                                              const std::vector<bool>& symmetric)
{
    if (spec.n < 1 || spec.n > 4) throw UnsupportedDimension("quadrature supports 1 <= n <= 4");
    if (spec.points_per_axis < 8) throw std::invalid_argument("points_per_axis must be at least 8");
    if (symmetric.size() != payloads.size()) throw std::invalid_argument("symmetric flags must match payloads");
    int fine = spec.points_per_axis;
    int coarse = std::max(6, fine * 3 / 4);
    auto hi = sector_integrals(spec, fine, payloads, symmetric);
    auto lo = sector_integrals(spec, coarse, payloads, symmetric);
    std::vector<QuadratureResult> out(payloads.size());
    for (size_t p = 0; p < payloads.size(); ++p) {
        out[p].value = hi[p];
        out[p].error = std::fabs(hi[p] - lo[p]);
        out[p].points_per_axis = fine;
    }
    return out;
}

QuadratureResult quadrature(const QuadratureSpec& spec)
{
    return quadrature_many(spec, {spec.payload}, {spec.symmetric_payload})[0];
}

SampleEstimate batch_means(const std::vector<double>& sums, const std::vector<double>& sums_sq, long per_batch)
{
    SampleEstimate e;
    int B = static_cast<int>(sums.size());
    e.batches = B;
    e.n_samples = per_batch * B;
    double total = std::accumulate(sums.begin(), sums.end(), 0.0);
    double total_sq = std::accumulate(sums_sq.begin(), sums_sq.end(), 0.0);
    e.mean = total / e.n_samples;
    double ss = 0;
    for (double s : sums) {
        double m = s / per_batch - e.mean;
        ss += m * m;
    }
    double sd = B > 1 ? std::sqrt(ss / (B - 1)) : 0.0;
    e.std_error = sd / std::sqrt(static_cast<double>(B));
    double naive = total_sq / e.n_samples - e.mean * e.mean;
    e.effective_sample_size = e.std_error > 0 ? naive / (e.std_error * e.std_error) : static_cast<double>(e.n_samples);
    return e;
}

bool in_operator_ball(const SmallMatrix& m, bool self_adjoint)
{
    int n = m.n;
    std::complex<double> A[16];
    auto cholesky_ok = [n](std::complex<double>* a) {
        std::complex<double> L[16] = {};
        for (int j = 0; j < n; ++j) {
            double d = a[j * n + j].real();
            for (int k = 0; k < j; ++k) d -= std::norm(L[j * n + k]);
            if (!(d > 0)) return false;
            double ljj = std::sqrt(d);
            L[j * n + j] = ljj;
            for (int i = j + 1; i < n; ++i) {
                std::complex<double> s = a[i * n + j];
                for (int k = 0; k < j; ++k) s -= L[i * n + k] * std::conj(L[j * n + k]);
                L[i * n + j] = s / ljj;
            }
        }
        return true;
    };
    if (self_adjoint) {
        for (int sign : {1, -1}) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) A[i * n + j] = (i == j ? 1.0 : 0.0) - static_cast<double>(sign) * m.a[i * n + j];
            if (!cholesky_ok(A)) return false;
        }
        return true;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> s = (i == j) ? 1.0 : 0.0;
            for (int k = 0; k < n; ++k) s -= m.a[i * n + k] * std::conj(m.a[j * n + k]);
            A[i * n + j] = s;
        }
    return cholesky_ok(A);
}

namespace {

void propose(BallEnsemble e, int n, Rng& rng, SmallMatrix& m)
{
    m.n = n;
    switch (e) {
    case BallEnsemble::Hermitian:
        for (int i = 0; i < n; ++i) {
            m.a[i * n + i] = rng.uniform(-1, 1);
            for (int j = i + 1; j < n; ++j) {
                double re = rng.uniform(-1, 1), im = rng.uniform(-1, 1);
                m.a[i * n + j] = {re, im};
                m.a[j * n + i] = {re, -im};
            }
        }
        break;
    case BallEnsemble::RealSymmetric:
        for (int i = 0; i < n; ++i) {
            m.a[i * n + i] = rng.uniform(-1, 1);
            for (int j = i + 1; j < n; ++j) {
                double v = rng.uniform(-1, 1);
                m.a[i * n + j] = v;
                m.a[j * n + i] = v;
            }
        }
        break;
    case BallEnsemble::RealFull:
        for (int i = 0; i < n * n; ++i) m.a[i] = rng.uniform(-1, 1);
        break;
    case BallEnsemble::ComplexFull:
        for (int i = 0; i < n * n; ++i) {
            double re = rng.uniform(-1, 1), im = rng.uniform(-1, 1);
            m.a[i] = {re, im};
        }
        break;
    }
}

bool self_adjoint(BallEnsemble e) { return e == BallEnsemble::Hermitian || e == BallEnsemble::RealSymmetric; }

}  // namespace

std::vector<SmallMatrix> rejection_sample_ball(BallEnsemble e, int n, long count, std::uint64_t seed)
{
    if (n < 1 || n > 4) throw UnsupportedDimension("rejection sampling supports 1 <= n <= 4");
    Rng rng(seed);
    std::vector<SmallMatrix> out;
    SmallMatrix m;
    while (static_cast<long>(out.size()) < count) {
        propose(e, n, rng, m);
        if (in_operator_ball(m, self_adjoint(e))) out.push_back(m);
    }
    return out;
}

std::vector<SampleEstimate> rejection_estimate(BallEnsemble e, int n, long accepted, std::uint64_t seed,
                                               const std::vector<MatrixStatistic>& stats, int chunks)
{
    if (n < 1 || n > 4) throw UnsupportedDimension("rejection sampling supports 1 <= n <= 4");
    if (chunks < 20) throw std::invalid_argument("batch means need at least 20 chunks");
    long per_chunk = (accepted + chunks - 1) / chunks;
    size_t S = stats.size();
    std::vector<std::vector<double>> sums(S, std::vector<double>(chunks)), sums_sq = sums;
    std::vector<long> proposals(chunks, 0);
    bool sa = self_adjoint(e);
    parallel_for(chunks, [&](int c) {
        Rng rng(seed, static_cast<std::uint64_t>(c));
        SmallMatrix m;
        std::vector<double> s(S, 0.0), s2(S, 0.0);
        long got = 0, tried = 0;
        while (got < per_chunk) {
            propose(e, n, rng, m);
            ++tried;
            if (!in_operator_ball(m, sa)) continue;
            ++got;
            for (size_t k = 0; k < S; ++k) {
                double v = stats[k](m);
                s[k] += v;
                s2[k] += v * v;
            }
        }
        for (size_t k = 0; k < S; ++k) {
            sums[k][c] = s[k];
            sums_sq[k][c] = s2[k];
        }
        proposals[c] = tried;
    });
    long tried = std::accumulate(proposals.begin(), proposals.end(), 0L);
    double rate = static_cast<double>(per_chunk * chunks) / static_cast<double>(tried);
    std::vector<SampleEstimate> out;
    for (size_t k = 0; k < S; ++k) {
        SampleEstimate est = batch_means(sums[k], sums_sq[k], per_chunk);
        est.seed = seed;
        est.acceptance_rate = rate;
        if (rate < 1e-6) est.warning = "LowAcceptance";
        out.push_back(est);
    }
    return out;
}

namespace {

double log_density_change(const McmcSpec& s, const std::vector<double>& x, int i, double y)
{
    double d = 0;
    double xi_a = std::pow(x[i], s.a), y_a = std::pow(y, s.a);
    for (int j = 0; j < s.n; ++j) {
        if (j == i) continue;
        double xj_a = std::pow(x[j], s.a);
        d += s.b * (std::log(std::fabs(y_a - xj_a)) - std::log(std::fabs(xi_a - xj_a)));
    }
    if (s.c != 0) d += s.c * (std::log(std::fabs(y)) - std::log(std::fabs(x[i])));
    return d;
}

}  // namespace

std::vector<SampleEstimate> mcmc_eigenvalue_sample(const McmcSpec& spec, const std::vector<VectorStatistic>& stats)
{
    if (spec.n < 1 || spec.n > 64) throw UnsupportedDimension("MCMC supports 1 <= n <= 64");
    if (spec.burn_in < 10000) throw std::invalid_argument("burn-in must be at least 10^4 sweeps");
    if (spec.chains * spec.batches_per_chain < 20) throw std::invalid_argument("need at least 20 batches");
    if (spec.sweeps % spec.batches_per_chain) throw std::invalid_argument("sweeps must split evenly into batches");
    size_t S = stats.size();
    int B = spec.chains * spec.batches_per_chain;
    long per_batch = spec.sweeps / spec.batches_per_chain;
    std::vector<std::vector<double>> sums(S, std::vector<double>(B)), sums_sq = sums;
    std::vector<long> accepted(spec.chains), tried(spec.chains);

    parallel_for(spec.chains, [&](int chain) {
        Rng rng(spec.seed, static_cast<std::uint64_t>(chain));
        int n = spec.n;
        std::vector<double> x(n);
        for (int i = 0; i < n; ++i) x[i] = -1 + (2.0 * i + 1 + 0.5 * rng.uniform()) / (n + 1);
        double width = 0.5;
        auto sweep = [&](long& acc, long& prop) {
            for (int i = 0; i < n; ++i) {
                double y = x[i] + width * (2 * rng.uniform() - 1);
                ++prop;
                if (y <= -1 || y >= 1) continue;
                double d = log_density_change(spec, x, i, y);
                if (d >= 0 || rng.uniform() < std::exp(d)) {
                    x[i] = y;
                    ++acc;
                }
            }
        };
        // adapt toward 0.3 acceptance, then freeze the width
        long acc = 0, prop = 0;
        for (long s = 1; s <= spec.burn_in; ++s) {
            sweep(acc, prop);
            if (s % 50 == 0) {
                double rate = static_cast<double>(acc) / static_cast<double>(prop);
                width *= rate > 0.3 ? 1.1 : 1 / 1.1;
                width = std::clamp(width, 1e-4, 2.0);
                acc = prop = 0;
            }
        }
        acc = prop = 0;
        for (int b = 0; b < spec.batches_per_chain; ++b) {
            std::vector<double> s(S, 0.0), s2(S, 0.0);
            for (long k = 0; k < per_batch; ++k) {
                sweep(acc, prop);
                for (size_t q = 0; q < S; ++q) {
                    double v = stats[q](x);
                    s[q] += v;
                    s2[q] += v * v;
                }
            }
            for (size_t q = 0; q < S; ++q) {
                sums[q][chain * spec.batches_per_chain + b] = s[q];
                sums_sq[q][chain * spec.batches_per_chain + b] = s2[q];
            }
        }
        accepted[chain] = acc;
        tried[chain] = prop;
    });

    double rate = static_cast<double>(std::accumulate(accepted.begin(), accepted.end(), 0L))
                  / static_cast<double>(std::accumulate(tried.begin(), tried.end(), 0L));
    std::vector<SampleEstimate> out;
    for (size_t q = 0; q < S; ++q) {
        SampleEstimate e = batch_means(sums[q], sums_sq[q], per_batch);
        e.seed = spec.seed;
        e.acceptance_rate = rate;
        if (rate < 0.1 || rate > 0.7) e.warning = "NonErgodic";
        out.push_back(e);
    }
    return out;
}

std::vector<std::complex<double>> haar_sample(HaarGroup g, int n, Rng& rng)
{
    if (n < 1 || n > 64) throw UnsupportedDimension("Haar sampling supports 1 <= n <= 64");
    Eigen::MatrixXcd Z(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (g == HaarGroup::Unitary) {
                double re = rng.normal(), im = rng.normal();
                Z(i, j) = std::complex<double>(re, im) / std::sqrt(2.0);
            } else {
                Z(i, j) = rng.normal();
            }
        }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(Z);
    Eigen::MatrixXcd Q = qr.householderQ();
    Eigen::MatrixXcd R = qr.matrixQR();
    std::vector<std::complex<double>> out(static_cast<size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        std::complex<double> d = R(j, j);
        std::complex<double> phase = std::abs(d) > 0 ? d / std::abs(d) : 1.0;
        if (g == HaarGroup::Orthogonal) phase = phase.real() < 0 ? -1.0 : 1.0;
        for (int i = 0; i < n; ++i) out[i * n + j] = Q(i, j) * phase;
    }
    if (g == HaarGroup::Orthogonal)
        for (auto& v : out) v = v.real();
    return out;
}

std::vector<SampleEstimate> haar_estimate(HaarGroup g, int n, long samples, std::uint64_t seed,
                                          const std::vector<HaarStatistic>& stats, int chunks)
{
    if (chunks < 20) throw std::invalid_argument("batch means need at least 20 chunks");
    long per_chunk = (samples + chunks - 1) / chunks;
    size_t S = stats.size();
    std::vector<std::vector<double>> sums(S, std::vector<double>(chunks)), sums_sq = sums;
    parallel_for(chunks, [&](int c) {
        Rng rng(seed, static_cast<std::uint64_t>(c));
        std::vector<double> s(S, 0.0), s2(S, 0.0);
        for (long k = 0; k < per_chunk; ++k) {
            auto U = haar_sample(g, n, rng);
            for (size_t q = 0; q < S; ++q) {
                double v = stats[q](U, n);
                s[q] += v;
                s2[q] += v * v;
            }
        }
        for (size_t q = 0; q < S; ++q) {
            sums[q][c] = s[q];
            sums_sq[q][c] = s2[q];
        }
    });
    std::vector<SampleEstimate> out;
    for (size_t q = 0; q < S; ++q) {
        SampleEstimate e = batch_means(sums[q], sums_sq[q], per_chunk);
        e.seed = seed;
        e.acceptance_rate = 1;
        out.push_back(e);
    }
    return out;
}

}  // namespace selmat::oracle
