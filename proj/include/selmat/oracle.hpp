#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace selmat::oracle {

struct UnsupportedDimension : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// xoshiro256** seeded through SplitMix64; one independent stream per (seed, index)
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream = 0);
    std::uint64_t next();
    double uniform();         // [0, 1)
    double uniform(double lo, double hi);
    double normal();

private:
    std::uint64_t s_[4];
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// SELMAT_THREADS if set, otherwise the hardware concurrency
int worker_threads();

// runs body(i) for i in [0, count) on worker threads; body must only touch slot i of its outputs
void parallel_for(int count, const std::function<void(int)>& body);

struct GaussRule {
    std::vector<double> nodes;    // on [0, 1]
    std::vector<double> weights;
};

GaussRule gauss_legendre(int points);

using Payload = std::function<double(const std::vector<double>&)>;

// int payload(t) prod t^(u-1) (1-t)^(w-1) prod |t_i - t_j|^(2 kappa) over [0,1]^n
struct QuadratureSpec {
    int n = 1;
    int points_per_axis = 24;
    double u = 1, w = 1, kappa = 1;
    Payload payload;  // empty means 1
    bool symmetric_payload = false;
};

// Integrates over the ordered sector t_1 < ... < t_n (payload summed over all orderings)
// after t = sin^2(pi x / 2) and a collapsed-cube map onto the simplex; the fine rule
// gives the value, the difference to a coarser rule gives the error estimate.

struct QuadratureResult {
    double value = 0;
    double error = 0;  // |fine - coarse|
    int points_per_axis = 0;
};

QuadratureResult quadrature(const QuadratureSpec& spec);

// one pass over the nodes for several payloads sharing the weight
std::vector<QuadratureResult> quadrature_many(const QuadratureSpec& spec, const std::vector<Payload>& payloads,
                                              const std::vector<bool>& symmetric);

struct SampleEstimate {
    double mean = 0;
    double std_error = 0;
    long n_samples = 0;
    std::uint64_t seed = 0;
    double acceptance_rate = 0;
    double effective_sample_size = 0;
    int batches = 0;
    std::string warning;
};

// batch-means estimate from equally sized batches
SampleEstimate batch_means(const std::vector<double>& sums, const std::vector<double>& sums_sq, long per_batch);

enum class BallEnsemble { Hermitian, RealSymmetric, RealFull, ComplexFull };

struct SmallMatrix {
    int n = 0;
    std::complex<double> a[16];
    std::complex<double> operator()(int i, int j) const { return a[(i - 1) * n + (j - 1)]; }  // 1-based
};

using MatrixStatistic = std::function<double(const SmallMatrix&)>;

// uniform samples from the operator-norm unit ball by rejection from the entrywise box
std::vector<SmallMatrix> rejection_sample_ball(BallEnsemble e, int n, long count, std::uint64_t seed);

// estimates E[stat] for each statistic from `accepted` samples split over fixed chunks
std::vector<SampleEstimate> rejection_estimate(BallEnsemble e, int n, long accepted, std::uint64_t seed,
                                               const std::vector<MatrixStatistic>& stats, int chunks = 64);

bool in_operator_ball(const SmallMatrix& m, bool self_adjoint);

// density prod_{i<j} |x_i^a - x_j^a|^b prod |x_i|^c on [-1,1]^n
struct McmcSpec {
    int a = 1;
    double b = 2;
    double c = 0;
    int n = 2;
    long sweeps = 20000;     // after burn-in, per chain
    long burn_in = 10000;    // sweeps
    int chains = 4;
    int batches_per_chain = 10;
    std::uint64_t seed = 1;
};

using VectorStatistic = std::function<double(const std::vector<double>&)>;

std::vector<SampleEstimate> mcmc_eigenvalue_sample(const McmcSpec& spec, const std::vector<VectorStatistic>& stats);

enum class HaarGroup { Unitary, Orthogonal };

// n x n row-major
std::vector<std::complex<double>> haar_sample(HaarGroup g, int n, Rng& rng);

using HaarStatistic = std::function<double(const std::vector<std::complex<double>>&, int n)>;

std::vector<SampleEstimate> haar_estimate(HaarGroup g, int n, long samples, std::uint64_t seed,
                                          const std::vector<HaarStatistic>& stats, int chunks = 32);

}  // namespace selmat::oracle
