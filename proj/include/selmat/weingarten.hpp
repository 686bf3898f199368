#pragma once

#include "selmat/combinat.hpp"
#include "selmat/exact.hpp"
#include "selmat/moments.hpp"

#include <map>
#include <vector>

namespace selmat {

struct PoleAtInteger : std::domain_error {
    using std::domain_error::domain_error;
};

// Filter drops lambda-terms whose C_lambda vanishes; Strict throws PoleAtInteger instead.
enum class PolePolicy { Filter, Strict };

Rational c_lambda(const Partition& lambda, const Rational& z);
Rational c_lambda_prime(const Partition& lambda, const Rational& z);

// Wg^U on S_k by cycle type (k = |cycle type|)
Rational wg_unitary(const Partition& cycle, const Rational& z, PolePolicy policy = PolePolicy::Filter);
Rational wg_unitary(const Partition& cycle, const Rational& z, const Rational& w,
                    PolePolicy policy = PolePolicy::Filter);
Rational wg_unitary(const Permutation& pi, const Rational& z);

// omega^lambda(sigma) for sigma in S_2k, |lambda| = k
Rational zonal_spherical(const Partition& lambda, const Permutation& sigma);

// Wg^O on S_2k by coset type (k = |coset type|)
Rational wg_orthogonal(const Partition& coset, const Rational& z, PolePolicy policy = PolePolicy::Filter);
Rational wg_orthogonal(const Permutation& sigma, const Rational& z);

using TraceMoments = std::map<Partition, Rational>;  // keyed by cycle or coset type

// E[T_{i1 j1} ... T_{ik jk}] for a unitarily invariant Hermitian T
Rational conj_invariant_moment_unitary(const std::vector<int>& i, const std::vector<int>& j, long n,
                                       const TraceMoments& traces);

// E[T_{i1 i2} T_{i3 i4} ...] for an orthogonally invariant real symmetric T
Rational conj_invariant_moment_orthogonal(const std::vector<int>& i, long n, const TraceMoments& traces);

// E[X_{i1 j1}..X_{ik jk} conj(X_{i'1 j'1}..X_{i'k j'k})] for a bi-unitarily invariant n x p matrix
Rational lr_invariant_moment_unitary(const std::vector<int>& i, const std::vector<int>& ip,
                                     const std::vector<int>& j, const std::vector<int>& jp, long n, long p,
                                     const TraceMoments& traces);

// E[X_{i1 j1} ... X_{i2k j2k}] for a bi-orthogonally invariant real n x p matrix
Rational lr_invariant_moment_orthogonal(const std::vector<int>& i, const std::vector<int>& j, long n, long p,
                                        const TraceMoments& traces);

enum class SelfAdjointField { Hermitian, RealSymmetric };

// Covariance of the uniform ball in the orthonormal basis of diagonal units and
// (J^{kl} + J^{lk})/sqrt2 (plus i(J^{kl} - J^{lk})/sqrt2 in the Hermitian case).
struct CovarianceReport {
    SelfAdjointField field = SelfAdjointField::Hermitian;
    long n = 0;
    Convention convention = Convention::Forced;
    Rational diag_variance;         // a = E[T_kk^2]
    Rational diag_diag_covariance;  // b = E[T_kk T_ll]
    Rational offdiag_variance;      // variance of each off-diagonal coordinate
    Rational eig_trace_direction;   // a + (n-1) b
    Rational eig_bulk;              // a - b
    Rational condition_number;
    Rational entry_square_mean;     // E[|T_kl|^2] (complex) or E[T_kl^2] (real)
    bool zero_pattern_exact = false;
    bool structural_identity = false;
};

CovarianceReport covariance_report(SelfAdjointField field, long n, Convention convention = Convention::Forced);

enum class FullField { Real, Complex };

// second and fourth entry moments of the uniform operator-norm ball of n x n matrices
struct CorrelationReport {
    FullField field = FullField::Complex;
    long n = 0;
    Rational second_moment;     // E|T_11|^2
    Rational second_moment_sq;  // (E|T_11|^2)^2
    Rational cross;             // E|T_ij|^2 |T_lr|^2, i != l, j != r
    Rational same_row;          // E|T_ij|^2 |T_ir|^2, j != r
    Rational same_column;       // E|T_ij|^2 |T_lj|^2, i != l
    Rational fourth_moment;     // E|T_11|^4
};

CorrelationReport correlation_report(FullField field, long n);

}  // namespace selmat
