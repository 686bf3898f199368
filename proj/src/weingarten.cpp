#include "selmat/weingarten.hpp"

#include <mutex>

namespace selmat {

Rational c_lambda(const Partition& lambda, const Rational& z)
{
    Rational c(1);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda[i - 1]; ++j) c *= z + j - i;
    return c;
}

Rational c_lambda_prime(const Partition& lambda, const Rational& z)
{
    Rational c(1);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda[i - 1]; ++j) c *= z + 2 * j - i - 1;
    return c;
}

namespace {

Rational unitary_sum(const Partition& cycle, const Rational& z, const Rational* w, PolePolicy policy)
{
    int k = cycle.weight();
    if (k > 6) throw std::invalid_argument("unitary Weingarten supports k <= 6");
    Partition identity_type(std::vector<int>(k, 1));
    Rational s(0);
    for (const auto& lambda : partitions_of(k)) {
        Rational c = c_lambda(lambda, z);
        if (w) c *= c_lambda(lambda, *w);
        if (c == 0) {
            if (policy == PolePolicy::Strict)
                throw PoleAtInteger("C_" + to_string(lambda) + " vanishes at the parameter");
            continue;
        }
        s += Rational(character(lambda, identity_type) * character(lambda, cycle)) / c;
    }
    return s / factorial(k);
}

std::mutex zonal_mutex;
std::map<int, std::vector<Permutation>> hyperoctahedral_cache;
std::map<std::pair<Partition, Partition>, Rational> zonal_cache;  // (lambda, coset type)

const std::vector<Permutation>& cached_hyperoctahedral(int k)
{
    std::lock_guard<std::mutex> lock(zonal_mutex);
    auto it = hyperoctahedral_cache.find(k);
    if (it == hyperoctahedral_cache.end()) it = hyperoctahedral_cache.emplace(k, hyperoctahedral(k)).first;
    return it->second;
}

Partition doubled(const Partition& lambda)
{
    std::vector<int> parts;
    for (int p : lambda.parts()) parts.push_back(2 * p);
    return Partition(parts);
}

Permutation coset_representative(const Partition& coset)
{
    for (const auto& pp : pair_partitions(coset.weight())) {
        Permutation s = pp.as_permutation();
        if (coset_type(s) == coset) return s;
    }
    throw std::logic_error("no pair partition of the requested coset type");
}

bool delta(const std::vector<int>& i, const std::vector<int>& ip, const Permutation& pi)
{
    for (int s = 1; s <= pi.degree(); ++s)
        if (i[pi(s) - 1] != ip[s - 1]) return false;
    return true;
}

bool delta_prime(const std::vector<int>& i, const Permutation& sigma)
{
    for (int s = 1; 2 * s <= sigma.degree(); ++s)
        if (i[sigma(2 * s - 1) - 1] != i[sigma(2 * s) - 1]) return false;
    return true;
}

std::vector<Permutation> pair_permutations(int k)
{
    std::vector<Permutation> out;
    for (const auto& pp : pair_partitions(k)) out.push_back(pp.as_permutation());
    return out;
}

const Rational& trace_at(const TraceMoments& traces, const Partition& type)
{
    auto it = traces.find(type);
    if (it == traces.end()) throw std::invalid_argument("missing trace moment for type " + to_string(type));
    return it->second;
}

}  // namespace

Rational wg_unitary(const Partition& cycle, const Rational& z, PolePolicy policy)
{
    return unitary_sum(cycle, z, nullptr, policy);
}

Rational wg_unitary(const Partition& cycle, const Rational& z, const Rational& w, PolePolicy policy)
{
    return unitary_sum(cycle, z, &w, policy);
}

Rational wg_unitary(const Permutation& pi, const Rational& z) { return wg_unitary(cycle_type(pi), z); }

Rational zonal_spherical(const Partition& lambda, const Permutation& sigma)
{
    int k = lambda.weight();
    if (sigma.degree() != 2 * k) throw std::invalid_argument("sigma must lie in S_2k");
    if (k > 3) throw std::invalid_argument("zonal spherical functions support k <= 3");
    Partition type = coset_type(sigma);
    {
        std::lock_guard<std::mutex> lock(zonal_mutex);
        auto it = zonal_cache.find({lambda, type});
        if (it != zonal_cache.end()) return it->second;
    }
    const auto& H = cached_hyperoctahedral(k);
    Partition two_lambda = doubled(lambda);
    long s = 0;
    for (const auto& zeta : H) s += character(two_lambda, cycle_type(sigma * zeta));
    Rational value = Rational(s) / Rational(static_cast<long>(H.size()));
    std::lock_guard<std::mutex> lock(zonal_mutex);
    zonal_cache.emplace(std::make_pair(lambda, type), value);
    return value;
}

Rational wg_orthogonal(const Partition& coset, const Rational& z, PolePolicy policy)
{
    int k = coset.weight();
    if (k > 3) throw std::invalid_argument("orthogonal Weingarten supports k <= 3");
    Permutation rep = coset_representative(coset);
    Partition identity_type(std::vector<int>(2 * k, 1));
    Rational s(0);
    for (const auto& lambda : partitions_of(k)) {
        Rational c = c_lambda_prime(lambda, z);
        if (c == 0) {
            if (policy == PolePolicy::Strict)
                throw PoleAtInteger("C'_" + to_string(lambda) + " vanishes at the parameter");
            continue;
        }
        s += character(doubled(lambda), identity_type) * zonal_spherical(lambda, rep) / c;
    }
    return s * power(Rational(2), k) * factorial(k) / factorial(2 * k);
}

Rational wg_orthogonal(const Permutation& sigma, const Rational& z) { return wg_orthogonal(coset_type(sigma), z); }

Rational conj_invariant_moment_unitary(const std::vector<int>& i, const std::vector<int>& j, long n,
                                       const TraceMoments& traces)
{
    if (i.size() != j.size()) throw std::invalid_argument("index sequences differ in length");
    int k = static_cast<int>(i.size());
    auto perms = all_permutations(k);
    std::map<Partition, Rational> wg;
    Rational s(0);
    for (const auto& sigma : perms) {
        if (!delta(i, j, sigma)) continue;
        Permutation sinv = sigma.inverse();
        for (const auto& tau : perms) {
            Partition t = cycle_type(sinv * tau);
            auto it = wg.find(t);
            if (it == wg.end()) it = wg.emplace(t, wg_unitary(t, Rational(n))).first;
            s += it->second * trace_at(traces, cycle_type(tau));
        }
    }
    return s;
}

Rational conj_invariant_moment_orthogonal(const std::vector<int>& i, long n, const TraceMoments& traces)
{
    if (i.size() % 2) throw std::invalid_argument("needs an even number of indices");
    int k = static_cast<int>(i.size()) / 2;
    auto M = pair_permutations(k);
    std::map<Partition, Rational> wg;
    Rational s(0);
    for (const auto& sigma : M) {
        if (!delta_prime(i, sigma)) continue;
        Permutation sinv = sigma.inverse();
        for (const auto& tau : M) {
            Partition t = coset_type(sinv * tau);
            auto it = wg.find(t);
            if (it == wg.end()) it = wg.emplace(t, wg_orthogonal(t, Rational(n))).first;
            s += it->second * trace_at(traces, coset_type(tau));
        }
    }
    return s;
}

Rational lr_invariant_moment_unitary(const std::vector<int>& i, const std::vector<int>& ip,
                                     const std::vector<int>& j, const std::vector<int>& jp, long n, long p,
                                     const TraceMoments& traces)
{
    size_t k = i.size();
    if (ip.size() != k || j.size() != k || jp.size() != k)
        throw std::invalid_argument("index sequences differ in length");
    auto perms = all_permutations(static_cast<int>(k));
    std::map<Partition, Rational> wg;
    Rational s(0);
    for (const auto& s1 : perms) {
        if (!delta(i, ip, s1)) continue;
        Permutation s1inv = s1.inverse();
        for (const auto& s2 : perms) {
            if (!delta(j, jp, s2)) continue;
            for (const auto& tau : perms) {
                Partition t = cycle_type(tau * s1inv * s2);
                auto it = wg.find(t);
                if (it == wg.end()) it = wg.emplace(t, wg_unitary(t, Rational(n), Rational(p))).first;
                s += it->second * trace_at(traces, cycle_type(tau));
            }
        }
    }
    return s;
}

Rational lr_invariant_moment_orthogonal(const std::vector<int>& i, const std::vector<int>& j, long n, long p,
                                        const TraceMoments& traces)
{
    if (i.size() != j.size() || i.size() % 2) throw std::invalid_argument("needs two index lists of equal even length");
    int k = static_cast<int>(i.size()) / 2;
    auto M = pair_permutations(k);
    std::map<Partition, Rational> wn, wp;
    auto wg = [](std::map<Partition, Rational>& cache, const Partition& t, long z) -> const Rational& {
        auto it = cache.find(t);
        if (it == cache.end()) it = cache.emplace(t, wg_orthogonal(t, Rational(z))).first;
        return it->second;
    };
    Rational s(0);
    for (const auto& s1 : M) {
        if (!delta_prime(i, s1)) continue;
        for (const auto& s2 : M) {
            if (!delta_prime(j, s2)) continue;
            for (const auto& t1 : M) {
                const Rational& w1 = wg(wn, coset_type(s1.inverse() * t1), n);
                if (w1 == 0) continue;
                for (const auto& t2 : M) {
                    const Rational& w2 = wg(wp, coset_type(s2.inverse() * t2), p);
                    s += w1 * w2 * trace_at(traces, coset_type(t1.inverse() * t2));
                }
            }
        }
    }
    return s;
}

namespace {

// all index tuples over {1..m}^4
std::vector<std::vector<int>> index_tuples(int m)
{
    std::vector<std::vector<int>> out;
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b)
            for (int c = 1; c <= m; ++c)
                for (int d = 1; d <= m; ++d) out.push_back({a, b, c, d});
    return out;
}

}  // namespace

CovarianceReport covariance_report(SelfAdjointField field, long n, Convention convention)
{
    if (n < 2) throw std::invalid_argument("covariance report needs n >= 2");
    CovarianceReport r;
    r.field = field;
    r.n = n;
    r.convention = convention;
    int beta = field == SelfAdjointField::Hermitian ? 2 : 1;
    MomentReport m = ensemble_moments({Family::SelfAdjoint, beta}, n, convention);
    TraceMoments traces = trace_moments(m);
    int span = static_cast<int>(std::min<long>(n, 4));

    if (field == SelfAdjointField::Hermitian) {
        // E[T_{k1 l1} T_{k2 l2}]
        auto E = [&](int k1, int l1, int k2, int l2) {
            return conj_invariant_moment_unitary({k1, k2}, {l1, l2}, n, traces);
        };
        r.diag_variance = E(1, 1, 1, 1);
        r.diag_diag_covariance = E(1, 1, 2, 2);
        r.entry_square_mean = E(1, 2, 2, 1);
        Rational same_entry = E(1, 2, 1, 2);  // E[T_kl^2]
        r.offdiag_variance = r.entry_square_mean + same_entry;
        Rational imag_variance = r.entry_square_mean - same_entry;
        bool ok = same_entry == 0 && imag_variance == r.offdiag_variance;
        for (const auto& t : index_tuples(span)) {
            int k1 = t[0], l1 = t[1], k2 = t[2], l2 = t[3];
            Rational v = E(k1, l1, k2, l2);
            bool straight = k1 == l1 && k2 == l2;
            bool crossed = k1 == l2 && k2 == l1;
            if (!straight && !crossed) {
                ok = ok && v == 0;
            } else if (straight) {
                ok = ok && v == (k1 == k2 ? r.diag_variance : r.diag_diag_covariance);
            } else {
                ok = ok && v == r.entry_square_mean;
            }
        }
        r.zero_pattern_exact = ok;
        r.structural_identity = r.diag_variance == r.diag_diag_covariance + r.entry_square_mean;
    } else {
        auto E = [&](int a, int b, int c, int d) { return conj_invariant_moment_orthogonal({a, b, c, d}, n, traces); };
        r.diag_variance = E(1, 1, 1, 1);
        r.diag_diag_covariance = E(1, 1, 2, 2);
        r.entry_square_mean = E(1, 2, 1, 2);
        r.offdiag_variance = 2 * r.entry_square_mean;
        bool ok = true;
        for (const auto& t : index_tuples(span)) {
            int a = t[0], b = t[1], c = t[2], d = t[3];
            Rational v = E(a, b, c, d);
            bool both_diag = a == b && c == d;
            bool same_pair = (a == c && b == d) || (a == d && b == c);
            if (both_diag) {
                ok = ok && v == (a == c ? r.diag_variance : r.diag_diag_covariance);
            } else if (same_pair) {
                ok = ok && v == r.entry_square_mean;
            } else {
                ok = ok && v == 0;
            }
        }
        r.zero_pattern_exact = ok;
        r.structural_identity = r.diag_variance == r.diag_diag_covariance + 2 * r.entry_square_mean;
    }
    r.eig_trace_direction = r.diag_variance + (n - 1) * r.diag_diag_covariance;
    r.eig_bulk = r.diag_variance - r.diag_diag_covariance;
    Rational hi = std::max(r.eig_trace_direction, r.eig_bulk);
    Rational lo = std::min(r.eig_trace_direction, r.eig_bulk);
    if (lo <= 0) throw std::domain_error("covariance is not positive definite");
    r.condition_number = hi / lo;
    return r;
}

CorrelationReport correlation_report(FullField field, long n)
{
    if (n < 2) throw std::invalid_argument("correlation report needs n >= 2");
    CorrelationReport r;
    r.field = field;
    r.n = n;
    int beta = field == FullField::Complex ? 2 : 1;
    MomentReport m = ensemble_moments({Family::FullMatrix, beta}, n);
    TraceMoments traces = trace_moments(m);
    if (field == FullField::Complex) {
        auto E4 = [&](std::vector<int> i, std::vector<int> j) {
            return lr_invariant_moment_unitary(i, i, j, j, n, n, traces);
        };
        r.second_moment = lr_invariant_moment_unitary({1}, {1}, {1}, {1}, n, n, traces);
        r.cross = E4({1, 2}, {1, 2});
        r.same_row = E4({1, 1}, {1, 2});
        r.same_column = E4({1, 2}, {1, 1});
        r.fourth_moment = E4({1, 1}, {1, 1});
    } else {
        auto E = [&](std::vector<int> i, std::vector<int> j) {
            return lr_invariant_moment_orthogonal(i, j, n, n, traces);
        };
        r.second_moment = E({1, 1}, {1, 1});
        r.cross = E({1, 1, 2, 2}, {1, 1, 2, 2});
        r.same_row = E({1, 1, 1, 1}, {1, 1, 2, 2});
        r.same_column = E({1, 1, 2, 2}, {1, 1, 1, 1});
        r.fourth_moment = E({1, 1, 1, 1}, {1, 1, 1, 1});
    }
    r.second_moment_sq = r.second_moment * r.second_moment;
    return r;
}

}  // namespace selmat
