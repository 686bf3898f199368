#include "selmat/jack.hpp"

#include "selmat/selberg.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>

namespace selmat {

Rational SymPoly::coeff(const Partition& mu) const
{
    auto it = coeffs.find(mu);
    return it == coeffs.end() ? Rational(0) : it->second;
}

void SymPoly::add(const Partition& mu, const Rational& c)
{
    if (mu.weight() != degree) throw std::invalid_argument("monomial of wrong degree");
    Rational v = coeff(mu) + c;
    if (v == 0)
        coeffs.erase(mu);
    else
        coeffs[mu] = v;
}

size_t JackBasis::index(const Partition& p) const
{
    auto it = std::find(partitions.begin(), partitions.end(), p);
    if (it == partitions.end()) throw std::invalid_argument("partition of wrong degree");
    return static_cast<size_t>(it - partitions.begin());
}

namespace {

// eigenvalue up to an n-dependent shift that cancels in differences
Rational eigen_part(const Partition& p, const Rational& kappa)
{
    Rational e(0);
    for (int i = 0; i < p.length(); ++i) e += p[i] * p[i] - 2 * kappa * (i + 1) * p[i];
    return e;
}

std::vector<Rational> jack_row(const std::vector<Partition>& parts, size_t li, const Rational& kappa)
{
    const Partition& lambda = parts[li];
    std::vector<Rational> c(parts.size(), Rational(0));
    std::map<Partition, size_t> where;
    for (size_t i = 0; i < parts.size(); ++i) where[parts[i]] = i;
    c[li] = 1;
    Rational e_lambda = eigen_part(lambda, kappa);
    for (size_t mi = li + 1; mi < parts.size(); ++mi) {
        const Partition& mu = parts[mi];
        if (!dominance_leq(mu, lambda)) continue;
        const auto& m = mu.parts();
        Rational s(0);
        for (size_t i = 0; i < m.size(); ++i) {
            for (size_t j = i + 1; j < m.size(); ++j) {
                for (int t = 1; t <= m[j]; ++t) {
                    std::vector<int> nu = m;
                    nu[i] += t;
                    nu[j] -= t;
                    size_t ni = where.at(Partition(nu));
                    if (c[ni] != 0) s += 2 * kappa * (m[i] - m[j] + 2 * t) * c[ni];
                }
            }
        }
        Rational gap = e_lambda - eigen_part(mu, kappa);
        if (gap == 0) throw std::domain_error("degenerate eigenvalues in Jack recursion");
        c[mi] = s / gap;
    }
    return c;
}

std::shared_ptr<JackBasis> build_basis(const Rational& kappa, int degree)
{
    auto b = std::make_shared<JackBasis>();
    b->kappa = kappa;
    b->degree = degree;
    b->partitions = partitions_of(degree);
    size_t N = b->partitions.size();
    for (size_t i = 0; i < N; ++i) b->jack_to_monomial.push_back(jack_row(b->partitions, i, kappa));

    // upper unitriangular inverse by back substitution
    const auto& A = b->jack_to_monomial;
    std::vector<std::vector<Rational>> inv(N, std::vector<Rational>(N, Rational(0)));
    for (size_t r = 0; r < N; ++r) {
        inv[r][r] = 1;
        for (size_t c = r + 1; c < N; ++c) {
            Rational s(0);
            for (size_t k = r; k < c; ++k)
                if (inv[r][k] != 0 && A[k][c] != 0) s += inv[r][k] * A[k][c];
            inv[r][c] = -s;
        }
    }
    b->monomial_to_jack = std::move(inv);
    return b;
}

std::shared_mutex basis_mutex;
std::map<std::pair<Rational, int>, std::shared_ptr<const JackBasis>> basis_cache;

}  // namespace

std::shared_ptr<const JackBasis> jack_basis(const Rational& kappa, int degree)
{
    if (kappa <= 0) throw std::invalid_argument("kappa must be positive");
    if (degree < 0 || degree > 12) throw std::invalid_argument("Jack degree must be in 0..12");
    {
        std::shared_lock lock(basis_mutex);
        auto it = basis_cache.find({kappa, degree});
        if (it != basis_cache.end()) return it->second;
    }
    auto built = build_basis(kappa, degree);
    std::unique_lock lock(basis_mutex);
    auto [it, inserted] = basis_cache.emplace(std::make_pair(kappa, degree), built);
    return it->second;
}

SymPoly jack_in_monomials(const Partition& lambda, const Rational& kappa)
{
    auto b = jack_basis(kappa, lambda.weight());
    SymPoly p;
    p.degree = lambda.weight();
    const auto& row = b->jack_to_monomial[b->index(lambda)];
    for (size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) p.coeffs[b->partitions[i]] = row[i];
    return p;
}

std::map<Partition, Rational> monomial_to_jack(const Partition& mu, const Rational& kappa)
{
    auto b = jack_basis(kappa, mu.weight());
    std::map<Partition, Rational> out;
    const auto& row = b->monomial_to_jack[b->index(mu)];
    for (size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) out[b->partitions[i]] = row[i];
    return out;
}

Rational principal_specialization(const Partition& lambda, const Rational& kappa, long n)
{
    Rational s(0);
    for (const auto& [mu, c] : jack_in_monomials(lambda, kappa).coeffs) s += c * monomial_principal(mu, n);
    return s;
}

namespace {

GammaProduct f_n(const Partition& lambda, const Rational& kappa, long n)
{
    GammaProduct g;
    for (long i = 1; i <= n; ++i) {
        for (long j = i + 1; j <= n; ++j) {
            long d = lambda[i - 1] - lambda[j - 1];
            if (d > 0) {
                g *= pochhammer_gamma(d + (j - i) * kappa, kappa);
            } else {
                g *= make_rational(j - i, j - i + 1);
                g *= pochhammer_gamma(1 + (j - i) * kappa, kappa);
            }
        }
    }
    return g;
}

}  // namespace

Exact principal_specialization_gamma(const Partition& lambda, const Rational& kappa, long n)
{
    if (n < lambda.length()) throw std::invalid_argument("needs n >= l(lambda)");
    return gamma_product_ratio(f_n(lambda, kappa, n), f_n(Partition(), kappa, n));
}

Rational kadell_ratio(const Partition& lambda, long n, const Rational& u, const Rational& w,
                      const Rational& kappa)
{
    validate(SelbergParams{n, u, w, kappa});
    if (n < lambda.length()) return Rational(0);
    Rational r = principal_specialization(lambda, kappa, n);
    for (long i = 1; i <= n; ++i) {
        unsigned li = static_cast<unsigned>(lambda[i - 1]);
        if (li == 0) break;
        r *= pochhammer(u + (n - i) * kappa, li) / pochhammer(u + w + (2 * n - i - 1) * kappa, li);
    }
    return r;
}

}  // namespace selmat
