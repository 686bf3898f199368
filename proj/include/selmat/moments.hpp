#pragma once

#include "selmat/combinat.hpp"
#include "selmat/exact.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace selmat {

enum class Family { SelfAdjoint, FullMatrix };
enum class Convention { Forced, Paper };

struct EnsembleSpec {
    Family family = Family::SelfAdjoint;
    int beta = 2;

    int a() const { return family == Family::SelfAdjoint ? 1 : 2; }
    int b() const { return beta; }
    int c() const { return family == Family::SelfAdjoint ? 0 : beta - 1; }
    Rational kappa() const { return make_rational(beta, 2); }
    Rational dimension(long n) const;  // real dimension d_n
    std::string name() const;
};

// hermitian, real-symmetric, quaternionic, real-full, complex-full, quaternionic-full
EnsembleSpec parse_ensemble(const std::string& name);
std::vector<EnsembleSpec> all_ensembles();

std::string to_string(Convention c);
Convention parse_convention(const std::string& name);

// normalized integrals of t-monomials under the Selberg weight u = w = 1
enum class ShiftedPayload { Square, CrossLinear, CrossSquare, Fourth };

// int m_mu h / int h at u = w = 1
Rational monomial_moment(const Partition& mu, long n, const Rational& kappa);

// E[(t1-1/2)^2], E[(t1-1/2)(t2-1/2)], E[(t1-1/2)^2 (t2-1/2)^2], E[(t1-1/2)^4]
Rational shifted_moment_ratio(ShiftedPayload payload, long n, const Rational& kappa);

// singular-value payloads x1^2, x1^2 x2^2, x1^4 under f_{2,beta,beta-1} on [0,1]^n
enum class FullPayload { Square, CrossSquare, Fourth };

Rational full_matrix_moment_ratio(FullPayload payload, long n, const Rational& beta);

// closed form of n E[x1^4] + n(n-1) E[x1^2 x2^2] - n^2 E[x1^2]^2 for full matrices
Rational full_matrix_variance_closed_form(long n, const Rational& beta);

struct MomentReport {
    long n = 0;
    EnsembleSpec ensemble;
    Convention convention = Convention::Forced;
    Rational M2, M4, M22;
    std::optional<Rational> M11;  // self-adjoint only
    Rational var, sigma2;
};

MomentReport ensemble_moments(const EnsembleSpec& e, long n, Convention convention = Convention::Forced);

// E[Tr_mu] for |mu| <= 2: Tr(T) powers for self-adjoint ensembles, Tr(TT*) powers for full ones
std::map<Partition, Rational> trace_moments(const MomentReport& report);

// Var of sum (t_i - 1/2)^2 at kappa = beta/2, u = w = 1
Rational beta_remark_combination(long n, const Rational& beta);

struct Polynomial {
    std::vector<Rational> coeffs;  // ascending powers, no trailing zeros

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Rational operator()(const Rational& x) const;
    void trim();
};

struct RationalFunction {
    Polynomial num, den;  // den monic

    Rational operator()(const Rational& x) const;
    std::string to_string(const std::string& var = "n") const;
};

struct InconsistentSamples : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// smallest total degree fit with numerator and denominator degrees <= deg_bound,
// confirmed on every sample not used in the solve
RationalFunction reconstruct_rational(const std::vector<std::pair<long, Rational>>& samples, int deg_bound = 10);

// coefficients of n^top, ..., n^0, n^-1, ..., n^-order at infinity; top = max(deg num - deg den, 0)
struct Expansion {
    int top = 0;
    std::vector<Rational> coeffs;
    Rational at_power(int p) const;
};

Expansion expand_at_infinity(const RationalFunction& f, int order);
std::vector<Rational> laurent_coefficients(const RationalFunction& f, int order);

// Richardson extrapolation of f(n0), f(2 n0), ... assuming an expansion in 1/n
Rational richardson_limit(const std::function<Rational(long)>& f, long n0, int levels);

}  // namespace selmat
