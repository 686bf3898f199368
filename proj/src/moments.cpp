#include "selmat/moments.hpp"

#include "selmat/jack.hpp"
#include "selmat/selberg.hpp"

#include <sstream>

namespace selmat {

Rational EnsembleSpec::dimension(long n) const
{
    if (family == Family::SelfAdjoint) return Rational(n) + make_rational(beta * n * (n - 1), 2);
    return Rational(beta * n * n);
}

std::string EnsembleSpec::name() const
{
    static const char* self_adjoint[] = {"", "real-symmetric", "hermitian", "", "quaternionic"};
    static const char* full[] = {"", "real-full", "complex-full", "", "quaternionic-full"};
    return family == Family::SelfAdjoint ? self_adjoint[beta] : full[beta];
}

EnsembleSpec parse_ensemble(const std::string& name)
{
    for (const auto& e : all_ensembles())
        if (e.name() == name) return e;
    if (name == "her" || name == "herm") return {Family::SelfAdjoint, 2};
    if (name == "sym" || name == "symmetric") return {Family::SelfAdjoint, 1};
    throw std::invalid_argument("unknown ensemble: " + name);
}

std::vector<EnsembleSpec> all_ensembles()
{
    return {{Family::SelfAdjoint, 1}, {Family::SelfAdjoint, 2}, {Family::SelfAdjoint, 4},
            {Family::FullMatrix, 1},  {Family::FullMatrix, 2},  {Family::FullMatrix, 4}};
}

std::string to_string(Convention c) { return c == Convention::Forced ? "forced" : "paper"; }

Convention parse_convention(const std::string& name)
{
    if (name == "forced") return Convention::Forced;
    if (name == "paper") return Convention::Paper;
    throw std::invalid_argument("unknown convention: " + name);
}

Rational monomial_moment(const Partition& mu, long n, const Rational& kappa)
{
    Rational s(0);
    for (const auto& [lambda, c] : monomial_to_jack(mu, kappa)) s += c * kadell_ratio(lambda, n, 1, 1, kappa);
    return s;
}

Rational shifted_moment_ratio(ShiftedPayload payload, long n, const Rational& kappa)
{
    auto J = [&](std::initializer_list<int> parts) { return monomial_moment(Partition(parts), n, kappa); };
    const Rational quarter = make_rational(1, 4), sixteenth = make_rational(1, 16);
    if (payload != ShiftedPayload::Square && payload != ShiftedPayload::Fourth && n < 2)
        throw std::invalid_argument("two-variable payload needs n >= 2");
    switch (payload) {
    case ShiftedPayload::Square:
        return (J({2}) - J({1})) / n + quarter;
    case ShiftedPayload::CrossLinear:
        return Rational(2) / (n * (n - 1)) * J({1, 1}) - J({1}) / n + quarter;
    case ShiftedPayload::CrossSquare:
        return Rational(2) / (n * (n - 1)) * (J({2, 2}) - J({2, 1}) + J({1, 1}))
               + (J({2}) - J({1})) / (2 * n) + sixteenth;
    case ShiftedPayload::Fourth:
        return (J({4}) - 2 * J({3}) + make_rational(3, 2) * J({2}) - J({1}) / 2) / n + sixteenth;
    }
    throw std::logic_error("unreachable");
}

Rational full_matrix_moment_ratio(FullPayload payload, long n, const Rational& beta)
{
    SelbergParams p{n, beta / 2, Rational(1), beta / 2};
    Rational first = aomoto_general_ratio(p, 1, 0, 0);
    switch (payload) {
    case FullPayload::Square:
        return first;
    case FullPayload::CrossSquare:
        if (n < 2) throw std::invalid_argument("two-variable payload needs n >= 2");
        return first - aomoto_general_ratio(p, 1, 1, 0);
    case FullPayload::Fourth:
        return first - aomoto_general_ratio(p, 1, 1, 1);
    }
    throw std::logic_error("unreachable");
}

Rational full_matrix_variance_closed_form(long n, const Rational& beta)
{
    const Rational& b = beta;
    Rational N(n);
    Rational A = 1 + (2 * N - 1) * b / 2;
    Rational B = 1 + (N - 1) * b;
    Rational C = 2 + (2 * N - 1) * b / 2;
    Rational inner = (make_rational(1, 2) - b / 4) * (2 - b / 2) + b / 4 * (1 - b / 2);
    Rational first = (N * N * N * b * b / 8 + N * N * b / 2 * inner) / (C * A * B);
    Rational second = N * N * N * b * b / 8 * (b / 2 - 1) / (C * A * A * B);
    return first + second;
}

MomentReport ensemble_moments(const EnsembleSpec& e, long n, Convention convention)
{
    if (n < 2) throw std::invalid_argument("ensemble moments need n >= 2");
    MomentReport r;
    r.n = n;
    r.ensemble = e;
    r.convention = convention;
    if (e.family == Family::SelfAdjoint) {
        Rational kappa = e.kappa();
        Rational s2 = convention == Convention::Forced ? 4 : 2;
        Rational s4 = convention == Convention::Forced ? 16 : 4;
        r.M2 = s2 * shifted_moment_ratio(ShiftedPayload::Square, n, kappa);
        r.M11 = s2 * shifted_moment_ratio(ShiftedPayload::CrossLinear, n, kappa);
        r.M22 = s4 * shifted_moment_ratio(ShiftedPayload::CrossSquare, n, kappa);
        r.M4 = s4 * shifted_moment_ratio(ShiftedPayload::Fourth, n, kappa);
    } else {
        Rational beta(e.beta);
        r.M2 = full_matrix_moment_ratio(FullPayload::Square, n, beta);
        r.M22 = full_matrix_moment_ratio(FullPayload::CrossSquare, n, beta);
        r.M4 = full_matrix_moment_ratio(FullPayload::Fourth, n, beta);
    }
    Rational T2 = n * r.M2;
    r.var = n * r.M4 + n * (n - 1) * r.M22 - T2 * T2;
    r.sigma2 = e.dimension(n) * r.var / (T2 * T2);
    return r;
}

std::map<Partition, Rational> trace_moments(const MomentReport& r)
{
    long n = r.n;
    std::map<Partition, Rational> t;
    if (r.ensemble.family == Family::SelfAdjoint) {
        t[Partition{1}] = 0;
        t[Partition{1, 1}] = n * r.M2 + n * (n - 1) * *r.M11;
        t[Partition{2}] = n * r.M2;
    } else {
        t[Partition{1}] = n * r.M2;
        t[Partition{1, 1}] = n * r.M4 + n * (n - 1) * r.M22;
        t[Partition{2}] = n * r.M4;
    }
    return t;
}

Rational beta_remark_combination(long n, const Rational& beta)
{
    if (beta <= 0) throw std::invalid_argument("beta must be positive");
    if (n < 2) throw std::invalid_argument("needs n >= 2");
    Rational kappa = beta / 2;
    Rational p2 = shifted_moment_ratio(ShiftedPayload::Square, n, kappa);
    return n * shifted_moment_ratio(ShiftedPayload::Fourth, n, kappa)
           + n * (n - 1) * shifted_moment_ratio(ShiftedPayload::CrossSquare, n, kappa) - n * n * p2 * p2;
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational v(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
    return v;
}

void Polynomial::trim()
{
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Rational RationalFunction::operator()(const Rational& x) const
{
    Rational d = den(x);
    if (d == 0) throw std::domain_error("pole of rational function");
    return num(x) / d;
}

namespace {

std::string poly_string(const Polynomial& p, const std::string& var)
{
    if (p.coeffs.empty()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& c = p.coeffs[i];
        if (c == 0) continue;
        std::string mag = to_string(abs(c));
        std::string term;
        if (i == 0)
            term = mag;
        else
            term = (abs(c) == 1 ? "" : mag + "*") + var + (i > 1 ? "^" + std::to_string(i) : "");
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

// solves A x = b exactly; false when singular
bool solve(std::vector<std::vector<Rational>> A, std::vector<Rational> b, std::vector<Rational>& x)
{
    size_t N = b.size();
    for (size_t col = 0; col < N; ++col) {
        size_t piv = col;
        while (piv < N && A[piv][col] == 0) ++piv;
        if (piv == N) return false;
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (size_t r = 0; r < N; ++r) {
            if (r == col || A[r][col] == 0) continue;
            Rational f = A[r][col] / A[col][col];
            for (size_t c = col; c < N; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    x.resize(N);
    for (size_t i = 0; i < N; ++i) x[i] = b[i] / A[i][i];
    return true;
}

}  // namespace

std::string RationalFunction::to_string(const std::string& var) const
{
    std::string d = poly_string(den, var);
    if (d == "1") return poly_string(num, var);
    return "(" + poly_string(num, var) + ")/(" + d + ")";
}

RationalFunction reconstruct_rational(const std::vector<std::pair<long, Rational>>& samples, int deg_bound)
{
    int S = static_cast<int>(samples.size());
    for (int total = 0; total <= 2 * deg_bound; ++total) {
        for (int q = 0; q <= std::min(total, deg_bound); ++q) {
            int p = total - q;
            if (p > deg_bound) continue;
            int unknowns = p + 1 + q;
            if (unknowns + 1 > S) continue;
            std::vector<std::vector<Rational>> A(unknowns, std::vector<Rational>(unknowns));
            std::vector<Rational> rhs(unknowns);
            for (int r = 0; r < unknowns; ++r) {
                Rational x(samples[r].first);
                const Rational& v = samples[r].second;
                Rational xp(1);
                for (int i = 0; i <= p; ++i, xp *= x) A[r][i] = xp;
                xp = 1;
                for (int j = 0; j < q; ++j, xp *= x) A[r][p + 1 + j] = -v * xp;
                rhs[r] = v * xp;
            }
            std::vector<Rational> sol;
            if (!solve(A, rhs, sol)) continue;
            RationalFunction f;
            f.num.coeffs.assign(sol.begin(), sol.begin() + p + 1);
            f.den.coeffs.assign(sol.begin() + p + 1, sol.end());
            f.den.coeffs.push_back(1);
            f.num.trim();
            bool ok = true;
            for (const auto& [n, v] : samples) {
                Rational d = f.den(Rational(n));
                if (d == 0 || f.num(Rational(n)) / d != v) {
                    ok = false;
                    break;
                }
            }
            if (ok) return f;
        }
    }
    throw InconsistentSamples("no rational function within the degree bound fits the samples");
}

Rational Expansion::at_power(int p) const
{
    int idx = top - p;
    if (idx < 0 || idx >= static_cast<int>(coeffs.size())) return Rational(0);
    return coeffs[idx];
}

Expansion expand_at_infinity(const RationalFunction& f, int order)
{
    Expansion e;
    if (f.num.coeffs.empty()) {
        e.top = 0;
        e.coeffs.assign(order + 1, Rational(0));
        return e;
    }
    int p = f.num.degree(), q = f.den.degree();
    int shift = p - q;  // f = n^shift * sum s_i n^-i
    e.top = std::max(shift, 0);
    int count = e.top + order + 1;
    int needed = shift + order;  // s index for the power -order
    std::vector<Rational> s(std::max(needed + 1, 0));
    auto num_rev = [&](int i) { return i <= p ? f.num.coeffs[p - i] : Rational(0); };
    auto den_rev = [&](int i) { return i <= q ? f.den.coeffs[q - i] : Rational(0); };
    Rational lead = den_rev(0);
    for (int i = 0; i <= needed; ++i) {
        Rational v = num_rev(i);
        for (int j = 1; j <= i; ++j) v -= den_rev(j) * s[i - j];
        s[i] = v / lead;
    }
    e.coeffs.resize(count);
    for (int k = 0; k < count; ++k) {
        int power = e.top - k;
        int idx = shift - power;
        e.coeffs[k] = (idx >= 0 && idx <= needed) ? s[idx] : Rational(0);
    }
    return e;
}

std::vector<Rational> laurent_coefficients(const RationalFunction& f, int order)
{
    Expansion e = expand_at_infinity(f, order);
    std::vector<Rational> out;
    for (int k = 0; k <= order; ++k) out.push_back(e.at_power(-k));
    return out;
}

Rational richardson_limit(const std::function<Rational(long)>& f, long n0, int levels)
{
    std::vector<std::vector<Rational>> R(levels);
    for (int k = 0; k < levels; ++k) {
        R[k].resize(k + 1);
        R[k][0] = f(n0 << k);
        for (int j = 1; j <= k; ++j) {
            Rational w = power(Rational(2), j);
            R[k][j] = (w * R[k][j - 1] - R[k - 1][j - 1]) / (w - 1);
        }
    }
    return R[levels - 1][levels - 1];
}

}  // namespace selmat
