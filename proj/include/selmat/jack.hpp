#pragma once

#include "selmat/combinat.hpp"
#include "selmat/exact.hpp"

#include <map>
#include <memory>
#include <vector>

namespace selmat {

// Symmetric polynomial in the monomial basis; zero coefficients are not stored.
struct SymPoly {
    int degree = 0;
    std::map<Partition, Rational> coeffs;

    Rational coeff(const Partition& mu) const;
    void add(const Partition& mu, const Rational& c);
};

// Monic Jack polynomials P^{1/kappa} of one degree, rows and columns in reverse-lex order.
struct JackBasis {
    Rational kappa;
    int degree = 0;
    std::vector<Partition> partitions;
    std::vector<std::vector<Rational>> jack_to_monomial;  // [lambda][mu]
    std::vector<std::vector<Rational>> monomial_to_jack;  // [mu][lambda]

    size_t index(const Partition& p) const;
};

// cached per (kappa, degree); safe to call from several threads
std::shared_ptr<const JackBasis> jack_basis(const Rational& kappa, int degree);

SymPoly jack_in_monomials(const Partition& lambda, const Rational& kappa);
std::map<Partition, Rational> monomial_to_jack(const Partition& mu, const Rational& kappa);

// P_lambda(1^n)
Rational principal_specialization(const Partition& lambda, const Rational& kappa, long n);

// f_n[lambda] / f_n[(0)] as a reduced Gamma product; needs n >= l(lambda)
Exact principal_specialization_gamma(const Partition& lambda, const Rational& kappa, long n);

// int P_lambda h / int h with h the Selberg weight (u, w, kappa)
Rational kadell_ratio(const Partition& lambda, long n, const Rational& u, const Rational& w,
                      const Rational& kappa);

}  // namespace selmat
