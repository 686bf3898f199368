#pragma once

#include "selmat/exact.hpp"

namespace selmat {

struct ParamOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexConstraint : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Weight prod t^(u-1) (1-t)^(w-1) prod |t_i - t_j|^(2 kappa) on [0,1]^n
struct SelbergParams {
    long n = 1;
    Rational u{1};
    Rational w{1};
    Rational kappa{1};
};

// throws ParamOutOfRange unless u > 0, w > 0, kappa > -min(1/n, u/(n-1), w/(n-1))
void validate(const SelbergParams& p);

GammaProduct selberg_I0(const SelbergParams& p);

// normalized integral of e_m(t)
Rational aomoto_ratio(const SelbergParams& p, long m);

// I_{m1,m2,m3} / I_0: t_1..t_{m1} times (1 - t_j) for j = m1+1-m3 .. m1+m2-m3
Rational aomoto_general_ratio(const SelbergParams& p, long m1, long m2, long m3);

}  // namespace selmat
