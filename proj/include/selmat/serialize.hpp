#pragma once

#include "selmat/exact.hpp"
#include "selmat/moments.hpp"
#include "selmat/oracle.hpp"
#include "selmat/weingarten.hpp"

#include "json.hpp"

#include <string>

namespace selmat {

using Json = nlohmann::ordered_json;

// "Gamma(1/2)^2*Gamma(3/4)^-1*5/7" style text for a Gamma product
std::string to_string(const GammaProduct& g);
std::string to_string(const Exact& e);

// {"exact": "p/q", "float": x}
Json exact_json(const Rational& r);
// adds "log_abs" and "sign" so huge or tiny products survive the double mirror
Json exact_json(const Exact& e);

Json to_json(const MomentReport& r);
Json to_json(const CovarianceReport& r);
Json to_json(const CorrelationReport& r);
Json to_json(const RationalFunction& f);
Json to_json(const oracle::SampleEstimate& s);
Json to_json(const oracle::QuadratureResult& q);

std::string to_string(SelfAdjointField f);
std::string to_string(FullField f);

}  // namespace selmat
