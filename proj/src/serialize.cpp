#include "selmat/serialize.hpp"

#include <sstream>

namespace selmat {

std::string to_string(const GammaProduct& g)
{
    std::ostringstream out;
    out << to_string(g.prefactor());
    for (const auto& [arg, e] : g.factors()) {
        out << "*Gamma(" << to_string(arg) << ")";
        if (e != 1) out << "^" << e;
    }
    return out.str();
}

std::string to_string(const Exact& e)
{
    return std::visit([](const auto& v) { return to_string(v); }, e);
}

Json exact_json(const Rational& r)
{
    Json j;
    j["exact"] = to_string(r);
    j["float"] = to_double(r);
    return j;
}

Json exact_json(const Exact& e)
{
    Approx a = to_float(e);
    Json j;
    j["exact"] = to_string(e);
    j["float"] = a.value;
    j["log_abs"] = a.log_value;
    j["sign"] = a.sign;
    return j;
}

Json to_json(const MomentReport& r)
{
    Json j;
    j["ensemble"] = r.ensemble.name();
    j["n"] = r.n;
    j["convention"] = to_string(r.convention);
    j["M2"] = exact_json(r.M2);
    j["M4"] = exact_json(r.M4);
    j["M22"] = exact_json(r.M22);
    if (r.M11) j["M11"] = exact_json(*r.M11);
    j["var"] = exact_json(r.var);
    j["sigma2"] = exact_json(r.sigma2);
    return j;
}

std::string to_string(SelfAdjointField f)
{
    return f == SelfAdjointField::Hermitian ? "hermitian" : "real-symmetric";
}

std::string to_string(FullField f)
{
    return f == FullField::Complex ? "complex" : "real";
}

Json to_json(const CovarianceReport& r)
{
    Json j;
    j["field"] = to_string(r.field);
    j["n"] = r.n;
    j["convention"] = to_string(r.convention);
    j["diag_variance"] = exact_json(r.diag_variance);
    j["diag_diag_covariance"] = exact_json(r.diag_diag_covariance);
    j["offdiag_variance"] = exact_json(r.offdiag_variance);
    j["entry_square_mean"] = exact_json(r.entry_square_mean);
    j["eig_trace_direction"] = exact_json(r.eig_trace_direction);
    j["eig_bulk"] = exact_json(r.eig_bulk);
    j["condition_number"] = exact_json(r.condition_number);
    j["zero_pattern_exact"] = r.zero_pattern_exact;
    j["structural_identity"] = r.structural_identity;
    return j;
}

Json to_json(const CorrelationReport& r)
{
    Json j;
    j["field"] = to_string(r.field);
    j["n"] = r.n;
    j["second_moment"] = exact_json(r.second_moment);
    j["second_moment_sq"] = exact_json(r.second_moment_sq);
    j["cross"] = exact_json(r.cross);
    j["same_row"] = exact_json(r.same_row);
    j["same_column"] = exact_json(r.same_column);
    j["fourth_moment"] = exact_json(r.fourth_moment);
    return j;
}

Json to_json(const RationalFunction& f)
{
    Json j;
    j["text"] = f.to_string("n");
    Json num = Json::array(), den = Json::array();
    for (const auto& c : f.num.coeffs) num.push_back(to_string(c));
    for (const auto& c : f.den.coeffs) den.push_back(to_string(c));
    j["num"] = num;
    j["den"] = den;
    return j;
}

Json to_json(const oracle::SampleEstimate& s)
{
    Json j;
    j["mean"] = s.mean;
    j["stderr"] = s.std_error;
    j["n_samples"] = s.n_samples;
    j["seed"] = s.seed;
    Json d;
    d["acceptance_rate"] = s.acceptance_rate;
    d["effective_sample_size"] = s.effective_sample_size;
    d["batches"] = s.batches;
    if (!s.warning.empty()) d["warning"] = s.warning;
    j["diagnostics"] = d;
    return j;
}

Json to_json(const oracle::QuadratureResult& q)
{
    Json j;
    j["value"] = q.value;
    j["error"] = q.error;
    j["points_per_axis"] = q.points_per_axis;
    return j;
}

}  // namespace selmat
