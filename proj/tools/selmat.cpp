#include "selmat/combinat.hpp"
#include "selmat/exact.hpp"
#include "selmat/jack.hpp"
#include "selmat/moments.hpp"
#include "selmat/oracle.hpp"
#include "selmat/selberg.hpp"
#include "selmat/serialize.hpp"
#include "selmat/verify.hpp"
#include "selmat/weingarten.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <set>

using namespace selmat;

namespace {

constexpr long kLimitStart = 25;
constexpr int kLimitLevels = 6;

struct Flags {
    std::string format = "json";
    std::string convention = "forced";
    std::uint64_t seed = 20240917;

    long n = 3;
    std::string n_list = "20,50,100,200";
    std::string u = "1", w = "1", kappa = "1";
    long m1 = 0, m2 = 0, m3 = 0;
    std::string lambda = "1";
    std::string ensemble = "hermitian";
    std::string field;
    std::string quantity = "P2";
    int order = 3;
    std::string beta = "2";
    std::string group = "unitary";
    int k = 2;
    std::string type;
    std::string z = "3";
    std::string second_z;
    int points = 24;
    long count = 100000;
    std::vector<int> criteria;
    long accepted = 1000000;
};

class Emitter {
public:
    explicit Emitter(bool csv) : csv_(csv) {}

    void emit(const Json& record)
    {
        if (!csv_) {
            std::cout << record.dump() << "\n";
            return;
        }
        std::vector<std::pair<std::string, std::string>> cells;
        flatten(record, "", cells);
        std::string header, row;
        for (size_t i = 0; i < cells.size(); ++i) {
            header += (i ? "," : "") + cells[i].first;
            row += (i ? "," : "") + cells[i].second;
        }
        if (header != last_header_) std::cout << header << "\n";
        last_header_ = header;
        std::cout << row << "\n";
    }

private:
    static void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out)
    {
        if (j.is_object()) {
            for (auto it = j.begin(); it != j.end(); ++it)
                flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        } else if (j.is_string()) {
            out.emplace_back(prefix, j.get<std::string>());
        } else {
            out.emplace_back(prefix, j.dump());
        }
    }

    bool csv_;
    std::string last_header_;
};

std::vector<long> parse_n_list(const std::string& text)
{
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(std::stol(item));
        } else {
            long lo = std::stol(item.substr(0, dots)), hi = std::stol(item.substr(dots + 2));
            if (hi < lo) throw std::invalid_argument("empty range " + item);
            for (long n = lo; n <= hi; ++n) out.push_back(n);
        }
    }
    if (out.empty()) throw std::invalid_argument("empty n-list");
    return out;
}

SelfAdjointField parse_self_adjoint(const std::string& s)
{
    if (s == "her" || s == "hermitian" || s == "c") return SelfAdjointField::Hermitian;
    if (s == "sym" || s == "real-symmetric" || s == "r") return SelfAdjointField::RealSymmetric;
    throw std::invalid_argument("unknown field " + s);
}

FullField parse_full(const std::string& s)
{
    if (s == "c" || s == "complex") return FullField::Complex;
    if (s == "r" || s == "real") return FullField::Real;
    throw std::invalid_argument("unknown field " + s);
}

Json config_json(const CLI::App& app, const std::string& command)
{
    Json j;
    j["command"] = command;
    Json flags;
    for (const CLI::App* level = &app; level;) {
        for (const CLI::Option* opt : level->get_options()) {
            if (opt->get_name() == "--help" || opt->get_name().empty()) continue;
            auto results = opt->results();
            std::string value;
            if (results.empty()) {
                value = opt->get_default_str();
            } else {
                for (size_t i = 0; i < results.size(); ++i) value += (i ? "," : "") + results[i];
            }
            flags[opt->get_name()] = value;
        }
        const CLI::App* next = nullptr;
        for (const CLI::App* sub : level->get_subcommands()) next = sub;
        level = next;
    }
    j["flags"] = flags;
    if (const char* threads = std::getenv("SELMAT_THREADS")) j["SELMAT_THREADS"] = threads;
    Json header;
    header["config"] = j;
    return header;
}

Json limit_record(const std::function<Rational(long)>& f)
{
    Rational limit = richardson_limit(f, kLimitStart, kLimitLevels);
    Json j;
    j["limit"] = exact_json(limit);
    Json ns = Json::array();
    for (int k = 0; k < kLimitLevels; ++k) ns.push_back(kLimitStart << k);
    j["richardson_n"] = ns;
    return j;
}

Rational asympt_sample(const Flags& f, long n)
{
    if (f.quantity == "P2") return shifted_moment_ratio(ShiftedPayload::Square, n, parse_rational(f.kappa));
    if (f.quantity == "P11") return shifted_moment_ratio(ShiftedPayload::CrossLinear, n, parse_rational(f.kappa));
    if (f.quantity == "P22") return shifted_moment_ratio(ShiftedPayload::CrossSquare, n, parse_rational(f.kappa));
    if (f.quantity == "P4") return shifted_moment_ratio(ShiftedPayload::Fourth, n, parse_rational(f.kappa));
    if (f.quantity == "var")
        return ensemble_moments(parse_ensemble(f.ensemble), n, parse_convention(f.convention)).var;
    if (f.quantity == "sigma2") return ensemble_moments(parse_ensemble(f.ensemble), n).sigma2;
    if (f.quantity == "remark") return beta_remark_combination(n, parse_rational(f.beta));
    throw std::invalid_argument("unknown quantity " + f.quantity);
}

std::vector<oracle::MatrixStatistic> ball_statistics()
{
    return {
        [](const oracle::SmallMatrix& m) { return std::norm(m(1, 1)); },
        [](const oracle::SmallMatrix& m) { return (m(1, 1) * std::conj(m(2, 2))).real(); },
        [](const oracle::SmallMatrix& m) { return std::norm(m(1, 2)); },
    };
}

oracle::BallEnsemble parse_ball(const std::string& s)
{
    if (s == "her" || s == "hermitian") return oracle::BallEnsemble::Hermitian;
    if (s == "sym" || s == "real-symmetric") return oracle::BallEnsemble::RealSymmetric;
    if (s == "real-full") return oracle::BallEnsemble::RealFull;
    if (s == "complex-full") return oracle::BallEnsemble::ComplexFull;
    throw std::invalid_argument("unknown ensemble " + s);
}

int run(const std::string& command, const std::string& sub, const Flags& f, Emitter& out)
{
    Convention convention = parse_convention(f.convention);
    if (command == "selberg") {
        SelbergParams p{f.n, parse_rational(f.u), parse_rational(f.w), parse_rational(f.kappa)};
        Json j;
        j["I0"] = exact_json(Exact(selberg_I0(p).normalized()));
        out.emit(j);
    } else if (command == "aomoto") {
        SelbergParams p{f.n, parse_rational(f.u), parse_rational(f.w), parse_rational(f.kappa)};
        Json j;
        j["m1"] = f.m1;
        j["m2"] = f.m2;
        j["m3"] = f.m3;
        j["ratio"] = exact_json(aomoto_general_ratio(p, f.m1, f.m2, f.m3));
        out.emit(j);
    } else if (command == "jack" && sub == "expand") {
        Partition lambda = parse_partition(f.lambda);
        Rational kappa = parse_rational(f.kappa);
        for (const auto& [mu, c] : jack_in_monomials(lambda, kappa).coeffs) {
            Json j;
            j["lambda"] = to_string(lambda);
            j["monomial"] = to_string(mu);
            j["coeff"] = exact_json(c);
            out.emit(j);
        }
        for (const auto& [target, c] : monomial_to_jack(lambda, kappa)) {
            Json j;
            j["monomial"] = to_string(lambda);
            j["jack"] = to_string(target);
            j["coeff"] = exact_json(c);
            out.emit(j);
        }
    } else if (command == "jack" && sub == "principal") {
        Partition lambda = parse_partition(f.lambda);
        Rational kappa = parse_rational(f.kappa);
        Json j;
        j["lambda"] = to_string(lambda);
        j["n"] = f.n;
        j["value"] = exact_json(principal_specialization(lambda, kappa, f.n));
        j["gamma_ratio"] = exact_json(principal_specialization_gamma(lambda, kappa, f.n));
        out.emit(j);
    } else if (command == "kadell") {
        Partition lambda = parse_partition(f.lambda);
        Json j;
        j["lambda"] = to_string(lambda);
        j["ratio"] =
            exact_json(kadell_ratio(lambda, f.n, parse_rational(f.u), parse_rational(f.w), parse_rational(f.kappa)));
        out.emit(j);
    } else if (command == "moments") {
        MomentReport r = ensemble_moments(parse_ensemble(f.ensemble), f.n, convention);
        Json j = to_json(r);
        Json traces;
        for (const auto& [mu, v] : trace_moments(r)) traces[to_string(mu)] = exact_json(v);
        j["trace_moments"] = traces;
        out.emit(j);
    } else if (command == "variance" || command == "sigma") {
        EnsembleSpec e = parse_ensemble(f.ensemble);
        bool var = command == "variance";
        auto value = [&](long n) {
            MomentReport r = ensemble_moments(e, n, convention);
            return var ? r.var : r.sigma2;
        };
        for (long n : parse_n_list(f.n_list)) {
            Json j;
            j["ensemble"] = e.name();
            j["n"] = n;
            j[var ? "var" : "sigma2"] = exact_json(value(n));
            out.emit(j);
        }
        Json j = limit_record(value);
        j["ensemble"] = e.name();
        out.emit(j);
    } else if (command == "asympt") {
        std::vector<std::pair<long, Rational>> samples;
        long first = f.quantity == "P22" || f.quantity == "P4" || f.quantity == "remark" ? 4 : 2;
        for (long n = first; n <= first + 36; ++n) samples.emplace_back(n, asympt_sample(f, n));
        RationalFunction fn = reconstruct_rational(samples);
        Expansion e = expand_at_infinity(fn, f.order);
        Json j;
        j["quantity"] = f.quantity;
        j["function"] = to_json(fn);
        Json coeffs = Json::array();
        for (int p = e.top; p >= -f.order; --p) {
            Json c;
            c["power"] = p;
            c["coeff"] = exact_json(e.at_power(p));
            coeffs.push_back(c);
        }
        j["expansion"] = coeffs;
        out.emit(j);
    } else if (command == "remark-beta") {
        Rational beta = parse_rational(f.beta);
        for (long n : parse_n_list(f.n_list)) {
            Json j;
            j["beta"] = to_string(beta);
            j["n"] = n;
            j["value"] = exact_json(beta_remark_combination(n, beta));
            out.emit(j);
        }
        Json j = limit_record([&](long n) { return beta_remark_combination(n, beta); });
        j["expected"] = exact_json(Rational(1 / (64 * beta)));
        out.emit(j);
    } else if (command == "covariance") {
        out.emit(to_json(covariance_report(parse_self_adjoint(f.field), f.n, convention)));
    } else if (command == "negcorr") {
        CorrelationReport r = correlation_report(parse_full(f.field), f.n);
        Json j;
        j["field"] = to_string(r.field);
        j["n"] = r.n;
        j["cross"] = to_string(r.cross);
        j["same_row"] = to_string(r.same_row);
        j["second_moment_sq"] = to_string(r.second_moment_sq);
        j["report"] = to_json(r);
        out.emit(j);
    } else if (command == "weingarten") {
        Partition type = f.type.empty() ? Partition(std::vector<int>(f.k, 1)) : parse_partition(f.type);
        if (type.weight() != f.k) throw std::invalid_argument("type must be a partition of k");
        Rational z = parse_rational(f.z);
        Json j;
        j["group"] = sub;
        j["k"] = f.k;
        j["type"] = to_string(type);
        j["z"] = to_string(z);
        if (sub == "unitary") {
            if (f.second_z.empty()) {
                j["value"] = exact_json(wg_unitary(type, z));
            } else {
                j["w"] = f.second_z;
                j["value"] = exact_json(wg_unitary(type, z, parse_rational(f.second_z)));
            }
        } else {
            j["value"] = exact_json(wg_orthogonal(type, z));
        }
        out.emit(j);
    } else if (command == "oracle" && sub == "quad") {
        oracle::QuadratureSpec spec;
        spec.n = static_cast<int>(f.n);
        spec.points_per_axis = f.points;
        spec.u = to_double(parse_rational(f.u));
        spec.w = to_double(parse_rational(f.w));
        spec.kappa = to_double(parse_rational(f.kappa));
        SelbergParams p{f.n, parse_rational(f.u), parse_rational(f.w), parse_rational(f.kappa)};
        validate(p);
        Json j;
        j["quadrature"] = to_json(oracle::quadrature(spec));
        j["exact"] = exact_json(Exact(selberg_I0(p).normalized()));
        out.emit(j);
    } else if (command == "oracle" && sub == "sample") {
        auto est = oracle::rejection_estimate(parse_ball(f.ensemble), static_cast<int>(f.n), f.count, f.seed,
                                              ball_statistics());
        const char* names[] = {"|T11|^2", "Re T11 conj T22", "|T12|^2"};
        for (size_t k = 0; k < est.size(); ++k) {
            Json j;
            j["statistic"] = names[k];
            j["estimate"] = to_json(est[k]);
            out.emit(j);
        }
    } else if (command == "oracle" && sub == "haar") {
        oracle::HaarGroup g = f.group == "orthogonal" ? oracle::HaarGroup::Orthogonal : oracle::HaarGroup::Unitary;
        if (f.group != "orthogonal" && f.group != "unitary") throw std::invalid_argument("unknown group " + f.group);
        std::vector<oracle::HaarStatistic> stats = {
            [](const std::vector<std::complex<double>>& u, int) { return std::norm(u[0]); },
            [](const std::vector<std::complex<double>>& u, int n) { return std::norm(u[0] * u[n + 1]); },
        };
        auto est = oracle::haar_estimate(g, static_cast<int>(f.n), f.count, f.seed, stats);
        const char* names[] = {"|U11|^2", "|U11 U22|^2"};
        for (size_t k = 0; k < est.size(); ++k) {
            Json j;
            j["statistic"] = names[k];
            j["estimate"] = to_json(est[k]);
            out.emit(j);
        }
    } else if (command == "verify") {
        VerifyOptions options;
        options.seed = f.seed;
        options.accepted = f.accepted;
        options.criteria = f.criteria;
        bool all = true;
        run_acceptance(options, [&](const CriterionResult& r) {
            Json j;
            j["criterion"] = r.id;
            j["pass"] = r.pass;
            j["line"] = format_line(r);
            out.emit(j);
            std::cerr << "criterion " << r.id << " took " << r.seconds << " s\n";
            all = all && r.pass;
        });
        return all ? 0 : 1;
    } else {
        throw std::invalid_argument("missing subcommand");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"selmat: exact Selberg-integral and matrix-ball moment engine"};
    app.require_subcommand(1);
    Flags f;
    app.add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--convention", f.convention, "forced or paper")
        ->check(CLI::IsMember({"forced", "paper"}))
        ->capture_default_str();
    app.add_option("--seed", f.seed, "RNG seed")->capture_default_str();

    auto add_selberg = [&](CLI::App* s) {
        s->add_option("--n", f.n, "dimension")->capture_default_str();
        s->add_option("--u", f.u, "rational u")->capture_default_str();
        s->add_option("--w", f.w, "rational w")->capture_default_str();
        s->add_option("--kappa", f.kappa, "rational kappa")->capture_default_str();
    };

    auto* selberg = app.add_subcommand("selberg", "Selberg integral as a Gamma product");
    add_selberg(selberg);
    auto* aomoto = app.add_subcommand("aomoto", "normalized Aomoto integral");
    add_selberg(aomoto);
    aomoto->add_option("--m1", f.m1)->capture_default_str();
    aomoto->add_option("--m2", f.m2)->capture_default_str();
    aomoto->add_option("--m3", f.m3)->capture_default_str();

    auto* jack = app.add_subcommand("jack", "Jack polynomials");
    jack->require_subcommand(1);
    auto* expand = jack->add_subcommand("expand", "monomial expansion and inverse");
    expand->add_option("--lambda", f.lambda, "partition, e.g. 2,1")->required();
    expand->add_option("--kappa", f.kappa)->capture_default_str();
    auto* principal = jack->add_subcommand("principal", "value at (1,...,1)");
    principal->add_option("--lambda", f.lambda)->required();
    principal->add_option("--kappa", f.kappa)->capture_default_str();
    principal->add_option("--n", f.n)->capture_default_str();

    auto* kadell = app.add_subcommand("kadell", "normalized integral of a Jack polynomial");
    add_selberg(kadell);
    kadell->add_option("--lambda", f.lambda)->required();

    auto* moments = app.add_subcommand("moments", "eigenvalue moments of a matrix ball");
    moments->add_option("--ensemble", f.ensemble)->capture_default_str();
    moments->add_option("--n", f.n)->capture_default_str();
    moments->add_option("--convention", f.convention)->check(CLI::IsMember({"forced", "paper"}));

    for (const char* name : {"variance", "sigma"}) {
        auto* s = app.add_subcommand(name, std::string(name) + " over a list of n with extrapolated limit");
        s->add_option("--ensemble", f.ensemble)->capture_default_str();
        s->add_option("--n", f.n_list, "comma list or a..b")->capture_default_str();
        s->add_option("--convention", f.convention)->check(CLI::IsMember({"forced", "paper"}));
    }

    auto* asympt = app.add_subcommand("asympt", "rational reconstruction and expansion in 1/n");
    asympt->add_option("--quantity", f.quantity, "P2, P11, P22, P4, var, sigma2 or remark")
        ->check(CLI::IsMember({"P2", "P11", "P22", "P4", "var", "sigma2", "remark"}))
        ->capture_default_str();
    asympt->add_option("--order", f.order)->capture_default_str();
    asympt->add_option("--kappa", f.kappa)->capture_default_str();
    asympt->add_option("--ensemble", f.ensemble)->capture_default_str();
    asympt->add_option("--beta", f.beta)->capture_default_str();
    asympt->add_option("--convention", f.convention)->check(CLI::IsMember({"forced", "paper"}));

    auto* remark = app.add_subcommand("remark-beta", "variance combination for general beta");
    remark->add_option("--beta", f.beta)->capture_default_str();
    remark->add_option("--n", f.n_list)->capture_default_str();

    auto* covariance = app.add_subcommand("covariance", "covariance structure of a self-adjoint ball");
    covariance->add_option("--field", f.field, "her or sym")->required()->check(CLI::IsMember({"her", "sym"}));
    covariance->add_option("--n", f.n)->capture_default_str();
    covariance->add_option("--convention", f.convention)->check(CLI::IsMember({"forced", "paper"}));

    auto* negcorr = app.add_subcommand("negcorr", "entry correlations of a full-matrix ball");
    negcorr->add_option("--field", f.field, "r or c")->required()->check(CLI::IsMember({"r", "c"}));
    negcorr->add_option("--n", f.n)->capture_default_str();

    auto* wg = app.add_subcommand("weingarten", "Weingarten function values");
    wg->require_subcommand(1);
    for (const char* name : {"unitary", "orthogonal"}) {
        auto* s = wg->add_subcommand(name);
        s->add_option("--k", f.k)->capture_default_str();
        s->add_option(std::string(name) == "unitary" ? "--cycle-type" : "--coset-type", f.type, "partition of k");
        s->add_option("--z", f.z)->capture_default_str();
        if (std::string(name) == "unitary") s->add_option("--w", f.second_z, "second parameter");
    }

    auto* oracle_cmd = app.add_subcommand("oracle", "numerical oracles");
    oracle_cmd->require_subcommand(1);
    auto* quad = oracle_cmd->add_subcommand("quad", "tensor Gauss-Legendre Selberg quadrature");
    add_selberg(quad);
    quad->add_option("--points", f.points)->capture_default_str();
    auto* sample = oracle_cmd->add_subcommand("sample", "rejection sampling of a matrix ball");
    sample->add_option("--ensemble", f.ensemble, "her, sym, real-full or complex-full")->capture_default_str();
    sample->add_option("--n", f.n)->capture_default_str();
    sample->add_option("--count", f.count, "accepted samples")->capture_default_str();
    sample->add_option("--seed", f.seed)->capture_default_str();
    auto* haar = oracle_cmd->add_subcommand("haar", "Haar matrix sampling");
    haar->add_option("--group", f.group)->check(CLI::IsMember({"unitary", "orthogonal"}))->capture_default_str();
    haar->add_option("--n", f.n)->capture_default_str();
    haar->add_option("--count", f.count)->capture_default_str();
    haar->add_option("--seed", f.seed)->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--seed", f.seed)->capture_default_str();
    verify->add_option("--accepted", f.accepted, "rejection samples per ensemble")->capture_default_str();
    verify->add_option("--criteria", f.criteria, "subset of 1..11")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string command, sub;
    for (const CLI::App* s : app.get_subcommands()) {
        command = s->get_name();
        for (const CLI::App* t : s->get_subcommands()) sub = t->get_name();
    }

    Emitter out(f.format == "csv");
    try {
        out.emit(config_json(app, sub.empty() ? command : command + " " + sub));
        int code = run(command, sub, f, out);
        std::cout.flush();
        return code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
