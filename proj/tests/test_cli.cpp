#include "doctest.h"

#include "selmat/exact.hpp"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::vector<json> records;
};

Run run(const std::string& args)
{
    Run r;
    std::string cmd = std::string(SELMAT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty() && line[0] == '{') r.records.push_back(json::parse(line));
    return r;
}

// every "exact" string in a record parses back to a rational with the same text
void check_exact_strings(const json& j)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.key() == "exact" && it.value().is_string() && it.value().get<std::string>().find("Gamma") == std::string::npos)
                CHECK(selmat::to_string(selmat::parse_rational(it.value().get<std::string>())) == it.value().get<std::string>());
            check_exact_strings(it.value());
        }
    } else if (j.is_array()) {
        for (const auto& x : j) check_exact_strings(x);
    }
}

}  // namespace

TEST_CASE("config header is echoed first")
{
    Run r = run("moments --ensemble hermitian --n 4");
    CHECK(r.code == 0);
    REQUIRE(r.records.size() == 2);
    CHECK(r.records[0]["config"]["command"] == "moments");
    CHECK(r.records[0]["config"]["flags"]["--n"] == "4");
    for (const auto& rec : r.records) check_exact_strings(rec);
}

TEST_CASE("variance in the printed convention")
{
    Run r = run("variance --ensemble hermitian --convention paper --n 50");
    CHECK(r.code == 0);
    REQUIRE(r.records.size() == 3);
    const auto& var = r.records[1]["var"];
    CHECK(var["exact"].get<std::string>().find('/') != std::string::npos);
    CHECK(std::abs(var["float"].get<double>() - 1.0 / 32) <= 1.0 / 50);
    CHECK(std::abs(r.records[2]["limit"]["float"].get<double>() - 1.0 / 32) < 1e-8);
}

TEST_CASE("negative correlation record")
{
    Run r = run("negcorr --field c --n 10");
    CHECK(r.code == 0);
    REQUIRE(r.records.size() == 2);
    CHECK(r.records[1]["cross"] == "1/399");
    CHECK(r.records[1]["same_row"] == "1/420");
    CHECK(r.records[1]["second_moment_sq"] == "1/400");
}

TEST_CASE("weingarten values")
{
    Run r = run("weingarten orthogonal --k 2 --coset-type 2 --z 5");
    CHECK(r.code == 0);
    REQUIRE(r.records.size() == 2);
    CHECK(r.records[1]["value"]["exact"] == "-1/140");
    Run u = run("weingarten unitary --k 2 --cycle-type 1,1 --z 4");
    CHECK(u.records.at(1)["value"]["exact"] == "1/15");
}

TEST_CASE("engine subcommands")
{
    CHECK(run("selberg --n 2 --u 1 --w 1 --kappa 1").records.at(1)["I0"]["exact"] == "1/6");
    CHECK(run("aomoto --n 2 --m1 1 --m2 1").records.at(1)["ratio"]["exact"] == "1/3");
    CHECK(run("kadell --lambda 1,1 --n 2").records.at(1)["ratio"]["exact"] == "1/6");
    CHECK(run("jack principal --lambda 2 --kappa 1 --n 2").records.at(1)["value"]["exact"] == "3");
    Run j = run("jack expand --lambda 2 --kappa 1/2");
    CHECK(j.code == 0);
    CHECK(j.records.size() == 5);
    Run a = run("asympt --quantity P2 --kappa 1 --order 2");
    CHECK(a.code == 0);
    auto e = a.records.at(1)["expansion"];
    CHECK(e.at(0)["coeff"]["exact"] == "1/8");
    CHECK(e.at(1)["coeff"]["exact"] == "0");
    CHECK(e.at(2)["coeff"]["exact"] == "-1/32");
    Run rb = run("remark-beta --beta 6 --n 10,20");
    CHECK(rb.records.back()["expected"]["exact"] == "1/384");
    Run c = run("covariance --field sym --n 5 --convention paper");
    CHECK(c.records.at(1)["zero_pattern_exact"] == true);
    for (const auto& rec : c.records) check_exact_strings(rec);
}

TEST_CASE("oracle subcommands are deterministic")
{
    Run a = run("oracle sample --ensemble sym --n 2 --count 5000 --seed 3");
    Run b = run("oracle sample --ensemble sym --n 2 --count 5000 --seed 3");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.records.size() == 4);
    CHECK(a.records[1]["estimate"]["seed"] == 3);
    Run q = run("oracle quad --n 2 --kappa 1/2");
    CHECK(std::abs(q.records.at(1)["quadrature"]["value"].get<double>() - 1.0 / 3) < 1e-8);
    Run h = run("oracle haar --group orthogonal --n 3 --count 2000 --seed 1");
    CHECK(h.code == 0);
    CHECK(h.records.size() == 3);
}

TEST_CASE("csv output")
{
    Run r = run("--format csv negcorr --field r --n 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("cross,same_row") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(run("--bogus").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("moments --ensemble nope").code == 2);
    CHECK(run("selberg --n 2 --u -1").code == 2);
    CHECK(run("covariance --field x --n 3").code == 2);
    CHECK(run("verify --criteria 7,9").code == 0);
    CHECK(run("verify --criteria 10 --accepted 1000").code == 1);
}
