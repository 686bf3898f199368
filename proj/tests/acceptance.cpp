#include "selmat/verify.hpp"

#include <cstdio>
#include <iostream>

int main()
{
    selmat::VerifyOptions options;
    bool all = true;
    selmat::run_acceptance(options, [&](const selmat::CriterionResult& r) {
        std::cout << selmat::format_line(r) << std::endl;
        std::fprintf(stderr, "criterion %d took %.2f s\n", r.id, r.seconds);
        all = all && r.pass;
    });
    return all ? 0 : 1;
}
