// Acceptance runner: one PASS/FAIL line per criterion. Optional arguments
// select criterion ids; -v prints every row.
#include "gfv/estimate.hpp"
#include "gfv/suites.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <set>

int main(int argc, char** argv)
{
    bool verbose = false;
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "-v") == 0)
            verbose = true;
        else
            only.insert(std::atoi(argv[i]));
    }

    gfv::SuiteOptions opt;
    int failures = 0;
    for (const gfv::Criterion& c : gfv::criteria()) {
        if (!only.empty() && !only.count(c.id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<gfv::CheckRow> rows;
        std::string error;
        try {
            rows = gfv::criterion_rows(c.id, opt);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = error.empty() && !rows.empty() && secs < c.budget_seconds;
        for (const auto& r : rows) pass = pass && r.pass;
        if (!pass) ++failures;
        std::printf("%s criterion %2d: %s (%.2f s of %.0f s, %zu checks)\n", pass ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), secs, c.budget_seconds, rows.size());
        if (!error.empty()) std::printf("    error: %s\n", error.c_str());
        for (const auto& r : rows)
            if (verbose || !r.pass)
                std::printf("    %s %s: value %.10g target %.10g tol %.3g se %.3g\n", r.pass ? "ok  " : "FAIL",
                            r.name.c_str(), r.value, r.target, r.tolerance, r.std_error);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
