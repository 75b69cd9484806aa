// Runs the reproduction criteria and prints one line per criterion.

#include <burn/suite.hpp>

#include <cstdio>
#include <cstdlib>

int main(int argc, char ** argv)
{
    burn::suite::SuiteOptions opts;
    if (argc > 1)
        opts.catalog_cache = argv[1];
    opts.on_result = [](const burn::suite::CriterionResult & r) {
        std::printf("%s %2d %s: %s (%.2f s)\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(),
                    r.seconds);
        std::fflush(stdout);
    };
    int failed = 0;
    for (const auto & r : burn::suite::run_all(opts))
        failed += r.passed ? 0 : 1;
    std::printf("%d/%d criteria passed\n", burn::suite::criterion_count - failed, burn::suite::criterion_count);
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
