#include "liesym/acceptance.hpp"
#include "liesym/cli.hpp"
#include "liesym_golden.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto selftest = [](std::ostream& out) {
        liesym::acceptance::CliRunner runner = [](const std::vector<std::string>& a, std::ostream& o,
                                                  std::ostream& e) { return liesym::cli::run(a, o, e); };
        auto results = liesym::acceptance::run_all(liesym::acceptance::parse_golden(liesym::golden::kCliCases), runner);
        return liesym::acceptance::report(results, out);
    };
    return liesym::cli::run(args, std::cout, std::cerr, selftest);
}
