#ifndef ULRICH_CLI_HPP
#define ULRICH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ulrich {

/// Parsed command line. Exactly one subcommand; bound >= 1 when present;
/// format is "json" (the stable contract) or "table" (human oriented).
struct CliConfig {
    std::string subcommand; // info | ideal | enumerate | verify | suite | construct-double
    std::vector<long long> semigroup_gens;
    std::vector<long long> ideal_gens;
    long long bound = -1; // -1: subcommand default
    long long max_frobenius = 12;
    long long b = 0; // construct double parameter
    bool include_parameters = false;
    std::string format = "json";
    int verbosity = 0;
};

/// Executes a validated config. Results go to `out` as one JSON document
/// (or a table); problems to `err`. Returns 0 when all checks pass, 1 when
/// some report has pass = false, 2 on usage or validation errors.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (including the ULRICH_WINDOW_FACTOR environment variable)
/// and runs. Same exit codes; bad input never produces a stack trace.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ulrich

#endif
