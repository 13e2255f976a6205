#ifndef CODIM_CLI_HPP
#define CODIM_CLI_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "codim/reduction.hpp"

namespace codim {

/// Process exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification or falsification
inline constexpr int kExitUsage = 2;    // usage or precondition error

enum class OutputFormat { kTable, kCsv, kJson };

/// "table", "csv" or "json"; throws ValidationError otherwise.
OutputFormat parse_format(std::string_view text);

// Each command writes its rendering to `out` and returns an exit code.
// Usage and precondition problems surface as exceptions; run_cli maps them
// to kExitUsage.

int cmd_mahonian(int n, bool check, OutputFormat format, std::ostream& out);
int cmd_bounds(int d, int n_max, OutputFormat format, std::ostream& out);
int cmd_crossover(int d_max, OutputFormat format, std::ostream& out);
int cmd_verify(int n_max, const std::vector<std::string>& suites,
               OutputFormat format, std::ostream& out);
int cmd_greedy(const std::string& perm, OutputFormat format, std::ostream& out);
/// Single rewrite step of `perm`.
int cmd_reduce_step(const std::string& perm, int d, ReductionMode mode,
                    OutputFormat format, std::ostream& out);
/// Full closure over S_n.
int cmd_reduce_closure(int n, int d, ReductionMode mode, bool summary_only,
                       OutputFormat format, std::ostream& out);

/// Parses the command line (argv[0] is the program name) and dispatches.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);
/// Same, with the arguments after the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace codim

#endif  // CODIM_CLI_HPP
