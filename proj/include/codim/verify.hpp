#ifndef CODIM_VERIFY_HPP
#define CODIM_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace codim {

/// Outcome of one exhaustive property suite.
struct SuiteResult {
  std::string name;
  std::string description;
  int n_max = 0;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> counterexamples;  // first few failures
  std::vector<std::string> notes;            // tables and counts

  bool passed() const { return failures == 0; }
};

/// Suite names accepted by run_suite, in their canonical order.
const std::vector<std::string>& suite_names();

/// Largest n the suite enumerates.
int suite_cap(const std::string& name);

/// Runs the named suite over 1 <= n <= n_max. Throws ValidationError for an
/// unknown name and ScaleError when n_max exceeds the suite cap.
SuiteResult run_suite(const std::string& name, int n_max);

}  // namespace codim

#endif  // CODIM_VERIFY_HPP
