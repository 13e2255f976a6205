#include "codim/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "codim/errors.hpp"

namespace codim {

int effective_cap(int builtin) {
  const char* raw = std::getenv("CODIM_MAX_N");
  if (raw == nullptr) return builtin;
  int value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value <= 0) return builtin;
  return value < builtin ? value : builtin;
}

void require_within_cap(std::string_view operation, int n, int builtin) {
  const int cap = effective_cap(builtin);
  if (n > cap) {
    throw ScaleError(std::string(operation) + ": n = " + std::to_string(n) +
                     " exceeds the enumeration cap " + std::to_string(cap));
  }
}

}  // namespace codim
