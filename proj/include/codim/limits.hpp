#ifndef CODIM_LIMITS_HPP
#define CODIM_LIMITS_HPP

#include <string_view>

namespace codim {

// Built-in enumeration caps (largest admissible n).
inline constexpr int kBfsMaxN = 6;
inline constexpr int kCountGoodMaxN = 9;
inline constexpr int kBruteForceRowMaxN = 9;
inline constexpr int kMahonianRowMaxN = 200;
inline constexpr int kClassicClosureMaxN = 7;
inline constexpr int kMainClosureMaxN = 8;

// Returns `builtin`, lowered to the value of CODIM_MAX_N when that variable
// holds a smaller positive integer. The environment can never raise a cap.
int effective_cap(int builtin);

// Throws ScaleError when n exceeds effective_cap(builtin).
void require_within_cap(std::string_view operation, int n, int builtin);

}  // namespace codim

#endif  // CODIM_LIMITS_HPP
