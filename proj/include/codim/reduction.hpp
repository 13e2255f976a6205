#ifndef CODIM_REDUCTION_HPP
#define CODIM_REDUCTION_HPP

#include <set>
#include <string>
#include <vector>

#include "codim/numeric.hpp"
#include "codim/permutation.hpp"

namespace codim {

enum class ReductionMode { kClassic, kMain };

std::string to_string(ReductionMode mode);

/// Support-level record of a rewriting closure. Each step replaces a
/// monomial by the support of the right-hand side produced by the identity.
struct ReductionTrace {
  struct Step {
    Permutation parent;
    std::vector<Permutation> children;
  };

  ReductionMode mode;
  int n;
  int d;
  std::vector<Permutation> sources;
  std::vector<Step> steps;             // sorted by parent
  std::size_t visited = 0;             // distinct permutations touched
  int max_depth = 0;                   // longest rewrite chain, in edges
  std::set<Permutation> terminal_support;
  std::vector<std::string> falsifications;
  /// Classic: number of d-good permutations. Main: #B^(K_n).
  BigInt reference_count = 0;

  bool ok() const { return falsifications.empty(); }
  /// Nodes, edges and a summary object; edges omitted when summary_only.
  std::string to_json(bool summary_only = false) const;
};

/// Rewrites a d-bad monomial through the lexicographically least witness:
/// blocks w_1..w_d starting at the witness positions are permuted by every
/// non-identity tau while w_0 stays in front. Children come in the
/// lexicographic order of tau. Throws DomainError when p is d-good.
std::vector<Permutation> classic_step(const Permutation& p, int d);

/// Closure of classic_step from every d-bad permutation of S_n;
/// 2 <= d <= n <= 7.
ReductionTrace classic_closure(int n, int d);

/// Rewrites a monomial of word length below K_n = (n - d)/2 using the first
/// chunk-preserving decomposition into d pieces. Throws DomainError when the
/// length precondition fails and FalsificationError when no decomposition
/// exists.
std::vector<Permutation> main_step(const Permutation& p, int d);

/// Closure of main_step from every permutation in B(K_n), expanding only
/// children that remain inside the ball; 2 <= d <= n <= 8.
ReductionTrace main_closure(int n, int d);

}  // namespace codim

#endif  // CODIM_REDUCTION_HPP
