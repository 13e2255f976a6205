#ifndef CODIM_BOUNDS_HPP
#define CODIM_BOUNDS_HPP

#include <string>
#include <vector>

#include "codim/numeric.hpp"

namespace codim {

/// (n, d) together with the radius K_n = (n - d)/2.
struct BoundParams {
  int n;
  int d;
  Rational radius;
};

/// Throws DomainError unless n >= d >= 2.
BoundParams make_bound_params(int n, int d);

/// (d - 1)^{2n}.
BigInt classic_bound(int n, int d);

/// #B^(K_n) with K_n = (n - d)/2; requires n >= d >= 2.
BigInt theorem_bound(int n, int d);

/// Least n with (d - 1)^{2n} < n!.
int crossover_n(int d);

/// Least m with ((d1 - 1)^2 (d2 - 1)^2)^m < m!: an identity degree for a
/// tensor product of algebras with identities of degrees d1 and d2.
int tensor_identity_degree(int d1, int d2);

struct AsymptoticConstants {
  double q;            // prod_{j >= 1} (1 - 2^{-j}), truncated
  int truncation_j;    // number of factors used
};

/// The first `terms` factors of the infinite product.
AsymptoticConstants q_partial_product(int terms);

/// Multiplies factors until one changes the product by less than
/// `tolerance`.
AsymptoticConstants q_constant(double tolerance = 1e-15);

/// Point estimate of I_n(n - k): 2^{2n-k-1} Q / sqrt(n pi).
struct AsymptoticEstimate {
  double value;       // +inf when the estimate overflows a double
  double log_value;   // natural logarithm, always finite
  bool overflow;      // true when only log_value is meaningful
};

AsymptoticEstimate asymptotic_In(int n, int k, double q);
AsymptoticEstimate asymptotic_In(int n, int k);

/// n! - (2^{2n-K} - 2^{n-1}) with K = floor((n - d)/2). Signed; negative
/// for small n.
BigInt phi(int n, int d);

enum class Winner { kClassic, kTheorem, kTie };

std::string to_string(Winner winner);

struct BoundRow {
  int n;
  BigInt classic;
  BigInt theorem;
  BigInt phi;
  BigInt factorial;
  Winner winner;
};

struct BoundReport {
  int d;
  int crossover;  // n(d)
  std::vector<BoundRow> rows;

  /// Rows with d <= n < n(d), where the classic bound exceeds n!.
  std::vector<int> small_codimension_region() const;
  /// Header "n,classic,theorem,phi,factorial,winner" then one line per row.
  std::string to_csv() const;
  std::string to_json() const;
};

BoundReport compare_bounds(int d, int n_max);

}  // namespace codim

#endif  // CODIM_BOUNDS_HPP
