#ifndef CODIM_MAHONIAN_HPP
#define CODIM_MAHONIAN_HPP

#include <string>
#include <vector>

#include "codim/numeric.hpp"

namespace codim {

/// I_n(0), ..., I_n(C(n,2)): the number of permutations of S_n with exactly
/// k inversions.
struct MahonianRow {
  int n = 0;
  std::vector<BigInt> coefficients;

  int max_inversions() const { return n * (n - 1) / 2; }
  const BigInt& at(int k) const { return coefficients.at(k); }
  BigInt sum() const;

  /// One "n,k,I_n(k)" line per coefficient, no header.
  std::string to_csv() const;
  /// {"n": n, "coefficients": ["1","3",...]}
  std::string to_json() const;

  friend bool operator==(const MahonianRow&, const MahonianRow&) = default;
};

/// Coefficients of prod_{i=1}^{n-1} (1 + z + ... + z^i); 1 <= n <= 200.
MahonianRow mahonian_row(int n);

/// Histogram of word lengths over all of S_n; n <= 9.
MahonianRow brute_force_row(int n);

/// u_j = j(3j - 1)/2.
std::int64_t pentagonal(std::int64_t j);

/// Knuth's closed form for I_n(k), valid for 0 <= k <= n.
BigInt mahonian_knuth(int n, int k);

/// #B(K) = #{sigma : |sigma| < K}.
BigInt ball_count(int n, const Rational& radius);

/// #B^(K) = #{sigma : |sigma| >= K} = sum_{k >= ceil(K)} I_n(k).
BigInt ball_complement_count(int n, const Rational& radius);

/// n! - sum_{k=0}^{floor(K)} I_n(k). Differs from ball_complement_count by
/// I_n(K) when K is an integer.
BigInt ball_complement_via_subtraction(int n, const Rational& radius);

}  // namespace codim

#endif  // CODIM_MAHONIAN_HPP
