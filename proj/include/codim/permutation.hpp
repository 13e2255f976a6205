#ifndef CODIM_PERMUTATION_HPP
#define CODIM_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "codim/errors.hpp"

namespace codim {

/// An element of S_n in one-line notation. Positions and values are 1-based
/// in every public accessor; `image()[i - 1]` is sigma(i).
///
/// The default ordering is the dictionary order on the monomials
/// x_{sigma(1)} ... x_{sigma(n)}, i.e. lexicographic on the image sequence.
class Permutation {
 public:
  /// Validates that `image` is a bijection of {1..n}; throws ValidationError.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  /// The element of maximal length: [n, n-1, ..., 1].
  static Permutation reversal(int n);
  /// Parses comma separated one-line notation such as "2,1,4,3".
  static Permutation parse(std::string_view text);

  int degree() const { return static_cast<int>(image_.size()); }
  /// sigma(position), 1-based.
  int at(int position) const { return image_[position - 1]; }
  std::span<const int> image() const { return image_; }
  bool is_identity() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  std::vector<int> image_;
};

/// Validating factory; same as the constructor.
Permutation make_permutation(std::vector<int> sequence);

/// An ordered position pair (i, j), 1 <= i < j <= n.
struct PositionPair {
  int first;
  int second;
  friend auto operator<=>(const PositionPair&, const PositionPair&) = default;
};

/// The descent (inversion) set R_sigma. Pairs are kept sorted
/// lexicographically and without duplicates.
class InversionSet {
 public:
  InversionSet(int n, std::vector<PositionPair> pairs);

  int degree() const { return n_; }
  const std::vector<PositionPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool contains(int i, int j) const;

  /// JSON array of [i,j] pairs, e.g. [[1,2],[3,4]].
  std::string to_json() const;

  friend bool operator==(const InversionSet& a, const InversionSet& b) {
    return a.n_ == b.n_ && a.pairs_ == b.pairs_;
  }

 private:
  int n_;
  std::vector<PositionPair> pairs_;
  std::vector<bool> matrix_;  // n*n membership table, row-major, 0-based
};

/// Raised by from_inversion_set when a pair is out of range or one of the two
/// axioms fails. The witness triple is 1-based (i < j < k).
class InvalidDescentSetError : public ValidationError {
 public:
  enum class Axiom { kRange, kTransitivity, kInterpolation };

  InvalidDescentSetError(Axiom axiom, int i, int j, int k);

  Axiom axiom() const { return axiom_; }
  /// Offending positions; for kRange only the first two are meaningful.
  std::tuple<int, int, int> witness() const { return {i_, j_, k_}; }

 private:
  Axiom axiom_;
  int i_;
  int j_;
  int k_;
};

InversionSet inversion_set(const Permutation& p);

/// |sigma| = #R_sigma.
int word_length(const Permutation& p);

/// Breadth-first distance from the identity in the Cayley graph of S_n for
/// the adjacent transpositions. Oracle for word_length; n <= 6.
int cayley_distance_bfs(const Permutation& p);

/// The unique permutation whose inversion set is `r`.
Permutation from_inversion_set(const InversionSet& r);

/// Lexicographically least i_1 < ... < i_d (1-based) with
/// sigma(i_1) > ... > sigma(i_d), or nullopt when sigma is d-good.
std::optional<std::vector<int>> find_d_bad_witness(const Permutation& p,
                                                   int d);

/// Length of the longest strictly decreasing subsequence of the image.
int longest_decreasing_subsequence(const Permutation& p);

bool is_d_good(const Permutation& p, int d);

/// Dictionary order on monomials; throws DomainError when degrees differ.
std::strong_ordering dictionary_compare(const Permutation& p,
                                        const Permutation& q);

/// Number of d-good permutations in S_n by exhaustive count; n <= 9.
std::uint64_t count_d_good(int n, int d);

/// Calls `visit` on every element of S_n in dictionary order.
void for_each_permutation(int n,
                          const std::function<void(const Permutation&)>& visit);

/// All elements of S_n in dictionary order.
std::vector<Permutation> all_permutations(int n);

}  // namespace codim

#endif  // CODIM_PERMUTATION_HPP
