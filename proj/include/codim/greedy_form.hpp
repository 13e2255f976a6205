#ifndef CODIM_GREEDY_FORM_HPP
#define CODIM_GREEDY_FORM_HPP

#include <optional>
#include <string>
#include <vector>

#include "codim/permutation.hpp"

namespace codim {

/// A nonempty subword x_{sigma(start)} ... x_{sigma(end)}, 1-based inclusive.
/// Possibly-empty subwords are spelled std::optional<Span>.
struct Span {
  int start;
  int end;

  int length() const { return end - start + 1; }
  bool contains(int position) const {
    return start <= position && position <= end;
  }
  /// The precedes relation: same start, this one ends no later.
  bool precedes(const Span& other) const {
    return start == other.start && end <= other.end;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

using MaybeSpan = std::optional<Span>;

/// Span [start, end], or nullopt when start > end.
MaybeSpan make_span(int start, int end);

/// x_sigma = w0 c rest, where c is the initial chunk.
struct InitialChunk {
  MaybeSpan prefix;
  MaybeSpan chunk;
  MaybeSpan rest;
};

InitialChunk initial_chunk(const Permutation& p);

/// Left greedy form x_sigma = w_0 c_1 w_1 ... c_k w_k.
struct GreedyForm {
  Permutation perm;
  std::vector<Span> chunks;    // c_1 .. c_k, all nonempty
  std::vector<MaybeSpan> gaps; // w_0 .. w_k, size chunks.size() + 1

  int chunk_count() const { return static_cast<int>(chunks.size()); }
  /// Index l of the chunk containing `position`, or -1 for gap positions.
  int chunk_of(int position) const;
  /// {"perm": "...", "gaps": [[s,e]|null, ...], "chunks": [[s,e], ...]}
  std::string to_json() const;
  friend bool operator==(const GreedyForm&, const GreedyForm&) = default;
};

GreedyForm left_greedy_form(const Permutation& p);

enum class PieceKind { kGap, kChunk };

struct Piece {
  Span span;
  PieceKind kind;
  int chunk_index = 0;  // 1-based index i of c'_i; 0 for gap-pieces
  friend bool operator==(const Piece&, const Piece&) = default;
};

/// A decomposition of x_sigma into consecutive pieces that preserves chunks.
struct PieceDecomposition {
  Permutation perm;
  std::vector<Piece> pieces;

  int piece_count() const { return static_cast<int>(pieces.size()); }
  int chunk_piece_count() const;  // k'
  int gap_piece_count() const;    // m
  /// [{"span":[s,e],"kind":"y"}, {"span":[s,e],"kind":"c","chunk_index":i}]
  std::string to_json() const;
};

/// Checks a sequence of spans against the chunk-preserving conditions and
/// labels the pieces; nullopt when the spans do not tile {1..n} or some
/// condition fails.
std::optional<PieceDecomposition> classify_pieces(const GreedyForm& gf,
                                                  const std::vector<Span>& spans);

/// Every chunk-preserving decomposition with exactly `pieces` pieces,
/// ordered lexicographically by the piece boundaries.
std::vector<PieceDecomposition> enumerate_chunk_preserving(const GreedyForm& gf,
                                                           int pieces);

/// First element of enumerate_chunk_preserving without building the rest.
std::optional<PieceDecomposition> first_chunk_preserving(const GreedyForm& gf,
                                                         int pieces);

/// Reorders pieces: the result reads pieces tau(1), ..., tau(p) in order.
/// `tau` must have degree equal to the piece count (DomainError otherwise).
Permutation apply_rearrangement(const PieceDecomposition& d,
                                const Permutation& tau);

/// True iff every non-identity rearrangement strictly increases the word
/// length. Requires at least two pieces and x_sigma != c_1.
bool check_growth(const PieceDecomposition& d);

struct ChunkStats {
  int chunk_count;
  int total_chunk_length;
  int word_length;
  friend bool operator==(const ChunkStats&, const ChunkStats&) = default;
};

ChunkStats chunk_stats(const Permutation& p);

}  // namespace codim

#endif  // CODIM_GREEDY_FORM_HPP
