#include "codim/greedy_form.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "codim/errors.hpp"

namespace codim {
namespace {

using SpanList = std::vector<std::pair<int, int>>;

// Oracle for the initial chunk straight from its three defining conditions:
// i0 from the dictionary-minimal inversion, then the least j0 such that j0 is
// the right element of some inversion and no position in [i0, j0] has a
// partner beyond j0.
std::optional<Span> oracle_initial_chunk(const Permutation& p) {
  const InversionSet set = inversion_set(p);
  if (set.size() == 0) return std::nullopt;
  const int n = p.degree();
  const int i0 = set.pairs().front().first;
  for (int j0 = i0 + 1; j0 <= n; ++j0) {
    bool is_right = false;
    for (int i = 1; i < j0; ++i) is_right = is_right || set.contains(i, j0);
    bool closed = true;
    for (int i = i0; i <= j0; ++i) {
      for (int j = j0 + 1; j <= n; ++j) closed = closed && !set.contains(i, j);
    }
    if (is_right && closed) return Span{i0, j0};
  }
  return std::nullopt;
}

// All ways to cut [start, end] into consecutive nonempty pieces.
std::vector<SpanList> compositions(int start, int end) {
  std::vector<SpanList> out;
  const int length = end - start + 1;
  if (length <= 0) return {SpanList{}};
  for (unsigned mask = 0; mask < (1u << (length - 1)); ++mask) {
    SpanList pieces;
    int s = start;
    for (int t = 0; t < length - 1; ++t) {
      if (mask & (1u << t)) {
        pieces.push_back({s, start + t});
        s = start + t + 1;
      }
    }
    pieces.push_back({s, end});
    out.push_back(pieces);
  }
  return out;
}

std::vector<SpanList> product(const std::vector<SpanList>& prefixes,
                              const std::vector<SpanList>& suffixes) {
  std::vector<SpanList> out;
  for (const auto& a : prefixes) {
    for (const auto& b : suffixes) {
      SpanList joined = a;
      joined.insert(joined.end(), b.begin(), b.end());
      out.push_back(joined);
    }
  }
  return out;
}

// Oracle: builds chunk-preserving decompositions constructively. Gap w_0 is
// cut freely; each c'_i extends c_i by a prefix of w_i and the rest of w_i is
// cut freely; alternatively c'_{k'} runs to the end of the word.
std::vector<SpanList> oracle_decompositions(const GreedyForm& gf) {
  const int n = gf.perm.degree();
  const int k = gf.chunk_count();
  auto gap_bounds = [&](int l) {
    return gf.gaps[l] ? std::make_pair(gf.gaps[l]->start, gf.gaps[l]->end)
                      : std::make_pair(1, 0);
  };
  const auto [g0s, g0e] = gap_bounds(0);
  if (k == 0) return compositions(1, n);
  std::vector<SpanList> out;
  std::vector<SpanList> partial = compositions(g0s, g0e);
  for (int i = 1; i <= k; ++i) {
    const Span& chunk = gf.chunks[i - 1];
    // Tail absorption: c'_i covers the rest of the word (k' = i < k).
    if (i < k) {
      for (const auto& base : partial) {
        SpanList joined = base;
        joined.push_back({chunk.start, n});
        out.push_back(joined);
      }
    }
    const auto [gs, ge] = gap_bounds(i);
    const int gap_length = gf.gaps[i] ? ge - gs + 1 : 0;
    std::vector<SpanList> next;
    for (int extend = 0; extend <= gap_length; ++extend) {
      const int chunk_end = chunk.end + extend;
      std::vector<SpanList> head;
      for (const auto& base : partial) {
        SpanList joined = base;
        joined.push_back({chunk.start, chunk_end});
        head.push_back(joined);
      }
      const auto tails = chunk_end < (gf.gaps[i] ? ge : chunk.end)
                             ? compositions(chunk_end + 1, ge)
                             : std::vector<SpanList>{SpanList{}};
      const auto combined = product(head, tails);
      next.insert(next.end(), combined.begin(), combined.end());
    }
    partial = std::move(next);
  }
  out.insert(out.end(), partial.begin(), partial.end());
  return out;
}

SpanList spans_of(const PieceDecomposition& d) {
  SpanList out;
  for (const auto& piece : d.pieces) out.push_back({piece.span.start, piece.span.end});
  return out;
}

TEST(GreedyFormTest, InitialChunkExamples) {
  const auto identity = initial_chunk(Permutation::identity(4));
  EXPECT_FALSE(identity.chunk.has_value());
  EXPECT_EQ(identity.prefix, (Span{1, 4}));
  EXPECT_FALSE(identity.rest.has_value());

  const auto reversal = initial_chunk(Permutation::reversal(5));
  EXPECT_EQ(reversal.chunk, (Span{1, 5}));
  EXPECT_FALSE(reversal.prefix.has_value());
  EXPECT_FALSE(reversal.rest.has_value());

  const auto mixed = initial_chunk(make_permutation({1, 3, 2, 4}));
  EXPECT_EQ(mixed.prefix, (Span{1, 1}));
  EXPECT_EQ(mixed.chunk, (Span{2, 3}));
  EXPECT_EQ(mixed.rest, (Span{4, 4}));
}

TEST(GreedyFormTest, InitialChunkMatchesDefinitionExhaustive) {
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [](const Permutation& p) {
      ASSERT_EQ(initial_chunk(p).chunk, oracle_initial_chunk(p))
          << p.to_string();
    });
  }
}

TEST(GreedyFormTest, ChainExtensionNeedsSeveralRounds) {
  const auto result = initial_chunk(make_permutation({2, 1, 5, 4, 3, 6}));
  EXPECT_EQ(result.chunk, (Span{1, 2}));
  // (1,3) opens the chunk, position 2 pushes it to 5 via (2,5).
  const auto chained = initial_chunk(make_permutation({2, 4, 1, 5, 3, 6}));
  EXPECT_EQ(chained.chunk, (Span{1, 5}));
  EXPECT_EQ(chained.rest, (Span{6, 6}));
}

TEST(GreedyFormTest, LeftGreedyFormExamples) {
  const GreedyForm identity = left_greedy_form(Permutation::identity(3));
  EXPECT_EQ(identity.chunk_count(), 0);
  ASSERT_EQ(identity.gaps.size(), 1u);
  EXPECT_EQ(identity.gaps[0], (Span{1, 3}));

  const GreedyForm two = left_greedy_form(make_permutation({2, 1, 4, 3}));
  EXPECT_EQ(two.chunks, (std::vector<Span>{{1, 2}, {3, 4}}));
  EXPECT_EQ(two.gaps, (std::vector<MaybeSpan>{std::nullopt, std::nullopt,
                                              std::nullopt}));

  const GreedyForm full = left_greedy_form(Permutation::reversal(4));
  EXPECT_EQ(full.chunks, (std::vector<Span>{{1, 4}}));
}

TEST(GreedyFormTest, GreedyFormJson) {
  EXPECT_EQ(left_greedy_form(make_permutation({1, 3, 2, 4})).to_json(),
            R"({"perm":"1,3,2,4","gaps":[[1,1],[4,4]],"chunks":[[2,3]]})");
  EXPECT_EQ(left_greedy_form(make_permutation({2, 1})).to_json(),
            R"({"perm":"2,1","gaps":[null,null],"chunks":[[1,2]]})");
}

TEST(GreedyFormTest, GapPositionsStartNoInversion) {
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [](const Permutation& p) {
      const GreedyForm gf = left_greedy_form(p);
      const InversionSet set = inversion_set(p);
      for (const auto& [i, j] : set.pairs()) {
        ASSERT_GT(gf.chunk_of(i), 0) << p.to_string();
        ASSERT_EQ(gf.chunk_of(i), gf.chunk_of(j)) << p.to_string();
      }
    });
  }
}

TEST(GreedyFormTest, EnumerateExamples) {
  const GreedyForm gf = left_greedy_form(make_permutation({1, 3, 2, 4}));
  const auto three = enumerate_chunk_preserving(gf, 3);
  ASSERT_EQ(three.size(), 1u);
  EXPECT_EQ(spans_of(three[0]), (SpanList{{1, 1}, {2, 3}, {4, 4}}));
  EXPECT_EQ(three[0].pieces[0].kind, PieceKind::kGap);
  EXPECT_EQ(three[0].pieces[1].kind, PieceKind::kChunk);
  EXPECT_EQ(three[0].pieces[1].chunk_index, 1);
  EXPECT_EQ(three[0].pieces[2].kind, PieceKind::kGap);
  EXPECT_EQ(three[0].chunk_piece_count(), 1);
  EXPECT_EQ(three[0].gap_piece_count(), 2);

  const auto two = enumerate_chunk_preserving(gf, 2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(spans_of(two[0]), (SpanList{{1, 1}, {2, 4}}));

  const auto identity =
      enumerate_chunk_preserving(left_greedy_form(Permutation::identity(3)), 3);
  ASSERT_EQ(identity.size(), 1u);
  EXPECT_EQ(spans_of(identity[0]), (SpanList{{1, 1}, {2, 2}, {3, 3}}));

  EXPECT_TRUE(enumerate_chunk_preserving(gf, 4).empty());
}

TEST(GreedyFormTest, PieceDecompositionJson) {
  const GreedyForm gf = left_greedy_form(make_permutation({1, 3, 2, 4}));
  EXPECT_EQ(enumerate_chunk_preserving(gf, 2)[0].to_json(),
            R"([{"span":[1,1],"kind":"y"},{"span":[2,4],"kind":"c","chunk_index":1}])");
}

TEST(GreedyFormTest, TailAbsorptionOnlyAtTheEnd) {
  // Chunks [1,2] and [4,5]; c'_1 may swallow the rest only as the last piece.
  const GreedyForm gf = left_greedy_form(make_permutation({2, 1, 3, 5, 4}));
  ASSERT_EQ(gf.chunks, (std::vector<Span>{{1, 2}, {4, 5}}));
  const auto one = enumerate_chunk_preserving(gf, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].chunk_piece_count(), 1);
  EXPECT_FALSE(classify_pieces(gf, {{1, 4}, {5, 5}}).has_value());
  EXPECT_FALSE(classify_pieces(gf, {{1, 2}, {3, 4}, {5, 5}}).has_value());
  EXPECT_TRUE(classify_pieces(gf, {{1, 3}, {4, 5}}).has_value());
}

TEST(GreedyFormTest, EnumerationMatchesConstructiveOracle) {
  for (int n = 1; n <= 6; ++n) {
    for_each_permutation(n, [n](const Permutation& p) {
      const GreedyForm gf = left_greedy_form(p);
      auto expected = oracle_decompositions(gf);
      std::sort(expected.begin(), expected.end());
      expected.erase(std::unique(expected.begin(), expected.end()),
                     expected.end());
      std::vector<SpanList> actual;
      for (int pieces = 1; pieces <= n; ++pieces) {
        const auto found = enumerate_chunk_preserving(gf, pieces);
        for (const auto& d : found) {
          ASSERT_EQ(d.piece_count(), pieces);
          actual.push_back(spans_of(d));
        }
        std::vector<SpanList> same_count;
        for (const auto& d : found) same_count.push_back(spans_of(d));
        ASSERT_TRUE(std::is_sorted(same_count.begin(), same_count.end()));
      }
      std::sort(actual.begin(), actual.end());
      ASSERT_EQ(actual, expected) << p.to_string();
    });
  }
}

TEST(GreedyFormTest, DecompositionInvariantsAndTiling) {
  for (int n = 1; n <= 6; ++n) {
    for_each_permutation(n, [n](const Permutation& p) {
      const GreedyForm gf = left_greedy_form(p);
      for (int pieces = 1; pieces <= n; ++pieces) {
        for (const auto& d : enumerate_chunk_preserving(gf, pieces)) {
          const int k_prime = d.chunk_piece_count();
          ASSERT_LE(k_prime, gf.chunk_count());
          for (const auto& piece : d.pieces) {
            if (piece.kind == PieceKind::kChunk) {
              ASSERT_TRUE(gf.chunks[piece.chunk_index - 1].precedes(piece.span));
            } else {
              for (int pos = piece.span.start; pos <= piece.span.end; ++pos) {
                ASSERT_EQ(gf.chunk_of(pos), -1);
              }
            }
          }
          if (k_prime < gf.chunk_count()) {
            ASSERT_EQ(d.pieces.back().kind, PieceKind::kChunk);
            ASSERT_EQ(d.pieces.back().chunk_index, k_prime);
          }
          std::vector<int> identity_order(pieces);
          std::iota(identity_order.begin(), identity_order.end(), 1);
          ASSERT_EQ(apply_rearrangement(d, Permutation(identity_order)), p);
        }
      }
    });
  }
}

TEST(GreedyFormTest, ApplyRearrangementExamples) {
  const GreedyForm gf = left_greedy_form(make_permutation({1, 3, 2, 4}));
  const PieceDecomposition d = enumerate_chunk_preserving(gf, 3).at(0);
  EXPECT_EQ(apply_rearrangement(d, Permutation::identity(3)),
            make_permutation({1, 3, 2, 4}));
  EXPECT_EQ(apply_rearrangement(d, make_permutation({3, 2, 1})),
            make_permutation({4, 3, 2, 1}));
  EXPECT_EQ(apply_rearrangement(d, make_permutation({2, 3, 1})),
            make_permutation({3, 2, 4, 1}));
  EXPECT_THROW(apply_rearrangement(d, Permutation::identity(2)), DomainError);
}

// Rearranging twice equals rearranging once by the composite order when the
// second rearrangement acts on the pieces of the first result.
TEST(GreedyFormTest, RearrangementsCompose) {
  const Permutation p = make_permutation({1, 3, 2, 4, 5});
  const GreedyForm gf = left_greedy_form(p);
  const PieceDecomposition d = enumerate_chunk_preserving(gf, 4).at(0);
  for (const auto& first : all_permutations(4)) {
    const Permutation once = apply_rearrangement(d, first);
    PieceDecomposition moved{once, {}};
    int start = 1;
    for (int slot = 1; slot <= 4; ++slot) {
      const int length = d.pieces[first.at(slot) - 1].span.length();
      moved.pieces.push_back({{start, start + length - 1}, PieceKind::kGap, 0});
      start += length;
    }
    for (const auto& second : all_permutations(4)) {
      std::vector<int> composite(4);
      for (int slot = 1; slot <= 4; ++slot) {
        composite[slot - 1] = first.at(second.at(slot));
      }
      ASSERT_EQ(apply_rearrangement(moved, second),
                apply_rearrangement(d, Permutation(composite)));
    }
  }
}

TEST(GreedyFormTest, CheckGrowthExamples) {
  const PieceDecomposition two_letters =
      enumerate_chunk_preserving(left_greedy_form(Permutation::identity(2)), 2)
          .at(0);
  EXPECT_TRUE(check_growth(two_letters));

  const GreedyForm gf = left_greedy_form(make_permutation({1, 3, 2, 4}));
  const PieceDecomposition three = enumerate_chunk_preserving(gf, 3).at(0);
  EXPECT_TRUE(check_growth(three));
  for (const auto& tau : all_permutations(3)) {
    if (tau.is_identity()) continue;
    EXPECT_GT(word_length(apply_rearrangement(three, tau)), 1);
  }

  const PieceDecomposition chunks =
      enumerate_chunk_preserving(left_greedy_form(make_permutation({2, 1, 4, 3})),
                                 2)
          .at(0);
  EXPECT_EQ(chunks.pieces[0].kind, PieceKind::kChunk);
  EXPECT_EQ(chunks.pieces[1].kind, PieceKind::kChunk);
  EXPECT_TRUE(check_growth(chunks));
  EXPECT_EQ(apply_rearrangement(chunks, make_permutation({2, 1})),
            Permutation::reversal(4));
}

TEST(GreedyFormTest, CheckGrowthPreconditions) {
  const PieceDecomposition one_piece{make_permutation({2, 1, 3}),
                                     {{{1, 3}, PieceKind::kChunk, 1}}};
  EXPECT_THROW(check_growth(one_piece), DomainError);
  // A hand-built decomposition of a single-chunk word.
  const PieceDecomposition single{Permutation::reversal(3),
                                  {{{1, 1}, PieceKind::kGap, 0},
                                   {{2, 3}, PieceKind::kGap, 0}}};
  EXPECT_THROW(check_growth(single), DomainError);
}

TEST(GreedyFormTest, CheckGrowthReportsNonChunkPreservingFailure) {
  // Splitting the chunk [1,2] of 2,1,3 is not chunk preserving, and swapping
  // its halves removes an inversion: check_growth returns false.
  const PieceDecomposition broken{make_permutation({2, 1, 3}),
                                  {{{1, 1}, PieceKind::kGap, 0},
                                   {{2, 2}, PieceKind::kGap, 0},
                                   {{3, 3}, PieceKind::kGap, 0}}};
  EXPECT_FALSE(check_growth(broken));
}

TEST(GreedyFormTest, ChunkStatsExamples) {
  EXPECT_EQ(chunk_stats(Permutation::identity(5)), (ChunkStats{0, 0, 0}));
  EXPECT_EQ(chunk_stats(Permutation::reversal(4)), (ChunkStats{1, 4, 6}));
  EXPECT_EQ(chunk_stats(make_permutation({2, 1, 4, 3})), (ChunkStats{2, 4, 2}));
}

TEST(GreedyFormTest, ChunkBoundsExhaustive) {
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [](const Permutation& p) {
      const ChunkStats s = chunk_stats(p);
      ASSERT_LE(s.chunk_count, s.word_length) << p.to_string();
      ASSERT_LE(s.total_chunk_length, s.word_length + s.chunk_count)
          << p.to_string();
      const InversionSet set = inversion_set(p);
      for (const auto& [i, j] : set.pairs()) {
        ASSERT_GE(s.word_length, j - i) << p.to_string();
      }
    });
  }
}

}  // namespace
}  // namespace codim
