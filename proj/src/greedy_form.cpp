#include "codim/greedy_form.hpp"

#include <algorithm>
#include <numeric>

#include "codim/errors.hpp"

namespace codim {
namespace {

// last_partner[i] = largest j > i with sigma(j) < sigma(i), or 0 when i is
// not the left element of any inversion. 1-based, index 0 unused.
std::vector<int> last_partners(const Permutation& p) {
  const int n = p.degree();
  std::vector<int> last(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = n; j > i; --j) {
      if (p.at(j) < p.at(i)) {
        last[i] = j;
        break;
      }
    }
  }
  return last;
}

// Initial chunk of the suffix subword starting at `from`. Pairs with a left
// element before `from` never reach into the suffix once earlier chunks are
// closed, so only pairs inside the suffix matter.
std::optional<Span> chunk_from(const Permutation& p,
                               const std::vector<int>& last, int from) {
  const int n = p.degree();
  int i0 = from;
  while (i0 <= n && last[i0] == 0) ++i0;
  if (i0 > n) return std::nullopt;
  // Dictionary-minimal pair (i0, j): the first j with sigma(j) < sigma(i0).
  int j0 = i0 + 1;
  while (p.at(j0) > p.at(i0)) ++j0;
  for (int i = i0; i <= j0; ++i) j0 = std::max(j0, last[i]);
  return Span{i0, j0};
}

void write_span(std::string& out, const MaybeSpan& span) {
  if (!span) {
    out += "null";
    return;
  }
  out += '[' + std::to_string(span->start) + ',' + std::to_string(span->end) +
         ']';
}

bool next_combination(std::vector<int>& cuts, int hi) {
  // Advances an increasing sequence bounded by hi in lexicographic order;
  // false once exhausted.
  const int r = static_cast<int>(cuts.size());
  for (int t = r - 1; t >= 0; --t) {
    if (cuts[t] < hi - (r - 1 - t)) {
      ++cuts[t];
      for (int u = t + 1; u < r; ++u) cuts[u] = cuts[u - 1] + 1;
      return true;
    }
  }
  return false;
}

template <typename Visit>
void for_each_decomposition(const GreedyForm& gf, int pieces, Visit visit) {
  const int n = gf.perm.degree();
  if (pieces < 1 || pieces > n) return;
  // cuts hold the start positions of pieces 2..p.
  std::vector<int> cuts(pieces - 1);
  std::iota(cuts.begin(), cuts.end(), 2);
  std::vector<Span> spans(pieces);
  do {
    int start = 1;
    for (int t = 0; t < pieces; ++t) {
      const int end = t + 1 < pieces ? cuts[t] - 1 : n;
      spans[t] = Span{start, end};
      start = end + 1;
    }
    if (auto decomposition = classify_pieces(gf, spans)) {
      if (!visit(std::move(*decomposition))) return;
    }
  } while (next_combination(cuts, n));
}

}  // namespace

MaybeSpan make_span(int start, int end) {
  if (start > end) return std::nullopt;
  return Span{start, end};
}

InitialChunk initial_chunk(const Permutation& p) {
  const int n = p.degree();
  const auto chunk = chunk_from(p, last_partners(p), 1);
  if (!chunk) return {make_span(1, n), std::nullopt, std::nullopt};
  return {make_span(1, chunk->start - 1), chunk, make_span(chunk->end + 1, n)};
}

GreedyForm left_greedy_form(const Permutation& p) {
  const int n = p.degree();
  const auto last = last_partners(p);
  GreedyForm gf{p, {}, {}};
  int from = 1;
  while (auto chunk = chunk_from(p, last, from)) {
    gf.gaps.push_back(make_span(from, chunk->start - 1));
    gf.chunks.push_back(*chunk);
    from = chunk->end + 1;
  }
  gf.gaps.push_back(make_span(from, n));
  return gf;
}

int GreedyForm::chunk_of(int position) const {
  for (int l = 0; l < chunk_count(); ++l) {
    if (chunks[l].contains(position)) return l + 1;
  }
  return -1;
}

std::string GreedyForm::to_json() const {
  std::string out = "{\"perm\":\"" + perm.to_string() + "\",\"gaps\":[";
  for (std::size_t t = 0; t < gaps.size(); ++t) {
    if (t > 0) out += ',';
    write_span(out, gaps[t]);
  }
  out += "],\"chunks\":[";
  for (std::size_t t = 0; t < chunks.size(); ++t) {
    if (t > 0) out += ',';
    write_span(out, chunks[t]);
  }
  out += "]}";
  return out;
}

int PieceDecomposition::chunk_piece_count() const {
  return static_cast<int>(std::count_if(
      pieces.begin(), pieces.end(),
      [](const Piece& piece) { return piece.kind == PieceKind::kChunk; }));
}

int PieceDecomposition::gap_piece_count() const {
  return piece_count() - chunk_piece_count();
}

std::string PieceDecomposition::to_json() const {
  std::string out = "[";
  for (std::size_t t = 0; t < pieces.size(); ++t) {
    if (t > 0) out += ',';
    out += "{\"span\":";
    write_span(out, pieces[t].span);
    if (pieces[t].kind == PieceKind::kGap) {
      out += ",\"kind\":\"y\"}";
    } else {
      out += ",\"kind\":\"c\",\"chunk_index\":" +
             std::to_string(pieces[t].chunk_index) + "}";
    }
  }
  out += ']';
  return out;
}

std::optional<PieceDecomposition> classify_pieces(
    const GreedyForm& gf, const std::vector<Span>& spans) {
  const int n = gf.perm.degree();
  const int k = gf.chunk_count();
  PieceDecomposition out{gf.perm, {}};
  int expected_start = 1;
  int next_chunk = 0;  // 0-based index of the next chunk to distinguish
  for (std::size_t t = 0; t < spans.size(); ++t) {
    const Span& span = spans[t];
    if (span.start != expected_start || span.end < span.start) {
      return std::nullopt;
    }
    expected_start = span.end + 1;
    if (next_chunk < k && span.start == gf.chunks[next_chunk].start) {
      const Span& chunk = gf.chunks[next_chunk];
      if (span.end < chunk.end) return std::nullopt;
      ++next_chunk;
      out.pieces.push_back({span, PieceKind::kChunk, next_chunk});
      // A chunk-piece running into the next chunk absorbs the whole tail.
      if (next_chunk < k && span.end >= gf.chunks[next_chunk].start) {
        if (span.end != n || t + 1 != spans.size()) return std::nullopt;
        next_chunk = k;
      }
      continue;
    }
    for (int l = next_chunk; l < k; ++l) {
      const Span& chunk = gf.chunks[l];
      if (chunk.start <= span.end && span.start <= chunk.end) {
        return std::nullopt;
      }
    }
    out.pieces.push_back({span, PieceKind::kGap, 0});
  }
  if (expected_start != n + 1 || next_chunk != k) return std::nullopt;
  return out;
}

std::vector<PieceDecomposition> enumerate_chunk_preserving(const GreedyForm& gf,
                                                           int pieces) {
  std::vector<PieceDecomposition> out;
  for_each_decomposition(gf, pieces, [&](PieceDecomposition&& d) {
    out.push_back(std::move(d));
    return true;
  });
  return out;
}

std::optional<PieceDecomposition> first_chunk_preserving(const GreedyForm& gf,
                                                         int pieces) {
  std::optional<PieceDecomposition> out;
  for_each_decomposition(gf, pieces, [&](PieceDecomposition&& d) {
    out = std::move(d);
    return false;
  });
  return out;
}

Permutation apply_rearrangement(const PieceDecomposition& d,
                                const Permutation& tau) {
  if (tau.degree() != d.piece_count()) {
    throw DomainError("rearrangement of degree " +
                      std::to_string(tau.degree()) + " applied to " +
                      std::to_string(d.piece_count()) + " pieces");
  }
  std::vector<int> image;
  image.reserve(d.perm.degree());
  for (int slot = 1; slot <= tau.degree(); ++slot) {
    const Span& span = d.pieces[tau.at(slot) - 1].span;
    for (int position = span.start; position <= span.end; ++position) {
      image.push_back(d.perm.at(position));
    }
  }
  return Permutation(std::move(image));
}

bool check_growth(const PieceDecomposition& d) {
  const int pieces = d.piece_count();
  if (pieces < 2) {
    throw DomainError("check_growth needs at least two pieces");
  }
  const GreedyForm gf = left_greedy_form(d.perm);
  if (gf.chunk_count() == 1 && gf.chunks[0].length() == d.perm.degree()) {
    throw DomainError("check_growth: the word is a single chunk");
  }
  const int base = word_length(d.perm);
  std::vector<int> order(pieces);
  std::iota(order.begin(), order.end(), 1);
  while (std::next_permutation(order.begin(), order.end())) {
    if (word_length(apply_rearrangement(d, Permutation(order))) <= base) {
      return false;
    }
  }
  return true;
}

ChunkStats chunk_stats(const Permutation& p) {
  const GreedyForm gf = left_greedy_form(p);
  int total = 0;
  for (const Span& chunk : gf.chunks) total += chunk.length();
  return {gf.chunk_count(), total, word_length(p)};
}

}  // namespace codim
