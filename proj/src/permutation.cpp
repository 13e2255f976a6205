#include "codim/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "codim/limits.hpp"

namespace codim {
namespace {

void require_valid_d(int d) {
  if (d < 2) {
    throw DomainError("d must be at least 2, got " + std::to_string(d));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

const char* axiom_name(InvalidDescentSetError::Axiom axiom) {
  switch (axiom) {
    case InvalidDescentSetError::Axiom::kRange:
      return "range";
    case InvalidDescentSetError::Axiom::kTransitivity:
      return "transitivity";
    case InvalidDescentSetError::Axiom::kInterpolation:
      return "interpolation";
  }
  return "unknown";
}

std::string describe(InvalidDescentSetError::Axiom axiom, int i, int j,
                     int k) {
  std::ostringstream out;
  out << "invalid descent set: " << axiom_name(axiom) << " axiom fails";
  switch (axiom) {
    case InvalidDescentSetError::Axiom::kRange:
      out << " for pair (" << i << "," << j << ")";
      break;
    case InvalidDescentSetError::Axiom::kTransitivity:
      out << ": (" << i << "," << j << ") and (" << j << "," << k
          << ") present but (" << i << "," << k << ") missing";
      break;
    case InvalidDescentSetError::Axiom::kInterpolation:
      out << ": (" << i << "," << k << ") present but neither (" << i << ","
          << j << ") nor (" << j << "," << k << ")";
      break;
  }
  return out.str();
}

}  // namespace

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = degree();
  if (n < 1) throw ValidationError("permutation must have degree n >= 1");
  std::vector<bool> seen(n + 1, false);
  for (int i = 0; i < n; ++i) {
    const int v = image_[i];
    if (v < 1 || v > n) {
      throw ValidationError("value " + std::to_string(v) + " at position " +
                            std::to_string(i + 1) + " is outside 1.." +
                            std::to_string(n));
    }
    if (seen[v]) {
      throw ValidationError("value " + std::to_string(v) +
                            " appears more than once (position " +
                            std::to_string(i + 1) + ")");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(std::max(n, 0));
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

Permutation Permutation::reversal(int n) {
  std::vector<int> image(std::max(n, 0));
  std::iota(image.rbegin(), image.rend(), 1);
  return Permutation(std::move(image));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> image;
  text = trim(text);
  if (text.empty()) throw ValidationError("empty permutation text");
  while (true) {
    const auto comma = text.find(',');
    const std::string_view field = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() ||
        ptr != field.data() + field.size()) {
      throw ValidationError("cannot parse '" + std::string(field) +
                            "' as a permutation entry");
    }
    image.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (image_[i] != i + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (int i = 0; i < degree(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(image_[i]);
  }
  return out;
}

Permutation make_permutation(std::vector<int> sequence) {
  return Permutation(std::move(sequence));
}

InvalidDescentSetError::InvalidDescentSetError(Axiom axiom, int i, int j,
                                               int k)
    : ValidationError(describe(axiom, i, j, k)),
      axiom_(axiom),
      i_(i),
      j_(j),
      k_(k) {}

InversionSet::InversionSet(int n, std::vector<PositionPair> pairs)
    : n_(n), pairs_(std::move(pairs)) {
  if (n < 1) throw ValidationError("inversion set must have degree n >= 1");
  for (const auto& [i, j] : pairs_) {
    if (i < 1 || j > n || i >= j) {
      throw InvalidDescentSetError(InvalidDescentSetError::Axiom::kRange, i,
                                   j, 0);
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  matrix_.assign(static_cast<std::size_t>(n) * n, false);
  for (const auto& [i, j] : pairs_) {
    matrix_[static_cast<std::size_t>(i - 1) * n + (j - 1)] = true;
  }
}

bool InversionSet::contains(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) return false;
  return matrix_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

std::string InversionSet::to_json() const {
  std::string out = "[";
  for (std::size_t t = 0; t < pairs_.size(); ++t) {
    if (t > 0) out += ',';
    out += '[' + std::to_string(pairs_[t].first) + ',' +
           std::to_string(pairs_[t].second) + ']';
  }
  out += ']';
  return out;
}

InversionSet inversion_set(const Permutation& p) {
  const int n = p.degree();
  std::vector<PositionPair> pairs;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (p.at(j) < p.at(i)) pairs.push_back({i, j});
    }
  }
  return InversionSet(n, std::move(pairs));
}

int word_length(const Permutation& p) {
  const auto image = p.image();
  int count = 0;
  for (std::size_t i = 0; i < image.size(); ++i) {
    for (std::size_t j = i + 1; j < image.size(); ++j) {
      if (image[j] < image[i]) ++count;
    }
  }
  return count;
}

int cayley_distance_bfs(const Permutation& p) {
  const int n = p.degree();
  require_within_cap("cayley_distance_bfs", n, kBfsMaxN);
  const Permutation start = Permutation::identity(n);
  if (p == start) return 0;

  std::map<std::vector<int>, int> distance;
  std::deque<std::vector<int>> frontier;
  const std::vector<int> target(p.image().begin(), p.image().end());
  distance.emplace(std::vector<int>(start.image().begin(), start.image().end()),
                   0);
  frontier.push_back(distance.begin()->first);
  while (!frontier.empty()) {
    std::vector<int> current = std::move(frontier.front());
    frontier.pop_front();
    const int next_distance = distance.at(current) + 1;
    // Right multiplication by t_i = (i, i+1) swaps adjacent positions.
    for (int i = 0; i + 1 < n; ++i) {
      std::vector<int> neighbour = current;
      std::swap(neighbour[i], neighbour[i + 1]);
      if (distance.contains(neighbour)) continue;
      if (neighbour == target) return next_distance;
      distance.emplace(neighbour, next_distance);
      frontier.push_back(std::move(neighbour));
    }
  }
  throw FalsificationError("Cayley graph of S_" + std::to_string(n) +
                           " is disconnected");
}

Permutation from_inversion_set(const InversionSet& r) {
  using Axiom = InvalidDescentSetError::Axiom;
  const int n = r.degree();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        if (r.contains(i, j) && r.contains(j, k) && !r.contains(i, k)) {
          throw InvalidDescentSetError(Axiom::kTransitivity, i, j, k);
        }
        if (r.contains(i, k) && !r.contains(i, j) && !r.contains(j, k)) {
          throw InvalidDescentSetError(Axiom::kInterpolation, i, j, k);
        }
      }
    }
  }
  // sigma(i) - 1 counts the smaller values: those to the right inverted with
  // i plus those to the left not inverted with i.
  std::vector<int> image(n);
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int j = 1; j < i; ++j) {
      if (!r.contains(j, i)) ++smaller;
    }
    for (int j = i + 1; j <= n; ++j) {
      if (r.contains(i, j)) ++smaller;
    }
    image[i - 1] = smaller + 1;
  }
  return Permutation(std::move(image));
}

std::optional<std::vector<int>> find_d_bad_witness(const Permutation& p,
                                                   int d) {
  require_valid_d(d);
  const int n = p.degree();
  if (d > n) return std::nullopt;
  const auto image = p.image();
  // chain[i]: longest strictly decreasing subsequence starting at i.
  std::vector<int> chain(n, 1);
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) {
      if (image[j] < image[i]) chain[i] = std::max(chain[i], chain[j] + 1);
    }
  }
  // Greedy scan: the first index that can still complete a chain of the
  // remaining length is the lexicographically least choice.
  std::vector<int> witness;
  int last = -1;
  for (int need = d; need > 0; --need) {
    int chosen = -1;
    for (int i = last + 1; i < n; ++i) {
      if (last >= 0 && image[i] >= image[last]) continue;
      if (chain[i] >= need) {
        chosen = i;
        break;
      }
    }
    if (chosen < 0) return std::nullopt;
    witness.push_back(chosen + 1);
    last = chosen;
  }
  return witness;
}

int longest_decreasing_subsequence(const Permutation& p) {
  // Patience sorting on negated values: tails[t] is the largest possible
  // last value of a decreasing run of length t + 1.
  std::vector<int> tails;
  for (const int v : p.image()) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v,
                               [](int tail, int value) { return tail > value; });
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tails.size());
}

bool is_d_good(const Permutation& p, int d) {
  require_valid_d(d);
  return longest_decreasing_subsequence(p) < d;
}

std::strong_ordering dictionary_compare(const Permutation& p,
                                        const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DomainError("cannot compare permutations of degrees " +
                      std::to_string(p.degree()) + " and " +
                      std::to_string(q.degree()));
  }
  return p <=> q;
}

std::uint64_t count_d_good(int n, int d) {
  require_valid_d(d);
  if (n < 1) throw DomainError("n must be at least 1");
  require_within_cap("count_d_good", n, kCountGoodMaxN);
  std::uint64_t count = 0;
  for_each_permutation(n, [&](const Permutation& p) {
    if (longest_decreasing_subsequence(p) < d) ++count;
  });
  return count;
}

void for_each_permutation(
    int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  do {
    visit(Permutation(image));
  } while (std::next_permutation(image.begin(), image.end()));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace codim
