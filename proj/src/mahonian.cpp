#include "codim/mahonian.hpp"

#include <algorithm>

#include "codim/errors.hpp"
#include "codim/limits.hpp"
#include "codim/permutation.hpp"

namespace codim {
namespace {

void require_degree(int n) {
  if (n < 1) throw DomainError("n must be at least 1, got " + std::to_string(n));
}

// Sum of coefficients[0 .. last], clamped to the row.
BigInt prefix_sum(const MahonianRow& row, std::int64_t last) {
  BigInt out = 0;
  const std::int64_t top = std::min<std::int64_t>(last, row.max_inversions());
  for (std::int64_t k = 0; k <= top; ++k) out += row.coefficients[k];
  return out;
}

}  // namespace

BigInt MahonianRow::sum() const {
  BigInt out = 0;
  for (const auto& c : coefficients) out += c;
  return out;
}

std::string MahonianRow::to_csv() const {
  std::string out;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    out += std::to_string(n) + ',' + std::to_string(k) + ',' +
           coefficients[k].str() + '\n';
  }
  return out;
}

std::string MahonianRow::to_json() const {
  std::string out = "{\"n\":" + std::to_string(n) + ",\"coefficients\":[";
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (k > 0) out += ',';
    out += '"' + coefficients[k].str() + '"';
  }
  out += "]}";
  return out;
}

MahonianRow mahonian_row(int n) {
  require_degree(n);
  require_within_cap("mahonian_row", n, kMahonianRowMaxN);
  std::vector<BigInt> row{1};
  for (int i = 1; i < n; ++i) {
    // Multiply by 1 + z + ... + z^i: each new coefficient is a window sum
    // of width i + 1 over the old row.
    const int old_size = static_cast<int>(row.size());
    std::vector<BigInt> next(old_size + i);
    BigInt window = 0;
    for (int k = 0; k < old_size + i; ++k) {
      if (k < old_size) window += row[k];
      if (k - i - 1 >= 0) window -= row[k - i - 1];
      next[k] = window;
    }
    row = std::move(next);
  }
  return {n, std::move(row)};
}

MahonianRow brute_force_row(int n) {
  require_degree(n);
  require_within_cap("brute_force_row", n, kBruteForceRowMaxN);
  MahonianRow row{n, std::vector<BigInt>(n * (n - 1) / 2 + 1, 0)};
  for_each_permutation(n, [&](const Permutation& p) {
    ++row.coefficients[word_length(p)];
  });
  return row;
}

std::int64_t pentagonal(std::int64_t j) {
  if (j < 1) throw DomainError("pentagonal index must be at least 1");
  return j * (3 * j - 1) / 2;
}

BigInt mahonian_knuth(int n, int k) {
  require_degree(n);
  if (k < 0 || k > n) {
    throw DomainError("Knuth's formula needs 0 <= k <= n; got n = " +
                      std::to_string(n) + ", k = " + std::to_string(k));
  }
  BigInt out = binomial(n + k - 1, k);
  for (std::int64_t j = 1;; ++j) {
    const std::int64_t u = pentagonal(j);
    if (k - u < 0) break;  // both lower indices are negative from here on
    const BigInt sign = (j % 2 == 0) ? 1 : -1;
    out += sign * binomial(n + k - u - j - 1, k - u - j);
    out += sign * binomial(n + k - u - 1, k - u);
  }
  return out;
}

BigInt ball_count(int n, const Rational& radius) {
  require_degree(n);
  const std::int64_t top = ceil_of(radius) - 1;
  if (top < 0) return 0;
  return prefix_sum(mahonian_row(n), top);
}

BigInt ball_complement_count(int n, const Rational& radius) {
  require_degree(n);
  const MahonianRow row = mahonian_row(n);
  const std::int64_t from = std::max<std::int64_t>(ceil_of(radius), 0);
  BigInt out = 0;
  for (std::int64_t k = from; k <= row.max_inversions(); ++k) {
    out += row.coefficients[k];
  }
  return out;
}

BigInt ball_complement_via_subtraction(int n, const Rational& radius) {
  require_degree(n);
  const std::int64_t top = floor_of(radius);
  const BigInt total = factorial(n);
  if (top < 0) return total;
  return total - prefix_sum(mahonian_row(n), top);
}

}  // namespace codim
