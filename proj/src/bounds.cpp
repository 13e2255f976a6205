#include "codim/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "json.hpp"

#include "codim/errors.hpp"
#include "codim/mahonian.hpp"

namespace codim {
namespace {

void require_valid_d(int d) {
  if (d < 2) throw DomainError("d must be at least 2, got " + std::to_string(d));
}

// Least m >= 1 with base^m < m!, by exact iteration.
int least_factorial_dominating(const BigInt& base) {
  BigInt lhs = base;
  BigInt rhs = 1;
  for (int m = 1;; ++m) {
    if (lhs < rhs) return m;
    lhs *= base;
    rhs *= m + 1;
  }
}

}  // namespace

BoundParams make_bound_params(int n, int d) {
  require_valid_d(d);
  if (n < d) {
    throw DomainError("bound needs n >= d; got n = " + std::to_string(n) +
                      ", d = " + std::to_string(d));
  }
  return {n, d, Rational(n - d, 2)};
}

BigInt classic_bound(int n, int d) {
  require_valid_d(d);
  if (n < 1) throw DomainError("n must be at least 1");
  return power(BigInt(d - 1), 2u * static_cast<unsigned>(n));
}

BigInt theorem_bound(int n, int d) {
  const BoundParams params = make_bound_params(n, d);
  return ball_complement_count(params.n, params.radius);
}

int crossover_n(int d) {
  require_valid_d(d);
  return least_factorial_dominating(BigInt(d - 1) * (d - 1));
}

int tensor_identity_degree(int d1, int d2) {
  require_valid_d(d1);
  require_valid_d(d2);
  const BigInt k1 = BigInt(d1 - 1) * (d1 - 1);
  const BigInt k2 = BigInt(d2 - 1) * (d2 - 1);
  return least_factorial_dominating(k1 * k2);
}

AsymptoticConstants q_partial_product(int terms) {
  if (terms < 1) throw DomainError("need at least one factor");
  double q = 1.0;
  for (int j = 1; j <= terms; ++j) q *= 1.0 - std::ldexp(1.0, -j);
  return {q, terms};
}

AsymptoticConstants q_constant(double tolerance) {
  if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
  double q = 1.0;
  for (int j = 1;; ++j) {
    const double next = q * (1.0 - std::ldexp(1.0, -j));
    const double change = q - next;
    q = next;
    if (change < tolerance) return {q, j};
  }
}

AsymptoticEstimate asymptotic_In(int n, int k, double q) {
  if (n < 1 || k < 0 || k > n) {
    throw DomainError("asymptotic estimate needs 0 <= k <= n");
  }
  const int exponent = 2 * n - k - 1;
  const double log_value = exponent * std::numbers::ln2 + std::log(q) -
                           0.5 * std::log(n * std::numbers::pi);
  const double value =
      std::ldexp(q / std::sqrt(n * std::numbers::pi), exponent);
  const bool overflow = std::isinf(value);
  return {value, log_value, overflow};
}

AsymptoticEstimate asymptotic_In(int n, int k) {
  return asymptotic_In(n, k, q_constant().q);
}

BigInt phi(int n, int d) {
  const BoundParams params = make_bound_params(n, d);
  const std::int64_t radius_floor = floor_of(params.radius);
  const BigInt top = power(BigInt(2), static_cast<unsigned>(2 * n - radius_floor));
  const BigInt bottom = power(BigInt(2), static_cast<unsigned>(n - 1));
  return factorial(n) - (top - bottom);
}

std::string to_string(Winner winner) {
  switch (winner) {
    case Winner::kClassic:
      return "classic";
    case Winner::kTheorem:
      return "theorem";
    case Winner::kTie:
      return "tie";
  }
  return "unknown";
}

std::vector<int> BoundReport::small_codimension_region() const {
  std::vector<int> out;
  for (const auto& row : rows) {
    if (row.n < crossover) out.push_back(row.n);
  }
  return out;
}

std::string BoundReport::to_csv() const {
  std::string out = "n,classic,theorem,phi,factorial,winner\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n) + ',' + row.classic.str() + ',' +
           row.theorem.str() + ',' + row.phi.str() + ',' +
           row.factorial.str() + ',' + to_string(row.winner) + '\n';
  }
  return out;
}

std::string BoundReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["d"] = d;
  doc["crossover_n"] = crossover;
  doc["small_codimension_region"] = small_codimension_region();
  auto& rows_json = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    rows_json.push_back({{"n", row.n},
                         {"classic", row.classic.str()},
                         {"theorem", row.theorem.str()},
                         {"phi", row.phi.str()},
                         {"factorial", row.factorial.str()},
                         {"winner", to_string(row.winner)}});
  }
  return doc.dump();
}

BoundReport compare_bounds(int d, int n_max) {
  require_valid_d(d);
  if (n_max < d) throw DomainError("n_max must be at least d");
  BoundReport report{d, crossover_n(d), {}};
  for (int n = d; n <= n_max; ++n) {
    BoundRow row{n,           classic_bound(n, d), theorem_bound(n, d),
                 phi(n, d),   factorial(n),        Winner::kTie};
    if (row.classic < row.theorem) {
      row.winner = Winner::kClassic;
    } else if (row.theorem < row.classic) {
      row.winner = Winner::kTheorem;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace codim
