#include "codim/verify.hpp"

#include <functional>
#include <map>

#include "codim/bounds.hpp"
#include "codim/errors.hpp"
#include "codim/greedy_form.hpp"
#include "codim/limits.hpp"
#include "codim/mahonian.hpp"
#include "codim/permutation.hpp"
#include "codim/reduction.hpp"

namespace codim {
namespace {

constexpr std::size_t kMaxListed = 20;

class Recorder {
 public:
  explicit Recorder(SuiteResult& result) : result_(result) {}

  void check(bool holds, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (holds) return;
    ++result_.failures;
    if (result_.counterexamples.size() < kMaxListed) {
      result_.counterexamples.push_back(describe());
    }
  }

 private:
  SuiteResult& result_;
};

void metric_suite(SuiteResult& r, int n_max) {
  Recorder rec(r);
  for (int n = 1; n <= n_max; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      const int length = word_length(p);
      const int bfs = cayley_distance_bfs(p);
      rec.check(length == bfs, [&] {
        return p.to_string() + ": |sigma| = " + std::to_string(length) +
               " but BFS distance = " + std::to_string(bfs);
      });
    });
  }
}

void axioms_suite(SuiteResult& r, int n_max) {
  Recorder rec(r);
  for (int n = 1; n <= n_max; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      const InversionSet set = inversion_set(p);
      bool round_trip = false;
      try {
        round_trip = from_inversion_set(set) == p;
      } catch (const ValidationError&) {
        round_trip = false;
      }
      rec.check(round_trip, [&] {
        return p.to_string() + ": inversion set " + set.to_json() +
               " does not reconstruct the permutation";
      });
    });
  }
}

void lemma31_suite(SuiteResult& r, int n_max) {
  Recorder rec(r);
  for (int n = 2; n <= n_max; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      const int length = word_length(p);
      for (int d = 2; d <= n; ++d) {
        const bool good = is_d_good(p, d);
        const bool witness_absent = !find_d_bad_witness(p, d).has_value();
        rec.check(good == witness_absent, [&] {
          return p.to_string() + ": witness search disagrees with LDS at d = " +
                 std::to_string(d);
        });
        rec.check(good || 2 * length >= d * (d - 1), [&] {
          return p.to_string() + " is " + std::to_string(d) + "-bad with |sigma| = " +
                 std::to_string(length);
        });
        rec.check(!good || d == n || is_d_good(p, d + 1), [&] {
          return p.to_string() + " is " + std::to_string(d) + "-good but not " +
                 std::to_string(d + 1) + "-good";
        });
      }
    });
  }
}

void dilworth_suite(SuiteResult& r, int n_max) {
  Recorder rec(r);
  r.notes.push_back("n,d,d_good,bound");
  for (int n = 2; n <= n_max; ++n) {
    for (int d = 2; d <= n; ++d) {
      const std::uint64_t good = count_d_good(n, d);
      const BigInt bound = classic_bound(n, d);
      rec.check(BigInt(good) <= bound, [&] {
        return "n = " + std::to_string(n) + ", d = " + std::to_string(d) +
               ": " + std::to_string(good) + " d-good permutations exceed " +
               bound.str();
      });
      r.notes.push_back(std::to_string(n) + "," + std::to_string(d) + "," +
                        std::to_string(good) + "," + bound.str());
    }
  }
}

void lgf_suite(SuiteResult& r, int n_max) {
  Recorder rec(r);
  for (int n = 1; n <= n_max; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      const GreedyForm gf = left_greedy_form(p);
      const InversionSet set = inversion_set(p);
      // Tiling: w_0 c_1 w_1 ... c_k w_k covers 1..n in order.
      int next = 1;
      bool tiles = gf.gaps.size() == gf.chunks.size() + 1;
      for (std::size_t l = 0; tiles && l < gf.gaps.size(); ++l) {
        if (gf.gaps[l]) {
          tiles = gf.gaps[l]->start == next;
          next = gf.gaps[l]->end + 1;
        }
        if (tiles && l < gf.chunks.size()) {
          tiles = gf.chunks[l].start == next && gf.chunks[l].length() > 0;
          next = gf.chunks[l].end + 1;
        }
      }
      rec.check(tiles && next == n + 1, [&] {
        return p.to_string() + ": greedy form " + gf.to_json() +
               " does not tile the word";
      });
      rec.check((gf.chunk_count() == 0) == p.is_identity(), [&] {
        return p.to_string() + ": chunk count " +
               std::to_string(gf.chunk_count()) + " inconsistent with identity";
      });
      for (const auto& [i, j] : set.pairs()) {
        rec.check(gf.chunk_of(i) > 0, [&] {
          return p.to_string() + ": left element " + std::to_string(i) +
                 " of an inversion lies in a gap";
        });
        rec.check(gf.chunk_of(i) > 0 && gf.chunk_of(i) == gf.chunk_of(j), [&] {
          return p.to_string() + ": inversion (" + std::to_string(i) + "," +
                 std::to_string(j) + ") is not inside one chunk";
        });
      }
      rec.check(left_greedy_form(p) == gf, [&] {
        return p.to_string() + ": left greedy form is not deterministic";
      });
    });
  }
}

void chunks_suite(SuiteResult& r, int n_max) {
  Recorder rec(r);
  for (int n = 1; n <= n_max; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      const ChunkStats stats = chunk_stats(p);
      rec.check(stats.chunk_count <= stats.word_length, [&] {
        return p.to_string() + ": " + std::to_string(stats.chunk_count) +
               " chunks exceed |sigma| = " + std::to_string(stats.word_length);
      });
      rec.check(stats.total_chunk_length <=
                    stats.word_length + stats.chunk_count,
                [&] {
                  return p.to_string() + ": total chunk length " +
                         std::to_string(stats.total_chunk_length) +
                         " exceeds |sigma| + k";
                });
      const InversionSet set = inversion_set(p);
      for (const auto& [i, j] : set.pairs()) {
        rec.check(stats.word_length >= j - i, [&] {
          return p.to_string() + ": inversion (" + std::to_string(i) + "," +
                 std::to_string(j) + ") spans more than |sigma| + 1 letters";
        });
      }
    });
  }
}

void growth_suite(SuiteResult& r, int n_max) {
  Recorder rec(r);
  for (int n = 2; n <= n_max; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      const GreedyForm gf = left_greedy_form(p);
      if (gf.chunk_count() == 1 && gf.chunks[0].length() == n) return;
      for (int pieces = 2; pieces <= n; ++pieces) {
        for (const auto& d : enumerate_chunk_preserving(gf, pieces)) {
          rec.check(check_growth(d), [&] {
            return p.to_string() + ": decomposition " + d.to_json() +
                   " has a rearrangement that does not grow |sigma|";
          });
        }
      }
    });
  }
}

void mahonian_suite(SuiteResult& r, int n_max) {
  Recorder rec(r);
  for (int n = 1; n <= n_max; ++n) {
    const MahonianRow row = mahonian_row(n);
    rec.check(row == brute_force_row(n), [&] {
      return "n = " + std::to_string(n) + ": product row differs from brute force";
    });
    rec.check(row.sum() == factorial(n), [&] {
      return "n = " + std::to_string(n) + ": row sum is not n!";
    });
    for (int k = 0; k <= n; ++k) {
      const BigInt expected = k <= row.max_inversions() ? row.at(k) : BigInt(0);
      rec.check(mahonian_knuth(n, k) == expected, [&] {
        return "n = " + std::to_string(n) + ", k = " + std::to_string(k) +
               ": Knuth formula disagrees with the product";
      });
    }
  }
}

void closure_suite(SuiteResult& r, int n_max, ReductionMode mode) {
  Recorder rec(r);
  r.notes.push_back("n,d,sources,visited,max_depth,terminal,reference");
  for (int n = 2; n <= n_max; ++n) {
    for (int d = 2; d <= n; ++d) {
      const ReductionTrace trace =
          mode == ReductionMode::kClassic ? classic_closure(n, d)
                                          : main_closure(n, d);
      rec.check(trace.ok(), [&] {
        return "n = " + std::to_string(n) + ", d = " + std::to_string(d) +
               ": " + trace.falsifications.front();
      });
      for (const auto& p : trace.terminal_support) {
        const bool in_target = mode == ReductionMode::kClassic
                                   ? is_d_good(p, d)
                                   : 2 * word_length(p) >= n - d;
        rec.check(in_target, [&] {
          return "n = " + std::to_string(n) + ", d = " + std::to_string(d) +
                 ": terminal " + p.to_string() + " outside the target set";
        });
      }
      rec.check(BigInt(trace.terminal_support.size()) <= trace.reference_count,
                [&] {
                  return "n = " + std::to_string(n) + ", d = " +
                         std::to_string(d) + ": terminal support too large";
                });
      r.notes.push_back(std::to_string(n) + "," + std::to_string(d) + "," +
                        std::to_string(trace.sources.size()) + "," +
                        std::to_string(trace.visited) + "," +
                        std::to_string(trace.max_depth) + "," +
                        std::to_string(trace.terminal_support.size()) + "," +
                        trace.reference_count.str());
    }
  }
}

struct SuiteSpec {
  std::string description;
  int cap;
  std::function<void(SuiteResult&, int)> run;
};

const std::map<std::string, SuiteSpec>& registry() {
  static const std::map<std::string, SuiteSpec> suites = {
      {"metric",
       {"word length equals Cayley graph distance", kBfsMaxN, metric_suite}},
      {"axioms",
       {"inversion sets reconstruct their permutation", 8, axioms_suite}},
      {"lemma31",
       {"d-bad implies |sigma| >= d(d-1)/2; d-goodness is monotone in d", 8,
        lemma31_suite}},
      {"dilworth",
       {"number of d-good permutations is at most (d-1)^(2n)", kCountGoodMaxN,
        dilworth_suite}},
      {"lgf",
       {"left greedy form tiles the word and holds every inversion in a chunk",
        7, lgf_suite}},
      {"chunks",
       {"chunk count, chunk length and inversion span bounds", 7,
        chunks_suite}},
      {"growth",
       {"rearranging a chunk-preserving decomposition increases |sigma|", 6,
        growth_suite}},
      {"mahonian",
       {"product formula, brute force and Knuth formula agree", 8,
        mahonian_suite}},
      {"classic",
       {"classic rewriting terminates in d-good monomials",
        kClassicClosureMaxN,
        [](SuiteResult& r, int n) {
          closure_suite(r, n, ReductionMode::kClassic);
        }}},
      {"main",
       {"size-increasing rewriting terminates outside the ball B(K_n)",
        kMainClosureMaxN,
        [](SuiteResult& r, int n) {
          closure_suite(r, n, ReductionMode::kMain);
        }}},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "metric", "axioms", "lemma31", "dilworth", "lgf",
      "chunks", "growth", "mahonian", "classic", "main"};
  return names;
}

int suite_cap(const std::string& name) {
  const auto it = registry().find(name);
  if (it == registry().end()) {
    throw ValidationError("unknown suite '" + name + "'");
  }
  return it->second.cap;
}

SuiteResult run_suite(const std::string& name, int n_max) {
  const auto it = registry().find(name);
  if (it == registry().end()) {
    throw ValidationError("unknown suite '" + name + "'");
  }
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  require_within_cap("verify " + name, n_max, it->second.cap);
  SuiteResult result;
  result.name = name;
  result.description = it->second.description;
  result.n_max = n_max;
  it->second.run(result, n_max);
  return result;
}

}  // namespace codim
