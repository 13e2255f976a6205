#include "codim/reduction.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

#include "codim/errors.hpp"
#include "codim/greedy_form.hpp"
#include "codim/limits.hpp"
#include "codim/mahonian.hpp"
#include "json.hpp"

namespace codim {
namespace {

void require_closure_range(std::string_view name, int n, int d, int cap) {
  if (d < 2 || n < d) {
    throw DomainError(std::string(name) + " needs 2 <= d <= n; got n = " +
                      std::to_string(n) + ", d = " + std::to_string(d));
  }
  require_within_cap(name, n, cap);
}

// The fixed prefix, then the blocks in `order` (1-based block indices).
Permutation concatenate(const Permutation& p, const std::vector<Span>& blocks,
                        const MaybeSpan& fixed_prefix,
                        const std::vector<int>& order) {
  std::vector<int> image;
  image.reserve(p.degree());
  auto append = [&](const Span& span) {
    for (int pos = span.start; pos <= span.end; ++pos) image.push_back(p.at(pos));
  };
  if (fixed_prefix) append(*fixed_prefix);
  for (const int index : order) append(blocks[index - 1]);
  return Permutation(std::move(image));
}

struct ClosureRules {
  std::function<bool(const Permutation&)> is_terminal;
  std::function<std::vector<Permutation>(const Permutation&)> expand;
  // True when the rewrite measure strictly improves from parent to child.
  std::function<bool(const Permutation&, const Permutation&)> improves;
  // Orders nodes so that every child precedes its parent.
  std::function<bool(const Permutation&, const Permutation&)> child_first;
  std::string measure_name;
};

ReductionTrace run_closure(ReductionTrace trace, const ClosureRules& rules) {
  std::map<Permutation, std::vector<Permutation>> graph;
  std::deque<Permutation> worklist(trace.sources.begin(), trace.sources.end());
  for (const auto& source : trace.sources) graph.try_emplace(source);

  while (!worklist.empty()) {
    const Permutation node = std::move(worklist.front());
    worklist.pop_front();
    if (rules.is_terminal(node)) {
      trace.terminal_support.insert(node);
      continue;
    }
    std::vector<Permutation> children;
    try {
      children = rules.expand(node);
    } catch (const FalsificationError& e) {
      trace.falsifications.push_back(node.to_string() + ": " + e.what());
      continue;
    }
    for (const auto& child : children) {
      if (!rules.improves(node, child)) {
        trace.falsifications.push_back("edge " + node.to_string() + " -> " +
                                       child.to_string() + " does not improve " +
                                       rules.measure_name);
      }
      if (graph.try_emplace(child).second) worklist.push_back(child);
    }
    graph[node] = children;
    trace.steps.push_back({node, std::move(children)});
  }

  std::sort(trace.steps.begin(), trace.steps.end(),
            [](const auto& a, const auto& b) { return a.parent < b.parent; });
  trace.visited = graph.size();

  // Longest chain, processing children before parents along the measure.
  std::vector<Permutation> order;
  order.reserve(graph.size());
  for (const auto& entry : graph) order.push_back(entry.first);
  std::stable_sort(order.begin(), order.end(), rules.child_first);
  std::map<Permutation, int> depth;
  for (const auto& node : order) {
    int best = 0;
    for (const auto& child : graph.at(node)) {
      if (!rules.improves(node, child)) continue;
      const auto it = depth.find(child);
      if (it != depth.end()) best = std::max(best, it->second + 1);
    }
    depth[node] = best;
  }
  for (const auto& source : trace.sources) {
    trace.max_depth = std::max(trace.max_depth, depth.at(source));
  }
  return trace;
}

}  // namespace

std::string to_string(ReductionMode mode) {
  return mode == ReductionMode::kClassic ? "classic" : "main";
}

std::string ReductionTrace::to_json(bool summary_only) const {
  nlohmann::ordered_json doc;
  doc["mode"] = to_string(mode);
  doc["n"] = n;
  doc["d"] = d;
  if (!summary_only) {
    std::set<Permutation> nodes(sources.begin(), sources.end());
    auto& edges = doc["edges"] = nlohmann::ordered_json::object();
    for (const auto& step : steps) {
      nodes.insert(step.parent);
      auto& list = edges[step.parent.to_string()] =
          nlohmann::ordered_json::array();
      for (const auto& child : step.children) {
        nodes.insert(child);
        list.push_back(child.to_string());
      }
    }
    auto& node_list = doc["nodes"] = nlohmann::ordered_json::array();
    for (const auto& node : nodes) node_list.push_back(node.to_string());
    auto& terminal = doc["terminal_support"] = nlohmann::ordered_json::array();
    for (const auto& node : terminal_support) terminal.push_back(node.to_string());
  }
  doc["summary"] = {{"sources", sources.size()},
                    {"visited", visited},
                    {"max_depth", max_depth},
                    {"terminal_size", terminal_support.size()},
                    {"reference_count", reference_count.str()},
                    {"falsifications", falsifications.size()}};
  if (!falsifications.empty()) doc["falsification_events"] = falsifications;
  return doc.dump();
}

std::vector<Permutation> classic_step(const Permutation& p, int d) {
  const auto witness = find_d_bad_witness(p, d);
  if (!witness) {
    throw DomainError("classic_step: " + p.to_string() + " is " +
                      std::to_string(d) + "-good");
  }
  const int n = p.degree();
  std::vector<Span> blocks;
  for (int t = 0; t < d; ++t) {
    const int start = (*witness)[t];
    const int end = t + 1 < d ? (*witness)[t + 1] - 1 : n;
    blocks.push_back({start, end});
  }
  const MaybeSpan prefix = make_span(1, witness->front() - 1);
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 1);
  std::vector<Permutation> children;
  while (std::next_permutation(order.begin(), order.end())) {
    children.push_back(concatenate(p, blocks, prefix, order));
  }
  return children;
}

ReductionTrace classic_closure(int n, int d) {
  require_closure_range("classic_closure", n, d, kClassicClosureMaxN);
  ReductionTrace trace{ReductionMode::kClassic, n, d, {}, {}, 0, 0, {}, {}};
  for_each_permutation(n, [&](const Permutation& p) {
    if (!is_d_good(p, d)) trace.sources.push_back(p);
  });
  ClosureRules rules;
  rules.is_terminal = [d](const Permutation& p) { return is_d_good(p, d); };
  rules.expand = [d](const Permutation& p) { return classic_step(p, d); };
  rules.improves = [](const Permutation& parent, const Permutation& child) {
    return child < parent;
  };
  rules.child_first = [](const Permutation& a, const Permutation& b) {
    return a < b;
  };
  rules.measure_name = "dictionary order";
  trace.reference_count = count_d_good(n, d);
  return run_closure(std::move(trace), rules);
}

std::vector<Permutation> main_step(const Permutation& p, int d) {
  const int n = p.degree();
  if (d < 2 || n < d) {
    throw DomainError("main_step needs n >= d >= 2; got n = " +
                      std::to_string(n) + ", d = " + std::to_string(d));
  }
  const int length = word_length(p);
  // |sigma| < K_n = (n - d)/2, kept in integers.
  if (2 * length >= n - d) {
    throw DomainError("main_step: |" + p.to_string() + "| = " +
                      std::to_string(length) + " is not below K_n = (" +
                      std::to_string(n) + " - " + std::to_string(d) + ")/2");
  }
  const GreedyForm gf = left_greedy_form(p);
  const auto decomposition = first_chunk_preserving(gf, d);
  if (!decomposition) {
    throw FalsificationError("no chunk-preserving decomposition into " +
                             std::to_string(d) + " pieces");
  }
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 1);
  std::vector<Permutation> children;
  while (std::next_permutation(order.begin(), order.end())) {
    children.push_back(apply_rearrangement(*decomposition, Permutation(order)));
  }
  return children;
}

ReductionTrace main_closure(int n, int d) {
  require_closure_range("main_closure", n, d, kMainClosureMaxN);
  ReductionTrace trace{ReductionMode::kMain, n, d, {}, {}, 0, 0, {}, {}};
  const auto inside_ball = [n, d](const Permutation& p) {
    return 2 * word_length(p) < n - d;
  };
  for_each_permutation(n, [&](const Permutation& p) {
    if (inside_ball(p)) trace.sources.push_back(p);
  });
  ClosureRules rules;
  rules.is_terminal = [inside_ball](const Permutation& p) {
    return !inside_ball(p);
  };
  rules.expand = [d](const Permutation& p) { return main_step(p, d); };
  rules.improves = [](const Permutation& parent, const Permutation& child) {
    return word_length(child) > word_length(parent);
  };
  rules.child_first = [](const Permutation& a, const Permutation& b) {
    return word_length(a) > word_length(b);
  };
  rules.measure_name = "word length";
  trace.reference_count = ball_complement_count(n, Rational(n - d, 2));
  return run_closure(std::move(trace), rules);
}

}  // namespace codim
