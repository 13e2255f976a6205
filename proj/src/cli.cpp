#include "codim/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "codim/bounds.hpp"
#include "codim/errors.hpp"
#include "codim/greedy_form.hpp"
#include "codim/mahonian.hpp"
#include "codim/verify.hpp"
#include "json.hpp"

namespace codim {
namespace {

using Json = nlohmann::ordered_json;
using Table = std::vector<std::vector<std::string>>;

constexpr int kMahonianCheckBruteForceMaxN = 8;

void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const Table& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out << "  ";
      out << std::string(width[c] - cells[c].size(), ' ') << cells[c];
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const Table& rows) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out << ',';
      out << cells[c];
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

void write_rows(std::ostream& out, OutputFormat format,
                const std::vector<std::string>& header, const Table& rows) {
  if (format == OutputFormat::kCsv) {
    write_csv(out, header, rows);
  } else {
    write_table(out, header, rows);
  }
}

std::string letters(const Permutation& p, const MaybeSpan& span) {
  std::string out = "[";
  if (span) {
    for (int pos = span->start; pos <= span->end; ++pos) {
      if (pos > span->start) out += ',';
      out += std::to_string(p.at(pos));
    }
  }
  return out + "]";
}

std::string span_text(const MaybeSpan& span) {
  if (!span) return "-";
  return std::to_string(span->start) + ".." + std::to_string(span->end);
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "table") return OutputFormat::kTable;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw ValidationError("unknown format '" + std::string(text) + "'");
}

int cmd_mahonian(int n, bool check, OutputFormat format, std::ostream& out) {
  const MahonianRow row = mahonian_row(n);
  std::vector<std::string> mismatches;
  if (check) {
    for (int k = 0; k <= n; ++k) {
      const BigInt expected = k <= row.max_inversions() ? row.at(k) : BigInt(0);
      const BigInt knuth = mahonian_knuth(n, k);
      if (knuth != expected) {
        mismatches.push_back("knuth k=" + std::to_string(k) + ": " +
                             knuth.str() + " != " + expected.str());
      }
    }
    if (n <= kMahonianCheckBruteForceMaxN) {
      const MahonianRow brute = brute_force_row(n);
      for (int k = 0; k <= row.max_inversions(); ++k) {
        if (brute.at(k) != row.at(k)) {
          mismatches.push_back("brute force k=" + std::to_string(k) + ": " +
                               brute.at(k).str() + " != " + row.at(k).str());
        }
      }
    }
    if (row.sum() != factorial(n)) mismatches.push_back("row sum is not n!");
  }

  if (format == OutputFormat::kJson) {
    Json doc = Json::parse(row.to_json());
    if (check) {
      doc["check"] = {{"ok", mismatches.empty()}, {"mismatches", mismatches}};
    }
    out << doc.dump() << '\n';
  } else {
    Table rows;
    for (int k = 0; k <= row.max_inversions(); ++k) {
      rows.push_back({std::to_string(n), std::to_string(k), row.at(k).str()});
    }
    write_rows(out, format, {"n", "k", "count"}, rows);
    if (check) {
      const char* prefix = format == OutputFormat::kCsv ? "# " : "";
      if (mismatches.empty()) {
        out << prefix << "OK: product formula agrees with Knuth's formula"
            << (n <= kMahonianCheckBruteForceMaxN ? " and brute force" : "")
            << '\n';
      }
      for (const auto& m : mismatches) out << prefix << "MISMATCH " << m << '\n';
    }
  }
  return mismatches.empty() ? kExitOk : kExitFailure;
}

int cmd_bounds(int d, int n_max, OutputFormat format, std::ostream& out) {
  const BoundReport report = compare_bounds(d, n_max);
  if (format == OutputFormat::kJson) {
    out << report.to_json() << '\n';
    return kExitOk;
  }
  if (format == OutputFormat::kCsv) {
    out << report.to_csv();
    return kExitOk;
  }
  Table rows;
  for (const auto& row : report.rows) {
    rows.push_back({std::to_string(row.n), row.classic.str(),
                    row.theorem.str(), row.phi.str(), row.factorial.str(),
                    to_string(row.winner)});
  }
  write_table(out, {"n", "classic", "theorem", "phi", "factorial", "winner"},
              rows);
  out << "n(" << d << ") = " << report.crossover << '\n';
  return kExitOk;
}

int cmd_crossover(int d_max, OutputFormat format, std::ostream& out) {
  if (d_max < 2) throw DomainError("d_max must be at least 2");
  Table rows;
  Json doc = Json::array();
  for (int d = 2; d <= d_max; ++d) {
    const int n_d = crossover_n(d);
    rows.push_back({std::to_string(d), std::to_string(n_d)});
    doc.push_back({{"d", d}, {"n_d", n_d}});
  }
  if (format == OutputFormat::kJson) {
    out << doc.dump() << '\n';
  } else {
    write_rows(out, format, {"d", "n_d"}, rows);
  }
  return kExitOk;
}

int cmd_verify(int n_max, const std::vector<std::string>& suites,
               OutputFormat format, std::ostream& out) {
  std::vector<std::string> selected = suites.empty() ? suite_names() : suites;
  for (const auto& name : selected) suite_cap(name);  // rejects unknown names

  std::vector<SuiteResult> results;
  for (const auto& name : selected) {
    results.push_back(run_suite(name, std::min(n_max, suite_cap(name))));
  }
  const bool all_passed = std::all_of(
      results.begin(), results.end(),
      [](const SuiteResult& r) { return r.passed(); });

  if (format == OutputFormat::kJson) {
    Json doc;
    doc["ok"] = all_passed;
    auto& list = doc["suites"] = Json::array();
    for (const auto& r : results) {
      list.push_back({{"name", r.name},
                      {"description", r.description},
                      {"n_max", r.n_max},
                      {"cases", r.cases},
                      {"failures", r.failures},
                      {"counterexamples", r.counterexamples},
                      {"notes", r.notes}});
    }
    out << doc.dump() << '\n';
  } else {
    Table rows;
    for (const auto& r : results) {
      rows.push_back({r.name, std::to_string(r.n_max), std::to_string(r.cases),
                      std::to_string(r.failures), r.passed() ? "pass" : "FAIL"});
    }
    write_rows(out, format, {"suite", "n_max", "cases", "failures", "status"},
               rows);
    for (const auto& r : results) {
      if (format == OutputFormat::kTable && !r.notes.empty()) {
        out << "\n[" << r.name << "] " << r.description << '\n';
        for (const auto& note : r.notes) out << "  " << note << '\n';
      }
      for (const auto& c : r.counterexamples) {
        out << "# counterexample [" << r.name << "] " << c << '\n';
      }
    }
  }
  return all_passed ? kExitOk : kExitFailure;
}

int cmd_greedy(const std::string& perm, OutputFormat format,
               std::ostream& out) {
  const Permutation p = Permutation::parse(perm);
  const GreedyForm gf = left_greedy_form(p);
  const ChunkStats stats = chunk_stats(p);
  if (format == OutputFormat::kJson) {
    Json doc = Json::parse(gf.to_json());
    doc["stats"] = {{"chunk_count", stats.chunk_count},
                    {"total_chunk_length", stats.total_chunk_length},
                    {"word_length", stats.word_length}};
    out << doc.dump() << '\n';
    return kExitOk;
  }
  if (format == OutputFormat::kCsv) {
    Table rows;
    for (int l = 0; l <= gf.chunk_count(); ++l) {
      rows.push_back({"w" + std::to_string(l), span_text(gf.gaps[l]),
                      letters(p, gf.gaps[l])});
      if (l < gf.chunk_count()) {
        rows.push_back({"c" + std::to_string(l + 1), span_text(gf.chunks[l]),
                        letters(p, gf.chunks[l])});
      }
    }
    // Letter lists contain commas; quote-free output keeps them space separated.
    for (auto& row : rows) std::replace(row[2].begin(), row[2].end(), ',', ' ');
    write_csv(out, {"part", "positions", "letters"}, rows);
    return kExitOk;
  }
  std::string line;
  for (int l = 0; l <= gf.chunk_count(); ++l) {
    if (gf.gaps[l]) {
      if (!line.empty()) line += ' ';
      line += "w" + std::to_string(l) + "=" + letters(p, gf.gaps[l]);
    }
    if (l < gf.chunk_count()) {
      if (!line.empty()) line += ' ';
      line += "c" + std::to_string(l + 1) + "=" + letters(p, gf.chunks[l]);
    }
  }
  out << "perm: " << p.to_string() << '\n';
  out << "form: " << line << '\n';
  if (gf.chunk_count() == 0) out << "no chunks\n";
  out << "chunks: " << stats.chunk_count
      << "  total chunk length: " << stats.total_chunk_length
      << "  word length: " << stats.word_length << '\n';
  return kExitOk;
}

int cmd_reduce_step(const std::string& perm, int d, ReductionMode mode,
                    OutputFormat format, std::ostream& out) {
  const Permutation p = Permutation::parse(perm);
  const std::vector<Permutation> children =
      mode == ReductionMode::kClassic ? classic_step(p, d) : main_step(p, d);
  const int parent_length = word_length(p);
  bool monotone = true;
  Table rows;
  Json list = Json::array();
  for (const auto& child : children) {
    const int length = word_length(child);
    const bool smaller = child < p;
    const bool ok = mode == ReductionMode::kClassic ? smaller
                                                    : length > parent_length;
    monotone = monotone && ok;
    rows.push_back({child.to_string(), std::to_string(length),
                    smaller ? "yes" : "no", ok ? "ok" : "VIOLATION"});
    list.push_back({{"perm", child.to_string()},
                    {"word_length", length},
                    {"dictionary_smaller", smaller},
                    {"monotone", ok}});
  }
  if (format == OutputFormat::kJson) {
    Json doc;
    doc["mode"] = to_string(mode);
    doc["d"] = d;
    doc["parent"] = p.to_string();
    doc["word_length"] = parent_length;
    doc["children"] = list;
    out << doc.dump() << '\n';
  } else {
    if (format == OutputFormat::kTable) {
      out << to_string(mode) << " step from " << p.to_string()
          << " (|sigma| = " << parent_length << ", d = " << d << "): "
          << children.size() << " children\n";
    }
    // Permutations contain commas, so CSV gets the dash-joined form.
    if (format == OutputFormat::kCsv) {
      for (auto& row : rows) std::replace(row[0].begin(), row[0].end(), ',', '-');
    }
    write_rows(out, format, {"child", "word_length", "dictionary_smaller", "check"},
               rows);
  }
  return monotone ? kExitOk : kExitFailure;
}

int cmd_reduce_closure(int n, int d, ReductionMode mode, bool summary_only,
                       OutputFormat format, std::ostream& out) {
  const ReductionTrace trace =
      mode == ReductionMode::kClassic ? classic_closure(n, d) : main_closure(n, d);
  if (format == OutputFormat::kJson) {
    out << trace.to_json(summary_only) << '\n';
  } else {
    const std::string target =
        mode == ReductionMode::kClassic
            ? "d-good"
            : "B^(" + to_string(Rational(n - d, 2)) + ")";
    write_rows(out, format,
               {"mode", "n", "d", "sources", "visited", "max_depth",
                "terminal", "reference", "falsifications"},
               {{to_string(mode), std::to_string(n), std::to_string(d),
                 std::to_string(trace.sources.size()),
                 std::to_string(trace.visited), std::to_string(trace.max_depth),
                 std::to_string(trace.terminal_support.size()),
                 trace.reference_count.str(),
                 std::to_string(trace.falsifications.size())}});
    if (format == OutputFormat::kTable) {
      out << "terminal support "
          << (trace.ok() ? "lies in " : "NOT verified in ") << target << '\n';
      if (!summary_only) {
        for (const auto& step : trace.steps) {
          out << "  " << step.parent.to_string() << " ->";
          for (const auto& child : step.children) out << ' ' << child.to_string();
          out << '\n';
        }
      }
    }
    for (const auto& f : trace.falsifications) out << "# FALSIFIED " << f << '\n';
  }
  return trace.ok() ? kExitOk : kExitFailure;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return run_cli(args, out, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Permutation geometry and codimension bound calculator", "codim"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_text = "table";
  std::string output_path;
  bool meta = false;
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--output", output_path, "Write output to FILE");
  app.add_flag("--meta", meta, "Prefix output with provenance comments");

  int n = 0;
  int d = 0;
  int n_max = 0;
  int d_max = 0;
  bool check = false;
  bool closure = false;
  bool summary_only = false;
  std::string perm;
  std::string mode_text;
  std::vector<std::string> suites;

  auto* mahonian = app.add_subcommand("mahonian", "Mahonian row I_n(0..C(n,2))");
  mahonian->add_option("--n", n, "Degree")->required();
  mahonian->add_flag("--check", check,
                     "Cross-validate against Knuth's formula and brute force");

  auto* bounds = app.add_subcommand("bounds", "Classic versus ball-complement bound");
  bounds->add_option("--d", d, "Identity degree")->required();
  bounds->add_option("--n-max", n_max, "Largest n")->required();

  auto* crossover = app.add_subcommand(
      "crossover", "Smallest n with (d-1)^(2n) < n! for each d");
  crossover->add_option("--d-max", d_max, "Largest d")->required();

  auto* verify = app.add_subcommand("verify", "Run exhaustive property suites");
  n_max = 6;
  verify->add_option("--n-max", n_max, "Largest n (clamped to suite caps)");
  verify->add_option("--suites", suites, "Comma separated suite names")
      ->delimiter(',');

  auto* greedy = app.add_subcommand("greedy", "Left greedy form of a permutation");
  greedy->add_option("--perm", perm, "One-line notation, e.g. 1,3,2,4")
      ->required();

  auto* reduce = app.add_subcommand("reduce", "Rewrite steps and closures");
  auto* perm_opt = reduce->add_option("--perm", perm, "Permutation to rewrite");
  auto* n_opt = reduce->add_option("--n", n, "Degree for --closure");
  reduce->add_option("--d", d, "Identity degree")->required();
  reduce->add_option("--mode", mode_text, "classic or main")
      ->required()
      ->check(CLI::IsMember({"classic", "main"}));
  reduce->add_flag("--closure", closure, "Run the closure over S_n");
  reduce->add_flag("--summary-only", summary_only, "Omit edges from output");
  perm_opt->excludes(n_opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    const OutputFormat format = parse_format(format_text);
    if (meta) {
      buffer << "# codim";
      for (const auto& a : args) buffer << ' ' << a;
      buffer << '\n';
    }
    if (mahonian->parsed()) {
      code = cmd_mahonian(n, check, format, buffer);
    } else if (bounds->parsed()) {
      code = cmd_bounds(d, n_max, format, buffer);
    } else if (crossover->parsed()) {
      code = cmd_crossover(d_max, format, buffer);
    } else if (verify->parsed()) {
      code = cmd_verify(n_max, suites, format, buffer);
    } else if (greedy->parsed()) {
      code = cmd_greedy(perm, format, buffer);
    } else if (reduce->parsed()) {
      const ReductionMode mode =
          mode_text == "classic" ? ReductionMode::kClassic : ReductionMode::kMain;
      if (closure) {
        if (!n_opt->count()) throw ValidationError("--closure needs --n");
        code = cmd_reduce_closure(n, d, mode, summary_only, format, buffer);
      } else {
        if (!perm_opt->count()) throw ValidationError("reduce needs --perm");
        code = cmd_reduce_step(perm, d, mode, format, buffer);
      }
    }
  } catch (const FalsificationError& e) {
    err << "falsified: " << e.what() << '\n';
    code = kExitFailure;
  } catch (const std::logic_error& e) {
    // ValidationError, DomainError and ScaleError.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(output_path);
    if (!file) {
      err << "error: cannot open " << output_path << " for writing\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace codim
