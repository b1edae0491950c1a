// pls: command line front end.
//
// Exit codes: 0 success / affirmative verdict, 1 negative verdict,
// 2 usage, parse or precondition error, 3 solver budget exhausted.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pls/cycle_type.hpp"
#include "pls/error.hpp"
#include "pls/io.hpp"
#include "pls/reduction.hpp"
#include "pls/search.hpp"
#include "pls/smetaniuk.hpp"
#include "pls/solver.hpp"
#include "pls/transform.hpp"

using namespace pls;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

std::string format = "grid";

PartialLatinSquare load(const std::string& path) {
  if (path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return parse_square(buffer.str());
  }
  return read_square(path);
}

std::string render(const PartialLatinSquare& p) { return format == "json" ? to_json(p) + "\n" : to_grid(p); }

// Writes to `path`, or stdout when it is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::PreconditionViolated, "cannot write " + path);
  out << text;
}

int cmd_check(const std::string& file, const std::string& witness) {
  const auto p = load(file);
  const auto cert = is_completable(p);
  if (!cert.completable()) {
    std::cout << "non-completable\n";
    return kNegative;
  }
  std::cout << "completable\n";
  if (!witness.empty()) emit(witness, render(*cert.witness));
  return kOk;
}

int cmd_reduce(const std::string& file, bool json) {
  const auto p = load(file);
  const auto trace = successive_reduce(p);
  if (json) {
    std::cout << trace_to_json(trace.steps) << "\n";
  } else {
    for (const auto& s : trace.steps) {
      std::cout << "order " << s.order << ": alpha=" << s.alpha << " row=" << s.row << " column=" << s.column
                << " j=" << s.lines.j << " k=" << s.lines.k << " l=" << s.lines.l << " q=" << s.lines.q
                << " r=" << s.lines.r << "\n";
    }
  }
  std::cout << "terminal order " << trace.terminal.order() << " " << cycle_type(trace.terminal).to_string() << "\n";
  std::cout << "label " << to_string(classify_terminal(trace.terminal)) << "\n";
  return kOk;
}

int cmd_complete(const std::string& file, bool oracle, const std::string& out, const std::string& trace_path) {
  const auto p = load(file);
  if (oracle) {
    const auto cert = is_completable(p);
    if (!cert.completable()) {
      std::cerr << "non-completable\n";
      return kNegative;
    }
    emit(out, render(*cert.witness));
    return kOk;
  }
  const auto result = complete_corollary(p);
  if (!trace_path.empty()) {
    std::ostringstream t;
    t << "# reduction\n" << trace_to_json(result.trace.steps) << "\n";
    t << "# terminal " << to_string(result.label) << " via " << to_string(result.path) << "\n";
    t << to_grid(result.trace.terminal);
    if (!result.pipeline_trace.empty()) t << result.pipeline_trace;
    t << "# terminal completion\n" << to_grid(result.terminal_completion);
    emit(trace_path, t.str());
  }
  if (!result.certificate.completable()) {
    std::cerr << "non-completable\n";
    return kNegative;
  }
  emit(out, render(*result.certificate.witness));
  return kOk;
}

struct SearchArgs {
  std::string family;
  int order = 0;
  int jobs = 1;
  std::string checkpoint;
  std::uint64_t samples = 0;
  std::uint64_t chunk = 1000;
  std::uint64_t seed = 1;
  bool quiet = false;
  std::string out;
};

int cmd_search(const SearchArgs& a) {
  const auto family = parse_family(a.family);
  if (!family) throw Error(ErrorCode::PreconditionViolated, "unknown family " + a.family);
  VerifyOptions options;
  options.jobs = a.jobs;
  options.checkpoint = a.checkpoint;
  options.samples = a.samples;
  options.chunk = a.chunk;
  options.seed = a.seed;
  if (!a.quiet) {
    options.progress = [](int done, int total) {
      if (done == total || done % 50 == 0) std::fprintf(stderr, "\r%d/%d partitions", done, total);
      if (done == total) std::fprintf(stderr, "\n");
    };
  }
  const auto report = verify_family(a.order, *family, options);
  emit(a.out, report_to_json(report) + "\n");
  return report.witnesses.empty() ? kOk : kNegative;
}

int cmd_conjugate(const std::string& kind_text, const std::string& file) {
  const auto kind = parse_conjugate_kind(kind_text);
  if (!kind) throw Error(ErrorCode::PreconditionViolated, "unknown conjugate " + kind_text);
  std::cout << render(conjugate(load(file), *kind));
  return kOk;
}

int cmd_classify(const std::string& file) {
  const auto p = load(file);
  const auto type = cycle_type(p);
  std::cout << type.to_string() << "\n";
  if (p.order() >= 8) {
    std::cout << (is_completely_reduced(p) ? "completely reduced" : "reducible") << "\n";
    try {
      std::cout << "label " << to_string(classify_terminal(p)) << "\n";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Unclassifiable) throw;
      std::cout << "label none\n";
    }
  }
  return kOk;
}

int cmd_smetaniuk(const std::string& file, const std::string& mode, const std::string& fill_text) {
  const auto p = load(file);
  if (mode == "t") {
    std::cout << render(t_construct(p));
    return kOk;
  }
  std::vector<int> fill;
  if (fill_text.empty()) {
    fill = default_diagonal_fill(p.order() + 2);
  } else {
    for (char ch : fill_text) {
      if (ch != '0' && ch != '1') throw Error(ErrorCode::InvalidDiagonalFill, "fill must be a 0/1 string");
      fill.push_back(ch - '0');
    }
  }
  const auto t2 = t2_construct(p, fill);
  if (mode == "t2") {
    std::cout << render(t2.lifted);
    return kOk;
  }
  PartialLatinSquare l;
  try {
    l = smetaniuk_complete_t2(t2);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotCompletable) throw;
    std::cout << "non-completable\n";
    return kNegative;
  }
  std::cout << render(l);
  const auto report = verify_observations(l, p, t2.diagonal);
  for (const auto& item : report.items) {
    std::cout << "# " << item.name << ": " << to_string(item.status);
    if (!item.detail.empty()) std::cout << " (" << item.detail << ")";
    std::cout << "\n";
  }
  return report.ok() ? kOk : kNegative;
}

int cmd_verify(const std::string& partial_file, const std::string& latin_file) {
  const auto p = load(partial_file);
  const auto l = load(latin_file);
  if (!l.is_complete()) {
    std::cout << "not a Latin square\n";
    return kNegative;
  }
  if (!extends(l, p)) {
    std::cout << "does not extend\n";
    return kNegative;
  }
  std::cout << "valid completion\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial Latin square completion toolkit"};
  app.require_subcommand(1);
  app.add_option("--format", format, "Output format for squares")->check(CLI::IsMember({"grid", "json"}));

  std::string file, file2, out, witness, trace, kind, mode = "complete", fill;
  bool oracle = false, json = false;
  SearchArgs search;

  auto* check = app.add_subcommand("check", "Decide completability with the exact solver");
  check->add_option("file", file, "Grid or JSON square, - for stdin")->required();
  check->add_option("--witness", witness, "Write a completion here");

  auto* reduce = app.add_subcommand("reduce", "Successive proper reductions of a PLS(2,3;n)");
  reduce->add_option("file", file)->required();
  reduce->add_flag("--json", json, "Print the steps as JSON");

  auto* complete = app.add_subcommand("complete", "Complete a Latin-rectangle-corner PLS(2,3;n)");
  complete->add_option("file", file)->required();
  complete->add_flag("--oracle", oracle, "Accept any square and use the exact solver");
  complete->add_option("-o,--output", out, "Completion output (default stdout)");
  complete->add_option("--trace", trace, "Write reduction and construction stages here");

  auto* srch = app.add_subcommand("search", "Verify a family of PLS(2,3;n) by exhaustive search");
  srch->add_option("--family", search.family, "all or ct111")->required();
  srch->add_option("--order", search.order, "n: 8 (all), 9 or 11 (ct111)")->required();
  srch->add_option("--jobs", search.jobs, "Worker threads")->check(CLI::PositiveNumber);
  srch->add_option("--checkpoint", search.checkpoint, "Resumable checkpoint file");
  srch->add_option("--samples", search.samples, "Random canonical instances instead of the full family");
  srch->add_option("--chunk", search.chunk, "Samples per partition")->check(CLI::PositiveNumber);
  srch->add_option("--seed", search.seed, "Sampling seed");
  srch->add_option("-o,--output", search.out, "Report output (default stdout)");
  srch->add_flag("--quiet", search.quiet, "No progress on stderr");

  auto* conj = app.add_subcommand("conjugate", "Conjugate by a coordinate permutation");
  conj->add_option("kind", kind, "rcs, crs, scr, csr, rsc or src")->required();
  conj->add_option("file", file)->required();

  auto* classify = app.add_subcommand("classify", "Cycle type and terminal family of a PLS(2,3;n)");
  classify->add_option("file", file)->required();

  auto* smet = app.add_subcommand("smetaniuk", "T and T2 lifts and their completion");
  smet->add_option("file", file)->required();
  smet->add_option("--mode", mode, "t, t2 or complete")->check(CLI::IsMember({"t", "t2", "complete"}));
  smet->add_option("--fill", fill, "0/1 choice per augmented diagonal cell, row-major");

  auto* verify = app.add_subcommand("verify", "Check that L is a Latin square extending P");
  verify->add_option("partial", file)->required();
  verify->add_option("latin", file2)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(file, witness);
    if (*reduce) return cmd_reduce(file, json);
    if (*complete) return cmd_complete(file, oracle, out, trace);
    if (*srch) return cmd_search(search);
    if (*conj) return cmd_conjugate(kind, file);
    if (*classify) return cmd_classify(file);
    if (*smet) return cmd_smetaniuk(file, mode, fill);
    if (*verify) return cmd_verify(file, file2);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::BudgetExceeded ? kBudget : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
