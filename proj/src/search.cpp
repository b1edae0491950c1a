#include "pls/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pls/cycle_type.hpp"
#include "pls/error.hpp"
#include "pls/generators.hpp"
#include "pls/io.hpp"
#include "pls/theorem32.hpp"

namespace pls {

namespace {

using Mask = std::uint64_t;

Mask bit(int s) { return Mask{1} << s; }

void require_band(const PartialLatinSquare& p) {
  if (!in_band_form(p, 2, 3) || !p.has_standard_alphabet()) {
    throw Error(ErrorCode::NotNormalForm, "expected PLS(2,3;n) over [n]");
  }
}

CycleType ct111_type(int n) { return CycleType({{"111", 1}, {"00", (n - 3) / 2}}); }

void require_supported(int n, Family family) {
  if (n < 8) throw Error(ErrorCode::OrderTooSmall, "search needs n >= 8");
  if (n > 62) throw Error(ErrorCode::PreconditionViolated, "search supports n <= 62");
  if (family == Family::ct111 && n % 2 == 0) {
    throw Error(ErrorCode::PreconditionViolated, "ct111 needs odd n");
  }
}

// Rows 1-2 and column 1 of the canonical square for one partition.
Grid frame(int n, Family family, const Partition& part) {
  Grid g(n);
  for (int c = 1; c <= n; ++c) g.at(1, c) = c;
  if (family == Family::ct111) {
    g.at(2, 1) = 2;
    g.at(2, 2) = 3;
    g.at(2, 3) = 1;
    for (int c = 4; c <= n; c += 2) {
      g.at(2, c) = c + 1;
      g.at(2, c + 1) = c;
    }
    for (int r = 2; r <= n; ++r) g.at(r, 1) = r;
    return g;
  }
  for (int c = 1; c <= n; ++c) g.at(2, c) = part.prefix[static_cast<std::size_t>(c - 1)];
  const int t = g.at(2, 1);
  int r = 3;
  for (int s = 2; s <= n; ++s)
    if (s != t) g.at(r++, 1) = s;
  return g;
}

struct Filler {
  Grid& g;
  int n;
  const Visitor& visit;
  std::uint64_t emitted = 0;
  bool stopped = false;

  void run(int r, Mask used2, Mask used3) {
    if (stopped) return;
    if (r > n) {
      ++emitted;
      if (!visit(validate(g))) stopped = true;
      return;
    }
    const int left = g.at(r, 1);
    if (g.at(r, 2) != kEmpty) {  // fixed by the partition prefix
      const int a = g.at(r, 2);
      fill3(r, a, used2, used3, left);
      return;
    }
    for (int a = 1; a <= n && !stopped; ++a) {
      if ((used2 & bit(a)) || a == left) continue;
      g.at(r, 2) = a;
      fill3(r, a, used2 | bit(a), used3, left);
    }
    g.at(r, 2) = kEmpty;
  }

  void fill3(int r, int a, Mask used2, Mask used3, int left) {
    for (int b = 1; b <= n && !stopped; ++b) {
      if ((used3 & bit(b)) || b == left || b == a) continue;
      g.at(r, 3) = b;
      run(r + 1, used2, used3 | bit(b));
    }
    g.at(r, 3) = kEmpty;
  }
};

// Second rows of the all family: derangements of [n] with P(2,1) = t.
void second_rows(int n, std::vector<std::vector<int>>& out) {
  std::vector<int> row(static_cast<std::size_t>(n));
  Mask used = 0;
  std::function<void(int)> go = [&](int c) {
    if (c > n) {
      out.push_back(row);
      return;
    }
    for (int s = 1; s <= n; ++s) {
      if ((used & bit(s)) || s == c) continue;
      if (c == 1 && s != 2 && s != 4) continue;
      if (c <= 3 && row[0] == 4 && s <= 3) continue;
      row[static_cast<std::size_t>(c - 1)] = s;
      used |= bit(s);
      go(c + 1);
      used &= ~bit(s);
    }
  };
  go(1);
}

std::map<int, PartitionResult> read_checkpoint(const std::string& path, const std::string& header) {
  std::map<int, PartitionResult> done;
  std::ifstream in(path);
  if (!in) return done;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (first && line != header) {
        throw Error(ErrorCode::PreconditionViolated,
                    "checkpoint " + path + " belongs to another run: " + line);
      }
      first = false;
      continue;
    }
    first = false;
    std::istringstream fields(line);
    PartitionResult r;
    if (!(fields >> r.id >> r.completable >> r.total)) {
      throw Error(ErrorCode::ParseError, "bad checkpoint line: " + line);
    }
    done[r.id] = r;
  }
  return done;
}

}  // namespace

std::string_view to_string(Family family) {
  return family == Family::all ? "all" : "ct111";
}

std::optional<Family> parse_family(std::string_view text) {
  if (text == "all") return Family::all;
  if (text == "ct111") return Family::ct111;
  return std::nullopt;
}

bool is_canonical(const PartialLatinSquare& p, Family family) {
  if (!in_band_form(p, 2, 3) || !p.has_standard_alphabet()) return false;
  const int n = p.order();
  if (family == Family::ct111) {
    if (n < 5 || n % 2 == 0) return false;
    Partition none;
    const Grid want = frame(n, family, none);
    for (int c = 1; c <= n; ++c)
      if (p.at(1, c) != want.at(1, c) || p.at(2, c) != want.at(2, c)) return false;
    for (int r = 1; r <= n; ++r)
      if (p.at(r, 1) != r) return false;
    return true;
  }
  for (int c = 1; c <= n; ++c)
    if (p.at(1, c) != c) return false;
  const int t = p.at(2, 1);
  if (t != 2 && t != 4) return false;
  if (t == 4 && (p.at(2, 2) <= 3 || p.at(2, 3) <= 3)) return false;
  for (int r = 4; r <= n; ++r)
    if (p.at(r, 1) <= p.at(r - 1, 1)) return false;
  return true;
}

Isotopy canonical_isotopy(const PartialLatinSquare& p, Family family) {
  require_band(p);
  const int n = p.order();
  if (family == Family::ct111) {
    if (!(cycle_type(p) == ct111_type(n)) || n % 2 == 0) {
      throw Error(ErrorCode::WrongCycleType, "expected " + ct111_type(n).to_string());
    }
    return ct111_normal_isotopy(p);
  }
  const Permutation sigma = row_permutation(p, 1, 2);
  auto corner_column = [&](int symbol) {
    const int c = p.column_of(1, symbol);
    return c <= 3 ? c : 0;
  };
  std::vector<int> new_col(static_cast<std::size_t>(n), 0);
  int lead = 0;
  for (int c = 1; c <= 3 && lead == 0; ++c)
    if (corner_column(sigma(p.at(1, c))) != 0) lead = c;
  if (lead != 0) {
    const int second = corner_column(sigma(p.at(1, lead)));
    new_col[static_cast<std::size_t>(lead - 1)] = 1;
    new_col[static_cast<std::size_t>(second - 1)] = 2;
    for (int c = 1; c <= 3; ++c)
      if (c != lead && c != second) new_col[static_cast<std::size_t>(c - 1)] = 3;
    for (int c = 4; c <= n; ++c) new_col[static_cast<std::size_t>(c - 1)] = c;
  } else {
    for (int c = 1; c <= 3; ++c) new_col[static_cast<std::size_t>(c - 1)] = c;
    const int target = p.column_of(1, sigma(p.at(1, 1)));
    new_col[static_cast<std::size_t>(target - 1)] = 4;
    int next = 5;
    for (int c = 4; c <= n; ++c)
      if (c != target) new_col[static_cast<std::size_t>(c - 1)] = next++;
  }
  const Permutation cols(new_col);
  std::vector<int> new_symbol(static_cast<std::size_t>(n));
  for (int c = 1; c <= n; ++c) new_symbol[static_cast<std::size_t>(p.at(1, c) - 1)] = cols(c);
  const Permutation symbols(new_symbol);
  const int t = lead != 0 ? 2 : 4;
  std::vector<int> new_row(static_cast<std::size_t>(n));
  new_row[0] = 1;
  new_row[1] = 2;
  const int first = cols.inverse()(1);
  for (int r = 3; r <= n; ++r) {
    const int s = symbols(p.at(r, first));
    new_row[static_cast<std::size_t>(r - 1)] = s < t ? s + 1 : s;  // rows 3.. hold [n] \ {1, t}
  }
  return {Permutation(new_row), cols, symbols};
}

std::vector<Partition> partitions(int n, Family family) {
  require_supported(n, family);
  std::vector<Partition> out;
  if (family == Family::all) {
    std::vector<std::vector<int>> rows;
    second_rows(n, rows);
    for (auto& row : rows) out.push_back({static_cast<int>(out.size()), std::move(row)});
    return out;
  }
  // Column 2 avoids 2 and 3 (rows 1-2); row r avoids r (column 1).
  for (int a = 1; a <= n; ++a) {
    if (a == 2 || a == 3) continue;
    for (int b = 1; b <= n; ++b) {
      if (b == 2 || b == 3 || b == 4 || b == a) continue;
      out.push_back({static_cast<int>(out.size()), {a, b}});
    }
  }
  return out;
}

std::uint64_t enumerate_partition(int n, Family family, const Partition& part, const Visitor& visit) {
  require_supported(n, family);
  Grid g = frame(n, family, part);
  Mask used2 = bit(g.at(1, 2)) | bit(g.at(2, 2));
  const Mask used3 = bit(g.at(1, 3)) | bit(g.at(2, 3));
  if (family == Family::ct111) {
    g.at(3, 2) = part.prefix.at(0);
    g.at(4, 2) = part.prefix.at(1);
    used2 |= bit(part.prefix[0]) | bit(part.prefix[1]);
  }
  Filler filler{g, n, visit};
  filler.run(3, used2, used3);
  return filler.emitted;
}

std::uint64_t enumerate(int n, Family family, const Visitor& visit) {
  std::uint64_t total = 0;
  bool stopped = false;
  const Visitor inner = [&](const PartialLatinSquare& p) {
    if (!visit(p)) stopped = true;
    return !stopped;
  };
  for (const auto& part : partitions(n, family)) {
    total += enumerate_partition(n, family, part, inner);
    if (stopped) break;
  }
  return total;
}

bool SearchReport::consistent() const {
  std::uint64_t inst = 0, comp = 0;
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    if (i > 0 && partitions[i].id <= partitions[i - 1].id) return false;
    if (partitions[i].completable > partitions[i].total) return false;
    inst += partitions[i].total;
    comp += partitions[i].completable;
  }
  return inst == instances && comp == completable && completable <= instances;
}

SearchReport verify_family(int n, Family family, const VerifyOptions& options) {
  const bool supported = (n == 8 && family == Family::all) || (n == 9 && family == Family::ct111) ||
                         (n == 11 && family == Family::ct111);
  if (!supported) {
    throw Error(ErrorCode::PreconditionViolated,
                "unsupported search (" + std::to_string(n) + ", " + std::string(to_string(family)) + ")");
  }
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.order = n;
  report.family = family;
  report.exhaustive = options.samples == 0;
  report.seed = options.seed;

  std::vector<Partition> work;
  if (report.exhaustive) {
    work = partitions(n, family);
  } else {
    const std::uint64_t chunk = std::max<std::uint64_t>(options.chunk, 1);
    const std::uint64_t count = (options.samples + chunk - 1) / chunk;
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::uint64_t size = std::min(chunk, options.samples - i * chunk);
      work.push_back({static_cast<int>(i), {static_cast<int>(size)}});
    }
  }
  const int total_parts = static_cast<int>(work.size());

  std::ostringstream header;
  header << "# order=" << n << " family=" << to_string(family) << " mode="
         << (report.exhaustive ? "exhaustive" : "sample") << " samples=" << options.samples
         << " chunk=" << options.chunk << " seed=" << options.seed;
  std::map<int, PartitionResult> done;
  std::ofstream checkpoint;
  if (!options.checkpoint.empty()) {
    done = read_checkpoint(options.checkpoint, header.str());
    const bool fresh = !std::ifstream(options.checkpoint).good() || done.empty();
    checkpoint.open(options.checkpoint, fresh ? std::ios::trunc : std::ios::app);
    if (!checkpoint) throw Error(ErrorCode::PreconditionViolated, "cannot write " + options.checkpoint);
    if (fresh) checkpoint << header.str() << '\n' << std::flush;
  }
  report.resumed = static_cast<int>(done.size());
  std::vector<Partition> pending;
  for (auto& part : work)
    if (!done.count(part.id)) pending.push_back(std::move(part));

  std::mutex mutex;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> nodes{0};
  std::exception_ptr failure;
  int finished = report.resumed;

  auto process = [&](const Partition& part) -> std::optional<PartitionResult> {
    PartitionResult result{part.id, 0, 0};
    bool halted = false;
    auto check = [&](const PartialLatinSquare& p) {
      if (stop.load()) {
        halted = true;
        return false;
      }
      const auto cert = is_completable(p, options.solver);
      nodes += cert.stats.nodes;
      ++result.total;
      if (cert.completable()) {
        ++result.completable;
        return true;
      }
      std::lock_guard lock(mutex);
      report.witnesses.push_back(p);
      stop = true;
      halted = true;
      return false;
    };
    if (report.exhaustive) {
      enumerate_partition(n, family, part, check);
    } else {
      std::seed_seq seq{options.seed, static_cast<std::uint64_t>(part.id)};
      Rng rng(seq);
      for (int i = 0; i < part.prefix[0] && !halted; ++i) {
        const PartialLatinSquare raw =
            family == Family::all ? random_band_square(n, rng) : random_with_cycle_type(ct111_type(n), rng);
        check(apply_isotopy(raw, canonical_isotopy(raw, family)));
      }
    }
    if (halted) return std::nullopt;
    return result;
  };

  auto worker = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= pending.size()) break;
      try {
        const auto result = process(pending[i]);
        if (!result) break;
        std::lock_guard lock(mutex);
        done[result->id] = *result;
        if (checkpoint.is_open()) {
          checkpoint << result->id << ' ' << result->completable << ' ' << result->total << '\n'
                     << std::flush;
        }
        ++finished;
        if (options.progress) options.progress(finished, total_parts);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
        stop = true;
        break;
      }
    }
  };

  const int jobs = std::max(1, options.jobs);
  std::vector<std::thread> threads;
  for (int j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  for (const auto& [id, r] : done) {
    report.partitions.push_back(r);
    report.instances += r.total;
    report.completable += r.completable;
  }
  report.nodes = nodes.load();
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_to_json(const SearchReport& report) {
  nlohmann::ordered_json doc;
  doc["order"] = report.order;
  doc["family"] = std::string(to_string(report.family));
  doc["mode"] = report.exhaustive ? "exhaustive" : "sample";
  if (!report.exhaustive) doc["seed"] = report.seed;
  doc["instances"] = report.instances;
  doc["completable"] = report.completable;
  doc["non_completable"] = report.witnesses.size();
  doc["witnesses"] = nlohmann::json::array();
  for (const auto& w : report.witnesses) doc["witnesses"].push_back(to_grid(w));
  doc["partitions"] = report.partitions.size();
  doc["run"] = {{"seconds", report.seconds}, {"nodes", report.nodes}, {"resumed", report.resumed}};
  return doc.dump(2);
}

std::string_view to_string(CorollaryPath path) {
  return path == CorollaryPath::pipeline ? "pipeline" : "oracle";
}

CorollaryResult complete_corollary(const PartialLatinSquare& p, const SolverOptions& options) {
  if (!in_band_form(p, 2, 3) || !p.has_standard_alphabet()) {
    throw Error(ErrorCode::PreconditionViolated, "expected PLS(2,3;n) over [n]");
  }
  if (p.order() < 8) throw Error(ErrorCode::PreconditionViolated, "n >= 8 required");
  Mask top = 0, bottom = 0;
  for (int c = 1; c <= 3; ++c) {
    top |= bit(p.at(1, c));
    bottom |= bit(p.at(2, c));
  }
  if (top != bottom) throw Error(ErrorCode::PreconditionViolated, "2x3 corner is not a Latin rectangle");

  CorollaryResult out;
  out.trace = successive_reduce(p);
  const PartialLatinSquare& terminal = out.trace.terminal;
  out.label = classify_terminal(terminal);
  const int m = terminal.order();
  if (m % 2 == 1 && m >= 13) {
    if (out.label.kind != TerminalLabel::Kind::e) {
      throw Error(ErrorCode::PipelineDefect, "terminal " + to_string(out.label) + " outside family (e)");
    }
    out.path = CorollaryPath::pipeline;
    auto result = complete_theorem32(terminal, options);
    out.terminal_completion = result.completion;
    out.pipeline_trace = trace_to_text(result.state);
  } else {
    out.path = CorollaryPath::oracle;
    const auto cert = is_completable(terminal, options);
    if (!cert.completable()) {
      throw Error(ErrorCode::PipelineDefect, "terminal of order " + std::to_string(m) + " not completable");
    }
    out.terminal_completion = *cert.witness;
  }
  out.certificate = is_completable(p, options);
  return out;
}

}  // namespace pls
