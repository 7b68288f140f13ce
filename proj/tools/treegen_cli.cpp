#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treegen/treegen.hpp"

namespace {

using treegen::RootedCache;
using treegen::WeightSeq;

enum class Mode { kRooted, kFree };
enum class Format { kWs, kEdges, kAdjList, kMatrix };

struct GenConfig {
  Mode mode = Mode::kFree;
  std::size_t n = 0;
  Format format = Format::kWs;
  bool count_only = false;
  std::size_t cache_L = 0;  // 0 = auto
  std::string output;       // empty = stdout
  std::size_t bench_repeat = 3;
  bool parallel = false;
};

// Auto cache bound: n/2+1 for free workloads; for rooted ones as much as a
// modest memory budget allows while meeting the n/2+1 floor.
std::size_t resolve_cache_bound(const GenConfig& cfg) {
  if (cfg.cache_L != 0) return cfg.cache_L;
  const std::size_t floor_bound = std::max<std::size_t>(4, cfg.n / 2 + 1);
  if (cfg.mode == Mode::kFree) return floor_bound;
  const std::size_t memory_guard = 18;  // |B(18)| ~ 1.7M sequences
  return std::max(floor_bound, std::min(cfg.n > 1 ? cfg.n - 1 : 1, memory_guard));
}

treegen::Generator<WeightSeq> make_stream(const GenConfig& cfg, const RootedCache& cache) {
  return cfg.mode == Mode::kRooted ? treegen::rooted_trees(cfg.n, cache)
                                   : treegen::free_trees(cfg.n, cache);
}

void format_record(const WeightSeq& s, Format format, bool& warned_fallback, bool first,
                   std::ostream& out) {
  switch (format) {
    case Format::kWs: {
      const auto max_w = *std::max_element(s.begin(), s.end());
      if (max_w > 35) {
        if (!warned_fallback) {
          std::cerr << "warning: weights exceed 35; using decimal '.'-separated format\n";
          warned_fallback = true;
        }
        out << treegen::encode_decimal(s) << '\n';
      } else {
        out << treegen::encode_str(s) << '\n';
      }
      break;
    }
    case Format::kEdges: {
      const treegen::AdjList adj = treegen::adj_list_from_ws(s);
      bool sep = false;
      for (std::size_t i = 1; i <= adj.n; ++i) {
        for (int j : adj.nbrs[i]) {
          if (j <= static_cast<int>(i)) continue;
          if (sep) out << ' ';
          out << i << '-' << j;
          sep = true;
        }
      }
      out << '\n';
      break;
    }
    case Format::kAdjList: {
      const treegen::AdjList adj = treegen::adj_list_from_ws(s);
      for (std::size_t i = 1; i <= adj.n; ++i) {
        if (i > 1) out << ';';
        for (std::size_t k = 0; k < adj.nbrs[i].size(); ++k) {
          if (k > 0) out << ' ';
          out << adj.nbrs[i][k];
        }
      }
      out << '\n';
      break;
    }
    case Format::kMatrix: {
      const treegen::AdjMatrix m = treegen::adj_matrix_from_ws(s);
      if (!first) out << '\n';
      for (std::size_t i = 1; i <= m.n; ++i) {
        for (std::size_t j = 1; j <= m.n; ++j) out << (m.at(i, j) ? '1' : '0');
        out << '\n';
      }
      break;
    }
  }
}

// Independent q-partitions of the enumeration, in output order. Merging the
// partition outputs in this order reproduces the sequential stream.
std::vector<std::function<treegen::Generator<WeightSeq>()>> make_partitions(
    const GenConfig& cfg, const RootedCache& cache) {
  std::vector<std::function<treegen::Generator<WeightSeq>()>> parts;
  const std::size_t n = cfg.n;
  if (n == 1) {
    parts.push_back([&cache, &cfg] { return make_stream(cfg, cache); });
    return parts;
  }
  const std::size_t maxq = cfg.mode == Mode::kRooted ? n - 1 : (n - 1) / 2;
  for (std::size_t q = maxq; q >= 1; --q) {
    parts.push_back([n, q, &cache] { return treegen::rt_helper(n, q, cache); });
  }
  if (cfg.mode == Mode::kFree && n % 2 == 0) {
    parts.push_back([n, &cache] { return treegen::bft(n, cache); });
  }
  return parts;
}

std::uint64_t run_count(const GenConfig& cfg, const RootedCache& cache) {
  if (!cfg.parallel) {
    auto gen = make_stream(cfg, cache);
    std::uint64_t count = 0;
    while (gen.next()) ++count;
    return count;
  }
  std::vector<std::future<std::uint64_t>> futures;
  for (auto& part : make_partitions(cfg, cache)) {
    futures.push_back(std::async(std::launch::async, [part] {
      auto gen = part();
      std::uint64_t count = 0;
      while (gen.next()) ++count;
      return count;
    }));
  }
  std::uint64_t total = 0;
  for (auto& f : futures) total += f.get();
  return total;
}

void run_emit(const GenConfig& cfg, const RootedCache& cache, std::ostream& out) {
  bool warned = false;
  if (!cfg.parallel) {
    auto gen = make_stream(cfg, cache);
    bool first = true;
    while (gen.next()) {
      format_record(gen.value(), cfg.format, warned, first, out);
      first = false;
    }
    return;
  }
  // Each partition renders into its own buffer; buffers are written in
  // partition order, so output matches the sequential run byte for byte.
  std::vector<std::future<std::string>> futures;
  for (auto& part : make_partitions(cfg, cache)) {
    futures.push_back(std::async(std::launch::async, [part, &cfg] {
      std::ostringstream buf;
      bool w = false;
      auto gen = part();
      bool first = true;
      while (gen.next()) {
        format_record(gen.value(), cfg.format, w, first, buf);
        first = false;
      }
      return buf.str();
    }));
  }
  bool first = true;
  for (auto& f : futures) {
    const std::string chunk = f.get();
    if (cfg.format == Format::kMatrix && !first && !chunk.empty()) out << '\n';
    out << chunk;
    if (!chunk.empty()) first = false;
  }
}

int run(const GenConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const RootedCache cache(resolve_cache_bound(cfg));
  if (cfg.count_only) {
    const std::uint64_t count = run_count(cfg, cache);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!cfg.output.empty()) {
      file.open(cfg.output);
      out = &file;
    }
    *out << count << '\n';
    std::cerr << ms << " ms\n";
    return 0;
  }
  if (!cfg.output.empty()) {
    std::ofstream file(cfg.output);
    if (!file) {
      std::cerr << "error: cannot open output file '" << cfg.output << "'\n";
      return 1;
    }
    run_emit(cfg, cache, file);
  } else {
    run_emit(cfg, cache, std::cout);
  }
  return 0;
}

int bench(const GenConfig& cfg) {
  const RootedCache cache(resolve_cache_bound(cfg));
  std::vector<double> times;
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < cfg.bench_repeat; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t c = run_count(cfg, cache);
    const auto t1 = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    if (i == 0) {
      count = c;
    } else if (c != count) {
      std::cerr << "error: count changed across repeats (" << count << " vs " << c << ")\n";
      return 1;
    }
  }
  std::sort(times.begin(), times.end());
  const double median = times.size() % 2 == 1
                            ? times[times.size() / 2]
                            : 0.5 * (times[times.size() / 2 - 1] + times[times.size() / 2]);
  std::cout << (cfg.mode == Mode::kRooted ? "rooted" : "free") << " n=" << cfg.n
            << " count=" << count << " repeats=" << cfg.bench_repeat << " min=" << times.front()
            << "ms median=" << median << "ms\n";
  return 0;
}

void add_common_flags(CLI::App* cmd, GenConfig& cfg) {
  const std::map<std::string, Format> formats{{"ws", Format::kWs},
                                              {"edges", Format::kEdges},
                                              {"adjlist", Format::kAdjList},
                                              {"matrix", Format::kMatrix}};
  cmd->add_flag("--count", cfg.count_only, "print only the number of trees");
  cmd->add_option("--format", cfg.format, "output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_option("--cache", cfg.cache_L, "cache bound L (default: auto)")
      ->check(CLI::Range(std::size_t{4}, std::size_t{64}));
  cmd->add_option("--output", cfg.output, "write to file instead of stdout");
  cmd->add_flag("--parallel", cfg.parallel, "order-preserving q-partition parallelism");
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"Exhaustive generation of non-isomorphic rooted and free trees"};
  app.require_subcommand(1);

  GenConfig cfg;
  std::string bench_mode;

  auto* rooted = app.add_subcommand("rooted", "enumerate rooted trees of order n");
  rooted->add_option("n", cfg.n, "tree order")->required()->check(CLI::Range(1, 255));
  add_common_flags(rooted, cfg);

  auto* free_cmd = app.add_subcommand("free", "enumerate free trees of order n");
  free_cmd->add_option("n", cfg.n, "tree order")->required()->check(CLI::Range(1, 255));
  add_common_flags(free_cmd, cfg);

  auto* bench_cmd = app.add_subcommand("bench", "time count-only passes");
  bench_cmd->add_option("mode", bench_mode, "rooted or free")
      ->required()
      ->check(CLI::IsMember({"rooted", "free"}));
  bench_cmd->add_option("n", cfg.n, "tree order")->required()->check(CLI::Range(1, 255));
  bench_cmd->add_option("--repeat", cfg.bench_repeat, "number of repeats (default 3)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--cache", cfg.cache_L, "cache bound L (default: auto)")
      ->check(CLI::Range(std::size_t{4}, std::size_t{64}));
  bench_cmd->add_flag("--parallel", cfg.parallel, "parallel count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bench_cmd->parsed()) {
      cfg.mode = bench_mode == "rooted" ? Mode::kRooted : Mode::kFree;
      cfg.count_only = true;
      return bench(cfg);
    }
    cfg.mode = rooted->parsed() ? Mode::kRooted : Mode::kFree;
    return run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
