#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "evenodd/classify.hpp"
#include "evenodd/oracle.hpp"

namespace evenodd::cli {

/// Exit codes shared by every command.
enum ExitCode : int { kSuccess = 0, kAssertionFailure = 1, kUsageError = 2 };

inline constexpr std::uint64_t kDefaultSeed = 42;

struct QueryOptions {
  std::string polygon_path;
  std::string point;
  bool paper_mode = false;
  bool trace = false;
};

struct BatchOptions {
  std::string polygon_path;
  std::string points_path;
  bool paper_mode = false;
  bool trace = false;
  unsigned threads = 0;  // 0 picks the hardware concurrency
};

struct DifftestOptions {
  std::uint64_t cases = 100000;
  oracle::GeneratorConfig generator;
  CrossingPolicy policy = CrossingPolicy::EvenOdd;
};

struct BenchOptions {
  std::vector<std::size_t> sizes{1000, 10000, 100000, 1000000};
  std::size_t repetitions = 100;
  std::uint64_t seed = kDefaultSeed;
};

struct BenchRow {
  std::size_t n = 0;
  std::size_t queries = 0;
  double mean_ns = 0;
  double ns_per_vertex = 0;
};

int cmd_query(const QueryOptions& options, std::ostream& out, std::ostream& err);
int cmd_batch(const BatchOptions& options, std::ostream& out, std::ostream& err);
int cmd_difftest(const DifftestOptions& options, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

/// Star-shaped random polygon with n vertices, as used by the benchmark.
Polygon random_star_polygon(std::size_t n, std::uint64_t seed);

/// Times classify on random query points for each size.
std::vector<BenchRow> run_bench(const BenchOptions& options);

/// Parses argv and dispatches to a command.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace evenodd::cli
