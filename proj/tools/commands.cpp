#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "evenodd/io.hpp"

namespace evenodd::cli {

namespace {

// Bad input from the user: unreadable file, parse failure, invalid option.
// Written after timing so the classify calls cannot be optimised away.
volatile std::size_t bench_sink = 0;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw UsageError(path + ": read failed");
  return buffer.str();
}

Polygon load_polygon(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return io::parse_polygon(text, path).polygon;
  } catch (const io::ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const InputDomainError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InternalLogicError& e) {
    err << "internal error: " << e.what() << '\n';
    return kAssertionFailure;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InputDomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

Verdict classify_with(const Polygon& polygon, const Point& q, bool paper_mode, bool trace) {
  Verdict verdict = classify(polygon, q, trace);
  if (paper_mode) verdict.classification = collapse_boundary(verdict.classification);
  return verdict;
}

std::string describe_case(const oracle::GeneratedCase& c) {
  return "polygon: " + io::serialize_polygon_wkt(c.polygon) + "\nquery: " +
         io::format_number(c.query.x()) + "," + io::format_number(c.query.y()) + "\n";
}

}  // namespace

int cmd_query(const QueryOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Polygon polygon = load_polygon(options.polygon_path);
    const Point q = io::parse_point_pair(options.point);
    const Verdict verdict = classify_with(polygon, q, options.paper_mode, options.trace);
    out << io::serialize_result(io::QueryResultRecord::from_verdict(q, verdict));
    return kSuccess;
  });
}

int cmd_batch(const BatchOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Polygon polygon = load_polygon(options.polygon_path);
    std::vector<Point> points;
    try {
      points = io::parse_points_plaintext(read_file(options.points_path));
    } catch (const io::ParseError& e) {
      throw UsageError(options.points_path + ": " + e.what());
    }

    std::vector<Verdict> verdicts(points.size());
    unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(points.size())));

    // Each worker owns a contiguous slice of `verdicts`, so output order is
    // the input order no matter how the work is scheduled.
    std::vector<std::exception_ptr> failures(threads);
    auto work = [&](unsigned worker) {
      try {
        const std::size_t begin = points.size() * worker / threads;
        const std::size_t end = points.size() * (worker + 1) / threads;
        for (std::size_t i = begin; i < end; ++i) {
          verdicts[i] = classify_with(polygon, points[i], options.paper_mode, options.trace);
        }
      } catch (...) {
        failures[worker] = std::current_exception();
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    }
    for (const std::exception_ptr& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }

    std::size_t counts[3] = {0, 0, 0};
    for (std::size_t i = 0; i < points.size(); ++i) {
      out << io::serialize_result(io::QueryResultRecord::from_verdict(points[i], verdicts[i]));
      ++counts[static_cast<int>(verdicts[i].classification)];
    }
    err << points.size() << " points: " << counts[0] << " inside, " << counts[1] << " outside, "
        << counts[2] << " boundary\n";
    return kSuccess;
  });
}

int cmd_difftest(const DifftestOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    options.generator.validate();
    out << "seed " << options.generator.seed << '\n';
    const ClassifyOptions classify_options{.with_trace = false, .policy = options.policy};
    std::size_t counts[3] = {0, 0, 0};
    for (std::uint64_t i = 0; i < options.cases; ++i) {
      const oracle::GeneratedCase c = oracle::generate_case(options.generator, i);
      const Classification expected = oracle::oracle_classify(c.polygon, c.query);
      std::string actual;
      try {
        const Classification got = classify(c.polygon, c.query, classify_options).classification;
        if (got == expected) {
          ++counts[static_cast<int>(got)];
          continue;
        }
        actual = std::string(to_string(got));
      } catch (const InternalLogicError& e) {
        actual = std::string("internal error (") + e.what() + ")";
      }
      out << "DISAGREEMENT at case " << i << " (seed " << options.generator.seed << ")\n"
          << describe_case(c) << "evenodd: " << actual << "\noracle: " << to_string(expected)
          << '\n';
      out << i << '/' << options.cases << " agree before first disagreement\n";
      return kAssertionFailure;
    }
    out << options.cases << '/' << options.cases << " agree (" << counts[0] << " inside, "
        << counts[1] << " outside, " << counts[2] << " boundary)\n";
    return kSuccess;
  });
}

Polygon random_star_polygon(std::size_t n, std::uint64_t seed) {
  constexpr double kRadius = 1e6;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> radius(0.5 * kRadius, kRadius);
  std::vector<double> angles(n);
  for (double& a : angles) a = angle(rng);
  std::sort(angles.begin(), angles.end());
  std::vector<Point> vertices;
  vertices.reserve(n);
  for (double a : angles) {
    const double r = radius(rng);
    vertices.emplace_back(r * std::cos(a), r * std::sin(a));
  }
  return Polygon(std::move(vertices));
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  std::vector<BenchRow> rows;
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> coordinate(-1e6, 1e6);
  std::size_t sink = 0;
  for (std::size_t n : options.sizes) {
    const Polygon polygon = random_star_polygon(n, rng());
    std::vector<Point> queries;
    queries.reserve(options.repetitions);
    for (std::size_t i = 0; i < options.repetitions; ++i) {
      queries.emplace_back(coordinate(rng), coordinate(rng));
    }
    if (!queries.empty()) sink += classify(polygon, queries.front()).crossing_count;  // warm-up

    const auto start = std::chrono::steady_clock::now();
    for (const Point& q : queries) sink += classify(polygon, q).crossing_count;
    const auto elapsed = std::chrono::steady_clock::now() - start;

    BenchRow row;
    row.n = n;
    row.queries = queries.size();
    if (!queries.empty()) {
      row.mean_ns = std::chrono::duration<double, std::nano>(elapsed).count() /
                    static_cast<double>(queries.size());
      row.ns_per_vertex = row.mean_ns / static_cast<double>(n);
    }
    rows.push_back(row);
  }
  bench_sink = sink;
  return rows;
}

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    for (std::size_t n : options.sizes) {
      if (n == 0) throw UsageError("bench sizes must be at least 1");
    }
    err << "seed " << options.seed << ", " << options.repetitions << " queries per size\n";
    out << "n,mean_ns,ns_per_vertex\n";
    for (const BenchRow& row : run_bench(options)) {
      out << row.n << ',' << std::fixed << std::setprecision(1) << row.mean_ns << ','
          << std::setprecision(4) << row.ns_per_vertex << '\n';
      out.unsetf(std::ios::floatfield);
    }
    return kSuccess;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Even-odd point-in-polygon classification for complex polygons"};
  app.require_subcommand(1);

  QueryOptions query;
  auto* query_cmd = app.add_subcommand("query", "Classify one point");
  query_cmd->add_option("--polygon", query.polygon_path, "Polygon file (plain text or WKT)")->required();
  query_cmd->add_option("--point", query.point, "Query point as x,y")->required();
  query_cmd->add_flag("--paper-mode", query.paper_mode, "Report boundary points as inside");
  query_cmd->add_flag("--trace", query.trace, "Include the per-hop trace");

  BatchOptions batch;
  auto* batch_cmd = app.add_subcommand("batch", "Classify every point in a file");
  batch_cmd->add_option("--polygon", batch.polygon_path, "Polygon file (plain text or WKT)")->required();
  batch_cmd->add_option("--points", batch.points_path, "Points file, one 'x y' per line")->required();
  batch_cmd->add_flag("--paper-mode", batch.paper_mode, "Report boundary points as inside");
  batch_cmd->add_flag("--trace", batch.trace, "Include the per-hop trace");
  batch_cmd->add_option("--threads", batch.threads, "Worker threads (0 = hardware concurrency)");

  DifftestOptions diff;
  auto& gen = diff.generator;
  gen.seed = kDefaultSeed;
  bool naive = false;
  auto* diff_cmd = app.add_subcommand("difftest", "Compare the classifier against the oracle");
  diff_cmd->add_option("--cases", diff.cases, "Number of generated cases")
      ->check(CLI::PositiveNumber);
  diff_cmd->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
  diff_cmd->add_option("--p-on-axis", gen.p_on_axis, "Probability a vertex lies on the query's axis")
      ->capture_default_str();
  diff_cmd->add_option("--p-duplicate", gen.p_duplicate, "Probability a vertex repeats its predecessor")
      ->capture_default_str();
  diff_cmd->add_option("--p-on-boundary-query", gen.p_on_boundary_query,
                       "Probability the query is snapped onto the boundary")
      ->capture_default_str();
  diff_cmd->add_option("--min-vertices", gen.vertex_count.min)->capture_default_str();
  diff_cmd->add_option("--max-vertices", gen.vertex_count.max)->capture_default_str();
  diff_cmd->add_option("--coord-min", gen.coordinate.min)->capture_default_str();
  diff_cmd->add_option("--coord-max", gen.coordinate.max)->capture_default_str();
  diff_cmd->add_flag("--naive-positive-axis", naive,
                     "Count every hop against the positive axis only (known-wrong mutant)")
      ->group("");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time classification against polygon size");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated vertex counts")->delimiter(',');
  bench_cmd->add_option("--repetitions", bench.repetitions, "Queries per size")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  if (*query_cmd) return cmd_query(query, out, err);
  if (*batch_cmd) return cmd_batch(batch, out, err);
  if (*diff_cmd) {
    diff.policy = naive ? CrossingPolicy::PositiveAxisOnly : CrossingPolicy::EvenOdd;
    return cmd_difftest(diff, out, err);
  }
  return cmd_bench(bench, out, err);
}

}  // namespace evenodd::cli
