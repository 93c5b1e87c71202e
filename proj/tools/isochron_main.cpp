// Command-line front-end:
//
//   isochron analyze <specfile> [--order K] [--rmax R] [--samples N] [--tol T]
//                               [--csv PATH] [--no-timestamp] [--seed S]
//
// Exit codes: 0 analysis completed (any verdict), 2 parse error, 3 numerical failure.

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "isochron/errors.hpp"
#include "isochron/report.hpp"
#include "isochron/spec_file.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitNumerical = 3;

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Period-function analysis of planar piecewise Hamiltonian systems"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Classify, expand and integrate a system from a spec file");
  std::string spec_path;
  std::optional<int> order;
  std::optional<double> rmax;
  std::optional<int> samples;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::string csv_path;
  bool no_timestamp = false;
  analyze->add_option("specfile", spec_path, "System specification file")->required();
  analyze->add_option("--order", order, "Truncation order (r0 exponent) of the period series");
  analyze->add_option("--rmax", rmax, "Largest sampled axis radius");
  analyze->add_option("--samples", samples, "Number of CSV sample radii");
  analyze->add_option("--tol", tol, "Witness tolerance on |T - T(0)|");
  analyze->add_option("--csv", csv_path, "Write period samples to this CSV file");
  analyze->add_flag("--no-timestamp", no_timestamp, "Omit the timestamp line from the CSV");
  analyze->add_option("--seed", seed, "Seed for the sample-radius jitter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  std::ifstream in(spec_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << spec_path << "\n";
    return kExitParse;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  try {
    auto spec = isochron::parse_spec(buffer.str());
    if (order) spec.options.order = *order;
    if (rmax) spec.options.r_max = *rmax;
    if (samples) spec.options.samples = *samples;
    if (tol) spec.options.tol = *tol;
    if (seed) spec.options.seed = *seed;

    const auto result = isochron::run_report(spec);
    std::cout << isochron::format_report(spec, result);

    if (!csv_path.empty()) {
      if (!result.report.classification.is_center()) {
        std::cout << "csv: skipped (no period function for a non-center)\n";
      } else {
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) {
          std::cerr << "error: cannot write " << csv_path << "\n";
          return kExitNumerical;
        }
        const auto stamp = no_timestamp ? std::nullopt : std::optional<std::string>(utc_timestamp());
        csv << isochron::format_csv(result.rows, stamp);
        std::cout << "csv: " << result.rows.size() << " rows written to " << csv_path << "\n";
      }
    }
  } catch (const isochron::ParseError& e) {
    std::cerr << spec_path << ": parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const isochron::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what()
              << "\nhint: lower --rmax so sampled orbits stay inside the period annulus, or raise --samples\n";
    return kExitNumerical;
  } catch (const isochron::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
