#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rieszkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitNonConvergence = 3;

inline constexpr double kDefaultTolerance = 1e-6;
// Pointwise transform law of pushforward on [-4, 4]^{d1}.
inline constexpr double kTransformTolerance = 1e-12;
inline constexpr std::int64_t kTransformWindow = 4;

struct Config {
  std::string suite;
  std::string input;
  std::string order;
  std::string out;
  std::optional<std::size_t> grid;
  std::uint64_t seed = 0;
  std::optional<double> tol;  // falls back to RIESZKIT_TOL, then kDefaultTolerance
  std::size_t jobs = 1;

  // Suite-specific.
  std::optional<double> bound;       // sign-scan, burkholder, ucc, transfer
  std::optional<double> p;           // cond-power, burkholder
  std::optional<std::size_t> stage;  // cond-power, transfer
  std::string nu;                    // transfer
  std::string hom;                   // transfer, pushforward
  std::size_t radius = 4;            // axioms
  std::size_t n = 10;                // corpus-gen
  std::size_t dim = 2;               // corpus-gen without --order
  bool analytic = false;             // corpus-gen
  std::string kind = "measures";     // corpus-gen: measures or polys
};

std::vector<std::string> suite_names();

// Writes <out>/<suite>.json and <out>/<suite>.csv and returns the exit code:
// 2 on parse or validation errors, else 3 when a quadrature did not converge,
// else 1 when an asserted check failed, else 0.
int run(const Config& config, std::ostream& log);

}  // namespace rieszkit::cli
