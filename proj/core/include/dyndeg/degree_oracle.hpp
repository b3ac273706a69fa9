#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dyndeg/rational_map.hpp"
#include "dyndeg/uni_poly_fp.hpp"

namespace dyndeg {

/// Fixed table of working primes near 2^61 (all of the form c*2^24 + 1 so
/// NTT convolution is available), with primitive roots.
struct OraclePrime {
  u64 prime;
  u64 generator;
};
extern const std::array<OraclePrime, 20> kOraclePrimes;

/// A parametrized line t -> [a_0 + b_0 t : ... : a_k + b_k t] over F_p.
struct ParamLine {
  u64 prime = 0;
  std::vector<u64> point_a;
  std::vector<u64> point_b;

  std::vector<UniPolyFp> tuple() const;
  /// Projectively independent points give an actual line.
  bool is_nondegenerate() const;
  static ParamLine random(u64 prime, int k, SplitMix64& rng);
};

/// One independent oracle sample: prime, line, observed degrees.
struct TrialRecord {
  u64 prime = 0;
  u64 line_seed = 0;
  int line_resamples = 0;
  int prime_resamples = 0;
  std::vector<std::int64_t> degrees;  // d_0 = 1 first
};

/// Degree sequence report with provenance: majority-voted degrees, ratio and
/// root estimates, per-index agreement flags, and every trial's raw data.
struct DegreeReport {
  std::vector<std::int64_t> degrees;
  std::vector<double> ratios;      // ratios[n] = d_{n+1}/d_n
  std::vector<double> roots;       // roots[n] = d_n^{1/n}, n >= 1
  std::vector<bool> agreement;     // per index: all trials agree
  std::vector<TrialRecord> trials;
  u64 seed = 0;
  int requested_n = 0;
  std::string label;
};

/// Substitutes the current reduced tuple through the map's stages and
/// removes the common univariate factor. Returns the reduced tuple and its
/// degree (max component degree after reduction). Throws ComputationError
/// when all components vanish (the line met the indeterminacy locus).
std::pair<std::vector<UniPolyFp>, std::int64_t> pullback_step(
    const CompiledMap& map, const std::vector<UniPolyFp>& current);

/// Convenience overload compiling the spec at the tuple's prime.
std::pair<std::vector<UniPolyFp>, std::int64_t> pullback_step(
    const RationalMapSpec& map, const std::vector<UniPolyFp>& current);

/// Runs `trials` independent (prime, line) samples of the degree sequence
/// deg(f^n) for n = 0..N and majority-votes each index. Deterministic in
/// (map, N, trials, seed); trials may execute in parallel.
DegreeReport degree_sequence(const OracleMap& map, int N, int trials, u64 seed);
DegreeReport degree_sequence(const RationalMapSpec& map, int N, int trials, u64 seed);

struct DeltaEstimate {
  double ratio = 0.0;       // d_N / d_{N-1}
  double root = 0.0;        // d_N^{1/N}
  bool converged = false;   // last three ratios agree within rel_tol
  bool bounded_growth = false;
};

/// Ratio/root estimates of the dynamical degree from a report (>= 3 indices).
DeltaEstimate delta_estimate(const DegreeReport& report, double rel_tol = 1e-2);

}  // namespace dyndeg
