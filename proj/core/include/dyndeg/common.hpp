#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dyndeg {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Input failed a precondition (bad dimensions, malformed spec, hypothesis
/// violation). CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation could not be completed (iteration budget exhausted,
/// degenerate samples beyond the retry budget). CLI maps this to exit code 3.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic 64-bit PRNG (splitmix64). Every randomized procedure in the
/// library derives its stream from an explicit seed through this generator,
/// so results are a pure function of their inputs.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Derives an independent child seed, e.g. one per trial or restart.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 g(master ^ (0x5851f42d4c957f2dull * (index + 1)));
  g.next();
  return g.next();
}

inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline BigInt bigint_from_string(const std::string& s) {
  BigInt v;
  if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0) {
    throw ValidationError("malformed integer: '" + s + "'");
  }
  return v;
}

/// log2|v|, exact to double precision even when v far exceeds double range.
inline double bigint_log2(const BigInt& v) {
  if (v == 0) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

}  // namespace dyndeg
