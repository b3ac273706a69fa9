#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dyndeg/fp.hpp"

namespace dyndeg {

/// Dense univariate polynomial over F_p (p an odd prime < 2^62), lowest
/// degree first, residues reduced, trailing zeros trimmed. The substrate on
/// which the degree oracle restricts maps to a parametrized line.
class UniPolyFp {
 public:
  explicit UniPolyFp(u64 prime) : prime_(prime) {}
  UniPolyFp(u64 prime, std::vector<u64> coeffs);

  u64 prime() const { return prime_; }
  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  u64 leading() const { return c_.back(); }
  const std::vector<u64>& coeffs() const { return c_; }

  UniPolyFp operator+(const UniPolyFp& o) const;
  UniPolyFp operator-(const UniPolyFp& o) const;
  UniPolyFp operator*(const UniPolyFp& o) const;
  bool operator==(const UniPolyFp& o) const { return prime_ == o.prime_ && c_ == o.c_; }

  UniPolyFp scaled(u64 s) const;
  UniPolyFp monic() const;
  u64 eval(u64 x) const;
  UniPolyFp derivative() const;

  /// Quotient and remainder; schoolbook or Newton-inverse division depending
  /// on size.
  std::pair<UniPolyFp, UniPolyFp> divrem(const UniPolyFp& divisor) const;
  /// Exact division; throws ComputationError on a nonzero remainder.
  UniPolyFp divexact(const UniPolyFp& divisor) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  void check_same_field(const UniPolyFp& o) const {
    if (prime_ != o.prime_) throw ValidationError("prime field mismatch");
  }

  u64 prime_;
  std::vector<u64> c_;
};

/// Monic GCD by Euclid's algorithm; gcd(a, 0) is monic a.
UniPolyFp uni_gcd(const UniPolyFp& a, const UniPolyFp& b);

struct TupleReduceResult {
  std::vector<UniPolyFp> reduced;
  std::int64_t dropped_degree = 0;
};

/// Divides the GCD of the whole tuple out of every component. Throws
/// ComputationError on an all-zero tuple (degenerate line; caller resamples).
/// The GCD of large tuples is seeded from two random linear combinations,
/// which only accelerates the computation — the result is exact.
TupleReduceResult tuple_reduce_univariate(const std::vector<UniPolyFp>& tuple);

}  // namespace dyndeg
