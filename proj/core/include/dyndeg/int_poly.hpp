#pragma once

#include <complex>
#include <string>
#include <vector>

#include "dyndeg/common.hpp"

namespace dyndeg {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored lowest degree first with trailing zeros trimmed. The zero
/// polynomial has an empty coefficient list and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly zero() { return IntPoly{}; }
  static IntPoly constant(BigInt v);
  static IntPoly variable();                      // t
  static IntPoly monomial(int degree, BigInt c);  // c * t^degree

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const BigInt& leading() const { return c_.back(); }
  BigInt coeff(int i) const;                       // 0 outside range
  const std::vector<BigInt>& coeffs() const { return c_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  IntPoly mul_power(int k) const;                  // * t^k
  IntPoly scaled(const BigInt& s) const;
  IntPoly derivative() const;

  BigInt eval(const BigInt& x) const;
  BigRat eval(const BigRat& x) const;
  std::complex<double> eval(std::complex<double> x) const;
  int sign_at(const BigRat& x) const;              // exact sign of p(x)

  /// Exact division; throws ComputationError if the division is not exact
  /// over the integers.
  IntPoly divexact(const IntPoly& divisor) const;
  /// Divides out (t - root); requires root to be an exact root.
  IntPoly deflate(const BigInt& root) const;

  std::string to_string() const;                   // human-readable, debug aid

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

/// Content (gcd of coefficients, nonnegative; 0 for the zero polynomial).
BigInt content(const IntPoly& p);
/// Primitive part with positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);
/// GCD over Z via the subresultant pseudo-remainder sequence; returns the
/// primitive gcd with positive leading coefficient.
IntPoly gcd_z(IntPoly a, IntPoly b);
/// p with repeated roots collapsed to multiplicity one (primitive).
IntPoly squarefree_part(const IntPoly& p);

}  // namespace dyndeg
