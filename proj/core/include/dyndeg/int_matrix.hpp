#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "dyndeg/common.hpp"

namespace dyndeg {

/// Dense square matrix of arbitrary-precision integers. Carrier for the
/// pullback actions on Picard groups and on H^{p,p}; all arithmetic is exact.
class IntMatrix {
 public:
  IntMatrix() : dim_(0) {}
  explicit IntMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, BigInt(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  BigInt& at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const { return dim_ == o.dim_ && a_ == o.a_; }

  bool is_identity() const;
  bool is_nonnegative() const;
  IntMatrix transpose() const;
  BigInt trace() const;
  BigInt max_abs_entry() const;

  /// Fraction-free Bareiss elimination; exact determinant.
  BigInt det() const;

 private:
  std::size_t dim_;
  std::vector<BigInt> a_;
};

/// Exact n-th power by binary exponentiation; m^0 is the identity.
IntMatrix mat_pow(const IntMatrix& m, unsigned long n);

/// Entrywise absolute value.
IntMatrix abs_entries(const IntMatrix& m);

}  // namespace dyndeg
