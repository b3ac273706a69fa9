#pragma once

#include <complex>
#include <string>
#include <vector>

#include "dyndeg/int_matrix.hpp"
#include "dyndeg/int_poly.hpp"

namespace dyndeg {

/// Exact monic characteristic polynomial det(tI - m), computed by the
/// Faddeev-LeVerrier recurrence; all intermediate divisions are exact over Z.
IntPoly charpoly(const IntMatrix& m);

/// Companion matrix of a monic polynomial of degree >= 1 (subdiagonal ones,
/// last column the negated coefficients), so charpoly(companion(p)) == p.
IntMatrix companion_matrix(const IntPoly& monic);

/// p-th exterior power: the C(dim,p) x C(dim,p) matrix of p x p minors,
/// rows/columns indexed by sorted p-subsets in lexicographic order.
/// Throws ValidationError unless 1 <= p <= dim.
IntMatrix exterior_power(const IntMatrix& m, int p);

/// The sorted p-subsets of {0..n-1} in lexicographic order — the row/column
/// basis of exterior_power, exposed so reports can name it.
std::vector<std::vector<int>> subset_basis(int n, int p);

/// All integer roots with multiplicity, for monic nonzero p. Divisors of the
/// constant term are enumerated and each candidate is verified exactly.
std::vector<BigInt> integer_roots(const IntPoly& p);

/// Exact location of the roots of a monic integer polynomial relative to the
/// closed unit disk, decided by iterating the root-squaring (Graeffe)
/// transform: leaving the binomial-coefficient box certifies a root outside,
/// an orbit cycle certifies that every root is zero or a root of unity.
enum class DiskStatus {
  kAllInClosedUnitDisk,
  kRootOutsideUnitDisk,
  kInconclusive,  // iteration cap reached (not observed in practice)
};
DiskStatus unit_disk_status(const IntPoly& monic, int max_iters = 4096);

/// Numeric roots by simultaneous (Durand-Kerner) iteration. Throws
/// ComputationError if coefficients exceed double range or iteration fails.
std::vector<std::complex<double>> numeric_roots(const IntPoly& p);

struct SpectralResult {
  double radius = 0.0;
  BigRat lower;      // certified lower <= radius
  BigRat upper;      // radius <= upper
  bool is_one = false;  // radius is exactly 1 (certified)
  std::string method;   // "collatz_wielandt" | "unit_disk" | "sign_bisection"
                        // | "exact_integer" | "numeric"
};

/// Spectral radius with a certified bracket where the structure allows it:
/// Collatz-Wielandt row-ratio bounds for entrywise-nonnegative matrices,
/// the exact unit-disk test for radius one, exact sign bisection of the
/// characteristic polynomial for a real dominant root, and a numeric
/// bracket otherwise.
SpectralResult spectral_radius(const IntMatrix& m, double tol);

/// Same pipeline starting from an explicit monic characteristic polynomial.
SpectralResult spectral_radius_of_charpoly(const IntPoly& monic, double tol,
                                           const IntMatrix* nonneg_hint = nullptr);

}  // namespace dyndeg
