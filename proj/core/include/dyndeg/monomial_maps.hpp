#pragma once

#include <vector>

#include "dyndeg/exact_linalg.hpp"
#include "dyndeg/rational_map.hpp"

namespace dyndeg {

/// Monomial self-map of the k-torus: component i is prod_j x_j^(A_ij).
/// Exponents may be negative; det(A) != 0 is required for dominance.
struct MonomialMap {
  IntMatrix exponents;

  explicit MonomialMap(IntMatrix a);
  int k() const { return static_cast<int>(exponents.dim()); }
};

/// Homogeneous representative on P^k: each affine component written as a
/// ratio of monomials, denominators cleared by their least common monomial
/// multiple, topped up to common degree with powers of x_0, then reduced by
/// the common monomial factor. The common degree is deg_1 of the map.
RationalMapSpec projectivize(const MonomialMap& m);

/// Action on H^{p,p} of (P^1)^k in the lexicographic subset basis: the
/// entrywise absolute value of the p-th exterior power of the exponent
/// matrix.
IntMatrix degp_matrix(const MonomialMap& m, int p);

/// Dynamical degrees delta_1..delta_k as partial products of the eigenvalue
/// moduli of the exponent matrix, sorted descending; delta_k is |det|.
std::vector<double> dynamical_degrees(const MonomialMap& m, double tol);

/// Growth-rate cross-check of the eigenvalue route: exact max-entry norms of
/// the p-th exterior powers of A^n for n <= N, estimated by the tail ratio
/// s_N / s_{N-1} (the raw N-th root keeps a projector-constant offset).
double delta_via_limit(const MonomialMap& m, int p, int N);

struct LogConcavityResult {
  bool ok = true;
  int first_violation = -1;  // index p of the first failing interior point
};

/// Checks delta_p^2 >= delta_{p-1} * delta_{p+1} (relative slack 1e-9) on a
/// list [delta_0 = 1, delta_1, ..., delta_k].
LogConcavityResult log_concavity_check(const std::vector<double>& deltas);

}  // namespace dyndeg
