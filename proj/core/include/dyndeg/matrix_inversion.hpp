#pragma once

#include <string>

#include "dyndeg/exact_linalg.hpp"
#include "dyndeg/rational_map.hpp"

namespace dyndeg {

enum class MatMapFamily { J, I, K };

/// A matrix map as a rational self-map of P(M_q) = P^(q^2-1), variables
/// x_{i,j} flattened row-major.
struct MatMapSpec {
  int q = 0;
  MatMapFamily family = MatMapFamily::J;
  RationalMapSpec map;
};

/// Entrywise inversion J: component (i,j) is the product of all variables
/// except x_{i,j}; degree q^2 - 1.
MatMapSpec build_J(int q);

/// Projective matrix inverse I (classical adjoint): component (i,j) is the
/// (j,i) cofactor; degree q - 1.
MatMapSpec build_I(int q);

/// K = I o J composed symbolically (J substituted into I, then the common
/// monomial removed). Requires 2 <= q <= 4; the resulting degree must be
/// q^2 - q + 1, anything else raises ComputationError. Larger q goes through
/// the oracle handle below.
MatMapSpec build_K(int q);

/// Oracle handle for any q: J and I pull back directly, K through the fused
/// inversion-then-adjugate stage.
OracleMap matinv_oracle_map(int q, MatMapFamily family);

/// Pullback of J on Pic of the space with all q^2 coordinate points blown
/// up, in the ordered basis (H, E_11, ..., E_qq) row-major:
/// H -> (q^2-1) H - (q^2-2) sum E, and E_ij -> H - sum_{(u,v) != (i,j)} E_uv.
IntMatrix jx_pullback(int q);

/// Largest root modulus of t^2 - (q^2-4q+2) t + 1; equals 1 for q <= 4.
double delta_K(int q);

MatMapFamily matmap_family_from_string(const std::string& s);
std::string to_string(MatMapFamily f);

}  // namespace dyndeg
