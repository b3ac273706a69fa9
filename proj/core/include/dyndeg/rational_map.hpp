#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dyndeg/fp.hpp"
#include "dyndeg/mono_sum_poly.hpp"

namespace dyndeg {

/// A rational self-map of P^k: k+1 homogeneous components of common degree
/// with no common factor, over Z or over a fixed prime field.
struct RationalMapSpec {
  int k = 0;
  std::vector<MonoSumPoly> components;  // size k+1
  std::string label;

  std::uint64_t prime() const {
    return components.empty() ? 0 : components.front().prime();
  }
  std::int64_t degree() const {
    return components.empty() ? -1 : components.front().total_degree();
  }

  /// Checks the invariants: k+1 components in k+1 variables, homogeneous of
  /// equal degree, none zero, monomial gcd 1. Throws ValidationError.
  void validate() const;
};

/// Normalizes a candidate tuple into a valid spec: extracts a common
/// monomial if present (recorded in *warning), then validates.
RationalMapSpec make_map_spec(int k, std::vector<MonoSumPoly> components,
                              std::string label, std::string* warning = nullptr);

// ---------------------------------------------------------------------------
// Oracle handles. A map is a chain of stages applied left to right to the
// restricted tuple; composition handles let the oracle pull back through
// maps too large to expand symbolically.

/// Classical-adjoint stage on a q x q tuple: component (i,j) is the (j,i)
/// cofactor of the tuple arranged as a matrix.
struct AdjugateStage {
  int q = 0;
};

/// Fused entrywise-inversion-then-adjugate stage (the composed-map handle
/// for K = I o J): adjugate of the entrywise products, divided by the
/// structural common factor P^{q-2}, P the product of all tuple entries.
struct MatrixInversionStage {
  int q = 0;
};

/// Symbolic tuple stage (components substituted term by term).
struct TupleStage {
  std::vector<MonoSumPoly> components;
};

using OracleStage = std::variant<TupleStage, AdjugateStage, MatrixInversionStage>;

/// Prime-free oracle handle. fixed_prime = 0 lets the oracle pick a fresh
/// prime per trial; a spec over F_p pins it.
struct OracleMap {
  int k = 0;
  std::vector<OracleStage> stages;
  u64 fixed_prime = 0;
  std::string label;
};

OracleMap oracle_map_from_spec(const RationalMapSpec& map);

// Compiled (per-prime) form.
struct CompiledTupleStage {
  std::vector<std::vector<std::pair<u64, ExpVec>>> comps;  // (coeff, exponents)
  bool all_monomial = false;
};
using CompiledStage = std::variant<CompiledTupleStage, AdjugateStage, MatrixInversionStage>;

struct CompiledMap {
  int k = 0;
  u64 prime = 0;
  std::vector<CompiledStage> stages;
};

/// Reduces the handle mod a working prime. Throws ComputationError when a
/// component vanishes (bad reduction; the caller picks another prime).
CompiledMap compile_map(const OracleMap& map, u64 prime);

}  // namespace dyndeg
