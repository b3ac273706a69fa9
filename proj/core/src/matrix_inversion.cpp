#include "dyndeg/matrix_inversion.hpp"

#include <algorithm>
#include <cmath>

namespace dyndeg {

namespace {

void check_q(int q) {
  if (q < 2) throw ValidationError("matrix maps require q >= 2");
  if (q > 8) throw ValidationError("q too large for symbolic matrix maps");
}

std::uint32_t var_index(int q, int i, int j) { return static_cast<std::uint32_t>(i * q + j); }

// symbolic determinant of the submatrix of the variable matrix with the
// given rows/columns removed, by Laplace expansion
MonoSumPoly symbolic_minor(int q, int drop_row, int drop_col) {
  const std::uint32_t nv = static_cast<std::uint32_t>(q) * q;
  std::vector<int> rows, cols;
  for (int r = 0; r < q; ++r) {
    if (r != drop_row) rows.push_back(r);
  }
  for (int c = 0; c < q; ++c) {
    if (c != drop_col) cols.push_back(c);
  }
  // permutation expansion over the (q-1)x(q-1) index sets
  MonoSumPoly det(nv);
  std::vector<int> perm(cols.begin(), cols.end());
  std::sort(perm.begin(), perm.end());
  do {
    int sign = 1;
    for (std::size_t a = 0; a < perm.size(); ++a) {
      for (std::size_t b = a + 1; b < perm.size(); ++b) {
        if (perm[a] > perm[b]) sign = -sign;
      }
    }
    ExpVec e(nv, 0);
    for (std::size_t r = 0; r < rows.size(); ++r) e[var_index(q, rows[r], perm[r])] += 1;
    det.add_term(e, BigInt(sign));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

MatMapSpec build_J(int q) {
  check_q(q);
  const std::uint32_t nv = static_cast<std::uint32_t>(q) * q;
  std::vector<MonoSumPoly> comps;
  comps.reserve(nv);
  for (std::uint32_t v = 0; v < nv; ++v) {
    ExpVec e(nv, 1);
    e[v] = 0;
    comps.push_back(MonoSumPoly::monomial(nv, e, BigInt(1)));
  }
  MatMapSpec spec;
  spec.q = q;
  spec.family = MatMapFamily::J;
  spec.map.k = static_cast<int>(nv) - 1;
  spec.map.components = std::move(comps);
  spec.map.label = "J(q=" + std::to_string(q) + ")";
  spec.map.validate();
  return spec;
}

MatMapSpec build_I(int q) {
  check_q(q);
  const std::uint32_t nv = static_cast<std::uint32_t>(q) * q;
  std::vector<MonoSumPoly> comps;
  comps.reserve(nv);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      // adjugate entry (i,j) = (-1)^(i+j) * minor with row j, column i removed
      MonoSumPoly c = symbolic_minor(q, j, i);
      if (((i + j) % 2) != 0) c = -c;
      comps.push_back(std::move(c));
    }
  }
  MatMapSpec spec;
  spec.q = q;
  spec.family = MatMapFamily::I;
  spec.map.k = static_cast<int>(nv) - 1;
  spec.map.components = std::move(comps);
  spec.map.label = "I(q=" + std::to_string(q) + ")";
  spec.map.validate();
  return spec;
}

MatMapSpec build_K(int q) {
  if (q < 2 || q > 4) {
    throw ValidationError("build_K: symbolic mode supports 2 <= q <= 4; use the oracle handle");
  }
  MatMapSpec ispec = build_I(q);
  MatMapSpec jspec = build_J(q);
  std::vector<MonoSumPoly> raw = substitute(ispec.map.components, jspec.map.components);
  auto [reduced, extracted] = mono_gcd_reduce(raw);
  MatMapSpec spec;
  spec.q = q;
  spec.family = MatMapFamily::K;
  spec.map.k = ispec.map.k;
  spec.map.components = std::move(reduced);
  spec.map.label = "K(q=" + std::to_string(q) + ")";
  spec.map.validate();
  const std::int64_t expected = static_cast<std::int64_t>(q) * q - q + 1;
  if (spec.map.degree() != expected) {
    throw ComputationError("build_K: reduction produced degree " +
                           std::to_string(spec.map.degree()) + ", expected " +
                           std::to_string(expected));
  }
  return spec;
}

OracleMap matinv_oracle_map(int q, MatMapFamily family) {
  check_q(q);
  OracleMap map;
  map.k = q * q - 1;
  switch (family) {
    case MatMapFamily::J:
      map = oracle_map_from_spec(build_J(q).map);
      map.label = "J(q=" + std::to_string(q) + ")";
      return map;
    case MatMapFamily::I:
      map.stages.emplace_back(AdjugateStage{q});
      map.label = "I(q=" + std::to_string(q) + ")";
      return map;
    case MatMapFamily::K:
      map.stages.emplace_back(MatrixInversionStage{q});
      map.label = "K(q=" + std::to_string(q) + ")";
      return map;
  }
  throw ValidationError("unknown matrix-map family");
}

IntMatrix jx_pullback(int q) {
  if (q < 2) throw ValidationError("jx_pullback requires q >= 2");
  const int n = q * q;
  IntMatrix m(n + 1);
  // column 0: image of H
  m.at(0, 0) = static_cast<long>(n - 1);
  for (int r = 1; r <= n; ++r) m.at(r, 0) = -static_cast<long>(n - 2);
  // column for E_ij (index c = 1..n): H - sum of all E except E_ij
  for (int c = 1; c <= n; ++c) {
    m.at(0, c) = 1;
    for (int r = 1; r <= n; ++r) m.at(r, c) = (r == c) ? 0 : -1;
  }
  return m;
}

double delta_K(int q) {
  if (q < 2) throw ValidationError("delta_K requires q >= 2");
  const double c = static_cast<double>(q) * q - 4.0 * q + 2.0;
  if (std::abs(c) <= 2.0) return 1.0;  // both roots on the unit circle
  const double disc = std::sqrt(c * c - 4.0);
  return std::max(std::abs((c + disc) / 2.0), std::abs((c - disc) / 2.0));
}

MatMapFamily matmap_family_from_string(const std::string& s) {
  if (s == "J" || s == "j") return MatMapFamily::J;
  if (s == "I" || s == "i") return MatMapFamily::I;
  if (s == "K" || s == "k") return MatMapFamily::K;
  throw ValidationError("unknown matrix-map family '" + s + "' (expected J, I or K)");
}

std::string to_string(MatMapFamily f) {
  switch (f) {
    case MatMapFamily::J: return "J";
    case MatMapFamily::I: return "I";
    case MatMapFamily::K: return "K";
  }
  return "?";
}

}  // namespace dyndeg
