#include "dyndeg/monomial_maps.hpp"

#include <algorithm>
#include <cmath>

namespace dyndeg {

MonomialMap::MonomialMap(IntMatrix a) : exponents(std::move(a)) {
  if (exponents.dim() == 0) throw ValidationError("monomial map: empty exponent matrix");
  if (exponents.det() == 0) {
    throw ValidationError("monomial map: exponent matrix is singular (map not dominant)");
  }
}

RationalMapSpec projectivize(const MonomialMap& m) {
  const int k = m.k();
  const std::uint32_t nv = static_cast<std::uint32_t>(k) + 1;
  // affine component i = prod_j x_j^(a_ij) * x_0^(-s_i), s_i the row sum,
  // written as coprime monomial ratios over homogeneous coordinates
  std::vector<ExpVec> num(k + 1, ExpVec(nv, 0)), den(k + 1, ExpVec(nv, 0));
  num[0] = ExpVec(nv, 0);  // leading component represents the constant 1
  for (int i = 0; i < k; ++i) {
    BigInt row_sum(0);
    for (int j = 0; j < k; ++j) {
      const BigInt& a = m.exponents.at(i, j);
      row_sum += a;
      if (a > 0) {
        num[i + 1][j + 1] = static_cast<std::uint32_t>(a.get_ui());
      } else if (a < 0) {
        den[i + 1][j + 1] = static_cast<std::uint32_t>(BigInt(-a).get_ui());
      }
    }
    if (row_sum > 0) {
      den[i + 1][0] = static_cast<std::uint32_t>(row_sum.get_ui());
    } else if (row_sum < 0) {
      num[i + 1][0] = static_cast<std::uint32_t>(BigInt(-row_sum).get_ui());
    }
  }
  // least common monomial multiple of the denominators
  ExpVec lcm(nv, 0);
  for (const auto& d : den) {
    for (std::uint32_t v = 0; v < nv; ++v) lcm[v] = std::max(lcm[v], d[v]);
  }
  std::vector<MonoSumPoly> comps;
  comps.reserve(k + 1);
  for (int i = 0; i <= k; ++i) {
    ExpVec e(nv);
    for (std::uint32_t v = 0; v < nv; ++v) e[v] = num[i][v] + lcm[v] - den[i][v];
    comps.push_back(MonoSumPoly::monomial(nv, e, BigInt(1)));
  }
  // equal degrees are automatic for ratio-form components; top up with x_0
  // anyway so malformed inputs fail loudly in validate()
  std::int64_t dmax = 0;
  for (const auto& c : comps) dmax = std::max(dmax, c.total_degree());
  for (auto& c : comps) {
    const std::int64_t gap = dmax - c.total_degree();
    if (gap > 0) {
      ExpVec e(nv, 0);
      e[0] = static_cast<std::uint32_t>(gap);
      c = c.mul_monomial(e, BigInt(1));
    }
  }
  auto [reduced, extracted] = mono_gcd_reduce(comps);
  RationalMapSpec spec;
  spec.k = k;
  spec.components = std::move(reduced);
  spec.label = "monomial";
  spec.validate();
  return spec;
}

IntMatrix degp_matrix(const MonomialMap& m, int p) {
  if (p < 1 || p > m.k()) throw ValidationError("degp_matrix: p out of range");
  return abs_entries(exterior_power(m.exponents, p));
}

std::vector<double> dynamical_degrees(const MonomialMap& m, double tol) {
  if (tol <= 0) throw ValidationError("dynamical_degrees: tol must be positive");
  const int k = m.k();
  auto roots = numeric_roots(charpoly(m.exponents));
  std::vector<double> moduli;
  moduli.reserve(roots.size());
  for (const auto& z : roots) moduli.push_back(std::abs(z));
  // descending moduli; ties already interchangeable for the products
  std::sort(moduli.rbegin(), moduli.rend());
  std::vector<double> deltas(k);
  double acc = 1.0;
  for (int p = 0; p < k; ++p) {
    acc *= moduli[p];
    deltas[p] = acc;
  }
  // anchor the top degree: delta_k = |det A| exactly
  BigInt det = m.exponents.det();
  deltas[k - 1] = std::abs(mpz_get_d(det.get_mpz_t()));
  return deltas;
}

double delta_via_limit(const MonomialMap& m, int p, int N) {
  if (p < 1 || p > m.k()) throw ValidationError("delta_via_limit: p out of range");
  if (N < 4) throw ValidationError("delta_via_limit: N must be >= 4");
  const IntMatrix an_prev = mat_pow(m.exponents, static_cast<unsigned long>(N - 1));
  const IntMatrix an = an_prev * m.exponents;
  const BigInt s_prev = exterior_power(an_prev, p).max_abs_entry();
  const BigInt s_last = exterior_power(an, p).max_abs_entry();
  if (s_prev != 0 && s_last != 0) {
    // tail ratio of the exact norm sequence; projector constants cancel
    const double log_ratio = bigint_log2(s_last) - bigint_log2(s_prev);
    return std::exp2(log_ratio);
  }
  return std::exp2(bigint_log2(s_last) / static_cast<double>(N));
}

LogConcavityResult log_concavity_check(const std::vector<double>& deltas) {
  LogConcavityResult out;
  if (deltas.size() < 3) return out;
  constexpr double kRelTol = 1e-9;
  for (std::size_t p = 1; p + 1 < deltas.size(); ++p) {
    const double lhs = deltas[p] * deltas[p];
    const double rhs = deltas[p - 1] * deltas[p + 1];
    if (lhs < rhs * (1.0 - kRelTol)) {
      out.ok = false;
      out.first_violation = static_cast<int>(p);
      return out;
    }
  }
  return out;
}

}  // namespace dyndeg
