#include "dyndeg/exact_linalg.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace dyndeg {

IntPoly charpoly(const IntMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[n] = 1;
  // Faddeev-LeVerrier: N_0 = I; M_k = A*N_{k-1}; c_{n-k} = -tr(M_k)/k;
  // N_k = M_k + c_{n-k} I. Divisions by k are exact for integer input.
  IntMatrix N = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix M = m * N;
    BigInt t = M.trace();
    BigInt ck;
    mpz_divexact_ui(ck.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
    ck = -ck;
    c[n - k] = ck;
    if (k < n) {
      N = std::move(M);
      for (std::size_t i = 0; i < n; ++i) N.at(i, i) += ck;
    }
  }
  return IntPoly(std::move(c));
}

IntMatrix companion_matrix(const IntPoly& monic) {
  if (monic.is_zero() || !monic.is_monic() || monic.degree() < 1) {
    throw ValidationError("companion_matrix requires a monic polynomial of degree >= 1");
  }
  const int n = monic.degree();
  IntMatrix c(n);
  for (int i = 1; i < n; ++i) c.at(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) c.at(i, n - 1) = -monic.coeff(i);
  return c;
}

std::vector<std::vector<int>> subset_basis(int n, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(p);
  for (int i = 0; i < p; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    int i = p - 1;
    while (i >= 0 && idx[i] == n - p + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace {

BigInt minor_det(const IntMatrix& m, const std::vector<int>& rows,
                 const std::vector<int>& cols) {
  const int p = static_cast<int>(rows.size());
  IntMatrix sub(p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
  }
  return sub.det();
}

}  // namespace

IntMatrix exterior_power(const IntMatrix& m, int p) {
  const int n = static_cast<int>(m.dim());
  if (p < 1 || p > n) throw ValidationError("exterior_power: p out of range");
  if (p == 1) return m;
  const auto basis = subset_basis(n, p);
  IntMatrix r(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      r.at(i, j) = minor_det(m, basis[i], basis[j]);
    }
  }
  return r;
}

namespace {

std::vector<BigInt> divisors_of(const BigInt& value, bool& complete) {
  // trial division up to 10^6; a leftover prime cofactor is kept, a composite
  // one makes the enumeration incomplete (callers add numeric candidates)
  complete = true;
  BigInt v = abs(value);
  std::map<BigInt, int> fac;
  for (unsigned long d = 2; d <= 1000000ul && BigInt(d) * d <= v; d = (d == 2 ? 3 : d + 2)) {
    while (mpz_divisible_ui_p(v.get_mpz_t(), d)) {
      mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), d);
      fac[BigInt(static_cast<long>(d))]++;
    }
  }
  if (v > 1) {
    if (mpz_probab_prime_p(v.get_mpz_t(), 30) > 0) {
      fac[v]++;
    } else {
      complete = false;  // hard composite cofactor; still usable as a divisor
      fac[v]++;
    }
  }
  std::vector<BigInt> divs{BigInt(1)};
  for (const auto& [prime, mult] : fac) {
    const std::size_t old = divs.size();
    BigInt pk(1);
    for (int e = 1; e <= mult; ++e) {
      pk *= prime;
      for (std::size_t i = 0; i < old; ++i) {
        divs.push_back(divs[i] * pk);
        if (divs.size() > (1u << 20)) {
          complete = false;
          return divs;
        }
      }
    }
  }
  return divs;
}

}  // namespace

std::vector<BigInt> integer_roots(const IntPoly& p_in) {
  if (p_in.is_zero() || !p_in.is_monic()) {
    throw ValidationError("integer_roots requires a monic nonzero polynomial");
  }
  std::vector<BigInt> roots;
  IntPoly p = p_in;
  while (!p.is_zero() && p.coeff(0) == 0 && p.degree() > 0) {
    roots.emplace_back(0);
    std::vector<BigInt> c(p.coeffs().begin() + 1, p.coeffs().end());
    p = IntPoly(std::move(c));
  }
  if (p.degree() == 0) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  bool complete = true;
  std::set<BigInt> candidates;
  for (const auto& d : divisors_of(p.coeff(0), complete)) {
    candidates.insert(d);
    candidates.insert(-d);
  }
  if (!complete) {
    // complete the candidate set from numeric real roots rounded to integers
    for (const auto& z : numeric_roots(p)) {
      if (std::abs(z.imag()) < 1e-6 * (1.0 + std::abs(z.real()))) {
        double r = std::round(z.real());
        if (std::abs(r) < 9e15) candidates.insert(BigInt(static_cast<long>(r)));
      }
    }
  }
  for (const auto& d : candidates) {
    while (p.degree() > 0 && p.eval(d) == 0) {
      roots.push_back(d);
      p = p.deflate(d);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

// q(y) = (-1)^n p(sqrt y) p(-sqrt y): the monic polynomial whose roots are
// the squares of the roots of p.
IntPoly graeffe_step(const IntPoly& p) {
  const int n = p.degree();
  std::vector<BigInt> q(n + 1, BigInt(0));
  // q[k] = sum_{i+j=2k} (-1)^(n+j) p_i p_j, taking even coefficients of p(x)p(-x)
  for (int i = 0; i <= n; ++i) {
    if (p.coeff(i) == 0) continue;
    for (int j = 0; j <= n; ++j) {
      if ((i + j) % 2 != 0) continue;
      BigInt term = p.coeff(i) * p.coeff(j);
      if (((n + j) % 2) != 0) term = -term;
      q[(i + j) / 2] += term;
    }
  }
  return IntPoly(std::move(q));
}

std::vector<BigInt> binomial_row(int n) {
  std::vector<BigInt> b(n + 1);
  b[0] = 1;
  for (int i = 1; i <= n; ++i) {
    b[i] = b[i - 1] * (n - i + 1);
    mpz_divexact_ui(b[i].get_mpz_t(), b[i].get_mpz_t(), static_cast<unsigned long>(i));
  }
  return b;
}

}  // namespace

DiskStatus unit_disk_status(const IntPoly& monic, int max_iters) {
  if (monic.is_zero() || !monic.is_monic()) {
    throw ValidationError("unit_disk_status requires a monic polynomial");
  }
  IntPoly p = monic;
  // zero roots are inside the disk; strip them
  while (p.degree() > 0 && p.coeff(0) == 0) {
    std::vector<BigInt> c(p.coeffs().begin() + 1, p.coeffs().end());
    p = IntPoly(std::move(c));
  }
  const int n = p.degree();
  if (n <= 0) return DiskStatus::kAllInClosedUnitDisk;
  const auto binom = binomial_row(n);
  auto in_box = [&](const IntPoly& f) {
    for (int i = 0; i <= n; ++i) {
      if (abs(f.coeff(i)) > binom[n - i]) return false;
    }
    return true;
  };
  std::set<std::vector<BigInt>> seen;
  for (int iter = 0; iter < max_iters; ++iter) {
    if (!in_box(p)) return DiskStatus::kRootOutsideUnitDisk;
    if (!seen.insert(p.coeffs()).second) return DiskStatus::kAllInClosedUnitDisk;
    p = graeffe_step(p);
  }
  return DiskStatus::kInconclusive;
}

std::vector<std::complex<double>> numeric_roots(const IntPoly& p_in) {
  IntPoly p = p_in;
  std::vector<std::complex<double>> roots;
  if (p.is_zero()) throw ValidationError("numeric_roots of zero polynomial");
  while (p.degree() > 0 && p.coeff(0) == 0) {
    roots.emplace_back(0.0, 0.0);
    std::vector<BigInt> c(p.coeffs().begin() + 1, p.coeffs().end());
    p = IntPoly(std::move(c));
  }
  const int n = p.degree();
  if (n == 0) return roots;

  std::vector<double> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    double v = mpz_get_d(p.coeff(i).get_mpz_t());
    if (!std::isfinite(v)) {
      throw ComputationError("numeric_roots: coefficients exceed double range");
    }
    c[i] = v;
  }
  const double lead = c[n];
  for (auto& v : c) v /= lead;

  double cauchy = 0.0;
  for (int i = 0; i < n; ++i) cauchy = std::max(cauchy, std::abs(c[i]));
  const double r0 = 1.0 + cauchy;

  std::vector<std::complex<double>> z(n);
  for (int i = 0; i < n; ++i) {
    double ang = 2.0 * 3.14159265358979323846 * (i + 0.264) / n + 0.42;
    z[i] = std::polar(std::min(r0, 1.0 + std::pow(std::abs(c[0]), 1.0 / n)), ang);
  }
  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc(0.0, 0.0);
    for (int i = n; i >= 0; --i) acc = acc * x + c[i];
    return acc;
  };
  const int kMaxIter = 2000;
  bool converged = false;
  for (int iter = 0; iter < kMaxIter && !converged; ++iter) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> num = eval(z[i]);
      std::complex<double> den(1.0, 0.0);
      for (int j = 0; j < n; ++j) {
        if (j != i) den *= (z[i] - z[j]);
      }
      if (std::abs(den) < 1e-300) continue;
      std::complex<double> dz = num / den;
      z[i] -= dz;
      worst = std::max(worst, std::abs(dz) / (1.0 + std::abs(z[i])));
    }
    converged = worst < 1e-14;
  }
  if (!converged) {
    // multiple-root clusters stall the simultaneous iteration below 1e-14;
    // accept the cluster accuracy, callers refine real roots exactly anyway
    double resid = 0.0;
    for (int i = 0; i < n; ++i) resid = std::max(resid, std::abs(eval(z[i])));
    if (!(resid < 1e-4 * (1.0 + std::pow(r0, n)))) {
      throw ComputationError("numeric_roots: iteration failed to converge");
    }
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

namespace {

struct Bracket {
  BigRat lo, hi;
};

// Collatz-Wielandt row-ratio bounds on B+I with an integer iterate vector;
// valid bounds for every entrywise-nonnegative B, tight for primitive ones.
std::optional<Bracket> collatz_wielandt(const IntMatrix& b, double tol, int max_iters) {
  const std::size_t n = b.dim();
  if (n == 0) return Bracket{BigRat(0), BigRat(0)};
  std::vector<BigInt> x(n, BigInt(1));
  BigRat best_lo(-1), best_hi(-1);
  bool have = false;
  for (int iter = 0; iter < max_iters; ++iter) {
    std::vector<BigInt> y(n, BigInt(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (b.at(i, j) != 0) y[i] += b.at(i, j) * x[j];
      }
      y[i] += x[i];  // iterate with B + I so the vector stays positive
    }
    BigRat lo, hi;
    for (std::size_t i = 0; i < n; ++i) {
      BigRat ratio(y[i], x[i]);
      ratio.canonicalize();
      if (i == 0 || ratio < lo) lo = ratio;
      if (i == 0 || ratio > hi) hi = ratio;
    }
    lo -= 1;
    hi -= 1;
    if (!have || lo > best_lo) best_lo = lo;
    if (!have || hi < best_hi) best_hi = hi;
    have = true;
    if (best_hi - best_lo <= BigRat(best_hi) * BigRat(tol) ||
        best_hi - best_lo == 0) {
      return Bracket{best_lo, best_hi};
    }
    x = std::move(y);
    // rescale to keep entries from growing without bound
    BigInt g = x[0];
    for (std::size_t i = 1; i < n && g != 1; ++i) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x[i].get_mpz_t());
    }
    if (g > 1) {
      for (auto& v : x) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
  }
  return std::nullopt;
}

BigRat rat_from_double(double v) {
  BigRat r;
  mpq_set_d(r.get_mpq_t(), v);
  return r;
}

// largest real root of the squarefree polynomial s near the numeric guess,
// certified by exact sign change; widens the initial interval if needed
std::optional<Bracket> bisect_real_root(const IntPoly& s, double guess, double tol) {
  for (double widen = std::max(1e-9, tol * 0.25); widen < 0.6;
       widen *= 8.0) {
    BigRat lo = rat_from_double(guess * (1.0 - widen) - 1e-12);
    BigRat hi = rat_from_double(guess * (1.0 + widen) + 1e-12);
    int slo = s.sign_at(lo);
    int shi = s.sign_at(hi);
    if (slo == 0) return Bracket{lo, lo};
    if (shi == 0) return Bracket{hi, hi};
    if (slo == shi) continue;
    const BigRat tol_rat = rat_from_double(std::max(tol, 1e-15));
    while (hi - lo > tol_rat * hi && hi - lo > 0) {
      BigRat mid = (lo + hi) / 2;
      int sm = s.sign_at(mid);
      if (sm == 0) return Bracket{mid, mid};
      if (sm == slo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return Bracket{lo, hi};
  }
  return std::nullopt;
}

}  // namespace

SpectralResult spectral_radius_of_charpoly(const IntPoly& monic, double tol,
                                           const IntMatrix* nonneg_hint) {
  if (tol <= 0) throw ValidationError("spectral_radius: tol must be positive");
  SpectralResult out;

  if (nonneg_hint != nullptr && nonneg_hint->is_nonnegative()) {
    if (auto br = collatz_wielandt(*nonneg_hint, tol, 400)) {
      out.lower = br->lo;
      out.upper = br->hi;
      out.radius = (mpq_get_d(br->lo.get_mpq_t()) + mpq_get_d(br->hi.get_mpq_t())) / 2.0;
      out.is_one = (br->lo == 1 && br->hi == 1);
      out.method = "collatz_wielandt";
      return out;
    }
  }

  // strip zero eigenvalues
  IntPoly p = monic;
  while (p.degree() > 0 && p.coeff(0) == 0) {
    std::vector<BigInt> c(p.coeffs().begin() + 1, p.coeffs().end());
    p = IntPoly(std::move(c));
  }
  if (p.degree() <= 0) {
    out.radius = 0.0;
    out.lower = BigRat(0);
    out.upper = BigRat(0);
    out.method = "exact_integer";
    return out;
  }

  switch (unit_disk_status(p)) {
    case DiskStatus::kAllInClosedUnitDisk:
      out.radius = 1.0;
      out.lower = BigRat(1);
      out.upper = BigRat(1);
      out.is_one = true;
      out.method = "unit_disk";
      return out;
    case DiskStatus::kInconclusive:
      throw ComputationError("spectral_radius: unit-disk test exceeded iteration cap");
    case DiskStatus::kRootOutsideUnitDisk:
      break;  // radius > 1 strictly
  }

  const auto roots = numeric_roots(p);
  double rho = 0.0;
  std::complex<double> dominant;
  for (const auto& z : roots) {
    if (std::abs(z) > rho) {
      rho = std::abs(z);
      dominant = z;
    }
  }
  const bool dominant_real =
      std::abs(dominant.imag()) < 1e-7 * (1.0 + std::abs(dominant.real()));
  // margin over the strictly-complex part decides whether sign bisection on
  // the real axis certifies the radius
  double complex_rho = 0.0;
  for (const auto& z : roots) {
    if (std::abs(z.imag()) >= 1e-7 * (1.0 + std::abs(z.real()))) {
      complex_rho = std::max(complex_rho, std::abs(z));
    }
  }
  if (dominant_real && rho > complex_rho * (1.0 + 1e-9)) {
    // exact integer dominant root short-circuits
    const double r = std::round(dominant.real());
    if (std::abs(dominant.real() - r) < 1e-9 * (1.0 + rho) && std::abs(r) < 9e15 &&
        p.eval(BigInt(static_cast<long>(r))) == 0) {
      out.radius = std::abs(r);
      out.lower = BigRat(BigInt(static_cast<long>(std::abs(r))));
      out.upper = out.lower;
      out.method = "exact_integer";
      return out;
    }
    IntPoly s = squarefree_part(p);
    const bool negative = dominant.real() < 0;
    IntPoly sn = s;
    if (negative) {
      // reflect so the dominant root becomes positive
      std::vector<BigInt> c = s.coeffs();
      for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
      sn = IntPoly(std::move(c));
    }
    if (auto br = bisect_real_root(sn, rho, tol)) {
      out.radius = (mpq_get_d(br->lo.get_mpq_t()) + mpq_get_d(br->hi.get_mpq_t())) / 2.0;
      out.lower = br->lo;
      out.upper = br->hi;
      out.method = "sign_bisection";
      return out;
    }
  }

  out.radius = rho;
  out.lower = rat_from_double(rho * (1.0 - tol));
  out.upper = rat_from_double(rho * (1.0 + tol));
  out.method = "numeric";
  return out;
}

SpectralResult spectral_radius(const IntMatrix& m, double tol) {
  return spectral_radius_of_charpoly(charpoly(m), tol, &m);
}

}  // namespace dyndeg
