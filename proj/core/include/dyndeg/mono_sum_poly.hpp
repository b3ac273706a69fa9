#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "dyndeg/common.hpp"

namespace dyndeg {

using ExpVec = std::vector<std::uint32_t>;

inline std::uint64_t exp_total(const ExpVec& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

/// Graded lexicographic, leading term first: higher total degree wins, ties
/// broken lexicographically. Fixed so serialized polynomials are canonical.
struct GradedLexGreater {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    const auto da = exp_total(a), db = exp_total(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse multivariate polynomial as a sum of monomials, over the integers
/// (prime() == 0) or over F_prime. Components of rational maps live here.
class MonoSumPoly {
 public:
  using TermMap = std::map<ExpVec, BigInt, GradedLexGreater>;

  explicit MonoSumPoly(std::uint32_t nvars, std::uint64_t prime = 0)
      : nvars_(nvars), prime_(prime) {}

  static MonoSumPoly constant(std::uint32_t nvars, BigInt c, std::uint64_t prime = 0);
  static MonoSumPoly variable(std::uint32_t nvars, std::uint32_t i, std::uint64_t prime = 0);
  static MonoSumPoly monomial(std::uint32_t nvars, ExpVec e, BigInt c, std::uint64_t prime = 0);

  std::uint32_t nvars() const { return nvars_; }
  std::uint64_t prime() const { return prime_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Max total degree over terms; -1 for the zero polynomial.
  std::int64_t total_degree() const;
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }

  void add_term(const ExpVec& e, BigInt c);

  MonoSumPoly operator+(const MonoSumPoly& o) const;
  MonoSumPoly operator-(const MonoSumPoly& o) const;
  MonoSumPoly operator*(const MonoSumPoly& o) const;
  MonoSumPoly operator-() const;
  bool operator==(const MonoSumPoly& o) const {
    return nvars_ == o.nvars_ && prime_ == o.prime_ && terms_ == o.terms_;
  }

  MonoSumPoly pow(std::uint32_t e) const;
  MonoSumPoly mul_monomial(const ExpVec& e, const BigInt& c) const;
  MonoSumPoly div_monomial(const ExpVec& e) const;  // exact; throws if not
  /// Z -> F_p coefficient reduction (or p -> same p; cross-prime is an error).
  MonoSumPoly reduced_mod(std::uint64_t prime) const;

  std::string to_string(const std::vector<std::string>& var_names = {}) const;

 private:
  BigInt normalize(BigInt c) const;
  void check_compatible(const MonoSumPoly& o) const;

  std::uint32_t nvars_;
  std::uint64_t prime_;  // 0 = integer coefficients
  TermMap terms_;
};

/// Component-wise substitution: components live in k+1 variables, arguments
/// are k+1 polynomials over a common variable set and coefficient domain.
std::vector<MonoSumPoly> substitute(const std::vector<MonoSumPoly>& components,
                                    const std::vector<MonoSumPoly>& arguments);

/// Divides out the largest monomial dividing every term of every component.
/// Returns the reduced tuple and the extracted monomial (coefficient 1).
std::pair<std::vector<MonoSumPoly>, MonoSumPoly> mono_gcd_reduce(
    const std::vector<MonoSumPoly>& tuple);

/// Exact single-divisor multivariate division; nullopt when not exact.
std::optional<MonoSumPoly> try_divide_exact(const MonoSumPoly& a,
                                            const MonoSumPoly& divisor);

}  // namespace dyndeg
