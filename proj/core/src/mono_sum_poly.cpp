#include "dyndeg/mono_sum_poly.hpp"

#include <algorithm>
#include <sstream>

namespace dyndeg {

BigInt MonoSumPoly::normalize(BigInt c) const {
  if (prime_ != 0) {
    BigInt p(static_cast<unsigned long>(prime_));
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
  }
  return c;
}

void MonoSumPoly::check_compatible(const MonoSumPoly& o) const {
  if (nvars_ != o.nvars_) throw ValidationError("variable-count mismatch");
  if (prime_ != o.prime_) throw ValidationError("mixed coefficient domains");
}

MonoSumPoly MonoSumPoly::constant(std::uint32_t nvars, BigInt c, std::uint64_t prime) {
  MonoSumPoly p(nvars, prime);
  p.add_term(ExpVec(nvars, 0), std::move(c));
  return p;
}

MonoSumPoly MonoSumPoly::variable(std::uint32_t nvars, std::uint32_t i, std::uint64_t prime) {
  if (i >= nvars) throw ValidationError("variable index out of range");
  MonoSumPoly p(nvars, prime);
  ExpVec e(nvars, 0);
  e[i] = 1;
  p.add_term(e, BigInt(1));
  return p;
}

MonoSumPoly MonoSumPoly::monomial(std::uint32_t nvars, ExpVec e, BigInt c, std::uint64_t prime) {
  if (e.size() != nvars) throw ValidationError("exponent vector length mismatch");
  MonoSumPoly p(nvars, prime);
  p.add_term(e, std::move(c));
  return p;
}

std::int64_t MonoSumPoly::total_degree() const {
  if (terms_.empty()) return -1;
  // graded order: the first term carries the maximal total degree
  return static_cast<std::int64_t>(exp_total(terms_.begin()->first));
}

bool MonoSumPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = exp_total(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (exp_total(e) != d) return false;
  }
  return true;
}

void MonoSumPoly::add_term(const ExpVec& e, BigInt c) {
  if (e.size() != nvars_) throw ValidationError("exponent vector length mismatch");
  c = normalize(std::move(c));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, std::move(c));
  if (!inserted) {
    it->second = normalize(it->second + c);
    if (it->second == 0) terms_.erase(it);
  }
}

MonoSumPoly MonoSumPoly::operator+(const MonoSumPoly& o) const {
  check_compatible(o);
  MonoSumPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MonoSumPoly MonoSumPoly::operator-(const MonoSumPoly& o) const {
  check_compatible(o);
  MonoSumPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MonoSumPoly MonoSumPoly::operator*(const MonoSumPoly& o) const {
  check_compatible(o);
  MonoSumPoly r(nvars_, prime_);
  ExpVec e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::uint32_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MonoSumPoly MonoSumPoly::operator-() const {
  MonoSumPoly r(nvars_, prime_);
  for (const auto& [e, c] : terms_) r.add_term(e, -c);
  return r;
}

MonoSumPoly MonoSumPoly::pow(std::uint32_t e) const {
  MonoSumPoly result = constant(nvars_, BigInt(1), prime_);
  MonoSumPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MonoSumPoly MonoSumPoly::mul_monomial(const ExpVec& e, const BigInt& c) const {
  if (e.size() != nvars_) throw ValidationError("exponent vector length mismatch");
  MonoSumPoly r(nvars_, prime_);
  ExpVec t(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (std::uint32_t i = 0; i < nvars_; ++i) t[i] = ea[i] + e[i];
    r.add_term(t, ca * c);
  }
  return r;
}

MonoSumPoly MonoSumPoly::div_monomial(const ExpVec& e) const {
  if (e.size() != nvars_) throw ValidationError("exponent vector length mismatch");
  MonoSumPoly r(nvars_, prime_);
  ExpVec t(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (std::uint32_t i = 0; i < nvars_; ++i) {
      if (ea[i] < e[i]) throw ComputationError("monomial division not exact");
      t[i] = ea[i] - e[i];
    }
    r.add_term(t, ca);
  }
  return r;
}

MonoSumPoly MonoSumPoly::reduced_mod(std::uint64_t prime) const {
  if (prime_ == prime) return *this;
  if (prime_ != 0) throw ValidationError("cannot move coefficients between prime fields");
  MonoSumPoly r(nvars_, prime);
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  return r;
}

std::string MonoSumPoly::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  auto name = [&](std::uint32_t i) {
    if (i < var_names.size()) return var_names[i];
    return "x" + std::to_string(i);
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c >= 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    BigInt a = abs(c);
    bool printed = false;
    if (a != 1 || exp_total(e) == 0) {
      os << a.get_str();
      printed = true;
    }
    for (std::uint32_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << name(i);
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

std::vector<MonoSumPoly> substitute(const std::vector<MonoSumPoly>& components,
                                    const std::vector<MonoSumPoly>& arguments) {
  if (components.empty()) throw ValidationError("substitute: no components");
  if (arguments.empty()) throw ValidationError("substitute: no arguments");
  const std::uint32_t nin = components.front().nvars();
  if (arguments.size() != nin) {
    throw ValidationError("substitute: component variable count != argument count");
  }
  const std::uint32_t nout = arguments.front().nvars();
  const std::uint64_t prime = arguments.front().prime();
  for (const auto& c : components) {
    if (c.nvars() != nin) throw ValidationError("substitute: ragged components");
  }
  for (const auto& a : arguments) {
    if (a.nvars() != nout || a.prime() != prime) {
      throw ValidationError("substitute: arguments disagree on variables or domain");
    }
  }
  if (components.front().prime() != 0 && components.front().prime() != prime) {
    throw ValidationError("mixed coefficient domains");
  }

  // cache argument powers; exponents in map components stay small
  std::vector<std::vector<MonoSumPoly>> powers(nin);
  auto arg_power = [&](std::uint32_t i, std::uint32_t e) -> const MonoSumPoly& {
    auto& cache = powers[i];
    if (cache.empty()) {
      cache.push_back(MonoSumPoly::constant(nout, BigInt(1), prime));
      cache.push_back(arguments[i]);
    }
    while (cache.size() <= e) cache.push_back(cache.back() * arguments[i]);
    return cache[e];
  };

  std::vector<MonoSumPoly> out;
  out.reserve(components.size());
  for (const auto& comp : components) {
    MonoSumPoly acc(nout, prime);
    for (const auto& [e, c] : comp.terms()) {
      MonoSumPoly term = MonoSumPoly::constant(nout, c, prime);
      for (std::uint32_t i = 0; i < nin; ++i) {
        if (e[i] > 0) term = term * arg_power(i, e[i]);
      }
      acc = acc + term;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::pair<std::vector<MonoSumPoly>, MonoSumPoly> mono_gcd_reduce(
    const std::vector<MonoSumPoly>& tuple) {
  if (tuple.empty()) throw ValidationError("mono_gcd_reduce: empty tuple");
  const std::uint32_t nvars = tuple.front().nvars();
  bool any = false;
  ExpVec g(nvars, 0);
  bool first = true;
  for (const auto& p : tuple) {
    if (p.nvars() != nvars) throw ValidationError("mono_gcd_reduce: ragged tuple");
    for (const auto& [e, c] : p.terms()) {
      any = true;
      if (first) {
        g = e;
        first = false;
      } else {
        for (std::uint32_t i = 0; i < nvars; ++i) g[i] = std::min(g[i], e[i]);
      }
    }
  }
  if (!any) throw ValidationError("mono_gcd_reduce: all components zero");
  MonoSumPoly extracted =
      MonoSumPoly::monomial(nvars, g, BigInt(1), tuple.front().prime());
  if (exp_total(g) == 0) return {tuple, extracted};
  std::vector<MonoSumPoly> reduced;
  reduced.reserve(tuple.size());
  for (const auto& p : tuple) {
    reduced.push_back(p.is_zero() ? p : p.div_monomial(g));
  }
  return {std::move(reduced), std::move(extracted)};
}

std::optional<MonoSumPoly> try_divide_exact(const MonoSumPoly& a,
                                            const MonoSumPoly& divisor) {
  if (divisor.is_zero()) return std::nullopt;
  if (a.nvars() != divisor.nvars() || a.prime() != divisor.prime()) {
    throw ValidationError("try_divide_exact: incompatible polynomials");
  }
  const std::uint32_t n = a.nvars();
  MonoSumPoly rem = a;
  MonoSumPoly q(n, a.prime());
  const auto& ld_e = divisor.terms().begin()->first;
  const auto& ld_c = divisor.terms().begin()->second;
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().begin();
    ExpVec qe(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (re[i] < ld_e[i]) return std::nullopt;
      qe[i] = re[i] - ld_e[i];
    }
    BigInt qc;
    if (a.prime() == 0) {
      BigInt r;
      mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rc.get_mpz_t(), ld_c.get_mpz_t());
      if (r != 0) return std::nullopt;
    } else {
      BigInt p(static_cast<unsigned long>(a.prime()));
      BigInt inv;
      if (mpz_invert(inv.get_mpz_t(), ld_c.get_mpz_t(), p.get_mpz_t()) == 0) {
        return std::nullopt;
      }
      qc = rc * inv;
    }
    q.add_term(qe, qc);
    rem = rem - divisor.mul_monomial(qe, qc);
  }
  return q;
}

}  // namespace dyndeg
