#include "dyndeg/uni_poly_fp.hpp"

#include <algorithm>

#include "dyndeg/common.hpp"
#include "dyndeg/ntt.hpp"

namespace dyndeg {

UniPolyFp::UniPolyFp(u64 prime, std::vector<u64> coeffs)
    : prime_(prime), c_(std::move(coeffs)) {
  FpCtx f(prime_);
  for (auto& v : c_) {
    if (v >= prime_) v %= prime_;
  }
  trim();
}

UniPolyFp UniPolyFp::operator+(const UniPolyFp& o) const {
  check_same_field(o);
  FpCtx f(prime_);
  UniPolyFp r(prime_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = f.add(r.c_[i], o.c_[i]);
  r.trim();
  return r;
}

UniPolyFp UniPolyFp::operator-(const UniPolyFp& o) const {
  check_same_field(o);
  FpCtx f(prime_);
  UniPolyFp r(prime_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = f.sub(r.c_[i], o.c_[i]);
  r.trim();
  return r;
}

UniPolyFp UniPolyFp::operator*(const UniPolyFp& o) const {
  check_same_field(o);
  if (is_zero() || o.is_zero()) return UniPolyFp(prime_);
  UniPolyFp r(prime_);
  r.c_ = convolve_mod(c_, o.c_, prime_);
  r.trim();
  return r;
}

UniPolyFp UniPolyFp::scaled(u64 s) const {
  FpCtx f(prime_);
  s %= prime_;
  if (s == 0) return UniPolyFp(prime_);
  UniPolyFp r(prime_);
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = f.mul(c_[i], s);
  return r;
}

UniPolyFp UniPolyFp::monic() const {
  if (is_zero()) return *this;
  FpCtx f(prime_);
  return scaled(f.inv(leading()));
}

u64 UniPolyFp::eval(u64 x) const {
  FpCtx f(prime_);
  x %= prime_;
  u64 acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

UniPolyFp UniPolyFp::derivative() const {
  if (c_.size() <= 1) return UniPolyFp(prime_);
  FpCtx f(prime_);
  UniPolyFp r(prime_);
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    r.c_[i - 1] = f.mul(c_[i], i % prime_);
  }
  r.trim();
  return r;
}

namespace {

constexpr std::size_t kFastDivisionThreshold = 1024;

std::vector<u64> reversed(const std::vector<u64>& v, std::size_t size) {
  std::vector<u64> r(v.rbegin(), v.rend());
  r.resize(size, 0);
  return r;
}

// power series inverse of b (b[0] != 0) to precision k, by Newton doubling
std::vector<u64> series_inverse(const std::vector<u64>& b, std::size_t k, u64 p) {
  FpCtx f(p);
  std::vector<u64> x{f.inv(b[0])};
  std::size_t prec = 1;
  while (prec < k) {
    prec = std::min(prec * 2, k);
    std::vector<u64> b_lo(b.begin(), b.begin() + std::min(b.size(), prec));
    std::vector<u64> t = convolve_mod(b_lo, x, p);
    t.resize(prec, 0);
    // t := 2 - b*x
    for (auto& v : t) v = f.neg(v);
    t[0] = f.add(t[0], 2 % p);
    x = convolve_mod(x, t, p);
    x.resize(prec, 0);
  }
  x.resize(k, 0);
  return x;
}

// schoolbook remainder in the Montgomery domain, in place; a is destroyed
// and becomes the remainder. Returns the quotient coefficients (normal
// domain) only when wanted.
void mont_divrem(std::vector<u64>& a, const std::vector<u64>& b, const MontCtx& mc,
                 std::vector<u64>* quotient_mont) {
  const std::size_t db = b.size() - 1;
  const FpCtx f(mc.p);
  const u64 lead_inv_mont = mc.to_mont(f.inv(mc.from_mont(b.back())));
  if (quotient_mont != nullptr) {
    quotient_mont->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  }
  while (a.size() >= b.size()) {
    const u64 top = a.back();
    if (top != 0) {
      const u64 c = mc.mul(top, lead_inv_mont);
      const std::size_t shift = a.size() - b.size();
      if (quotient_mont != nullptr) (*quotient_mont)[shift] = c;
      for (std::size_t j = 0; j < db; ++j) {
        if (b[j] != 0) a[shift + j] = mc.sub(a[shift + j], mc.mul(c, b[j]));
      }
    }
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.size() <= db) break;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

std::pair<UniPolyFp, UniPolyFp> UniPolyFp::divrem(const UniPolyFp& divisor) const {
  check_same_field(divisor);
  if (divisor.is_zero()) throw ComputationError("division by zero polynomial");
  if (degree() < divisor.degree()) return {UniPolyFp(prime_), *this};
  const std::size_t qdeg = degree() - divisor.degree();

  if (qdeg >= kFastDivisionThreshold &&
      static_cast<std::size_t>(divisor.degree()) >= kFastDivisionThreshold &&
      ntt_supports(prime_, c_.size() + qdeg + 2)) {
    // Newton division via reversed series inverse
    FpCtx f(prime_);
    std::vector<u64> ra = reversed(c_, c_.size());
    std::vector<u64> rb = reversed(divisor.c_, divisor.c_.size());
    std::vector<u64> inv = series_inverse(rb, qdeg + 1, prime_);
    std::vector<u64> rq = convolve_mod(ra, inv, prime_);
    rq.resize(qdeg + 1, 0);
    std::vector<u64> qc(rq.rbegin(), rq.rend());
    UniPolyFp q(prime_, std::move(qc));
    UniPolyFp r = *this - q * divisor;
    return {std::move(q), std::move(r)};
  }

  MontCtx mc(prime_);
  std::vector<u64> a(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) a[i] = mc.to_mont(c_[i]);
  std::vector<u64> b(divisor.c_.size());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = mc.to_mont(divisor.c_[i]);
  std::vector<u64> qm;
  mont_divrem(a, b, mc, &qm);
  std::vector<u64> qc(qm.size()), rc(a.size());
  for (std::size_t i = 0; i < qm.size(); ++i) qc[i] = mc.from_mont(qm[i]);
  for (std::size_t i = 0; i < a.size(); ++i) rc[i] = mc.from_mont(a[i]);
  return {UniPolyFp(prime_, std::move(qc)), UniPolyFp(prime_, std::move(rc))};
}

UniPolyFp UniPolyFp::divexact(const UniPolyFp& divisor) const {
  auto [q, r] = divrem(divisor);
  if (!r.is_zero()) throw ComputationError("inexact polynomial division over F_p");
  return q;
}

UniPolyFp uni_gcd(const UniPolyFp& a, const UniPolyFp& b) {
  if (a.prime() != b.prime()) throw ValidationError("uni_gcd: prime mismatch");
  if (a.is_zero() && b.is_zero()) throw ValidationError("uni_gcd(0, 0) undefined");
  const u64 p = a.prime();
  MontCtx mc(p);
  auto to_mont = [&](const UniPolyFp& f) {
    std::vector<u64> v(f.coeffs().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = mc.to_mont(f.coeffs()[i]);
    return v;
  };
  std::vector<u64> x = to_mont(a), y = to_mont(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    mont_divrem(x, y, mc, nullptr);
    std::swap(x, y);
  }
  std::vector<u64> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) g[i] = mc.from_mont(x[i]);
  return UniPolyFp(p, std::move(g)).monic();
}

TupleReduceResult tuple_reduce_univariate(const std::vector<UniPolyFp>& tuple) {
  if (tuple.empty()) throw ValidationError("tuple_reduce_univariate: empty tuple");
  const u64 p = tuple.front().prime();
  std::vector<const UniPolyFp*> nonzero;
  for (const auto& t : tuple) {
    if (t.prime() != p) throw ValidationError("tuple_reduce_univariate: prime mismatch");
    if (!t.is_zero()) nonzero.push_back(&t);
  }
  if (nonzero.empty()) {
    throw ComputationError("tuple_reduce_univariate: all components vanished (degenerate line)");
  }

  std::int64_t max_deg = 0;
  for (const auto* t : nonzero) max_deg = std::max(max_deg, t->degree());

  UniPolyFp g(p);
  if (nonzero.size() >= 3 && max_deg > 2048) {
    // random linear combinations seed the GCD; exactness is restored by the
    // verification loop below, so the randomness affects speed only
    SplitMix64 rng(0x9e3779b97f4a7c15ull ^ static_cast<u64>(max_deg));
    FpCtx f(p);
    UniPolyFp u(p), v(p);
    for (const auto* t : nonzero) {
      u = u + t->scaled(1 + rng.below(p - 1));
      v = v + t->scaled(1 + rng.below(p - 1));
    }
    if (u.is_zero() || v.is_zero()) {
      g = *nonzero.front();
    } else {
      g = uni_gcd(u, v);
    }
  } else {
    g = *nonzero.front();
  }
  for (const auto* t : nonzero) {
    if (g.degree() == 0) break;
    g = uni_gcd(g, *t);
  }

  if (g.degree() <= 0) {
    TupleReduceResult out;
    out.reduced = tuple;
    out.dropped_degree = 0;
    return out;
  }
  TupleReduceResult out;
  out.dropped_degree = g.degree();
  out.reduced.reserve(tuple.size());
  for (const auto& t : tuple) {
    out.reduced.push_back(t.is_zero() ? UniPolyFp(p) : t.divexact(g));
  }
  return out;
}

}  // namespace dyndeg
