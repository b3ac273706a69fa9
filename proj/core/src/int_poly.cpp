#include "dyndeg/int_poly.hpp"

#include <sstream>

namespace dyndeg {

IntPoly IntPoly::constant(BigInt v) {
  IntPoly p;
  if (v != 0) p.c_.push_back(std::move(v));
  return p;
}

IntPoly IntPoly::variable() { return monomial(1, 1); }

IntPoly IntPoly::monomial(int degree, BigInt c) {
  IntPoly p;
  if (c != 0) {
    p.c_.assign(degree + 1, BigInt(0));
    p.c_.back() = std::move(c);
  }
  return p;
}

BigInt IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return BigInt(0);
  return c_[i];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  IntPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
  r.trim();
  return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly{};
  IntPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly IntPoly::mul_power(int k) const {
  if (is_zero()) return IntPoly{};
  IntPoly r;
  r.c_.assign(c_.size() + k, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

IntPoly IntPoly::scaled(const BigInt& s) const {
  if (s == 0) return IntPoly{};
  IntPoly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly{};
  IntPoly r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * BigInt(static_cast<long>(i));
  r.trim();
  return r;
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRat IntPoly::eval(const BigRat& x) const {
  BigRat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
  return acc;
}

std::complex<double> IntPoly::eval(std::complex<double> x) const {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpz_get_d(it->get_mpz_t());
  return acc;
}

int IntPoly::sign_at(const BigRat& x) const {
  BigRat v = eval(x);
  return sgn(v);
}

IntPoly IntPoly::divexact(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw ComputationError("polynomial division by zero");
  if (is_zero()) return IntPoly{};
  if (degree() < divisor.degree()) {
    throw ComputationError("inexact polynomial division (degree)");
  }
  std::vector<BigInt> rem = c_;
  const auto& b = divisor.c_;
  std::vector<BigInt> q(rem.size() - b.size() + 1, BigInt(0));
  for (int s = static_cast<int>(q.size()) - 1; s >= 0; --s) {
    BigInt& top = rem[s + b.size() - 1];
    if (top == 0) continue;
    BigInt qc, r;
    mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
    if (r != 0) throw ComputationError("inexact polynomial division (coefficient)");
    q[s] = qc;
    for (std::size_t j = 0; j < b.size(); ++j) rem[s + j] -= qc * b[j];
  }
  for (const auto& r : rem) {
    if (r != 0) throw ComputationError("inexact polynomial division (remainder)");
  }
  return IntPoly(std::move(q));
}

IntPoly IntPoly::deflate(const BigInt& root) const {
  // synthetic division by (t - root); remainder must vanish
  if (is_zero()) throw ComputationError("deflating zero polynomial");
  std::vector<BigInt> q(c_.size() - 1, BigInt(0));
  BigInt carry(0);
  for (int i = degree(); i >= 1; --i) {
    carry = c_[i] + carry;
    q[i - 1] = carry;
    carry *= root;
  }
  if (c_[0] + carry != 0) throw ComputationError("deflate: not a root");
  return IntPoly(std::move(q));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    BigInt a = abs(c);
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

BigInt content(const IntPoly& p) {
  BigInt g(0);
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> c = p.coeffs();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

namespace {

// pseudo-remainder: lc(b)^(da-db+1) * a  mod b
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  const int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    IntPoly t = b.mul_power(shift).scaled(r.leading());
    r = r.scaled(b.leading()) - t;
  }
  return r;
}

}  // namespace

IntPoly gcd_z(IntPoly a, IntPoly b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  // primitive PRS: contents are stripped each step; fine at these sizes
  while (!b.is_zero()) {
    IntPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = r.is_zero() ? IntPoly{} : primitive_part(r);
  }
  return a;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero() || p.degree() <= 1) return primitive_part(p);
  IntPoly g = gcd_z(p, p.derivative());
  if (g.degree() == 0) return primitive_part(p);
  return primitive_part(primitive_part(p).divexact(g));
}

}  // namespace dyndeg
