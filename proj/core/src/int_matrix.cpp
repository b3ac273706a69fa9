#include "dyndeg/int_matrix.hpp"

namespace dyndeg {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : dim_(rows.size()), a_(rows.size() * rows.size(), BigInt(0)) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw ValidationError("IntMatrix initializer is not square");
    std::size_t j = 0;
    for (long v : row) a_[i * dim_ + j++] = BigInt(v);
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (dim_ != o.dim_) throw ValidationError("matrix dimension mismatch");
  IntMatrix r(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (dim_ != o.dim_) throw ValidationError("matrix dimension mismatch");
  IntMatrix r(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (dim_ != o.dim_) throw ValidationError("matrix dimension mismatch");
  IntMatrix r(dim_);
  BigInt acc;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const BigInt& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (o.at(k, j) != 0) r.at(i, j) += aik * o.at(k, j);
      }
    }
  }
  return r;
}

bool IntMatrix::is_identity() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (at(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool IntMatrix::is_nonnegative() const {
  for (const auto& v : a_) {
    if (v < 0) return false;
  }
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
  }
  return r;
}

BigInt IntMatrix::trace() const {
  BigInt t(0);
  for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

BigInt IntMatrix::max_abs_entry() const {
  BigInt m(0);
  for (const auto& v : a_) {
    BigInt a = abs(v);
    if (a > m) m = a;
  }
  return m;
}

BigInt IntMatrix::det() const {
  if (dim_ == 0) return BigInt(1);
  IntMatrix w = *this;
  BigInt prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < dim_; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < dim_ && w.at(pivot, k) == 0) ++pivot;
      if (pivot == dim_) return BigInt(0);
      for (std::size_t j = 0; j < dim_; ++j) std::swap(w.at(k, j), w.at(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < dim_; ++i) {
      for (std::size_t j = k + 1; j < dim_; ++j) {
        BigInt num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  BigInt d = w.at(dim_ - 1, dim_ - 1);
  return sign > 0 ? d : -d;
}

IntMatrix mat_pow(const IntMatrix& m, unsigned long n) {
  IntMatrix result = IntMatrix::identity(m.dim());
  IntMatrix base = m;
  while (n > 0) {
    if (n & 1ul) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

IntMatrix abs_entries(const IntMatrix& m) {
  IntMatrix r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) r.at(i, j) = abs(m.at(i, j));
  }
  return r;
}

}  // namespace dyndeg
