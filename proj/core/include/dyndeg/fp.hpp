#pragma once

#include <cstdint>

#include "dyndeg/common.hpp"

namespace dyndeg {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Scalar arithmetic mod an odd prime p < 2^62.
struct FpCtx {
  u64 p;

  explicit FpCtx(u64 prime) : p(prime) {
    if (prime < 3 || prime % 2 == 0 || prime >= (1ull << 62)) {
      throw ValidationError("prime field modulus must be odd and < 2^62");
    }
  }

  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(u128(a) * b % p); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a == 0) throw ComputationError("inverse of zero in prime field");
    return pow(a, p - 2);
  }
  u64 reduce_bigint(const BigInt& v) const {
    BigInt r;
    mpz_mod_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r.get_ui();
  }
};

/// Montgomery multiplication context used inside the hot loops (NTT, big
/// polynomial division/GCD). Values in the Montgomery domain are plain u64s.
struct MontCtx {
  u64 p;
  u64 ninv;  // -p^{-1} mod 2^64
  u64 r2;    // 2^128 mod p

  explicit MontCtx(u64 prime) : p(prime) {
    u64 inv = prime;  // Newton for inverse mod 2^64 (p odd)
    for (int i = 0; i < 5; ++i) inv *= 2 - prime * inv;
    ninv = ~inv + 1;
    u128 r = (u128(1) << 64) % prime;
    r2 = static_cast<u64>(r * r % prime);
  }

  u64 reduce(u128 t) const {
    u64 m = static_cast<u64>(t) * ninv;
    u128 s = t + u128(m) * p;
    u64 r = static_cast<u64>(s >> 64);
    return r >= p ? r - p : r;
  }
  u64 mul(u64 a, u64 b) const { return reduce(u128(a) * b); }
  u64 to_mont(u64 a) const { return mul(a, r2); }
  u64 from_mont(u64 a) const { return reduce(u128(a)); }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 pow(u64 a_mont, u64 e) const {
    u64 r = to_mont(1);
    while (e > 0) {
      if (e & 1) r = mul(r, a_mont);
      a_mont = mul(a_mont, a_mont);
      e >>= 1;
    }
    return r;
  }
};

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_probable_prime(u64 n);

}  // namespace dyndeg
