#include "dyndeg/ntt.hpp"

#include <map>
#include <mutex>

namespace dyndeg {

bool is_probable_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod = [&](u64 a, u64 b) { return static_cast<u64>(u128(a) * b % n); };
  auto powmod = [&](u64 a, u64 e) {
    u64 r = 1;
    while (e > 0) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  // deterministic witness set for 64-bit inputs
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    u64 x = powmod(a % n, d);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

struct NttPlan {
  u64 prime;
  u64 generator;  // primitive root of F_p
  int max_log2;   // 2-adic valuation of p-1
};

// finds a primitive root: factor p-1 (trial division + the prime cofactor),
// then test candidates against every prime factor
u64 find_generator(u64 p) {
  u64 m = p - 1;
  std::vector<u64> factors;
  for (u64 d = 2; d * d <= m && d <= 3000000; d = (d == 2 ? 3 : d + 2)) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) {
    if (!is_probable_prime(m)) {
      throw ComputationError("cannot factor p-1 to find an NTT generator");
    }
    factors.push_back(m);
  }
  FpCtx f(p);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : factors) {
      if (f.pow(g, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw ComputationError("no generator found");
}

std::mutex g_plan_mutex;
std::map<u64, NttPlan> g_plans;

const NttPlan* plan_for(u64 p) {
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto it = g_plans.find(p);
  if (it != g_plans.end()) return &it->second;
  u64 m = p - 1;
  int v = 0;
  while (m % 2 == 0) {
    m >>= 1;
    ++v;
  }
  if (v < 4) return nullptr;
  NttPlan plan;
  plan.prime = p;
  plan.max_log2 = v;
  try {
    plan.generator = find_generator(p);
  } catch (const ComputationError&) {
    return nullptr;
  }
  return &g_plans.emplace(p, plan).first->second;
}

void bit_reverse(std::vector<u64>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
}

// in-place NTT over Montgomery-domain values
void ntt_transform(std::vector<u64>& a, const MontCtx& mc, u64 root_mont) {
  const std::size_t n = a.size();
  bit_reverse(a);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    u64 wlen = root_mont;
    for (std::size_t i = len; i < n; i <<= 1) wlen = mc.mul(wlen, wlen);
    for (std::size_t i = 0; i < n; i += len) {
      u64 w = mc.to_mont(1);
      for (std::size_t j = 0; j < len / 2; ++j) {
        u64 u = a[i + j];
        u64 v = mc.mul(a[i + j + len / 2], w);
        a[i + j] = mc.add(u, v);
        a[i + j + len / 2] = mc.sub(u, v);
        w = mc.mul(w, wlen);
      }
    }
  }
}

}  // namespace

bool ntt_supports(u64 prime, std::size_t size) {
  std::size_t n = 1;
  int log2n = 0;
  while (n < size) {
    n <<= 1;
    ++log2n;
  }
  const NttPlan* plan = plan_for(prime);
  return plan != nullptr && log2n <= plan->max_log2;
}

std::vector<u64> ntt_convolve(const std::vector<u64>& a, const std::vector<u64>& b,
                              u64 prime) {
  const std::size_t out_size = a.size() + b.size() - 1;
  const NttPlan* plan = plan_for(prime);
  if (plan == nullptr) throw ComputationError("prime does not support NTT");
  std::size_t n = 1;
  int log2n = 0;
  while (n < out_size) {
    n <<= 1;
    ++log2n;
  }
  if (log2n > plan->max_log2) throw ComputationError("NTT size exceeds 2-adic capacity");

  MontCtx mc(prime);
  FpCtx f(prime);
  const u64 root = f.pow(plan->generator, (prime - 1) >> log2n);
  const u64 root_mont = mc.to_mont(root);
  const u64 root_inv_mont = mc.to_mont(f.inv(root));

  std::vector<u64> fa(n, 0), fb(n, 0);
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = mc.to_mont(a[i]);
  for (std::size_t i = 0; i < b.size(); ++i) fb[i] = mc.to_mont(b[i]);
  ntt_transform(fa, mc, root_mont);
  ntt_transform(fb, mc, root_mont);
  for (std::size_t i = 0; i < n; ++i) fa[i] = mc.mul(fa[i], fb[i]);
  ntt_transform(fa, mc, root_inv_mont);
  const u64 ninv_mont = mc.to_mont(f.inv(n % prime));
  std::vector<u64> out(out_size);
  for (std::size_t i = 0; i < out_size; ++i) {
    out[i] = mc.from_mont(mc.mul(fa[i], ninv_mont));
  }
  return out;
}

std::vector<u64> convolve_mod(const std::vector<u64>& a, const std::vector<u64>& b,
                              u64 prime) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_size = a.size() + b.size() - 1;
  const std::size_t small = std::min(a.size(), b.size());
  if (small <= 32 || u128(a.size()) * b.size() <= 1 << 16 ||
      !ntt_supports(prime, out_size)) {
    std::vector<u64> out(out_size, 0);
    FpCtx f(prime);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] != 0) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
      }
    }
    return out;
  }
  return ntt_convolve(a, b, prime);
}

}  // namespace dyndeg
