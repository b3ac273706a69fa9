#pragma once

#include <cstdint>
#include <vector>

#include "dyndeg/fp.hpp"

namespace dyndeg {

/// True when p supports radix-2 NTT convolutions of the given result size
/// (p = k*2^s + 1 with 2^s >= size) and a generator is known or findable.
bool ntt_supports(u64 prime, std::size_t size);

/// Exact cyclic-free convolution of a and b mod prime via NTT.
/// Requires ntt_supports(prime, a.size()+b.size()-1).
std::vector<u64> ntt_convolve(const std::vector<u64>& a, const std::vector<u64>& b,
                              u64 prime);

/// Convolution dispatch: schoolbook for small sizes, NTT when supported and
/// large; falls back to schoolbook otherwise.
std::vector<u64> convolve_mod(const std::vector<u64>& a, const std::vector<u64>& b,
                              u64 prime);

}  // namespace dyndeg
