#pragma once

// Bitset kernel for the oracle's Gray-code walk: dst ^= src, then report
// whether dst is all zero. Scalar reference plus AVX2 / NEON variants picked
// at runtime.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace knotlike::simd {

enum class Isa { Scalar, Avx2, Neon };

const char* to_string(Isa isa);

using XorTestFn = bool (*)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);

bool xor_test_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);

// Variants compiled into this build and supported by the running CPU.
std::vector<Isa> available_isas();

// Throws InvalidInput if `isa` is not available.
XorTestFn kernel(Isa isa);

// Widest available variant.
Isa best_isa();
XorTestFn best_kernel();

}  // namespace knotlike::simd
