#include "knotlike/simd/bitops.hpp"

namespace knotlike::simd {

bool xor_test_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::uint64_t any = 0;
    for (std::size_t i = 0; i < words; ++i) {
        dst[i] ^= src[i];
        any |= dst[i];
    }
    return any == 0;
}

}  // namespace knotlike::simd
