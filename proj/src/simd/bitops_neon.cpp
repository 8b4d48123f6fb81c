#include <arm_neon.h>

#include "knotlike/simd/bitops.hpp"

namespace knotlike::simd {

bool xor_test_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    uint64x2_t any = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        const uint64x2_t x = veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i));
        vst1q_u64(dst + i, x);
        any = vorrq_u64(any, x);
    }
    std::uint64_t tail = vgetq_lane_u64(any, 0) | vgetq_lane_u64(any, 1);
    for (; i < words; ++i) {
        dst[i] ^= src[i];
        tail |= dst[i];
    }
    return tail == 0;
}

}  // namespace knotlike::simd
