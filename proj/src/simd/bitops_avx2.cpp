// Built with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "knotlike/simd/bitops.hpp"

namespace knotlike::simd {

bool xor_test_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    __m256i any = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        auto* d = reinterpret_cast<__m256i*>(dst + i);
        const __m256i x = _mm256_xor_si256(_mm256_loadu_si256(d),
                                           _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i)));
        _mm256_storeu_si256(d, x);
        any = _mm256_or_si256(any, x);
    }
    std::uint64_t tail = 0;
    for (; i < words; ++i) {
        dst[i] ^= src[i];
        tail |= dst[i];
    }
    return _mm256_testz_si256(any, any) && tail == 0;
}

}  // namespace knotlike::simd
