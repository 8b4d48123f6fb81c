#include <algorithm>

#include "knotlike/error.hpp"
#include "knotlike/simd/bitops.hpp"

namespace knotlike::simd {

#if defined(KNOTLIKE_HAVE_AVX2)
bool xor_test_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
#endif
#if defined(KNOTLIKE_HAVE_NEON)
bool xor_test_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
#endif

const char* to_string(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
        case Isa::Neon: return "neon";
    }
    return "?";
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out{Isa::Scalar};
#if defined(KNOTLIKE_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) out.push_back(Isa::Avx2);
#endif
#if defined(KNOTLIKE_HAVE_NEON)
    out.push_back(Isa::Neon);  // baseline on aarch64
#endif
    return out;
}

XorTestFn kernel(Isa isa) {
    const auto have = available_isas();
    if (std::find(have.begin(), have.end(), isa) == have.end()) {
        throw Error(ErrorKind::InvalidInput, std::string("kernel not available: ") + to_string(isa));
    }
    switch (isa) {
        case Isa::Scalar: return xor_test_scalar;
#if defined(KNOTLIKE_HAVE_AVX2)
        case Isa::Avx2: return xor_test_avx2;
#endif
#if defined(KNOTLIKE_HAVE_NEON)
        case Isa::Neon: return xor_test_neon;
#endif
        default: break;
    }
    return xor_test_scalar;
}

Isa best_isa() { return available_isas().back(); }

XorTestFn best_kernel() {
    static const XorTestFn fn = kernel(best_isa());
    return fn;
}

}  // namespace knotlike::simd
