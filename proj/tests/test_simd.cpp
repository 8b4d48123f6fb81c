#include <doctest.h>

#include <random>

#include "knotlike/oracle.hpp"
#include "knotlike/simd/bitops.hpp"
#include "knotlike/standard.hpp"
#include "support.hpp"

using namespace knotlike;

TEST_CASE("scalar kernel is always available") {
    const auto isas = simd::available_isas();
    REQUIRE_FALSE(isas.empty());
    CHECK(isas.front() == simd::Isa::Scalar);
    CHECK(simd::kernel(simd::Isa::Scalar) == &simd::xor_test_scalar);
    CHECK(std::string(simd::to_string(simd::best_isa())).size() > 0);
}

TEST_CASE("unavailable kernels are refused") {
    const auto isas = simd::available_isas();
    for (auto isa : {simd::Isa::Avx2, simd::Isa::Neon}) {
        if (std::find(isas.begin(), isas.end(), isa) == isas.end()) CHECK_THROWS_AS(simd::kernel(isa), Error);
    }
}

TEST_CASE("every kernel matches the scalar kernel on random buffers") {
    std::mt19937_64 rng(99);
    for (auto isa : simd::available_isas()) {
        const auto fn = simd::kernel(isa);
        for (std::size_t words = 0; words <= 37; ++words) {
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<std::uint64_t> a(words), b(words);
                for (auto& w : a) w = rng();
                // Sometimes make the result zero, sometimes zero but for one bit.
                if (trial % 3 == 0) {
                    b = a;
                    if (trial % 2 && words) b[rng() % words] ^= std::uint64_t{1} << (rng() % 64);
                } else {
                    for (auto& w : b) w = rng();
                }
                auto x = a, y = a;
                const bool zs = simd::xor_test_scalar(x.data(), b.data(), words);
                const bool zk = fn(y.data(), b.data(), words);
                CHECK(zs == zk);
                CHECK(x == y);
            }
        }
    }
}

TEST_CASE("oracle results do not depend on the kernel") {
    const auto isas = simd::available_isas();
    for (const auto& seq : testsupport::all_sequences(2, 2)) {
        const auto c = build_standard(SignSequence(seq));
        const auto ref = oracle_decide(c, kDefaultOracleCap, simd::xor_test_scalar);
        for (auto isa : isas) {
            const auto r = oracle_decide(c, kDefaultOracleCap, simd::kernel(isa));
            CHECK(r.witnesses == ref.witnesses);
        }
    }
}
