#pragma once

// Exhaustive check of partial realizability over R2 for small complexes.
//
// Over R2 the composite of two diagonal candidates vanishes, so d^2 of the
// complex augmented by a subset S of candidates is d^2 + sum_{c in S} delta_c.
// Each delta_c is a bitset over the finitely many possible terms and the
// subsets are walked in Gray-code order, one XOR per step.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "knotlike/algebra.hpp"
#include "knotlike/simd/bitops.hpp"

namespace knotlike {

inline constexpr std::size_t kDefaultOracleCap = 20;

// Arrows x -> U^a V^b y (x != y, a, b >= 1, min(a, b) = 1) allowed by the
// gradings and not already present.
std::vector<Arrow> candidate_arrows(const BasedComplex& complex);

struct OracleResult {
    std::vector<Arrow> candidates;
    // Bit i set means candidates[i] is in the subset. Sorted ascending.
    std::vector<std::uint32_t> witnesses;

    bool realizable() const { return !witnesses.empty(); }
    std::vector<Arrow> witness_arrows(std::size_t i) const;
    // Candidates present in every witness; all ones when there is none.
    std::uint32_t common_mask() const;
    // Index of `arrow` among the candidates, or -1.
    int index_of(const Arrow& arrow) const;
};

// Throws OracleTooLarge if there are more than `cap` candidates (cap <= 30).
OracleResult oracle_decide(const BasedComplex& complex, std::size_t cap = kDefaultOracleCap);
OracleResult oracle_decide(const BasedComplex& complex, std::size_t cap, simd::XorTestFn kernel);

}  // namespace knotlike
