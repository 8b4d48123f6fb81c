#include "knotlike/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

namespace knotlike {

std::vector<Arrow> candidate_arrows(const BasedComplex& complex) {
    std::vector<Arrow> out;
    for (GenId x = 0; x < complex.size(); ++x) {
        for (GenId y = 0; y < complex.size(); ++y) {
            if (x == y) continue;
            const auto m = candidate_monomial(complex, x, y);
            if (!m || m->min_exponent() != 1) continue;
            const Arrow a{x, *m, y};
            if (!complex.has_arrow(a)) out.push_back(a);
        }
    }
    return out;
}

std::vector<Arrow> OracleResult::witness_arrows(std::size_t i) const {
    std::vector<Arrow> out;
    for (std::size_t b = 0; b < candidates.size(); ++b) {
        if ((witnesses.at(i) >> b) & 1u) out.push_back(candidates[b]);
    }
    return out;
}

std::uint32_t OracleResult::common_mask() const {
    std::uint32_t mask = ~std::uint32_t{0};
    for (auto w : witnesses) mask &= w;
    return mask;
}

int OracleResult::index_of(const Arrow& arrow) const {
    auto it = std::find(candidates.begin(), candidates.end(), arrow);
    return it == candidates.end() ? -1 : static_cast<int>(it - candidates.begin());
}

namespace {

using TermKey = std::tuple<GenId, Monomial, GenId>;

class TermIndex {
public:
    std::size_t operator()(const TermKey& k) {
        auto [it, inserted] = index_.try_emplace(k, index_.size());
        return it->second;
    }
    std::size_t size() const { return index_.size(); }

private:
    std::map<TermKey, std::size_t> index_;
};

using Terms = std::vector<TermKey>;

void toggle(Terms& terms, const TermKey& k) {
    auto it = std::find(terms.begin(), terms.end(), k);
    if (it == terms.end()) {
        terms.push_back(k);
    } else {
        terms.erase(it);
    }
}

// Terms that inserting `c` adds to d^2: paths c.then(a) and a.then(c).
Terms delta(const BasedComplex& c, const Arrow& cand) {
    Terms out;
    for (const auto& a : c.outgoing(cand.target)) {
        const Monomial m = cand.mono * a.mono;
        if (!m.vanishes_in(c.ring())) toggle(out, {cand.source, m, a.target});
    }
    for (const auto& a : c.incoming(cand.source)) {
        const Monomial m = a.mono * cand.mono;
        if (!m.vanishes_in(c.ring())) toggle(out, {a.source, m, cand.target});
    }
    return out;
}

}  // namespace

OracleResult oracle_decide(const BasedComplex& complex, std::size_t cap) {
    return oracle_decide(complex, cap, simd::best_kernel());
}

OracleResult oracle_decide(const BasedComplex& input, std::size_t cap, simd::XorTestFn kernel) {
    if (input.ring() > R2) throw Error(ErrorKind::InvalidInput, "the oracle works over R1 or R2");
    if (cap > 30) throw Error(ErrorKind::InvalidInput, "oracle cap above 30");
    const BasedComplex c = lift(input, R2);

    OracleResult result;
    result.candidates = candidate_arrows(c);
    const std::size_t k = result.candidates.size();
    if (k > cap) {
        throw Error(ErrorKind::OracleTooLarge,
                    std::to_string(k) + " candidates exceed the cap of " + std::to_string(cap));
    }

    TermIndex index;
    std::vector<std::size_t> base;
    const auto sq = differential_square(c);
    for (GenId x = 0; x < sq.size(); ++x) {
        for (const auto& t : sq[x]) base.push_back(index({x, t.mono, t.target}));
    }
    std::vector<std::vector<std::size_t>> deltas;
    for (const auto& cand : result.candidates) {
        std::vector<std::size_t> bits;
        for (const auto& t : delta(c, cand)) bits.push_back(index(t));
        deltas.push_back(std::move(bits));
    }

    const std::size_t words = std::max<std::size_t>(1, (index.size() + 63) / 64);
    auto pack = [words](const std::vector<std::size_t>& bits) {
        std::vector<std::uint64_t> v(words, 0);
        for (auto b : bits) v[b / 64] ^= std::uint64_t{1} << (b % 64);
        return v;
    };
    std::vector<std::uint64_t> state = pack(base);
    std::vector<std::vector<std::uint64_t>> packed;
    for (const auto& d : deltas) packed.push_back(pack(d));

    if (std::all_of(state.begin(), state.end(), [](auto w) { return w == 0; })) {
        result.witnesses.push_back(0);
    }
    std::uint32_t mask = 0;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        const int bit = std::countr_zero(i);
        mask ^= std::uint32_t{1} << bit;
        if (kernel(state.data(), packed[bit].data(), words)) result.witnesses.push_back(mask);
    }
    std::sort(result.witnesses.begin(), result.witnesses.end());
    return result;
}

}  // namespace knotlike
