#pragma once

// Reference computations for the tests. These avoid the library's own
// shortcuts so that agreement means something.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <tuple>
#include <vector>

#include "knotlike/algebra.hpp"
#include "knotlike/polynomial.hpp"
#include "knotlike/standard.hpp"

namespace testsupport {

using namespace knotlike;

// d^2 by counting paths with integer multiplicities, then reducing mod 2.
inline std::map<std::tuple<GenId, int, int, GenId>, int> naive_d2(const BasedComplex& c) {
    std::map<std::tuple<GenId, int, int, GenId>, int> count;
    for (const auto& a : c.arrows()) {
        for (const auto& b : c.arrows()) {
            if (a.target != b.source) continue;
            const int u = a.mono.u + b.mono.u;
            const int v = a.mono.v + b.mono.v;
            if (!c.ring().is_infinite() && std::min(u, v) >= c.ring().level()) continue;
            count[{a.source, u, v, b.target}] += 1;
        }
    }
    std::map<std::tuple<GenId, int, int, GenId>, int> odd;
    for (const auto& [k, n] : count) {
        if (n % 2) odd[k] = 1;
    }
    return odd;
}

// Gradings of C(seq) by walking the zig-zag from x_0 with unknown offsets,
// then fixing gr_U(x_0) = 0 and gr_V(x_2n) = 0.
inline std::vector<Bigrading> walk_gradings(const std::vector<int>& a) {
    std::vector<Bigrading> g(a.size() + 1);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        const bool odd = i % 2 == 1;
        const int len = std::abs(a[i - 1]);
        const int du = odd ? 2 * len - 1 : -1;
        const int dv = odd ? -1 : 2 * len - 1;
        // Arrow x_i -> x_{i-1} raises the target by (du, dv); reversed if a_i < 0.
        if (a[i - 1] > 0) {
            g[i] = {g[i - 1].u - du, g[i - 1].v - dv};
        } else {
            g[i] = {g[i - 1].u + du, g[i - 1].v + dv};
        }
    }
    const int su = g.front().u;
    const int sv = g.back().v;
    for (auto& x : g) x = {x.u - su, x.v - sv};
    return g;
}

// Random F2[t] matrix with entries of degree <= max_degree.
inline PolyMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int max_degree,
                                double density = 0.6) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << (max_degree + 1)) - 1);
    PolyMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (coin(rng) < density) m.at(r, c) = Poly::from_bits(bits(rng));
        }
    }
    return m;
}

// Determinant by Laplace expansion along the first row.
inline Poly laplace_det(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Poly::one();
    if (n == 1) return m.at(0, 0);
    Poly det;
    for (std::size_t c = 0; c < n; ++c) {
        if (m.at(0, c).is_zero()) continue;
        PolyMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t k = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != c) minor.at(r - 1, k++) = m.at(r, j);
            }
        }
        det += m.at(0, c) * laplace_det(minor);
    }
    return det;
}

// gcd of all k x k minors (the k-th determinantal divisor).
inline Poly determinantal_divisor(const PolyMatrix& m, std::size_t k) {
    Poly g;
    std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
        std::fill(csel.begin(), csel.end(), false);
        std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
        do {
            PolyMatrix sub(k, k);
            std::size_t i = 0;
            for (std::size_t r = 0; r < m.rows(); ++r) {
                if (!rsel[r]) continue;
                std::size_t j = 0;
                for (std::size_t c = 0; c < m.cols(); ++c) {
                    if (csel[c]) sub.at(i, j++) = m.at(r, c);
                }
                ++i;
            }
            g = Poly::gcd(g, laplace_det(sub));
        } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    return g;
}

// Every generator permutation, checked directly.
inline bool brute_force_isomorphic(const BasedComplex& a, const BasedComplex& b) {
    if (a.size() != b.size() || a.arrows().size() != b.arrows().size()) return false;
    std::vector<GenId> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (GenId i = 0; i < a.size() && ok; ++i) ok = a.generator(i).gr == b.generator(perm[i]).gr;
        for (const auto& x : a.arrows()) {
            if (!ok) break;
            ok = b.has_arrow(Arrow{perm[x.source], x.mono, perm[x.target]});
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// All sign sequences of length 2n with entries in {-m..-1, 1..m}.
inline std::vector<std::vector<int>> all_sequences(int n, int m) {
    std::vector<int> values;
    for (int a = -m; a <= m; ++a) {
        if (a) values.push_back(a);
    }
    std::vector<std::vector<int>> out;
    std::vector<int> cur(2 * n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cur.size()) {
            out.push_back(cur);
            return;
        }
        for (int v : values) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

inline bool alternating(const std::vector<int>& a) {
    for (std::size_t i = 1; i < a.size(); ++i) {
        if ((a[i] > 0) == (a[i - 1] > 0)) return false;
    }
    return true;
}

}  // namespace testsupport
