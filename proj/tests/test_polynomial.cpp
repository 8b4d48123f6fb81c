#include <doctest.h>

#include <random>

#include "knotlike/polynomial.hpp"
#include "support.hpp"

using namespace knotlike;

namespace {

Poly t(int k) { return Poly::monomial(k); }

}  // namespace

TEST_CASE("polynomial arithmetic") {
    const Poly a = t(3) + t(1) + Poly::one();
    CHECK(a.to_string() == "t^3+t+1");
    CHECK(a.degree() == 3);
    CHECK(Poly().degree() == -1);
    CHECK(Poly().to_string() == "0");
    CHECK((a + a).is_zero());
    // (t+1)^2 = t^2+1 in characteristic two.
    CHECK((t(1) + Poly::one()) * (t(1) + Poly::one()) == t(2) + Poly::one());
    CHECK(t(70).degree() == 70);
    CHECK((t(40) * t(40)).coeff(80));

    const auto [q, r] = Poly::divmod(a, t(1) + Poly::one());
    CHECK(q * (t(1) + Poly::one()) + r == a);
    CHECK(r.degree() < 1);
    CHECK(Poly::gcd(t(3) + t(1), t(2) + Poly::one()) == t(2) + Poly::one());
    CHECK(t(1).divides(t(3)));
    CHECK_FALSE(t(3).divides(t(1)));
    CHECK(Poly::gcd(Poly(), Poly()).is_zero());
}

TEST_CASE("division on random polynomials") {
    std::mt19937 rng(1);
    std::uniform_int_distribution<std::uint64_t> bits(0, (1u << 12) - 1);
    for (int i = 0; i < 500; ++i) {
        const Poly a = Poly::from_bits(bits(rng));
        const Poly b = Poly::from_bits(bits(rng) | 1);
        const auto [q, r] = Poly::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        const Poly g = Poly::gcd(a, b);
        CHECK(g.divides(a));
        CHECK(g.divides(b));
    }
}

TEST_CASE("Smith form examples") {
    PolyMatrix one(1, 1);
    one.at(0, 0) = t(1);
    auto s = smith_normal_form(one);
    CHECK(s.diag == one);
    CHECK(s.rank() == 1);

    PolyMatrix m(2, 2);
    m.at(0, 0) = t(1);
    m.at(0, 1) = t(2);
    m.at(1, 1) = t(3);
    s = smith_normal_form(m);
    PolyMatrix expect(2, 2);
    expect.at(0, 0) = t(1);
    expect.at(1, 1) = t(3);
    CHECK(s.diag == expect);
    CHECK(s.left * s.diag * s.right == m);

    // Coprime entries collapse to 1 and their product.
    PolyMatrix c(2, 2);
    c.at(0, 0) = t(1);
    c.at(1, 1) = t(1) + Poly::one();
    s = smith_normal_form(c);
    CHECK(s.diag.at(0, 0).is_one());
    CHECK(s.diag.at(1, 1) == t(2) + t(1));

    const auto z = smith_normal_form(PolyMatrix(3, 2));
    CHECK(z.rank() == 0);
    CHECK(z.left.is_identity());
    CHECK(z.right.is_identity());

    const auto e = smith_normal_form(PolyMatrix(0, 4));
    CHECK(e.rank() == 0);
    CHECK(e.right.rows() == 4);
}

TEST_CASE("Smith form on random matrices") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 500; ++trial) {
        const auto m = testsupport::random_matrix(rng, dim(rng), dim(rng), 3);
        const auto s = smith_normal_form(m);
        REQUIRE(s.diag.rows() == m.rows());
        REQUIRE(s.diag.cols() == m.cols());
        CHECK(s.diag.is_diagonal());
        CHECK(s.left * s.diag * s.right == m);
        CHECK(s.left_inv * m * s.right_inv == s.diag);
        CHECK((s.left * s.left_inv).is_identity());
        CHECK((s.right * s.right_inv).is_identity());
        CHECK(testsupport::laplace_det(s.left).is_one());
        CHECK(testsupport::laplace_det(s.right).is_one());
        const auto f = s.invariant_factors();
        CHECK(f.size() == s.rank());
        for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i].divides(f[i + 1]));
        for (std::size_t i = f.size(); i < std::min(m.rows(), m.cols()); ++i) CHECK(s.diag.at(i, i).is_zero());
        CHECK(rank_fraction_free(m) == s.rank());
    }
}

TEST_CASE("invariant factors match determinantal divisors") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int trial = 0; trial < 150; ++trial) {
        const auto m = testsupport::random_matrix(rng, dim(rng), dim(rng), 2);
        const auto f = smith_normal_form(m).invariant_factors();
        Poly prod = Poly::one();
        for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
            const Poly d = testsupport::determinantal_divisor(m, k);
            if (k <= f.size()) {
                prod = prod * f[k - 1];
                // Both sides are monic over F2.
                CHECK(d == prod);
            } else {
                CHECK(d.is_zero());
            }
        }
    }
}

TEST_CASE("matrix operations") {
    PolyMatrix m(2, 3);
    m.at(0, 0) = Poly::one();
    m.at(1, 2) = t(2);
    auto r = m;
    r.add_row(0, 1, t(1));
    CHECK(r.at(0, 2) == t(3));
    r.add_row(0, 1, t(1));
    CHECK(r == m);
    r.add_col(2, 0, Poly::one());
    CHECK(r.at(0, 2).is_one());
    r.swap_rows(0, 1);
    CHECK(r.at(1, 0).is_one());
    r.swap_cols(0, 2);
    CHECK(r.at(1, 2).is_one());
    CHECK((PolyMatrix::identity(2) * m) == m);
    CHECK(m.to_string().find("t^2") != std::string::npos);
}
