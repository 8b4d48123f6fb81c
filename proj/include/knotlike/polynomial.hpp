#pragma once

// Univariate polynomials over F2 and matrices over F2[t], with a Smith normal
// form that keeps both transforms and their inverses.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace knotlike {

// Bit k of the coefficient vector is the coefficient of t^k. No trailing zero
// words, so the zero polynomial is the empty vector.
class Poly {
public:
    Poly() = default;
    static Poly one() { return monomial(0); }
    static Poly monomial(int degree);
    static Poly from_bits(std::uint64_t bits);

    int degree() const;  // -1 for zero
    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
    bool coeff(int k) const;

    Poly& operator+=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly&, const Poly&) = default;

    // Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    static Poly gcd(Poly a, Poly b);
    bool divides(const Poly& other) const;

    std::string to_string() const;  // "t^3+t+1", "0"

private:
    void trim();
    void flip(int k);
    std::vector<std::uint64_t> words_;
};

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}
    static PolyMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Poly& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
    const Poly& at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_identity() const;
    bool is_diagonal() const;

    // row r += c * row s
    void add_row(std::size_t r, std::size_t s, const Poly& c);
    // col r += c * col s
    void add_col(std::size_t r, std::size_t s, const Poly& c);
    void swap_rows(std::size_t r, std::size_t s);
    void swap_cols(std::size_t r, std::size_t s);

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Poly> cells_;
};

// m = left * diag * right and diag = left_inv * m * right_inv. Nonzero diagonal
// entries come first and form a divisibility chain.
struct SmithForm {
    PolyMatrix left;
    PolyMatrix diag;
    PolyMatrix right;
    PolyMatrix left_inv;
    PolyMatrix right_inv;

    std::size_t rank() const;
    std::vector<Poly> invariant_factors() const;  // nonzero diagonal entries
};

SmithForm smith_normal_form(const PolyMatrix& m);

// Rank over the fraction field F2(t) by fraction-free elimination; shares no
// code with the Smith form so it can cross-check it.
std::size_t rank_fraction_free(PolyMatrix m);

}  // namespace knotlike
