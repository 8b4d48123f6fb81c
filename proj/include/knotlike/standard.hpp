#pragma once

// Standard complexes C(a_1, ..., a_2n) and extended standard complexes
// C(a_0 | a_1, ..., a_2n | a_2n+1) over R1.
//
// Generator x_i is named "x<i>" (x-1 for the extended head). Odd positions
// carry U-arrows of length |a_i| between x_i and x_{i-1}, even positions
// V-arrows; a_i > 0 points from x_i to x_{i-1}. Gradings are absolute,
// normalized by gr_U(x_0) = 0 and gr_V(x_2n) = 0.

#include <span>
#include <string>
#include <vector>

#include "knotlike/algebra.hpp"

namespace knotlike {

class SignSequence {
public:
    // Throws Construction on zero entries or odd/empty length.
    explicit SignSequence(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    std::size_t length() const { return entries_.size(); }
    int half_length() const { return static_cast<int>(entries_.size() / 2); }  // n
    int max_abs() const;
    // 1-based, matching the a_1, ..., a_2n indexing.
    int operator[](std::size_t i) const { return entries_.at(i - 1); }

    // (1/2) * sum of signs; always an integer.
    int half_sign_sum() const;
    bool alternating() const;
    // a_i = -a_{2n+1-i}: the sequence of the U <-> V conjugate complex.
    SignSequence conjugate() const;
    bool self_conjugate() const { return conjugate() == *this; }

    std::string to_string() const;  // "-1,1,2"

    friend auto operator<=>(const SignSequence&, const SignSequence&) = default;

private:
    std::vector<int> entries_;
};

struct ExtendedSignSequence {
    int head;  // a_0
    SignSequence body;
    int tail;  // a_{2n+1}

    ExtendedSignSequence(int head, SignSequence body, int tail);
    std::string to_string() const;  // "4 | 2,2 | -4"
};

BasedComplex build_standard(const SignSequence& seq);
BasedComplex build_extended(const ExtendedSignSequence& ext);

// Name of generator x_i.
std::string x_name(int i);

}  // namespace knotlike
