#pragma once

// Verifiers: the knot-like homology condition via Smith normal form over
// F2[V] (and F2[U]), and symmetry as a based isomorphism C -> conjugate(C).

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "knotlike/algebra.hpp"
#include "knotlike/polynomial.hpp"

namespace knotlike {

// Which variable is set to zero.
enum class Side { U, V };

const char* to_string(Side side);

// C/U splits by gr_U into a chain complex of free F2[V]-modules (C/V by gr_V).
// boundary[k] maps degree k to degree k-1: rows index generators[k-1],
// columns generators[k]. Every populated degree has an entry, possibly with
// zero rows.
struct QuotientChain {
    Side killed = Side::U;
    std::map<int, std::vector<GenId>> generators;
    std::map<int, PolyMatrix> boundary;

    PolyMatrix incoming(int k) const;  // boundary[k+1], or an empty-column matrix
    PolyMatrix outgoing(int k) const;  // boundary[k], or an empty-row matrix
};

QuotientChain quotient_complex(const BasedComplex& complex, Side kill);

struct HomologyReport {
    Side killed = Side::U;
    std::map<int, std::size_t> free_ranks;           // nonzero entries only
    std::map<int, std::vector<int>> torsion_orders;  // degrees of torsion factors
    std::size_t free_rank_total = 0;
    std::optional<int> free_generator_grading;       // set when the total is 1
    bool pass = false;
};

HomologyReport homology_report(const BasedComplex& complex, Side kill);

struct CorrectHomologyReport {
    HomologyReport u_side;  // H(C/U) over F2[V], graded by gr_U
    HomologyReport v_side;  // H(C/V) over F2[U], graded by gr_V

    bool pass() const { return u_side.pass && v_side.pass; }
};

CorrectHomologyReport check_correct_homology(const BasedComplex& complex);

// Whether g is a cycle of C/kill whose class generates the homology modulo
// torsion, which must be free of rank 1 in g's degree.
bool generates_free_part(const BasedComplex& complex, Side kill, GenId g);

// map[i] is the image of generator i of `a`.
using Bijection = std::vector<GenId>;

// A generator bijection carrying arrows onto arrows with equal monomials.
// Gradings must agree exactly, or up to one global shift if allowed.
std::optional<Bijection> find_based_isomorphism(const BasedComplex& a, const BasedComplex& b,
                                                bool allow_shift = false);

// Based isomorphism C -> conjugate(C), if any.
std::optional<Bijection> check_symmetry(const BasedComplex& complex);

}  // namespace knotlike
