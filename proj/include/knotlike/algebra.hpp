#pragma once

// Free bigraded based modules over R_i = F2[U,V]/(U^i V^i), i in N or infinity.
//
// A based complex is a list of generators with absolute bigradings plus a set
// of arrows (source, U^a V^b, target), each standing for a coefficient-1 term
// of the differential. F2 arithmetic is presence/absence: inserting an arrow
// that is already present removes it.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "knotlike/error.hpp"

namespace knotlike {

using GenId = std::uint32_t;

class RingLevel {
public:
    static RingLevel finite(int level);
    static RingLevel infinity() { return RingLevel(); }

    bool is_infinite() const { return !level_.has_value(); }
    // Only meaningful when finite.
    int level() const;

    friend bool operator==(const RingLevel&, const RingLevel&) = default;
    friend std::strong_ordering operator<=>(const RingLevel& a, const RingLevel& b);

    std::string name() const;  // "R1", "R2", ..., "Rinf"

private:
    RingLevel() = default;
    explicit RingLevel(int level) : level_(level) {}
    std::optional<int> level_;
};

inline const RingLevel R1 = RingLevel::finite(1);
inline const RingLevel R2 = RingLevel::finite(2);
inline const RingLevel Rinf = RingLevel::infinity();

struct Monomial {
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend Monomial operator*(Monomial a, Monomial b) { return {a.u + b.u, a.v + b.v}; }

    int min_exponent() const { return u < v ? u : v; }
    bool is_diagonal() const { return u > 0 && v > 0; }
    bool is_horizontal() const { return u > 0 && v == 0; }
    bool is_vertical() const { return v > 0 && u == 0; }

    // U^u V^v = 0 in R_i iff min(u, v) >= i.
    bool vanishes_in(const RingLevel& ring) const;

    std::string to_string() const;  // "U^2V^1", "1" for the unit
};

struct Bigrading {
    int u = 0;  // gr_U
    int v = 0;  // gr_V

    friend auto operator<=>(const Bigrading&, const Bigrading&) = default;
    friend Bigrading operator+(Bigrading a, Bigrading b) { return {a.u + b.u, a.v + b.v}; }
    friend Bigrading operator-(Bigrading a, Bigrading b) { return {a.u - b.u, a.v - b.v}; }

    // Twice the Alexander grading (gr_U - gr_V) / 2, kept integral.
    int alexander_twice() const { return u - v; }
};

// gr(source) + (-1,-1) = gr(U^a V^b target) = gr(target) - 2(a,b).
Bigrading target_grading(Bigrading source, Monomial m);
Bigrading source_grading(Bigrading target, Monomial m);

struct Arrow {
    GenId source = 0;
    Monomial mono;
    GenId target = 0;

    // Ordered by source first so outgoing arrows form a contiguous range.
    friend auto operator<=>(const Arrow& a, const Arrow& b) {
        if (auto c = a.source <=> b.source; c != 0) return c;
        if (auto c = a.target <=> b.target; c != 0) return c;
        return a.mono <=> b.mono;
    }
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Metadata carried by constructions for tests and rendering. Not part of the
// algebra: two complexes differing only in tags compare equal.
enum class ArrowTag { None, Added, Black, Red, Blue, Green };

const char* to_string(ArrowTag tag);
std::optional<ArrowTag> parse_arrow_tag(const std::string& text);

struct Generator {
    std::string name;
    Bigrading gr;

    friend bool operator==(const Generator&, const Generator&) = default;
};

// A single term U^a V^b y of a chain.
struct Term {
    GenId target = 0;
    Monomial mono;

    friend auto operator<=>(const Term&, const Term&) = default;
};

// Nonzero F2 terms only.
using TermList = std::set<Term>;

class BasedComplex {
public:
    explicit BasedComplex(RingLevel ring) : ring_(ring) {}

    const RingLevel& ring() const { return ring_; }
    const std::vector<Generator>& generators() const { return generators_; }
    const std::set<Arrow>& arrows() const { return arrows_; }
    std::size_t size() const { return generators_.size(); }

    GenId add_generator(std::string name, Bigrading gr);

    // Toggles the arrow. Monomials that vanish in the ring are ignored.
    // Returns true when the arrow is present afterwards.
    bool toggle_arrow(const Arrow& arrow, ArrowTag tag = ArrowTag::None);
    bool has_arrow(const Arrow& arrow) const { return arrows_.contains(arrow); }
    void remove_arrow(const Arrow& arrow);

    ArrowTag tag(const Arrow& arrow) const;
    void set_tag(const Arrow& arrow, ArrowTag tag);
    const std::map<Arrow, ArrowTag>& tags() const { return tags_; }
    void clear_tags() { tags_.clear(); }

    const Generator& generator(GenId id) const;
    std::optional<GenId> find(const std::string& name) const;
    GenId id_of(const std::string& name) const;  // throws Lookup
    void set_grading(GenId id, Bigrading gr);

    std::vector<Arrow> outgoing(GenId id) const;
    std::vector<Arrow> incoming(GenId id) const;

    // Generators, gradings and arrows equal; tags ignored.
    friend bool operator==(const BasedComplex& a, const BasedComplex& b) {
        return a.ring_ == b.ring_ && a.generators_ == b.generators_ && a.arrows_ == b.arrows_;
    }

private:
    friend BasedComplex reduce(const BasedComplex&, RingLevel);
    friend BasedComplex lift(const BasedComplex&, RingLevel);

    RingLevel ring_;
    std::vector<Generator> generators_;
    std::set<Arrow> arrows_;
    std::map<Arrow, ArrowTag> tags_;
};

BasedComplex reduce(const BasedComplex& complex, RingLevel target);
BasedComplex lift(const BasedComplex& complex, RingLevel target);

// <d x, m y>.
bool coefficient(const BasedComplex& complex, GenId x, Monomial m, GenId y);

// d^2 x for every generator x, reduced in the complex's ring.
std::vector<TermList> differential_square(const BasedComplex& complex);
bool is_chain_complex(const BasedComplex& complex);

// Arrows violating the degree (-1,-1) requirement. Empty means pass.
std::vector<Arrow> check_degree(const BasedComplex& complex);

// The unique exponents (a, b) with a, b >= 1 making x -> U^a V^b y homogeneous
// of degree (-1,-1), if they exist.
std::optional<Monomial> candidate_monomial(const BasedComplex& complex, GenId x, GenId y);

// Same equation but accepting any nonnegative exponents.
std::optional<Monomial> degree_monomial(Bigrading source, Bigrading target);

// U <-> V conjugate: exponents and grading components swapped.
BasedComplex conjugate(const BasedComplex& complex);

std::string describe(const BasedComplex& complex, const Arrow& arrow);

// Components of the undirected arrow graph, each sorted, ordered by least id.
std::vector<std::vector<GenId>> connected_components(const BasedComplex& complex);

// The generators `ids`, renumbered in that order, with the arrows among them.
BasedComplex induced_subcomplex(const BasedComplex& complex, const std::vector<GenId>& ids);

}  // namespace knotlike
