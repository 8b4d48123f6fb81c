#pragma once

// Text formats: sign sequences, the JSON complex document, census CSV, SVG.

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "knotlike/algebra.hpp"
#include "knotlike/standard.hpp"

namespace knotlike {

using ParsedSequence = std::variant<SignSequence, ExtendedSignSequence>;

// "a1,...,a2n" or "a0 | a1,...,a2n | a2n+1". Errors carry the 1-based column.
ParsedSequence parse_sequence(const std::string& text);
SignSequence parse_sign_sequence(const std::string& text);

// {"ring", "generators": [{"name", "gr": [u, v]}], "arrows": [{"from", "to",
// "u", "v", "color"?}]}. Colors are written only when asked for.
std::string serialize(const BasedComplex& complex, bool with_colors = false);
// Rejects unknown fields, unknown names, duplicate or vanishing arrows.
BasedComplex parse_document(const std::string& text);

BasedComplex read_document(const std::string& path);
void write_document(const std::string& path, const BasedComplex& complex, bool with_colors = false);

// Census over all sequences of length 2..2*n_max with entries in
// {-a_max..-1, 1..a_max}, ordered by length then lexicographically.
std::vector<SignSequence> census_sequences(int n_max, int a_max);

enum class OracleCheck { Agrees, Disagrees, TooLarge };
const char* to_string(OracleCheck c);

struct CensusRow {
    SignSequence sequence;
    bool realizable = false;
    std::size_t arrows_added = 0;
    std::string obstruction_reason;  // empty when realizable
    std::optional<OracleCheck> oracle;
};

CensusRow census_row(const SignSequence& seq, bool with_oracle = false);
std::vector<CensusRow> run_census(int n_max, int a_max, bool with_oracle = false);

// Header "sequence;decision;arrows_added;obstruction_reason", plus an
// "oracle" column when any row carries an oracle result.
void write_census_csv(std::ostream& out, const std::vector<CensusRow>& rows);

struct LatticePoint {
    int x = 0;
    int y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Planar placement: pos(target) = pos(source) - (u, v) along every arrow,
// components side by side. An arrow landing a multiple of (1,1) away from its
// target's position gets an extra copy U^k V^k of the target there; any other
// mismatch throws Render.
struct Layout {
    struct Copy {
        GenId generator = 0;
        LatticePoint at;
    };
    struct Segment {
        Arrow arrow;
        LatticePoint from;
        LatticePoint to;
    };

    std::vector<LatticePoint> position;
    std::vector<Copy> copies;
    std::vector<Segment> segments;
};

Layout lattice_layout(const BasedComplex& complex);
std::string render_svg(const BasedComplex& complex);

}  // namespace knotlike
