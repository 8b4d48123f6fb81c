#pragma once

// Full realization over F2[U,V] of a partially realizable standard complex:
// extend by long arrows at both ends, double the R2 lift into F_inf, then glue
// the two free ends x_{-1} and x_{2n+1} into a single generator z.

#include <optional>
#include <variant>

#include "knotlike/algebra.hpp"
#include "knotlike/standard.hpp"
#include "knotlike/tunnel.hpp"

namespace knotlike {

struct ExtensionParams {
    int n1 = 0;
    int n2 = 0;

    // Smallest lengths allowed: max |a_i| + 1 at both ends.
    static ExtensionParams defaults(const SignSequence& seq);
    // Throws InvalidInput when either length is below the bound.
    void validate(const SignSequence& seq) const;
};

// s = (1/2) * sum of sgn(a_i).
int glue_offset(const SignSequence& seq);

// The extended complex C(n1 | seq | -n2), realized over R2 by the tunnel
// filler. Forwards NotRealizable.
DecisionOutcome extend_and_realize(const SignSequence& seq, const ExtensionParams& params);

// F_inf: x copy (black), y copy (red) with gr(y_i) = gr(x_i) - (1,1), blue
// arrows y_i -> UV x_i and green arrows x_i -> U^{a-1} V^{b-1} y_j for each
// term U^a V^b x_j of d^2 x_i over F2[U,V]. Generators x* first, then y* in
// the same order. Throws InvalidInput if `f2` is not a chain complex over R2.
BasedComplex double_complex(const BasedComplex& f2);

// G_inf from a doubled extended complex. Substitutes x_{-1} = U^p V^q z and
// x_{2n+1} = U^p' V^q' z with the smallest p, q, p', q' >= 1 compatible with
// the gradings and rescales y_{-1} = V^{q+1} y'_{-1}, y_{2n+1} = U^{p'+1}
// y'_{2n+1} so the blue arrows at the ends keep integral exponents. Generators: x_0..x_2n,
// y_{-1}..y_{2n+1}, z. Throws Placement when an exponent would be negative or
// an end generator is not a sink.
BasedComplex glue(const BasedComplex& doubled, const SignSequence& seq);

struct Realization {
    ExtensionParams params;
    int offset = 0;           // s
    int retries = 0;          // rebuilds with longer extensions
    BasedComplex extended;    // R2 partial realization of the extension
    BasedComplex doubled;     // F_inf
    BasedComplex glued;       // G_inf
};

using RealizeOutcome = std::variant<Realization, NotRealizable>;

// Runs the decision on C(seq); on success builds and verifies each stage.
// The extensions start at `params` (default: the minimum) and are lengthened
// when the extended complex is not partially realizable or the gluing has no
// room. Stage failures throw Internal naming the stage.
RealizeOutcome realize(const SignSequence& seq, std::optional<ExtensionParams> params = std::nullopt);

}  // namespace knotlike
