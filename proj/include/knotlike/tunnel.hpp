#pragma once

// Decision procedure for partial realizability over R2.
//
// Starting from a standard (or extended standard) complex lifted to R2, every
// visible d^2 term U^a V^b x_j of d^2 x_i (min(a, b) = 1) forces a diagonal
// arrow whose composition with the unique horizontal (b = 1) or vertical
// (a = 1) arrow at x_i or x_j cancels the term. Forced arrows are added in
// waves until d^2 = 0 over R2, or some term admits no legal arrow.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "knotlike/algebra.hpp"

namespace knotlike {

// A nonzero term <d^2 x_i, U^a V^b x_j>.
struct Cause {
    GenId source = 0;
    Monomial mono;
    GenId target = 0;

    friend auto operator<=>(const Cause&, const Cause&) = default;
};

// Two-arrow path x_i -> z -> x_j contributing to a cause.
struct Path {
    Arrow first;
    Arrow second;
};

enum class ForcedCase { HorizontalFirst, HorizontalSecond, VerticalFirst, VerticalSecond };
enum class ObstructionReason { NoAdjacentArrow, WrongDirection, InsufficientLength };

const char* to_string(ForcedCase c);
const char* to_string(ObstructionReason r);

struct ForcedArrowEvent {
    Cause cause;
    ForcedCase tag = ForcedCase::HorizontalFirst;
    Arrow added;
    int stage = 0;
};

struct Obstruction {
    Cause cause;
    ObstructionReason reason = ObstructionReason::NoAdjacentArrow;

    friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

struct PartialRealization {
    BasedComplex complex;  // over R2, added arrows tagged Added
    std::vector<ForcedArrowEvent> added;
    int stages = 0;
};

struct NotRealizable {
    std::vector<Obstruction> obstructions;  // nonempty, sorted
    BasedComplex partial_progress;          // state at the start of the failing stage
    std::vector<ForcedArrowEvent> added;
};

using DecisionOutcome = std::variant<PartialRealization, NotRealizable>;

inline bool realizable(const DecisionOutcome& o) {
    return std::holds_alternative<PartialRealization>(o);
}
std::size_t arrows_added(const DecisionOutcome& o);

// Terms of d^2 that are visible in R2. Throws Internal if a term with a zero
// exponent shows up, since no two-arrow path of a standard complex with
// diagonal augmentations can produce one.
std::vector<Cause> pending_causes(const BasedComplex& complex);

std::vector<Path> contributing_paths(const BasedComplex& complex, const Cause& cause);

std::variant<ForcedArrowEvent, Obstruction> forced_response(const BasedComplex& complex,
                                                            const Cause& cause, const Path& path);

// Canonical processing order of a set of pending causes.
std::vector<Cause> canonicalize_schedule(std::vector<Cause> pending);

// Number of generators 2n+1 -> n^2 + n.
std::size_t arrow_budget(std::size_t generator_count);

// Wave schedule: each stage handles every visible cause, then recomputes d^2.
// The input must be over R1 or R2; it is lifted to R2.
DecisionOutcome partial_realize(const BasedComplex& input);

// Picks which pending cause to handle next; one arrow per step. Stops at the
// first obstruction.
using CausePicker = std::function<std::size_t(std::span<const Cause>)>;
DecisionOutcome partial_realize(const BasedComplex& input, const CausePicker& pick);

std::string describe(const BasedComplex& complex, const Cause& cause);

}  // namespace knotlike
