#include "knotlike/tunnel.hpp"

#include <algorithm>
#include <set>

namespace knotlike {

const char* to_string(ForcedCase c) {
    switch (c) {
        case ForcedCase::HorizontalFirst: return "horizontal-first";
        case ForcedCase::HorizontalSecond: return "horizontal-second";
        case ForcedCase::VerticalFirst: return "vertical-first";
        case ForcedCase::VerticalSecond: return "vertical-second";
    }
    return "?";
}

const char* to_string(ObstructionReason r) {
    switch (r) {
        case ObstructionReason::NoAdjacentArrow: return "no-adjacent-arrow";
        case ObstructionReason::WrongDirection: return "wrong-direction";
        case ObstructionReason::InsufficientLength: return "insufficient-length";
    }
    return "?";
}

std::size_t arrows_added(const DecisionOutcome& o) {
    return std::visit([](const auto& r) { return r.added.size(); }, o);
}

std::string describe(const BasedComplex& complex, const Cause& cause) {
    return "d\xC2\xB2" + complex.generator(cause.source).name + " term " + cause.mono.to_string() + " " +
           complex.generator(cause.target).name;
}

std::vector<Cause> pending_causes(const BasedComplex& complex) {
    const auto sq = differential_square(complex);
    std::vector<Cause> causes;
    for (GenId x = 0; x < sq.size(); ++x) {
        for (const auto& t : sq[x]) {
            if (t.mono.min_exponent() == 0) {
                throw Error(ErrorKind::Internal, "d^2 term without a unit exponent: " +
                                                     describe(complex, Cause{x, t.mono, t.target}));
            }
            if (t.mono.min_exponent() == 1) causes.push_back({x, t.mono, t.target});
        }
    }
    return causes;
}

std::vector<Path> contributing_paths(const BasedComplex& complex, const Cause& cause) {
    std::vector<Path> paths;
    for (const auto& first : complex.outgoing(cause.source)) {
        for (const auto& second : complex.outgoing(first.target)) {
            if (second.target == cause.target && first.mono * second.mono == cause.mono) {
                paths.push_back({first, second});
            }
        }
    }
    return paths;
}

namespace {

enum class Axis { Horizontal, Vertical };

bool on_axis(const Monomial& m, Axis axis) {
    return axis == Axis::Horizontal ? m.is_horizontal() : m.is_vertical();
}

int length_on(const Monomial& m, Axis axis) { return axis == Axis::Horizontal ? m.u : m.v; }

// The unique non-diagonal arrow along `axis` touching `g`.
std::optional<Arrow> axis_arrow(const BasedComplex& c, GenId g, Axis axis) {
    std::optional<Arrow> found;
    auto consider = [&](const Arrow& a) {
        if (!on_axis(a.mono, axis)) return;
        if (found) {
            throw Error(ErrorKind::InvalidInput,
                        "generator " + c.generator(g).name + " touches two arrows along one axis");
        }
        found = a;
    };
    for (const auto& a : c.outgoing(g)) consider(a);
    for (const auto& a : c.incoming(g)) consider(a);
    return found;
}

// Unit diagonal of length `along` on the axis direction.
Monomial unit_diagonal(Axis axis, int along) {
    return axis == Axis::Horizontal ? Monomial{along, 1} : Monomial{1, along};
}

}  // namespace

std::variant<ForcedArrowEvent, Obstruction> forced_response(const BasedComplex& complex,
                                                            const Cause& cause, const Path& path) {
    const Monomial m = cause.mono;
    if (m.min_exponent() != 1) {
        throw Error(ErrorKind::InvalidInput, "cause must have a unit exponent: " + describe(complex, cause));
    }
    // b = 1 needs a horizontal arrow in the path; a = 1 a vertical one.
    Axis axis;
    bool first_on_axis;
    if (m.v == 1 && (path.first.mono.is_horizontal() || path.second.mono.is_horizontal())) {
        axis = Axis::Horizontal;
        first_on_axis = path.first.mono.is_horizontal();
    } else if (m.u == 1 && (path.first.mono.is_vertical() || path.second.mono.is_vertical())) {
        axis = Axis::Vertical;
        first_on_axis = path.first.mono.is_vertical();
    } else {
        throw Error(ErrorKind::Internal, "no non-diagonal arrow on the path of " + describe(complex, cause));
    }

    const int total = length_on(m, axis);
    ForcedCase tag;
    if (axis == Axis::Horizontal) {
        tag = first_on_axis ? ForcedCase::HorizontalFirst : ForcedCase::HorizontalSecond;
    } else {
        tag = first_on_axis ? ForcedCase::VerticalFirst : ForcedCase::VerticalSecond;
    }

    // First arrow on the axis: the axis arrow at x_j must point into x_j.
    // Second arrow on the axis: the axis arrow at x_i must point out of x_i.
    const GenId pivot = first_on_axis ? cause.target : cause.source;
    const auto adjacent = axis_arrow(complex, pivot, axis);
    if (!adjacent) return Obstruction{cause, ObstructionReason::NoAdjacentArrow};
    const bool direction_ok = first_on_axis ? adjacent->target == pivot : adjacent->source == pivot;
    if (!direction_ok) return Obstruction{cause, ObstructionReason::WrongDirection};
    const int len = length_on(adjacent->mono, axis);
    if (len >= total) return Obstruction{cause, ObstructionReason::InsufficientLength};

    const Monomial mono = unit_diagonal(axis, total - len);
    Arrow added = first_on_axis ? Arrow{cause.source, mono, adjacent->source}
                                : Arrow{adjacent->target, mono, cause.target};
    const auto expected = candidate_monomial(complex, added.source, added.target);
    if (!expected || *expected != mono) {
        throw Error(ErrorKind::Internal, "forced arrow " + describe(complex, added) + " breaks the grading");
    }
    return ForcedArrowEvent{cause, tag, added, 0};
}

std::vector<Cause> canonicalize_schedule(std::vector<Cause> pending) {
    std::sort(pending.begin(), pending.end());
    pending.erase(std::unique(pending.begin(), pending.end()), pending.end());
    return pending;
}

std::size_t arrow_budget(std::size_t generator_count) {
    const std::size_t n = generator_count / 2;
    return n * n + n;
}

namespace {

BasedComplex prepare(const BasedComplex& input) {
    if (input.ring() > R2) {
        throw Error(ErrorKind::InvalidInput, "partial_realize expects a complex over R1 or R2");
    }
    return lift(input, R2);
}

// Responses of every path contributing to one cause.
struct Response {
    std::vector<ForcedArrowEvent> events;
    std::vector<Obstruction> obstructions;
};

Response respond(const BasedComplex& c, const Cause& cause) {
    Response r;
    const auto paths = contributing_paths(c, cause);
    if (paths.empty()) throw Error(ErrorKind::Internal, "no path for " + describe(c, cause));
    for (const auto& path : paths) {
        auto res = forced_response(c, cause, path);
        if (auto* ev = std::get_if<ForcedArrowEvent>(&res)) {
            if (c.has_arrow(ev->added)) {
                throw Error(ErrorKind::Internal,
                            "forced arrow " + describe(c, ev->added) + " is already present");
            }
            r.events.push_back(*ev);
        } else {
            r.obstructions.push_back(std::get<Obstruction>(res));
        }
    }
    return r;
}

void check_budget(const BasedComplex& c, std::size_t added) {
    if (added > arrow_budget(c.size())) {
        throw Error(ErrorKind::Internal, "added " + std::to_string(added) + " arrows, above the bound " +
                                             std::to_string(arrow_budget(c.size())));
    }
}

bool obstruction_less(const Obstruction& a, const Obstruction& b) {
    if (a.cause != b.cause) return a.cause < b.cause;
    return a.reason < b.reason;
}

}  // namespace

DecisionOutcome partial_realize(const BasedComplex& input) {
    BasedComplex c = prepare(input);
    std::vector<ForcedArrowEvent> added;
    for (int stage = 1;; ++stage) {
        const auto causes = canonicalize_schedule(pending_causes(c));
        if (causes.empty()) return PartialRealization{std::move(c), std::move(added), stage - 1};

        std::vector<Obstruction> obstructions;
        std::set<Arrow> wave;
        std::vector<ForcedArrowEvent> events;
        for (const auto& cause : causes) {
            auto r = respond(c, cause);
            obstructions.insert(obstructions.end(), r.obstructions.begin(), r.obstructions.end());
            for (auto& ev : r.events) {
                // Two causes may force the same unit diagonal; add it once.
                if (wave.insert(ev.added).second) {
                    ev.stage = stage;
                    events.push_back(ev);
                }
            }
        }
        if (!obstructions.empty()) {
            std::sort(obstructions.begin(), obstructions.end(), obstruction_less);
            obstructions.erase(std::unique(obstructions.begin(), obstructions.end()), obstructions.end());
            return NotRealizable{std::move(obstructions), std::move(c), std::move(added)};
        }
        for (const auto& ev : events) {
            c.toggle_arrow(ev.added, ArrowTag::Added);
            added.push_back(ev);
        }
        check_budget(c, added.size());
    }
}

DecisionOutcome partial_realize(const BasedComplex& input, const CausePicker& pick) {
    BasedComplex c = prepare(input);
    std::vector<ForcedArrowEvent> added;
    for (int step = 1;; ++step) {
        const auto causes = canonicalize_schedule(pending_causes(c));
        if (causes.empty()) return PartialRealization{std::move(c), std::move(added), step - 1};
        const std::size_t k = pick(causes);
        if (k >= causes.size()) throw Error(ErrorKind::InvalidInput, "cause picker out of range");

        auto r = respond(c, causes[k]);
        if (!r.obstructions.empty()) {
            return NotRealizable{std::move(r.obstructions), std::move(c), std::move(added)};
        }
        for (auto& ev : r.events) {
            ev.stage = step;
            c.toggle_arrow(ev.added, ArrowTag::Added);
            added.push_back(ev);
        }
        check_budget(c, added.size());
    }
}

}  // namespace knotlike
