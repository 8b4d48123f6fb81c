#include "knotlike/realization.hpp"

#include <algorithm>
#include <cstdlib>

#include "knotlike/homology.hpp"

namespace knotlike {

namespace {

constexpr int kMaxRetries = 8;

std::string y_name(const std::string& x) {
    if (x.empty() || x[0] != 'x') {
        throw Error(ErrorKind::InvalidInput, "doubling expects x-named generators, got '" + x + "'");
    }
    return "y" + x.substr(1);
}

}  // namespace

ExtensionParams ExtensionParams::defaults(const SignSequence& seq) {
    return {seq.max_abs() + 1, seq.max_abs() + 1};
}

void ExtensionParams::validate(const SignSequence& seq) const {
    const int bound = seq.max_abs() + 1;
    if (n1 < bound || n2 < bound) {
        throw Error(ErrorKind::InvalidInput, "extension lengths must be at least " + std::to_string(bound) +
                                                 ", got n1=" + std::to_string(n1) + " n2=" + std::to_string(n2));
    }
}

int glue_offset(const SignSequence& seq) { return seq.half_sign_sum(); }

DecisionOutcome extend_and_realize(const SignSequence& seq, const ExtensionParams& params) {
    params.validate(seq);
    return partial_realize(build_extended(ExtendedSignSequence(params.n1, seq, -params.n2)));
}

BasedComplex double_complex(const BasedComplex& f2) {
    if (f2.ring() > R2) throw Error(ErrorKind::InvalidInput, "doubling expects a complex over R2");
    if (!is_chain_complex(lift(f2, R2))) {
        throw Error(ErrorKind::InvalidInput, "doubling input is not a chain complex over R2");
    }
    const auto n = static_cast<GenId>(f2.size());
    BasedComplex out(Rinf);
    for (const auto& g : f2.generators()) out.add_generator(g.name, g.gr);
    for (const auto& g : f2.generators()) out.add_generator(y_name(g.name), g.gr - Bigrading{1, 1});

    for (const auto& a : f2.arrows()) {
        out.toggle_arrow(a, ArrowTag::Black);
        out.toggle_arrow(Arrow{a.source + n, a.mono, a.target + n}, ArrowTag::Red);
    }
    for (GenId i = 0; i < n; ++i) out.toggle_arrow(Arrow{i + n, Monomial{1, 1}, i}, ArrowTag::Blue);

    const auto sq = differential_square(lift(f2, Rinf));
    for (GenId i = 0; i < n; ++i) {
        for (const auto& t : sq[i]) {
            if (t.mono.min_exponent() <= 1) {
                throw Error(ErrorKind::InvalidInput, "d^2 term " + t.mono.to_string() + " survives in R2");
            }
            out.toggle_arrow(Arrow{i, Monomial{t.mono.u - 1, t.mono.v - 1}, t.target + n}, ArrowTag::Green);
        }
    }
    return out;
}

BasedComplex glue(const BasedComplex& doubled, const SignSequence& seq) {
    const int n = seq.half_length();
    const auto family = static_cast<GenId>(2 * n + 3);
    if (doubled.size() != 2 * family) {
        throw Error(ErrorKind::InvalidInput, "glue expects a doubled extended complex of size " +
                                                 std::to_string(2 * family));
    }
    const GenId head = doubled.id_of(x_name(-1));
    const GenId tail = doubled.id_of(x_name(2 * n + 1));
    const GenId y_head = doubled.id_of(y_name(x_name(-1)));
    const GenId y_tail = doubled.id_of(y_name(x_name(2 * n + 1)));
    for (GenId end : {head, tail}) {
        if (!doubled.outgoing(end).empty()) {
            throw Error(ErrorKind::Placement, doubled.generator(end).name + " is not a sink");
        }
    }

    const Bigrading gh = doubled.generator(head).gr;
    const Bigrading gt = doubled.generator(tail).gr;
    if ((gh.u - gt.u) % 2 != 0 || (gh.v - gt.v) % 2 != 0) {
        throw Error(ErrorKind::Placement, "end generators have gradings of different parity");
    }
    const int du = (gh.u - gt.u) / 2;
    const int dv = (gh.v - gt.v) / 2;
    const int p = std::max(1, 1 - du);
    const int q = std::max(1, 1 - dv);
    const Monomial head_scale{p, q};
    const Monomial tail_scale{p + du, q + dv};

    // old generator = scale * new generator
    std::vector<GenId> renumber(doubled.size());
    std::vector<Monomial> scale(doubled.size());
    BasedComplex out(Rinf);
    auto keep = [&](GenId g) {
        const auto& gen = doubled.generator(g);
        renumber[g] = out.add_generator(gen.name, gen.gr);
    };
    for (GenId g = head + 1; g < tail; ++g) keep(g);
    for (GenId g = y_head; g <= y_tail; ++g) keep(g);
    const GenId z = out.add_generator("z", gh + Bigrading{2 * p, 2 * q});
    renumber[head] = renumber[tail] = z;
    scale[head] = head_scale;
    scale[tail] = tail_scale;
    scale[y_head] = Monomial{0, q + 1};
    scale[y_tail] = Monomial{tail_scale.u + 1, 0};
    out.set_grading(renumber[y_head], doubled.generator(y_head).gr + Bigrading{0, 2 * (q + 1)});
    out.set_grading(renumber[y_tail], doubled.generator(y_tail).gr + Bigrading{2 * (tail_scale.u + 1), 0});

    for (const auto& a : doubled.arrows()) {
        const Monomial up = a.mono * scale[a.target];
        const Monomial m{up.u - scale[a.source].u, up.v - scale[a.source].v};
        if (m.u < 0 || m.v < 0) {
            throw Error(ErrorKind::Placement, "arrow " + describe(doubled, a) + " gets a negative exponent");
        }
        out.toggle_arrow(Arrow{renumber[a.source], m, renumber[a.target]}, doubled.tag(a));
    }
    return out;
}

namespace {

void require(bool ok, const char* stage, const std::string& what) {
    if (!ok) throw Error(ErrorKind::Internal, std::string(stage) + " stage: " + what);
}

}  // namespace

RealizeOutcome realize(const SignSequence& seq, std::optional<ExtensionParams> params) {
    auto decision = partial_realize(build_standard(seq));
    if (auto* fail = std::get_if<NotRealizable>(&decision)) return std::move(*fail);

    ExtensionParams current = params.value_or(ExtensionParams::defaults(seq));
    current.validate(seq);
    const int s = glue_offset(seq);
    for (int retry = 0; retry <= kMaxRetries; ++retry) {
        const ExtendedSignSequence ext(current.n1, seq, -current.n2);
        auto extended = extend_and_realize(seq, current);
        auto* ok = std::get_if<PartialRealization>(&extended);
        if (ok == nullptr) {
            // A unit-length arrow next to an end can leave a diagonal into the
            // extension with exponent 1; one more step of length clears it.
            current.n1 += 1;
            current.n2 += 1;
            continue;
        }
        require(is_chain_complex(ok->complex), "extension", "d^2 != 0 over R2");
        require(reduce(ok->complex, R1) == build_extended(ext), "extension", "mod UV reduction changed");

        BasedComplex doubled = double_complex(ok->complex);
        require(is_chain_complex(doubled), "doubling", "d^2 != 0 over F2[U,V]");
        require(check_degree(doubled).empty(), "doubling", "degree check failed");

        BasedComplex glued(Rinf);
        try {
            glued = glue(doubled, seq);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Placement) throw;
            current.n1 += std::abs(s) + 1;
            current.n2 += std::abs(s) + 1;
            continue;
        }
        require(is_chain_complex(glued), "gluing", "d^2 != 0 over F2[U,V]");
        require(check_degree(glued).empty(), "gluing", "degree check failed");
        require(check_correct_homology(glued).pass(), "gluing", "homology is not correct");

        return Realization{current, s, retry, std::move(ok->complex), std::move(doubled), std::move(glued)};
    }
    throw Error(ErrorKind::Internal, "extension stage: no realizable extension after " +
                                         std::to_string(kMaxRetries) + " elongations");
}

}  // namespace knotlike
