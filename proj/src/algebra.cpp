#include "knotlike/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace knotlike {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidReduction: return "invalid-reduction";
        case ErrorKind::InvalidLift: return "invalid-lift";
        case ErrorKind::Lookup: return "lookup";
        case ErrorKind::Construction: return "construction";
        case ErrorKind::InvalidInput: return "invalid-input";
        case ErrorKind::Placement: return "placement";
        case ErrorKind::OracleTooLarge: return "oracle-too-large";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Render: return "render";
        case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

RingLevel RingLevel::finite(int level) {
    if (level < 1) {
        throw Error(ErrorKind::InvalidInput, "ring level must be >= 1, got " + std::to_string(level));
    }
    return RingLevel(level);
}

int RingLevel::level() const {
    if (!level_) throw Error(ErrorKind::Internal, "level() on the infinite ring");
    return *level_;
}

std::strong_ordering operator<=>(const RingLevel& a, const RingLevel& b) {
    if (a.is_infinite() || b.is_infinite()) {
        return a.is_infinite() <=> b.is_infinite();
    }
    return *a.level_ <=> *b.level_;
}

std::string RingLevel::name() const {
    return is_infinite() ? std::string("Rinf") : "R" + std::to_string(*level_);
}

bool Monomial::vanishes_in(const RingLevel& ring) const {
    return !ring.is_infinite() && min_exponent() >= ring.level();
}

std::string Monomial::to_string() const {
    if (u == 0 && v == 0) return "1";
    std::string out;
    if (u > 0) out += "U^" + std::to_string(u);
    if (v > 0) out += "V^" + std::to_string(v);
    return out;
}

Bigrading target_grading(Bigrading source, Monomial m) {
    return {source.u - 1 + 2 * m.u, source.v - 1 + 2 * m.v};
}

Bigrading source_grading(Bigrading target, Monomial m) {
    return {target.u + 1 - 2 * m.u, target.v + 1 - 2 * m.v};
}

const char* to_string(ArrowTag tag) {
    switch (tag) {
        case ArrowTag::None: return "none";
        case ArrowTag::Added: return "added";
        case ArrowTag::Black: return "black";
        case ArrowTag::Red: return "red";
        case ArrowTag::Blue: return "blue";
        case ArrowTag::Green: return "green";
    }
    return "none";
}

std::optional<ArrowTag> parse_arrow_tag(const std::string& text) {
    for (auto t : {ArrowTag::None, ArrowTag::Added, ArrowTag::Black, ArrowTag::Red, ArrowTag::Blue,
                   ArrowTag::Green}) {
        if (text == to_string(t)) return t;
    }
    return std::nullopt;
}

GenId BasedComplex::add_generator(std::string name, Bigrading gr) {
    if (find(name)) {
        throw Error(ErrorKind::Construction, "duplicate generator name '" + name + "'");
    }
    generators_.push_back({std::move(name), gr});
    return static_cast<GenId>(generators_.size() - 1);
}

bool BasedComplex::toggle_arrow(const Arrow& arrow, ArrowTag tag) {
    if (arrow.source >= generators_.size() || arrow.target >= generators_.size()) {
        throw Error(ErrorKind::Lookup, "arrow endpoint out of range");
    }
    if (arrow.mono.u < 0 || arrow.mono.v < 0) {
        throw Error(ErrorKind::InvalidInput, "negative exponent on arrow");
    }
    if (arrow.mono.vanishes_in(ring_)) return false;
    if (auto it = arrows_.find(arrow); it != arrows_.end()) {
        arrows_.erase(it);
        tags_.erase(arrow);
        return false;
    }
    arrows_.insert(arrow);
    if (tag != ArrowTag::None) tags_[arrow] = tag;
    return true;
}

void BasedComplex::remove_arrow(const Arrow& arrow) {
    arrows_.erase(arrow);
    tags_.erase(arrow);
}

ArrowTag BasedComplex::tag(const Arrow& arrow) const {
    auto it = tags_.find(arrow);
    return it == tags_.end() ? ArrowTag::None : it->second;
}

void BasedComplex::set_tag(const Arrow& arrow, ArrowTag tag) {
    if (!arrows_.contains(arrow)) return;
    if (tag == ArrowTag::None) {
        tags_.erase(arrow);
    } else {
        tags_[arrow] = tag;
    }
}

const Generator& BasedComplex::generator(GenId id) const {
    if (id >= generators_.size()) {
        throw Error(ErrorKind::Lookup, "unknown generator id " + std::to_string(id));
    }
    return generators_[id];
}

std::optional<GenId> BasedComplex::find(const std::string& name) const {
    for (GenId i = 0; i < generators_.size(); ++i) {
        if (generators_[i].name == name) return i;
    }
    return std::nullopt;
}

GenId BasedComplex::id_of(const std::string& name) const {
    if (auto id = find(name)) return *id;
    throw Error(ErrorKind::Lookup, "unknown generator '" + name + "'");
}

void BasedComplex::set_grading(GenId id, Bigrading gr) {
    if (id >= generators_.size()) {
        throw Error(ErrorKind::Lookup, "unknown generator id " + std::to_string(id));
    }
    generators_[id].gr = gr;
}

std::vector<Arrow> BasedComplex::outgoing(GenId id) const {
    std::vector<Arrow> out;
    auto it = arrows_.lower_bound(Arrow{id, Monomial{0, 0}, 0});
    for (; it != arrows_.end() && it->source == id; ++it) out.push_back(*it);
    return out;
}

std::vector<Arrow> BasedComplex::incoming(GenId id) const {
    std::vector<Arrow> in;
    for (const auto& a : arrows_) {
        if (a.target == id) in.push_back(a);
    }
    return in;
}

BasedComplex reduce(const BasedComplex& complex, RingLevel target) {
    if (target > complex.ring()) {
        throw Error(ErrorKind::InvalidReduction,
                    "cannot reduce " + complex.ring().name() + " to " + target.name());
    }
    BasedComplex out = complex;
    out.ring_ = target;
    for (auto it = out.arrows_.begin(); it != out.arrows_.end();) {
        if (it->mono.vanishes_in(target)) {
            out.tags_.erase(*it);
            it = out.arrows_.erase(it);
        } else {
            ++it;
        }
    }
    return out;
}

BasedComplex lift(const BasedComplex& complex, RingLevel target) {
    if (target < complex.ring()) {
        throw Error(ErrorKind::InvalidLift,
                    "cannot lift " + complex.ring().name() + " to " + target.name());
    }
    BasedComplex out = complex;
    out.ring_ = target;
    return out;
}

bool coefficient(const BasedComplex& complex, GenId x, Monomial m, GenId y) {
    complex.generator(x);
    complex.generator(y);
    if (m.vanishes_in(complex.ring())) return false;
    return complex.has_arrow(Arrow{x, m, y});
}

std::vector<TermList> differential_square(const BasedComplex& complex) {
    const auto n = complex.size();
    std::vector<std::vector<Arrow>> out(n);
    for (const auto& a : complex.arrows()) out[a.source].push_back(a);

    std::vector<TermList> result(n);
    for (GenId x = 0; x < n; ++x) {
        auto& terms = result[x];
        for (const auto& first : out[x]) {
            for (const auto& second : out[first.target]) {
                const Monomial m = first.mono * second.mono;
                if (m.vanishes_in(complex.ring())) continue;
                const Term t{second.target, m};
                if (auto it = terms.find(t); it != terms.end()) {
                    terms.erase(it);
                } else {
                    terms.insert(t);
                }
            }
        }
    }
    return result;
}

bool is_chain_complex(const BasedComplex& complex) {
    const auto sq = differential_square(complex);
    return std::all_of(sq.begin(), sq.end(), [](const TermList& t) { return t.empty(); });
}

std::vector<Arrow> check_degree(const BasedComplex& complex) {
    std::vector<Arrow> bad;
    for (const auto& a : complex.arrows()) {
        const auto expected = target_grading(complex.generator(a.source).gr, a.mono);
        if (expected != complex.generator(a.target).gr) bad.push_back(a);
    }
    return bad;
}

std::optional<Monomial> degree_monomial(Bigrading source, Bigrading target) {
    const int du = target.u - source.u + 1;
    const int dv = target.v - source.v + 1;
    if (du % 2 != 0 || dv % 2 != 0) return std::nullopt;
    const Monomial m{du / 2, dv / 2};
    if (m.u < 0 || m.v < 0) return std::nullopt;
    return m;
}

std::optional<Monomial> candidate_monomial(const BasedComplex& complex, GenId x, GenId y) {
    if (x == y) {
        throw Error(ErrorKind::InvalidInput, "candidate_monomial needs two distinct generators");
    }
    auto m = degree_monomial(complex.generator(x).gr, complex.generator(y).gr);
    if (!m || m->u <= 0 || m->v <= 0) return std::nullopt;
    return m;
}

BasedComplex conjugate(const BasedComplex& complex) {
    BasedComplex out(complex.ring());
    for (const auto& g : complex.generators()) out.add_generator(g.name, {g.gr.v, g.gr.u});
    for (const auto& a : complex.arrows()) {
        const Arrow b{a.source, {a.mono.v, a.mono.u}, a.target};
        out.toggle_arrow(b, complex.tag(a));
    }
    return out;
}

std::string describe(const BasedComplex& complex, const Arrow& arrow) {
    std::ostringstream os;
    os << complex.generator(arrow.source).name << " -> " << arrow.mono.to_string() << " "
       << complex.generator(arrow.target).name;
    return os.str();
}

std::vector<std::vector<GenId>> connected_components(const BasedComplex& complex) {
    std::vector<GenId> parent(complex.size());
    for (GenId i = 0; i < parent.size(); ++i) parent[i] = i;
    auto root = [&](GenId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& a : complex.arrows()) {
        const GenId p = root(a.source), q = root(a.target);
        if (p != q) parent[std::max(p, q)] = std::min(p, q);
    }
    std::map<GenId, std::vector<GenId>> groups;
    for (GenId i = 0; i < parent.size(); ++i) groups[root(i)].push_back(i);
    std::vector<std::vector<GenId>> out;
    for (auto& [r, ids] : groups) out.push_back(std::move(ids));
    return out;
}

BasedComplex induced_subcomplex(const BasedComplex& complex, const std::vector<GenId>& ids) {
    BasedComplex out(complex.ring());
    std::map<GenId, GenId> renumber;
    for (GenId id : ids) {
        const auto& g = complex.generator(id);
        renumber[id] = out.add_generator(g.name, g.gr);
    }
    for (const auto& a : complex.arrows()) {
        auto s = renumber.find(a.source);
        auto t = renumber.find(a.target);
        if (s == renumber.end() || t == renumber.end()) continue;
        out.toggle_arrow(Arrow{s->second, a.mono, t->second}, complex.tag(a));
    }
    return out;
}

}  // namespace knotlike
