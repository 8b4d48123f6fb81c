#include "knotlike/homology.hpp"

#include <algorithm>
#include <deque>

namespace knotlike {

const char* to_string(Side side) { return side == Side::U ? "U" : "V"; }

namespace {

int side_grading(const Bigrading& gr, Side kill) { return kill == Side::U ? gr.u : gr.v; }

// Exponent of the surviving variable, or nullopt if the arrow dies.
std::optional<int> surviving_power(const Monomial& m, Side kill) {
    if (kill == Side::U) return m.u == 0 ? std::optional<int>(m.v) : std::nullopt;
    return m.v == 0 ? std::optional<int>(m.u) : std::nullopt;
}

std::size_t count_at(const QuotientChain& q, int k) {
    auto it = q.generators.find(k);
    return it == q.generators.end() ? 0 : it->second.size();
}

}  // namespace

PolyMatrix QuotientChain::incoming(int k) const {
    if (auto it = boundary.find(k + 1); it != boundary.end()) return it->second;
    return PolyMatrix(count_at(*this, k), 0);
}

PolyMatrix QuotientChain::outgoing(int k) const {
    if (auto it = boundary.find(k); it != boundary.end()) return it->second;
    return PolyMatrix(0, count_at(*this, k));
}

QuotientChain quotient_complex(const BasedComplex& complex, Side kill) {
    QuotientChain q;
    q.killed = kill;
    std::vector<std::size_t> slot(complex.size());
    for (GenId g = 0; g < complex.size(); ++g) {
        auto& list = q.generators[side_grading(complex.generator(g).gr, kill)];
        slot[g] = list.size();
        list.push_back(g);
    }
    for (const auto& [k, gens] : q.generators) {
        q.boundary.emplace(k, PolyMatrix(count_at(q, k - 1), gens.size()));
    }
    for (const auto& a : complex.arrows()) {
        const auto power = surviving_power(a.mono, kill);
        if (!power) continue;
        const int k = side_grading(complex.generator(a.source).gr, kill);
        if (side_grading(complex.generator(a.target).gr, kill) != k - 1) {
            throw Error(ErrorKind::InvalidInput, "arrow " + describe(complex, a) + " has the wrong degree");
        }
        q.boundary.at(k).at(slot[a.target], slot[a.source]) += Poly::monomial(*power);
    }
    return q;
}

HomologyReport homology_report(const BasedComplex& complex, Side kill) {
    const auto q = quotient_complex(complex, kill);
    HomologyReport r;
    r.killed = kill;
    for (const auto& [k, gens] : q.generators) {
        const auto in = smith_normal_form(q.incoming(k));
        const auto out_rank = smith_normal_form(q.outgoing(k)).rank();
        const std::size_t free = gens.size() - in.rank() - out_rank;
        if (free > 0) r.free_ranks[k] = free;
        r.free_rank_total += free;
        for (const auto& d : in.invariant_factors()) {
            if (d.degree() >= 1) r.torsion_orders[k].push_back(d.degree());
        }
    }
    if (r.free_rank_total == 1) r.free_generator_grading = r.free_ranks.begin()->first;
    r.pass = r.free_rank_total == 1 && r.free_generator_grading == 0;
    return r;
}

CorrectHomologyReport check_correct_homology(const BasedComplex& complex) {
    return {homology_report(complex, Side::U), homology_report(complex, Side::V)};
}

bool generates_free_part(const BasedComplex& complex, Side kill, GenId g) {
    const auto q = quotient_complex(complex, kill);
    const int k = side_grading(complex.generator(g).gr, kill);
    const auto& gens = q.generators.at(k);
    const std::size_t col = static_cast<std::size_t>(std::find(gens.begin(), gens.end(), g) - gens.begin());

    // Cycles of degree k are right_inv's trailing columns; coordinates of a
    // vector in that basis are the trailing entries of right * vector.
    const auto out = smith_normal_form(q.outgoing(k));
    const std::size_t r = out.rank();
    for (std::size_t i = 0; i < r; ++i) {
        if (!out.right.at(i, col).is_zero()) return false;
    }
    const std::size_t m = gens.size() - r;
    if (m == 0) return false;

    const PolyMatrix image = out.right * q.incoming(k);
    PolyMatrix boundaries(m, image.cols());
    PolyMatrix w(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        w.at(i, 0) = out.right.at(r + i, col);
        for (std::size_t j = 0; j < image.cols(); ++j) boundaries.at(i, j) = image.at(r + i, j);
    }

    // Cycles modulo the saturated boundaries are the trailing coordinates
    // after left_inv of the boundary Smith form.
    const auto b = smith_normal_form(boundaries);
    if (m - b.rank() != 1) return false;
    const PolyMatrix z = b.left_inv * w;
    return z.at(m - 1, 0).is_one();
}

namespace {

struct Signature {
    std::vector<Monomial> out;
    std::vector<Monomial> in;

    friend bool operator==(const Signature&, const Signature&) = default;
};

std::vector<Signature> signatures(const BasedComplex& c) {
    std::vector<Signature> s(c.size());
    for (const auto& a : c.arrows()) {
        s[a.source].out.push_back(a.mono);
        s[a.target].in.push_back(a.mono);
    }
    for (auto& x : s) {
        std::sort(x.out.begin(), x.out.end());
        std::sort(x.in.begin(), x.in.end());
    }
    return s;
}

// Breadth-first order so each new generator is adjacent to assigned ones.
std::vector<GenId> search_order(const BasedComplex& c) {
    std::vector<std::vector<GenId>> adj(c.size());
    for (const auto& a : c.arrows()) {
        adj[a.source].push_back(a.target);
        adj[a.target].push_back(a.source);
    }
    std::vector<GenId> order;
    std::vector<bool> seen(c.size(), false);
    for (GenId start = 0; start < c.size(); ++start) {
        if (seen[start]) continue;
        std::deque<GenId> queue{start};
        seen[start] = true;
        while (!queue.empty()) {
            const GenId g = queue.front();
            queue.pop_front();
            order.push_back(g);
            for (GenId h : adj[g]) {
                if (!seen[h]) {
                    seen[h] = true;
                    queue.push_back(h);
                }
            }
        }
    }
    return order;
}

class IsomorphismSearch {
public:
    IsomorphismSearch(const BasedComplex& a, const BasedComplex& b)
        : a_(a), b_(b), sig_a_(signatures(a)), sig_b_(signatures(b)), order_(search_order(a)) {
        arrows_a_.resize(a.size());
        arrows_b_.resize(b.size());
        for (const auto& x : a.arrows()) {
            arrows_a_[x.source].push_back(x);
            arrows_a_[x.target].push_back(x);
        }
        for (const auto& x : b.arrows()) {
            arrows_b_[x.source].push_back(x);
            arrows_b_[x.target].push_back(x);
        }
    }

    std::optional<Bijection> run(Bigrading shift) {
        shift_ = shift;
        map_.assign(a_.size(), kUnset);
        inverse_.assign(b_.size(), kUnset);
        if (assign(0)) return map_;
        return std::nullopt;
    }

private:
    static constexpr GenId kUnset = static_cast<GenId>(-1);

    bool compatible(GenId g, GenId h) const {
        if (b_.generator(h).gr != a_.generator(g).gr + shift_) return false;
        if (!(sig_a_[g] == sig_b_[h])) return false;
        // Every arrow of a between g and assigned generators must map onto an
        // arrow of b, and conversely.
        std::size_t seen_a = 0;
        for (const auto& x : arrows_a_[g]) {
            const GenId other = x.source == g ? x.target : x.source;
            if (other != g && map_[other] == kUnset) continue;
            const GenId s = x.source == g ? h : map_[x.source];
            const GenId t = x.target == g ? h : map_[x.target];
            if (!b_.has_arrow(Arrow{s, x.mono, t})) return false;
            ++seen_a;
        }
        std::size_t seen_b = 0;
        for (const auto& y : arrows_b_[h]) {
            const GenId other = y.source == h ? y.target : y.source;
            if (other != h && inverse_[other] == kUnset) continue;
            ++seen_b;
        }
        return seen_a == seen_b;
    }

    bool assign(std::size_t idx) {
        if (idx == order_.size()) return true;
        const GenId g = order_[idx];
        for (GenId h = 0; h < b_.size(); ++h) {
            if (inverse_[h] != kUnset || !compatible(g, h)) continue;
            map_[g] = h;
            inverse_[h] = g;
            if (assign(idx + 1)) return true;
            map_[g] = kUnset;
            inverse_[h] = kUnset;
        }
        return false;
    }

    const BasedComplex& a_;
    const BasedComplex& b_;
    std::vector<Signature> sig_a_;
    std::vector<Signature> sig_b_;
    std::vector<GenId> order_;
    std::vector<std::vector<Arrow>> arrows_a_;
    std::vector<std::vector<Arrow>> arrows_b_;
    Bigrading shift_;
    Bijection map_;
    Bijection inverse_;
};

}  // namespace

std::optional<Bijection> find_based_isomorphism(const BasedComplex& a, const BasedComplex& b,
                                                bool allow_shift) {
    if (a.ring() != b.ring() || a.size() != b.size() || a.arrows().size() != b.arrows().size()) {
        return std::nullopt;
    }
    if (a.size() == 0) return Bijection{};
    IsomorphismSearch search(a, b);
    if (!allow_shift) return search.run({0, 0});

    const GenId first = search_order(a).front();
    std::vector<Bigrading> shifts;
    for (GenId h = 0; h < b.size(); ++h) {
        const Bigrading s = b.generator(h).gr - a.generator(first).gr;
        if (std::find(shifts.begin(), shifts.end(), s) == shifts.end()) shifts.push_back(s);
    }
    for (const auto& s : shifts) {
        if (auto found = search.run(s)) return found;
    }
    return std::nullopt;
}

std::optional<Bijection> check_symmetry(const BasedComplex& complex) {
    return find_based_isomorphism(complex, conjugate(complex));
}

}  // namespace knotlike
