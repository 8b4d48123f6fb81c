#include "knotlike/standard.hpp"

#include <algorithm>
#include <cstdlib>

namespace knotlike {

SignSequence::SignSequence(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty() || entries_.size() % 2 != 0) {
        throw Error(ErrorKind::Construction,
                    "sign sequence must have positive even length, got " + std::to_string(entries_.size()));
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] == 0) {
            throw Error(ErrorKind::Construction, "zero entry at position " + std::to_string(i + 1));
        }
    }
}

int SignSequence::max_abs() const {
    int m = 0;
    for (int a : entries_) m = std::max(m, std::abs(a));
    return m;
}

int SignSequence::half_sign_sum() const {
    int sum = 0;
    for (int a : entries_) sum += a > 0 ? 1 : -1;
    return sum / 2;
}

bool SignSequence::alternating() const {
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if ((entries_[i] > 0) == (entries_[i - 1] > 0)) return false;
    }
    return true;
}

SignSequence SignSequence::conjugate() const {
    std::vector<int> out(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) out[i] = -entries_[entries_.size() - 1 - i];
    return SignSequence(std::move(out));
}

std::string SignSequence::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

ExtendedSignSequence::ExtendedSignSequence(int h, SignSequence b, int t)
    : head(h), body(std::move(b)), tail(t) {
    if (head == 0 || tail == 0) {
        throw Error(ErrorKind::Construction, "extended sequence endpoints must be nonzero");
    }
}

std::string ExtendedSignSequence::to_string() const {
    return std::to_string(head) + " | " + body.to_string() + " | " + std::to_string(tail);
}

std::string x_name(int i) { return "x" + std::to_string(i); }

namespace {

// Arrow for entry a_i between x_i and x_{i-1}; odd i is a U-arrow.
struct ChainLink {
    int index;  // i
    int entry;  // a_i
};

Monomial link_monomial(const ChainLink& link) {
    const int len = std::abs(link.entry);
    return link.index % 2 != 0 ? Monomial{len, 0} : Monomial{0, len};
}

// Gradings along the chain, relative to the first generator at (0, 0).
std::vector<Bigrading> propagate(std::span<const ChainLink> links) {
    std::vector<Bigrading> gr{{0, 0}};
    for (const auto& link : links) {
        const Monomial m = link_monomial(link);
        const Bigrading prev = gr.back();
        // a_i > 0 means x_i -> x_{i-1}, i.e. x_{i-1} is the arrow's target.
        gr.push_back(link.entry > 0 ? source_grading(prev, m) : target_grading(prev, m));
    }
    return gr;
}

void add_links(BasedComplex& c, std::span<const ChainLink> links) {
    for (const auto& link : links) {
        const GenId hi = c.id_of(x_name(link.index));
        const GenId lo = c.id_of(x_name(link.index - 1));
        const Monomial m = link_monomial(link);
        if (link.entry > 0) {
            c.toggle_arrow({hi, m, lo});
        } else {
            c.toggle_arrow({lo, m, hi});
        }
    }
}

std::vector<ChainLink> body_links(const SignSequence& seq) {
    std::vector<ChainLink> links;
    for (std::size_t i = 1; i <= seq.length(); ++i) links.push_back({static_cast<int>(i), seq[i]});
    return links;
}

std::vector<Bigrading> normalized_body_gradings(const SignSequence& seq) {
    const auto links = body_links(seq);
    auto gr = propagate(links);
    // gr_U(x_0) = 0 already; shift gr_V so that gr_V(x_2n) = 0.
    const int shift = -gr.back().v;
    for (auto& g : gr) g.v += shift;
    return gr;
}

}  // namespace

BasedComplex build_standard(const SignSequence& seq) {
    const auto gr = normalized_body_gradings(seq);
    BasedComplex c(R1);
    for (std::size_t i = 0; i < gr.size(); ++i) c.add_generator(x_name(static_cast<int>(i)), gr[i]);
    const auto links = body_links(seq);
    add_links(c, links);
    return c;
}

BasedComplex build_extended(const ExtendedSignSequence& ext) {
    const auto body = normalized_body_gradings(ext.body);
    const int top = static_cast<int>(ext.body.length());

    // x_{-1} hangs off x_0 through a V-arrow (even position 0).
    const ChainLink head{0, ext.head};
    const Monomial head_m = link_monomial(head);
    const Bigrading head_gr =
        ext.head > 0 ? target_grading(body.front(), head_m) : source_grading(body.front(), head_m);
    // x_{2n+1} hangs off x_2n through a U-arrow (odd position 2n+1).
    const ChainLink tail{top + 1, ext.tail};
    const Monomial tail_m = link_monomial(tail);
    const Bigrading tail_gr =
        ext.tail > 0 ? source_grading(body.back(), tail_m) : target_grading(body.back(), tail_m);

    BasedComplex c(R1);
    c.add_generator(x_name(-1), head_gr);
    for (std::size_t i = 0; i < body.size(); ++i) c.add_generator(x_name(static_cast<int>(i)), body[i]);
    c.add_generator(x_name(top + 1), tail_gr);

    std::vector<ChainLink> links{head};
    for (const auto& l : body_links(ext.body)) links.push_back(l);
    links.push_back(tail);
    add_links(c, links);
    return c;
}

}  // namespace knotlike
