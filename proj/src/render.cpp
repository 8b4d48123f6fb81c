#include <algorithm>
#include <deque>
#include <optional>
#include <sstream>

#include "knotlike/io.hpp"

namespace knotlike {

namespace {

LatticePoint step(LatticePoint p, const Monomial& m, int sign) {
    return {p.x + sign * m.u, p.y + sign * m.v};
}

}  // namespace

Layout lattice_layout(const BasedComplex& complex) {
    const auto n = complex.size();
    std::vector<std::vector<Arrow>> touching(n);
    for (const auto& a : complex.arrows()) {
        touching[a.source].push_back(a);
        touching[a.target].push_back(a);
    }

    Layout layout;
    layout.position.assign(n, {});
    std::vector<bool> placed(n, false);
    int right_edge = 0;
    bool first_component = true;
    for (GenId start = 0; start < n; ++start) {
        if (placed[start]) continue;
        std::vector<GenId> members{start};
        placed[start] = true;
        // Sinks are expanded last, so a cycle that does not close up (the
        // glued end) puts its extra copy on the sink itself.
        std::deque<GenId> queue{start}, sinks;
        while (!queue.empty() || !sinks.empty()) {
            auto& from = queue.empty() ? sinks : queue;
            const GenId g = from.front();
            from.pop_front();
            for (const auto& a : touching[g]) {
                const bool forward = a.source == g;
                const GenId other = forward ? a.target : a.source;
                if (placed[other]) continue;
                layout.position[other] = step(layout.position[g], a.mono, forward ? -1 : 1);
                placed[other] = true;
                members.push_back(other);
                (complex.outgoing(other).empty() ? sinks : queue).push_back(other);
            }
        }
        // Shift the component to the right of everything placed so far.
        int lo = layout.position[start].x, hi = lo;
        for (GenId g : members) {
            lo = std::min(lo, layout.position[g].x);
            hi = std::max(hi, layout.position[g].x);
        }
        const int dx = first_component ? -lo : right_edge + 2 - lo;
        for (GenId g : members) layout.position[g].x += dx;
        right_edge = hi + dx;
        first_component = false;
    }

    for (const auto& a : complex.arrows()) {
        const LatticePoint from = layout.position[a.source];
        const LatticePoint to = step(from, a.mono, -1);
        const LatticePoint at = layout.position[a.target];
        if (to != at) {
            if (to.x - at.x != to.y - at.y) {
                throw Error(ErrorKind::Render, "inconsistent coordinates along " + describe(complex, a));
            }
            const bool known = std::any_of(layout.copies.begin(), layout.copies.end(), [&](const Layout::Copy& c) {
                return c.generator == a.target && c.at == to;
            });
            if (!known) layout.copies.push_back({a.target, to});
        }
        layout.segments.push_back({a, from, to});
    }
    return layout;
}

namespace {

const char* stroke_color(ArrowTag tag) {
    switch (tag) {
        case ArrowTag::Red: return "#c0392b";
        case ArrowTag::Blue: return "#2471a3";
        case ArrowTag::Green: return "#1e8449";
        default: return "#000000";
    }
}

}  // namespace

std::string render_svg(const BasedComplex& complex) {
    const Layout layout = lattice_layout(complex);
    constexpr int kUnit = 48;
    constexpr int kMargin = 40;

    int min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    auto extend = [&](LatticePoint p) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    };
    if (!layout.position.empty()) {
        min_x = max_x = layout.position[0].x;
        min_y = max_y = layout.position[0].y;
    }
    for (const auto& p : layout.position) extend(p);
    for (const auto& c : layout.copies) extend(c.at);

    // SVG y grows downwards; the lattice's V axis points up.
    auto px = [&](LatticePoint p) { return kMargin + (p.x - min_x) * kUnit; };
    auto py = [&](LatticePoint p) { return kMargin + (max_y - p.y) * kUnit; };
    const int width = 2 * kMargin + (max_x - min_x) * kUnit;
    const int height = 2 * kMargin + (max_y - min_y) * kUnit;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "  <defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"16\" refY=\"5\" markerWidth=\"6\" "
          "markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
    for (const auto& s : layout.segments) {
        const ArrowTag tag = complex.tag(s.arrow);
        os << "  <line x1=\"" << px(s.from) << "\" y1=\"" << py(s.from) << "\" x2=\"" << px(s.to) << "\" y2=\""
           << py(s.to) << "\" stroke=\"" << stroke_color(tag) << "\" stroke-width=\"2\"";
        if (tag == ArrowTag::Added) os << " stroke-dasharray=\"6,4\"";
        os << " marker-end=\"url(#head)\"><title>" << describe(complex, s.arrow) << "</title></line>\n";
    }
    auto dot = [&](GenId g, LatticePoint p, bool copy) {
        os << "  <circle cx=\"" << px(p) << "\" cy=\"" << py(p) << "\" r=\"5\" fill=\"" << (copy ? "#ffffff" : "#000000")
           << "\" stroke=\"#000000\"><title>" << complex.generator(g).name << "</title></circle>\n";
        os << "  <text x=\"" << px(p) + 8 << "\" y=\"" << py(p) - 8 << "\" font-size=\"13\" font-family=\"serif\">"
           << complex.generator(g).name << "</text>\n";
    };
    for (GenId g = 0; g < complex.size(); ++g) dot(g, layout.position[g], false);
    for (const auto& c : layout.copies) dot(c.generator, c.at, true);
    os << "</svg>\n";
    return os.str();
}

}  // namespace knotlike
