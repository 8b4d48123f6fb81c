#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "knotlike/io.hpp"

namespace knotlike {

using nlohmann::json;

namespace {

RingLevel parse_ring(const std::string& name) {
    if (name == "Rinf") return Rinf;
    if (name.size() >= 2 && name[0] == 'R') {
        try {
            std::size_t used = 0;
            const int level = std::stoi(name.substr(1), &used);
            if (used == name.size() - 1 && level >= 1) return RingLevel::finite(level);
        } catch (const std::exception&) {
        }
    }
    throw Error(ErrorKind::Parse, "unknown ring '" + name + "'");
}

void only_fields(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!obj.is_object()) throw Error(ErrorKind::Parse, where + " must be an object");
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) throw Error(ErrorKind::Parse, "unknown field '" + key + "' in " + where);
    }
}

template <typename T>
T field(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) throw Error(ErrorKind::Parse, "missing field '" + std::string(key) + "' in " + where);
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, "bad field '" + std::string(key) + "' in " + where + ": " + e.what());
    }
}

}  // namespace

std::string serialize(const BasedComplex& complex, bool with_colors) {
    json doc;
    doc["ring"] = complex.ring().name();
    json gens = json::array();
    for (const auto& g : complex.generators()) gens.push_back({{"name", g.name}, {"gr", {g.gr.u, g.gr.v}}});
    doc["generators"] = std::move(gens);
    json arrows = json::array();
    for (const auto& a : complex.arrows()) {
        json entry = {{"from", complex.generator(a.source).name},
                      {"to", complex.generator(a.target).name},
                      {"u", a.mono.u},
                      {"v", a.mono.v}};
        if (with_colors && complex.tag(a) != ArrowTag::None) entry["color"] = to_string(complex.tag(a));
        arrows.push_back(std::move(entry));
    }
    doc["arrows"] = std::move(arrows);
    return doc.dump(2) + "\n";
}

BasedComplex parse_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
    }
    only_fields(doc, {"ring", "generators", "arrows"}, "document");
    BasedComplex out(parse_ring(field<std::string>(doc, "ring", "document")));

    const auto gens = field<json>(doc, "generators", "document");
    if (!gens.is_array()) throw Error(ErrorKind::Parse, "'generators' must be an array");
    for (const auto& g : gens) {
        only_fields(g, {"name", "gr"}, "generator");
        const auto name = field<std::string>(g, "name", "generator");
        const auto gr = field<std::vector<int>>(g, "gr", "generator '" + name + "'");
        if (gr.size() != 2) throw Error(ErrorKind::Parse, "grading of '" + name + "' must have two entries");
        if (out.find(name)) throw Error(ErrorKind::Parse, "duplicate generator '" + name + "'");
        out.add_generator(name, {gr[0], gr[1]});
    }

    const auto arrows = field<json>(doc, "arrows", "document");
    if (!arrows.is_array()) throw Error(ErrorKind::Parse, "'arrows' must be an array");
    for (const auto& a : arrows) {
        only_fields(a, {"from", "to", "u", "v", "color"}, "arrow");
        const auto from = field<std::string>(a, "from", "arrow");
        const auto to = field<std::string>(a, "to", "arrow");
        const auto s = out.find(from);
        const auto t = out.find(to);
        if (!s || !t) throw Error(ErrorKind::Parse, "arrow " + from + " -> " + to + " names an unknown generator");
        const Monomial m{field<int>(a, "u", "arrow"), field<int>(a, "v", "arrow")};
        if (m.u < 0 || m.v < 0) throw Error(ErrorKind::Parse, "negative exponent on " + from + " -> " + to);
        const Arrow arrow{*s, m, *t};
        if (m.vanishes_in(out.ring())) {
            throw Error(ErrorKind::Parse, "arrow " + describe(out, arrow) + " vanishes in " + out.ring().name());
        }
        if (out.has_arrow(arrow)) throw Error(ErrorKind::Parse, "duplicate arrow " + describe(out, arrow));
        ArrowTag tag = ArrowTag::None;
        if (a.contains("color")) {
            const auto name = field<std::string>(a, "color", "arrow");
            const auto parsed = parse_arrow_tag(name);
            if (!parsed) throw Error(ErrorKind::Parse, "unknown color '" + name + "'");
            tag = *parsed;
        }
        out.toggle_arrow(arrow, tag);
    }
    return out;
}

BasedComplex read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

void write_document(const std::string& path, const BasedComplex& complex, bool with_colors) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
    out << serialize(complex, with_colors);
}

}  // namespace knotlike
