// knotlike: decide, realize, verify, census and render standard complexes.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotlike/homology.hpp"
#include "knotlike/io.hpp"
#include "knotlike/realization.hpp"
#include "knotlike/tunnel.hpp"

using namespace knotlike;

namespace {

BasedComplex build(const ParsedSequence& parsed) {
    if (const auto* seq = std::get_if<SignSequence>(&parsed)) return build_standard(*seq);
    return build_extended(std::get<ExtendedSignSequence>(parsed));
}

std::string sequence_text(const ParsedSequence& parsed) {
    return std::visit([](const auto& s) { return s.to_string(); }, parsed);
}

void print_not_realizable(const BasedComplex& c, const NotRealizable& fail) {
    std::cout << "NOT_REALIZABLE: obstruction at " << describe(c, fail.obstructions.front().cause) << "\n";
    for (std::size_t i = 1; i < fail.obstructions.size(); ++i) {
        std::cout << "  also obstructed at " << describe(c, fail.obstructions[i].cause) << "\n";
    }
    for (const auto& o : fail.obstructions) {
        std::cout << "  reason: " << to_string(o.reason) << " (" << describe(c, o.cause) << ")\n";
    }
    for (const auto& e : fail.added) {
        std::cout << "  added before failing: " << describe(c, e.added) << " (stage " << e.stage << ")\n";
    }
}

int run_decide(const std::string& text, bool as_json) {
    const auto parsed = parse_sequence(text);
    const BasedComplex c = build(parsed);
    const auto outcome = partial_realize(c);

    if (as_json) {
        nlohmann::json out;
        out["sequence"] = sequence_text(parsed);
        out["decision"] = realizable(outcome) ? "REALIZABLE" : "NOT_REALIZABLE";
        out["arrows_added"] = arrows_added(outcome);
        nlohmann::json added = nlohmann::json::array();
        std::visit(
            [&](const auto& r) {
                for (const auto& e : r.added) {
                    added.push_back({{"arrow", describe(c, e.added)},
                                     {"cause", describe(c, e.cause)},
                                     {"case", to_string(e.tag)},
                                     {"stage", e.stage}});
                }
            },
            outcome);
        out["added"] = std::move(added);
        nlohmann::json obstructions = nlohmann::json::array();
        if (const auto* fail = std::get_if<NotRealizable>(&outcome)) {
            for (const auto& o : fail->obstructions) {
                obstructions.push_back({{"term", describe(c, o.cause)}, {"reason", to_string(o.reason)}});
            }
        }
        out["obstructions"] = std::move(obstructions);
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (const auto* ok = std::get_if<PartialRealization>(&outcome)) {
        std::cout << "REALIZABLE: " << ok->added.size() << " arrows added\n";
        for (const auto& e : ok->added) {
            std::cout << "  added " << describe(c, e.added) << " (stage " << e.stage << ", " << to_string(e.tag)
                      << ")\n";
        }
    } else {
        print_not_realizable(c, std::get<NotRealizable>(outcome));
    }
    return 0;
}

int run_realize(const std::string& text, const std::string& out_path, std::optional<int> n1, std::optional<int> n2,
                bool colors) {
    const SignSequence seq = parse_sign_sequence(text);
    std::optional<ExtensionParams> params;
    if (n1 || n2) {
        const auto d = ExtensionParams::defaults(seq);
        params = ExtensionParams{n1.value_or(d.n1), n2.value_or(d.n2)};
    }
    const auto outcome = realize(seq, params);
    if (const auto* fail = std::get_if<NotRealizable>(&outcome)) {
        print_not_realizable(build_standard(seq), *fail);
        return 0;
    }
    const auto& r = std::get<Realization>(outcome);
    write_document(out_path, r.glued, colors);
    std::cout << "REALIZED: " << r.glued.size() << " generators, " << r.glued.arrows().size()
              << " arrows (n1=" << r.params.n1 << ", n2=" << r.params.n2 << ", s=" << r.offset << ") -> "
              << out_path << "\n";
    return 0;
}

std::string describe_side(const HomologyReport& h) {
    std::ostringstream os;
    os << to_string(h.killed) << "-side free rank " << h.free_rank_total;
    if (h.free_generator_grading) os << " at grading " << *h.free_generator_grading;
    std::size_t torsion = 0;
    for (const auto& [k, t] : h.torsion_orders) torsion += t.size();
    os << ", " << torsion << " torsion summands";
    return os.str();
}

int run_verify(const std::string& path, const std::vector<std::string>& checks) {
    const BasedComplex c = read_document(path);
    bool all = true;
    auto report = [&](const std::string& name, bool pass, const std::string& detail) {
        all = all && pass;
        std::cout << name << ": " << (pass ? "PASS" : "FAIL");
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
    };
    for (const auto& check : checks) {
        if (check == "d2") {
            const auto sq = differential_square(c);
            std::size_t terms = 0;
            for (const auto& t : sq) terms += t.size();
            report("d2", terms == 0, std::to_string(terms) + " nonzero terms over " + c.ring().name());
        } else if (check == "degree") {
            const auto bad = check_degree(c);
            std::string detail = std::to_string(bad.size()) + " violations";
            if (!bad.empty()) detail += ", first " + describe(c, bad.front());
            report("degree", bad.empty(), detail);
        } else if (check == "homology") {
            const auto h = check_correct_homology(c);
            report("homology", h.pass(), describe_side(h.u_side) + "; " + describe_side(h.v_side));
        } else if (check == "symmetry") {
            report("symmetry", check_symmetry(c).has_value(), "");
        } else {
            throw Error(ErrorKind::InvalidInput, "unknown check '" + check + "'");
        }
    }
    std::cout << (all ? "ALL CHECKS PASS" : "SOME CHECKS FAILED") << "\n";
    return 0;
}

int run_census_command(int n, int max, const std::string& out_path, bool oracle) {
    const auto rows = run_census(n, max, oracle);
    if (out_path == "-") {
        write_census_csv(std::cout, rows);
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error(ErrorKind::Parse, "cannot write '" + out_path + "'");
        write_census_csv(out, rows);
    }
    std::size_t realizable_rows = 0, disagreements = 0, too_large = 0;
    for (const auto& r : rows) {
        realizable_rows += r.realizable;
        disagreements += r.oracle == OracleCheck::Disagrees;
        too_large += r.oracle == OracleCheck::TooLarge;
    }
    std::ostream& log = out_path == "-" ? std::cerr : std::cout;
    log << "census: " << realizable_rows << " of " << rows.size() << " REALIZABLE\n";
    if (oracle) {
        log << "oracle: " << disagreements << " disagreements, " << too_large << " above the candidate cap\n";
    }
    return 0;
}

int run_render(const std::string& path, const std::string& out_path) {
    const std::string svg = render_svg(read_document(path));
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorKind::Render, "cannot write '" + out_path + "'");
    out << svg;
    std::cout << "rendered " << path << " -> " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Realizability of standard complexes over F2[U,V]"};
    app.require_subcommand(1);

    std::string seq_text, out_path, file, checks_text = "d2,degree,homology,symmetry";
    bool as_json = false, colors = false, oracle = false;
    std::optional<int> n1, n2;
    int census_n = 1, census_max = 2;

    auto* decide = app.add_subcommand("decide", "Decide partial realizability over R2");
    decide->add_option("-s,--sequence", seq_text, "a1,...,a2n or a0 | a1,...,a2n | a2n+1")->required();
    decide->add_flag("--json", as_json, "Machine-readable output");

    auto* realize_cmd = app.add_subcommand("realize", "Build a full realization over F2[U,V]");
    realize_cmd->add_option("-s,--sequence", seq_text, "a1,...,a2n")->required();
    realize_cmd->add_option("-o,--out", out_path, "Output document")->required();
    realize_cmd->add_option("--n1", n1, "Length of the x0 extension");
    realize_cmd->add_option("--n2", n2, "Length of the x2n extension");
    realize_cmd->add_flag("--colors", colors, "Keep arrow colors in the document");

    auto* verify = app.add_subcommand("verify", "Run verifiers on a complex document");
    verify->add_option("file", file, "Complex document")->required();
    verify->add_option("--check", checks_text, "Comma-separated subset of d2,degree,homology,symmetry");

    auto* census = app.add_subcommand("census", "Decide every sequence up to a size");
    census->add_option("--n", census_n, "Maximal half-length n")->check(CLI::PositiveNumber);
    census->add_option("--max", census_max, "Maximal |a_i|")->check(CLI::PositiveNumber);
    census->add_option("--out", out_path, "CSV output, '-' for stdout")->required();
    census->add_flag("--oracle", oracle, "Cross-check each row with the exhaustive oracle");

    auto* render = app.add_subcommand("render", "Draw a complex document as SVG");
    render->add_option("file", file, "Complex document")->required();
    render->add_option("-o,--out", out_path, "SVG output")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*decide) return run_decide(seq_text, as_json);
        if (*realize_cmd) return run_realize(seq_text, out_path, n1, n2, colors);
        if (*verify) {
            std::vector<std::string> checks;
            std::stringstream ss(checks_text);
            for (std::string item; std::getline(ss, item, ',');) {
                if (!item.empty()) checks.push_back(item);
            }
            return run_verify(file, checks);
        }
        if (*census) return run_census_command(census_n, census_max, out_path, oracle);
        if (*render) return run_render(file, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
