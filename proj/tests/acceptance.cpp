// Acceptance run: one PASS/FAIL line per criterion, with wall time against
// the pinned limits. Exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "knotlike/homology.hpp"
#include "knotlike/io.hpp"
#include "knotlike/oracle.hpp"
#include "knotlike/polynomial.hpp"
#include "knotlike/realization.hpp"
#include "knotlike/tunnel.hpp"
#include "support.hpp"

using namespace knotlike;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

std::set<Arrow> added_set(const DecisionOutcome& o) {
    std::set<Arrow> out;
    std::visit([&](const auto& r) {
        for (const auto& e : r.added) out.insert(e.added);
    }, o);
    return out;
}

std::vector<std::vector<int>> sequences_up_to(int n_max, int a_max) {
    std::vector<std::vector<int>> out;
    for (int n = 1; n <= n_max; ++n) {
        for (auto& s : testsupport::all_sequences(n, a_max)) out.push_back(std::move(s));
    }
    return out;
}

// Inputs of criteria 3 and 4.
std::vector<std::vector<int>> oracle_census() {
    auto out = testsupport::all_sequences(2, 3);
    for (auto& s : testsupport::all_sequences(3, 2)) out.push_back(std::move(s));
    return out;
}

// Realizable sequences with n <= 2, |a_i| <= 3, with their realizations.
const std::vector<std::pair<SignSequence, Realization>>& pipeline_set() {
    static const auto set = [] {
        std::vector<std::pair<SignSequence, Realization>> out;
        for (const auto& v : sequences_up_to(2, 3)) {
            const SignSequence s(v);
            if (auto r = realize(s); auto* ok = std::get_if<Realization>(&r)) out.emplace_back(s, std::move(*ok));
        }
        return out;
    }();
    return set;
}

Verdict paper_verdicts() {
    Verdict v;
    int checked = 0;
    auto expect = [&](const std::vector<int>& seq, bool want) {
        ++checked;
        if (realizable(partial_realize(build_standard(SignSequence(seq)))) != want && v.pass) {
            v.pass = false;
            v.detail = "wrong verdict for " + SignSequence(seq).to_string() + "; ";
        }
    };
    for (const auto& s : std::vector<std::vector<int>>{{1, -1, 3, -2}, {2, 2}, {-1, 1, 2, -1, 1, 3}}) expect(s, true);
    for (const auto& s : std::vector<std::vector<int>>{
             {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1, -3, 1}, {-8, 2, 1, 2}, {-1, 1, 2, -1, 1, 2}}) {
        expect(s, false);
    }
    for (const auto& s : sequences_up_to(3, 4)) {
        bool all_long = true;
        for (int a : s) all_long = all_long && std::abs(a) >= 2;
        if (all_long || testsupport::alternating(s)) expect(s, true);
    }
    v.detail += std::to_string(checked) + " sequences";
    return v;
}

Verdict worked_traces() {
    Verdict v;
    const auto a = build_standard(SignSequence({-1, 1, 2, -1, 1, 2}));
    const auto oa = partial_realize(a);
    const std::set<Arrow> want_a{{a.id_of("x3"), {1, 1}, a.id_of("x0")}, {a.id_of("x6"), {1, 1}, a.id_of("x3")}};
    const auto* fail = std::get_if<NotRealizable>(&oa);
    const bool a_ok = fail && added_set(oa) == want_a && fail->obstructions.size() == 1 &&
                      fail->obstructions[0].cause == Cause{a.id_of("x6"), {3, 1}, a.id_of("x2")};
    const auto b = build_standard(SignSequence({-1, 1, 2, -1, 1, 3}));
    const auto ob = partial_realize(b);
    const std::set<Arrow> want_b{{b.id_of("x3"), {1, 1}, b.id_of("x0")}, {b.id_of("x6"), {1, 2}, b.id_of("x3")}};
    const bool b_ok = realizable(ob) && added_set(ob) == want_b;
    v.pass = a_ok && b_ok;
    v.detail = std::string("blocked trace ") + (a_ok ? "ok" : "wrong") + ", succeeding trace " + (b_ok ? "ok" : "wrong");
    if (fail && !fail->obstructions.empty()) v.detail += "; obstruction " + describe(a, fail->obstructions[0].cause);
    return v;
}

Verdict oracle_equivalence() {
    Verdict v;
    std::size_t disagree = 0, not_contained = 0, total = 0;
    std::string first;
    for (const auto& seq : oracle_census()) {
        const auto c = build_standard(SignSequence(seq));
        const auto d = partial_realize(c);
        const auto r = oracle_decide(c);
        ++total;
        if (realizable(d) != r.realizable()) {
            ++disagree;
            if (first.empty()) first = "disagreement at " + SignSequence(seq).to_string();
            continue;
        }
        if (!realizable(d)) continue;
        const auto common = r.common_mask();
        for (const auto& a : added_set(d)) {
            const int i = r.index_of(a);
            if (i < 0 || !(common >> i & 1u)) {
                ++not_contained;
                if (first.empty()) first = "forced arrow " + describe(c, a) + " missing from a witness of " +
                                           SignSequence(seq).to_string();
                break;
            }
        }
    }
    v.pass = disagree == 0 && not_contained == 0 && total == 1296 + 4096;
    v.detail = std::to_string(total) + " sequences, " + std::to_string(disagree) + " disagreements, " +
               std::to_string(not_contained) + " forced sets outside a witness";
    if (!first.empty()) v.detail += "; " + first;
    return v;
}

Verdict arrow_bound() {
    Verdict v;
    std::map<int, std::size_t> max_added;
    for (const auto& seq : oracle_census()) {
        const int n = static_cast<int>(seq.size() / 2);
        const auto k = arrows_added(partial_realize(build_standard(SignSequence(seq))));
        max_added[n] = std::max(max_added[n], k);
        if (k > static_cast<std::size_t>(n * n + n)) v.pass = false;
    }
    for (const auto& [n, k] : max_added) {
        v.detail += "n=" + std::to_string(n) + " max " + std::to_string(k) + " of " + std::to_string(n * n + n) + "; ";
    }
    v.detail.resize(v.detail.size() - 2);
    return v;
}

Verdict order_independence() {
    Verdict v;
    std::mt19937 rng(20241016);
    std::vector<std::vector<int>> pool;
    for (const auto& s : sequences_up_to(3, 3)) {
        const auto o = partial_realize(build_standard(SignSequence(s)));
        if (realizable(o) && arrows_added(o) >= 2) pool.push_back(s);
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::min<std::size_t>(pool.size(), 50));
    std::size_t schedules = 0, mismatches = 0;
    for (const auto& s : pool) {
        const auto c = build_standard(SignSequence(s));
        const auto wave = added_set(partial_realize(c));
        for (int k = 0; k < 100; ++k) {
            const auto o = partial_realize(c, [&](std::span<const Cause> p) {
                return std::uniform_int_distribution<std::size_t>(0, p.size() - 1)(rng);
            });
            ++schedules;
            if (!realizable(o) || added_set(o) != wave) ++mismatches;
        }
    }
    v.pass = pool.size() == 50 && mismatches == 0;
    v.detail = std::to_string(pool.size()) + " sequences with at least two forced arrows, " +
               std::to_string(schedules) + " schedules, " + std::to_string(mismatches) + " mismatches";
    return v;
}

Verdict realization_pipeline() {
    Verdict v;
    std::size_t symmetric = 0, failures = 0;
    std::string first;
    for (const auto& [seq, r] : pipeline_set()) {
        const auto& g = r.glued;
        const auto h = check_correct_homology(g);
        bool ok = g.ring() == Rinf && is_chain_complex(g) && check_degree(g).empty() && h.pass() &&
                  generates_free_part(g, Side::U, g.id_of("x0")) &&
                  generates_free_part(g, Side::V, g.id_of(x_name(2 * seq.half_length())));
        if (seq.self_conjugate()) {
            ++symmetric;
            ok = ok && check_symmetry(g).has_value();
        }
        if (!ok) {
            ++failures;
            if (first.empty()) first = "; first failure " + seq.to_string();
        }
    }
    v.pass = failures == 0 && !pipeline_set().empty();
    v.detail = std::to_string(pipeline_set().size()) + " realizations (" + std::to_string(symmetric) +
               " symmetric), " + std::to_string(failures) + " failures" + first;
    return v;
}

Verdict doubling_reduction() {
    Verdict v;
    std::size_t failures = 0;
    for (const auto& [seq, r] : pipeline_set()) {
        const auto d = reduce(r.doubled, R1);
        const auto comps = connected_components(d);
        const auto ext = build_extended(ExtendedSignSequence(r.params.n1, seq, -r.params.n2));
        bool ok = comps.size() == 2;
        for (std::size_t i = 0; ok && i < 2; ++i) {
            ok = find_based_isomorphism(induced_subcomplex(d, comps[i]), ext, true).has_value();
        }
        failures += !ok;
    }
    v.pass = failures == 0;
    v.detail = std::to_string(pipeline_set().size()) + " doubled complexes, " + std::to_string(failures) + " failures";
    return v;
}

Verdict census_counts() {
    Verdict v;
    for (auto [a, want, of] : {std::tuple{2, 10, 16}, std::tuple{1, 2, 4}}) {
        const auto rows = run_census(1, a, false);
        std::size_t census = 0, oracle = 0;
        for (const auto& row : rows) {
            census += row.realizable;
            oracle += oracle_decide(build_standard(row.sequence)).realizable();
        }
        const bool ok = census == oracle && census == static_cast<std::size_t>(want) &&
                        rows.size() == static_cast<std::size_t>(of);
        v.pass = v.pass && ok;
        v.detail += "a_max=" + std::to_string(a) + ": " + std::to_string(census) + " of " +
                    std::to_string(rows.size()) + " (oracle " + std::to_string(oracle) + "); ";
    }
    v.detail.resize(v.detail.size() - 2);
    return v;
}

Verdict smith_suite() {
    Verdict v;
    std::mt19937 rng(9);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    std::size_t bad = 0;
    for (int i = 0; i < 500; ++i) {
        const auto m = testsupport::random_matrix(rng, dim(rng), dim(rng), 3);
        const auto s = smith_normal_form(m);
        bool ok = s.diag.is_diagonal() && s.left * s.diag * s.right == m && (s.left * s.left_inv).is_identity() &&
                  (s.left_inv * s.left).is_identity() && (s.right * s.right_inv).is_identity() &&
                  (s.right_inv * s.right).is_identity();
        const auto f = s.invariant_factors();
        for (std::size_t k = 0; k + 1 < f.size(); ++k) ok = ok && f[k].divides(f[k + 1]);
        bad += !ok;
    }
    v.pass = bad == 0;
    v.detail = "500 matrices, " + std::to_string(bad) + " failures";
    return v;
}

Verdict serialization_rendering() {
    Verdict v;
    std::size_t docs = 0, round_trip_bad = 0, render_bad = 0;
    auto round_trip = [&](const BasedComplex& c) {
        ++docs;
        round_trip_bad += !(parse_document(serialize(c, true)) == c);
    };
    for (const auto& s : sequences_up_to(2, 3)) round_trip(build_standard(SignSequence(s)));
    for (const auto& [seq, r] : pipeline_set()) {
        for (const auto* c : {&r.extended, &r.doubled, &r.glued}) {
            round_trip(*c);
            try {
                render_svg(*c);
            } catch (const Error&) {
                ++render_bad;
            }
        }
    }
    const auto l = lattice_layout(build_standard(SignSequence({2, 2})));
    const auto o = l.position[0];
    auto at = [&](std::size_t i, int x, int y) { return l.position[i] == LatticePoint{o.x + x, o.y + y}; };
    const bool placed = at(1, 2, 0) && at(2, 2, 2);
    v.pass = round_trip_bad == 0 && render_bad == 0 && placed;
    v.detail = std::to_string(docs) + " documents, " + std::to_string(round_trip_bad) + " round-trip failures, " +
               std::to_string(render_bad) + " render failures, C(2,2) placement " + (placed ? "ok" : "wrong");
    return v;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;  // 0: no pinned limit
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "paper verdicts", 1.0, paper_verdicts},
        {2, "worked-example traces", 0, worked_traces},
        {3, "oracle equivalence", 60.0, oracle_equivalence},
        {4, "arrow bound", 0, arrow_bound},
        {5, "order independence", 30.0, order_independence},
        {6, "realization pipeline", 120.0, realization_pipeline},
        {7, "doubling reduction", 0, doubling_reduction},
        {8, "census counts", 0, census_counts},
        {9, "Smith normal form", 0, smith_suite},
        {10, "serialization and rendering", 0, serialization_rendering},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && secs >= c.limit_s) {
            v.pass = false;
            v.detail += "; over the time limit";
        }
        all = all && v.pass;
        char timing[64];
        if (c.limit_s > 0) {
            std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", secs, c.limit_s);
        } else {
            std::snprintf(timing, sizeof timing, "%.3f s", secs);
        }
        std::printf("criterion %2d %-28s %s  %s [%s]\n", c.id, c.name, v.pass ? "PASS" : "FAIL", v.detail.c_str(),
                    timing);
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
