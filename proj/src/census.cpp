#include <ostream>

#include "knotlike/io.hpp"
#include "knotlike/oracle.hpp"
#include "knotlike/tunnel.hpp"

namespace knotlike {

std::vector<SignSequence> census_sequences(int n_max, int a_max) {
    if (n_max < 1 || a_max < 1) throw Error(ErrorKind::InvalidInput, "census needs n_max >= 1 and a_max >= 1");
    std::vector<int> values;
    for (int a = -a_max; a <= a_max; ++a) {
        if (a != 0) values.push_back(a);
    }
    std::vector<SignSequence> out;
    for (int n = 1; n <= n_max; ++n) {
        // Odometer with the last entry fastest gives lexicographic order.
        std::vector<std::size_t> digit(2 * n, 0);
        for (;;) {
            std::vector<int> entries;
            for (auto d : digit) entries.push_back(values[d]);
            out.emplace_back(std::move(entries));
            std::size_t i = digit.size();
            while (i > 0 && ++digit[i - 1] == values.size()) digit[--i] = 0;
            if (i == 0) break;
        }
    }
    return out;
}

const char* to_string(OracleCheck c) {
    switch (c) {
        case OracleCheck::Agrees: return "agrees";
        case OracleCheck::Disagrees: return "disagrees";
        case OracleCheck::TooLarge: return "too-large";
    }
    return "?";
}

CensusRow census_row(const SignSequence& seq, bool with_oracle) {
    const BasedComplex c = build_standard(seq);
    const auto outcome = partial_realize(c);
    CensusRow row{seq, realizable(outcome), arrows_added(outcome), {}, std::nullopt};
    if (const auto* fail = std::get_if<NotRealizable>(&outcome)) {
        for (const auto& o : fail->obstructions) {
            if (!row.obstruction_reason.empty()) row.obstruction_reason += ", ";
            row.obstruction_reason += std::string(to_string(o.reason)) + " at " + describe(c, o.cause);
        }
    }
    if (with_oracle) {
        try {
            row.oracle = oracle_decide(c).realizable() == row.realizable ? OracleCheck::Agrees
                                                                         : OracleCheck::Disagrees;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::OracleTooLarge) throw;
            row.oracle = OracleCheck::TooLarge;
        }
    }
    return row;
}

std::vector<CensusRow> run_census(int n_max, int a_max, bool with_oracle) {
    std::vector<CensusRow> rows;
    for (const auto& seq : census_sequences(n_max, a_max)) rows.push_back(census_row(seq, with_oracle));
    return rows;
}

void write_census_csv(std::ostream& out, const std::vector<CensusRow>& rows) {
    bool oracle = false;
    for (const auto& r : rows) oracle = oracle || r.oracle.has_value();
    out << "sequence;decision;arrows_added;obstruction_reason" << (oracle ? ";oracle" : "") << "\n";
    for (const auto& r : rows) {
        out << r.sequence.to_string() << ";" << (r.realizable ? "REALIZABLE" : "NOT_REALIZABLE") << ";"
            << r.arrows_added << ";" << r.obstruction_reason;
        if (oracle) out << ";" << (r.oracle ? to_string(*r.oracle) : "");
        out << "\n";
    }
}

}  // namespace knotlike
