#include "planar/report.hpp"

#include <algorithm>

#include "planar/series.hpp"

namespace planar {

void record_comparison(Report& report, const std::string& item_prefix,
                       const Series& lhs, const Series& rhs) {
    auto diff = first_difference(lhs, rhs);
    if (!diff) return;
    Monomial m = *diff;
    int p = std::min(lhs.precision(), rhs.precision());
    report.passed = false;
    report.entries.push_back({item_prefix + m.encoding(),
                              truncate(lhs, p).coefficient(m),
                              truncate(rhs, p).coefficient(m), false});
}

std::string Report::to_text() const {
    std::string out = passed ? "PASS: " : "FAIL: ";
    out += title;
    out += '\n';
    if (!precondition_failure.empty()) {
        out += "  precondition: ";
        out += precondition_failure;
        out += '\n';
    }
    for (const ReportEntry& e : entries) {
        out += "  ";
        out += e.item;
        out += ": ";
        out += lhs_name;
        out += '=';
        out += e.lhs.str();
        out += ' ';
        out += rhs_name;
        out += '=';
        out += e.rhs.str();
        out += e.match ? " MATCH" : " MISMATCH";
        out += '\n';
    }
    return out;
}

} // namespace planar
