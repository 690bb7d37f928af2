#pragma once

#include <string>
#include <vector>

#include "planar/rational.hpp"

namespace planar {

struct ReportEntry {
    std::string item;
    Rational lhs;
    Rational rhs;
    bool match = true;
};

/// Outcome of a mechanical identity check. Verifiers return reports instead
/// of booleans so a failure carries the offending monomial and both values.
struct Report {
    std::string title;
    bool passed = true;
    /// Nonempty when a required precondition failed; entries then unreliable.
    std::string precondition_failure;
    std::string lhs_name = "lhs";
    std::string rhs_name = "rhs";
    std::vector<ReportEntry> entries;

    std::string to_text() const;
};

class Series;

/// Marks the report failed and appends the first differing monomial (item =
/// prefix + encoding) when lhs and rhs disagree within shared precision.
void record_comparison(Report& report, const std::string& item_prefix,
                       const Series& lhs, const Series& rhs);

} // namespace planar
