#include "planar/calculus.hpp"

#include "planar/substitution.hpp"

namespace planar {

Series differential(const Series& f) {
    if (f.has_y())
        throw VariableError("differential: input must not contain y");
    if (f.precision() < 1)
        throw PrecisionError("differential: input precision must be at least 1");
    Series::TermMap out;
    for (const auto& [m, c] : f.terms()) {
        for (int i = 1; i <= m.deg(); ++i) {
            Monomial r = relabel_leaf(m, i, Label::y);
            auto [it, inserted] = out.emplace(r, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return Series::from_terms(std::move(out), f.precision() - 1);
}

Series derivative(const Series& f) {
    return eval_y_one(differential(f));
}

Series derivation_apply(const Series& h, const Series& f) {
    Series df = differential(f);
    return substitute(df, Series::x(df.precision()), h);
}

Series differential_substituted(const Series& f, const Series& g) {
    return substitute(differential(f), g, differential(g));
}

Report verify_chain_rule(const Series& f, const Series& g) {
    Report report;
    report.title = "chain rule";
    Series lhs = differential(substitute(f, g));
    Series rhs = differential_substituted(f, g);
    record_comparison(report, "", lhs, rhs);
    return report;
}

Report verify_special_chain_rule(const Series& f, const Series& g) {
    Report report;
    report.title = "special chain rule";
    for (const auto& [m, c] : g.terms()) {
        if (m.deg_x() == 0) {
            report.passed = false;
            report.precondition_failure = "ord_x(g) must be at least 1";
            return report;
        }
    }
    Series gprime = derivative(g);
    Series one_plus_g = add(Series::one(g.precision()), g);
    if (!agree(gprime, one_plus_g)) {
        report.passed = false;
        report.precondition_failure = "derivative(g) must equal 1 + g";
        return report;
    }
    Series lhs = derivative(substitute(f, g));
    Series one_plus_x =
        add(Series::one(f.precision() - 1), Series::x(f.precision() - 1));
    Series rhs = substitute(derivation_apply(one_plus_x, f), g);
    record_comparison(report, "", lhs, rhs);
    return report;
}

} // namespace planar
