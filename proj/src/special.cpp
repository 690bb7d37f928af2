#include "planar/special.hpp"

#include <string>
#include <vector>

#include "planar/calculus.hpp"
#include "planar/expr.hpp"
#include "planar/substitution.hpp"

namespace planar {

Rational bracket(long k, int n) {
    if (k < 2) throw ArityError("bracket: k must be at least 2");
    if (n < 0) throw Error("bracket: n must be nonnegative");
    return (Rational(k).pow(n) - Rational(1)) / Rational(k - 1);
}

Rational bracket_factorial(long k, int n) {
    if (k < 2) throw ArityError("bracket_factorial: k must be at least 2");
    if (n < 0) throw Error("bracket_factorial: n must be nonnegative");
    Rational out(1);
    for (int i = 1; i <= n; ++i) out *= bracket(k, i);
    return out;
}

namespace {

void weak_comp_rec(int remaining, int slots_left, int total, bool keep_full,
                   std::vector<int>& parts,
                   std::vector<std::vector<int>>& out) {
    if (slots_left == 1) {
        if (!keep_full && remaining == total && total > 0) return;
        parts.push_back(remaining);
        out.push_back(parts);
        parts.pop_back();
        return;
    }
    for (int first = 0; first <= remaining; ++first) {
        if (!keep_full && first == total && total > 0) continue;
        parts.push_back(first);
        weak_comp_rec(remaining - first, slots_left - 1, total, keep_full,
                      parts, out);
        parts.pop_back();
    }
}

// All weak compositions (i_1..i_k) of n into k parts; with keep_full false,
// compositions containing a part equal to n itself are skipped.
std::vector<std::vector<int>> weak_compositions(int n, int k, bool keep_full) {
    std::vector<std::vector<int>> out;
    std::vector<int> parts;
    weak_comp_rec(n, k, n, keep_full, parts, out);
    return out;
}

// Degree slices f_0..f_P of exp_k, each carried at full precision P.
std::vector<Series> exp_slices(long k, int precision) {
    if (k < 2) throw ArityError("exp_k: k must be at least 2");
    std::vector<Series> slice;
    slice.push_back(Series::one(precision));
    if (precision >= 1) slice.push_back(Series::x(precision));
    for (int n = 2; n <= precision; ++n) {
        Series sum = Series::zero(precision);
        for (const auto& comp : weak_compositions(n, static_cast<int>(k), false)) {
            std::vector<Series> args;
            args.reserve(comp.size());
            for (int i : comp) args.push_back(slice[static_cast<std::size_t>(i)]);
            sum = add(sum, product(std::span<const Series>(args)));
        }
        Rational divisor = Rational(k).pow(n) - Rational(k);
        if (divisor.is_zero()) throw Error("exp_k: vanishing divisor");
        slice.push_back(scale(Rational(1) / divisor, sum));
    }
    return slice;
}

} // namespace

Series exp_k(long k, int precision) {
    Series out = Series::zero(precision);
    for (const Series& s : exp_slices(k, precision)) out = add(out, s);
    return out;
}

Series reversion(const Series& g, int precision) {
    if (g.has_y())
        throw VariableError("reversion: input must not contain y");
    if (g.precision() < precision || g.precision() < 1)
        throw PrecisionError("reversion: input precision too low");
    for (const auto& [m, c] : g.terms())
        if (m.deg_x() == 0)
            throw OrderError("reversion: input must have x-order 1");
    if (g.coefficient(Monomial::var_x()) != Rational(1))
        throw NormalizationError("reversion: linear coefficient must be 1");
    Series h = Series::x(precision);
    Series gt = truncate(g, precision);
    for (int n = 2; n <= precision; ++n) {
        Series slice = homogeneous_component(substitute(h, gt), n);
        // h_n is an exact homogeneous polynomial; lift it back to working
        // precision so the accumulating sum keeps all of its slices.
        h = sub(h, Series::from_terms(Series::TermMap(slice.terms()), precision));
    }
    return h;
}

Series log_k(long k, int precision) {
    Series e = exp_k(k, precision);
    return reversion(sub(e, Series::one(precision)), precision);
}

namespace {

Series orbit_series(Monomial rep, const Rational& c, int precision) {
    Series out = Series::zero(precision);
    for (Monomial m : orbit_sum(rep))
        out = add(out, scale(c, Series::monomial(m, precision)));
    return out;
}

} // namespace

Series h_closed_form(long k, int n) {
    if (k < 2) throw ArityError("h_closed_form: k must be at least 2");
    if (n < 1 || n > 4)
        throw Error("h_closed_form: n must be between 1 and 4");
    Monomial x = Monomial::var_x();
    Monomial x2 = graft({x, x});
    if (n == 1) return Series::x(1);
    if (n == 2)
        return scale(Rational(-1, 2), Series::monomial(x2, 2));
    Rational br2 = bracket_factorial(k, 2);
    if (n == 3) {
        Monomial x3 = graft({x, x, x});
        Monomial chain3 = graft({x, x2});
        Rational a = Rational(1, 4) * Rational(k) / br2;
        Rational b = Rational(-1, 6) * Rational(k - 2) / br2;
        return add(orbit_series(chain3, a, 3),
                   scale(b, Series::monomial(x3, 3)));
    }
    Monomial x3 = graft({x, x, x});
    Monomial x4 = graft({x, x, x, x});
    Monomial x_x3 = graft({x, x3});
    Monomial xxx2 = graft({x, x, x2});
    Monomial chain4 = graft({x, graft({x, x2})});
    Monomial x2x2 = graft({x2, x2});
    Rational br3 = bracket_factorial(k, 3);
    Rational six_br2 = Rational(6) * br2;
    Rational tf_br3 = Rational(24) * br3;
    Rational a = Rational(k - 3) / six_br2 -
                 Rational(k + 1) * Rational(k - 2) * Rational(k - 3) / tf_br3;
    Rational b = Rational(1, 2) / six_br2 - Rational(2) * Rational(k - 2) / tf_br3;
    Rational c = Rational(3, 2) / six_br2 - Rational(1, 8) - Rational(3) / tf_br3;
    Rational d = Rational(3, 2) / six_br2 - Rational(1, 8) -
                 Rational(3) * Rational(k + 1) / tf_br3;
    Rational e = Rational(1, 2) * Rational(k - 2) / six_br2 -
                 Rational(2) * Rational(k + 1) * Rational(k - 2) / tf_br3;
    Series out = scale(a, Series::monomial(x4, 4));
    out = add(out, orbit_series(x_x3, b, 4));
    out = add(out, orbit_series(chain4, c, 4));
    out = add(out, scale(d, Series::monomial(x2x2, 4)));
    out = add(out, orbit_series(xxx2, e, 4));
    return out;
}

Report verify_exp_functional_equation(long k, int precision) {
    Report report;
    report.title = "exp functional equation (k=" + std::to_string(k) +
                   ", N=" + std::to_string(precision) + ")";
    Series e = exp_k(k, precision);
    Series lhs = substitute(e, scale(Rational(k), Series::x(precision)));
    std::vector<Series> copies(static_cast<std::size_t>(k), e);
    Series rhs = product(std::span<const Series>(copies));
    record_comparison(report, "", lhs, rhs);
    return report;
}

Report verify_omega_equation(long k, int precision) {
    Report report;
    report.title = "omega equation (k=" + std::to_string(k) +
                   ", N=" + std::to_string(precision) + ")";
    std::vector<Series> slice = exp_slices(k, precision);
    std::vector<Series> dslice;
    for (int n = 0; n <= precision - 1; ++n)
        dslice.push_back(differential(slice[static_cast<std::size_t>(n)]));
    for (int n = 1; n <= precision - 1; ++n) {
        Series lhs = scale(Rational(k).pow(n), dslice[static_cast<std::size_t>(n)]);
        Series rhs = Series::zero(precision - 1);
        for (const auto& comp : weak_compositions(n, static_cast<int>(k), true)) {
            for (std::size_t j = 0; j < comp.size(); ++j) {
                if (comp[j] == 0) continue; // d of the unit slice is zero
                std::vector<Series> args;
                args.reserve(comp.size());
                for (std::size_t i = 0; i < comp.size(); ++i) {
                    auto part = static_cast<std::size_t>(comp[i]);
                    args.push_back(i == j ? dslice[part] : slice[part]);
                }
                rhs = add(rhs, product(std::span<const Series>(args)));
            }
        }
        record_comparison(report, "n=" + std::to_string(n) + " ", lhs, rhs);
    }
    return report;
}

Report verify_exp_derivative(long k, int precision) {
    Report report;
    report.title = "exp derivative (k=" + std::to_string(k) +
                   ", N=" + std::to_string(precision) + ")";
    Series e = exp_k(k, precision);
    record_comparison(report, "", derivative(e), e);
    return report;
}

Report verify_log_ode(long k, int precision) {
    Report report;
    report.title = "log ODE (k=" + std::to_string(k) +
                   ", N=" + std::to_string(precision) + ")";
    Series l = log_k(k, precision);
    Series one_plus_x =
        add(Series::one(precision - 1), Series::x(precision - 1));
    Series lhs = derivation_apply(one_plus_x, l);
    record_comparison(report, "", lhs, Series::one(precision - 1));
    return report;
}

Report verify_h_recurrence(long k, int precision) {
    Report report;
    report.title = "h recurrence (k=" + std::to_string(k) +
                   ", N=" + std::to_string(precision) + ")";
    Series l = log_k(k, precision);
    Series h0 = homogeneous_component(l, 0);
    if (!h0.is_zero()) {
        report.passed = false;
        report.entries.push_back(
            {"h_0", h0.coefficient(Monomial::unit()), Rational(0), false});
    }
    for (int n = 1; n <= precision - 1; ++n) {
        Series lhs = derivative(homogeneous_component(l, n + 1));
        Series rhs = scale(Rational(-n), homogeneous_component(l, n));
        record_comparison(report, "n=" + std::to_string(n) + " ", lhs, rhs);
    }
    return report;
}

Report h4_discrepancy_report(long k) {
    Report report;
    report.title = "h4 closed form vs reversion (k=" + std::to_string(k) + ")";
    report.lhs_name = "formula";
    report.rhs_name = "reversion";
    Series formula = h_closed_form(k, 4);
    Series rev = homogeneous_component(log_k(k, 5), 4);
    std::vector<std::string> handled;
    for (Monomial m : enumerate_monomials(4, {Label::x})) {
        const std::string& key = m.orbit_key();
        bool seen = false;
        for (const std::string& h : handled) seen = seen || h == key;
        if (seen) continue;
        handled.push_back(key);
        std::vector<Monomial> members = orbit_sum(m);
        bool match = true;
        for (Monomial member : members)
            match = match && formula.coefficient(member) == rev.coefficient(member);
        if (!match) report.passed = false;
        report.entries.push_back({"{" + pretty_monomial(members.back()) + "}",
                                  formula.coefficient(m), rev.coefficient(m),
                                  match});
    }
    return report;
}

} // namespace planar
