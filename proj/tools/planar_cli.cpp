#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "planar/calculus.hpp"
#include "planar/expr.hpp"
#include "planar/special.hpp"
#include "planar/substitution.hpp"

namespace {

using namespace planar;

std::string render(const Series& s, const std::string& format,
                   std::optional<long> k) {
    if (format == "canonical") return format_canonical(s) + "\n";
    if (format == "json") return format_json(s, k);
    return format_pretty(s) + "\n";
}

// Parsed expressions are exact polynomials, so they may be carried at any
// precision; the parser's default (largest x-degree present) is often too
// tight for a follow-up operation.
Series at_precision(const Series& f, int p) {
    return Series::from_terms(Series::TermMap(f.terms()), p);
}

int max_deg_x(const Series& f) {
    int out = 0;
    for (const auto& [m, c] : f.terms()) out = std::max(out, m.deg_x());
    return out;
}

Series parse_lifted(const std::string& text, int floor) {
    Series f = parse_series(text);
    return at_precision(f, std::max(max_deg_x(f), floor));
}

// Smallest precision that keeps every term of substitute(f, g, h) when all
// inputs are exact polynomials.
int subst_precision(const Series& f, const Series& g, const Series* h) {
    int gx = max_deg_x(g);
    int hx = h ? max_deg_x(*h) : 0;
    int out = 1;
    for (const auto& [m, c] : f.terms())
        out = std::max(out, m.deg_x() * gx + m.deg_y() * hx);
    return out;
}

Series named_series(const std::string& text, long k, int n) {
    if (text == "exp") return exp_k(k, n);
    if (text == "log") return log_k(k, n);
    return parse_series(text);
}

int run_verify(const std::string& name, long k, int n, const std::string& f_text,
               const std::string& g_text) {
    Report report;
    if (name == "chain-rule") {
        Series f = parse_lifted(f_text, n);
        Series g = parse_lifted(g_text, n);
        report = verify_chain_rule(f, g);
    } else if (name == "special-chain-rule") {
        Series f = parse_lifted(f_text, n);
        Series g = sub(exp_k(k, n), Series::one(n));
        report = verify_special_chain_rule(f, g);
    } else if (name == "exp-functional") {
        report = verify_exp_functional_equation(k, n);
    } else if (name == "exp-derivative") {
        report = verify_exp_derivative(k, n);
    } else if (name == "omega") {
        report = verify_omega_equation(k, n);
    } else if (name == "log-ode") {
        report = verify_log_ode(k, n);
    } else if (name == "h-recurrence") {
        report = verify_h_recurrence(k, n);
    } else {
        report = h4_discrepancy_report(k);
    }
    std::cout << report.to_text();
    return report.passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for planar power series on rooted trees"};
    app.require_subcommand(1);

    long k = 2;
    int n = 6;
    int hn = 2;
    int degree = 0;
    std::string format = "pretty";
    std::string labels = "x";
    std::string expr_text;
    std::string g_text;
    std::string h_text;
    std::string series_text;
    std::string mono_text;
    std::string verify_name;
    std::string verify_f = "x^2";
    std::string verify_g = "x + x^2";

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output style")
            ->check(CLI::IsMember({"canonical", "pretty", "json"}))
            ->capture_default_str();
    };
    auto add_kn = [&](CLI::App* cmd) {
        cmd->add_option("-k", k, "arity of the grafting products")
            ->check(CLI::Range(2L, 16L))
            ->capture_default_str();
        cmd->add_option("-N", n, "x-degree precision")
            ->check(CLI::Range(0, 12))
            ->capture_default_str();
    };

    CLI::App* exp_cmd = app.add_subcommand("exp", "k-ary planar exponential");
    add_kn(exp_cmd);
    add_format(exp_cmd);

    CLI::App* log_cmd = app.add_subcommand("log", "k-ary planar logarithm");
    add_kn(log_cmd);
    add_format(log_cmd);

    CLI::App* hcf_cmd = app.add_subcommand(
        "h-closed-form", "printed closed form of a log_k degree slice");
    hcf_cmd->add_option("-k", k, "arity of the grafting products")
        ->check(CLI::Range(2L, 16L))
        ->capture_default_str();
    hcf_cmd->add_option("-n", hn, "slice degree")
        ->check(CLI::Range(1, 4))
        ->capture_default_str();
    add_format(hcf_cmd);

    CLI::App* diff_cmd = app.add_subcommand("diff", "derivative d/dx");
    diff_cmd->add_option("expr", expr_text, "series expression")->required();
    add_format(diff_cmd);

    CLI::App* dif_cmd =
        app.add_subcommand("differential", "universal differential d");
    dif_cmd->add_option("expr", expr_text, "series expression")->required();
    add_format(dif_cmd);

    CLI::App* subst_cmd =
        app.add_subcommand("subst", "substitute x -> g and y -> h into f");
    subst_cmd->add_option("F", expr_text, "series expression")->required();
    subst_cmd->add_option("G", g_text, "image of x (needs x-order >= 1)")
        ->required();
    subst_cmd->add_option("H", h_text, "image of y");
    add_format(subst_cmd);

    CLI::App* orbit_cmd =
        app.add_subcommand("orbit", "sum of the planar orbit of a monomial");
    orbit_cmd->add_option("monomial", mono_text, "monomial expression")
        ->required();
    add_format(orbit_cmd);

    CLI::App* enum_cmd = app.add_subcommand(
        "enumerate", "all monomials of a total degree, one per line");
    enum_cmd->add_option("degree", degree, "total degree")
        ->required()
        ->check(CLI::Range(0, 10));
    enum_cmd->add_option("--labels", labels, "leaf alphabet")
        ->check(CLI::IsMember({"x", "y", "xy"}))
        ->capture_default_str();

    CLI::App* coeff_cmd = app.add_subcommand(
        "coeff", "coefficient of a monomial in a series");
    coeff_cmd
        ->add_option("series", series_text,
                     "series expression, or the literal exp or log")
        ->required();
    coeff_cmd->add_option("monomial", mono_text, "monomial expression")
        ->required();
    add_kn(coeff_cmd);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check an identity, exit 0 pass / 1 fail");
    verify_cmd
        ->add_option("name", verify_name, "identity to check")
        ->required()
        ->check(CLI::IsMember({"chain-rule", "special-chain-rule",
                               "exp-functional", "exp-derivative", "omega",
                               "log-ode", "h-recurrence", "h4-report"}));
    add_kn(verify_cmd);
    verify_cmd->add_option("-f", verify_f, "series expression for f")
        ->capture_default_str();
    verify_cmd->add_option("-g", verify_g, "series expression for g")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(exp_cmd)) {
            std::cout << render(exp_k(k, n), format, k);
        } else if (app.got_subcommand(log_cmd)) {
            std::cout << render(log_k(k, n), format, k);
        } else if (app.got_subcommand(hcf_cmd)) {
            std::cout << render(h_closed_form(k, hn), format, k);
        } else if (app.got_subcommand(diff_cmd)) {
            std::cout << render(derivative(parse_lifted(expr_text, 1)), format,
                                std::nullopt);
        } else if (app.got_subcommand(dif_cmd)) {
            std::cout << render(differential(parse_lifted(expr_text, 1)),
                                format, std::nullopt);
        } else if (app.got_subcommand(subst_cmd)) {
            Series f = parse_series(expr_text);
            Series g = parse_series(g_text);
            if (h_text.empty()) {
                int p = subst_precision(f, g, nullptr);
                Series out = substitute(at_precision(f, p), at_precision(g, p));
                std::cout << render(out, format, std::nullopt);
            } else {
                Series h = parse_series(h_text);
                int p = subst_precision(f, g, &h);
                Series out = substitute(at_precision(f, p), at_precision(g, p),
                                        at_precision(h, p));
                std::cout << render(out, format, std::nullopt);
            }
        } else if (app.got_subcommand(orbit_cmd)) {
            Monomial m = parse_monomial(mono_text);
            Series out = Series::zero(m.deg_x());
            for (Monomial member : orbit_sum(m))
                out = add(out, Series::monomial(member, m.deg_x()));
            std::cout << render(out, format, std::nullopt);
        } else if (app.got_subcommand(enum_cmd)) {
            std::vector<Label> alphabet;
            if (labels != "y") alphabet.push_back(Label::x);
            if (labels != "x") alphabet.push_back(Label::y);
            for (Monomial m : enumerate_monomials(degree, alphabet))
                std::cout << m.encoding() << "\n";
        } else if (app.got_subcommand(coeff_cmd)) {
            Series f = named_series(series_text, k, n);
            Monomial m = parse_monomial(mono_text);
            std::cout << f.coefficient(m).str() << "\n";
        } else if (app.got_subcommand(verify_cmd)) {
            return run_verify(verify_name, k, n, verify_f, verify_g);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
