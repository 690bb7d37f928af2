#include "planar/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "json.hpp"

namespace planar {

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw SyntaxError(msg, pos);
    }

    std::string digits() {
        std::string out;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos])))
            out += text[pos++];
        if (out.empty()) fail("expected digits");
        if (out.size() > 9) fail("number too large");
        return out;
    }

    Rational parse_rational() {
        std::string num = digits();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            std::size_t at = pos;
            std::string den = digits();
            Rational d = Rational::from_string(den);
            if (d.is_zero()) {
                pos = at;
                fail("zero denominator");
            }
            return Rational::from_string(num) / d;
        }
        return Rational::from_string(num);
    }

    std::vector<Monomial> parse_atom() {
        char c = peek();
        if (c == 'x') {
            ++pos;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::size_t at = pos;
                int n = std::stoi(digits());
                if (n < 2) {
                    pos = at;
                    fail("exponent must be at least 2 (write x or 1)");
                }
                if (n > 1000) {
                    pos = at;
                    fail("exponent too large");
                }
                std::vector<Monomial> leaves(static_cast<std::size_t>(n),
                                             Monomial::var_x());
                return {graft(std::span<const Monomial>(leaves))};
            }
            return {Monomial::var_x()};
        }
        if (c == 'y') {
            ++pos;
            return {Monomial::var_y()};
        }
        if (c == '{') {
            ++pos;
            std::vector<Monomial> inner = parse_atomlist(false);
            if (peek() != '}') fail("expected '}'");
            ++pos;
            if (inner.size() != 1)
                fail("orbit braces need a single monomial");
            return orbit_sum(inner[0]);
        }
        if (c == '(') {
            ++pos;
            std::vector<Monomial> inner = parse_atomlist(true);
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return inner;
        }
        fail("expected a monomial atom");
    }

    // A '*'-separated atom list is one m-ary graft, expanded multilinearly
    // when atoms are orbit sums. Atoms never contain the unit, so distinct
    // member tuples graft to distinct monomials.
    std::vector<Monomial> parse_atomlist(bool allow_comma) {
        std::vector<std::vector<Monomial>> factors;
        factors.push_back(parse_atom());
        while (true) {
            char c = peek();
            if (c == '*' || (allow_comma && c == ',')) {
                ++pos;
                factors.push_back(parse_atom());
                continue;
            }
            break;
        }
        if (factors.size() == 1) return factors[0];
        std::vector<Monomial> out;
        std::vector<Monomial> tuple;
        expand(factors, 0, tuple, out);
        return out;
    }

    void expand(const std::vector<std::vector<Monomial>>& factors,
                std::size_t depth, std::vector<Monomial>& tuple,
                std::vector<Monomial>& out) {
        if (depth == factors.size()) {
            out.push_back(graft(std::span<const Monomial>(tuple)));
            return;
        }
        for (Monomial m : factors[depth]) {
            tuple.push_back(m);
            expand(factors, depth + 1, tuple, out);
            tuple.pop_back();
        }
    }

    std::vector<Monomial> parse_mono() {
        if (peek() == '1') {
            ++pos;
            return {Monomial::unit()};
        }
        return parse_atomlist(false);
    }

    static void add_term(Series::TermMap& into, Monomial m,
                         const Rational& coeff) {
        auto [it, inserted] = into.emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) into.erase(it);
        }
    }

    void parse_term(int sign, Series::TermMap& into) {
        Rational coeff(sign);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = Rational(sign) * parse_rational();
            if (peek() != '*') {
                // a bare rational is a term on the unit monomial
                add_term(into, Monomial::unit(), coeff);
                return;
            }
            ++pos;
        }
        for (Monomial m : parse_mono()) add_term(into, m, coeff);
    }

    Series::TermMap parse_all() {
        Series::TermMap out;
        int sign = 1;
        char c = peek();
        if (c == '+' || c == '-') {
            ++pos;
            sign = c == '-' ? -1 : 1;
        }
        parse_term(sign, out);
        while (!done()) {
            char s = peek();
            if (s != '+' && s != '-') fail("expected '+' or '-'");
            ++pos;
            parse_term(s == '-' ? -1 : 1, out);
        }
        return out;
    }
};

} // namespace

Series parse_series(std::string_view text) {
    Parser parser{text};
    Series::TermMap terms = parser.parse_all();
    int precision = 0;
    for (const auto& [m, c] : terms)
        precision = std::max(precision, m.deg_x());
    return Series::from_terms(std::move(terms), precision);
}

Monomial parse_monomial(std::string_view text) {
    Series s = parse_series(text);
    if (s.terms().size() != 1 ||
        s.terms().begin()->second != Rational(1))
        throw SyntaxError("expected a single monomial with coefficient 1", 0);
    return s.terms().begin()->first;
}

namespace {

void append_signed(std::string& out, bool first, const Rational& c,
                   const std::string& body) {
    bool neg = c.sign() < 0;
    if (first)
        out += neg ? "-" : "";
    else
        out += neg ? " - " : " + ";
    out += body;
}

bool is_x_corolla(Monomial m) {
    if (!m.is_node()) return false;
    for (Monomial c : m.children())
        if (c != Monomial::var_x()) return false;
    return true;
}

std::string mono_text(Monomial m) {
    if (m.is_unit()) return "1";
    if (m.is_leaf()) return m.leaf_label() == Label::x ? "x" : "y";
    if (is_x_corolla(m))
        return "x^" + std::to_string(m.arity());
    std::string out;
    bool first = true;
    for (Monomial c : m.children()) {
        if (!first) out += '*';
        first = false;
        if (c.is_node() && !is_x_corolla(c))
            out += "(" + mono_text(c) + ")";
        else
            out += mono_text(c);
    }
    return out;
}

std::string pretty_body(const Rational& abs_coeff, const std::string& mono) {
    if (mono == "1") return abs_coeff.str();
    if (abs_coeff == Rational(1)) return mono;
    return abs_coeff.str() + "*" + mono;
}

} // namespace

std::string pretty_monomial(Monomial m) { return mono_text(m); }

std::string format_canonical(const Series& f) {
    if (f.is_zero()) return "0*1";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        append_signed(out, first, c, c.abs().str() + "*" + m.encoding());
        first = false;
    }
    return out;
}

std::string format_pretty(const Series& f) {
    if (f.is_zero()) return "0*1";
    std::string out;
    bool first = true;
    std::set<std::uint32_t> consumed;
    for (const auto& [m, c] : f.terms()) {
        if (consumed.count(m.id())) continue;
        std::vector<Monomial> members = orbit_sum(m);
        bool collapse = members.size() >= 2;
        for (Monomial member : members) {
            auto it = f.terms().find(member);
            collapse = collapse && it != f.terms().end() && it->second == c;
        }
        std::string mono;
        if (collapse) {
            for (Monomial member : members) consumed.insert(member.id());
            mono = "{" + mono_text(members.back()) + "}";
        } else {
            mono = mono_text(m);
        }
        append_signed(out, first, c, pretty_body(c.abs(), mono));
        first = false;
    }
    return out;
}

std::string format_json(const Series& f, std::optional<long> k) {
    nlohmann::ordered_json doc;
    if (k) doc["k"] = *k;
    doc["precision"] = f.precision();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : f.terms()) {
        nlohmann::ordered_json t;
        t["coeff"] = c.str();
        t["monomial"] = m.encoding();
        t["deg_x"] = m.deg_x();
        t["deg_y"] = m.deg_y();
        terms.push_back(std::move(t));
    }
    doc["terms"] = std::move(terms);
    return doc.dump(2) + "\n";
}

} // namespace planar
