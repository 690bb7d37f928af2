#include "planar/series.hpp"

#include <algorithm>

namespace planar {

Series::Series(int precision) : precision_(precision) {
    if (precision < 0) throw PrecisionError("precision must be nonnegative");
}

Series Series::zero(int precision) { return Series(precision); }

Series Series::one(int precision) {
    return monomial(Monomial::unit(), precision);
}

Series Series::x(int precision) {
    return monomial(Monomial::var_x(), precision);
}

Series Series::y(int precision) {
    return monomial(Monomial::var_y(), precision);
}

Series Series::monomial(Monomial m, int precision) {
    Series s(precision);
    if (m.deg_x() <= precision)
        s.terms_.emplace(m, Rational(1));
    return s;
}

Series Series::from_terms(TermMap terms, int precision) {
    Series s(precision);
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second.is_zero() || it->first.deg_x() > precision)
            it = terms.erase(it);
        else
            ++it;
    }
    s.terms_ = std::move(terms);
    return s;
}

Rational Series::coefficient(Monomial s) const {
    if (s.deg_x() > precision_)
        throw PrecisionError("coefficient query beyond precision");
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Series::has_y() const {
    for (const auto& [m, c] : terms_)
        if (m.deg_y() > 0) return true;
    return false;
}

namespace {

void accumulate(Series::TermMap& into, Monomial m, const Rational& c) {
    auto [it, inserted] = into.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) into.erase(it);
    }
}

} // namespace

Series add(const Series& f, const Series& g) {
    int p = std::min(f.precision(), g.precision());
    Series::TermMap out;
    for (const auto& [m, c] : f.terms())
        if (m.deg_x() <= p) out.emplace(m, c);
    for (const auto& [m, c] : g.terms())
        if (m.deg_x() <= p) accumulate(out, m, c);
    return Series::from_terms(std::move(out), p);
}

Series sub(const Series& f, const Series& g) {
    return add(f, scale(Rational(-1), g));
}

Series scale(const Rational& a, const Series& f) {
    Series::TermMap out;
    if (!a.is_zero())
        for (const auto& [m, c] : f.terms()) out.emplace(m, a * c);
    return Series::from_terms(std::move(out), f.precision());
}

namespace {

void product_tuples(std::span<const Series> args, std::size_t slot, int budget,
                    std::vector<Monomial>& picked, const Rational& coeff,
                    Series::TermMap& out) {
    if (slot == args.size()) {
        accumulate(out, graft(std::span<const Monomial>(picked)), coeff);
        return;
    }
    for (const auto& [m, c] : args[slot].terms()) {
        if (m.deg_x() > budget) continue;
        picked.push_back(m);
        product_tuples(args, slot + 1, budget - m.deg_x(), picked, coeff * c, out);
        picked.pop_back();
    }
}

} // namespace

Series product(std::span<const Series> args) {
    if (args.size() < 2)
        throw ArityError("product: arity must be at least 2");
    int p = args[0].precision();
    for (const Series& s : args) p = std::min(p, s.precision());
    Series::TermMap out;
    std::vector<Monomial> picked;
    picked.reserve(args.size());
    product_tuples(args, 0, p, picked, Rational(1), out);
    return Series::from_terms(std::move(out), p);
}

Series product(const Series& f, const Series& g) {
    const Series args[] = {f, g};
    return product(std::span<const Series>(args, 2));
}

Series product(const Series& f, const Series& g, const Series& h) {
    const Series args[] = {f, g, h};
    return product(std::span<const Series>(args, 3));
}

OrderBound ord_x(const Series& f) {
    if (f.is_zero()) return {f.precision() + 1, false};
    int best = f.precision() + 1;
    for (const auto& [m, c] : f.terms()) best = std::min(best, m.deg_x());
    return {best, true};
}

DistanceBound distance(const Series& f, const Series& g) {
    OrderBound ord = ord_x(sub(f, g));
    return {Rational(1, 2).pow(ord.value), ord.certified};
}

Series homogeneous_component(const Series& f, int n) {
    if (n < 0) throw Error("homogeneous_component: negative degree");
    if (n > f.precision())
        throw PrecisionError("homogeneous_component beyond precision");
    Series::TermMap out;
    for (const auto& [m, c] : f.terms())
        if (m.deg_x() == n) out.emplace(m, c);
    return Series::from_terms(std::move(out), n);
}

bool agree(const Series& f, const Series& g) {
    return !first_difference(f, g).has_value();
}

std::optional<Monomial> first_difference(const Series& f, const Series& g) {
    Series d = sub(f, g);
    if (d.is_zero()) return std::nullopt;
    return d.terms().begin()->first;
}

Series truncate(const Series& f, int precision) {
    if (precision > f.precision())
        throw PrecisionError("truncate cannot raise precision");
    Series::TermMap out;
    for (const auto& [m, c] : f.terms())
        if (m.deg_x() <= precision) out.emplace(m, c);
    return Series::from_terms(std::move(out), precision);
}

} // namespace planar
