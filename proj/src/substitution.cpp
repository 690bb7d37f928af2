#include "planar/substitution.hpp"

#include <algorithm>

namespace planar {

Series composite(Monomial t, std::span<const Series> args) {
    if (t.is_unit())
        throw Error("composite: tree must not be the unit");
    if (static_cast<int>(args.size()) != t.deg())
        throw ArityError("composite: argument count must equal leaf count");
    if (t.is_leaf()) return args[0];
    std::vector<Series> parts;
    parts.reserve(t.children().size());
    std::size_t offset = 0;
    for (Monomial c : t.children()) {
        auto width = static_cast<std::size_t>(c.deg());
        parts.push_back(composite(c, args.subspan(offset, width)));
        offset += width;
    }
    return product(std::span<const Series>(parts));
}

namespace {

Series apply_monomial(Monomial s, const Series& g, const Series* h) {
    if (s.is_leaf()) {
        if (s.leaf_label() == Label::x) return g;
        if (!h) throw VariableError("substitute: series contains y");
        return *h;
    }
    std::vector<Series> parts;
    parts.reserve(s.children().size());
    for (Monomial c : s.children())
        parts.push_back(apply_monomial(c, g, h));
    return product(std::span<const Series>(parts));
}

Series substitute_impl(const Series& f, const Series& g, const Series* h) {
    for (const auto& [m, c] : g.terms())
        if (m.deg_x() == 0)
            throw OrderError("substitute: ord_x of the x-image must be at least 1");
    int p = std::min(f.precision(), g.precision());
    if (h) p = std::min(p, h->precision());
    Series gt = truncate(g, p);
    Series ht = h ? truncate(*h, p) : Series::zero(p);
    Series out = Series::zero(p);
    for (const auto& [m, c] : f.terms()) {
        if (m.deg_x() > p) continue;
        if (m.is_unit())
            out = add(out, scale(c, Series::one(p)));
        else
            out = add(out, scale(c, apply_monomial(m, gt, h ? &ht : nullptr)));
    }
    return out;
}

} // namespace

Series substitute(const Series& f, const Series& g, const Series& h) {
    return substitute_impl(f, g, &h);
}

Series substitute(const Series& f, const Series& g) {
    if (f.has_y())
        throw VariableError("substitute: series contains y but no y-image given");
    return substitute_impl(f, g, nullptr);
}

namespace {

Monomial strip_y(Monomial s) {
    if (s.is_unit()) return s;
    if (s.is_leaf())
        return s.leaf_label() == Label::y ? Monomial::unit() : s;
    std::vector<Monomial> rebuilt;
    rebuilt.reserve(s.children().size());
    for (Monomial c : s.children()) rebuilt.push_back(strip_y(c));
    // graft absorbs the erased leaves and splices single-child vertices
    return graft(std::span<const Monomial>(rebuilt));
}

} // namespace

Series eval_y_one(const Series& f) {
    Series::TermMap out;
    for (const auto& [m, c] : f.terms()) {
        Monomial r = strip_y(m);
        auto [it, inserted] = out.emplace(r, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return Series::from_terms(std::move(out), f.precision());
}

} // namespace planar
