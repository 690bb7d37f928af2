#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "planar/monomial.hpp"
#include "planar/rational.hpp"

namespace planar {

/// Order query result. When certified, `value` is the exact x-order; when
/// not, no nonzero term was visible and the statement is only
/// "ord_x >= value" (value is then precision + 1).
struct OrderBound {
    int value;
    bool certified;
};

/// Distance query result. When certified, `bound` is the exact x-adic
/// distance; when not, the statement is "distance <= bound".
struct DistanceBound {
    Rational bound;
    bool certified;
};

/// A truncated element of K{{x,y}: power series in x, polynomials in y.
///
/// Stores the complete slice of nonzero coefficients for every x-degree up to
/// `precision`; the y-direction is never truncated. Terms whose monomial has
/// x-degree above the precision are indistinguishable from zero and are not
/// stored. Immutable; all arithmetic is by the free functions below.
class Series {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    static Series zero(int precision);
    static Series one(int precision);
    static Series x(int precision);
    static Series y(int precision);
    /// The single-term series 1*m (dropped when deg_x(m) > precision).
    static Series monomial(Monomial m, int precision);
    /// Filters zero coefficients and terms beyond precision.
    static Series from_terms(TermMap terms, int precision);

    int precision() const { return precision_; }
    const TermMap& terms() const { return terms_; }

    /// c_S(f); throws PrecisionError when deg_x(S) exceeds the precision
    /// (absence of a stored term proves nothing out there).
    Rational coefficient(Monomial s) const;

    /// True when no terms are stored (zero within precision).
    bool is_zero() const { return terms_.empty(); }

    /// True when some stored monomial contains a y-leaf.
    bool has_y() const;

private:
    explicit Series(int precision);
    TermMap terms_;
    int precision_;
};

Series add(const Series& f, const Series& g);
Series sub(const Series& f, const Series& g);
Series scale(const Rational& a, const Series& f);

/// m-ary convolution product, m >= 2: c_S = sum over graft decompositions of
/// S of the coefficient products. Precision = min over operands.
Series product(std::span<const Series> args);
Series product(const Series& f, const Series& g);
Series product(const Series& f, const Series& g, const Series& h);

OrderBound ord_x(const Series& f);

/// (1/2)^{ord_x(f-g)}, certified when the order is.
DistanceBound distance(const Series& f, const Series& g);

/// The deg_x = n slice of f, returned at precision n.
Series homogeneous_component(const Series& f, int n);

/// True when f and g have identical coefficients at every monomial of
/// x-degree <= min(precision(f), precision(g)).
bool agree(const Series& f, const Series& g);

/// Smallest monomial where f and g differ within shared precision.
std::optional<Monomial> first_difference(const Series& f, const Series& g);

/// Copy of f truncated to a lower precision.
Series truncate(const Series& f, int precision);

} // namespace planar
