#pragma once

#include <span>

#include "planar/series.hpp"

namespace planar {

/// The composite operation attached to a tree: a leaf returns its argument,
/// a node returns the m-ary product of its children's composites over the
/// argument segments split in planar leaf order. args length must equal the
/// leaf count of t; t must not be the unit.
Series composite(Monomial t, std::span<const Series> args);

/// The substitution homomorphism sending x to g and y to h, applied to f:
/// every monomial S of f contributes c_S(f) times the composite of S with g
/// at x-leaves and h at y-leaves. Requires certified ord_x(g) >= 1; result
/// precision is the minimum of the three operand precisions.
Series substitute(const Series& f, const Series& g, const Series& h);

/// Substitution x -> g for series without y; throws VariableError otherwise.
Series substitute(const Series& f, const Series& g);

/// Sends y to 1: deletes every y-leaf with reduction. Identity on y-free
/// series. Precision preserved.
Series eval_y_one(const Series& f);

} // namespace planar
