#pragma once

#include "planar/report.hpp"
#include "planar/series.hpp"

namespace planar {

/// The universal derivation d with d(x) = y: each monomial S maps to the sum
/// over its leaves of S with that leaf relabeled y; d(1) = 0. Every output
/// monomial has deg_y = 1. Requires a y-free input of precision >= 1; the
/// result has precision one lower (the degree-n slice of df needs the
/// degree-(n+1) slice of f).
Series differential(const Series& f);

/// d/dx: y set to 1 after d. Precision drops by one.
Series derivative(const Series& f);

/// The derivation h*d/dx applied to f: substitute(differential(f), x, h).
Series derivation_apply(const Series& h, const Series& f);

/// substitute(differential(f), g, differential(g)) — the chain rule's
/// right-hand side.
Series differential_substituted(const Series& f, const Series& g);

/// Checks differential(substitute(f, g)) = differential_substituted(f, g)
/// coefficientwise within shared precision.
Report verify_chain_rule(const Series& f, const Series& g);

/// For g with derivative(g) = 1 + g, checks
/// derivative(substitute(f, g)) = substitute(derivation_apply(1+x, f), g).
/// A failed precondition is recorded in the report, not thrown.
Report verify_special_chain_rule(const Series& f, const Series& g);

} // namespace planar
