#pragma once

#include "planar/report.hpp"
#include "planar/series.hpp"

namespace planar {

/// The k-bracket [n] = (k^n - 1)/(k - 1) = 1 + k + ... + k^{n-1}.
Rational bracket(long k, int n);

/// [n]! = [1]*[2]*...*[n]; [0]! = 1.
Rational bracket_factorial(long k, int n);

/// The k-ary planar exponential through x-degree P: the unique series with
/// unit constant term, linear term x, and f(kx) equal to the k-ary product of
/// k copies of f. Built degree-by-degree from the functional equation.
Series exp_k(long k, int precision);

/// The k-ary planar logarithm: compositional inverse of exp_k - 1.
Series log_k(long k, int precision);

/// Compositional inverse through degree P of a series g with ord_x(g) = 1 and
/// linear coefficient 1: the unique h with substitute(h, g) = x. Requires a
/// y-free g of precision >= P.
Series reversion(const Series& g, int precision);

/// Closed form in k for the degree-n slice of log_k, n in 1..4, with orbit
/// notation expanded into planar monomials. The degree-4 form overstates two
/// orbit coefficients; h4_discrepancy_report pins down which.
Series h_closed_form(long k, int n);

/// Checks substitute(exp_k, k*x) = k-fold product of exp_k to precision.
Report verify_exp_functional_equation(long k, int precision);

/// With f_n the degree slices of exp_k and w_n = differential(f_n), checks
/// k^n * w_n = sum over j and over compositions i_1+...+i_k = n of
/// f_{i_1}*...*d f_{i_j}*...*f_{i_k}, for every n <= precision - 1.
Report verify_omega_equation(long k, int precision);

/// Checks derivative(exp_k) = exp_k, i.e. f_n' = f_{n-1} for n <= precision.
Report verify_exp_derivative(long k, int precision);

/// Checks derivation_apply(1+x, log_k) = 1 to precision - 1.
Report verify_log_ode(long k, int precision);

/// Checks h_{n+1}' = -n * h_n for 1 <= n <= precision - 1, and h_0 = 0,
/// on the slices h_n of log_k.
Report verify_h_recurrence(long k, int precision);

/// Orbit-by-orbit comparison of h_closed_form(k, 4) against the degree-4
/// slice of log_k; the reversion value is ground truth. Rows are ordered by
/// the orbits' smallest members.
Report h4_discrepancy_report(long k);

} // namespace planar
