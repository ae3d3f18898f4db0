#pragma once

#include "film/quadrature.hpp"

#include <functional>

namespace film {

/// Locate discontinuities of an integer-valued signature along [a,b]:
/// a uniform scan followed by bisection of every change to tolerance tol.
/// Returns ordered breakpoints a = t0 < ... < tn = b such that the signature
/// is constant on each open piece (up to features smaller than the scan).
std::vector<double> find_transitions(const std::function<int(double)>& sig, double a,
                                     double b, int scan = 128, double tol = 1e-12);

/// Integrate f over the pieces of [a,b] where keep(signature) holds, taking
/// the signature constant per piece (evaluated at midpoints).
double piecewise_integral(const std::function<double(double)>& f,
                          const std::function<int(double)>& sig,
                          const std::function<bool(int)>& keep, double a, double b,
                          int scan = 128, double rel_tol = 1e-10);

} // namespace film
