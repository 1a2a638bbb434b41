#pragma once

#include <string>

#include "x0lab/exactmath/symbolic.hpp"
#include "x0lab/exactmath/upoly.hpp"
#include "x0lab/exactmath/valuation.hpp"

namespace x0lab {

/// Valuation of a in Q(r) = Q[r]/(m), for m monic with a pure-slope Newton
/// polygon whose slope has denominator deg m (totally ramified at p), via
/// v(a) = v_p(Res(m, a)) / deg m. `a` may involve only `var`.
ExtValuation field_valuation(const SymbolicPolynomial& a, const QPoly& minpoly, unsigned long p,
                             const std::string& var = "r");

/// The pure slope valuation of a root of m, or MathError if m's polygon is
/// not a single segment with slope denominator deg m.
Rational totally_ramified_root_valuation(const QPoly& minpoly, unsigned long p);

}  // namespace x0lab
