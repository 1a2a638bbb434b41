#include "x0lab/exactmath/field.hpp"

#include "x0lab/exactmath/newton.hpp"
#include "x0lab/exactmath/resultant.hpp"

namespace x0lab {

Rational totally_ramified_root_valuation(const QPoly& minpoly, unsigned long p) {
  if (minpoly.degree() < 1 || minpoly.leading() != 1) throw MathError("minimal polynomial must be monic");
  const NewtonPolygon np(coefficient_valuations(minpoly, p));
  if (np.segments().size() != 1 || np.width() != minpoly.degree())
    throw MathError("minimal polynomial polygon is not pure-slope");
  const Rational v = -np.segments().front().slope;
  if (Integer(minpoly.degree()) != v.get_den())
    throw MathError("minimal polynomial is not totally ramified; norm does not determine valuations");
  return v;
}

ExtValuation field_valuation(const SymbolicPolynomial& a, const QPoly& minpoly, unsigned long p,
                             const std::string& var) {
  totally_ramified_root_valuation(minpoly, p);
  const QPoly ap = divmod(to_qpoly(a, var), minpoly).second;
  if (ap.is_zero()) return ExtValuation::infinity();
  const Rational norm = resultant(minpoly, ap);
  return ExtValuation(val_rat(norm, p).value() / minpoly.degree());
}

}  // namespace x0lab
