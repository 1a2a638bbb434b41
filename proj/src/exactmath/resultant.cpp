#include "x0lab/exactmath/resultant.hpp"

#include <algorithm>

namespace x0lab {

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw MathError("interpolation needs matching nonempty samples");
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational dx = xs[i] - xs[i - level];
      if (dx == 0) throw MathError("interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
    }
  QPoly acc(dd[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) acc = acc * QPoly({-xs[k], Rational(1)}) + QPoly(dd[k]);
  return acc;
}

namespace {

template <typename C>
int max_inner_degree(const UPoly<C>& f) {
  int d = 0;
  for (const auto& c : f.coeffs()) d = std::max(d, c.degree());
  return d;
}

}  // namespace

ZPoly resultant_in_parameter(const UPoly<ZPoly>& f, const UPoly<ZPoly>& g, std::optional<int> degree_bound) {
  if (f.is_zero() || g.is_zero()) return ZPoly();
  const int m = f.degree();
  const int n = g.degree();
  if (m == 0 && n == 0) throw MathError("resultant of two constants");
  const int bound = degree_bound.value_or(m * max_inner_degree(g) + n * max_inner_degree(f));
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= bound + 1; ++k) {
    const Integer z(k);
    std::vector<Integer> fv, gv;
    for (const auto& c : f.coeffs()) fv.push_back(c.evaluate(z));
    for (const auto& c : g.coeffs()) gv.push_back(c.evaluate(z));
    Integer r;
    if (m == 0)
      r = ZPoly(fv).pow(static_cast<unsigned>(n))[0];
    else if (n == 0)
      r = ZPoly(gv).pow(static_cast<unsigned>(m))[0];
    else
      r = determinant_bareiss(sylvester_matrix(fv, m, gv, n));
    xs.emplace_back(z);
    ys.emplace_back(r);
  }
  std::vector<Rational> xfit(xs.begin(), xs.end() - 1), yfit(ys.begin(), ys.end() - 1);
  const QPoly p = interpolate(xfit, yfit);
  if (p.evaluate(xs.back()) != ys.back()) throw MathError("resultant degree bound too small");
  return to_z(p);
}

QPoly resultant_in_parameter(const UPoly<QPoly>& f, const UPoly<QPoly>& g, std::optional<int> degree_bound) {
  if (f.is_zero() || g.is_zero()) return QPoly();
  auto clear = [](const UPoly<QPoly>& h, Integer& scale) {
    scale = 1;
    for (const auto& c : h.coeffs())
      for (const auto& x : c.coeffs()) scale = lcm(scale, x.get_den());
    std::vector<ZPoly> out;
    for (const auto& c : h.coeffs()) out.push_back(to_z(c.scaled(Rational(scale))));
    return UPoly<ZPoly>(std::move(out));
  };
  Integer sf, sg;
  const UPoly<ZPoly> fz = clear(f, sf);
  const UPoly<ZPoly> gz = clear(g, sg);
  const ZPoly r = resultant_in_parameter(fz, gz, degree_bound);
  Integer denom = 1;
  for (int i = 0; i < g.degree(); ++i) denom *= sf;
  for (int i = 0; i < f.degree(); ++i) denom *= sg;
  return to_q(r).scaled(Rational(1) / Rational(denom));
}

ZPoly resultant_polynomial_entries(const UPoly<ZPoly>& f, const UPoly<ZPoly>& g) {
  return resultant(f, g);
}

}  // namespace x0lab
