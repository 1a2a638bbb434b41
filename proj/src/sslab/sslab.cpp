#include "x0lab/sslab/sslab.hpp"

#include "x0lab/exactmath/symbols.hpp"

namespace x0lab::sslab {

namespace {

SymbolicPolynomial P(const char* s) { return SymbolicPolynomial::parse(s); }

Rational Q(long n, long d = 1) { return make_rational(n, d); }

// y^k -> f^(k/2) y^(k mod 2)
SymbolicPolynomial reduce_y(const SymbolicPolynomial& g, const SymbolicPolynomial& f) {
  SymbolicPolynomial out;
  for (const auto& [k, coeff] : g.collect("y")) {
    SymbolicPolynomial part = coeff * f.pow(static_cast<unsigned>(k / 2));
    if (k % 2 == 1) part = part * SymbolicPolynomial::symbol("y");
    out += part;
  }
  return out;
}

}  // namespace

SymbolicPolynomial FamilyCurve::discriminant() const {
  return Rational(-16) * (Rational(4) * a.pow(3) + Rational(27) * b.pow(2));
}

SymbolicPolynomial division_polynomial(int ell, const FamilyCurve& curve) {
  if (ell != 5) throw MathError("only the 5-division polynomial is supported");
  if (curve.discriminant().is_zero()) throw MathError("singular family");
  const auto& a = curve.a;
  const auto& b = curve.b;
  const auto x = SymbolicPolynomial::symbol("x");
  const auto y = SymbolicPolynomial::symbol("y");
  const SymbolicPolynomial f = x.pow(3) + a * x + b;
  const SymbolicPolynomial psi2 = Rational(2) * y;
  const SymbolicPolynomial psi3 =
      Rational(3) * x.pow(4) + Rational(6) * a * x.pow(2) + Rational(12) * b * x - a.pow(2);
  const SymbolicPolynomial psi4 =
      Rational(4) * y *
      (x.pow(6) + Rational(5) * a * x.pow(4) + Rational(20) * b * x.pow(3) - Rational(5) * a.pow(2) * x.pow(2) -
       Rational(4) * a * b * x - Rational(8) * b.pow(2) - a.pow(3));
  const SymbolicPolynomial psi5 = reduce_y(psi4 * psi2.pow(3) - psi3.pow(3), f);
  if (psi5.degree_in("y") != 0 || psi5.min_degree_in("y") != 0)
    throw MathError("odd division polynomial still involves y");
  return psi5;
}

std::vector<Envelope> psi5_valuations() {
  const auto by_x = division_polynomial(5).collect("x");
  std::vector<Envelope> out(13);
  for (const auto& [i, coeff] : by_x) out[i] = valuation_envelope(coeff, {{"t", {Q(0), Q(1)}}}, 5);
  return out;
}

ParamPolygon psi5_polygon() { return parametric_polygon(psi5_valuations(), Q(0), Q(1)); }

TorsionProfile torsion_profile(const Rational& lambda) {
  if (!(lambda > 0 && lambda < 1)) throw MathError("v(t) must lie in (0, 1)");
  const ParamPolygon poly = psi5_polygon();
  const auto k = poly.cell_of(lambda);
  if (!k) throw MathError("v(t) = " + to_string(lambda) + " is a breakpoint of the polygon");
  const ParamCell& cell = poly.cells[*k];
  TorsionProfile out;
  out.lambda = lambda;
  out.cell_lo = cell.lo;
  out.cell_hi = cell.hi;
  out.vertices = cell.vertices;
  long points = 0;
  for (const auto& [v, n] : cell.root_valuations()) {
    const Rational vx = v.at(lambda);
    if (!(vx < 0)) throw VerificationError("x-root of nonnegative valuation; z = x/y conversion not valid");
    out.x_root_valuations.emplace_back(vx, n);
    out.z_valuations.emplace_back(-vx / 2, 2 * n);
    points += 2 * n;
  }
  if (points != 24) throw VerificationError("5-torsion point count is not 24");
  // a segment of length 2 isolates the four nonzero points of one subgroup
  out.canonical_subgroup = false;
  for (const auto& s : cell.segments) out.canonical_subgroup = out.canonical_subgroup || s.to - s.from == 2;
  return out;
}

ThresholdCertificate too_ss_threshold() {
  ThresholdCertificate c;
  const FamilyCurve curve;
  const SymbolicPolynomial c4 = Rational(-48) * curve.a;
  c.j_numerator = c4.pow(3);
  c.j_denominator = curve.discriminant();
  c.formula_matches = c.j_numerator * P("4*t^3 + 27") == P("6912*t^3") * c.j_denominator;

  const ParamPolygon poly = psi5_polygon();
  c.breakpoint = poly.breakpoints.size() == 1 ? poly.breakpoints.front() : Rational(-1);
  // v(j) = v(6912) + 3 v(t) - v(4t^3 + 27) with the denominator a unit for v(t) > 0
  const Envelope den = valuation_envelope(P("4*t^3 + 27"), {{"t", {Q(0), Q(1)}}}, 5);
  const Envelope num = valuation_envelope(P("6912*t^3"), {{"t", {Q(0), Q(1)}}}, 5);
  c.denominator_unit = den.pieces().size() == 2 && den.at(Q(1, 1000)) == ExtValuation(0) &&
                       den.unique_at(Q(1, 1000)) && den.crossings(Q(0), Q(1)).empty();
  const bool num_is_3l = num.pieces().size() == 1 && num.pieces().front().value == ParamValuation{Q(0), Q(3)};
  c.threshold = 3 * c.breakpoint;
  const bool breakpoint_ok = c.breakpoint == Q(5, 6);
  c.pass = c.formula_matches && c.denominator_unit && num_is_3l && breakpoint_ok && c.threshold == Q(5, 2);
  c.details = "j = 6912t^3/(4t^3+27) " + std::string(c.formula_matches ? "confirmed" : "not confirmed") +
              "; polygon breakpoint " + to_string(c.breakpoint) + "; threshold v(j) = " + to_string(c.threshold);
  return c;
}

}  // namespace x0lab::sslab
