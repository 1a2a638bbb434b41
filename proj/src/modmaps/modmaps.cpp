#include "x0lab/modmaps/modmaps.hpp"

#include "x0lab/curve125/curve125.hpp"
#include "x0lab/exactmath/field.hpp"
#include "x0lab/exactmath/resultant.hpp"

namespace x0lab::modmaps {

namespace {

SymbolicPolynomial P(const char* s) { return SymbolicPolynomial::parse(s); }

Rational Q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

RationalMap::RationalMap(std::string name, std::string source, std::string target, SymbolicPolynomial numerator,
                         SymbolicPolynomial denominator)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      num_(std::move(numerator)),
      den_(std::move(denominator)) {
  if (den_.is_zero()) throw MathError(name_ + ": zero denominator");
  if (gcd(numerator_poly(), denominator_poly()).degree() > 0)
    throw MathError(name_ + ": numerator and denominator share a factor");
}

QPoly RationalMap::numerator_poly() const { return to_qpoly(num_, source_); }
QPoly RationalMap::denominator_poly() const { return to_qpoly(den_, source_); }

Rational RationalMap::evaluate(const Rational& at) const {
  const Rational d = den_.evaluate({{source_, at}});
  if (d == 0) throw MathError(name_ + ": pole at " + to_string(at));
  return num_.evaluate({{source_, at}}) / d;
}

bool RationalMap::is_identity() const {
  return source_ == target_ && numerator_poly() == denominator_poly() * QPoly({Q(0), Q(1)});
}

RationalMap compose(const RationalMap& outer, const RationalMap& inner) {
  if (inner.target() != outer.source())
    throw MathError("cannot compose " + outer.name() + " after " + inner.name());
  const QPoly a = outer.numerator_poly(), b = outer.denominator_poly();
  const QPoly n = inner.numerator_poly(), d = inner.denominator_poly();
  const int deg = std::max(a.degree(), b.degree());
  QPoly num, den;
  for (int k = 0; k <= deg; ++k) {
    const QPoly w = n.pow(k) * d.pow(deg - k);
    if (k <= a.degree()) num += w.scaled(a[k]);
    if (k <= b.degree()) den += w.scaled(b[k]);
  }
  const QPoly g = gcd(num, den);
  num = divmod(num, g).first;
  den = divmod(den, g).first;
  const Rational lead = den.leading();
  num = num.scaled(1 / lead);
  den = den.scaled(1 / lead);
  return RationalMap(outer.name() + "*" + inner.name(), inner.source(), outer.target(),
                     from_qpoly(num, inner.source()), from_qpoly(den, inner.source()));
}

const std::vector<RationalMap>& builtin_maps() {
  static const std::vector<RationalMap> maps{
      {"pi1_j", "t", "j", P("(t^2 + 2*5^3*t + 5^5)^3"), P("t^5")},
      {"pi5_j", "t", "j", P("(t^2 + 10*t + 5)^3"), P("t")},
      {"w5_t", "t", "t", P("125"), P("t")},
      {"pi1_t", "u", "t", P("u^5"), P("u^4 + 5*u^3 + 15*u^2 + 25*u + 25")},
      {"pi5_t", "u", "t", P("u*(u^4 + 5*u^3 + 15*u^2 + 25*u + 25)"), P("1")},
      {"w25_u", "u", "u", P("5"), P("u")},
  };
  return maps;
}

const RationalMap& builtin_map(const std::string& name) {
  for (const auto& m : builtin_maps())
    if (m.name() == name) return m;
  throw MathError("unknown map " + name);
}

ValRegion ValRegion::circle(std::string coordinate, Rational lambda) {
  ValRegion r;
  r.coordinate = std::move(coordinate);
  r.kind = RegionKind::circle;
  r.lo = r.hi = std::move(lambda);
  return r;
}

ValRegion ValRegion::disk(std::string coordinate, Rational lambda) {
  ValRegion r = circle(std::move(coordinate), std::move(lambda));
  r.kind = RegionKind::disk;
  return r;
}

ValRegion ValRegion::annulus(std::string coordinate, Rational lo, Rational hi) {
  if (!(lo < hi)) throw MathError("annulus needs lo < hi");
  ValRegion r;
  r.coordinate = std::move(coordinate);
  r.kind = RegionKind::annulus;
  r.lo = std::move(lo);
  r.hi = std::move(hi);
  return r;
}

ImageCertificate image_valuation(const RationalMap& map, const ValRegion& region) {
  if (region.coordinate != map.source())
    throw MathError("region is on " + region.coordinate + ", map " + map.name() + " starts on " + map.source());
  SymbolTable table = region.symbols;
  const std::string w = region.center.is_zero() ? map.source() : map.source() + "_offset";
  if (table.contains(w)) throw MathError("region symbols already use " + w);
  table.add(w, region.lo);
  auto shifted = [&](const SymbolicPolynomial& f) {
    if (region.center.is_zero()) return f;
    return substitute(f, map.source(), region.center + SymbolicPolynomial::symbol(w), table);
  };
  const SymbolicPolynomial num = shifted(map.numerator());
  const SymbolicPolynomial den = shifted(map.denominator());

  ImageCertificate c;
  if (region.kind == RegionKind::circle) {
    const auto vn = min_valuation(num, table);
    const auto vd = min_valuation(den, table);
    if (vd.value.is_infinite()) throw MathError(map.name() + ": denominator vanishes identically");
    if (!vd.unique) throw MathError(map.name() + ": denominator valuation is not determined on the circle");
    c.numerator_witnesses = vn.witnesses;
    c.denominator_witnesses = vd.witnesses;
    c.unique = vn.unique;
    c.lower_bound = vn.value.is_infinite() ? vn.value : ExtValuation(vn.value.value() - vd.value.value());
    c.conclusion = c.unique ? "circle→circle exact" : "bound only (tie)";
    return c;
  }

  if (!den.is_constant())
    throw MathError(map.name() + ": bounds over disks and annuli need a polynomial map");
  std::map<std::string, ParamValuation> assign;
  for (const auto& [name, sym] : table.symbols()) assign[name] = {sym.valuation, Q(0)};
  assign[w] = {Q(0), Q(1)};
  const Envelope env = valuation_envelope(num, assign, table.prime());
  if (region.kind == RegionKind::disk) {
    for (const auto& p : env.pieces())
      if (p.value.slope < 0) throw MathError(map.name() + ": valuation unbounded below on the disk");
    c.lower_bound = env.at(region.lo);
  } else {
    c.lower_bound = env.minimum_on(region.lo, region.hi);
  }
  if (c.lower_bound.is_finite())
    c.lower_bound = ExtValuation(c.lower_bound.value() - val_rat(den.constant_term(), table.prime()).value());
  for (const auto& p : env.pieces()) c.numerator_witnesses.push_back(p.witness);
  c.conclusion = "bound only (region)";
  return c;
}

Rational al_fixed_circle(const RationalMap& map) {
  const QPoly num = map.numerator_poly(), den = map.denominator_poly();
  if (map.source() != map.target() || num.degree() != 0 || num.is_zero() || den.degree() != 1 || den[0] != 0)
    throw MathError(map.name() + " is not of the form c/" + map.source());
  return val_rat(num[0] / den[1], 5).value() / 2;
}

namespace {

// t * (2x)^5 - (2x)^5 pi5_t(y / 2x), reduced with y^2 = 20x to A + yB.
std::pair<SymbolicPolynomial, SymbolicPolynomial> linear_in_y() {
  const SymbolicPolynomial e =
      P("t*(2*x)^5 - (y^5 + 5*y^4*(2*x) + 15*y^3*(2*x)^2 + 25*y^2*(2*x)^3 + 25*y*(2*x)^4)");
  SymbolicPolynomial a, b;
  const SymbolicPolynomial twenty_x = P("20*x");
  for (const auto& [k, coeff] : e.collect("y")) {
    const SymbolicPolynomial part = coeff * twenty_x.pow(static_cast<unsigned>(k / 2));
    if (k % 2 == 0)
      a += part;
    else
      b += part;
  }
  return {a, b};
}

}  // namespace

RamificationImage ramification_image_polynomial() {
  const auto data = curve125::ramification_polynomials(false);
  RamificationImage out;
  const QPoly target({Q(-125), Q(0), Q(1)});

  // On a ramification point x = y^2/20, so u = y/(2x) = 10/y and
  // y^5 * pi5_t(10/y) = 10^5 + 5*10^4 y + 15*10^3 y^2 + 25*10^2 y^3 + 25*10 y^4.
  const SymbolicPolynomial g = P("t*y^5 - (100000 + 50000*y + 15000*y^2 + 2500*y^3 + 250*y^4)");
  std::vector<QPoly> fy;
  for (const auto& c : data.p_ram_y.coeffs()) fy.emplace_back(Rational(c));
  const QPoly e = resultant_in_parameter(UPoly<QPoly>(fy), to_bivariate(g, "y", "t"));
  if (e.is_zero()) throw MathError("elimination gave the zero polynomial");
  out.eliminant = primitive_part(e);
  out.radical = primitive_part(squarefree_part(to_q(out.eliminant)));

  const auto [a, b] = linear_in_y();
  const SymbolicPolynomial conj = a * a - P("20*x") * b * b;
  std::vector<QPoly> fx;
  for (const auto& c : data.p_ram_x.coeffs()) fx.emplace_back(Rational(c));
  const QPoly ce = resultant_in_parameter(UPoly<QPoly>(fx), to_bivariate(conj, "x", "t"));
  if (ce.is_zero()) throw MathError("conjugate elimination gave the zero polynomial");
  out.conjugate_eliminant = primitive_part(ce);
  out.conjugate_radical = primitive_part(squarefree_part(to_q(out.conjugate_eliminant)));

  out.radical_divides_target = divmod(target, to_q(out.radical)).second.is_zero();
  out.conjugate_divides_target = divmod(target, to_q(out.conjugate_radical)).second.is_zero();
  const bool shape = out.eliminant.degree() <= 20 && out.eliminant.degree() % 2 == 0;
  out.pass = shape && out.radical_divides_target && out.radical == to_z(target);
  out.details = "eliminant degree " + std::to_string(out.eliminant.degree()) + ", squarefree part " +
                out.radical.str() + "; conjugate route degree " + std::to_string(out.conjugate_eliminant.degree()) +
                ", squarefree part of degree " + std::to_string(out.conjugate_radical.degree()) +
                (out.conjugate_divides_target ? " dividing" : " not dividing") + " t^2 - 125";
  return out;
}

CmDiskCertificate cm_disk_identities() {
  CmDiskCertificate c;
  c.reduced = normal_form(P("3125*r^-5 - 125"), curve125::r_table());
  c.valuation = field_valuation(c.reduced, curve125::r_minpoly(), 5, "r");
  const auto lhs = P("(j^2 - 125)*(j^2 + 125)");
  c.identity_holds = lhs == P("j^4 - 5^6");
  c.boundary = val_int(Integer(125), 5);
  c.pass = c.valuation > ExtValuation(3) && c.identity_holds && c.boundary == ExtValuation(3);
  c.details = "5^5/r^5 - 5^3 = " + c.reduced.str() + " of valuation " + c.valuation.str() +
              "; (j^2-125)(j^2+125) " + (c.identity_holds ? "=" : "!=") + " j^4 - 5^6";
  return c;
}

std::vector<ComponentChain> e_component_chains() {
  std::vector<ComponentChain> out;

  ComponentChain e1{"E1", {}, false};
  ValRegion off_sqrt5 = ValRegion::circle("u", Q(1, 2));
  off_sqrt5.symbols.add("sqrt5", Q(1, 2), 2, P("5"));
  off_sqrt5.center = P("sqrt5");
  e1.steps.push_back({"pi5_t", "v(u - sqrt5) = 1/2", image_valuation(builtin_map("pi5_t"), off_sqrt5)});
  e1.steps.push_back({"pi1_j", "v(t) = 5/2", image_valuation(builtin_map("pi1_j"), ValRegion::circle("t", Q(5, 2)))});
  e1.pass = e1.steps[0].image.lower_bound >= ExtValuation(Q(5, 2)) &&
            e1.steps[1].image.lower_bound >= ExtValuation(Q(5, 2));
  out.push_back(std::move(e1));

  ComponentChain e2{"E2", {}, false};
  e2.steps.push_back({"pi5_t", "v(u) = 1/10", image_valuation(builtin_map("pi5_t"), ValRegion::circle("u", Q(1, 10)))});
  e2.steps.push_back({"pi5_j", "v(t) = 1/2", image_valuation(builtin_map("pi5_j"), ValRegion::circle("t", Q(1, 2)))});
  e2.pass = e2.steps[0].image.unique && e2.steps[0].image.lower_bound == ExtValuation(Q(1, 2)) &&
            e2.steps[1].image.lower_bound >= ExtValuation(Q(5, 2));
  out.push_back(std::move(e2));
  return out;
}

}  // namespace x0lab::modmaps
