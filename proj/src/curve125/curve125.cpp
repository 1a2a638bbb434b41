#include "x0lab/curve125/curve125.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "x0lab/exactmath/newton.hpp"
#include "x0lab/exactmath/resultant.hpp"

namespace x0lab::curve125 {

namespace {

SymbolicPolynomial P(const char* s) { return SymbolicPolynomial::parse(s); }

Rational Q(long n, long d = 1) { return make_rational(n, d); }

// Terms of valuation exactly zero / the remainder.
std::pair<SymbolicPolynomial, SymbolicPolynomial> split_zero(const SymbolicPolynomial& f,
                                                             const SymbolTable& t) {
  SymbolicPolynomial zero, rest;
  for (const auto& [m, c] : f.terms()) {
    const SymbolicPolynomial term(c, m);
    if (min_valuation(term, t).value == ExtValuation(0))
      zero += term;
    else
      rest += term;
  }
  return {zero, rest};
}

std::string monomial_list(const std::vector<Monomial>& ms) {
  std::string out;
  for (const auto& m : ms) out += (out.empty() ? "" : ", ") + m.str();
  return "{" + out + "}";
}

}  // namespace

PlusCurveModel plus_curve_model() {
  return {P("y^4 - x^5 + 5*x*y^3 + 15*x^2*y^2 + 25*x^3*y + 25*x^4 + 5*y^3 + 5*x*y^2 - 25*x^3 + 15*y^2"
            " + 25*x^2 + 25*y - 25*x + 25"),
          P("x*u^2 - y*u + 5")};
}

SymbolTable r_table() {
  SymbolTable t(5);
  t.add("r", Q(2, 5), 5, P("25 - 25*r"));
  return t;
}

QPoly r_minpoly() { return QPoly({Q(-25), Q(25), Q(0), Q(0), Q(0), Q(1)}); }

const std::map<CellKey, SymbolicPolynomial>& shifted_table() {
  static const std::map<CellKey, SymbolicPolynomial> table = [] {
    const std::map<CellKey, const char*> raw{
        {{5, 0}, "-1"},
        {{4, 0}, "-5*r + 25"},
        {{3, 1}, "25"},
        {{3, 0}, "-10*r^2 + 100*r - 25"},
        {{2, 2}, "15"},
        {{2, 1}, "75*r"},
        {{2, 0}, "-10*r^3 + 150*r^2 - 75*r + 25"},
        {{1, 3}, "5"},
        {{1, 2}, "30*r + 5"},
        {{1, 1}, "75*r^2"},
        {{1, 0}, "-5*r^4 + 100*r^3 - 75*r^2 + 50*r - 25"},
        {{0, 4}, "1"},
        {{0, 3}, "5*r + 5"},
        {{0, 2}, "15*r^2 + 5*r + 15"},
        {{0, 1}, "25*r^3 + 25"},
        {{0, 0}, "25*r^4 - 25*r^3 + 25*r^2"},
    };
    std::map<CellKey, SymbolicPolynomial> out;
    for (const auto& [k, s] : raw) out[k] = SymbolicPolynomial::parse(s);
    return out;
  }();
  return table;
}

namespace {

ShiftedModel compute_shifted_model() {
  const auto t = r_table();
  ShiftedModel m;
  m.g_plus = substitute(plus_curve_model().f_plus, "x", P("x0 + r"), t);
  for (const auto& [i, by_x0] : m.g_plus.collect("x0"))
    for (const auto& [j, coeff] : by_x0.collect("y")) m.cells[{i, j}] = coeff;
  return m;
}

}  // namespace

std::vector<std::string> shifted_model_mismatches(const ShiftedModel& m) {
  std::vector<std::string> out;
  const auto& table = shifted_table();
  std::set<CellKey> keys;
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 4; ++j) keys.insert({i, j});
  for (const auto& [k, v] : m.cells) keys.insert(k);
  for (const auto& k : keys) {
    const auto it = table.find(k);
    const auto jt = m.cells.find(k);
    const SymbolicPolynomial want = it == table.end() ? SymbolicPolynomial() : it->second;
    const SymbolicPolynomial got = jt == m.cells.end() ? SymbolicPolynomial() : jt->second;
    if (want != got)
      out.push_back("x0^" + std::to_string(k.first) + " y^" + std::to_string(k.second) + ": table " + want.str() +
                    ", computed " + got.str());
  }
  return out;
}

ShiftedModel build_shifted_model() {
  ShiftedModel m = compute_shifted_model();
  const auto bad = shifted_model_mismatches(m);
  if (!bad.empty()) throw VerificationError("shifted model disagrees with the table: " + bad.front());
  return m;
}

// ---------------------------------------------------------------------------

DistanceMultiset pairwise_distance_valuations(const ZPoly& f, unsigned long p) {
  if (f.degree() < 1) throw MathError("distance multiset needs a nonconstant polynomial");
  if (!is_squarefree(to_q(f))) throw MathError("distance multiset needs a squarefree polynomial");
  std::vector<ZPoly> fc;
  for (const auto& c : f.coeffs()) fc.emplace_back(c);
  ZPoly d = resultant_in_parameter(UPoly<ZPoly>(fc), taylor_shift(f));
  const int k = d.strip_x_power();
  if (k != f.degree()) throw VerificationError("difference resultant has unexpected zero order");
  const int n = f.degree();
  if (d.degree() == 0) return {};
  auto out = NewtonPolygon(coefficient_valuations(d, p)).root_valuations();
  long total = 0;
  for (const auto& e : out) total += e.second;
  if (total != static_cast<long>(n) * (n - 1)) throw VerificationError("difference polynomial has wrong degree");
  return out;
}

RamificationData ramification_polynomials(bool with_distances) {
  const auto model = plus_curve_model();
  RamificationData out;
  const auto sub = substitute(model.f_plus, "x", P("y^2/20")) * Q(3200000);
  out.p_ram_y = to_z(to_qpoly(sub, "y"));
  const UPoly<QPoly> f = to_bivariate(model.f_plus, "y", "x");
  const UPoly<QPoly> g({QPoly({Q(0), Q(-20)}), QPoly(), QPoly(Q(1))});
  out.p_ram_x = to_z(resultant_in_parameter(f, g));
  if (out.p_ram_y.degree() != 10 || out.p_ram_x.degree() != 10)
    throw MathError("ramification polynomial has degree other than 10");
  if (with_distances) {
    out.y_distances = pairwise_distance_valuations(out.p_ram_y);
    out.x_distances = pairwise_distance_valuations(out.p_ram_x);
  }
  return out;
}

ClusterCertificate cluster_certificate(const RamificationData& data) {
  ClusterCertificate c;
  const NewtonPolygon ny(coefficient_valuations(data.p_ram_y, 5));
  const auto roots = ny.root_valuations();
  const int n = data.p_ram_y.degree();
  if (roots.size() != 1 || data.y_distances.size() != 2) {
    c.details = "root or distance valuations are not of the two-level shape";
    return c;
  }
  c.v_root_y = roots.front().first;
  const auto& far = data.y_distances[0];
  const auto& close = data.y_distances[1];
  c.v_close_y = close.first;
  c.close_pairs = close.second;
  // With two distance levels the relation "distance >= close level" is an
  // equivalence (ultrametric); a cluster of size k gives k(k-1) ordered pairs.
  std::vector<int> current;
  std::function<void(int, int, long)> walk = [&](int remaining, int max_part, long pairs) {
    if (remaining == 0) {
      if (pairs == c.close_pairs) c.partitions.push_back(current);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      current.push_back(k);
      walk(remaining - k, k, pairs + static_cast<long>(k) * (k - 1));
      current.pop_back();
    }
  };
  walk(n, n, 0);
  // Inside a cluster v(y_i - y_j) = close > v(y_i), hence v(y_i + y_j) = v(y_i)
  // (v(2) = 0), and x_i - x_j = (y_i - y_j)(y_i + y_j)/20.
  c.within_cluster_x = c.v_close_y + c.v_root_y - 1;
  for (const auto& [v, count] : data.x_distances)
    if (v == c.within_cluster_x) c.x_pairs_at_within = count;
  // y ~ s^5 / sqrt15 gives v(y) = 5 v(s) - 1/2; x0 = s^2 gives
  // v(x_i - x_j) = v(s_i - s_j) + v(s_i + s_j) with v(s_i + s_j) = v(s).
  c.v_s = (c.v_root_y + Q(1, 2)) / 5;
  c.close_s_distance = c.within_cluster_x - c.v_s;
  const bool two_fives = c.partitions.size() == 1 && c.partitions.front() == std::vector<int>{5, 5};
  c.pass = two_fives && far.first < close.first && c.x_pairs_at_within >= c.close_pairs &&
           c.close_s_distance > c.v_s;
  c.details = "cluster sizes " + std::string(two_fives ? "{5,5}" : "not uniquely {5,5}") + "; within-cluster v(dx) = " +
              to_string(c.within_cluster_x) + " (" + std::to_string(c.x_pairs_at_within) + " ordered pairs observed, " +
              std::to_string(c.close_pairs) + " needed); v(s) = " + to_string(c.v_s) +
              "; close s-distance = " + to_string(c.close_s_distance);
  return c;
}

// ---------------------------------------------------------------------------

std::vector<ExtValuation> x0_coefficient_minima(const ShiftedModel& m) {
  std::vector<ExtValuation> out(static_cast<std::size_t>(m.g_plus.degree_in("x0")) + 1);
  for (const auto& [i, coeff] : m.g_plus.collect("x0"))
    out[i] = min_valuation(coeff, {{"y", Q(3, 4)}, {"r", Q(2, 5)}}, 5).value;
  return out;
}

ReductionCertificate verify_dominance(const ShiftedModel& m) {
  ReductionCertificate c;
  c.claim_id = "dominance";
  const auto mv = min_valuation(m.g_plus, {{"x0", Q(1, 2)}, {"y", Q(3, 4)}, {"r", Q(2, 5)}}, 5);
  c.minimum = mv.value;
  c.dominant = mv.witnesses;
  std::vector<Monomial> want{Monomial("x0", 5), Monomial("x0"), Monomial("y", 2)};
  std::vector<Monomial> got = mv.witnesses;
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  SymbolicPolynomial rest = m.g_plus;
  for (const auto& w : mv.witnesses) {
    c.zero_part.add_term(w, m.g_plus.coefficient(w));
    rest.add_term(w, -m.g_plus.coefficient(w));
  }
  c.residual_min = min_valuation(rest, {{"x0", Q(1, 2)}, {"y", Q(3, 4)}, {"r", Q(2, 5)}}, 5).value;
  const NewtonPolygon np(x0_coefficient_minima(m));
  const auto roots = np.root_valuations();
  const bool polygon_ok = roots.size() == 1 && roots.front() == std::make_pair(Q(1, 2), 5L);
  const bool terms_ok = c.zero_part == P("-x0^5 - 25*x0 + 15*y^2");
  c.pass = mv.value == ExtValuation(Q(5, 2)) && got == want && terms_ok && polygon_ok &&
           c.residual_min > ExtValuation(Q(5, 2));
  c.details = "minimum " + mv.value.str() + " attained by " + monomial_list(mv.witnesses) + "; dominant part " +
              c.zero_part.str() + "; next valuation " + c.residual_min.str() + "; x0-polygon " +
              (polygon_ok ? "gives five roots of valuation 1/2" : "does not give five roots of valuation 1/2");
  return c;
}

std::map<Monomial, unsigned long> genus_two_residue(const ReductionCertificate& c) {
  std::map<Monomial, unsigned long> out;
  for (const auto& [m, v] : c.zero_part.terms()) {
    const unsigned long r = residue_mod(v, 5);
    if (r != 0) out[m] = r;
  }
  return out;
}

ReductionCertificate verify_reduction(const std::string& claim_id, const ShiftedModel& m) {
  ReductionCertificate c;
  c.claim_id = claim_id;
  if (claim_id == "genus-two") {
    SymbolTable t = r_table();
    t.add("alpha", Q(1, 2), 2, P("5"));
    t.add("beta", Q(3, 4), 2, P("5*alpha"));
    t.add("x1", Q(0));
    t.add("y1", Q(0));
    const auto scaled = substitute_all(m.g_plus, {{"x0", P("alpha*x1")}, {"y", P("beta*y1")}}) * P("beta^-2/15");
    const auto e = normal_form(scaled, t);
    const auto [zero, rest] = split_zero(e, t);
    c.zero_part = zero;
    c.minimum = min_valuation(e, t).value;
    c.residual_min = min_valuation(rest, t).value;
    const auto expected = split_zero(
        normal_form(P("y1^2 - alpha^5/(15*beta^2)*x1^5 - alpha^5/(15*beta^2)*25/alpha^4*x1"), t), t).first;
    const auto residue = genus_two_residue(c);
    const std::map<Monomial, unsigned long> want{{Monomial("y1", 2), 1}, {Monomial("x1", 5), 3}, {Monomial("x1"), 3}};
    c.pass = c.minimum == ExtValuation(0) && c.residual_min > ExtValuation(0) && zero == expected && residue == want;
    c.details = "valuation-0 part " + zero.str() + " (expected " + expected.str() + "); residual minimum " +
                c.residual_min.str() + "; residue " + (residue == want ? "y1^2 = 2*x1^5 + 2*x1" : "differs");
    return c;
  }
  if (claim_id == "integral") {
    const HenselCertificate h = hensel_certificate(m);
    if (!(h.delta_bound > ExtValuation(0))) {
      c.details = "no positive error bound from the Hensel certificate";
      return c;
    }
    SymbolTable t = r_table();
    t.add("sqrt15", Q(1, 2), 2, P("15"));
    t.add("alpha", Q(6, 25));
    t.add("beta", Q(3, 10));
    t.add("delta", h.delta_bound.value());
    t.add("s0", Q(0));
    t.add("u0", Q(0));
    const auto fiber = plus_curve_model().fiber;
    const auto sub = substitute_all(fiber, {{"x", P("r + alpha^2*s0^2")},
                                            {"y", P("alpha^5*s0^5*sqrt15^-1*(1 + delta)")},
                                            {"u", P("beta*u0")}});
    const auto e = normal_form(sub * P("beta^-2*r^-1"), t);
    const auto [zero, rest] = split_zero(e, t);
    c.zero_part = zero;
    c.minimum = min_valuation(e, t).value;
    c.residual_min = min_valuation(rest, t).value;
    const auto expected_full = normal_form(P("u0^2 - alpha^5*sqrt15^-1*beta^-1*r^-1*s0^5*u0 + 5*beta^-2*r^-1"), t);
    const auto expected = split_zero(expected_full, t).first;
    const auto v_lin = min_valuation(normal_form(P("alpha^5*sqrt15^-1*beta^-1*r^-1"), t), t).value;
    const auto v_const = min_valuation(normal_form(P("5*beta^-2*r^-1"), t), t).value;
    c.pass = c.minimum == ExtValuation(0) && c.residual_min > ExtValuation(0) && zero == expected &&
             v_lin == ExtValuation(0) && v_const == ExtValuation(0);
    c.details = "coefficient valuations " + v_lin.str() + " and " + v_const.str() + "; delta valuation " +
                h.delta_bound.str() + "; residual minimum " + c.residual_min.str() + "; valuation-0 part " +
                (zero == expected ? "matches" : "differs from") + " the reduced equation";
    return c;
  }
  throw MathError("unknown reduction claim " + claim_id);
}

HenselCertificate hensel_certificate(const ShiftedModel& m) {
  HenselCertificate c;
  c.lo = Q(1, 5);
  c.hi = Q(1, 4);
  SymbolTable t = r_table();
  t.add("sqrt15", Q(1, 2), 2, P("15"));
  c.h = normal_form(substitute_all(m.g_plus, {{"x0", P("s^2")}, {"y", P("s^5*y*sqrt15^-1")}}) * P("s^-10"), t);
  const std::map<std::string, ParamValuation> assign{
      {"s", {Q(0), Q(1)}}, {"sqrt15", {Q(1, 2), Q(0)}}, {"r", {Q(2, 5), Q(0)}}, {"y", {Q(0), Q(0)}}};
  const auto h1 = c.h.specialize({{"y", Q(1)}});
  const auto dh1 = c.h.derivative("y").specialize({{"y", Q(1)}});
  c.h1 = valuation_envelope(h1, assign, 5);
  c.dh1 = valuation_envelope(dh1, assign, 5);
  c.h1_lo = c.h1.at(c.lo);
  c.h1_hi = c.h1.at(c.hi);
  c.dh1_lo = c.dh1.at(c.lo);
  c.dh1_hi = c.dh1.at(c.hi);
  c.dh1_unique_lo = c.dh1.unique_at(c.lo);
  c.dh1_unique_hi = c.dh1.unique_at(c.hi);

  // An affine piece that is >= 0 at both ends and not 0 at both is > 0 inside.
  auto positive_inside = [&](const ParamValuation& v) {
    const Rational a = v.at(c.lo), b = v.at(c.hi);
    return a >= 0 && b >= 0 && (a > 0 || b > 0);
  };
  c.h1_positive_open = !c.h1.is_infinite() &&
                       std::all_of(c.h1.pieces().begin(), c.h1.pieces().end(),
                                   [&](const Envelope::Piece& p) { return positive_inside(p.value); });
  int zero_pieces = 0;
  bool others_positive = true;
  for (const auto& p : c.dh1.pieces()) {
    if (p.value == ParamValuation{Q(0), Q(0)})
      ++zero_pieces;
    else
      others_positive = others_positive && positive_inside(p.value);
  }
  c.dh1_zero_open = zero_pieces == 1 && others_positive;
  c.h1_positive_closed = c.h1_lo > ExtValuation(0) && c.h1_hi > ExtValuation(0);
  c.dh1_zero_closed = c.dh1_lo == ExtValuation(0) && c.dh1_hi == ExtValuation(0);
  c.coefficients_integral = true;
  for (const auto& [k, coeff] : c.h.collect("y")) {
    const auto env = valuation_envelope(coeff, assign, 5);
    c.coefficients_integral = c.coefficients_integral && env.minimum_on(c.lo, c.hi) >= ExtValuation(0);
  }
  c.delta_lambda = Q(6, 25);
  c.delta_bound = c.h1.at(c.delta_lambda);
  c.details = "v(h(1)) envelope " + c.h1_lo.str() + " at 1/5, " + c.h1_hi.str() + " at 1/4, " +
              c.delta_bound.str() + " at 6/25; v(h'(1)) envelope " + c.dh1_lo.str() +
              (c.dh1_unique_lo ? "" : " (tie)") + " at 1/5, " + c.dh1_hi.str() + (c.dh1_unique_hi ? "" : " (tie)") +
              " at 1/4; open annulus " + (c.pass_open() ? "certified" : "not certified") + "; closed interval " +
              (c.pass_closed() ? "certified" : "not certified");
  return c;
}

ReductionCertificate fiber_square_identity() {
  ReductionCertificate c;
  c.claim_id = "z_identity";
  const auto [q, r] = divide(P("(2*x*u - y)^2 - (y^2 - 20*x)"), plus_curve_model().fiber);
  c.quotient = q;
  c.pass = r.is_zero() && q == P("4*x");
  c.details = "quotient " + q.str() + ", remainder " + r.str();
  return c;
}

}  // namespace x0lab::curve125
