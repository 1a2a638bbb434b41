#include "x0lab/quatlab/quatlab.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "x0lab/exactmath/symbols.hpp"

namespace x0lab::quatlab {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long pow_mod(long b, long e, long m) {
  long r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

AlgebraParams default_params(long p) {
  if (p < 3 || !is_prime(p)) throw MathError("p must be an odd prime");
  for (long a = 2; a < p; ++a)
    if (pow_mod(a, (p - 1) / 2, p) == p - 1) return {p, a};
  throw MathError("no non-residue found");
}

Abar::Abar(AlgebraParams params) : params_(params) {
  const long p = params_.p;
  if (p < 3 || !is_prime(p)) throw MathError("p must be an odd prime");
  params_.alpha = ((params_.alpha % p) + p) % p;
  if (pow_mod(params_.alpha, (p - 1) / 2, p) != p - 1)
    throw MathError("alpha is not a quadratic non-residue mod " + std::to_string(p));
  const long al = params_.alpha;
  auto e = [p](long a, long b, long c, long d) {
    return std::array<long, 4>{((a % p) + p) % p, ((b % p) + p) % p, ((c % p) + p) % p, ((d % p) + p) % p};
  };
  // basis order 1, i, e_j, e_k
  table_[0][0] = e(1, 0, 0, 0);
  table_[0][1] = e(0, 1, 0, 0);
  table_[0][2] = e(0, 0, 1, 0);
  table_[0][3] = e(0, 0, 0, 1);
  table_[1][0] = e(0, 1, 0, 0);
  table_[1][1] = e(al, 0, 0, 0);
  table_[1][2] = e(0, 0, 0, 1);
  table_[1][3] = e(0, 0, al, 0);
  table_[2][0] = e(0, 0, 1, 0);
  table_[2][1] = e(0, 0, 0, -1);
  table_[2][2] = e(0, 0, 0, 0);
  table_[2][3] = e(0, 0, 0, 0);
  table_[3][0] = e(0, 0, 0, 1);
  table_[3][1] = e(0, 0, -al, 0);
  table_[3][2] = e(0, 0, 0, 0);
  table_[3][3] = e(0, 0, 0, 0);

  associative_ = true;
  for (int r = 0; r < 4 && associative_; ++r)
    for (int s = 0; s < 4 && associative_; ++s)
      for (int t = 0; t < 4 && associative_; ++t) {
        const AbarElement x = basis(r), y = basis(s), z = basis(t);
        associative_ = mul(mul(x, y), z) == mul(x, mul(y, z));
      }
  if (!associative_) throw VerificationError("structure constants are not associative");
}

long Abar::mod(long v) const { return ((v % params_.p) + params_.p) % params_.p; }

AbarElement Abar::element(long a, long b, long c, long d) const { return {mod(a), mod(b), mod(c), mod(d)}; }

AbarElement Abar::basis(int r) const {
  std::array<long, 4> v{};
  v[r] = 1;
  return {v[0], v[1], v[2], v[3]};
}

AbarElement Abar::mul(const AbarElement& x, const AbarElement& y) const {
  const std::array<long, 4> xs{x.a, x.b, x.c, x.d}, ys{y.a, y.b, y.c, y.d};
  std::array<long, 4> out{};
  for (int r = 0; r < 4; ++r) {
    if (xs[r] == 0) continue;
    for (int s = 0; s < 4; ++s) {
      if (ys[s] == 0) continue;
      const long k = xs[r] * ys[s] % params_.p;
      for (int t = 0; t < 4; ++t) out[t] = (out[t] + k * table_[r][s][t]) % params_.p;
    }
  }
  return {out[0], out[1], out[2], out[3]};
}

AbarElement Abar::add(const AbarElement& x, const AbarElement& y) const {
  return element(x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d);
}

AbarElement Abar::neg(const AbarElement& x) const { return element(-x.a, -x.b, -x.c, -x.d); }

bool Abar::is_unit(const AbarElement& x) const { return mod(x.a * x.a - params_.alpha * x.b % params_.p * x.b) != 0; }

AbarElement Abar::inverse(const AbarElement& x) const {
  const long n = mod(x.a * x.a - params_.alpha * x.b % params_.p * x.b);
  if (n == 0) throw MathError("not a unit: " + str(x));
  const long ni = pow_mod(n, params_.p - 2, params_.p);
  // (a + bi + C)^-1 = w - w C w with w = (a - bi) / n
  const AbarElement w = element(x.a * ni, -x.b * ni, 0, 0);
  const AbarElement nil{0, 0, x.c, x.d};
  return add(w, neg(mul(mul(w, nil), w)));
}

AbarElement Abar::conjugate(const AbarElement& u, const AbarElement& x) const { return mul(mul(u, x), inverse(u)); }

std::string Abar::str(const AbarElement& x) const {
  auto sym = [this](long v) { return v > params_.p / 2 ? v - params_.p : v; };
  std::ostringstream os;
  const std::array<std::pair<long, const char*>, 4> parts{
      {{sym(x.a), ""}, {sym(x.b), "i"}, {sym(x.c), "e_j"}, {sym(x.d), "e_k"}}};
  bool first = true;
  for (const auto& [v, name] : parts) {
    if (v == 0) continue;
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    const long m = v < 0 ? -v : v;
    if (*name == '\0') os << m;
    else if (m == 1) os << name;
    else os << m << name;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

bool nilradical_is_ideal(const Abar& A) {
  const long p = A.p();
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      for (long c = 0; c < p; ++c)
        for (long d = 0; d < p; ++d) {
          const AbarElement x{a, b, c, d};
          for (long c2 = 0; c2 < p; ++c2)
            for (long d2 = 0; d2 < p; ++d2) {
              const AbarElement n{0, 0, c2, d2};
              if (!A.mul(x, n).in_nilradical() || !A.mul(n, x).in_nilradical()) return false;
            }
        }
  return true;
}

OrbitReport orbit_analysis(const AlgebraParams& params) {
  const Abar A(params);
  const long p = A.p(), al = A.params().alpha;
  OrbitReport rep;
  rep.params = A.params();

  std::vector<AbarElement> units;
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      if (A.is_unit({a, b, 0, 0})) units.push_back({a, b, 0, 0});
  std::vector<AbarElement> inverses;
  for (const auto& u : units) inverses.push_back(A.inverse(u));

  rep.stabilizers_scalar = true;
  rep.orbit_sizes = true;
  std::map<AbarElement, long> orbit_id;
  std::map<long, std::set<long>> invariant_orbits;
  for (long c = 0; c < p; ++c)
    for (long d = 0; d < p; ++d) {
      if (c == 0 && d == 0) continue;
      const AbarElement x{0, 0, c, d};
      std::set<AbarElement> orbit;
      long stab = 0;
      bool scalar = true;
      for (std::size_t k = 0; k < units.size(); ++k) {
        const AbarElement y = A.mul(A.mul(units[k], x), inverses[k]);
        orbit.insert(y);
        if (y == x) {
          ++stab;
          scalar = scalar && units[k].b == 0;
        }
      }
      if (!scalar || stab != p - 1) rep.stabilizers_scalar = false;
      if (static_cast<long>(orbit.size()) != p + 1) rep.orbit_sizes = false;
      if (static_cast<long>(orbit.size()) * stab != p * p - 1) rep.orbit_sizes = false;
      if (!orbit_id.count(x)) {
        const long id = static_cast<long>(rep.orbits.size());
        const long inv = A.mod(c * c - al * d % p * d);
        rep.orbits.push_back({static_cast<long>(orbit.size()), x, inv});
        for (const auto& y : orbit) orbit_id[y] = id;
      }
      invariant_orbits[A.mod(c * c - al * d % p * d)].insert(orbit_id.at(x));
    }

  rep.orbit_count = static_cast<long>(rep.orbits.size()) == p - 1;
  // x1 ~ x2 iff equal invariants: each invariant value owns exactly one orbit
  rep.invariant_separates = static_cast<long>(invariant_orbits.size()) == p - 1 && !invariant_orbits.count(0);
  for (const auto& [v, ids] : invariant_orbits)
    if (ids.size() != 1) rep.invariant_separates = false;
  rep.stabilizer = rep.stabilizers_scalar ? "F_" + std::to_string(p) + "^* (scalars a, b = 0)" : "not scalar";
  rep.pass = rep.stabilizers_scalar && rep.orbit_sizes && rep.orbit_count && rep.invariant_separates;
  if (!rep.pass) throw VerificationError("orbit analysis failed for p = " + std::to_string(p));
  return rep;
}

namespace {

std::vector<AbarElement> expected_uniformizers(const Abar& A) {
  std::vector<AbarElement> out{A.element(0, 0, 2, 0), A.element(0, 0, -2, 0), A.element(0, 0, 0, 2),
                               A.element(0, 0, 0, -2)};
  for (long s : {3, -3})
    for (long t : {3, -3}) out.push_back(A.element(0, 0, s, t));
  std::sort(out.begin(), out.end());
  return out;
}

SymbolicPolynomial reduce_mod(const SymbolicPolynomial& f, long p) {
  SymbolicPolynomial out;
  for (const auto& [m, c] : f.terms()) {
    if (c.get_den() != 1) throw MathError("non-integral coefficient");
    Integer r = c.get_num() % p;
    if (r < 0) r += p;
    if (r > p / 2) r -= p;
    if (r != 0) out += SymbolicPolynomial(Rational(r), m);
  }
  return out;
}

}  // namespace

UniformizerSearch uniformizer_image_search() {
  using SP = SymbolicPolynomial;
  const Abar A({7, 6});
  UniformizerSearch res;
  const Quaternion<SP> q{SP::symbol("a"), SP::symbol("b"), SP::symbol("c"), SP::symbol("d")};
  res.square = q * q;

  const SP two_a = SP::parse("2*a");
  const bool pure_parts = res.square.b == two_a * q.b && res.square.c == two_a * q.c && res.square.d == two_a * q.d;
  const SP scalar_at_axis = res.square.a.specialize({{"b", 0}, {"c", 0}, {"d", 0}});
  // a != 0 kills b, c, d, leaving a^2 = -28
  res.a_forced_zero = pure_parts && scalar_at_axis == SP::parse("a^2");

  // a = 0: b^2 + 7c^2 + 7d^2 = 28
  const SP norm_eq = -res.square.a.specialize({{"a", 0}}) - SP(28);
  res.b_divisible = norm_eq == SP::parse("b^2 + 7*c^2 + 7*d^2 - 28");
  for (long b = 1; b < 7; ++b)
    if (b * b % 7 == 0) res.b_divisible = false;

  const SP shifted = substitute(norm_eq, "b", SP::parse("7*bb")) / Rational(7);
  res.reduced_condition = reduce_mod(shifted, 7);

  for (long c = 0; c < 7; ++c)
    for (long d = 0; d < 7; ++d)
      if (reduce_mod(res.reduced_condition.specialize({{"c", c}, {"d", d}}), 7).is_zero())
        res.solutions.push_back(A.element(0, 0, c, d));
  std::sort(res.solutions.begin(), res.solutions.end());
  res.matches_expected = res.a_forced_zero && res.b_divisible &&
                         res.reduced_condition == reduce_mod(SP::parse("c^2 + d^2 - 4"), 7) &&
                         res.solutions == expected_uniformizers(A);
  if (!res.matches_expected) throw VerificationError("uniformizer images differ from the expected set");
  return res;
}

AutRefinement aut_refinement() {
  const Abar A({7, 6});
  const UniformizerSearch search = uniformizer_image_search();
  const AbarElement i = A.basis(1);
  AutRefinement res;
  std::set<AbarElement> seen;
  for (const auto& x : search.solutions) {
    if (seen.count(x)) continue;
    std::vector<AbarElement> part;
    AbarElement y = x;
    while (!seen.count(y)) {
      seen.insert(y);
      part.push_back(y);
      y = A.conjugate(i, y);
    }
    std::sort(part.begin(), part.end());
    res.parts.push_back(part);
  }
  std::sort(res.parts.begin(), res.parts.end());

  std::vector<std::vector<AbarElement>> expected;
  for (const auto& [c, d] : std::vector<std::pair<long, long>>{{2, 0}, {0, 2}, {3, -3}, {3, 3}}) {
    std::vector<AbarElement> part{A.element(0, 0, c, d), A.element(0, 0, -c, -d)};
    std::sort(part.begin(), part.end());
    expected.push_back(part);
  }
  std::sort(expected.begin(), expected.end());
  res.matches_expected = res.parts == expected;
  if (!res.matches_expected) throw VerificationError("conjugation by i gives a different partition");
  return res;
}

std::pair<long, long> class_count(long p, long aut_order) {
  if (aut_order != 2 && aut_order != 4 && aut_order != 6) throw MathError("aut_order must be 2, 4 or 6");
  const long i = aut_order / 2;
  if ((p + 1) % i != 0) throw MathError("i does not divide p + 1");
  return {(p + 1) / i, 2 * (p + 1) / i};
}

}  // namespace x0lab::quatlab
