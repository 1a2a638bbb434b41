#include "x0lab/cmlab/cmlab.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "x0lab/exactmath/newton.hpp"
#include "x0lab/exactmath/resultant.hpp"

namespace x0lab::cmlab {

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }

constexpr long kGuardBits = 64;
constexpr long kMaxTerms = 100000;
constexpr int kMaxDoublings = 3;
constexpr double kRoundingTolerance = 1e-6;

double neg_log2(const BigFloat& x) {
  BigFloat l(x.precision());
  mpfr_log2(l.get(), x.get(), MPFR_RNDN);
  return -l.to_double();
}

}  // namespace

bool QuadForm::is_reduced() const {
  if (!(abs(b) <= a && a <= c)) return false;
  if ((abs(b) == a || a == c) && b < 0) return false;
  return true;
}

std::vector<QuadForm> reduced_forms(long D) {
  if (D >= 0 || (D % 4 != 0 && D % 4 != -3)) throw MathError("invalid discriminant " + std::to_string(D));
  std::vector<QuadForm> out;
  for (long a = 1; 3 * a * a <= -D; ++a)
    for (long b = -a + 1; b <= a; ++b) {
      const long num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const long c = num / (4 * a);
      if (c < a || (b < 0 && a == c)) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      out.push_back({a, b, c});
    }
  return out;
}

BigComplex form_tau(const QuadForm& f, mpfr_prec_t bits) {
  const BigFloat two_a(Integer(2 * f.a), bits);
  const BigFloat root = sqrt(BigFloat(Integer(-f.discriminant()), bits));
  return {BigFloat(Integer(-f.b), bits) / two_a, root / two_a};
}

long series_terms(const BigFloat& abs_q, mpfr_prec_t bits) {
  const double per_term = neg_log2(abs_q);
  if (!(per_term > 0)) throw MathError("q-series does not converge");
  const double n = std::ceil(static_cast<double>(bits + kGuardBits) / per_term) + 1;
  if (n > kMaxTerms) throw MathError("q-series truncation length exceeds the supported bound");
  return static_cast<long>(n);
}

BigComplex j_tau(const BigComplex& tau, mpfr_prec_t bits) {
  if (bits < 128) throw MathError("j_tau needs at least 128 bits");
  if (tau.im.sign() <= 0) throw MathError("tau must lie in the upper half plane");
  const BigFloat two_pi = BigFloat::pi(bits).mul_ui(2);
  const BigComplex q = exp(BigComplex(-(two_pi * tau.im), two_pi * tau.re));
  const long n_terms = series_terms(abs(q), bits);

  std::vector<unsigned long> sigma3(static_cast<std::size_t>(n_terms) + 1, 0);
  for (long d = 1; d <= n_terms; ++d) {
    const unsigned long d3 = static_cast<unsigned long>(d) * d * d;
    for (long n = d; n <= n_terms; n += d) sigma3[n] += d3;
  }

  const BigFloat one(1L, bits);
  BigComplex e4(one, BigFloat(bits));
  BigComplex prod(one, BigFloat(bits));
  BigComplex qn = q;
  for (long n = 1; n <= n_terms; ++n) {
    e4 = e4 + BigComplex(qn.re.mul_ui(240 * sigma3[n]), qn.im.mul_ui(240 * sigma3[n]));
    prod = prod * BigComplex(one - qn.re, -qn.im);
    qn = qn * q;
  }
  const BigComplex p2 = prod * prod;
  const BigComplex p4 = p2 * p2;
  const BigComplex p8 = p4 * p4;
  const BigComplex p16 = p8 * p8;
  const BigComplex delta = q * p16 * p8;
  return e4 * e4 * e4 / delta;
}

long initial_precision(const std::vector<QuadForm>& forms) {
  if (forms.empty()) throw MathError("no forms");
  const double root = std::sqrt(static_cast<double>(Integer(-forms.front().discriminant()).get_d()));
  const double ln2 = std::log(2.0);
  double coeff_bits = 0;
  double q_max_bits = 1e300;
  for (const auto& f : forms) {
    const double bits = std::numbers::pi * root / (f.a.get_d() * ln2);  // log2(1/|q|)
    coeff_bits += bits + 2;
    q_max_bits = std::min(q_max_bits, bits);
  }
  const double h = static_cast<double>(forms.size());
  const double policy = 256 + 10 * h * q_max_bits;
  const double need = coeff_bits + 128;
  const long bits = static_cast<long>(std::ceil(std::max(policy, need) / 64.0)) * 64;
  return bits;
}

namespace {

struct Attempt {
  std::vector<Integer> coeffs;
  double max_error = 0;
  bool rounded = false;
  std::vector<BigComplex> roots;
};

Attempt compute(std::size_t count, mpfr_prec_t bits, const std::function<BigComplex(std::size_t, mpfr_prec_t)>& tau_of) {
  Attempt out;
  std::vector<BigComplex> poly{BigComplex(BigFloat(1L, bits), BigFloat(bits))};
  for (std::size_t i = 0; i < count; ++i) {
    const BigComplex j = j_tau(tau_of(i, bits), bits);
    out.roots.push_back(j);
    // poly *= (X - j)
    std::vector<BigComplex> next(poly.size() + 1, BigComplex(bits));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] = next[k + 1] + poly[k];
      next[k] = next[k] - poly[k] * j;
    }
    poly = std::move(next);
  }
  for (const auto& c : poly) {
    const Integer r = c.re.round();
    const double err = std::max(abs(c.re - BigFloat(r, bits)).to_double(), abs(c.im).to_double());
    out.max_error = std::max(out.max_error, err);
    out.coeffs.push_back(r);
  }
  out.rounded = out.max_error < kRoundingTolerance;
  return out;
}

double log2_max_residual(const std::vector<Integer>& coeffs, const std::vector<BigComplex>& roots, mpfr_prec_t bits) {
  double worst = -1e300;
  for (const auto& j : roots) {
    BigComplex acc(bits);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      acc = acc * j + BigComplex(BigFloat(*it, bits), BigFloat(bits));
    const BigFloat m = abs(acc);
    const double l = m.is_zero() ? -1e300 : -neg_log2(m);
    worst = std::max(worst, l);
  }
  return worst;
}

std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}

std::map<long, ClassPolynomial>& memo() {
  static std::map<long, ClassPolynomial> m;
  return m;
}

ZPoly to_zpoly(const std::vector<Integer>& c) { return ZPoly(std::vector<Integer>(c)); }

}  // namespace

ClassPolynomial class_polynomial(long D, const ClassPolyOptions& options) {
  const auto forms = reduced_forms(D);
  {
    std::lock_guard lock(memo_mutex());
    const auto it = memo().find(D);
    if (it != memo().end() && it->second.precision_used >= options.min_precision) return it->second;
  }
  std::optional<ClassPolyCache> cache;
  if (options.cache_dir) {
    cache.emplace(*options.cache_dir);
    if (auto hit = cache->lookup(D); hit && hit->precision_used >= options.min_precision) {
      std::lock_guard lock(memo_mutex());
      memo()[D] = *hit;
      return *hit;
    }
  }

  auto tau_of = [&](std::size_t i, mpfr_prec_t bits) { return form_tau(forms[i], bits); };
  long bits = std::max(initial_precision(forms), options.min_precision);
  for (int attempt = 0; attempt <= kMaxDoublings; ++attempt, bits *= 2) {
    const Attempt base = compute(forms.size(), bits, tau_of);
    if (!base.rounded) continue;
    const Attempt confirm = compute(forms.size(), 2 * bits, tau_of);
    if (!confirm.rounded || confirm.coeffs != base.coeffs) continue;
    const double residual = log2_max_residual(base.coeffs, confirm.roots, 2 * bits);
    if (residual >= -static_cast<double>(bits) / 2) continue;
    ClassPolynomial out;
    out.discriminant = D;
    out.poly = to_zpoly(base.coeffs);
    out.forms = forms;
    out.precision_used = bits;
    out.max_rounding_error = base.max_error;
    out.log2_max_residual = residual;
    if (cache) cache->store(out);
    std::lock_guard lock(memo_mutex());
    memo()[D] = out;
    return out;
  }
  throw VerificationError("class polynomial of " + std::to_string(D) + " not stable after " +
                          std::to_string(kMaxDoublings) + " precision doublings");
}

ClassPolyCache::ClassPolyCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<ClassPolynomial> ClassPolyCache::lookup(long D) const {
  std::ifstream in(file());
  if (!in) return std::nullopt;
  std::optional<ClassPolynomial> found;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    long d = 0, h = 0, prec = 0;
    if (!(fields >> d >> h >> prec) || d != D || h < 1) continue;
    std::vector<Integer> coeffs;
    std::string tok;
    while (fields >> tok) {
      Integer v;
      if (v.set_str(tok, 10) != 0) break;
      coeffs.push_back(v);
    }
    if (static_cast<long>(coeffs.size()) != h + 1 || coeffs.back() != 1) continue;
    ClassPolynomial p;
    p.discriminant = D;
    p.poly = to_zpoly(coeffs);
    p.precision_used = prec;
    p.from_cache = true;
    found = std::move(p);
  }
  if (found) {
    found->forms = reduced_forms(D);
    if (static_cast<long>(found->forms.size()) != found->poly.degree()) return std::nullopt;
  }
  return found;
}

void ClassPolyCache::store(const ClassPolynomial& h) const {
  std::filesystem::create_directories(dir_);
  std::ostringstream record;
  record << h.discriminant << ' ' << h.poly.degree() << ' ' << h.precision_used;
  for (const auto& c : h.poly.coeffs()) record << ' ' << c.get_str();
  record << '\n';

  std::ostringstream tag;
  tag << ".tmp." << ::getpid() << '.' << std::hash<std::thread::id>{}(std::this_thread::get_id());
  const auto tmp = file().string() + tag.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    std::ifstream old(file(), std::ios::binary);
    if (old) out << old.rdbuf();
    out << record.str();
    if (!out) throw std::runtime_error("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, file());
}

std::string CongruenceSpec::str() const {
  std::string base = center == 0 ? "j" : "(j - " + std::to_string(center) + ")";
  return "v_" + std::to_string(p) + "(" + base + "^" + std::to_string(exponent) + (sign < 0 ? " - " : " + ") +
         m.get_str() + ") > " + std::to_string(bound);
}

CongruenceSpec congruence_spec(long p, long D) {
  CongruenceSpec s;
  s.p = p;
  if (p == 5) {
    s.center = 0, s.exponent = 2, s.m = 125, s.bound = 3;
  } else if (p == 7) {
    s.center = 1728, s.exponent = 4, s.m = 2401, s.bound = 4;
  } else if (p == 13) {
    s.center = 5, s.exponent = 14, s.m = 62748517, s.bound = 7;
  } else {
    throw MathError("no congruence spec for p = " + std::to_string(p));
  }
  if (D % p != 0 || (D / p) % p == 0)
    throw MathError(std::to_string(p) + " does not exactly divide " + std::to_string(D));
  const long r = (((D / -p) % p) + p) % p;
  bool square = false;
  for (long x = 1; x < p; ++x) square = square || (x * x) % p == r;
  s.sign = square ? -1 : 1;
  return s;
}

CongruenceResult congruence_check(const ZPoly& h, const CongruenceSpec& spec) {
  if (h.degree() < 1 || h.leading() != 1) throw MathError("class polynomial must be monic of positive degree");
  ZPoly shifted = ZPoly({Integer(-spec.center), Integer(1)}).pow(static_cast<unsigned>(spec.exponent));
  shifted = shifted + ZPoly(Integer(spec.sign * spec.m));
  std::vector<ZPoly> gc;
  for (int k = 0; k <= shifted.degree(); ++k)
    gc.push_back(k == 0 ? ZPoly({Integer(-shifted[0]), Integer(1)}) : ZPoly(Integer(-shifted[k])));
  std::vector<ZPoly> hc;
  for (const auto& c : h.coeffs()) hc.emplace_back(c);

  CongruenceResult out;
  out.g = resultant_in_parameter(UPoly<ZPoly>(hc), UPoly<ZPoly>(gc));
  if (out.g.is_zero()) throw MathError("congruence resultant vanishes identically");
  ZPoly g = out.g;
  g.strip_x_power();
  if (g.degree() >= 1) {
    out.root_valuations = NewtonPolygon(coefficient_valuations(g, static_cast<unsigned long>(spec.p))).root_valuations();
    out.min_root_valuation = ExtValuation(out.root_valuations.front().first);
  }
  out.pass = out.min_root_valuation > ExtValuation(spec.bound);
  return out;
}

BigComplex Tau::value(mpfr_prec_t bits) const {
  return {BigFloat(real, bits), BigFloat(imag, bits) * sqrt(BigFloat(radicand, bits))};
}

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows{
      {1, "Z[sqrt(-5)]", -20, {{Q(0), Q(1), 5}, {Q(1, 2), Q(1, 2), 5}}},
      {1, "Z[2sqrt(-5)]", -80, {{Q(0), Q(2), 5}, {Q(2, 3), Q(2, 3), 5}, {Q(4, 3), Q(2, 3), 5}, {Q(0), Q(2, 5), 5}}},
      {1, "Z[3sqrt(-5)]", -180, {{Q(0), Q(3), 5}, {Q(3, 2), Q(3, 2), 5}, {Q(0), Q(3, 5), 5}, {Q(9, 7), Q(3, 7), 5}}},
      {1, "Z[sqrt(-30)]", -120, {{Q(0), Q(1), 30}, {Q(0), Q(1, 2), 30}, {Q(0), Q(1, 3), 30}, {Q(0), Q(1, 5), 30}}},
      {1, "Z[(1+sqrt(-55))/2]", -55,
       {{Q(1, 2), Q(1, 2), 55}, {Q(1, 4), Q(1, 4), 55}, {Q(-1, 4), Q(1, 4), 55}, {Q(1, 2), Q(1, 10), 55}}},
      {1, "Z[sqrt(-70)]", -280, {{Q(0), Q(1), 70}, {Q(0), Q(1, 2), 70}, {Q(0), Q(1, 5), 70}, {Q(0), Q(1, 7), 70}}},
      {2, "Z[sqrt(-10)]", -40, {{Q(0), Q(1), 10}, {Q(0), Q(1, 2), 10}}},
      {2, "Z[2sqrt(-10)]", -160,
       {{Q(0), Q(2), 10}, {Q(0), Q(2, 5), 10}, {Q(4, 7), Q(2, 7), 10}, {Q(2, 11), Q(2, 11), 10}}},
      {2, "Z[(1+sqrt(-15))/2]", -15, {{Q(1, 2), Q(1, 2), 15}, {Q(1, 4), Q(1, 4), 15}}},
      {2, "Z[sqrt(-15)]", -60, {{Q(0), Q(1), 15}, {Q(0), Q(1, 3), 15}}},
      {2, "Z[(1+sqrt(-35))/2]", -35, {{Q(1, 2), Q(1, 2), 35}, {Q(5, 6), Q(1, 6), 35}}},
      {2, "Z[sqrt(-65)]", -260,
       {{Q(0), Q(1), 65},
        {Q(1, 2), Q(1, 2), 65},
        {Q(1, 3), Q(1, 3), 65},
        {Q(-1, 3), Q(1, 3), 65},
        {Q(0), Q(1, 5), 65},
        {Q(1, 6), Q(1, 6), 65},
        {Q(-1, 6), Q(1, 6), 65},
        {Q(1, 2), Q(1, 10), 65}}},
  };
  return rows;
}

CrosscheckResult table_crosscheck(const TableRow& row, const ClassPolyOptions& options) {
  CrosscheckResult out;
  const ClassPolynomial h = class_polynomial(row.discriminant, options);
  out.class_number = static_cast<long>(h.forms.size());
  out.length_matches = static_cast<long>(row.taus.size()) == out.class_number;
  auto tau_of = [&](std::size_t i, mpfr_prec_t bits) { return row.taus[i].value(bits); };
  const long bits = std::max(h.precision_used, initial_precision(h.forms)) * 2;
  const Attempt a = compute(row.taus.size(), bits, tau_of);
  out.from_taus = to_zpoly(a.coeffs);
  out.polynomial_matches = a.rounded && out.from_taus == h.poly;
  out.pass = out.length_matches && out.polynomial_matches;
  out.details = row.order + " (D = " + std::to_string(row.discriminant) + "): " + std::to_string(row.taus.size()) +
                " tau values, h = " + std::to_string(out.class_number) + ", polynomial " +
                (out.polynomial_matches ? "matches" : "differs");
  return out;
}

}  // namespace x0lab::cmlab
