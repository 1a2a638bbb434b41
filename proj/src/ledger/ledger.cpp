#include "x0lab/ledger/ledger.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace x0lab::ledger {

namespace {

std::vector<std::pair<long, int>> factor(long n) {
  std::vector<std::pair<long, int>> out;
  for (long q = 2; q * q <= n; ++q) {
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e > 0) out.push_back({q, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long legendre(long a, long p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  long r = 1, b = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

long euler_phi(long n) {
  long out = n;
  for (const auto& [q, e] : factor(n)) out = out / q * (q - 1);
  return out;
}

}  // namespace

long genus_x0(long N) {
  if (N < 1) throw MathError("N must be positive");
  const auto fs = factor(N);
  Integer mu = N;
  for (const auto& [q, e] : fs) mu = mu / q * (q + 1);
  long nu2 = N % 4 == 0 ? 0 : 1, nu3 = N % 9 == 0 ? 0 : 1;
  for (const auto& [q, e] : fs) {
    if (nu2 != 0) nu2 *= q == 2 ? 1 : 1 + legendre(-1, q);
    if (nu3 != 0) nu3 *= q == 3 ? 1 : (q == 2 ? 0 : 1 + legendre(-3, q));
  }
  long cusps = 0;
  for (long d = 1; d <= N; ++d)
    if (N % d == 0) cusps += euler_phi(std::gcd(d, N / d));
  const Rational g = 1 + Rational(mu) / 12 - Rational(nu2) / 4 - Rational(nu3) / 3 - Rational(cusps) / 2;
  if (g.get_den() != 1 || g < 0) throw VerificationError("non-integral genus for N = " + std::to_string(N));
  return g.get_num().get_si();
}

long SSClassSurvey::total() const {
  long n = 0;
  for (const auto& [a, c] : entries) n += c;
  return n;
}

SSClassSurvey ss_survey(long p) {
  if (p <= 3 || !is_prime(p)) throw MathError("p must be a prime > 3");
  static constexpr long kExtra[12] = {0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 2};
  const long total = p / 12 + kExtra[p % 12];
  const long n6 = p % 3 == 2 ? 1 : 0;
  const long n4 = p % 4 == 3 ? 1 : 0;
  SSClassSurvey s;
  s.p = p;
  if (n6) s.entries.push_back({6, n6});
  if (n4) s.entries.push_back({4, n4});
  if (total - n6 - n4 > 0) s.entries.push_back({2, total - n6 - n4});
  for (const auto& [a, c] : s.entries) s.mass += Rational(c) / a;
  if (s.mass != make_rational(p - 1, 24)) throw VerificationError("mass formula fails for p = " + std::to_string(p));
  return s;
}

std::vector<long> supersingular_residues(long p) {
  if (p <= 3 || !is_prime(p)) throw MathError("p must be a prime > 3");
  auto count = [p](long a, long b) {
    long n = 1;
    for (long x = 0; x < p; ++x) n += 1 + legendre((x * x % p * x + a * x + b) % p, p);
    return n;
  };
  std::vector<long> out;
  for (long j = 0; j < p; ++j) {
    long a, b;
    if (j == 0) {
      a = 0;
      b = 1;
    } else if (j == 1728 % p) {
      a = 1;
      b = 0;
    } else {
      // y^2 = x^3 + 3k x + 2k, k = j / (1728 - j)
      const long den = ((1728 - j) % p + p) % p;
      long inv = 1;
      for (long e = p - 2, base = den; e > 0; e >>= 1, base = base * base % p)
        if (e & 1) inv = inv * base % p;
      const long k = j * inv % p;
      a = 3 * k % p;
      b = 2 * k % p;
    }
    if (count(a, b) == p + 1) out.push_back(j);
  }
  return out;
}

ComponentBudget component_budget(long p, std::optional<long> g_E, std::optional<std::vector<long>> ordinary_genera) {
  const SSClassSurvey survey = ss_survey(p);
  ComponentBudget b;
  b.p = p;
  b.curve_genus = genus_x0(p * p * p);
  b.ordinary_genera = ordinary_genera.value_or(std::vector<long>(6, 0));
  for (const auto& [aut, count] : survey.entries)
    for (long n = 0; n < count; ++n) {
      SSComponents c;
      c.aut_order = aut;
      c.e_genus = g_E.value_or(0);
      const long i = aut / 2;
      if ((p + 1) % i != 0) throw VerificationError("i does not divide p + 1");
      c.cm_count = 2 * (p + 1) / i;
      c.cm_genus = (p - 1) / 2;
      b.per_ss.push_back(c);
    }
  for (const auto& c : b.per_ss) b.total_known += c.al_genus + 2 * c.e_genus + c.cm_count * c.cm_genus;
  for (long g : b.ordinary_genera) b.total_known += g;
  b.exact = b.total_known == b.curve_genus;
  if (b.total_known > b.curve_genus)
    throw VerificationError("component genera " + std::to_string(b.total_known) + " exceed g(X_0(" +
                            std::to_string(p * p * p) + ")) = " + std::to_string(b.curve_genus));
  if (p == 5 && !b.exact)
    throw VerificationError("p = 5 budget " + std::to_string(b.total_known) + " != " + std::to_string(b.curve_genus));
  return b;
}

GraphSpec parse_graph(const std::string& text) {
  GraphSpec g;
  std::istringstream in(text);
  std::string line;
  for (long lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    auto fail = [lineno](const std::string& why) {
      return MathError("graph line " + std::to_string(lineno) + ": " + why);
    };
    std::string a, b, extra;
    if (kind == "vertex") {
      long genus = 0;
      if (!(ls >> a >> genus) || (ls >> extra)) throw fail("expected 'vertex <id> <genus>'");
      if (genus < 0) throw fail("negative genus");
      for (const auto& [id, gv] : g.vertices)
        if (id == a) throw fail("duplicate vertex " + a);
      g.vertices.push_back({a, genus});
    } else if (kind == "edge") {
      if (!(ls >> a >> b) || (ls >> extra)) throw fail("expected 'edge <id> <id>'");
      g.edges.push_back({a, b});
    } else {
      throw fail("unknown keyword " + kind);
    }
  }
  return g;
}

long graph_genus(const GraphSpec& spec) {
  if (spec.vertices.empty()) throw MathError("empty graph");
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < spec.vertices.size(); ++k) index[spec.vertices[k].first] = k;
  std::vector<std::size_t> parent(spec.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : spec.edges) {
    if (!index.count(a) || !index.count(b)) throw MathError("edge references unknown vertex");
    parent[find(index[a])] = find(index[b]);
  }
  for (std::size_t k = 0; k < parent.size(); ++k)
    if (find(k) != find(0)) throw MathError("graph is disconnected");
  long g = 0;
  for (const auto& [id, genus] : spec.vertices) g += genus;
  return g + static_cast<long>(spec.edges.size()) - static_cast<long>(spec.vertices.size()) + 1;
}

}  // namespace x0lab::ledger
