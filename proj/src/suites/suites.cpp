#include "x0lab/suites/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "x0lab/cmlab/cmlab.hpp"
#include "x0lab/curve125/curve125.hpp"
#include "x0lab/exactmath/newton.hpp"
#include "x0lab/ledger/ledger.hpp"
#include "x0lab/modmaps/modmaps.hpp"
#include "x0lab/quatlab/quatlab.hpp"
#include "x0lab/sslab/sslab.hpp"

namespace x0lab::suites {

using json = nlohmann::json;

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }

std::string multiset_str(const std::vector<std::pair<Rational, long>>& m) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < m.size(); ++k) os << (k ? ", " : "") << m[k].first.get_str() << " x" << m[k].second;
  os << "}";
  return os.str();
}

struct Outcome {
  bool pass = false;
  std::string details;
};

// Runs checks in order; each one is isolated from the others' failures.
class Runner {
 public:
  explicit Runner(bool reproducible) : reproducible_(reproducible) {}

  void check(std::string id, std::string claim_ref, const std::function<Outcome()>& body) {
    CheckResult r{std::move(id), std::move(claim_ref), Status::fail, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = body();
      r.status = o.pass ? Status::pass : Status::fail;
      r.details = o.details;
    } catch (const std::exception& e) {
      r.details = std::string("error: ") + e.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    r.elapsed_ms =
        reproducible_ ? 0 : static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count());
    results_.push_back(std::move(r));
  }

  void skip(std::string id, std::string claim_ref, std::string why) {
    results_.push_back({std::move(id), std::move(claim_ref), Status::skipped, std::move(why), 0});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  bool reproducible_;
  std::vector<CheckResult> results_;
};

template <typename T>
class Lazy {
 public:
  explicit Lazy(std::function<T()> make) : make_(std::move(make)) {}
  const T& get() {
    if (!value_) value_ = make_();
    return *value_;
  }

 private:
  std::function<T()> make_;
  std::optional<T> value_;
};

void stable_model_suite(Runner& run) {
  using namespace curve125;
  Lazy<ShiftedModel> model([] { return build_shifted_model(); });
  Lazy<RamificationData> ram([] { return ramification_polynomials(true); });

  run.check("shifted-table-match", "coefficients of the shifted model g+", [&] {
    const auto& m = model.get();
    const auto bad = shifted_model_mismatches(m);
    long nonzero = 0;
    for (const auto& [k, c] : m.cells) nonzero += c.is_zero() ? 0 : 1;
    return Outcome{bad.empty() && nonzero == 16,
                   std::to_string(nonzero) + " nonzero cells, " + std::to_string(bad.size()) + " mismatches"};
  });

  run.check("ram-y-valuations", "valuations of the ramification polynomial in y", [&] {
    const auto& d = ram.get();
    const auto vals = coefficient_valuations(d.p_ram_y, 5);
    const std::vector<ExtValuation> want{ExtValuation(0), ExtValuation(), Q(3), Q(4), Q(4), Q(5),
                                         Q(5),            Q(6),           Q(6), Q(7), Q(7)};
    std::vector<ExtValuation> high_first(vals.rbegin(), vals.rend());
    const auto roots = NewtonPolygon(vals).root_valuations();
    std::string s = "v(a_i), i = 10..0:";
    for (const auto& v : high_first) s += " " + v.str();
    s += "; roots " + multiset_str(roots);
    return Outcome{high_first == want && roots == std::vector<std::pair<Rational, long>>{{Q(7, 10), 10}}, s};
  });

  run.check("y-distances", "pairwise distances of the ramification points in y", [&] {
    const auto& d = ram.get();
    const curve125::DistanceMultiset want{{Q(7, 10), 50}, {Q(4, 5), 40}};
    return Outcome{d.y_distances == want, "got " + multiset_str(d.y_distances) + ", expected " + multiset_str(want)};
  });

  run.check("x-distances", "pairwise distances of the ramification points in x", [&] {
    const auto& d = ram.get();
    const curve125::DistanceMultiset want{{Q(1, 2), 90}};
    return Outcome{d.x_distances == want, "got " + multiset_str(d.x_distances) + ", expected " + multiset_str(want)};
  });

  run.check("cluster-structure", "two clusters of five ramification points", [&] {
    const auto c = cluster_certificate(ram.get());
    return Outcome{c.pass, c.details};
  });

  run.check("dominance", "dominant terms at v(x0) = 1/2, v(y) = 3/4", [&] {
    const auto c = verify_dominance(model.get());
    return Outcome{c.pass, c.details};
  });

  run.check("reduction-genus-two", "reduction to y1^2 = 2x1^5 + 2x1", [&] {
    const auto c = verify_reduction("genus-two", model.get());
    const std::map<Monomial, unsigned long> want{{Monomial("y1", 2), 1}, {Monomial("x1", 5), 3}, {Monomial("x1"), 3}};
    const bool residue = c.pass && genus_two_residue(c) == want;
    return Outcome{residue && c.residual_min > ExtValuation(0), c.details};
  });

  run.check("reduction-integral", "valuation-zero part of the second rescaling", [&] {
    const auto c = verify_reduction("integral", model.get());
    return Outcome{c.pass && c.minimum == ExtValuation(0), c.details};
  });

  run.check("hensel-bounds", "Hensel bounds v(h(1)) > 0, v(h'(1)) = 0 on [1/5, 1/4]", [&] {
    const auto h = hensel_certificate(model.get());
    std::string s = "closed interval: v(h(1)) at ends " + h.h1_lo.str() + ", " + h.h1_hi.str() +
                    "; v(h'(1)) at ends " + h.dh1_lo.str() + ", " + h.dh1_hi.str() + "; open interval " +
                    (h.pass_open() ? "holds" : "fails") + "; " + h.details;
    return Outcome{h.pass_closed(), s};
  });
}

void maps_suite(Runner& run) {
  using namespace modmaps;
  run.check("circle-images", "images of circles under pi5 and pi1", [] {
    const auto a = image_valuation(builtin_map("pi5_t"), ValRegion::circle("u", Q(3, 10)));
    const auto b = image_valuation(builtin_map("pi1_j"), ValRegion::circle("t", Q(3, 2)));
    const auto c = image_valuation(builtin_map("pi1_j"), ValRegion::circle("t", Q(5, 2)));
    const bool ok = a.unique && a.lower_bound == ExtValuation(Q(3, 2)) && b.unique &&
                    b.lower_bound == ExtValuation(Q(3, 2)) && !c.unique && c.lower_bound == ExtValuation(Q(5, 2));
    return Outcome{ok, "v(u)=3/10 -> v(t) " + a.lower_bound.str() + " (" + a.conclusion + "); v(t)=3/2 -> v(j) " +
                           b.lower_bound.str() + " (" + b.conclusion + "); v(t)=5/2 -> v(j) >= " +
                           c.lower_bound.str() + " (" + c.conclusion + ")"};
  });
  run.check("al-fixed-circle", "fixed circles of the Atkin-Lehner involutions", [] {
    const Rational a = al_fixed_circle(builtin_map("w5_t"));
    const Rational b = al_fixed_circle(builtin_map("w25_u"));
    return Outcome{a == Q(3, 2) && b == Q(1, 2), "w5: v(t) = " + a.get_str() + ", w25: v(u) = " + b.get_str()};
  });
  run.check("ramification-image", "ramification points map to t^2 = 125", [] {
    const auto r = ramification_image_polynomial();
    const bool ok = r.pass && r.radical == ZPoly({Integer(-125), Integer(0), Integer(1)});
    return Outcome{ok, "radical " + r.radical.str("t") + "; " + r.details};
  });
  run.check("cm-disk", "CM disk v(j^2 - 125) > 3", [] {
    const auto c = cm_disk_identities();
    return Outcome{c.pass, c.details};
  });
  run.check("e-component-chains", "components over the too-supersingular disk", [] {
    const auto chains = e_component_chains();
    bool ok = chains.size() == 2;
    std::string s;
    for (const auto& ch : chains) {
      ok = ok && ch.pass;
      s += (s.empty() ? "" : "; ") + ch.component + (ch.pass ? " ok" : " fails");
    }
    return Outcome{ok, s};
  });
  run.check("fiber-identity", "fiber of the degree two cover", [] {
    const auto c = curve125::fiber_square_identity();
    return Outcome{c.pass, c.details};
  });
}

void ss_suite(Runner& run) {
  using namespace sslab;
  run.check("psi5-polygon", "Newton polygon of psi5 over 0 < v(t) < 1", [] {
    const auto poly = psi5_polygon();
    const bool ok = poly.breakpoints == std::vector<Rational>{Q(5, 6)} && poly.cells.size() == 2 &&
                    poly.cells[0].vertices == std::vector<long>{0, 10, 12} &&
                    poly.cells[1].vertices == std::vector<long>{0, 12};
    std::string s = "breakpoints:";
    for (const auto& b : poly.breakpoints) s += " " + b.get_str();
    for (const auto& c : poly.cells) {
      s += "; vertices on (" + c.lo.get_str() + ", " + c.hi.get_str() + "):";
      for (long v : c.vertices) s += " " + std::to_string(v);
    }
    return Outcome{ok, s};
  });
  run.check("torsion-profile", "valuations of the 5-torsion points", [] {
    bool ok = true;
    std::string s;
    for (const Rational& lam : {Q(1, 10), Q(1, 2), Q(4, 5), Q(7, 8), Q(19, 20)}) {
      const auto p = torsion_profile(lam);
      const sslab::Multiset want = lam < Q(5, 6) ? sslab::Multiset{{lam / 20, 20}, {(1 - lam) / 4, 4}}
                                                 : sslab::Multiset{{Q(1, 24), 24}};
      const bool here = p.z_valuations == want && p.canonical_subgroup == (lam < Q(5, 6));
      ok = ok && here;
      s += (s.empty() ? "" : "; ") + lam.get_str() + ": " + multiset_str(p.z_valuations);
    }
    return Outcome{ok, s};
  });
  run.check("threshold", "too-supersingular threshold v(j) = 5/2", [] {
    const auto c = too_ss_threshold();
    return Outcome{c.pass && c.breakpoint == Q(5, 6) && c.threshold == Q(5, 2), c.details};
  });
}

std::vector<long> default_discriminants(long p) {
  if (p == 7) return {-28, -84};
  if (p == 13) return {-52, -104};
  std::vector<long> out;
  if (p == 5)
    for (const auto& row : cmlab::table_rows()) out.push_back(row.discriminant);
  return out;
}

void cm_suite(Runner& run, const SuiteConfig& cfg) {
  cmlab::ClassPolyOptions opts;
  opts.min_precision = cfg.precision_bits;
  opts.cache_dir = cfg.cache_dir;
  const std::vector<long> primes = cfg.primes.empty() ? std::vector<long>{5} : cfg.primes;
  std::map<long, int> asserted_case;
  for (long D : cfg.case1) asserted_case[D] = 1;
  for (long D : cfg.case2) asserted_case[D] = 2;
  const bool custom = !cfg.discriminants.empty() || !asserted_case.empty();

  std::set<long> crosschecked;
  for (long p : primes) {
    std::vector<long> discs;
    if (custom) {
      std::set<long> seen;
      for (long D : cfg.discriminants)
        if (seen.insert(D).second) discs.push_back(D);
      for (const auto& [D, c] : asserted_case)
        if (seen.insert(D).second) discs.push_back(D);
    } else {
      discs = default_discriminants(p);
    }
    std::map<long, int> expect_case = asserted_case;
    if (!custom && p == 5)
      for (const auto& row : cmlab::table_rows()) expect_case[row.discriminant] = row.congruence_case;
    if (discs.empty()) {
      run.skip("congruence-p" + std::to_string(p), "CM congruences", "no congruence is stated for p = " + std::to_string(p));
      continue;
    }
    for (long D : discs) {
      const std::string tag = "d" + std::to_string(-D);
      for (const auto& row : cmlab::table_rows()) {
        if (row.discriminant != D || crosschecked.count(D)) continue;
        crosschecked.insert(D);
        run.check("crosscheck-" + tag, "CM tau tables", [&] {
          const auto r = cmlab::table_crosscheck(row, opts);
          const auto h = cmlab::class_polynomial(D, opts);
          const bool stable = h.from_cache || h.max_rounding_error < 1e-6;
          return Outcome{r.pass && stable, r.details + ", precision " + std::to_string(h.precision_used) + " bits"};
        });
      }
      run.check("congruence-p" + std::to_string(p) + "-" + tag, "CM congruence at p = " + std::to_string(p), [&] {
        const auto spec = cmlab::congruence_spec(p, D);
        const auto h = cmlab::class_polynomial(D, opts);
        const auto r = cmlab::congruence_check(h.poly, spec);
        bool ok = r.pass && (h.from_cache || h.max_rounding_error < 1e-6);
        std::string s = spec.str() + ": min root valuation " + r.min_root_valuation.str() + ", h = " +
                        std::to_string(h.poly.degree());
        if (auto it = expect_case.find(D); it != expect_case.end()) {
          const int got = spec.sign < 0 ? 1 : 2;
          if (got != it->second) ok = false;
          s += ", case " + std::to_string(got) + (got == it->second ? "" : " (configured " + std::to_string(it->second) + ")");
        }
        return Outcome{ok, s};
      });
    }
  }
}

void quat_suite(Runner& run, const SuiteConfig& cfg) {
  using namespace quatlab;
  const std::vector<long> primes = cfg.primes.empty() ? std::vector<long>{5, 7, 13, 17} : cfg.primes;
  for (long p : primes) {
    run.check("orbits-p" + std::to_string(p), "orbits of the nilradical under conjugation", [p] {
      const auto r = orbit_analysis(default_params(p));
      return Outcome{r.pass, std::to_string(r.orbits.size()) + " orbits of size " +
                                 std::to_string(r.orbits.empty() ? 0 : r.orbits.front().size) + ", stabilizer " +
                                 r.stabilizer};
    });
  }
  run.check("nilradical-ideal", "nilradical of Abar_p", [] {
    bool ok = true;
    for (long p : {5L, 7L, 13L}) ok = ok && nilradical_is_ideal(Abar(default_params(p)));
    return Outcome{ok, "checked p = 5, 7, 13"};
  });
  run.check("uniformizer-search", "uniformizer images in Abar_7", [] {
    const auto s = uniformizer_image_search();
    const Abar A({7, 6});
    std::string d;
    for (const auto& x : s.solutions) d += (d.empty() ? "" : ", ") + A.str(x);
    return Outcome{s.matches_expected, "{" + d + "}"};
  });
  run.check("aut-refinement", "conjugation by i on the uniformizer class", [] {
    const auto r = aut_refinement();
    const Abar A({7, 6});
    std::string d;
    for (const auto& part : r.parts) {
      d += (d.empty() ? "{" : ", {");
      for (std::size_t k = 0; k < part.size(); ++k) d += (k ? ", " : "") + A.str(part[k]);
      d += "}";
    }
    return Outcome{r.matches_expected && r.parts.size() == 4, d};
  });
  run.check("class-count", "2(p+1)/i classes", [] {
    const bool ok = class_count(7, 4) == std::pair<long, long>{4, 8} && class_count(5, 6) == std::pair<long, long>{2, 4} &&
                    class_count(13, 2) == std::pair<long, long>{14, 28};
    return Outcome{ok, "(7,4) -> (4,8), (5,6) -> (2,4), (13,2) -> (14,28)"};
  });
  run.check("quaternion-norm", "norm form a^2 + b^2 + 7c^2 + 7d^2", [] {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
    auto r = [&]() -> Rational { return make_rational(num(rng), den(rng)); };
    bool ok = true;
    for (int n = 0; n < 100; ++n) {
      const QuatElement x{r(), r(), r(), r()}, y{r(), r(), r(), r()};
      ok = ok && (x * y).norm() == x.norm() * y.norm();
    }
    return Outcome{ok, "100 random pairs"};
  });
}

void ledger_suite(Runner& run, const SuiteConfig& cfg) {
  const std::vector<long> primes = cfg.primes.empty() ? std::vector<long>{5, 7, 13, 17} : cfg.primes;
  const std::map<long, long> known{{25, 0}, {125, 8}, {343, 26}, {2197, 184}, {4913, 417}};
  std::set<long> levels{25};
  for (long p : primes) levels.insert(p * p * p);
  for (long N : levels) {
    run.check("genus-" + std::to_string(N), "genus of X0(N)", [N, &known] {
      const long g = ledger::genus_x0(N);
      auto it = known.find(N);
      return Outcome{it == known.end() || it->second == g, "= " + std::to_string(g)};
    });
  }
  run.check("mass-formula", "Eichler mass formula", [] {
    long count = 0;
    for (long p = 5; p < 100; ++p) {
      bool prime = true;
      for (long d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
      if (!prime) continue;
      ledger::ss_survey(p);
      ++count;
    }
    return Outcome{true, std::to_string(count) + " primes 5 <= p < 100"};
  });
  const std::map<long, long> repr_disc{{5, -20}, {7, -28}, {13, -52}};
  for (long p : primes) {
    const std::string ps = std::to_string(p);
    run.check("ss-survey-p" + ps, "supersingular curves and automorphisms", [p] {
      const auto s = ledger::ss_survey(p);
      std::string d;
      for (const auto& [aut, n] : s.entries) d += (d.empty() ? "" : ", ") + std::to_string(n) + " with |Aut| = " + std::to_string(aut);
      return Outcome{true, d + "; mass " + s.mass.get_str()};
    });
    run.check("budget-p" + ps, "component genus budget", [p, &cfg] {
      const auto b = ledger::component_budget(p, cfg.g_E, cfg.ordinary_genera);
      return Outcome{true, std::to_string(b.total_known) + (b.exact ? " = " : " <= ") + std::to_string(b.curve_genus)};
    });
    auto rd = repr_disc.find(p);
    if (rd == repr_disc.end()) continue;
    run.check("exponent-p" + ps, "exponent (p+1)/i of the congruence", [p, D = rd->second] {
      const auto s = ledger::ss_survey(p);
      if (s.total() != 1) return Outcome{false, "expected a unique supersingular curve"};
      const long e = quatlab::class_count(p, s.entries.front().first).first;
      const auto spec = cmlab::congruence_spec(p, D);
      return Outcome{e == spec.exponent, "(p+1)/i = " + std::to_string(e) + ", exponent " + std::to_string(spec.exponent)};
    });
    run.check("center-p" + ps, "congruence center is the supersingular j", [p, D = rd->second] {
      const auto res = ledger::supersingular_residues(p);
      const long c = cmlab::congruence_spec(p, D).center;
      const bool ok = res.size() == 1 && res.front() == ((c % p) + p) % p;
      return Outcome{ok, "center " + std::to_string(c) + ", supersingular j mod p = " +
                             (res.empty() ? std::string("none") : std::to_string(res.front()))};
    });
  }
  run.check("graph-genus-star", "stable graph of X0(125)", [] {
    const auto g = ledger::parse_graph(
        "vertex c 0\nvertex a 2\nvertex b 2\nvertex d 2\nvertex e 2\nedge c a\nedge c b\nedge c d\nedge c e\n");
    const long n = ledger::graph_genus(g);
    return Outcome{n == ledger::genus_x0(125), "= " + std::to_string(n)};
  });
}

void run_one(const std::string& suite, Runner& run, const SuiteConfig& cfg) {
  if (suite == "stable-model") stable_model_suite(run);
  else if (suite == "maps") maps_suite(run);
  else if (suite == "ss") ss_suite(run);
  else if (suite == "cm") cm_suite(run, cfg);
  else if (suite == "quat") quat_suite(run, cfg);
  else if (suite == "ledger") ledger_suite(run, cfg);
  else throw ConfigError("unknown suite: " + suite);
}

std::vector<long> long_list(const json& v, const std::string& key) {
  if (!v.is_array()) throw ConfigError(key + " must be a list of integers");
  std::vector<long> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) throw ConfigError(key + " must be a list of integers");
    out.push_back(e.get<long>());
  }
  return out;
}

long integer(const json& v, const std::string& key) {
  if (!v.is_number_integer()) throw ConfigError(key + " must be an integer");
  return v.get<long>();
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "fail";
}

const char* version() { return X0LAB_VERSION; }

SuiteConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  SuiteConfig cfg;
  for (const auto& [key, v] : doc.items()) {
    if (key == "primes") cfg.primes = long_list(v, key);
    else if (key == "discriminants.case1") cfg.case1 = long_list(v, key);
    else if (key == "discriminants.case2") cfg.case2 = long_list(v, key);
    else if (key == "discriminants") {
      if (!v.is_object()) throw ConfigError("discriminants must be an object");
      for (const auto& [k2, v2] : v.items()) {
        if (k2 == "case1") cfg.case1 = long_list(v2, "discriminants.case1");
        else if (k2 == "case2") cfg.case2 = long_list(v2, "discriminants.case2");
        else throw ConfigError("unknown key discriminants." + k2);
      }
    } else if (key == "precision_bits") cfg.precision_bits = integer(v, key);
    else if (key == "cache_dir") {
      if (!v.is_string()) throw ConfigError("cache_dir must be a string");
      cfg.cache_dir = v.get<std::string>();
    } else if (key == "g_E") cfg.g_E = integer(v, key);
    else if (key == "ordinary_genera") cfg.ordinary_genera = long_list(v, key);
    else throw ConfigError("unknown config key " + key);
  }
  if (cfg.precision_bits < 0) throw ConfigError("precision_bits must be nonnegative");
  return cfg;
}

std::string config_json(const SuiteConfig& cfg) {
  json j;
  j["primes"] = cfg.primes;
  j["discriminants"] = {{"case1", cfg.case1}, {"case2", cfg.case2}, {"inferred", cfg.discriminants}};
  j["precision_bits"] = cfg.precision_bits;
  j["cache_dir"] = cfg.cache_dir ? json(cfg.cache_dir->string()) : json(nullptr);
  j["g_E"] = cfg.g_E ? json(*cfg.g_E) : json(nullptr);
  j["ordinary_genera"] = cfg.ordinary_genera ? json(*cfg.ordinary_genera) : json(nullptr);
  return j.dump();
}

bool SuiteReport::pass() const {
  return std::none_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == Status::fail; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"stable-model", "maps", "ss", "cm", "quat", "ledger", "all"};
  return names;
}

SuiteReport run_suite(const std::string& suite, const SuiteConfig& config) {
  SuiteReport rep;
  rep.suite = suite;
  rep.version = version();
  rep.config = config_json(config);
  if (suite == "all") {
    for (const auto& name : suite_names()) {
      if (name == "all") continue;
      Runner run(config.reproducible);
      run_one(name, run, config);
      for (auto& r : run.take()) {
        r.id = name + "/" + r.id;
        rep.results.push_back(std::move(r));
      }
    }
  } else {
    Runner run(config.reproducible);
    run_one(suite, run, config);
    rep.results = run.take();
  }
  std::stable_sort(rep.results.begin(), rep.results.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  for (std::size_t k = 1; k < rep.results.size(); ++k)
    if (rep.results[k].id == rep.results[k - 1].id) throw ConfigError("duplicate check id " + rep.results[k].id);
  return rep;
}

std::string to_json(const SuiteReport& rep) {
  json j;
  j["suite"] = rep.suite;
  j["version"] = rep.version;
  j["config"] = json::parse(rep.config);
  j["overall"] = rep.pass() ? "pass" : "fail";
  j["checks"] = json::array();
  for (const auto& r : rep.results)
    j["checks"].push_back({{"id", r.id},
                           {"claim_ref", r.claim_ref},
                           {"status", to_string(r.status)},
                           {"details", r.details},
                           {"elapsed_ms", r.elapsed_ms}});
  return j.dump(2) + "\n";
}

std::string to_text(const SuiteReport& rep) {
  std::ostringstream os;
  os << "suite " << rep.suite << " (version " << rep.version << ")\n";
  for (const auto& r : rep.results) {
    os << r.id;
    if (r.details.rfind("= ", 0) == 0) os << " " << r.details.substr(0, r.details.find(';'));
    os << ": " << to_string(r.status) << "\n";
    if (!r.details.empty() && r.details.rfind("= ", 0) != 0) os << "    " << r.details << "\n";
  }
  long passed = 0, failed = 0, skipped = 0;
  for (const auto& r : rep.results) {
    if (r.status == Status::pass) ++passed;
    else if (r.status == Status::fail) ++failed;
    else ++skipped;
  }
  os << "overall: " << (rep.pass() ? "pass" : "fail") << " (" << passed << " passed, " << failed << " failed, "
     << skipped << " skipped)\n";
  return os.str();
}

}  // namespace x0lab::suites
