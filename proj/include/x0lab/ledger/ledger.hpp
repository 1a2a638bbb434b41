#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "x0lab/exactmath/rational.hpp"

namespace x0lab::ledger {

/// Genus of X_0(N) from the index, elliptic point and cusp counts.
long genus_x0(long N);

struct SSClassSurvey {
  long p = 0;
  std::vector<std::pair<long, long>> entries;  // (aut_order, count), aut_order descending
  Rational mass;                               // sum count / aut_order

  long total() const;
};

/// Supersingular curves over F_pbar grouped by |Aut|. Throws MathError
/// unless p > 3 is prime, VerificationError if the mass formula fails.
SSClassSurvey ss_survey(long p);

/// Supersingular j-invariants lying in F_p, by point counting.
std::vector<long> supersingular_residues(long p);

struct SSComponents {
  long aut_order = 2;
  long al_genus = 0;
  long e_genus = 0;  // each of E_1, E_2
  long cm_count = 0;
  long cm_genus = 0;
};

struct ComponentBudget {
  long p = 0;
  std::vector<SSComponents> per_ss;
  std::vector<long> ordinary_genera;
  long total_known = 0;
  long curve_genus = 0;
  bool exact = false;
};

/// Throws VerificationError if total_known exceeds the genus of X_0(p^3),
/// or for p = 5 if the two differ.
ComponentBudget component_budget(long p, std::optional<long> g_E = std::nullopt,
                                 std::optional<std::vector<long>> ordinary_genera = std::nullopt);

struct GraphSpec {
  std::vector<std::pair<std::string, long>> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

/// Lines "vertex <id> <genus>" and "edge <id> <id>"; blank lines and
/// '#' comments are skipped. Throws MathError with the line number.
GraphSpec parse_graph(const std::string& text);

/// Sum of vertex genera plus the first Betti number. Throws MathError for
/// a disconnected or empty graph.
long graph_genus(const GraphSpec& spec);

}  // namespace x0lab::ledger
