#include "x0lab/exactmath/param.hpp"

#include <algorithm>

namespace x0lab {

std::string ParamValuation::str() const {
  if (slope == 0) return to_string(constant);
  std::string lam = slope == 1 ? "l" : to_string(slope) + "*l";
  if (constant == 0) return lam;
  return to_string(constant) + " + " + lam;
}

void Envelope::add(ParamValuation v, Monomial witness) {
  pieces_.push_back({std::move(v), std::move(witness)});
}

ExtValuation Envelope::at(const Rational& lambda) const {
  ExtValuation best = ExtValuation::infinity();
  for (const auto& p : pieces_) best = min(best, ExtValuation(p.value.at(lambda)));
  return best;
}

std::vector<std::size_t> Envelope::minimizers(const Rational& lambda) const {
  std::vector<std::size_t> out;
  const ExtValuation best = at(lambda);
  for (std::size_t k = 0; k < pieces_.size(); ++k)
    if (ExtValuation(pieces_[k].value.at(lambda)) == best) out.push_back(k);
  return out;
}

ExtValuation Envelope::minimum_on(const Rational& lo, const Rational& hi) const {
  if (!(lo <= hi)) throw MathError("empty interval");
  return min(at(lo), at(hi));
}

std::vector<Rational> Envelope::crossings(const Rational& lo, const Rational& hi) const {
  std::vector<Rational> out;
  for (std::size_t a = 0; a < pieces_.size(); ++a)
    for (std::size_t b = a + 1; b < pieces_.size(); ++b) {
      const ParamValuation d = pieces_[a].value - pieces_[b].value;
      if (d.slope == 0) continue;
      const Rational lam = -d.constant / d.slope;
      if (lo < lam && lam < hi) out.push_back(lam);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace x0lab
