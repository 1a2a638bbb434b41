#include "x0lab/exactmath/newton.hpp"

#include <algorithm>

namespace x0lab {

namespace {

// Lower convex hull with collinear interior points dropped. Input sorted by x.
template <typename P, typename YOf>
std::vector<std::size_t> lower_hull(const std::vector<P>& pts, YOf y) {
  std::vector<std::size_t> h;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    while (h.size() >= 2) {
      const auto& a = pts[h[h.size() - 2]];
      const auto& b = pts[h.back()];
      const auto& c = pts[k];
      // drop b when slope(a,b) >= slope(b,c)
      const Rational lhs = (y(b) - y(a)) * Rational(c.first - b.first);
      const Rational rhs = (y(c) - y(b)) * Rational(b.first - a.first);
      if (lhs >= rhs)
        h.pop_back();
      else
        break;
    }
    h.push_back(k);
  }
  return h;
}

}  // namespace

NewtonPolygon::NewtonPolygon(const std::vector<ExtValuation>& vals) {
  std::vector<std::pair<long, Rational>> finite;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    points_.emplace_back(static_cast<long>(i), vals[i]);
    if (vals[i].is_finite()) finite.emplace_back(static_cast<long>(i), vals[i].value());
  }
  if (finite.size() < 2) throw MathError("Newton polygon needs at least two finite points");
  const auto idx = lower_hull(finite, [](const auto& p) { return p.second; });
  for (auto k : idx) vertices_.push_back(finite[k]);
  for (std::size_t k = 0; k + 1 < vertices_.size(); ++k) {
    const long len = vertices_[k + 1].first - vertices_[k].first;
    segments_.push_back({(vertices_[k + 1].second - vertices_[k].second) / Rational(len), len});
  }
}

std::vector<std::pair<Rational, long>> NewtonPolygon::root_valuations() const {
  std::vector<std::pair<Rational, long>> out;
  for (const auto& s : segments_) out.emplace_back(-s.slope, s.length);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

long NewtonPolygon::width() const { return vertices_.back().first - vertices_.front().first; }

NewtonPolygon newton_polygon(const std::vector<ExtValuation>& vals) { return NewtonPolygon(vals); }

std::vector<ExtValuation> coefficient_valuations(const ZPoly& f, unsigned long p) {
  std::vector<ExtValuation> out;
  for (const auto& c : f.coeffs()) out.push_back(val_int(c, p));
  return out;
}

std::vector<ExtValuation> coefficient_valuations(const QPoly& f, unsigned long p) {
  std::vector<ExtValuation> out;
  for (const auto& c : f.coeffs()) out.push_back(val_rat(c, p));
  return out;
}

std::vector<std::pair<ParamValuation, long>> ParamCell::root_valuations() const {
  std::vector<std::pair<ParamValuation, long>> out;
  for (const auto& s : segments) out.emplace_back(Rational(-1) * s.slope, s.to - s.from);
  return out;
}

std::optional<std::size_t> ParamPolygon::cell_of(const Rational& lambda) const {
  for (std::size_t k = 0; k < cells.size(); ++k)
    if (cells[k].lo < lambda && lambda < cells[k].hi) return k;
  return std::nullopt;
}

NewtonPolygon specialize(const std::vector<Envelope>& pvals, const Rational& lambda) {
  std::vector<ExtValuation> vals;
  for (const auto& e : pvals) vals.push_back(e.at(lambda));
  return NewtonPolygon(vals);
}

namespace {

// Segment list with equal consecutive slopes merged.
std::vector<std::pair<Rational, long>> merged(const std::vector<std::pair<Rational, long>>& segs) {
  std::vector<std::pair<Rational, long>> out;
  for (const auto& s : segs) {
    if (!out.empty() && out.back().first == s.first)
      out.back().second += s.second;
    else
      out.push_back(s);
  }
  return out;
}

ParamValuation active_piece(const Envelope& e, const Rational& lambda) {
  return e.pieces()[e.minimizers(lambda).front()].value;
}

// Checks that the hull described by `cell` is a valid lower hull at lambda.
void certify_at(const std::vector<Envelope>& pvals, const ParamCell& cell, const Rational& lambda) {
  for (std::size_t s = 0; s < cell.segments.size(); ++s) {
    const auto& seg = cell.segments[s];
    const Rational base = pvals[seg.from].at(lambda).value();
    const Rational slope = seg.slope.at(lambda);
    if (pvals[seg.to].at(lambda).value() != base + slope * Rational(seg.to - seg.from))
      throw VerificationError("parametric hull: vertex piece not active at endpoint");
    if (s > 0 && cell.segments[s - 1].slope.at(lambda) > slope)
      throw VerificationError("parametric hull: convexity fails at endpoint");
    for (long i = seg.from; i <= seg.to; ++i) {
      const ExtValuation v = pvals[i].at(lambda);
      if (v.is_finite() && v.value() < base + slope * Rational(i - seg.from))
        throw VerificationError("parametric hull: point below hull at endpoint");
    }
  }
}

}  // namespace

ParamPolygon parametric_polygon(const std::vector<Envelope>& pvals, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw MathError("parametric polygon over an empty interval");
  std::vector<long> finite;
  for (std::size_t i = 0; i < pvals.size(); ++i)
    if (!pvals[i].is_infinite()) finite.push_back(static_cast<long>(i));
  if (finite.size() < 2) throw MathError("Newton polygon needs at least two finite points");

  std::vector<Rational> cuts{lo, hi};
  for (long i : finite) {
    auto c = pvals[i].crossings(lo, hi);
    cuts.insert(cuts.end(), c.begin(), c.end());
  }
  for (std::size_t a = 0; a < finite.size(); ++a)
    for (std::size_t b = a + 1; b < finite.size(); ++b)
      for (std::size_t c = b + 1; c < finite.size(); ++c) {
        const long i = finite[a], j = finite[b], k = finite[c];
        for (const auto& pi : pvals[i].pieces())
          for (const auto& pj : pvals[j].pieces())
            for (const auto& pk : pvals[k].pieces()) {
              const ParamValuation d =
                  Rational(k - i) * (pj.value - pi.value) - Rational(j - i) * (pk.value - pi.value);
              if (d.slope == 0) continue;
              const Rational lam = -d.constant / d.slope;
              if (lo < lam && lam < hi) cuts.push_back(lam);
            }
      }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<ParamCell> raw;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Rational mid = (cuts[k] + cuts[k + 1]) / 2;
    std::vector<std::pair<long, Rational>> pts;
    for (long i : finite) pts.emplace_back(i, pvals[i].at(mid).value());
    const auto idx = lower_hull(pts, [](const auto& p) { return p.second; });
    ParamCell cell{cuts[k], cuts[k + 1], {}, {}};
    for (auto h : idx) cell.vertices.push_back(pts[h].first);
    for (std::size_t s = 0; s + 1 < cell.vertices.size(); ++s) {
      const long a = cell.vertices[s], b = cell.vertices[s + 1];
      const ParamValuation d = active_piece(pvals[b], mid) - active_piece(pvals[a], mid);
      cell.segments.push_back({a, b, make_rational(1, b - a) * d});
    }
    certify_at(pvals, cell, cell.lo);
    certify_at(pvals, cell, cell.hi);
    raw.push_back(std::move(cell));
  }

  ParamPolygon out{lo, hi, {}, {}};
  for (auto& cell : raw) {
    if (!out.cells.empty() && out.cells.back().vertices == cell.vertices) {
      bool same = true;
      for (std::size_t s = 0; s < cell.segments.size(); ++s)
        same = same && cell.segments[s].slope == out.cells.back().segments[s].slope;
      if (same) {
        out.cells.back().hi = cell.hi;
        continue;
      }
    }
    out.cells.push_back(std::move(cell));
  }
  for (std::size_t k = 0; k + 1 < out.cells.size(); ++k) {
    const Rational b = out.cells[k].hi;
    out.breakpoints.push_back(b);
    const NewtonPolygon direct = specialize(pvals, b);
    std::vector<std::pair<Rational, long>> want;
    for (const auto& s : direct.segments()) want.emplace_back(s.slope, s.length);
    for (const auto* cell : {&out.cells[k], &out.cells[k + 1]}) {
      std::vector<std::pair<Rational, long>> got;
      for (const auto& s : cell->segments) got.emplace_back(s.slope.at(b), s.to - s.from);
      if (merged(got) != want) throw VerificationError("parametric hull: cells disagree at breakpoint");
    }
  }
  return out;
}

}  // namespace x0lab
