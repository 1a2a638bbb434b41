#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "x0lab/exactmath/param.hpp"
#include "x0lab/exactmath/upoly.hpp"
#include "x0lab/exactmath/valuation.hpp"

namespace x0lab {

// Sign convention used everywhere: a hull segment of slope s and horizontal
// length l accounts for l roots of valuation -s.

struct Segment {
  Rational slope;
  long length = 0;
};

class NewtonPolygon {
 public:
  /// vals[i] is the valuation of the coefficient of x^i.
  explicit NewtonPolygon(const std::vector<ExtValuation>& vals);

  const std::vector<std::pair<long, ExtValuation>>& points() const { return points_; }
  const std::vector<std::pair<long, Rational>>& vertices() const { return vertices_; }
  const std::vector<Segment>& segments() const { return segments_; }

  /// (root valuation, multiplicity), increasing in valuation.
  std::vector<std::pair<Rational, long>> root_valuations() const;

  long width() const;

 private:
  std::vector<std::pair<long, ExtValuation>> points_;
  std::vector<std::pair<long, Rational>> vertices_;
  std::vector<Segment> segments_;
};

NewtonPolygon newton_polygon(const std::vector<ExtValuation>& vals);

/// Coefficient valuations of an integer / rational polynomial.
std::vector<ExtValuation> coefficient_valuations(const ZPoly& f, unsigned long p);
std::vector<ExtValuation> coefficient_valuations(const QPoly& f, unsigned long p);

/// Lower hull of points (i, v_i(lambda)) where each v_i is a min of affine
/// functions (an empty envelope is +infinity).
struct ParamSegment {
  long from = 0;
  long to = 0;
  ParamValuation slope;
};

struct ParamCell {
  Rational lo;
  Rational hi;
  std::vector<long> vertices;
  std::vector<ParamSegment> segments;
  /// Root valuations -slope with multiplicities, affine in lambda.
  std::vector<std::pair<ParamValuation, long>> root_valuations() const;
};

struct ParamPolygon {
  Rational lo;
  Rational hi;
  std::vector<Rational> breakpoints;
  std::vector<ParamCell> cells;

  /// Cell whose open interior contains lambda; nullopt at a breakpoint or
  /// outside the interval.
  std::optional<std::size_t> cell_of(const Rational& lambda) const;
};

ParamPolygon parametric_polygon(const std::vector<Envelope>& pvals, const Rational& lo, const Rational& hi);

/// Evaluates the envelopes at lambda and builds the ordinary polygon.
NewtonPolygon specialize(const std::vector<Envelope>& pvals, const Rational& lambda);

}  // namespace x0lab
