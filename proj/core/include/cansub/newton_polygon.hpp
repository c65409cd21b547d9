#pragma once

#include <vector>

#include "cansub/curve_params.hpp"
#include "cansub/valext.hpp"

namespace cansub {

struct PolygonPoint {
  Rational x;
  ValExt y;

  friend bool operator==(const PolygonPoint&, const PolygonPoint&) = default;
};

/// One edge of a Newton polygon read as a root valuation: `length` roots
/// (counted with multiplicity) of valuation `valuation`.
struct SlopeSegment {
  Rational valuation;
  Rational length;

  friend bool operator==(const SlopeSegment&, const SlopeSegment&) = default;
};

/// A lower convex hull in canonical form.
///
/// Vertices have strictly increasing x, no three consecutive finite vertices
/// are collinear, and only the leftmost vertex may sit at height INF. Two
/// polygons are equal iff their vertex lists are.
class NewtonPolygon {
 public:
  const std::vector<PolygonPoint>& vertices() const noexcept { return vertices_; }

  /// Horizontal run covered by finite edges, i.e. the number of nonzero roots.
  Rational finite_extent() const;

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

 private:
  explicit NewtonPolygon(std::vector<PolygonPoint> vertices) : vertices_(std::move(vertices)) {}
  friend NewtonPolygon lower_hull(std::vector<PolygonPoint> points);

  std::vector<PolygonPoint> vertices_;
};

/// Lower convex hull of a point set. A point at height INF survives only as
/// the leftmost vertex; elsewhere it lies above every line and is dropped.
/// Throws kInvalidInput for fewer than two points, duplicate x, negative x,
/// or no finite point.
NewtonPolygon lower_hull(std::vector<PolygonPoint> points);

/// (y1 - y2)/(x2 - x1) and x2 - x1 for each finite edge, left to right.
/// Edges leaving an INF vertex carry no roots.
std::vector<SlopeSegment> root_valuations(const NewtonPolygon& polygon);

/// Polygon of the multiplication-by-p series [p](T):
///   {(0,INF),(1,1),(p,h),(p^2,0)} for 0 < h < p/(p+1),
///   {(0,INF),(1,1),(p^2,0)}       for h >= p/(p+1),
///   {(0,INF),(1,1),(p,0)}         for h == 0.
NewtonPolygon mult_by_p_polygon(const CurveParams& params);

/// Polygon of [p](T) - T(pP): the point set above with (0, v(pP)) in place of
/// (0, INF). INF reproduces mult_by_p_polygon. Throws kInvalidInput for v <= 0.
NewtonPolygon lift_polygon(const CurveParams& params, const ValExt& v_pP);

}  // namespace cansub
