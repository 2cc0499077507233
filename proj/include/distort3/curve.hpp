#pragma once

#include <cstddef>
#include <memory>
#include <variant>
#include <vector>

#include "distort3/distortion.hpp"
#include "distort3/geometry.hpp"

namespace distort3 {

/// Parameters of the recursive arc-spline construction: m marked gaps per
/// planar level, target dimension d, base radius r. The radius cancels in the
/// final rescaling and is exposed only so scale invariance can be tested.
struct ConstructionParams {
  std::size_t m = 2;
  std::size_t d = 2;
  double r = 1.0;
};

/// Which side of the cylinder chart each inserted planar copy bulges to.
/// Alternating flips the sign of the height coordinate on every other copy;
/// it breaks the mirror symmetry of adjacent height arches that otherwise
/// yields nearly collinear triples across copy boundaries and inflates the
/// distortion of the lifted curves. Positive keeps every copy at height >= 0.
enum class CylinderSide { alternating, positive };

/// One circular arc covering exactly one unit of arclength.
struct ArcSegment {
  double cx = 0.0, cy = 0.0;  // center
  double radius = 0.0;
  double angle0 = 0.0;  // angle of the segment start, seen from the center
  double sweep = 0.0;   // signed; the point at local s is angle0 + sweep * s
};

/// A piecewise curve of integer total length N with N+1 marked points at
/// arclength positions 0, 1, ..., N. Planar curves are arc lists; lifted
/// curves are stacks of planar copies drawn in the cylinder chart over a base
/// curve. The arclength parametrization is non-expanding:
/// |point_at(s) - point_at(s')| <= |s - s'|. Immutable and shareable.
class MarkedCurve {
 public:
  std::size_t dim() const { return dim_; }
  double total_length() const { return total_length_; }
  std::size_t mark_count() const { return marks_.size(); }

  /// Evaluates the arclength parametrization; s must lie in
  /// [0, total_length()] up to 1e-9 slack.
  Point point_at(double s) const;

  /// The marked points; entry i sits at arclength i, exactly.
  const std::vector<Point>& marked_points() const { return marks_; }

  /// Euclidean distance between the first and last marked points.
  double endpoint_chord() const;

  /// Arc descriptors when planar, nullptr for lifted curves.
  const std::vector<ArcSegment>* arcs() const;

  /// Base curve when lifted, nullptr for planar curves.
  const MarkedCurve* base() const;

 private:
  struct PlanarRep {
    std::vector<ArcSegment> segments;
  };
  struct LiftedRep {
    std::shared_ptr<const MarkedCurve> base;
    std::shared_ptr<const MarkedCurve> copy;  // planar, unit mark spacing
    double copy_chord = 0.0;                  // endpoint chord of the copy
    CylinderSide side = CylinderSide::alternating;
  };

  MarkedCurve(std::size_t dim, std::vector<Point> marks,
              std::variant<PlanarRep, LiftedRep> rep);

  double height_sign(std::size_t copy_index) const;

  std::size_t dim_;
  double total_length_;
  std::vector<Point> marks_;
  std::variant<PlanarRep, LiftedRep> rep_;

  friend MarkedCurve build_gamma2(const ConstructionParams& params);
  friend MarkedCurve lift_curve(const MarkedCurve& base, std::size_t m,
                                CylinderSide side, double r);
};

/// The isometric unrolling chart of base x R+: chart coordinates (s, h) with
/// s the arclength along the base and h the height, mapped to
/// base.point_at(s) with h appended as a new last coordinate.
class CylinderChart {
 public:
  explicit CylinderChart(std::shared_ptr<const MarkedCurve> base);

  /// Requires 0 <= s <= base length and h >= 0 (tiny negative h from
  /// rounding is clamped to zero).
  Point map(double s, double h) const;

  const MarkedCurve& base() const { return *base_; }

 private:
  std::shared_ptr<const MarkedCurve> base_;
};

/// Builds the planar level: a sixth of a circle of radius r carrying m+1
/// points at regular angular spacing pi/(3m), with each sub-arc replaced by
/// the unique minor arc of radius 2r through the same two points that lies
/// between the chord and the original arc. Rescaled so the marks sit at
/// arclengths 0..m, then posed with the endpoint chord on the +x axis,
/// starting at the origin, bulging towards +y. Requires m >= 2.
MarkedCurve build_gamma2(const ConstructionParams& params);

/// Gains one dimension: for every consecutive mark pair of the base, a copy
/// of the m-gap planar curve (scaled so its endpoint chord spans arclength 1
/// of the base) is drawn in the cylinder chart, its marks becoming marks of
/// the lifted curve; the whole figure is then rescaled so marks again sit at
/// integer arclengths. Copy heights are 0 exactly at every base mark.
MarkedCurve lift_curve(const MarkedCurve& base, std::size_t m,
                       CylinderSide side = CylinderSide::alternating,
                       double r = 1.0);

/// Full recursive construction: the planar level lifted d-2 times.
MarkedCurve build_gamma_curve(const ConstructionParams& params,
                              CylinderSide side = CylinderSide::alternating);

/// Marked points of the full construction as a tame sequence:
/// m^(d-1) + 1 points in dimension d. Guards m^(d-1) <= 10^6.
TameSequence build_gamma(const ConstructionParams& params,
                         CylinderSide side = CylinderSide::alternating);

/// Points at arclength steps 1/per_unit covering [0, total_length],
/// endpoints included. Requires per_unit >= 1.
std::vector<Point> sample_polyline(const MarkedCurve& curve,
                                   std::size_t per_unit);

/// Minimum over all sampled pairs of Euclidean distance divided by arclength
/// distance: the empirical metric-contraction constant of the curve.
/// Requires per_unit >= 2.
double metric_contraction_ratio(const MarkedCurve& curve,
                                std::size_t per_unit);

/// Largest vertex angle over sampled triples in increasing arclength order
/// that do not all lie within one closed unit arc [i, i+1] between marks.
double max_spanning_angle(const MarkedCurve& curve, std::size_t per_unit);

}  // namespace distort3
