#pragma once

#include <vector>

namespace eprb {

inline constexpr double two_pi = 6.283185307179586476925286766559;

/// Reduce an angle to [0, 2*pi).
double canonical_angle(double x);

/// Non-wrapping half-open arc [lo, hi) with 0 <= lo < hi <= 2*pi.
struct Arc {
  double lo;
  double hi;

  double length() const { return hi - lo; }
};

/// A Borel subset of the circle: a finite union of disjoint half-open arcs
/// in canonical form (non-wrapping, sorted, interior-adjacent arcs merged).
class EventRegion {
 public:
  EventRegion() = default;  // empty region

  static EventRegion full_circle();
  /// Arc from start spanning `length` radians counterclockwise, wrapped.
  /// Requires 0 < length <= 2*pi.
  static EventRegion arc(double start, double length);
  static EventRegion from_arcs(std::vector<Arc> arcs);

  bool empty() const { return arcs_.empty(); }
  double measure() const;
  bool contains(double lambda) const;

  EventRegion intersect(const EventRegion& other) const;
  EventRegion unite(const EventRegion& other) const;
  EventRegion complement() const;

  const std::vector<Arc>& arcs() const { return arcs_; }
  /// All arc endpoints, sorted. Useful as quadrature split points.
  std::vector<double> boundaries() const;

  bool operator==(const EventRegion&) const = default;

 private:
  std::vector<Arc> arcs_;
};

}  // namespace eprb
