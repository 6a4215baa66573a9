#include "eprb/region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eprb/outcome.hpp"

namespace eprb {

double canonical_angle(double x) {
  double r = std::fmod(x, two_pi);
  if (r < 0) r += two_pi;
  // fmod can land exactly on two_pi after the correction when x is a tiny
  // negative number.
  if (r >= two_pi) r = 0.0;
  return r;
}

EventRegion EventRegion::full_circle() {
  EventRegion r;
  r.arcs_ = {Arc{0.0, two_pi}};
  return r;
}

EventRegion EventRegion::arc(double start, double length) {
  if (!(length > 0.0) || length > two_pi)
    throw ValidationError("arc length must lie in (0, 2*pi]");
  if (length == two_pi) return full_circle();
  const double s = canonical_angle(start);
  const double e = s + length;
  if (e <= two_pi) return from_arcs({Arc{s, e}});
  return from_arcs({Arc{s, two_pi}, Arc{0.0, e - two_pi}});
}

EventRegion EventRegion::from_arcs(std::vector<Arc> arcs) {
  for (const Arc& a : arcs) {
    if (!(a.lo >= 0.0) || !(a.lo < a.hi) || !(a.hi <= two_pi))
      throw ValidationError("arc endpoints must satisfy 0 <= lo < hi <= 2*pi");
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) { return x.lo < y.lo; });
  std::vector<Arc> merged;
  for (const Arc& a : arcs) {
    if (!merged.empty() && a.lo <= merged.back().hi) {
      // overlapping or half-open adjacent: [x,b) u [b,c) = [x,c)
      merged.back().hi = std::max(merged.back().hi, a.hi);
    } else {
      merged.push_back(a);
    }
  }
  EventRegion r;
  r.arcs_ = std::move(merged);
  return r;
}

double EventRegion::measure() const {
  double m = 0;
  for (const Arc& a : arcs_) m += a.length();
  return m;
}

bool EventRegion::contains(double lambda) const {
  for (const Arc& a : arcs_) {
    if (lambda < a.lo) return false;  // arcs sorted
    if (lambda < a.hi) return true;
  }
  return false;
}

EventRegion EventRegion::intersect(const EventRegion& other) const {
  std::vector<Arc> out;
  for (const Arc& a : arcs_) {
    for (const Arc& b : other.arcs_) {
      const double lo = std::max(a.lo, b.lo);
      const double hi = std::min(a.hi, b.hi);
      if (lo < hi) out.push_back(Arc{lo, hi});
    }
  }
  return from_arcs(std::move(out));
}

EventRegion EventRegion::unite(const EventRegion& other) const {
  std::vector<Arc> out = arcs_;
  out.insert(out.end(), other.arcs_.begin(), other.arcs_.end());
  return from_arcs(std::move(out));
}

EventRegion EventRegion::complement() const {
  std::vector<Arc> out;
  double cursor = 0.0;
  for (const Arc& a : arcs_) {
    if (cursor < a.lo) out.push_back(Arc{cursor, a.lo});
    cursor = a.hi;
  }
  if (cursor < two_pi) out.push_back(Arc{cursor, two_pi});
  return from_arcs(std::move(out));
}

std::vector<double> EventRegion::boundaries() const {
  std::vector<double> b;
  b.reserve(arcs_.size() * 2);
  for (const Arc& a : arcs_) {
    b.push_back(a.lo);
    b.push_back(a.hi);
  }
  return b;
}

}  // namespace eprb
