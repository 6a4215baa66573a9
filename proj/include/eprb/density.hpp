#pragma once

#include <functional>
#include <vector>

#include "eprb/region.hpp"

namespace eprb {

/// A nonnegative density on a circle region. `evaluate` integrates to
/// `total_mass` over the support; `kinks` lists the known non-smooth
/// points so quadrature can split there.
struct Density {
  EventRegion support;
  std::function<double(double)> evaluate;
  double total_mass = 1.0;
  std::vector<double> kinks;
};

/// Uniform density of mass 1 on the given region.
Density uniform_density(const EventRegion& support);

/// Quadrature of the density over (a subset of) its support, splitting at
/// kinks and region boundaries.
double integrate_density(const Density& rho, const EventRegion& over, double abs_tol = 1e-10);

/// Probability of region B under the density, normalised by total_mass.
double probability(const Density& rho, const EventRegion& b);

/// Restriction of rho to B, renormalised to a probability density.
/// Throws ValidationError when B carries no mass.
Density conditional_density(const Density& rho, const EventRegion& b);

/// P(B | lambda) for an ontic state: the Dirac indicator of B.
int ontic_conditional(const EventRegion& b, double lambda);

/// Both sides of the total-probability identity
///   P(B) = integral of rho(l) * P(B | l) dl,
/// computed by two distinct routes (region intersection vs indicator
/// integration). They agree to quadrature tolerance.
struct TotalProbability {
  double lhs;
  double rhs;
};
TotalProbability total_probability_check(const Density& rho, const EventRegion& b);

/// Indicator factorisation delta_{A n B}(l) = delta_A(l) * delta_B(l).
bool bell_locality_check(const EventRegion& a, const EventRegion& b, double lambda);

}  // namespace eprb
