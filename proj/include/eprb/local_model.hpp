#pragma once

#include <iosfwd>
#include <string>

#include "eprb/density.hpp"
#include "eprb/outcome.hpp"
#include "eprb/region.hpp"

namespace eprb {

/// A Stern-Gerlach device orientation: a setting label and its alignment
/// angle in the measurement plane, canonical radians.
struct DeviceSetting {
  Setting label;
  double angle;
};

/// The classical local model's parameters: one alignment angle per
/// setting, the joint-density mixture weight alpha (beta = 1 - alpha
/// implied), and the density normalisation constant.
struct ModelConfig {
  std::array<double, 4> angles{};  // indexed by sidx(Setting), radians
  double alpha = 0.5;
  double norm = 0.25;

  double angle(Setting s) const { return angles[sidx(s)]; }
  DeviceSetting device(Setting s) const { return {s, angles[sidx(s)]}; }

  /// Plain-text key=value config. Angles are degrees in the file
  /// (angle_a, angle_a_prime, angle_b, angle_b_prime), alpha and norm
  /// dimensionless. '#' starts a comment.
  static ModelConfig from_stream(std::istream& in);
  static ModelConfig from_file(const std::string& path);
  void write(std::ostream& out) const;
};

/// The two half-circle outcome arcs of a device. Left-side devices take +
/// around their own pole; right-side devices are shifted by pi (the pair
/// is anticorrelated at equal angles).
struct DomainArcs {
  EventRegion plus;
  EventRegion minus;
};

DomainArcs domain_arcs(double angle, Side side);

/// Deterministic outcome of measuring the ontic state lambda with a device
/// at `angle` on `side`.
Outcome observable(double lambda, double angle, Side side);

/// Single-context density N*|cos(lambda - angle)| on the full circle.
Density context_density(double angle, double norm);
inline Density normalized_context_density(double angle) { return context_density(angle, 0.25); }

/// Weighted |cos| mixture: the structured form of the model's densities,
/// invertible per arc for sampling.
struct CosComponent {
  double weight;  // mass of this component
  double center;  // canonical radians
};

struct CosMixtureDensity {
  std::vector<CosComponent> components;

  double evaluate(double lambda) const;
  double total_weight() const;
  Density as_density() const;
};

CosMixtureDensity joint_context_mixture(const ModelConfig& cfg, Setting c, Setting c_prime);
Density joint_context_density(const ModelConfig& cfg, Setting c, Setting c_prime);

/// Exact integral of |cos(t - center)| over [lo, hi].
double abs_cos_integral(double center, double lo, double hi);

/// P(outcome j) for a single device: 1/2 for every setting and side.
double single_prob(const DeviceSetting& dev, Side s, Outcome j);

/// Joint outcome probability computed by the model itself: the mixture
/// density integrated in closed form over the intersection of the two
/// outcome arcs.
double joint_prob(const ModelConfig& cfg, Setting c, Outcome j, Setting c_prime, Outcome k);

/// <CC'> = sum over jk of j*k*joint_prob = -cos(angle_c - angle_c').
double correlation(const ModelConfig& cfg, Setting c, Setting c_prime);

/// Singlet-state prediction (1/4)(1 - jk cos(angle_a - angle_b)),
/// implemented independently of joint_prob as a test oracle.
double quantum_oracle(Outcome j, Outcome k, double angle_a, double angle_b);

/// Largest deviation in the marginal identities p_c(j) = sum_k p_cb(j,k)
/// = sum_k p_cb'(j,k) (and mirrored for the right particle).
struct ParameterIndependenceReport {
  double max_deviation;
};
ParameterIndependenceReport parameter_independence(const ModelConfig& cfg);

/// Context-selection reading of the norm: with norm = 1/8 the one-context
/// mass is 1/2 and the joint-context mass 1/4. Other norms reject.
struct DeviceSelectionMeasure {
  double single_context_mass;
  double joint_context_mass;
};
DeviceSelectionMeasure device_selection_measure(const ModelConfig& cfg);

}  // namespace eprb
