#pragma once

#include <array>
#include <optional>

#include "eprb/chsh.hpp"
#include "eprb/outcome.hpp"

namespace eprb {

/// Joint distribution of the random vector (A, A', B, B') over {+1,-1}^4:
/// the single-Kolmogorov-space object. Sixteen nonnegative weights summing
/// to one.
class JointDistribution16 {
 public:
  static constexpr std::size_t size = 16;

  /// Slot order A, A', B, B'; bit set means +1.
  static constexpr std::size_t index(Outcome a, Outcome a_prime, Outcome b, Outcome b_prime) {
    auto bit = [](Outcome o) { return o == Outcome::plus ? std::size_t{1} : std::size_t{0}; };
    return (bit(a) << 3) | (bit(a_prime) << 2) | (bit(b) << 1) | bit(b_prime);
  }
  static Outcome slot_outcome(std::size_t vertex, std::size_t slot);  // slot 0..3

  static JointDistribution16 from_weights(const std::array<double, 16>& w);
  static JointDistribution16 uniform();
  static JointDistribution16 point_mass(Outcome a, Outcome a_prime, Outcome b, Outcome b_prime);

  double operator[](std::size_t i) const { return w_[i]; }
  const std::array<double, 16>& weights() const { return w_; }

  /// Marginal probability of the constrained slots; slots left unset are
  /// summed over. Constraint order A, A', B, B'.
  double marginal(const std::array<std::optional<Outcome>, 4>& constraint) const;

 private:
  explicit JointDistribution16(const std::array<double, 16>& w) : w_(w) {}
  std::array<double, 16> w_;
};

/// Single averages and the four CHSH correlations of a joint distribution.
struct SingleSpaceAverages {
  double a;
  double a_prime;
  double b;
  double b_prime;
  CorrelationQuad quad;  // semantics = single_space
};

SingleSpaceAverages averages(const JointDistribution16& d);

/// |f| of the fixed-sign CHSH combination. Bounded by 2 for every joint
/// distribution; exercised as a property oracle.
double chsh_theorem_check(const JointDistribution16& d);

}  // namespace eprb
