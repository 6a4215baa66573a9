#pragma once

#include <array>
#include <optional>

#include "eprb/joint16.hpp"
#include "eprb/outcome.hpp"
#include "eprb/rational.hpp"

namespace eprb {

/// One joint-context outcome table p(j,k), nonnegative and summing to 1.
struct JointProbTable {
  std::array<std::array<double, 2>, 2> p{};  // [oidx(j)][oidx(k)]

  double at(Outcome j, Outcome k) const { return p[oidx(j)][oidx(k)]; }
  double correlation() const;
};

/// The four joint-context tables in order AB, AB', A'B, A'B'.
struct ContextualStatistics {
  std::array<JointProbTable, 4> tables;

  CorrelationQuad correlations() const;
};

/// On infeasibility: the CHSH-family combination of the input correlations
/// with the largest signed value. `variant` indexes chsh_all_variants.
struct MembershipCertificate {
  std::size_t variant;
  double value;
};

struct MembershipResult {
  bool feasible;
  std::optional<JointDistribution16> witness;     // set iff feasible
  std::optional<MembershipCertificate> certificate;  // set iff infeasible
};

/// Decides whether the four tables are the pairwise marginals of some
/// distribution over the 16 deterministic assignments (Bell polytope
/// membership). Exact rational feasibility with per-entry slack
/// `tolerance`; the witness reproduces the inputs to within it.
MembershipResult polytope_membership(const ContextualStatistics& stats,
                                     double tolerance = 1e-9);

}  // namespace eprb
