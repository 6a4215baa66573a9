#pragma once

#include <optional>

#include "eprb/chsh.hpp"
#include "eprb/dempster_shafer.hpp"
#include "eprb/polytope.hpp"
#include "eprb/table.hpp"

#include "json.hpp"

namespace eprb {

/// Full DS / contextual / CHSH analysis of a table.
struct AnalysisReport {
  struct SingleBlock {
    Setting context;
    ProbabilityInterval interval_plus;
    ProbabilityInterval interval_minus;
    Rational dont_know;
    std::optional<SingleContextStats> stats;  // absent when never measured
  };

  struct JointBlock {
    Setting left;
    Setting right;
    std::array<std::array<ProbabilityInterval, 2>, 2> interval;  // [oidx(j)][oidx(k)]
    std::optional<JointContextStats> stats;  // absent when never jointly measured
  };

  std::size_t runs = 0;
  std::array<SingleBlock, 4> singles;  // indexed by sidx(Setting)
  std::array<JointBlock, 4> joints;    // joint_contexts order

  // Context-restricted correlations and the CHSH family built from them.
  // Absent when some joint context has no data.
  std::optional<CorrelationQuad> contextual_quad;
  std::optional<std::array<double, 8>> contextual_variants;
  std::optional<double> contextual_max_abs;

  // Naive single-space statistics over all N runs, for contrast.
  CorrelationQuad naive_quad;  // semantics = single_space
  double naive_max_abs = 0;
};

AnalysisReport analyze(const Table& t);

nlohmann::json report_json(const AnalysisReport& report);

/// The four joint-context probability tables of a report, as polytope
/// input. Throws ValidationError when a context has no data.
ContextualStatistics contextual_tables(const AnalysisReport& report);
ContextualStatistics contextual_tables_from_json(const nlohmann::json& report);

nlohmann::json membership_json(const MembershipResult& result);

}  // namespace eprb
