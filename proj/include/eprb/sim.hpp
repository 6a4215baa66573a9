#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "eprb/kernels/sampler.hpp"
#include "eprb/local_model.hpp"
#include "eprb/table.hpp"

namespace eprb {

/// Measure both particles in the same joint context every run.
struct FixedSchedule {
  Setting left;
  Setting right;
};

/// Aspect-style switching: each run draws its joint context from these
/// probabilities (order AB, AB', A'B, A'B'; must sum to 1).
struct RandomSwitchSchedule {
  std::array<double, 4> probs{0.25, 0.25, 0.25, 0.25};
};

using Schedule = std::variant<FixedSchedule, RandomSwitchSchedule>;

std::string schedule_description(const Schedule& s);
Schedule parse_schedule(const std::string& text);  // "fixed:AB" / "random" / "random:p,p,p,p"

struct SimConfig {
  ModelConfig model;
  std::uint64_t runs = 0;
  std::uint64_t seed = 0;
  Schedule schedule = RandomSwitchSchedule{};
  unsigned threads = 1;              // aggregate results are thread-count independent
  kernels::Isa isa = kernels::Isa::automatic;
};

/// Full per-run record, hidden variable included, for white-box checks.
struct RunRecord {
  std::uint64_t index;
  Setting left;
  Setting right;
  double lambda;
  Outcome left_outcome;
  Outcome right_outcome;
};

struct SimResult {
  Table table;               // experimental: two measured cells per run
  std::vector<RunRecord> records;
};

/// Draw one ontic state from a |cos| mixture by per-component inverse CDF
/// (sine inversion). Consumes two draws.
double sample_lambda(const CosMixtureDensity& density, kernels::SplitMix64& rng);

SimResult simulate(const SimConfig& cfg);

/// runs.csv: the table-core CSV schema preceded by '#' metadata lines
/// recording the generator, seed, schedule and model parameters.
void write_runs_csv(const SimResult& result, const SimConfig& cfg, std::ostream& out);
std::string runs_csv_string(const SimResult& result, const SimConfig& cfg);

}  // namespace eprb
