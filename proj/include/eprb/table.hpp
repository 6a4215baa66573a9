#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "eprb/outcome.hpp"
#include "eprb/rational.hpp"

namespace eprb {

/// One table cell: a measured outcome or an unmeasured gap.
using Entry = std::optional<Outcome>;

/// One run of the experiment: a cell for each of the four settings.
struct Run {
  std::array<Entry, 4> cells{};

  Entry& operator[](Setting s) { return cells[sidx(s)]; }
  const Entry& operator[](Setting s) const { return cells[sidx(s)]; }
  std::size_t known_on(Side side) const;
};

enum class TableKind { experimental, complete };

/// Per-run (setting, outcome) pairs used to build a table.
using RowSpec = std::vector<std::pair<Setting, Outcome>>;

/// Cells to fill when completing a table, keyed by (run index, setting).
using CompletionAssignment = std::map<std::pair<std::size_t, Setting>, Outcome>;

/// An EPRB data table: N runs by 4 settings, each cell measured or not.
/// Experimental tables have exactly one measured setting per side per run;
/// complete tables have every cell measured. Immutable after construction.
class Table {
 public:
  static Table from_rows(std::vector<Run> rows);

  TableKind kind() const { return kind_; }
  std::size_t size() const { return runs_.size(); }
  const Run& run(std::size_t i) const;
  const std::vector<Run>& runs() const { return runs_; }

  /// Number of distinct ways to fill every unmeasured cell: 2^#unknown.
  BigInt completions_count() const;

  /// New complete table with the given outcomes substituted at exactly the
  /// unmeasured cells. The assignment must cover them all and nothing else.
  Table completed(const CompletionAssignment& assignment) const;

  // Naive whole-table relative frequencies over all N runs (known cells
  // count, gaps do not). Exact rationals.
  Rational frequency(Setting c, Outcome j) const;
  Rational unknown_fraction(Setting c) const;
  Rational joint_frequency(Setting c, Outcome j, Setting c_prime, Outcome k) const;
  Rational average(Setting c) const;
  Rational correlation(Setting c, Setting c_prime) const;

  // Raw counts backing the rationals above.
  std::size_t known_count(Setting c, Outcome j) const;
  std::size_t unknown_count(Setting c) const;

 private:
  explicit Table(std::vector<Run> runs, TableKind kind)
      : runs_(std::move(runs)), kind_(kind) {}

  std::vector<Run> runs_;
  TableKind kind_;
};

Table build_table(const std::vector<RowSpec>& rows);

/// CSV exchange format. Header:
///   run,setting_left,outcome_left,setting_right,outcome_right
/// one row per run, outcomes as +1/-1, unmeasured cells implied by the
/// absent settings. Lines starting with '#' are metadata and are skipped
/// on read. Only experimental tables fit this schema.
Table read_table_csv(std::istream& in);
void write_table_csv(const Table& t, std::ostream& out,
                     const std::vector<std::string>& metadata = {});

}  // namespace eprb
