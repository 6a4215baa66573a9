#include "eprb/table.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace eprb {

std::size_t Run::known_on(Side s) const {
  std::size_t n = 0;
  for (Setting c : all_settings)
    if (side(c) == s && (*this)[c].has_value()) ++n;
  return n;
}

namespace {

bool experimental_row(const Run& r) { return r.known_on(Side::left) == 1 && r.known_on(Side::right) == 1; }
bool complete_row(const Run& r) { return r.known_on(Side::left) == 2 && r.known_on(Side::right) == 2; }

void validate_row(const Run& r, std::size_t idx) {
  if (experimental_row(r) || complete_row(r)) return;
  std::ostringstream msg;
  msg << "row " << idx << ": need exactly one measured setting per side (experimental)"
      << " or all four (complete); got " << r.known_on(Side::left) << " left, "
      << r.known_on(Side::right) << " right";
  throw ValidationError(msg.str());
}

}  // namespace

Table Table::from_rows(std::vector<Run> rows) {
  if (rows.empty()) throw ValidationError("a table needs at least one run");
  for (std::size_t i = 0; i < rows.size(); ++i) validate_row(rows[i], i);
  const bool complete = complete_row(rows.front());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (complete_row(rows[i]) != complete)
      throw ValidationError("mixed experimental and complete rows");
  }
  return Table(std::move(rows), complete ? TableKind::complete : TableKind::experimental);
}

Table build_table(const std::vector<RowSpec>& rows) {
  std::vector<Run> runs;
  runs.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Run r;
    for (const auto& [setting, outcome] : rows[i]) {
      if (r[setting].has_value()) {
        std::ostringstream msg;
        msg << "row " << i << ": duplicate setting " << to_cstr(setting);
        throw ValidationError(msg.str());
      }
      r[setting] = outcome;
    }
    runs.push_back(r);
  }
  return Table::from_rows(std::move(runs));
}

const Run& Table::run(std::size_t i) const {
  if (i >= runs_.size()) throw std::out_of_range("run index out of range");
  return runs_[i];
}

BigInt Table::completions_count() const {
  std::size_t unknown = 0;
  for (const Run& r : runs_)
    for (Setting c : all_settings)
      if (!r[c].has_value()) ++unknown;
  return BigInt(1) << unknown;
}

Table Table::completed(const CompletionAssignment& assignment) const {
  std::vector<Run> rows = runs_;
  for (const auto& [cell, outcome] : assignment) {
    const auto& [idx, setting] = cell;
    if (idx >= rows.size()) throw std::out_of_range("completion touches a run out of range");
    Entry& e = rows[idx][setting];
    if (e.has_value()) {
      std::ostringstream msg;
      msg << "completion would overwrite measured cell (run " << idx << ", " << to_cstr(setting)
          << ")";
      throw ValidationError(msg.str());
    }
    e = outcome;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!complete_row(rows[i])) {
      std::ostringstream msg;
      msg << "completion misses cells in run " << i;
      throw ValidationError(msg.str());
    }
  }
  return Table(std::move(rows), TableKind::complete);
}

std::size_t Table::known_count(Setting c, Outcome j) const {
  std::size_t n = 0;
  for (const Run& r : runs_)
    if (r[c] == j) ++n;
  return n;
}

std::size_t Table::unknown_count(Setting c) const {
  std::size_t n = 0;
  for (const Run& r : runs_)
    if (!r[c].has_value()) ++n;
  return n;
}

Rational Table::frequency(Setting c, Outcome j) const {
  return Rational(known_count(c, j), runs_.size());
}

Rational Table::unknown_fraction(Setting c) const {
  return Rational(unknown_count(c), runs_.size());
}

Rational Table::joint_frequency(Setting c, Outcome j, Setting c_prime, Outcome k) const {
  require_opposite_sides(c, c_prime);
  std::size_t n = 0;
  for (const Run& r : runs_)
    if (r[c] == j && r[c_prime] == k) ++n;
  return Rational(n, runs_.size());
}

Rational Table::average(Setting c) const {
  const auto plus = static_cast<long long>(known_count(c, Outcome::plus));
  const auto minus = static_cast<long long>(known_count(c, Outcome::minus));
  return Rational(plus - minus, static_cast<long long>(runs_.size()));
}

Rational Table::correlation(Setting c, Setting c_prime) const {
  require_opposite_sides(c, c_prime);
  long long signed_count = 0;
  for (const Run& r : runs_) {
    const Entry& x = r[c];
    const Entry& y = r[c_prime];
    if (x.has_value() && y.has_value()) signed_count += value(*x) * value(*y);
  }
  return Rational(signed_count, static_cast<long long>(runs_.size()));
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

constexpr const char* csv_header = "run,setting_left,outcome_left,setting_right,outcome_right";

}  // namespace

Table read_table_csv(std::istream& in) {
  std::string line;
  bool header_seen = false;
  std::vector<Run> runs;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (split_csv_line(line) != split_csv_line(csv_header))
        throw ValidationError("bad CSV header (want '" + std::string(csv_header) + "')");
      header_seen = true;
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != 5) {
      std::ostringstream msg;
      msg << "line " << lineno << ": expected 5 fields, got " << fields.size();
      throw ValidationError(msg.str());
    }
    Run r;
    const Setting left = parse_setting(fields[1]);
    const Setting right = parse_setting(fields[3]);
    if (side(left) != Side::left || side(right) != Side::right)
      throw ValidationError("line " + std::to_string(lineno) + ": settings on wrong sides");
    r[left] = parse_outcome(fields[2]);
    r[right] = parse_outcome(fields[4]);
    runs.push_back(r);
  }
  if (!header_seen) throw ValidationError("empty CSV input");
  return Table::from_rows(std::move(runs));
}

void write_table_csv(const Table& t, std::ostream& out, const std::vector<std::string>& metadata) {
  if (t.kind() != TableKind::experimental)
    throw ValidationError("the CSV schema only holds experimental tables");
  for (const std::string& m : metadata) out << "# " << m << "\n";
  out << csv_header << "\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Run& r = t.run(i);
    Setting left = Setting::a;
    Setting right = Setting::b;
    for (Setting c : left_settings)
      if (r[c].has_value()) left = c;
    for (Setting c : right_settings)
      if (r[c].has_value()) right = c;
    out << (i + 1) << ',' << to_cstr(left) << ',' << to_cstr(*r[left]) << ',' << to_cstr(right)
        << ',' << to_cstr(*r[right]) << "\n";
  }
}

}  // namespace eprb
