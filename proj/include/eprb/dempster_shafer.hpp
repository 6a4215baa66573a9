#pragma once

#include "eprb/table.hpp"

namespace eprb {

/// Value set assigned to one cell by a single-context multi-valued map:
/// the singleton {j} where the cell is measured, {+1,-1} where it is not.
struct FocalSet {
  bool plus = false;
  bool minus = false;

  static FocalSet known(Outcome j);
  static FocalSet unknown() { return {true, true}; }

  bool contains(Outcome j) const { return j == Outcome::plus ? plus : minus; }
  bool singleton() const { return plus != minus; }
  bool full() const { return plus && minus; }
  bool operator==(const FocalSet&) const = default;
};

/// Joint-context focal set: subset of {+1,-1} x {+1,-1}, always the
/// cartesian product of the two per-side focal sets.
struct JointFocalSet {
  std::array<std::array<bool, 2>, 2> member{};  // [oidx(j)][oidx(k)]

  static JointFocalSet product(FocalSet left, FocalSet right);

  bool contains(Outcome j, Outcome k) const { return member[oidx(j)][oidx(k)]; }
  std::size_t count() const;
  bool operator==(const JointFocalSet&) const = default;
};

/// Lower/upper probability pair induced by a multi-valued map. The gap is
/// Dempster's "don't know" mass.
struct ProbabilityInterval {
  Rational lower;
  Rational upper;

  Rational dont_know() const { return upper - lower; }
  bool contains(const Rational& p) const { return lower <= p && p <= upper; }
};

FocalSet gamma_single(const Table& t, Setting c, std::size_t run);
JointFocalSet gamma_joint(const Table& t, Setting c, Setting c_prime, std::size_t run);

ProbabilityInterval lower_upper_single(const Table& t, Setting c, Outcome j);
ProbabilityInterval lower_upper_joint(const Table& t, Setting c, Outcome j, Setting c_prime,
                                      Outcome k);

/// Unknown-cell mass of column c. Equals upper - lower for every outcome.
Rational dont_know(const Table& t, Setting c);

/// Statistics normalised over a single context's domain of certainty
/// (the runs where c was actually measured).
struct SingleContextStats {
  Setting context;
  std::array<Rational, 2> prob;  // [oidx(j)]
  Rational average;

  const Rational& p(Outcome j) const { return prob[oidx(j)]; }
};

/// Joint-context statistics normalised over the runs where both settings
/// were measured.
struct JointContextStats {
  Setting left;
  Setting right;
  std::array<std::array<Rational, 2>, 2> prob;  // [oidx(j)][oidx(k)]
  Rational correlation;

  const Rational& p(Outcome j, Outcome k) const { return prob[oidx(j)][oidx(k)]; }
};

SingleContextStats context_stats_single(const Table& t, Setting c);
JointContextStats context_stats_joint(const Table& t, Setting c, Setting c_prime);

}  // namespace eprb
