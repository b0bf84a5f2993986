#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monoflat/circuit.hpp"
#include "monoflat/tableau.hpp"

namespace monoflat {

/// Largest input count the exhaustive checkers accept.
inline constexpr std::size_t kMaxExhaustiveInputs = 20;
inline constexpr std::size_t kMaxMonotoneCheckInputs = 16;

/// Boolean function of `arity` inputs; bits[i] is the value on
/// assignment_from_index(i, arity) (input 0 most significant).
struct TruthTable {
  std::size_t arity = 0;
  Bits bits;

  /// bits[i] as bit i of an integer; the census is ordered by this code.
  std::uint64_t code() const;
  std::string to_string() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

TruthTable truth_table(const Circuit& c);
/// EQ over 2*pairs inputs: x (first `pairs` inputs) equals y (the rest).
TruthTable eq_table(std::size_t pairs);

/// First (u, v) with u <= v differing in one bit and f(u) > f(v); u ascending,
/// then v ascending.
std::optional<std::pair<std::uint64_t, std::uint64_t>> first_monotone_violation(const TruthTable& f);
bool is_monotone(const TruthTable& f);

/// All monotone truth tables of the given arity (0..4), ordered by code().
/// Generated by filtering every table through is_monotone.
std::vector<TruthTable> enumerate_monotone_functions(std::size_t arity);

enum class ReportKind { Equivalence, Monotonicity, OneHot, Rail };

std::string_view to_string(ReportKind kind);

/// A concrete witness for a failed check.
///   EQUIVALENCE: witness = x; expected/observed = outputs of b / m.
///   MONOTONICITY: witness = u,v with u <= v; expected/observed = outputs at u / v.
///   ONE_HOT: witness = x; expected = 1, observed = number of hot entries.
///   RAIL: witness = x; expected = complement of the one rail, observed = zero rail.
struct CounterexampleReport {
  ReportKind kind = ReportKind::Equivalence;
  std::vector<Bits> witness;
  std::string expected;
  std::string observed;
  std::string location;  // offending wire or cell, when there is one

  /// `kind=<K> witness=<bits>[,<bits>] expected=<v> observed=<v>`
  std::string to_line() const;
};

struct EqRefutation {
  std::size_t pairs = 1;
  std::size_t census_size = 0;
  bool eq_in_census = true;
  /// bottom <= middle <= top; middle is the first unequal assignment.
  std::array<Bits, 3> chain;
  std::uint8_t eq_at_middle = 0;
  /// Monotone members with f(bottom) = f(top) = 1, and whether all of them
  /// are forced to f(middle) = 1.
  std::size_t members_equal_at_ends = 0;
  bool chain_forces_middle = false;
  /// EQ's first failure of the monotone filter.
  CounterexampleReport eq_violation;

  bool refuted() const { return !eq_in_census && chain_forces_middle; }
  std::string chain_string() const;
};

/// EQ is not monotone: pairs = 1 (2 inputs) or 2 (4 inputs).
EqRefutation refute_eq_monotone(std::size_t pairs);

enum class EquivMode {
  Raw,        // compare b and m on the same assignment
  Flattened,  // compare b(x) against m(flatten_bits(x))
};

/// Exhaustive equivalence over all 2^n assignments of b (n <= 20). The lowest
/// failing assignment is reported. Throws std::invalid_argument on input or
/// output count mismatch for the mode.
std::optional<CounterexampleReport> exhaustive_equiv(const Circuit& b, const Circuit& m,
                                                     EquivMode mode);

/// u <= v implies c(u) <= c(v), checked on all single-bit raises (n <= 16).
std::optional<CounterexampleReport> check_semantic_monotone(const Circuit& c);

/// Every cell of every row one-hot on every input of the tableau (n <= 20).
std::optional<CounterexampleReport> check_one_hot(const Tableau& tableau);

/// Re-evaluates a report's witness and returns true iff the discrepancy is
/// reproduced. `m` is unused for MONOTONICITY reports.
bool certifies(const CounterexampleReport& report, const Circuit& b, const Circuit& m,
               EquivMode mode = EquivMode::Raw);

/// Same for ONE_HOT reports against the tableau they came from.
bool certifies(const CounterexampleReport& report, const Tableau& tableau);

struct RailReport;
/// RAIL counterexample for a failed validate_rail_complement; nullopt on success.
std::optional<CounterexampleReport> rail_counterexample(const RailReport& report);

struct SizeReport {
  std::size_t source_gates = 0;
  std::size_t target_gates = 0;
  double ratio = 0.0;
  std::size_t not_count_source = 0;
  std::size_t not_count_target = 0;
};

SizeReport size_report(const Circuit& source, const Circuit& target);

/// Serial kernels, kept as the reference the parallel versions are tested
/// against. Same contracts, one assignment at a time.
namespace reference {

std::optional<CounterexampleReport> exhaustive_equiv(const Circuit& b, const Circuit& m,
                                                     EquivMode mode);
std::optional<CounterexampleReport> check_semantic_monotone(const Circuit& c);
std::optional<CounterexampleReport> check_one_hot(const Tableau& tableau);

}  // namespace reference

}  // namespace monoflat
