#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "monoflat/circuit.hpp"

namespace monoflat {

using StateId = std::uint32_t;
using SymbolId = std::uint32_t;

enum class Move : std::uint8_t { Left, Right };

struct Transition {
  StateId next = 0;
  SymbolId write = 0;
  Move move = Move::Right;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Deterministic single-tape machine over a left-bounded tape. The alphabet
/// always contains `0`, `1` and the blank `_`; the transition table is total
/// on non-halting states and empty on accept/reject.
class TuringMachine {
 public:
  TuringMachine(std::vector<std::string> states, std::vector<std::string> alphabet, StateId start,
                StateId accept, StateId reject,
                std::vector<std::optional<Transition>> delta);

  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  std::size_t state_count() const { return states_.size(); }
  std::size_t symbol_count() const { return alphabet_.size(); }

  StateId start() const { return start_; }
  StateId accept() const { return accept_; }
  StateId reject() const { return reject_; }
  bool is_halting(StateId q) const { return q == accept_ || q == reject_; }

  SymbolId blank() const { return blank_; }
  SymbolId zero() const { return zero_; }
  SymbolId one() const { return one_; }
  SymbolId bit_symbol(std::uint8_t bit) const { return bit ? one_ : zero_; }

  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<SymbolId> find_symbol(std::string_view name) const;

  /// Transition from a non-halting state; throws std::logic_error otherwise.
  const Transition& delta(StateId q, SymbolId s) const;

 private:
  std::vector<std::string> states_;
  std::vector<std::string> alphabet_;
  StateId start_, accept_, reject_;
  SymbolId blank_ = 0, zero_ = 0, one_ = 0;
  std::vector<std::optional<Transition>> delta_;  // [q * |alphabet| + s]
};

class TmError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Line-oriented description:
//   states: q0 qa qr
//   alphabet: 0 1 _
//   start: q0
//   accept: qa
//   reject: qr
//   delta: q0 0 -> q0 0 R
// `#` starts a comment. Throws ParseError (see netlist.hpp).
TuringMachine parse_tm(std::string_view text);
TuringMachine read_tm_file(const std::string& path);

struct Configuration {
  std::vector<SymbolId> tape;  // cells past the end read as blank
  std::size_t head = 0;
  StateId state = 0;
  std::size_t steps_taken = 0;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

Configuration initial_configuration(const TuringMachine& tm, const Bits& input);

/// One transition. An L move at cell 0 leaves the head at cell 0. Throws
/// TmError when the configuration is already halted.
Configuration step(const TuringMachine& tm, const Configuration& c);

enum class Verdict : std::uint8_t { Accept, Reject, Timeout };

std::string_view to_string(Verdict v);

struct RunResult {
  Verdict verdict = Verdict::Timeout;
  Configuration final;
};

/// Steps until accept/reject or until `max_steps` transitions were taken.
RunResult run(const TuringMachine& tm, const Bits& input, std::size_t max_steps);

/// Renders `width` cells of a configuration: plain cells as their symbol,
/// the head cell as `(state,symbol)`.
std::vector<std::string> render_cells(const TuringMachine& tm, const Configuration& c,
                                      std::size_t width);

}  // namespace monoflat
