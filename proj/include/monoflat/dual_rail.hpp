#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "monoflat/circuit.hpp"

namespace monoflat {

/// Reserved separator between a wire name and its rail index.
inline constexpr std::string_view kRailSeparator = "__";

/// The two wires carrying one flattened bit: complement rail first.
struct RailPair {
  std::string zero_rail;  // hot when the original bit is 0
  std::string one_rail;   // hot when the original bit is 1

  friend bool operator==(const RailPair&, const RailPair&) = default;
};

/// `x` -> {`x__0`, `x__1`}.
RailPair rail_names(std::string_view wire);

class RailError : public std::invalid_argument {
 public:
  RailError(std::size_t position, const std::string& what)
      : std::invalid_argument(what), position_(position) {}

  /// Bit offset of the offending pair (or of the dangling bit).
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// 0 -> 10, 1 -> 01, order preserved.
Bits flatten_bits(const Bits& target);

/// Inverse of flatten_bits. Throws RailError on odd length or on a pair that
/// is (0,0) or (1,1).
Bits unflatten_bits(const Bits& flattened);

/// True iff every consecutive pair is exactly one-hot.
bool is_valid_flattened(const Bits& flattened);

/// Parses a string of '0'/'1' characters; throws std::invalid_argument on
/// anything else.
Bits parse_bits(std::string_view text);
std::string to_string(const Bits& bits);

/// Monotone equality test over flattened operands. Inputs are flatten(x)
/// followed by flatten(y) for n-bit x and y (4n inputs); the output is 1 iff
/// x == y. For n = 1 this is exactly ((x0 & y0) | (x1 & y1)).
Circuit build_eq_classifier(std::size_t n);

/// NOT-free simulation of `source` over rail-pair inputs. Each wire w gets
/// rails (w__0, w__1); NOT swaps rails, AND/OR are dualized on the zero rail,
/// CONST k becomes the pair (!k, k), and every output o maps to its one rail.
/// Throws CircuitError when a source name already contains "__".
Circuit dual_rail_transform(const Circuit& source);

/// Names of the rail gates that carry each source gate inside
/// dual_rail_transform(source), indexed by source GateId.
std::vector<RailPair> rail_map(const Circuit& source);

struct RailReport {
  bool ok = true;
  std::string wire;        // source wire whose rails disagree
  Bits witness;            // original (unflattened) assignment
  std::uint8_t zero_value = 0;
  std::uint8_t one_value = 0;
  std::size_t assignments_checked = 0;
};

/// Exhaustively checks rail complementarity (w__0 == !w__1) for every source
/// wire on every valid flattened assignment. `monotone` is normally
/// dual_rail_transform(source); source must have at most 20 inputs.
RailReport validate_rail_complement(const Circuit& source, const Circuit& monotone);

}  // namespace monoflat
