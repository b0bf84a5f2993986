#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "monoflat/circuit.hpp"

namespace monoflat {

/// Output values of `c` on `assignment`, one per output in order. Throws
/// std::invalid_argument if the assignment length differs from the input count.
Bits evaluate(const Circuit& c, std::span<const std::uint8_t> assignment);

/// Value of every gate, indexed by GateId.
Bits evaluate_all(const Circuit& c, std::span<const std::uint8_t> assignment);

/// Bit-sliced simulation: lane j of every word is an independent assignment.
/// `input_words[k]` carries input k across the 64 lanes; `gate_words` is
/// resized to c.size().
void simulate_words(const Circuit& c, std::span<const std::uint64_t> input_words,
                    std::vector<std::uint64_t>& gate_words);

/// The assignment with the given index in lexicographic order: input 0 is the
/// most significant bit.
Bits assignment_from_index(std::uint64_t index, std::size_t n);
std::uint64_t index_from_assignment(std::span<const std::uint8_t> bits);

/// Input words for lanes base..base+63 of the lexicographic enumeration of
/// {0,1}^n. Lanes past 2^n repeat valid assignments; mask with lane_mask().
std::vector<std::uint64_t> enumeration_words(std::uint64_t base, std::size_t n);

/// Lanes of the block starting at `base` that lie inside {0,1}^n.
std::uint64_t lane_mask(std::uint64_t base, std::size_t n);

/// Dual-rail words for the same block: for original input k the pair
/// (~x_k, x_k), matching flatten_bits on every lane.
std::vector<std::uint64_t> flatten_words(std::span<const std::uint64_t> words);

}  // namespace monoflat
