#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "monoflat/circuit.hpp"

namespace monoflat {

struct RandomCircuitOptions {
  std::size_t min_inputs = 1;
  std::size_t max_inputs = 10;
  /// Upper bound on the total gate count, inputs included.
  std::size_t max_gates = 60;
  std::size_t max_outputs = 3;
  bool allow_not = true;
  bool allow_const = true;
};

/// Seeded random DAG over INPUT/CONST/AND/OR/NOT. Operands are drawn from
/// recent gates half of the time so NOT gates land at varied depths.
Circuit random_circuit(std::mt19937_64& rng, const RandomCircuitOptions& options = {});

}  // namespace monoflat
