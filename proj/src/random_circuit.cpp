#include "monoflat/random_circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace monoflat {
namespace {

// rng() % bound keeps sequences identical across standard libraries.
std::size_t pick(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

}  // namespace

Circuit random_circuit(std::mt19937_64& rng, const RandomCircuitOptions& options) {
  if (options.min_inputs < 1 || options.min_inputs > options.max_inputs ||
      options.max_gates <= options.max_inputs || options.max_outputs < 1) {
    throw std::invalid_argument("inconsistent random circuit options");
  }
  CircuitBuilder b;
  const std::size_t inputs =
      options.min_inputs + pick(rng, options.max_inputs - options.min_inputs + 1);
  for (std::size_t i = 0; i < inputs; ++i) b.add_input("x" + std::to_string(i));

  const std::size_t internal = 1 + pick(rng, options.max_gates - inputs);
  auto operand = [&]() -> GateId {
    const std::size_t defined = b.size();
    if (defined > 8 && pick(rng, 2) == 0) return static_cast<GateId>(defined - 1 - pick(rng, 8));
    return static_cast<GateId>(pick(rng, defined));
  };
  for (std::size_t i = 0; i < internal; ++i) {
    std::string name = "g" + std::to_string(i);
    const std::size_t roll = pick(rng, 100);
    if (options.allow_const && roll < 4) {
      b.add_const(std::move(name), pick(rng, 2) == 1);
    } else if (options.allow_not && roll < 30) {
      b.add_not(std::move(name), operand());
    } else if (roll < 65) {
      const GateId a = operand();
      b.add_and(std::move(name), a, operand());
    } else {
      const GateId a = operand();
      b.add_or(std::move(name), a, operand());
    }
  }

  const std::size_t outputs = 1 + pick(rng, options.max_outputs);
  b.add_output(static_cast<GateId>(b.size() - 1));
  for (std::size_t o = 1; o < outputs; ++o) b.add_output(static_cast<GateId>(pick(rng, b.size())));
  return std::move(b).build();
}

}  // namespace monoflat
