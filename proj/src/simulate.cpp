#include "monoflat/simulate.hpp"

#include <string>

namespace monoflat {
namespace {

void check_length(const Circuit& c, std::size_t got) {
  if (got != c.input_count()) {
    throw std::invalid_argument("assignment has " + std::to_string(got) + " bits, circuit has " +
                                std::to_string(c.input_count()) + " inputs");
  }
}

}  // namespace

Bits evaluate_all(const Circuit& c, std::span<const std::uint8_t> assignment) {
  check_length(c, assignment.size());
  Bits value(c.size(), 0);
  const auto gates = c.gates();
  std::size_t next_input = 0;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    switch (g.kind) {
      case GateKind::Input:
        value[i] = assignment[next_input++] ? 1 : 0;
        break;
      case GateKind::Const:
        value[i] = g.value ? 1 : 0;
        break;
      case GateKind::And:
        value[i] = value[g.a] & value[g.b];
        break;
      case GateKind::Or:
        value[i] = value[g.a] | value[g.b];
        break;
      case GateKind::Not:
        value[i] = value[g.a] ^ 1;
        break;
    }
  }
  return value;
}

Bits evaluate(const Circuit& c, std::span<const std::uint8_t> assignment) {
  const Bits value = evaluate_all(c, assignment);
  Bits out;
  out.reserve(c.output_count());
  for (GateId o : c.outputs()) out.push_back(value[o]);
  return out;
}

void simulate_words(const Circuit& c, std::span<const std::uint64_t> input_words,
                    std::vector<std::uint64_t>& gate_words) {
  check_length(c, input_words.size());
  gate_words.resize(c.size());
  const auto gates = c.gates();
  std::size_t next_input = 0;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    switch (g.kind) {
      case GateKind::Input:
        gate_words[i] = input_words[next_input++];
        break;
      case GateKind::Const:
        gate_words[i] = g.value ? ~std::uint64_t{0} : 0;
        break;
      case GateKind::And:
        gate_words[i] = gate_words[g.a] & gate_words[g.b];
        break;
      case GateKind::Or:
        gate_words[i] = gate_words[g.a] | gate_words[g.b];
        break;
      case GateKind::Not:
        gate_words[i] = ~gate_words[g.a];
        break;
    }
  }
}

Bits assignment_from_index(std::uint64_t index, std::size_t n) {
  Bits bits(n);
  for (std::size_t k = 0; k < n; ++k) bits[k] = (index >> (n - 1 - k)) & 1U;
  return bits;
}

std::uint64_t index_from_assignment(std::span<const std::uint8_t> bits) {
  std::uint64_t index = 0;
  for (auto b : bits) index = (index << 1) | (b ? 1U : 0U);
  return index;
}

std::vector<std::uint64_t> enumeration_words(std::uint64_t base, std::size_t n) {
  std::vector<std::uint64_t> words(n, 0);
  const std::uint64_t limit = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (unsigned lane = 0; lane < 64; ++lane) {
    const std::uint64_t index = (base + lane) & limit;
    for (std::size_t k = 0; k < n; ++k) {
      if ((index >> (n - 1 - k)) & 1U) words[k] |= std::uint64_t{1} << lane;
    }
  }
  return words;
}

std::uint64_t lane_mask(std::uint64_t base, std::size_t n) {
  const std::uint64_t total = std::uint64_t{1} << n;
  if (base >= total) return 0;
  const std::uint64_t lanes = total - base;
  return lanes >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << lanes) - 1;
}

std::vector<std::uint64_t> flatten_words(std::span<const std::uint64_t> words) {
  std::vector<std::uint64_t> rails;
  rails.reserve(2 * words.size());
  for (std::uint64_t w : words) {
    rails.push_back(~w);
    rails.push_back(w);
  }
  return rails;
}

}  // namespace monoflat
