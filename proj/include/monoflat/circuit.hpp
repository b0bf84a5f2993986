#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace monoflat {

/// A bit-string, one 0/1 value per byte. Used for assignments, flattened
/// assignments and circuit outputs alike.
using Bits = std::vector<std::uint8_t>;

using GateId = std::uint32_t;

enum class GateKind : std::uint8_t { Input, Const, And, Or, Not };

std::string_view keyword(GateKind kind);

struct Gate {
  std::string name;
  GateKind kind = GateKind::Input;
  GateId a = 0;
  GateId b = 0;
  bool value = false;  // CONST only

  std::size_t arity() const {
    switch (kind) {
      case GateKind::And:
      case GateKind::Or:
        return 2;
      case GateKind::Not:
        return 1;
      default:
        return 0;
    }
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

class CircuitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_identifier(std::string_view name);

/// Immutable gate DAG. The gate list is a topological order: every operand
/// id is smaller than the id of the gate that uses it.
class Circuit {
 public:
  Circuit() = default;

  std::span<const Gate> gates() const { return gates_; }
  const Gate& gate(GateId id) const { return gates_.at(id); }
  std::size_t size() const { return gates_.size(); }

  std::span<const GateId> inputs() const { return inputs_; }
  std::span<const GateId> outputs() const { return outputs_; }
  std::size_t input_count() const { return inputs_.size(); }
  std::size_t output_count() const { return outputs_.size(); }

  std::optional<GateId> find(const std::string& name) const;

  /// Structural equality: same gate list, inputs and outputs.
  friend bool operator==(const Circuit& lhs, const Circuit& rhs) {
    return lhs.gates_ == rhs.gates_ && lhs.inputs_ == rhs.inputs_ &&
           lhs.outputs_ == rhs.outputs_;
  }

 private:
  friend class CircuitBuilder;

  std::vector<Gate> gates_;
  std::vector<GateId> inputs_;
  std::vector<GateId> outputs_;
  std::unordered_map<std::string, GateId> index_;
};

/// Appends gates in definition order and checks every invariant as it goes,
/// so a built Circuit is valid by construction.
class CircuitBuilder {
 public:
  CircuitBuilder() = default;

  GateId add_input(std::string name);
  GateId add_const(std::string name, bool value);
  GateId add_and(std::string name, GateId a, GateId b);
  GateId add_or(std::string name, GateId a, GateId b);
  GateId add_not(std::string name, GateId a);
  void add_output(GateId id);

  /// Looks up a defined gate; throws CircuitError on an undefined name.
  GateId id(const std::string& name) const;
  std::optional<GateId> find(const std::string& name) const { return circuit_.find(name); }

  std::size_t size() const { return circuit_.gates_.size(); }
  void reserve(std::size_t gates);

  Circuit build() &&;

 private:
  GateId append(Gate gate);
  void check_operand(GateId id) const;

  Circuit circuit_;
};

struct CircuitStats {
  std::size_t input_gates = 0;
  std::size_t const_gates = 0;
  std::size_t and_gates = 0;
  std::size_t or_gates = 0;
  std::size_t not_gates = 0;
  std::size_t depth = 0;
  std::size_t input_count = 0;
  std::size_t output_count = 0;

  std::size_t total() const { return input_gates + const_gates + and_gates + or_gates + not_gates; }
  std::size_t and_or() const { return and_gates + or_gates; }
};

/// True iff the circuit has no NOT gate.
bool is_structurally_monotone(const Circuit& c);

/// Gate counts per kind and depth, the longest gate-edge path ending at an
/// output (or at any gate when the circuit has no outputs).
CircuitStats stats(const Circuit& c);

/// Per-gate depth: 0 for INPUT/CONST, 1 + max operand depth otherwise.
std::vector<std::size_t> gate_depths(const Circuit& c);

}  // namespace monoflat
