#include "monoflat/circuit.hpp"

#include <algorithm>
#include <limits>

namespace monoflat {

std::string_view keyword(GateKind kind) {
  switch (kind) {
    case GateKind::Input:
      return "input";
    case GateKind::Const:
      return "const";
    case GateKind::And:
      return "and";
    case GateKind::Or:
      return "or";
    case GateKind::Not:
      return "not";
  }
  return "?";
}

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch == '_';
  };
  auto digit = [](char ch) { return ch >= '0' && ch <= '9'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(), [&](char ch) { return alpha(ch) || digit(ch); });
}

std::optional<GateId> Circuit::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void CircuitBuilder::reserve(std::size_t gates) {
  circuit_.gates_.reserve(gates);
  circuit_.index_.reserve(gates);
}

void CircuitBuilder::check_operand(GateId id) const {
  if (id >= circuit_.gates_.size()) {
    throw CircuitError("operand id " + std::to_string(id) + " is not a defined gate");
  }
}

GateId CircuitBuilder::append(Gate gate) {
  if (!is_identifier(gate.name)) {
    throw CircuitError("invalid identifier '" + gate.name + "'");
  }
  if (circuit_.gates_.size() >= std::numeric_limits<GateId>::max()) {
    throw CircuitError("too many gates");
  }
  const auto id = static_cast<GateId>(circuit_.gates_.size());
  auto [it, inserted] = circuit_.index_.emplace(gate.name, id);
  if (!inserted) {
    throw CircuitError("duplicate gate name '" + gate.name + "'");
  }
  if (gate.kind == GateKind::Input) circuit_.inputs_.push_back(id);
  circuit_.gates_.push_back(std::move(gate));
  return id;
}

GateId CircuitBuilder::add_input(std::string name) {
  return append(Gate{std::move(name), GateKind::Input});
}

GateId CircuitBuilder::add_const(std::string name, bool value) {
  Gate g{std::move(name), GateKind::Const};
  g.value = value;
  return append(std::move(g));
}

GateId CircuitBuilder::add_and(std::string name, GateId a, GateId b) {
  check_operand(a);
  check_operand(b);
  return append(Gate{std::move(name), GateKind::And, a, b});
}

GateId CircuitBuilder::add_or(std::string name, GateId a, GateId b) {
  check_operand(a);
  check_operand(b);
  return append(Gate{std::move(name), GateKind::Or, a, b});
}

GateId CircuitBuilder::add_not(std::string name, GateId a) {
  check_operand(a);
  return append(Gate{std::move(name), GateKind::Not, a});
}

void CircuitBuilder::add_output(GateId id) {
  check_operand(id);
  circuit_.outputs_.push_back(id);
}

GateId CircuitBuilder::id(const std::string& name) const {
  auto found = circuit_.find(name);
  if (!found) throw CircuitError("undefined reference '" + name + "'");
  return *found;
}

Circuit CircuitBuilder::build() && { return std::move(circuit_); }

bool is_structurally_monotone(const Circuit& c) {
  return std::none_of(c.gates().begin(), c.gates().end(),
                      [](const Gate& g) { return g.kind == GateKind::Not; });
}

std::vector<std::size_t> gate_depths(const Circuit& c) {
  std::vector<std::size_t> depth(c.size(), 0);
  const auto gates = c.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    switch (g.kind) {
      case GateKind::And:
      case GateKind::Or:
        depth[i] = 1 + std::max(depth[g.a], depth[g.b]);
        break;
      case GateKind::Not:
        depth[i] = 1 + depth[g.a];
        break;
      default:
        break;
    }
  }
  return depth;
}

CircuitStats stats(const Circuit& c) {
  CircuitStats s;
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::Input:
        ++s.input_gates;
        break;
      case GateKind::Const:
        ++s.const_gates;
        break;
      case GateKind::And:
        ++s.and_gates;
        break;
      case GateKind::Or:
        ++s.or_gates;
        break;
      case GateKind::Not:
        ++s.not_gates;
        break;
    }
  }
  s.input_count = c.input_count();
  s.output_count = c.output_count();

  const auto depth = gate_depths(c);
  if (c.output_count() > 0) {
    for (GateId o : c.outputs()) s.depth = std::max(s.depth, depth[o]);
  } else if (!depth.empty()) {
    s.depth = *std::max_element(depth.begin(), depth.end());
  }
  return s;
}

}  // namespace monoflat
