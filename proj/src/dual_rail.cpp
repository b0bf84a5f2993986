#include "monoflat/dual_rail.hpp"

#include <bit>

#include "monoflat/simulate.hpp"

namespace monoflat {

RailPair rail_names(std::string_view wire) {
  std::string base(wire);
  base += kRailSeparator;
  return RailPair{base + "0", base + "1"};
}

Bits flatten_bits(const Bits& target) {
  Bits out;
  out.reserve(2 * target.size());
  for (auto b : target) {
    out.push_back(b ? 0 : 1);
    out.push_back(b ? 1 : 0);
  }
  return out;
}

Bits unflatten_bits(const Bits& flattened) {
  if (flattened.size() % 2 != 0) {
    throw RailError(flattened.size() - 1, "flattened string has odd length " +
                                              std::to_string(flattened.size()));
  }
  Bits out;
  out.reserve(flattened.size() / 2);
  for (std::size_t i = 0; i < flattened.size(); i += 2) {
    const bool zero = flattened[i] != 0;
    const bool one = flattened[i + 1] != 0;
    if (zero == one) {
      throw RailError(i, "rail exclusivity violated: pair (" + std::string(zero ? "1" : "0") + "," +
                             (one ? "1" : "0") + ") at position " + std::to_string(i));
    }
    out.push_back(one ? 1 : 0);
  }
  return out;
}

bool is_valid_flattened(const Bits& flattened) {
  if (flattened.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < flattened.size(); i += 2) {
    if ((flattened[i] != 0) == (flattened[i + 1] != 0)) return false;
  }
  return true;
}

Bits parse_bits(std::string_view text) {
  Bits bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("not a bit at position " + std::to_string(i) + ": '" +
                                  std::string(1, ch) + "'");
    }
    bits.push_back(ch == '1' ? 1 : 0);
  }
  return bits;
}

std::string to_string(const Bits& bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

Circuit build_eq_classifier(std::size_t n) {
  if (n == 0) throw std::invalid_argument("eq classifier needs at least one bit position");

  CircuitBuilder b;
  if (n == 1) {
    const GateId x0 = b.add_input("x0");
    const GateId x1 = b.add_input("x1");
    const GateId y0 = b.add_input("y0");
    const GateId y1 = b.add_input("y1");
    const GateId a = b.add_and("a", x0, y0);
    const GateId c = b.add_and("b", x1, y1);
    b.add_output(b.add_or("e", a, c));
    return std::move(b).build();
  }

  std::vector<RailPair> xs, ys;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(rail_names("x" + std::to_string(i)));
  for (std::size_t i = 0; i < n; ++i) ys.push_back(rail_names("y" + std::to_string(i)));
  for (const auto& r : xs) {
    b.add_input(r.zero_rail);
    b.add_input(r.one_rail);
  }
  for (const auto& r : ys) {
    b.add_input(r.zero_rail);
    b.add_input(r.one_rail);
  }

  std::optional<GateId> all_equal;
  for (std::size_t i = 0; i < n; ++i) {
    const auto idx = std::to_string(i);
    const GateId a = b.add_and("a" + idx, b.id(xs[i].zero_rail), b.id(ys[i].zero_rail));
    const GateId c = b.add_and("b" + idx, b.id(xs[i].one_rail), b.id(ys[i].one_rail));
    const GateId e = b.add_or("e" + idx, a, c);
    all_equal = all_equal ? b.add_and("eq" + idx, *all_equal, e) : e;
  }
  b.add_output(*all_equal);
  return std::move(b).build();
}

std::vector<RailPair> rail_map(const Circuit& source) {
  const auto gates = source.gates();
  std::vector<RailPair> rails(gates.size());
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (g.kind == GateKind::Not) {
      rails[i] = RailPair{rails[g.a].one_rail, rails[g.a].zero_rail};
    } else {
      rails[i] = rail_names(g.name);
    }
  }
  return rails;
}

Circuit dual_rail_transform(const Circuit& source) {
  const auto gates = source.gates();
  for (const Gate& g : gates) {
    if (g.name.find(kRailSeparator) != std::string::npos) {
      throw CircuitError("source wire '" + g.name + "' uses the reserved separator \"__\"");
    }
  }

  CircuitBuilder b;
  b.reserve(2 * gates.size());
  // Rail gate ids per source gate: {zero, one}.
  std::vector<std::pair<GateId, GateId>> rail(gates.size());
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    const RailPair names = rail_names(g.name);
    switch (g.kind) {
      case GateKind::Input: {
        const GateId z = b.add_input(names.zero_rail);
        const GateId o = b.add_input(names.one_rail);
        rail[i] = {z, o};
        break;
      }
      case GateKind::Const: {
        const GateId z = b.add_const(names.zero_rail, !g.value);
        const GateId o = b.add_const(names.one_rail, g.value);
        rail[i] = {z, o};
        break;
      }
      case GateKind::Not:
        rail[i] = {rail[g.a].second, rail[g.a].first};
        break;
      case GateKind::And: {
        const GateId z = b.add_or(names.zero_rail, rail[g.a].first, rail[g.b].first);
        const GateId o = b.add_and(names.one_rail, rail[g.a].second, rail[g.b].second);
        rail[i] = {z, o};
        break;
      }
      case GateKind::Or: {
        const GateId z = b.add_and(names.zero_rail, rail[g.a].first, rail[g.b].first);
        const GateId o = b.add_or(names.one_rail, rail[g.a].second, rail[g.b].second);
        rail[i] = {z, o};
        break;
      }
    }
  }
  for (GateId o : source.outputs()) b.add_output(rail[o].second);
  return std::move(b).build();
}

RailReport validate_rail_complement(const Circuit& source, const Circuit& monotone) {
  const std::size_t n = source.input_count();
  if (n > 20) throw std::invalid_argument("rail validation is limited to 20 source inputs");
  if (monotone.input_count() != 2 * n) {
    throw std::invalid_argument("monotone circuit must have twice the source input count");
  }

  const auto names = rail_map(source);
  std::vector<std::pair<GateId, GateId>> rails;
  rails.reserve(names.size());
  for (const auto& r : names) {
    auto z = monotone.find(r.zero_rail);
    auto o = monotone.find(r.one_rail);
    if (!z || !o) throw CircuitError("rail '" + (z ? r.one_rail : r.zero_rail) + "' not found");
    rails.emplace_back(*z, *o);
  }

  RailReport report;
  std::vector<std::uint64_t> words;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t base = 0; base < total; base += 64) {
    const auto inputs = flatten_words(enumeration_words(base, n));
    simulate_words(monotone, inputs, words);
    const std::uint64_t mask = lane_mask(base, n);
    report.assignments_checked += static_cast<std::size_t>(std::popcount(mask));

    int best_lane = 64;
    std::size_t best_wire = 0;
    for (std::size_t w = 0; w < rails.size(); ++w) {
      const std::uint64_t bad = ~(words[rails[w].first] ^ words[rails[w].second]) & mask;
      if (bad == 0) continue;
      const int lane = std::countr_zero(bad);
      if (lane < best_lane) {
        best_lane = lane;
        best_wire = w;
      }
    }
    if (best_lane < 64) {
      report.ok = false;
      report.wire = source.gate(static_cast<GateId>(best_wire)).name;
      report.witness = assignment_from_index(base + static_cast<unsigned>(best_lane), n);
      report.zero_value = (words[rails[best_wire].first] >> best_lane) & 1U;
      report.one_value = (words[rails[best_wire].second] >> best_lane) & 1U;
      return report;
    }
  }
  return report;
}

}  // namespace monoflat
