#include "monoflat/netlist.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace monoflat {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

std::size_t expected_tokens(std::string_view kw) {
  if (kw == "input" || kw == "output") return 2;
  if (kw == "const" || kw == "not") return 3;
  if (kw == "and" || kw == "or") return 4;
  return 0;
}

}  // namespace

Circuit parse_netlist(std::string_view text) {
  CircuitBuilder builder;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    const std::string_view kw = tokens[0];
    const std::size_t want = expected_tokens(kw);
    if (want == 0) throw ParseError(line_no, "unknown keyword '" + std::string(kw) + "'");
    if (tokens.size() != want) {
      throw ParseError(line_no, "arity mismatch for '" + std::string(kw) + "': expected " +
                                    std::to_string(want - 1) + " operand(s), got " +
                                    std::to_string(tokens.size() - 1));
    }
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      if (kw == "const" && i == 2) continue;
      if (!is_identifier(tokens[i])) {
        throw ParseError(line_no, "invalid identifier '" + std::string(tokens[i]) + "'");
      }
    }

    try {
      std::string name(tokens[1]);
      if (kw == "input") {
        builder.add_input(std::move(name));
      } else if (kw == "output") {
        builder.add_output(builder.id(name));
      } else if (kw == "const") {
        if (tokens[2] != "0" && tokens[2] != "1") {
          throw ParseError(line_no, "const value must be 0 or 1, got '" + std::string(tokens[2]) + "'");
        }
        builder.add_const(std::move(name), tokens[2] == "1");
      } else if (kw == "not") {
        const GateId a = builder.id(std::string(tokens[2]));
        builder.add_not(std::move(name), a);
      } else {
        const GateId a = builder.id(std::string(tokens[2]));
        const GateId b = builder.id(std::string(tokens[3]));
        if (kw == "and") {
          builder.add_and(std::move(name), a, b);
        } else {
          builder.add_or(std::move(name), a, b);
        }
      }
    } catch (const CircuitError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return std::move(builder).build();
}

Circuit read_netlist_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_netlist(buf.str());
}

std::string emit_netlist(const Circuit& c) {
  std::string out;
  const auto gates = c.gates();
  for (const Gate& g : gates) {
    out += keyword(g.kind);
    out += ' ';
    out += g.name;
    switch (g.kind) {
      case GateKind::Const:
        out += g.value ? " 1" : " 0";
        break;
      case GateKind::Not:
        out += ' ';
        out += gates[g.a].name;
        break;
      case GateKind::And:
      case GateKind::Or:
        out += ' ';
        out += gates[g.a].name;
        out += ' ';
        out += gates[g.b].name;
        break;
      case GateKind::Input:
        break;
    }
    out += '\n';
  }
  for (GateId o : c.outputs()) {
    out += "output ";
    out += gates[o].name;
    out += '\n';
  }
  return out;
}

std::string emit_dot(const Circuit& c) {
  std::vector<bool> is_output(c.size(), false);
  for (GateId o : c.outputs()) is_output[o] = true;

  std::ostringstream out;
  out << "digraph circuit {\n  rankdir=LR;\n";
  const auto gates = c.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    out << "  g" << i << " [label=\"" << g.name << "\\n";
    if (g.kind == GateKind::Const) {
      out << (g.value ? "1" : "0");
    } else {
      out << keyword(g.kind);
    }
    out << "\"";
    if (g.kind == GateKind::Input) out << ", shape=box";
    if (is_output[i]) out << ", peripheries=2";
    out << "];\n";
  }
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (g.arity() >= 1) out << "  g" << g.a << " -> g" << i << ";\n";
    if (g.arity() == 2) out << "  g" << g.b << " -> g" << i << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace monoflat
